# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same contract as ``_purekernels``."""

from functools import cmp_to_key

DEF _GREVLEX = 0

GREVLEX = 0
LEX = 1


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, na = len(a), nb = len(b)
    cdef tuple pa, pb
    cdef list out
    if na == 0:
        return b
    if nb == 0:
        return a
    out = []
    while i < na and j < nb:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        va = pa[0]
        vb = pb[0]
        if va == vb:
            out.append((va, <long>pa[1] + <long>pb[1]))
            i += 1
            j += 1
        elif va < vb:
            out.append(pa)
            i += 1
        else:
            out.append(pb)
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef bint mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, j = 0, na = len(a), nb = len(b)
    cdef tuple pa, pb
    for i in range(na):
        pa = <tuple>a[i]
        va = pa[0]
        while j < nb and (<tuple>b[j])[0] < va:
            j += 1
        if j == nb:
            return False
        pb = <tuple>b[j]
        if pb[0] != va or <long>pb[1] < <long>pa[1]:
            return False
        j += 1
    return True


cpdef tuple mono_quo(tuple b, tuple a):
    cdef Py_ssize_t i = 0, k, na = len(a), nb = len(b)
    cdef long e
    cdef tuple pa, pb
    cdef list out = []
    for k in range(nb):
        pb = <tuple>b[k]
        if i < na:
            pa = <tuple>a[i]
            if pa[0] == pb[0]:
                e = <long>pb[1] - <long>pa[1]
                i += 1
                if e:
                    out.append((pb[0], e))
                continue
        out.append(pb)
    return tuple(out)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, na = len(a), nb = len(b)
    cdef tuple pa, pb
    cdef list out = []
    while i < na and j < nb:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        va = pa[0]
        vb = pb[0]
        if va == vb:
            out.append(pa if <long>pa[1] >= <long>pb[1] else pb)
            i += 1
            j += 1
        elif va < vb:
            out.append(pa)
            i += 1
        else:
            out.append(pb)
            j += 1
    while i < na:
        out.append(a[i])
        i += 1
    while j < nb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef bint mono_coprime(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, na = len(a), nb = len(b)
    while i < na and j < nb:
        va = (<tuple>a[i])[0]
        vb = (<tuple>b[j])[0]
        if va == vb:
            return False
        if va < vb:
            i += 1
        else:
            j += 1
    return True


cpdef long mono_degree(tuple a):
    cdef long d = 0
    cdef Py_ssize_t i
    for i in range(len(a)):
        d += <long>(<tuple>a[i])[1]
    return d


cdef int _lex_cmp(tuple a, tuple b):
    cdef Py_ssize_t i = 0, na = len(a), nb = len(b)
    cdef tuple pa, pb
    cdef long ea, eb
    while i < na and i < nb:
        pa = <tuple>a[i]
        pb = <tuple>b[i]
        va = pa[0]
        vb = pb[0]
        if va != vb:
            return 1 if va < vb else -1
        ea = pa[1]
        eb = pb[1]
        if ea != eb:
            return 1 if ea > eb else -1
        i += 1
    if na == nb:
        return 0
    return 1 if na > nb else -1


cdef int _grevlex_cmp(tuple a, tuple b):
    cdef long da = mono_degree(a), db = mono_degree(b)
    cdef Py_ssize_t i, j
    cdef tuple pa, pb
    cdef long ea, eb
    if da != db:
        return 1 if da > db else -1
    i = len(a) - 1
    j = len(b) - 1
    while i >= 0 and j >= 0:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        va = pa[0]
        vb = pb[0]
        if va != vb:
            return -1 if va > vb else 1
        ea = pa[1]
        eb = pb[1]
        if ea != eb:
            return 1 if ea < eb else -1
        i -= 1
        j -= 1
    return 0


cdef inline int _cmp(tuple a, tuple b, int order):
    if order == _GREVLEX:
        return _grevlex_cmp(a, b)
    return _lex_cmp(a, b)


cpdef int mono_cmp(tuple a, tuple b, int order):
    return _cmp(a, b, order)


def _py_grevlex(a, b):
    return _grevlex_cmp(a, b)


def _py_lex(a, b):
    return _lex_cmp(a, b)


_KEYS = {GREVLEX: cmp_to_key(_py_grevlex), LEX: cmp_to_key(_py_lex)}


def sort_monomials(monos, order, reverse=True):
    return sorted(monos, key=_KEYS[order], reverse=reverse)


cpdef tuple leading(dict terms, int order):
    cdef tuple best = None
    cdef tuple m
    for m in terms:
        if best is None or _cmp(m, best, order) > 0:
            best = m
    if best is None:
        raise StopIteration
    return best


cpdef dict poly_add(dict p, dict q):
    cdef dict out
    if len(p) < len(q):
        p, q = q, p
    out = dict(p)
    for m, c in q.items():
        v = out.get(m)
        if v is None:
            out[m] = c
        else:
            v = v + c
            if v:
                out[m] = v
            else:
                del out[m]
    return out


cpdef dict poly_mul(dict p, dict q):
    cdef dict out = {}
    cdef tuple ma, mb, m
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = mono_mul(ma, mb)
            v = out.get(m)
            if v is None:
                out[m] = ca * cb
            else:
                out[m] = v + ca * cb
    return {m: c for m, c in out.items() if c}


cpdef axpy_inplace(dict p, c, tuple mono, dict q):
    cdef tuple mq, m
    for mq, cq in q.items():
        m = mono_mul(mono, mq)
        v = p.get(m)
        if v is None:
            p[m] = c * cq
        else:
            v = v + c * cq
            if v:
                p[m] = v
            else:
                del p[m]


cpdef dict normal_form(dict terms, basis, int order):
    cdef dict p = dict(terms)
    cdef dict rem = {}
    cdef tuple lm, m, glm, entry
    cdef list blist = list(basis)
    cdef bint hit
    while p:
        lm = None
        for m in p:
            if lm is None or _cmp(m, lm, order) > 0:
                lm = m
        lc = p[lm]
        hit = False
        for entry in blist:
            glm = <tuple>entry[0]
            if mono_divides(glm, lm):
                axpy_inplace(p, -lc / entry[1], mono_quo(lm, glm), <dict>entry[2])
                hit = True
                break
        if not hit:
            rem[lm] = lc
            del p[lm]
    return rem
