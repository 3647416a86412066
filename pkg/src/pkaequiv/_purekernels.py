"""Pure-Python hot kernels for sparse polynomial arithmetic.

A monomial is a tuple of ``(var, exponent)`` pairs sorted ascending by var,
with no zero exponents.  Earlier (smaller) vars rank higher in the monomial
orders.  A term map is a ``dict`` from monomial to a nonzero coefficient.

``_speedups.pyx`` mirrors this module function for function.
"""

from functools import cmp_to_key

GREVLEX = 0
LEX = 1


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:])
    return tuple(out)


def mono_divides(a, b):
    """True when monomial ``a`` divides ``b``."""
    j = 0
    nb = len(b)
    for va, ea in a:
        while j < nb and b[j][0] < va:
            j += 1
        if j == nb or b[j][0] != va or b[j][1] < ea:
            return False
        j += 1
    return True


def mono_quo(b, a):
    """``b / a``; caller guarantees ``a`` divides ``b``."""
    out = []
    i = 0
    na = len(a)
    for vb, eb in b:
        if i < na and a[i][0] == vb:
            e = eb - a[i][1]
            i += 1
            if e:
                out.append((vb, e))
        else:
            out.append((vb, eb))
    return tuple(out)


def mono_lcm(a, b):
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea if ea > eb else eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:])
    return tuple(out)


def mono_coprime(a, b):
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        va = a[i][0]
        vb = b[j][0]
        if va == vb:
            return False
        if va < vb:
            i += 1
        else:
            j += 1
    return True


def mono_degree(a):
    d = 0
    for _, e in a:
        d += e
    return d


def _lex_cmp(a, b):
    na, nb = len(a), len(b)
    i = 0
    while i < na and i < nb:
        va, ea = a[i]
        vb, eb = b[i]
        if va != vb:
            # a carries the higher-ranked var with positive exponent
            return 1 if va < vb else -1
        if ea != eb:
            return 1 if ea > eb else -1
        i += 1
    if na == nb:
        return 0
    return 1 if na > nb else -1


def _grevlex_cmp(a, b):
    da = mono_degree(a)
    db = mono_degree(b)
    if da != db:
        return 1 if da > db else -1
    i = len(a) - 1
    j = len(b) - 1
    while i >= 0 and j >= 0:
        va, ea = a[i]
        vb, eb = b[j]
        if va != vb:
            # the lowest-ranked var present in only one side decides
            return -1 if va > vb else 1
        if ea != eb:
            return 1 if ea < eb else -1
        i -= 1
        j -= 1
    # equal degree and a common suffix means equal monomials
    return 0


def mono_cmp(a, b, order):
    if order == GREVLEX:
        return _grevlex_cmp(a, b)
    return _lex_cmp(a, b)


_KEYS = {GREVLEX: cmp_to_key(_grevlex_cmp), LEX: cmp_to_key(_lex_cmp)}


def sort_monomials(monos, order, reverse=True):
    return sorted(monos, key=_KEYS[order], reverse=reverse)


def leading(terms, order):
    """Greatest monomial of a nonempty term map."""
    cmp = _grevlex_cmp if order == GREVLEX else _lex_cmp
    it = iter(terms)
    best = next(it)
    for m in it:
        if cmp(m, best) > 0:
            best = m
    return best


def poly_add(p, q):
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


def poly_mul(p, q):
    out = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = mono_mul(ma, mb)
            v = out.get(m)
            if v is None:
                out[m] = ca * cb
            else:
                out[m] = v + ca * cb
    return {m: c for m, c in out.items() if c}


def axpy_inplace(p, c, mono, q):
    """``p += c * mono * q`` in place, pruning cancelled terms."""
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


def normal_form(terms, basis, order):
    """Remainder of ``terms`` under full division by ``basis``.

    ``basis`` is a sequence of ``(lead_monomial, lead_coeff, term_map)``.
    """
    p = dict(terms)
    rem = {}
    cmp = _grevlex_cmp if order == GREVLEX else _lex_cmp
    while p:
        it = iter(p)
        lm = next(it)
        for m in it:
            if cmp(m, lm) > 0:
                lm = m
        lc = p[lm]
        for glm, glc, g in basis:
            if mono_divides(glm, lm):
                axpy_inplace(p, -lc / glc, mono_quo(lm, glm), g)
                break
        else:
            rem[lm] = lc
            del p[lm]
    return rem
