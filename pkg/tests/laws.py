"""Randomized law checks shared by the unit tests and the acceptance suite.

Each ``law_*`` takes a ``random.Random`` and raises ``AssertionError`` on a
violation.  Everything is exact; no tolerances anywhere.
"""

from __future__ import annotations

import random
from fractions import Fraction

from pkaequiv.algebra import (
    EPS_KIND, boundary, eps_at, derivative, is_eps, marginal, shift, state_at,
    unshift, word_key,
)
from pkaequiv.groebner import buchberger
from pkaequiv.poly import (
    GREVLEX, LEX, ONE, Polynomial, ZERO, coeff_sum, grade_by, reassemble, substitute,
)

from corpus import random_automaton

PLAIN_VARS = ("x", "y", "z")


def rand_coeff(rng: random.Random, den: int = 6) -> Fraction:
    while True:
        c = Fraction(rng.randint(-6, 6), rng.randint(1, den))
        if c:
            return c


def rand_poly(rng: random.Random, variables, max_terms: int = 4, max_exp: int = 2,
              max_deg: int | None = None, min_terms: int = 0) -> Polynomial:
    out = ZERO
    for _ in range(rng.randint(min_terms, max_terms)):
        mono = ONE
        for v in variables:
            e = rng.randint(0, max_exp)
            if e:
                mono = mono * Polynomial.var(v, e)
        if max_deg is not None and mono.degree() > max_deg:
            continue
        out = out + rand_coeff(rng) * mono
    return out


def rand_monomial(rng: random.Random, variables, max_deg: int = 2) -> Polynomial:
    mono = ONE
    for _ in range(rng.randint(1, max_deg)):
        mono = mono * Polynomial.var(rng.choice(variables))
    return mono


def rand_word(rng: random.Random, k: int = 2, max_len: int = 2) -> tuple:
    return tuple(rng.randrange(k) for _ in range(rng.randint(0, max_len)))


def free_vars(rng: random.Random, n: int = 3) -> list:
    out = set()
    while len(out) < n:
        w = rand_word(rng)
        out.add(eps_at(w) if rng.random() < 0.3 else state_at(w, rng.randrange(3)))
    return sorted(out)


def state_poly(rng: random.Random, n_states: int, max_terms: int = 3) -> Polynomial:
    return rand_poly(rng, [state_at((), s) for s in range(n_states)], max_terms, 2, max_deg=2)


# ------------------------------------------------------------------ laws

def law_shift(rng: random.Random) -> None:
    vs = free_vars(rng)
    p = rand_poly(rng, vs)
    q = rand_poly(rng, vs)
    x, y = rand_word(rng), rand_word(rng)
    assert shift((), p) == p
    assert shift(x, shift(y, p)) == shift(x + y, p)
    assert shift(x, p + q) == shift(x, p) + shift(x, q)
    assert shift(x, p * q) == shift(x, p) * shift(x, q)
    assert unshift(x, shift(x, p)) == p


def law_substitute(rng: random.Random) -> None:
    p = rand_poly(rng, PLAIN_VARS)
    q = rand_poly(rng, PLAIN_VARS)
    sigma = {v: rand_poly(rng, PLAIN_VARS, 3, 1) for v in PLAIN_VARS if rng.random() < 0.7}
    c = rand_coeff(rng)
    assert substitute(p + q, sigma) == substitute(p, sigma) + substitute(q, sigma)
    assert substitute(p * q, sigma) == substitute(p, sigma) * substitute(q, sigma)
    assert substitute(Polynomial.const(c), sigma) == Polynomial.const(c)
    assert substitute(p, {}) == p


def law_coeff_sum(rng: random.Random) -> None:
    p = rand_poly(rng, PLAIN_VARS)
    q = rand_poly(rng, PLAIN_VARS)
    c = rand_coeff(rng)
    assert coeff_sum(p + q) == coeff_sum(p) + coeff_sum(q)
    assert coeff_sum(p * q) == coeff_sum(p) * coeff_sum(q)
    assert coeff_sum(Polynomial.const(c)) == c
    assert coeff_sum(p) == coeff_sum(substitute(p, {v: ONE for v in PLAIN_VARS}))


def law_grade_by(rng: random.Random) -> None:
    vs = free_vars(rng, 4)
    p = rand_poly(rng, vs, 5)
    graded = grade_by(p, is_eps)
    assert reassemble(graded) == p
    for key, val in graded.items():
        assert all(v.kind == EPS_KIND for v, _ in key)
        assert val and not any(is_eps(v) for v in val.variables())


def _small_automaton(rng: random.Random):
    return random_automaton(rng, rng.randint(1, 2), 2, "q", max_succ=2)


def law_derivative(rng: random.Random) -> None:
    aut = _small_automaton(rng)
    n = len(aut.states)
    p, q = state_poly(rng, n), state_poly(rng, n)
    al, be = rand_coeff(rng), rand_coeff(rng)
    a = rng.randrange(2)
    dp, dq = derivative(aut, p, a), derivative(aut, q, a)

    lin = derivative(aut, al * p + be * q, a)
    for k in set(lin) | set(dp) | set(dq):
        assert lin.get(k, ZERO) == al * dp.get(k, ZERO) + be * dq.get(k, ZERO)

    prod = derivative(aut, p * q, a)
    expect: dict = {}
    for i, u in dp.items():
        for j, v in dq.items():
            expect[i + j] = expect.get(i + j, ZERO) + u * v
    for k in set(prod) | set(expect):
        assert prod.get(k, ZERO) == expect.get(k, ZERO)

    c = rand_coeff(rng)
    assert derivative(aut, Polynomial.const(c), a) == {0: Polynomial.const(c)}

    # letter derivatives agree with the literal tree route over {eps}
    lit = marginal(aut, {()}, (a,), p)
    for k in set(dp) | {(e[0][1] if e else 0) for e in lit}:
        key = (((), k),) if k else ()
        assert dp.get(k, ZERO) == lit.get(key, ZERO)


SMALL_TREES = (frozenset(), frozenset({()}), frozenset({(), (0,)}), frozenset({(), (1,)}))


def _merge(m: tuple, x: tuple, ell: tuple) -> tuple:
    return tuple(sorted(m + tuple((x + w, e) for w, e in ell), key=lambda we: word_key(we[0])))


def law_composition(rng: random.Random) -> None:
    aut = _small_automaton(rng)
    A, B = rng.choice(SMALL_TREES), rng.choice(SMALL_TREES)
    x = rng.choice(sorted(boundary(A, 2), key=word_key))
    y = rng.choice(sorted(boundary(B, 2), key=word_key))
    p = state_poly(rng, len(aut.states), 2)

    whole = A | frozenset(x + b for b in B)
    lhs = marginal(aut, whole, x + y, p)
    rhs: dict = {}
    for m, q in marginal(aut, A, x, p).items():
        for ell, r in marginal(aut, B, y, q).items():
            key = _merge(m, x, ell)
            rhs[key] = rhs.get(key, ZERO) + r
    for k in set(lhs) | set(rhs):
        assert lhs.get(k, ZERO) == rhs.get(k, ZERO), (A, x, B, y, k)


def rand_ideal(rng: random.Random, n_vars: int | None = None) -> list:
    vs = PLAIN_VARS[: n_vars or rng.randint(2, 3)]
    F = []
    for _ in range(rng.randint(2, 3)):
        if rng.random() < 0.5:
            # binomials keep the ideal proper
            f = rand_coeff(rng) * (rand_monomial(rng, vs) - rand_monomial(rng, vs))
        else:
            f = rand_poly(rng, vs, 3, 2, max_deg=2, min_terms=2)
        if f:
            F.append(f)
    return F or [Polynomial.var(vs[0]) - 1]


def law_membership(rng: random.Random, F: list, basis) -> None:
    vs = sorted({v for f in F for v in f.variables()})
    comb = ZERO
    for f in F:
        mult = rand_poly(rng, vs, 2, 1)
        comb = comb + mult * f
    assert basis.contains(comb)
    assert not basis.reduce(comb)


def law_idempotent(F: list, basis) -> None:
    again = buchberger(basis.polys, basis.order)
    assert again.polys == basis.polys


def law_order_independent(rng: random.Random, F: list) -> None:
    g1 = buchberger(F, GREVLEX)
    g2 = buchberger(F, LEX)
    vs = sorted({v for f in F for v in f.variables()})
    probes = [rand_poly(rng, vs, 3, 2, max_deg=3) for _ in range(3)]
    probes.append(F[0] * rand_poly(rng, vs, 2, 1))
    for h in probes:
        assert g1.contains(h) == g2.contains(h), (F, h)


LAWS = {
    "shift action": law_shift,
    "substitute homomorphism": law_substitute,
    "coeff_sum morphism": law_coeff_sum,
    "grade_by reassembly": law_grade_by,
    "derivative laws": law_derivative,
    "tree composition": law_composition,
}


def rngs():
    """Hypothesis strategy yielding seeded ``random.Random`` instances."""
    from hypothesis import strategies as st

    return st.integers(0, 2**32 - 1).map(random.Random)
