import random

import pytest
import sympy
from hypothesis import given

from pkaequiv.groebner import (
    GroebnerBasis, buchberger, contains, is_groebner, is_reduced, reduce, s_polynomial,
)
from pkaequiv.poly import GREVLEX, LEX, ONE, Polynomial, ZERO

import laws

x, y, z = (Polynomial.var(v) for v in "xyz")
SX, SY, SZ = sympy.symbols("x y z")
SYMS = {"x": SX, "y": SY, "z": SZ}


def to_sympy(p):
    return sum((sympy.Rational(c.numerator, c.denominator) *
                sympy.Mul(*[SYMS[v] ** e for v, e in m]) for m, c in p.terms.items()),
               sympy.Integer(0))


def test_reduce_examples():
    assert reduce(x ** 2 * y - 1, [x ** 2 - y]) == y ** 2 - 1
    assert reduce(ZERO, [x ** 2 - y]) == ZERO
    assert reduce(x ** 2 - y, [x ** 2 - y]) == ZERO
    assert reduce(x + 1, []) == x + 1
    with pytest.raises(ValueError):
        reduce(x, [ZERO])


def test_s_polynomial_examples():
    assert s_polynomial(x ** 2 - y, x ** 3 - x) == -x * y + x
    f = x * y + 2 * x
    assert s_polynomial(f, f) == ZERO
    assert s_polynomial(x, y) == ZERO
    with pytest.raises(ValueError):
        s_polynomial(ZERO, x)


def test_buchberger_examples():
    G = buchberger([x ** 2 - y, x ** 3 - x], GREVLEX)
    assert G.polys == (x ** 2 - y, x * y - x, y ** 2 - y)
    assert buchberger([x]).polys == (x,)
    p = 3 * x * y - 6 * z + 1
    assert buchberger([p]).polys == (p.monic(),)
    assert buchberger([]).polys == ()
    assert buchberger([ZERO, ZERO]).polys == ()
    assert buchberger([x - 1, x - 2]).polys == (ONE,)


def test_contains_examples():
    assert contains(buchberger([x, y]), 3 * x + 2 * y ** 2)
    assert not contains(buchberger([x - 1]), ONE)
    assert contains(buchberger([x - 1]), ZERO)
    assert contains(GroebnerBasis(()), ZERO)
    assert not contains(GroebnerBasis(()), x)


def test_basis_is_groebner_and_reduced():
    G = buchberger([x ** 2 - y, x ** 3 - x])
    assert is_groebner(G.polys) and is_reduced(G.polys)
    assert not is_groebner([x ** 2 - y, x ** 3 - x])


def test_chain_criterion_same_basis():
    rng = random.Random(3)
    for _ in range(40):
        F = laws.rand_ideal(rng)
        assert buchberger(F, chain_criterion=True).polys == buchberger(F).polys


@pytest.mark.parametrize("order,name", [(GREVLEX, "grevlex"), (LEX, "lex")])
def test_matches_sympy(order, name):
    rng = random.Random(11)
    for _ in range(60):
        F = laws.rand_ideal(rng)
        mine = buchberger(F, order)
        ref = sympy.groebner([to_sympy(f) for f in F], SX, SY, SZ, order=name)
        ref_polys = set()
        for e in ref.exprs:
            poly = sympy.Poly(e, SX, SY, SZ)
            ref_polys.add(sympy.expand(e / poly.LC(order=name)))
        got = {sympy.expand(to_sympy(g)) for g in mine}
        assert got == ref_polys, F


@given(laws.rngs())
def test_membership_constructive(rng):
    F = laws.rand_ideal(rng)
    laws.law_membership(rng, F, buchberger(F))


@given(laws.rngs())
def test_idempotent(rng):
    F = laws.rand_ideal(rng)
    laws.law_idempotent(F, buchberger(F))


@given(laws.rngs())
def test_order_independence(rng):
    laws.law_order_independent(rng, laws.rand_ideal(rng))


@given(laws.rngs())
def test_reduce_contract(rng):
    F = laws.rand_ideal(rng)
    G = buchberger(F)
    vs = sorted({v for f in F for v in f.variables()})
    p = laws.rand_poly(rng, vs, 4, 3)
    r = reduce(p, G.polys)
    # remainder differs from p by an ideal element and is irreducible
    assert G.contains(p - r)
    assert reduce(r, G.polys) == r
    # against a Groebner basis the normal form is independent of generator order
    assert reduce(p, list(reversed(G.polys))) == r


def test_generators_in_own_ideal():
    rng = random.Random(5)
    for _ in range(50):
        F = laws.rand_ideal(rng)
        G = buchberger(F)
        assert all(G.contains(f) for f in F)
        assert all(buchberger(F).contains(g) for g in G)
