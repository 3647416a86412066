"""Exact sparse multivariate polynomials over the rationals.

Variables are arbitrary hashable, totally ordered values; their natural
order is the variable ranking used by the monomial orders (smaller value =
higher-ranked variable, so with ``x < y`` we get ``x > y`` in the ordering
sense of textbooks).  Monomials are tuples of ``(var, exponent)`` pairs
sorted by var.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Callable, Hashable, Iterable, Mapping

from pkaequiv import kernels

Monomial = tuple
ONE_MONOMIAL: Monomial = ()


class MonomialOrder(Enum):
    GREVLEX = kernels.GREVLEX
    LEX = kernels.LEX

    def compare(self, a: Monomial, b: Monomial) -> int:
        return kernels.mono_cmp(a, b, self.value)

    def sorted(self, monos: Iterable[Monomial], descending: bool = True) -> list:
        return kernels.sort_monomials(list(monos), self.value, descending)


GREVLEX = MonomialOrder.GREVLEX
LEX = MonomialOrder.LEX


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"inexact coefficient {c!r}; use int, Fraction or 'p/q'")


def monomial(*pairs) -> Monomial:
    """Build a canonical monomial from ``(var, exp)`` pairs in any order."""
    acc: dict = {}
    for v, e in pairs:
        if e < 0:
            raise ValueError("negative exponent")
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


class Polynomial:
    """Immutable polynomial with canonical term map (no zero coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _coerce(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Polynomial":
        c = _coerce(c)
        return cls._wrap({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def var(cls, v: Hashable, exp: int = 1) -> "Polynomial":
        if exp == 0:
            return cls._wrap({ONE_MONOMIAL: Fraction(1)})
        return cls._wrap({((v, exp),): Fraction(1)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == ({ONE_MONOMIAL: other} if other else {})

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.const(other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return Polynomial._wrap(kernels.poly_add(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial._wrap(kernels.poly_mul(self._terms, other._terms))
        try:
            c = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _coerce(other)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return self.scale(1 / c)

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return ZERO
        return Polynomial._wrap({m: c * v for m, v in self._terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return ZERO
        out: dict = {}
        kernels.axpy_inplace(out, c, mono, self._terms)
        return Polynomial._wrap(out)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(kernels.mono_degree(m) for m in self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        _, lc = leading_term(self, order)
        return self if lc == 1 else self.scale(1 / lc)

    def format(self, var_str: Callable[[Hashable], str] = str,
               order: MonomialOrder = GREVLEX) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m in order.sorted(self._terms):
            c = self._terms[m]
            body = " ".join(var_str(v) + (f"^{e}" if e != 1 else "") for v, e in m)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag} {body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r})"


ZERO = Polynomial._wrap({})
ONE = Polynomial._wrap({ONE_MONOMIAL: Fraction(1)})


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def substitute(p: Polynomial, sigma: Mapping[Hashable, Polynomial] | Callable) -> Polynomial:
    """Apply the homomorphism fixing unmapped variables and sending ``v`` to ``sigma[v]``.

    ``sigma`` may be a mapping or a callable returning ``None`` for variables
    that stay put.
    """
    lookup = sigma.get if isinstance(sigma, Mapping) else sigma
    images: dict = {}
    powers: dict = {}
    out: dict = {}
    for m, c in p._terms.items():
        kept = []
        prod = None
        for v, e in m:
            if v not in images:
                img = lookup(v)
                images[v] = None if img is None else _as_poly(img)
            img = images[v]
            if img is None:
                kept.append((v, e))
                continue
            key = (v, e)
            pw = powers.get(key)
            if pw is None:
                pw = (img ** e)._terms
                powers[key] = pw
            prod = pw if prod is None else kernels.poly_mul(prod, pw)
        if prod is None:
            prod = {ONE_MONOMIAL: Fraction(1)}
        kernels.axpy_inplace(out, c, tuple(kept), prod)
    return Polynomial._wrap(out)


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial.const(x)


def rename(p: Polynomial, f: Callable[[Hashable], Hashable]) -> Polynomial:
    """Push every variable through ``f`` (need not be injective)."""
    out: dict = {}
    for m, c in p._terms.items():
        acc: dict = {}
        for v, e in m:
            w = f(v)
            acc[w] = acc.get(w, 0) + e
        key = tuple(sorted(acc.items()))
        v = out.get(key)
        if v is None:
            out[key] = c
        else:
            v += c
            if v:
                out[key] = v
            else:
                del out[key]
    return Polynomial._wrap(out)


def coeff_sum(p: Polynomial) -> Fraction:
    """Value of ``p`` with every variable set to 1."""
    return sum(p._terms.values(), Fraction(0))


def grade_by(p: Polynomial, selector: Callable[[Hashable], bool]) -> dict:
    """Split ``p`` as ``sum(key * value)`` with keys over the selected variables.

    Keys are monomials in selected variables only; values are polynomials in
    the remaining ones.
    """
    buckets: dict = {}
    for m, c in p._terms.items():
        sel = []
        rest = []
        for pair in m:
            (sel if selector(pair[0]) else rest).append(pair)
        bucket = buckets.setdefault(tuple(sel), {})
        bucket[tuple(rest)] = c
    return {k: Polynomial._wrap(v) for k, v in buckets.items()}


def leading_term(p: Polynomial, order: MonomialOrder = GREVLEX) -> tuple:
    if not p:
        raise ValueError("no leading term")
    lm = kernels.leading(p._terms, order.value)
    return lm, p._terms[lm]


def reassemble(graded: Mapping[Monomial, Polynomial]) -> Polynomial:
    out: dict = {}
    for key, val in graded.items():
        kernels.axpy_inplace(out, Fraction(1), key, val._terms)
    return Polynomial._wrap(out)
