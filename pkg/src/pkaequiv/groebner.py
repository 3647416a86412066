"""Buchberger's algorithm, multivariate division and ideal membership."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from pkaequiv import kernels
from pkaequiv.poly import GREVLEX, MonomialOrder, Polynomial, ZERO, leading_term


def _entries(G: Iterable[Polynomial], order: MonomialOrder) -> list:
    out = []
    for g in G:
        if not g:
            raise ValueError("zero divisor in reduction set")
        lm, lc = leading_term(g, order)
        out.append((lm, lc, g._terms))
    return out


def reduce(p: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Normal form of ``p``: no remaining term is divisible by a leading monomial of ``G``."""
    if not p or not G:
        return p
    return Polynomial._wrap(kernels.normal_form(p._terms, _entries(G, order), order.value))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    lmf, lcf = leading_term(f, order)
    lmg, lcg = leading_term(g, order)
    lcm = kernels.mono_lcm(lmf, lmg)
    out: dict = {}
    kernels.axpy_inplace(out, 1 / lcf, kernels.mono_quo(lcm, lmf), f._terms)
    kernels.axpy_inplace(out, -1 / lcg, kernels.mono_quo(lcm, lmg), g._terms)
    return Polynomial._wrap(out)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis sorted by descending leading monomial."""

    polys: tuple
    order: MonomialOrder = GREVLEX

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def reduce(self, p: Polynomial) -> Polynomial:
        return reduce(p, self.polys, self.order)

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def is_zero_ideal(self) -> bool:
        return not self.polys


def contains(B: GroebnerBasis, p: Polynomial) -> bool:
    return B.contains(p)


def buchberger(F: Iterable[Polynomial], order: MonomialOrder = GREVLEX,
               chain_criterion: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``F``.

    Pairs are processed smallest-lcm first; pairs with coprime leading
    monomials are skipped.  ``chain_criterion`` additionally drops pairs
    whose lcm is divisible by a third leading monomial whose two companion
    pairs have already been handled.
    """
    code = order.value
    G: list = []
    lms: list = []
    pairs: set = set()

    def add(g: Polynomial) -> None:
        g = g.monic(order)
        lm = leading_term(g, order)[0]
        k = len(G)
        G.append(g)
        lms.append(lm)
        for i in range(k):
            pairs.add((i, k))

    for f in F:
        if f:
            add(f)

    done: set = set()
    lcm_key = cmp_to_key(lambda a, b: kernels.mono_cmp(a[0], b[0], code))
    while pairs:
        cand = [(kernels.mono_lcm(lms[i], lms[j]), (i, j)) for i, j in pairs]
        lcm, pair = min(cand, key=lambda t: (lcm_key(t), t[1]))
        pairs.discard(pair)
        done.add(pair)
        i, j = pair
        if kernels.mono_coprime(lms[i], lms[j]):
            continue
        if chain_criterion and _chain_skip(i, j, lcm, lms, pairs):
            continue
        r = Polynomial._wrap(kernels.normal_form(
            s_polynomial(G[i], G[j], order)._terms,
            [(lms[k], G[k]._terms[lms[k]], G[k]._terms) for k in range(len(G))],
            code))
        if r:
            add(r)

    return GroebnerBasis(_reduce_basis(G, lms, order), order)


def _chain_skip(i: int, j: int, lcm, lms: list, pending: set) -> bool:
    for k in range(len(lms)):
        if k in (i, j):
            continue
        if not kernels.mono_divides(lms[k], lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _reduce_basis(G: list, lms: list, order: MonomialOrder) -> tuple:
    # minimal: drop elements whose leading monomial is a multiple of another's
    keep = []
    for i, lm in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if i == j or not kernels.mono_divides(other, lm):
                continue
            # equal leading monomials: keep the lowest index only
            if other != lm or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(G[i])
    reduced = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        reduced.append(reduce(g, others, order).monic(order))
    by_lm = {leading_term(g, order)[0]: g for g in reduced}
    return tuple(by_lm[m] for m in order.sorted(by_lm))


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """Check that every S-polynomial of ``G`` reduces to zero."""
    G = [g for g in G if g]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if reduce(s_polynomial(G[i], G[j], order), G, order):
                return False
    return True


def is_reduced(G: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    lms = [leading_term(g, order) for g in G]
    for i, g in enumerate(G):
        if lms[i][1] != 1:
            return False
        for j, (lm, _) in enumerate(lms):
            if i != j and any(kernels.mono_divides(lm, m) for m in g.terms):
                return False
    return True


__all__ = [
    "GroebnerBasis", "buchberger", "contains", "reduce", "s_polynomial",
    "is_groebner", "is_reduced", "ZERO",
]
