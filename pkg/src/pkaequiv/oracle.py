"""Depth-bounded exact semantics: probabilities of acceptance profiles over a finite tree.

The distribution of a state over a tree ``A`` is computed recursively: run
one step of the structure map, keep the acceptance marker at the root, and
replace each spawned ``a.t`` by ``t``'s distribution over the subtree below
``a`` (or by 1 when ``a`` lies outside ``A``).  This never touches the
derivative/ideal machinery used by :mod:`pkaequiv.decide`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from pkaequiv.algebra import (
    EPS, EPS_KIND, check_tree, profile_of, shift, sigma_below, word_key,
)
from pkaequiv.poly import ONE, Polynomial, substitute


@dataclass(frozen=True)
class TruncatedSemantics:
    tree: frozenset
    values: dict

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def get(self, profile) -> Fraction:
        return self.values.get(tuple(profile), Fraction(0))

    def project(self, sub: Iterable[tuple]) -> "TruncatedSemantics":
        """Marginal on a subtree: forget multiplicities at words outside ``sub``."""
        sub = check_tree(sub)
        if not sub <= self.tree:
            raise ValueError("projection target is not a subtree")
        out: dict = {}
        for prof, v in self.values.items():
            key = tuple((w, e) for w, e in prof if w in sub)
            out[key] = out.get(key, Fraction(0)) + v
        return TruncatedSemantics(sub, {k: v for k, v in out.items() if v})

    def rows(self) -> list:
        return sorted(self.values.items(), key=lambda kv: profile_key(kv[0]))


def profile_key(profile) -> tuple:
    # lexicographic over (word, multiplicity) entries; running out ranks last
    return tuple((0, word_key(w), e) for w, e in profile) + ((1,),)


class _Runner:
    def __init__(self, aut):
        self.aut = aut
        self.cache: dict = {}

    def dist(self, sub: frozenset, s: int) -> Polynomial:
        if not sub:
            return ONE
        key = (sub, s)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        below: dict = {}

        def image(v):
            if v.kind == EPS_KIND:
                return None
            a = v.word[0]
            child = below.get(a)
            if child is None:
                child = frozenset(w[1:] for w in sub if w and w[0] == a)
                below[a] = child
            if not child:
                return ONE
            return shift((a,), self.dist(child, v.state))

        out = substitute(self.aut.theta_of(s), image)
        self.cache[key] = out
        return out


def distribution_poly(aut, p: Polynomial, A: Iterable[tuple]) -> Polynomial:
    """Polynomial over acceptance markers whose coefficients are profile masses."""
    A = check_tree(A)
    runner = _Runner(aut)
    for v in p.variables():
        if v.kind == EPS_KIND or v.length:
            raise ValueError(f"expected a polynomial over states, found {v}")
    return substitute(p, lambda v: runner.dist(A, v.state))


def truncated_semantics(aut, p: Polynomial, A: Iterable[tuple]) -> TruncatedSemantics:
    A = check_tree(A)
    dist = distribution_poly(aut, p, A)
    return TruncatedSemantics(A, {profile_of(m): c for m, c in dist.terms.items()})


def semantics_to_depth(aut, p: Polynomial, n: int) -> TruncatedSemantics:
    return truncated_semantics(aut, p, sigma_below(n, len(aut.alphabet)))


def equivalent_to_depth(aut, p_left: Polynomial, p_right: Polynomial, n: int) -> bool:
    if n < 1:
        raise ValueError("depth must be at least 1")
    # linearity: compare the difference against zero
    return not semantics_to_depth(aut, p_left - p_right, n).values


@dataclass(frozen=True)
class Witness:
    depth: int
    profile: tuple
    left: Fraction
    right: Fraction


def find_witness(aut, p_left: Polynomial, p_right: Polynomial, cap: int) -> Witness | None:
    """Least depth and least profile on which the two seeds disagree."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    for n in range(1, cap + 1):
        diff = semantics_to_depth(aut, p_left - p_right, n)
        if diff.values:
            prof = min(diff.values, key=profile_key)
            left = semantics_to_depth(aut, p_left, n).get(prof)
            right = semantics_to_depth(aut, p_right, n).get(prof)
            return Witness(n, prof, left, right)
    return None


__all__ = [
    "TruncatedSemantics", "Witness", "distribution_poly", "equivalent_to_depth",
    "find_witness", "profile_key", "semantics_to_depth", "truncated_semantics", "EPS",
]
