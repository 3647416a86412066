"""Words, finite trees and the free algebra over ``x.eps`` / ``x.s`` indeterminates.

Letters and states are integer indices.  A word is a tuple of letters, a
finite tree a prefix-closed ``frozenset`` of words.  Indeterminates sort by
kind (acceptance markers first), then word length, then word, then state,
which is the variable ranking fed to the monomial orders.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple, Sequence

from pkaequiv.poly import ONE, Polynomial, coeff_sum, grade_by, rename, substitute

EPS_KIND = 0
STATE_KIND = 1


class Ind(NamedTuple):
    kind: int
    length: int
    word: tuple
    state: int

    @property
    def is_eps(self) -> bool:
        return self.kind == EPS_KIND

    def __str__(self) -> str:
        w = "".join(chr(ord("a") + i) if i < 26 else f"<{i}>" for i in self.word)
        if self.kind == EPS_KIND:
            return f"{w}.eps" if w else "eps"
        return f"{w}.s{self.state}" if w else f"s{self.state}"


def eps_at(word: tuple = ()) -> Ind:
    return Ind(EPS_KIND, len(word), tuple(word), -1)


def state_at(word: tuple, s: int) -> Ind:
    return Ind(STATE_KIND, len(word), tuple(word), s)


EPS = eps_at(())


def beps(word: tuple = (), exp: int = 1) -> Polynomial:
    return Polynomial.var(eps_at(word), exp)


def sv(s: int, word: tuple = (), exp: int = 1) -> Polynomial:
    """The polynomial ``word.s`` (``s`` itself for the empty word)."""
    return Polynomial.var(state_at(word, s), exp)


def is_eps(v: Ind) -> bool:
    return v.kind == EPS_KIND


class EpsPolicy(Enum):
    FIXED = "fixed"
    APPLY_ONES = "apply_ones"


# ---------------------------------------------------------------- words, trees

def word_key(w: tuple) -> tuple:
    return (len(w), w)


def is_prefix(x: tuple, w: tuple) -> bool:
    return len(x) <= len(w) and w[: len(x)] == x


def check_tree(A: Iterable[tuple]) -> frozenset:
    A = frozenset(tuple(w) for w in A)
    for w in A:
        if w and w[:-1] not in A:
            raise ValueError(f"not a tree: prefix {w[:-1]!r} of {w!r} missing")
    return A


def tree(*words) -> frozenset:
    return check_tree(words)


def prefix_closure(words: Iterable[tuple]) -> frozenset:
    out = set()
    for w in words:
        w = tuple(w)
        for i in range(len(w) + 1):
            out.add(w[:i])
    return frozenset(out)


def sigma_below(n: int, k: int) -> frozenset:
    """All words of length < n over a k-letter alphabet."""
    out = [()]
    level = [()]
    for _ in range(n - 1):
        level = [w + (a,) for w in level for a in range(k)]
        out.extend(level)
    return frozenset(out) if n > 0 else frozenset()


def sigma_exactly(n: int, k: int) -> frozenset:
    level = [()]
    for _ in range(n):
        level = [w + (a,) for w in level for a in range(k)]
    return frozenset(level)


def _alphabet_size(alphabet) -> int:
    return alphabet if isinstance(alphabet, int) else len(alphabet)


def boundary(A: Iterable[tuple], alphabet) -> frozenset:
    """Prefix-minimal words outside the tree ``A``."""
    A = check_tree(A)
    if not A:
        return frozenset({()})
    k = _alphabet_size(alphabet)
    return frozenset(w + (a,) for w in A for a in range(k) if w + (a,) not in A)


def is_antichain(B: Iterable[tuple]) -> bool:
    B = sorted(set(B), key=word_key)
    for i, x in enumerate(B):
        for y in B[i + 1:]:
            if is_prefix(x, y):
                return False
    return True


def bfs_order(A: Iterable[tuple]) -> list:
    return sorted(A, key=word_key)


# ------------------------------------------------------------- monoid action

def shift(x: tuple, p: Polynomial) -> Polynomial:
    """Prefix every indeterminate's word with ``x``."""
    x = tuple(x)
    if not x:
        return p
    n = len(x)
    return rename(p, lambda v: Ind(v.kind, v.length + n, x + v.word, v.state))


def unshift(x: tuple, p: Polynomial) -> Polynomial:
    """Inverse of :func:`shift`; every indeterminate must carry prefix ``x``."""
    x = tuple(x)
    if not x:
        return p
    n = len(x)

    def strip(v: Ind) -> Ind:
        if not is_prefix(x, v.word):
            raise ValueError(f"indeterminate {v} has no prefix {x!r}")
        return Ind(v.kind, v.length - n, v.word[n:], v.state)

    return rename(p, strip)


def ones(s: int) -> Polynomial:
    return ONE


def prefix_substitute(B: Iterable[tuple], h: Callable[[int], Polynomial], p: Polynomial,
                      eps_policy: EpsPolicy = EpsPolicy.FIXED) -> Polynomial:
    """Partial evaluation of ``h`` under the prefixes in the antichain ``B``.

    ``w.s`` with ``w`` extending some ``x`` in ``B`` becomes ``w . h(s)``;
    acceptance markers stay (FIXED) or become 1 (APPLY_ONES); everything
    else is left alone.
    """
    B = frozenset(tuple(x) for x in B)
    if not is_antichain(B):
        raise ValueError("prefix set is not an antichain")
    lengths = sorted({len(x) for x in B})
    apply_ones = eps_policy is EpsPolicy.APPLY_ONES

    def image(v: Ind):
        if v.kind == EPS_KIND:
            return ONE if apply_ones else None
        for n in lengths:
            if n > v.length:
                break
            if v.word[:n] in B:
                return shift(v.word, h(v.state))
        return None

    return substitute(p, image)


one_eval = coeff_sum


# ----------------------------------------------------------- structure map

def _check_seed_poly(p: Polynomial) -> None:
    for v in p.variables():
        if v.kind != STATE_KIND or v.length:
            raise ValueError(f"expected a polynomial over states, found indeterminate {v}")


def theta_A(aut, A: Iterable[tuple], p: Polynomial,
            node_order: Sequence[tuple] | None = None) -> Polynomial:
    """Run the automaton from ``p`` over every node of the tree ``A``.

    ``node_order`` may give any linear extension of the prefix order on
    ``A``; breadth-first is the default.
    """
    A = check_tree(A)
    _check_seed_poly(p)
    if node_order is None:
        node_order = bfs_order(A)
    else:
        node_order = [tuple(x) for x in node_order]
        if frozenset(node_order) != A or len(node_order) != len(A):
            raise ValueError("node order is not a permutation of the tree")
        seen: set = set()
        for x in node_order:
            if x and x[:-1] not in seen:
                raise ValueError("node order does not extend the prefix order")
            seen.add(x)
    cur = p
    for x in node_order:
        cur = prefix_substitute((x,), aut.theta_of, cur)
    return cur


def profile_of(mono: tuple) -> tuple:
    """Acceptance profile ``((word, multiplicity), ...)`` of an eps-monomial."""
    return tuple((v.word, e) for v, e in mono)


def monomial_of(profile) -> tuple:
    items = profile.items() if isinstance(profile, dict) else profile
    return tuple(sorted((eps_at(w), e) for w, e in items if e))


def d_components(aut, A: Iterable[tuple], p: Polynomial) -> dict:
    """Grade ``theta_A(p)`` by acceptance profile."""
    graded = grade_by(theta_A(aut, A, p), is_eps)
    return {profile_of(m): q for m, q in graded.items()}


def marginal(aut, A: Iterable[tuple], x: tuple, p: Polynomial) -> dict:
    """Profile -> polynomial over states, marginalised onto the boundary word ``x``."""
    A = check_tree(A)
    x = tuple(x)
    bd = boundary(A, aut.alphabet)
    if x not in bd:
        raise ValueError(f"{x!r} is not on the boundary of the tree")
    rest = bd - {x}
    out = {}
    for prof, q in d_components(aut, A, p).items():
        out[prof] = unshift(x, prefix_substitute(rest, ones, q))
    return out


@lru_cache(maxsize=512)
def _letter_marginals(aut, a: int) -> tuple:
    # theta(s) with b.t -> 1 for b != a and a.t -> t
    def image(v: Ind):
        if v.kind == EPS_KIND:
            return None
        if v.word[0] == a:
            return sv(v.state)
        return ONE

    return tuple(substitute(aut.theta_of(s), image) for s in range(len(aut.states)))


def derivative(aut, b: Polynomial, a: int) -> dict:
    """Map ``n -> d^{eps^n}_{eps,a}(b)`` with only nonzero entries."""
    _check_seed_poly(b)
    marg = _letter_marginals(aut, a)
    moved = substitute(b, lambda v: marg[v.state])
    out = {}
    for mono, q in grade_by(moved, is_eps).items():
        n = mono[0][1] if mono else 0
        out[n] = q
    return dict(sorted(out.items()))


def derivatives(aut, b: Polynomial) -> list:
    """All nonzero ``(letter, n, derivative)`` triples in letter/degree order."""
    out = []
    for a in range(len(aut.alphabet)):
        for n, q in derivative(aut, b, a).items():
            out.append((a, n, q))
    return out


def profile_str(profile, alphabet: Sequence[str] | None = None) -> str:
    if not profile:
        return "(none)"
    parts = []
    for w, e in profile:
        name = "".join(alphabet[i] for i in w) if alphabet else "".join(map(str, w))
        parts.append(f"{name or 'ε'}:{e}")
    return ", ".join(parts)


def total_mass(values: Iterable[Fraction]) -> Fraction:
    return sum(values, Fraction(0))
