"""Automata given by a structure map ``state -> Q[eps, letter.state]``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from pkaequiv.algebra import EPS_KIND, Ind, STATE_KIND, state_at
from pkaequiv.poly import ONE, Polynomial, ZERO, coeff_sum, rename


class ValidationError(ValueError):
    def __init__(self, problems: Sequence[str]):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


@dataclass(frozen=True)
class Automaton:
    alphabet: tuple
    states: tuple
    theta: tuple = field(repr=False)

    def __post_init__(self):
        if len(self.theta) != len(self.states):
            raise ValueError("one structure-map polynomial per state required")
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state names")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate letters")

    @classmethod
    def build(cls, alphabet: Iterable[str], states: Iterable[str],
              theta: Mapping[str, Polynomial]) -> "Automaton":
        states = tuple(states)
        return cls(tuple(alphabet), states, tuple(theta.get(s, ZERO) for s in states))

    def theta_of(self, s: int) -> Polynomial:
        return self.theta[s]

    def state_index(self, name: str) -> int:
        try:
            return self.states.index(name)
        except ValueError:
            raise KeyError(f"unknown state {name!r}") from None

    def letter_index(self, name: str) -> int:
        try:
            return self.alphabet.index(name)
        except ValueError:
            raise KeyError(f"unknown letter {name!r}") from None

    def var(self, name: str, word: str = "") -> Polynomial:
        """``word.name`` as a polynomial; letters given as a string."""
        w = tuple(self.letter_index(c) for c in word)
        return Polynomial.var(state_at(w, self.state_index(name)))

    def word_str(self, w: tuple) -> str:
        return "".join(self.alphabet[i] for i in w)

    def var_str(self, v: Ind) -> str:
        w = self.word_str(v.word)
        if v.kind == EPS_KIND:
            return f"({w}.eps)" if w else "eps"
        name = self.states[v.state]
        return f"({w}.{name})" if w else name

    def format(self, p: Polynomial) -> str:
        return p.format(self.var_str)


def validate(aut: Automaton, strict: bool = True) -> list:
    """Diagnostics for ``aut``; an empty list means valid."""
    problems = []
    k = len(aut.alphabet)
    n = len(aut.states)
    for s, poly in enumerate(aut.theta):
        name = aut.states[s]
        for mono, c in poly.terms.items():
            for v, _ in mono:
                ok = isinstance(v, Ind) and (
                    (v.kind == EPS_KIND and v.length == 0)
                    or (v.kind == STATE_KIND and v.length == 1 and 0 <= v.word[0] < k
                        and 0 <= v.state < n))
                if not ok:
                    problems.append(f"bad indeterminate {v} in structure map of {name}")
            if strict and not (0 <= c <= 1):
                problems.append(f"coefficient {c} outside [0,1] at {name}")
        if strict:
            mass = coeff_sum(poly)
            if mass != 1:
                problems.append(f"mass {mass} ≠ 1 at {name}")
    return problems


def ensure_valid(aut: Automaton, strict: bool = True) -> None:
    problems = validate(aut, strict)
    if problems:
        raise ValidationError(problems)


def disjoint_union(a1: Automaton, a2: Automaton) -> tuple:
    """Merge two automata over the same alphabet.

    Returns ``(automaton, (renaming1, renaming2))`` where each renaming maps
    old state index to new state index.  Names are suffixed ``#1``/``#2``
    only when the two name sets overlap.
    """
    if a1.alphabet != a2.alphabet:
        raise ValueError(f"alphabet mismatch: {a1.alphabet} vs {a2.alphabet}")
    n1 = len(a1.states)
    clash = bool(set(a1.states) & set(a2.states))
    if clash:
        names = tuple(f"{s}#1" for s in a1.states) + tuple(f"{s}#2" for s in a2.states)
    else:
        names = a1.states + a2.states
    ren1 = {i: i for i in range(n1)}
    ren2 = {i: n1 + i for i in range(len(a2.states))}

    def mover(ren):
        def f(v: Ind) -> Ind:
            if v.kind == STATE_KIND:
                return Ind(v.kind, v.length, v.word, ren[v.state])
            return v
        return f

    theta = tuple(rename(p, mover(ren1)) for p in a1.theta) + \
        tuple(rename(p, mover(ren2)) for p in a2.theta)
    return Automaton(a1.alphabet, names, theta), (ren1, ren2)


def rename_states(aut: Automaton, perm: Sequence[int]) -> Automaton:
    """Relabel state ``i`` as ``perm[i]`` (a bijection)."""
    n = len(aut.states)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")

    def f(v: Ind) -> Ind:
        return Ind(v.kind, v.length, v.word, perm[v.state]) if v.kind == STATE_KIND else v

    states = [None] * n
    theta = [None] * n
    for i in range(n):
        states[perm[i]] = aut.states[i]
        theta[perm[i]] = rename(aut.theta[i], f)
    return Automaton(aut.alphabet, tuple(states), tuple(theta))


# ----------------------------------------------------------------- seeds

@dataclass(frozen=True)
class MeasureSeed:
    """Finite signed measure on multisets of states: ``((weight, states), ...)``."""

    terms: tuple = ()

    @classmethod
    def point(cls, *states: int) -> "MeasureSeed":
        return cls(((Fraction(1), tuple(states)),))

    def __add__(self, other: "MeasureSeed") -> "MeasureSeed":
        return MeasureSeed(self.terms + other.terms)

    def total(self) -> Fraction:
        return sum((Fraction(w) for w, _ in self.terms), Fraction(0))


def measure_poly(mu: MeasureSeed, n_states: int | None = None) -> Polynomial:
    out = ZERO
    for w, ms in mu.terms:
        m = ONE
        for s in ms:
            if n_states is not None and not 0 <= s < n_states:
                raise ValueError(f"unknown state index {s}")
            m = m * Polynomial.var(state_at((), s))
        out = out + m.scale(Fraction(w))
    return out


def seed(mu: MeasureSeed, nu: MeasureSeed, aut: Automaton | None = None) -> Polynomial:
    """Polynomial of the signed measure ``mu - nu`` (multiset = monomial)."""
    n = None if aut is None else len(aut.states)
    return measure_poly(mu, n) - measure_poly(nu, n)


def validate_seed(mu: MeasureSeed, strict: bool = True, label: str = "seed") -> list:
    problems = []
    if strict:
        for w, _ in mu.terms:
            if w < 0:
                problems.append(f"negative weight {w} in {label}")
        if mu.total() != 1:
            problems.append(f"{label} weights sum to {mu.total()} ≠ 1")
    return problems


def translate_seed(mu: MeasureSeed, renaming: Mapping[int, int]) -> MeasureSeed:
    return MeasureSeed(tuple((w, tuple(renaming[s] for s in ms)) for w, ms in mu.terms))
