"""Equivalence decision by saturating a polynomial ideal under letter derivatives.

A run keeps the generators adopted so far (seed plus every derivative that
was not yet in their ideal) and a reduced Groebner basis of their ideal.
Each stage expands the generators adopted in the previous stage.  The run
fails as soon as a derivative has nonzero coefficient sum, and succeeds once
a stage adopts nothing new.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Union

from pkaequiv.algebra import derivative, one_eval
from pkaequiv.automaton import Automaton, ensure_valid
from pkaequiv.groebner import GroebnerBasis, buchberger
from pkaequiv.oracle import Witness, find_witness
from pkaequiv.poly import GREVLEX, MonomialOrder, Polynomial, ZERO

log = logging.getLogger(__name__)


class ResourceLimitError(RuntimeError):
    """The stage budget ran out before a verdict."""


class InvariantError(AssertionError):
    """A debug-mode invariant check failed."""


@dataclass(frozen=True)
class DecideConfig:
    strict_validation: bool = True
    max_stages: int = 10_000
    witness_depth_cap: int = 8
    find_witness: bool = True
    debug: bool = False
    order: MonomialOrder = GREVLEX
    chain_criterion: bool = False
    trace: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.max_stages < 1 or self.witness_depth_cap < 1:
            raise ValueError("caps must be positive")


@dataclass(frozen=True)
class StageRecord:
    stage: int
    expanded: int
    derivatives: int
    adopted: int
    basis_size: int


@dataclass(frozen=True)
class Equivalent:
    stages: int
    generators: int
    basis_size: int
    basis: GroebnerBasis | None = None
    history: tuple = ()

    equivalent = True


@dataclass(frozen=True)
class NotEquivalent:
    failing_polynomial: Polynomial
    derivation_path: tuple
    stage: int
    witness: Witness | None = None
    generators: int = 0
    basis_size: int = 0
    history: tuple = ()

    equivalent = False


Verdict = Union[Equivalent, NotEquivalent]


def split_sides(p: Polynomial) -> tuple:
    """Positive and negative parts of ``p`` (``p == pos - neg``)."""
    pos = Polynomial({m: c for m, c in p.terms.items() if c > 0})
    neg = Polynomial({m: -c for m, c in p.terms.items() if c < 0})
    return pos, neg


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise InvariantError(msg)


def decide(aut: Automaton, p: Polynomial, cfg: DecideConfig | None = None,
           sides: tuple | None = None) -> Verdict:
    """Decide whether the seed ``p`` (left measure minus right) has zero semantics.

    ``sides`` optionally gives the left/right seed polynomials for the
    witness report; otherwise the positive and negative parts of ``p`` are
    used.
    """
    cfg = cfg or DecideConfig()
    ensure_valid(aut, cfg.strict_validation)
    n_states = len(aut.states)
    for v in p.variables():
        if v.kind != 1 or v.length or not 0 <= v.state < n_states:
            raise ValueError(f"seed uses indeterminate {v} outside the state set")

    def fail(poly, path, stage, history, generators=0, basis_size=0):
        wit = None
        if cfg.find_witness:
            left, right = sides if sides is not None else split_sides(p)
            wit = find_witness(aut, left, right, cfg.witness_depth_cap)
        return NotEquivalent(poly, tuple(path), stage, wit, generators, basis_size,
                             tuple(history))

    if not p:
        return Equivalent(0, 0, 0, GroebnerBasis((), cfg.order))
    if one_eval(p) != 0:
        return fail(p, (), 0, (), 1, 0)

    generators = [p]
    paths = {p: ()}
    worklist = [p]
    basis = buchberger(generators, cfg.order, cfg.chain_criterion)
    history = []
    stage = 0
    while True:
        stage += 1
        if stage > cfg.max_stages:
            raise ResourceLimitError(f"no verdict within {cfg.max_stages} stages")
        pending = []
        seen_nf = set()
        produced = 0
        for g in worklist:
            for a in range(len(aut.alphabet)):
                for n, d in derivative(aut, g, a).items():
                    produced += 1
                    path = paths[g] + ((a, n),)
                    if one_eval(d) != 0:
                        history.append(StageRecord(stage, len(worklist), produced, 0, len(basis)))
                        _emit(cfg, history[-1])
                        return fail(d, path, stage, history, len(generators), len(basis))
                    nf = basis.reduce(d)
                    if not nf:
                        continue
                    key = nf.monic(cfg.order)
                    if key in seen_nf:
                        continue
                    seen_nf.add(key)
                    pending.append(d)
                    paths.setdefault(d, path)
        if not pending:
            history.append(StageRecord(stage, len(worklist), produced, 0, len(basis)))
            _emit(cfg, history[-1])
            if cfg.debug:
                _check_closure(aut, generators, basis)
            return Equivalent(stage, len(generators), len(basis), basis, tuple(history))
        old = basis
        generators.extend(pending)
        worklist = pending
        basis = buchberger(generators, cfg.order, cfg.chain_criterion)
        history.append(StageRecord(stage, len(worklist), produced, len(pending), len(basis)))
        _emit(cfg, history[-1])
        if cfg.debug:
            _check(basis.contains(p), f"stage {stage}: seed left the ideal")
            _check(all(one_eval(g) == 0 for g in generators),
                   f"stage {stage}: generator outside ker 1")
            _check(all(basis.contains(b) for b in old),
                   f"stage {stage}: ideal did not contain its predecessor")
            _check(basis.polys != old.polys, f"stage {stage}: ideal did not grow")


def _check_closure(aut: Automaton, generators: list, basis: GroebnerBasis) -> None:
    for g in generators:
        for a in range(len(aut.alphabet)):
            for n, d in derivative(aut, g, a).items():
                _check(basis.contains(d), "final generator set is not derivative-closed")


def _emit(cfg: DecideConfig, rec: StageRecord) -> None:
    log.debug("stage %d: expanded %d, derivatives %d, adopted %d, basis %d",
              rec.stage, rec.expanded, rec.derivatives, rec.adopted, rec.basis_size)
    if cfg.trace is not None:
        cfg.trace(rec)


def decide_seeds(aut: Automaton, left, right, cfg: DecideConfig | None = None) -> Verdict:
    """Convenience wrapper taking the two measures as :class:`MeasureSeed`."""
    from pkaequiv.automaton import measure_poly

    n = len(aut.states)
    pl = measure_poly(left, n)
    pr = measure_poly(right, n)
    return decide(aut, pl - pr, cfg, sides=(pl, pr))


__all__ = [
    "DecideConfig", "Equivalent", "InvariantError", "NotEquivalent", "ResourceLimitError",
    "StageRecord", "Verdict", "ZERO", "decide", "decide_seeds", "split_sides",
]
