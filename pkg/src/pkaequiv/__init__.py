"""Exact equivalence checking for probabilistic automata with angelic nondeterminism."""

from pkaequiv.automaton import Automaton, MeasureSeed, disjoint_union, seed, validate
from pkaequiv.decide import DecideConfig, Equivalent, NotEquivalent, ResourceLimitError, decide
from pkaequiv.groebner import GroebnerBasis, buchberger
from pkaequiv.kernels import BACKEND
from pkaequiv.oracle import equivalent_to_depth, find_witness, truncated_semantics
from pkaequiv.poly import GREVLEX, LEX, MonomialOrder, Polynomial

__version__ = "0.1.0"

__all__ = [
    "Automaton", "BACKEND", "DecideConfig", "Equivalent", "GREVLEX", "GroebnerBasis", "LEX",
    "MeasureSeed", "MonomialOrder", "NotEquivalent", "Polynomial", "ResourceLimitError",
    "buchberger", "decide", "disjoint_union", "equivalent_to_depth", "find_witness", "seed",
    "truncated_semantics", "validate",
]
