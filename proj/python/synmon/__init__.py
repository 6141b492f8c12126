"""Syntactic monoids and algebras of regular languages."""

from ._synmon import (
    CapacityError,
    Dfa,
    SynAlgebra,
    check,
    congruent,
    duality,
    min_dfa,
    minimal_automaton,
    run_cli,
    syntactic_algebra,
    varieties,
)

__all__ = [
    "CapacityError",
    "Dfa",
    "SynAlgebra",
    "check",
    "congruent",
    "duality",
    "min_dfa",
    "minimal_automaton",
    "run_cli",
    "syntactic_algebra",
    "varieties",
]
