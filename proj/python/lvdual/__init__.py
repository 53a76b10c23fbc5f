"""Finite verifier for lattice-valued Stone and Jonsson-Tarski dualities."""

from ._core import (
    Algebra,
    Error,
    Lattice,
    __version__,
    builtin_lattice,
    check_validity,
    duality_roundtrip,
    eval_formula,
    functional_algebra,
    lattice,
    load,
    parse_formula,
    run_command,
    serialize,
    spec,
)

__all__ = [
    "Algebra",
    "Error",
    "Lattice",
    "__version__",
    "builtin_lattice",
    "check_validity",
    "duality_roundtrip",
    "eval_formula",
    "functional_algebra",
    "lattice",
    "load",
    "parse_formula",
    "run_command",
    "serialize",
    "spec",
]
