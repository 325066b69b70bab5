"""Exact computer algebra for semialgebras, semicoalgebras, bisemialgebras and
Hopf semialgebras over commutative semirings."""
from __future__ import annotations

from .errors import (
    BasisKindError,
    ConfigurationError,
    DomainError,
    FormatError,
    ParameterError,
    SemihopfError,
    SemiringMismatch,
    SizeError,
    UnsupportedError,
)
from .gallery import EXAMPLES, POSITIVE_GALLERY, example
from .report import CheckReport, Witness
from .semimodule import Atom, Dual, Functional, LinearMap, Pair, Power, Vector, Word
from .semiring import Semiring, boolean, finite_semiring, integers_mod, naturals, subset_lattice, xn
from .structures import (
    BisemialgebraDesc,
    HopfDesc,
    SemialgebraDesc,
    SemicoalgebraDesc,
    full_check,
    make_bisemialgebra,
    make_hopf,
)

__all__ = [
    "Atom", "BisemialgebraDesc", "BasisKindError", "CheckReport", "ConfigurationError", "DomainError",
    "Dual", "EXAMPLES", "FormatError", "Functional", "HopfDesc", "LinearMap", "POSITIVE_GALLERY", "Pair",
    "ParameterError", "Power", "SemialgebraDesc", "SemicoalgebraDesc", "SemihopfError", "Semiring",
    "SemiringMismatch", "SizeError", "UnsupportedError", "Vector", "Witness", "Word", "boolean", "example",
    "finite_semiring", "full_check", "integers_mod", "make_bisemialgebra", "make_hopf", "naturals",
    "subset_lattice", "xn",
]
