"""Conway's audioactive decay, checked with finite-state transducers."""

from ._backend import BACKEND
from .chemistry import (
    PERIODIC_TABLE,
    atom_oracle,
    atomic_factorization,
    derive,
    derive_n,
    growth_rate,
    lookup_element,
    split_oracle,
)
from .fst import Dfa, SymbolTable, Transducer
from .machines import A, B, build
from .theorems import (
    build_atom_recognizer,
    build_atomicf,
    prove_cosmological,
    prove_splitting,
    verify_periodic_table,
)

__version__ = "0.1.0"

__all__ = [
    "A",
    "B",
    "BACKEND",
    "Dfa",
    "PERIODIC_TABLE",
    "SymbolTable",
    "Transducer",
    "atom_oracle",
    "atomic_factorization",
    "build",
    "build_atom_recognizer",
    "build_atomicf",
    "derive",
    "derive_n",
    "growth_rate",
    "lookup_element",
    "prove_cosmological",
    "prove_splitting",
    "split_oracle",
    "verify_periodic_table",
]
