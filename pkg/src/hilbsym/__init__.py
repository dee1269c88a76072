"""Exact arithmetic in the centers of symmetric group algebras and related graded rings."""

from .center import CenterElement, c, convolution_product, h, induction_product, m, s, scalar_product
from .characters import CharacterTable, character_table, mn_character
from .errors import (
    CacheCorruptionError,
    CapExceededError,
    DegreeMismatchError,
    HilbsymError,
    InputError,
    InvariantViolation,
    TruncationError,
)
from .fock import FockElement, annihilate, commutator_check, create, vacuum_build
from .hilbert import betti_numbers, graded_ring, star_product
from .partitions import Partition, enumerate_partitions, pi_set

__version__ = "0.1.0"

__all__ = [
    "CacheCorruptionError", "CapExceededError", "CenterElement", "CharacterTable",
    "DegreeMismatchError", "FockElement", "HilbsymError", "InputError", "InvariantViolation",
    "Partition", "TruncationError", "annihilate", "betti_numbers", "c", "character_table",
    "commutator_check", "convolution_product", "create", "enumerate_partitions", "graded_ring",
    "h", "induction_product", "m", "mn_character", "pi_set", "s", "scalar_product",
    "star_product", "vacuum_build",
]
