"""Exception hierarchy shared by every module and mapped to CLI exit codes."""

from __future__ import annotations


class HilbsymError(Exception):
    """Base class for all library errors."""


class InputError(HilbsymError, ValueError):
    """Malformed or inconsistent user input (bad partition, bad group file, ...)."""


class DegreeMismatchError(InputError):
    """Operands live in different graded pieces."""


class CapExceededError(HilbsymError):
    """A configured size cap (table size, group order, Fock cap) was exceeded."""


class TruncationError(CapExceededError):
    """A Fock-space operator would produce a component above the cap."""


class CacheCorruptionError(HilbsymError):
    """An on-disk cache file exists but fails validation."""


class InvariantViolation(HilbsymError):
    """A mathematical identity that must hold was found to fail."""
