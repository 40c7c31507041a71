"""
Exceptions that can be raised by :mod:`modrep`.

.. tip::
    All exceptions inherit from :class:`ModRepError` other than :exc:`ValidationError`,
    which is re-exported from `pydantic <https://docs.pydantic.dev/>`_.
    Errors caused by a bad argument also inherit from :exc:`ValueError`.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

from pydantic import ValidationError  # noqa: F401, re-imported here for convenience

if TYPE_CHECKING:
    from .data_model.frobenius import ConsistencyReport
    from .data_model.verify import VerifyReport

ValidationError.__doc__ = """
Raised when data passed into a :mod:`DataModel <modrep.data_model>` is invalid.
"""


__all__ = [
    "ModRepError",
    "ValidationError",
    "InvalidArgumentError",
    "OutOfRangeError",
    "ConfigurationError",
    "ModulusMismatchError",
    "NotMonicError",
    "NotSquarefreeError",
    "InvalidWeightError",
    "CoefficientOutOfRangeError",
    "TableError",
    "TableSyntaxError",
    "DegreeMismatchError",
    "NonMonicEntryError",
    "CompositeEllError",
    "UnknownEntryError",
    "EntryNotFound",
    "RamifiedPrimeError",
    "ConsistencyViolationError",
    "VerificationFailedError",
    "CheckpointError",
]


class ModRepError(Exception):
    """
    Base class for all modrep errors other than :exc:`ValidationError`, which is
    re-exported from `pydantic <https://docs.pydantic.dev/>`_.
    """


class InvalidArgumentError(ModRepError, ValueError):
    """
    Raised when an argument is outside the domain of an operation, e.g. a negative
    exponent or an even Jacobi modulus.
    """


class OutOfRangeError(InvalidArgumentError):
    """
    Raised by :func:`~modrep.arith.is_prime` for inputs beyond the range where the
    primality test is deterministic.
    """


class ConfigurationError(ModRepError):
    """
    Raised when the :class:`~modrep.Config` fails to instantiate or validate.
    """


class ModulusMismatchError(InvalidArgumentError):
    """
    Raised when two :class:`~modrep.poly.ModPoly` values with different moduli are combined.
    """


class NotMonicError(InvalidArgumentError):
    pass


class NotSquarefreeError(InvalidArgumentError):
    """
    Raised when a polynomial over a prime field has a repeated factor, which happens
    exactly when the prime divides its discriminant.
    """


class InvalidWeightError(InvalidArgumentError):
    """
    Raised when a weight has no one-dimensional space of level one cusp forms
    handled here, or an Eisenstein weight other than 4 or 6 is requested.
    """


class CoefficientOutOfRangeError(InvalidArgumentError, IndexError):
    """
    Raised when a coefficient beyond the truncation bound of a q-expansion is requested.
    """


class TableError(ModRepError):
    """
    Base class for errors raised while loading a polynomial table.
    """

    def __init__(self, msg: Optional[str] = None, line: Optional[int] = None):
        if line is not None and msg is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)
        self.line = line


class TableSyntaxError(TableError):
    pass


class DegreeMismatchError(TableError):
    """
    Raised when an entry's polynomial doesn't have degree ``ell + 1``.
    """


class NonMonicEntryError(TableError):
    pass


class CompositeEllError(TableError):
    pass


class UnknownEntryError(TableError):
    """
    Raised when an entry's ``(k, ell)`` pair isn't one of the pairs the table covers.
    """


class EntryNotFound(ModRepError, KeyError):
    pass


class RamifiedPrimeError(ModRepError, AssertionError):
    """
    Raised when a candidate prime divides ``ell * disc(P)`` for one of the search
    polynomials. Primes satisfying Serre's criteria never do.
    """


class ConsistencyViolationError(ModRepError):
    def __init__(self, msg: Optional[str] = None, report: Optional[ConsistencyReport] = None):
        super().__init__(msg)
        self.report = report


class VerificationFailedError(ModRepError):
    def __init__(self, msg: Optional[str] = None, report: Optional[VerifyReport] = None):
        super().__init__(msg)
        self.report = report


class CheckpointError(ModRepError):
    """
    Raised when a checkpoint file can't be read or belongs to a different scan.
    """
