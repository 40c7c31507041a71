from typing import Tuple

from pydantic import field_serializer

from ..arith import is_prime
from ..poly import IntPoly
from .base import BaseModel, field_validator, model_validator

__all__ = ["TableEntry"]


class TableEntry(BaseModel):
    """
    A weight ``k``, a prime ``ell`` and the polynomial ``P_{k,ell}`` whose splitting field
    is cut out by the projective mod ``ell`` representation attached to ``Delta_k``.
    """

    k: int
    """
    The weight of the cusp form.
    """

    ell: int
    """
    The prime of the residual representation.
    """

    coeffs: Tuple[int, ...]
    """
    Coefficients of ``P_{k,ell}`` in ascending degree order.
    """

    @field_validator("coeffs", mode="before")
    def _coeffs_from_strings(cls, v):
        return tuple(int(c) for c in v)

    @model_validator(mode="after")
    def _check_shape(self) -> "TableEntry":
        if self.ell < 2 or not is_prime(self.ell):
            raise ValueError(f"ell={self.ell} is not a prime")
        if len(self.coeffs) - 1 != self.ell + 1:
            raise ValueError(f"{self} must have degree {self.ell + 1}, got {len(self.coeffs) - 1}")
        if self.coeffs[-1] != 1:
            raise ValueError(f"{self} must be monic, got leading coefficient {self.coeffs[-1]}")
        return self

    @field_serializer("coeffs")
    def _coeffs_as_strings(self, coeffs: Tuple[int, ...]):
        return [str(c) for c in coeffs]

    @property
    def key(self) -> Tuple[int, int]:
        return (self.k, self.ell)

    @property
    def poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_elliptic_torsion(self) -> bool:
        """
        Whether ``ell == k - 1``. For these pairs the representation also comes from the
        ``ell``-torsion of an elliptic curve.
        """
        return self.ell == self.k - 1

    def __str__(self) -> str:
        return f"P_{{{self.k},{self.ell}}}"
