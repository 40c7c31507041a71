from typing import Dict, List

from .base import BaseModel, StrEnum, model_validator

__all__ = ["FrobeniusData", "ViolationKind", "Violation", "ConsistencyReport"]


class FrobeniusData(BaseModel):
    """
    Trace and determinant of the image of ``Frob_p`` modulo ``ell``: the characteristic
    polynomial is ``X^2 - t X + d``.
    """

    t: int
    d: int
    ell: int

    @model_validator(mode="after")
    def _check_ranges(self) -> "FrobeniusData":
        if not 0 <= self.t < self.ell:
            raise ValueError(f"trace {self.t} is not reduced modulo {self.ell}")
        if not 0 < self.d < self.ell:
            raise ValueError(
                f"determinant {self.d} must be a unit modulo {self.ell} (is p == ell?)"
            )
        return self

    @classmethod
    def from_tau(cls, tau_p: int, p: int, k: int, ell: int) -> "FrobeniusData":
        """
        Build from ``tau_k(p)`` (or any integer congruent to it modulo ``ell``).
        """
        return cls(t=tau_p % ell, d=pow(p, k - 1, ell), ell=ell)

    @property
    def discriminant(self) -> int:
        return (self.t * self.t - 4 * self.d) % self.ell


class ViolationKind(StrEnum):
    pattern = "pattern"
    """
    The factorization pattern isn't one of the predicted cycle types.
    """

    trace_zero = "trace_zero"
    """
    The splitting test disagrees with whether ``tau_k(p) = 0 mod ell``.
    """


class Violation(BaseModel):
    p: int
    kind: ViolationKind
    t: int
    d: int
    observed: str
    predicted: List[str]


class ConsistencyReport(BaseModel):
    """
    The result of comparing factorization patterns of ``P_{k,ell}`` mod ``p`` with the
    patterns predicted from ``tau_k(p)`` and ``p^(k-1)`` mod ``ell``.
    """

    k: int
    ell: int
    prime_max: int
    checked: int
    """
    How many primes were compared.
    """

    skipped: List[int]
    """
    Primes dividing ``ell * disc(P)``, which aren't compared.
    """

    trace_zero_checked: int
    violations: List[Violation]
    pattern_counts: Dict[str, int]

    @property
    def ok(self) -> bool:
        return not self.violations
