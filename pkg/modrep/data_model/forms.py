from typing import List, Optional

from pydantic import field_serializer

from .base import BaseModel, StrEnum

__all__ = ["TauValue", "CongruenceCheck", "CongruenceReport", "NonvanishingReport"]


class TauValue(BaseModel):
    k: int
    n: int
    tau: int
    modulus: Optional[int] = None

    @field_serializer("tau")
    def _tau_as_string(self, tau: int):
        return str(tau)


class CongruenceCheck(StrEnum):
    mod_691 = "691"
    """
    ``tau(p) = 1 + p^11 (mod 691)``.
    """

    mod_125 = "125"
    """
    ``tau(p) = p^41 + p^70 (mod 5^3)`` for ``p != 5``.
    """


class CongruenceReport(BaseModel):
    check: CongruenceCheck
    prime_max: int
    checked: int
    failures: List[int]
    untested: List[int]
    """
    Primes the congruence says nothing about.
    """

    @property
    def ok(self) -> bool:
        return not self.failures


class NonvanishingReport(BaseModel):
    bound: int
    zeros: List[int]
    """
    Every ``n <= bound`` with ``tau(n) == 0``.
    """

    @property
    def ok(self) -> bool:
        return not self.zeros
