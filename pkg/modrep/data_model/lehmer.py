from typing import Dict, List, Literal, Optional, Union

from pydantic import field_serializer

from .base import BaseModel, field_validator, model_validator

__all__ = ["M", "SEARCH_ELLS", "Candidate", "LehmerHit", "LehmerProgress", "LehmerRecord"]


M = 3094972416000
"""
``2^14 * 3^7 * 5^3 * 691``. A prime with ``tau(p) = 0`` must be ``-1`` modulo this.
"""

SEARCH_ELLS = (11, 13, 17, 19)


class Candidate(BaseModel):
    """
    One value of ``h`` in the search, with ``p = h * M - 1`` and which filters it passed.
    """

    h: int
    p: int
    passed_mod49: bool
    passed_jacobi: bool
    passed_primality: bool
    splitting: Optional[Dict[int, bool]] = None
    """
    The splitting test result for each ``ell`` that was tested, in ascending order. The
    tests stop at the first failure.
    """

    @model_validator(mode="after")
    def _check_invariants(self) -> "Candidate":
        if self.p != self.h * M - 1:
            raise ValueError(f"p must be h*M - 1, got h={self.h}, p={self.p}")
        if self.splitting is not None and not (
            self.passed_mod49 and self.passed_jacobi and self.passed_primality
        ):
            raise ValueError("splitting results are only recorded for primes passing every filter")
        return self

    @field_serializer("p")
    def _p_as_string(self, p: int):
        return str(p)

    @property
    def passed_filters(self) -> bool:
        return self.passed_mod49 and self.passed_jacobi and self.passed_primality

    @property
    def is_hit(self) -> bool:
        return (
            self.splitting is not None
            and len(self.splitting) == len(SEARCH_ELLS)
            and all(self.splitting.values())
        )


class LehmerHit(BaseModel):
    type: Literal["hit"] = "hit"
    h: int
    p: int
    ells: List[int] = list(SEARCH_ELLS)

    @field_validator("p", mode="before")
    def _p_from_string(cls, v):
        return int(v)

    @field_serializer("p")
    def _p_as_string(self, p: int):
        return str(p)


class LehmerProgress(BaseModel):
    type: Literal["progress"] = "progress"
    h_done: int
    """
    Every ``h <= h_done`` has been searched.
    """


LehmerRecord = Union[LehmerHit, LehmerProgress]
"""
One line of the search's JSON Lines output.
"""
