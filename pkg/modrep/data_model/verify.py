from typing import List, Optional

from pydantic import field_serializer

from .base import BaseModel, StrEnum

__all__ = [
    "DiscriminantCheck",
    "OddnessCriterion",
    "OddnessCheck",
    "ChebotarevRow",
    "ChebotarevCheck",
    "VerifyReport",
]


class DiscriminantCheck(BaseModel):
    """
    Whether ``disc(P) = (-1)^((ell-1)/2) * ell^(k+ell-2) * c^2`` for an integer ``c``.
    """

    disc: int
    sign: int
    expected_sign: int
    ell_valuation: int
    """
    The exact ``ell``-adic valuation of ``disc(P)``. Only ``>=`` the expected exponent
    with matching parity is required.
    """

    expected_exponent: int
    cofactor_root: Optional[int] = None
    """
    ``c``, when it exists.
    """

    ok: bool

    @field_serializer("disc", "cofactor_root")
    def _big_int_as_string(self, value: Optional[int]):
        return None if value is None else str(value)


class OddnessCriterion(StrEnum):
    negative_discriminant = "negative_discriminant"
    """
    ``disc(P) < 0``, so ``P`` has non-real roots.
    """

    top_coefficients = "top_coefficients"
    """
    ``a_{n-1}^2 - 2 a_{n-2} < 0``, but that is the sum of the squares of the roots.
    """

    bottom_coefficients = "bottom_coefficients"
    """
    ``a_1^2 - 2 a_0 a_2 < 0``, but that is ``a_0^2`` times the sum of the squares of the
    inverse roots.
    """

    none = "none"


class OddnessCheck(BaseModel):
    """
    Whether the field cut out by ``P`` is visibly not totally real.
    """

    criterion: OddnessCriterion
    top_value: int
    bottom_value: int
    ok: bool

    @field_serializer("top_value", "bottom_value")
    def _big_int_as_string(self, value: int):
        return str(value)


class ChebotarevRow(BaseModel):
    cycle_type: str
    expected_fraction: float
    observed_fraction: float
    expected_count: float
    observed_count: int
    deviation: float
    """
    ``|observed - expected| / sqrt(expected)``, in Poisson standard deviations.
    """

    flagged: bool


class ChebotarevCheck(BaseModel):
    """
    Factorization pattern frequencies against the cycle type distribution of ``PGL_2(F_ell)``
    acting on the projective line. This is corroboration that the Galois group is
    ``PGL_2(F_ell)``, not a proof.
    """

    evidence: str = "corroboration"
    prime_bound: int
    sample_size: int
    sigma: float
    skipped: List[int]
    rows: List[ChebotarevRow]

    @property
    def ok(self) -> bool:
        return not any(row.flagged for row in self.rows)


class VerifyReport(BaseModel):
    k: int
    ell: int
    discriminant: DiscriminantCheck
    oddness: OddnessCheck
    irreducibility_witness: Optional[int] = None
    """
    The least prime ``p`` with ``P`` irreducible modulo ``p``, which proves that ``P`` is
    irreducible over the rationals. Not finding one is inconclusive.
    """

    witness_bound: int
    chebotarev: Optional[ChebotarevCheck] = None

    @property
    def ok(self) -> bool:
        return (
            self.discriminant.ok
            and self.oddness.ok
            and (self.chebotarev is None or self.chebotarev.ok)
        )

    @property
    def failed_checks(self) -> List[str]:
        failed = []
        if not self.discriminant.ok:
            failed.append("discriminant")
        if not self.oddness.ok:
            failed.append("oddness")
        if self.chebotarev is not None and not self.chebotarev.ok:
            failed.append("chebotarev")
        return failed
