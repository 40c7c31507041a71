"""
Integrity checks for the tabulated polynomials ``P_{k,ell}``.

- The discriminant has the shape ``(-1)^((ell-1)/2) * ell^(k+ell-2) * c^2``.
- The number field is visibly not totally real.
- Some prime keeps ``P`` irreducible, which proves ``P`` irreducible over the rationals.
- Factorization patterns occur with the frequencies of cycle types in ``PGL_2(F_ell)``.

The last check corroborates the Galois group but doesn't prove it.

>>> from modrep.reptable import builtin_table, get_entry
>>> from modrep.verify import check_not_totally_real
>>> check_not_totally_real(get_entry(builtin_table(), 12, 13)).top_value
-3
"""

import math
import warnings
from collections import Counter
from typing import Iterable, List, Optional, Sequence, Tuple

from .arith import p_adic_valuation, perfect_square_root, prime_list
from .cycle_type import CycleType
from .data_model.table import TableEntry
from .data_model.verify import (
    ChebotarevCheck,
    ChebotarevRow,
    DiscriminantCheck,
    OddnessCheck,
    OddnessCriterion,
    VerifyReport,
)
from .exceptions import InvalidArgumentError
from .frob import enumerate_pgl2_cycle_types
from .poly import IntPoly, ddf_pattern, discriminant, reduce_mod

__all__ = [
    "check_discriminant",
    "check_not_totally_real",
    "irreducibility_witness",
    "find_irreducibility_witness",
    "observe_patterns",
    "check_chebotarev_bound",
    "chebotarev_rows",
    "chebotarev_report",
    "verify_entry",
]


def check_discriminant(entry: TableEntry, disc: Optional[int] = None) -> DiscriminantCheck:
    """
    Check that ``disc(P) = (-1)^((ell-1)/2) * ell^(k+ell-2) * c^2`` for a positive integer ``c``.

    The ``ell``-adic valuation of ``disc(P)`` may exceed ``k + ell - 2`` by an even amount,
    since the index of ``Z[alpha]`` in the ring of integers isn't known here.
    """
    if disc is None:
        disc = discriminant(entry.poly)
    ell = entry.ell
    expected_sign = -1 if (ell - 1) // 2 % 2 else 1
    expected_exponent = entry.k + ell - 2
    sign = 1 if disc > 0 else -1
    valuation, cofactor = p_adic_valuation(disc, ell)
    root = perfect_square_root(abs(cofactor))
    excess = valuation - expected_exponent
    cofactor_root = None
    if root is not None and excess >= 0 and excess % 2 == 0:
        cofactor_root = root * ell ** (excess // 2)
    return DiscriminantCheck(
        disc=disc,
        sign=sign,
        expected_sign=expected_sign,
        ell_valuation=valuation,
        expected_exponent=expected_exponent,
        cofactor_root=cofactor_root,
        ok=sign == expected_sign and cofactor_root is not None,
    )


def check_not_totally_real(entry: TableEntry, disc: Optional[int] = None) -> OddnessCheck:
    """
    Look for a reason the field defined by ``P`` can't be totally real.

    For ``ell = 3 (mod 4)`` a negative discriminant is enough. Otherwise, writing
    ``P = x^n + a_{n-1} x^{n-1} + ... + a_0``, the sum of the squares of the roots is
    ``a_{n-1}^2 - 2 a_{n-2}`` and ``a_0^2`` times the sum of the squares of their inverses
    is ``a_1^2 - 2 a_0 a_2``; a negative value of either rules out all roots being real.
    """
    a = entry.coeffs
    n = len(a) - 1
    top = a[n - 1] ** 2 - 2 * a[n - 2]
    bottom = a[1] ** 2 - 2 * a[0] * a[2]
    criterion = OddnessCriterion.none
    if entry.ell % 4 == 3:
        if disc is None:
            disc = discriminant(entry.poly)
        if disc < 0:
            criterion = OddnessCriterion.negative_discriminant
    if criterion == OddnessCriterion.none:
        if top < 0:
            criterion = OddnessCriterion.top_coefficients
        elif bottom < 0:
            criterion = OddnessCriterion.bottom_coefficients
    return OddnessCheck(
        criterion=criterion,
        top_value=top,
        bottom_value=bottom,
        ok=criterion != OddnessCriterion.none,
    )


def irreducibility_witness(
    poly: IntPoly, search_bound: int, exclude: Iterable[int] = (), disc: Optional[int] = None
) -> Optional[int]:
    """
    The least prime ``p <= search_bound`` not dividing ``disc(poly)`` (nor in ``exclude``)
    modulo which the monic ``poly`` is irreducible, or ``None``.
    """
    if disc is None:
        disc = discriminant(poly)
    excluded = set(exclude)
    whole = CycleType([poly.degree])
    for p in prime_list(search_bound):
        if p in excluded or disc % p == 0:
            continue
        if ddf_pattern(reduce_mod(poly, p)) == whole:
            return p
    return None


def find_irreducibility_witness(
    entry: TableEntry, search_bound: int, disc: Optional[int] = None
) -> Optional[int]:
    """
    The least prime ``p <= search_bound``, ``p`` not dividing ``ell * disc(P)``, with
    ``P`` irreducible modulo ``p``. ``None`` is inconclusive rather than a failure.
    """
    return irreducibility_witness(entry.poly, search_bound, exclude=(entry.ell,), disc=disc)


def observe_patterns(
    entry: TableEntry, primes: Iterable[int], disc: int
) -> Tuple[List[CycleType], List[int]]:
    """
    Factorization patterns of ``P`` modulo each prime not dividing ``ell * disc``.

    :returns: The patterns and the skipped primes.
    """
    patterns, skipped = [], []
    poly = entry.poly
    for p in primes:
        if p == entry.ell or disc % p == 0:
            skipped.append(p)
            continue
        patterns.append(ddf_pattern(reduce_mod(poly, p)))
    return patterns, skipped


MIN_CHEBOTAREV_BOUND = 10_000


def check_chebotarev_bound(prime_bound: int) -> None:
    """
    Reject a bound with no primes below it, and warn when there are too few primes for the
    frequency comparison to mean much.

    :raises InvalidArgumentError: If ``prime_bound < 2``.
    """
    if prime_bound < 2:
        raise InvalidArgumentError(f"prime bound must be at least 2, got {prime_bound}")
    if prime_bound < MIN_CHEBOTAREV_BOUND:
        warnings.warn(
            f"Chebotarev comparison over primes up to {prime_bound} is a small sample; "
            f"use a bound of at least {MIN_CHEBOTAREV_BOUND}",
            RuntimeWarning,
        )


def chebotarev_rows(
    ell: int, patterns: Sequence[CycleType], sigma: float = 4.0
) -> List[ChebotarevRow]:
    """
    Compare pattern counts with the cycle type distribution of ``PGL_2(F_ell)``.

    A row is flagged when the observed count is more than ``sigma`` Poisson standard
    deviations from the expected count. A pattern that no element of ``PGL_2(F_ell)``
    has is always flagged, and its deviation is its observed count.
    """
    reference = enumerate_pgl2_cycle_types(ell)
    group_order = ell**3 - ell
    observed = Counter(patterns)
    sample_size = len(patterns)
    rows = []
    for cycle_type in sorted(set(reference) | set(observed)):
        fraction = reference.get(cycle_type, 0) / group_order
        expected = fraction * sample_size
        count = observed.get(cycle_type, 0)
        if expected > 0:
            deviation = abs(count - expected) / math.sqrt(expected)
            flagged = deviation > sigma
        else:
            deviation = float(count)
            flagged = count > 0
        rows.append(
            ChebotarevRow(
                cycle_type=str(cycle_type),
                expected_fraction=fraction,
                observed_fraction=count / sample_size if sample_size else 0.0,
                expected_count=expected,
                observed_count=count,
                deviation=deviation,
                flagged=flagged,
            )
        )
    return rows


def chebotarev_report(
    entry: TableEntry, prime_bound: int, sigma: float = 4.0, disc: Optional[int] = None
) -> ChebotarevCheck:
    """
    Factorization pattern frequencies over the primes ``p <= prime_bound`` against the
    exact cycle type fractions of ``PGL_2(F_ell)``.

    :raises InvalidArgumentError: If ``prime_bound < 2``. Bounds below 10000 only warn.
    """
    check_chebotarev_bound(prime_bound)
    if disc is None:
        disc = discriminant(entry.poly)
    patterns, skipped = observe_patterns(entry, prime_list(prime_bound), disc)
    return ChebotarevCheck(
        prime_bound=prime_bound,
        sample_size=len(patterns),
        sigma=sigma,
        skipped=skipped,
        rows=chebotarev_rows(entry.ell, patterns, sigma),
    )


def verify_entry(
    entry: TableEntry,
    witness_bound: int = 10_000,
    chebotarev_bound: Optional[int] = None,
    sigma: float = 4.0,
) -> VerifyReport:
    """
    Run every check on one entry. The frequency check is skipped if ``chebotarev_bound``
    is ``None``.
    """
    disc = discriminant(entry.poly)
    return VerifyReport(
        k=entry.k,
        ell=entry.ell,
        discriminant=check_discriminant(entry, disc),
        oddness=check_not_totally_real(entry, disc),
        irreducibility_witness=find_irreducibility_witness(entry, witness_bound, disc),
        witness_bound=witness_bound,
        chebotarev=None
        if chebotarev_bound is None
        else chebotarev_report(entry, chebotarev_bound, sigma, disc),
    )
