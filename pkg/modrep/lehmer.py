"""
The search for primes ``p`` with ``tau(p) = 0``.

Such a prime must satisfy Serre's congruences: ``p = h*M - 1`` with
``M = 2^14 * 3^7 * 5^3 * 691``, ``h = 0, 30 or 48 (mod 49)`` and ``((h+1) | 23) = 1``.
Every survivor is then tested for ``tau(p) = 0 (mod ell)`` for ``ell = 11, 13, 17, 19``
by checking whether ``P_{12,ell}`` splits into factors of degree at most 2 modulo ``p``,
with at least one of degree 2.

>>> from modrep.lehmer import M, h_for_prime, passes_serre_congruences
>>> h = h_for_prime(22798241520242687999)
>>> h, passes_serre_congruences(h)
(7366218, True)
"""

from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .arith import is_prime, jacobi
from .data_model.lehmer import M, SEARCH_ELLS, Candidate, LehmerHit
from .data_model.table import TableEntry
from .exceptions import InvalidArgumentError, OutOfRangeError, RamifiedPrimeError
from .poly import IntPoly, discriminant, reduce_mod, splitting_test
from .reptable import builtin_table, get_entry
from .util import chunk_ranges

__all__ = [
    "M",
    "SEARCH_ELLS",
    "H_RESIDUES_MOD_49",
    "MAX_LIMIT",
    "h_for_prime",
    "h_max_for_limit",
    "passes_serre_congruences",
    "serre_sieve",
    "SearchPoly",
    "search_polys",
    "tau_vanishing_test",
    "tested_candidates",
    "ChunkResult",
    "scan_chunk",
    "lehmer_scan",
]


H_RESIDUES_MOD_49 = (0, 30, 48)

MAX_LIMIT = 10**21
"""
The largest ``p`` searched. Primality is decided deterministically well beyond this.
"""


def h_for_prime(p: int) -> int:
    """
    :raises InvalidArgumentError: If ``p`` isn't ``-1`` modulo ``M``.
    """
    if (p + 1) % M != 0:
        raise InvalidArgumentError(f"{p} is not -1 modulo M = {M}")
    return (p + 1) // M


def h_max_for_limit(p_limit: int) -> int:
    """
    The largest ``h`` with ``h*M - 1 <= p_limit``.
    """
    return (p_limit + 1) // M


def passes_serre_congruences(h: int) -> bool:
    """
    Whether ``h`` passes the congruence conditions on ``h``, without the primality test.
    """
    return h % 49 in H_RESIDUES_MOD_49 and jacobi(h + 1, 23) == 1


def _congruent_hs(h_lo: int, h_hi: int) -> Iterator[int]:
    for block in range(h_lo - h_lo % 49, h_hi + 1, 49):
        for r in H_RESIDUES_MOD_49:
            h = block + r
            if h_lo <= h <= h_hi:
                yield h


def serre_sieve(h_lo: int, h_hi: int, trace: bool = False) -> Iterator[Candidate]:
    """
    Yield, in ascending order of ``h``, the candidates ``h_lo <= h <= h_hi`` for which
    ``p = h*M - 1`` satisfies Serre's criteria.

    The filters run in order of increasing cost: the residue of ``h`` modulo 49, then the
    Jacobi symbol, then primality.

    :param trace: Also yield the rejected ``h``, with flags recording the first failed filter.

    :raises InvalidArgumentError: If ``h_lo < 1``.
    """
    if h_lo < 1:
        raise InvalidArgumentError(f"h must be at least 1, got {h_lo}")
    hs = range(h_lo, h_hi + 1) if trace else _congruent_hs(h_lo, h_hi)
    for h in hs:
        p = h * M - 1
        if h % 49 not in H_RESIDUES_MOD_49:
            yield Candidate(
                h=h, p=p, passed_mod49=False, passed_jacobi=False, passed_primality=False
            )
            continue
        if jacobi(h + 1, 23) != 1:
            if trace:
                yield Candidate(
                    h=h, p=p, passed_mod49=True, passed_jacobi=False, passed_primality=False
                )
            continue
        if not is_prime(p):
            if trace:
                yield Candidate(
                    h=h, p=p, passed_mod49=True, passed_jacobi=True, passed_primality=False
                )
            continue
        yield Candidate(h=h, p=p, passed_mod49=True, passed_jacobi=True, passed_primality=True)


class SearchPoly(NamedTuple):
    ell: int
    poly: IntPoly
    disc: int


def _search_poly(entry: TableEntry) -> SearchPoly:
    return SearchPoly(entry.ell, entry.poly, discriminant(entry.poly))


@lru_cache(maxsize=None)
def _builtin_search_polys() -> Tuple[SearchPoly, ...]:
    table = builtin_table()
    return tuple(_search_poly(get_entry(table, 12, ell)) for ell in SEARCH_ELLS)


def search_polys(entries: Optional[Iterable[TableEntry]] = None) -> Tuple[SearchPoly, ...]:
    """
    ``P_{12,ell}`` and its discriminant for each ``ell`` in :data:`SEARCH_ELLS`, taken from
    ``entries`` or from the built-in table.

    :raises EntryNotFound: If ``entries`` lacks one of the ``P_{12,ell}``.
    """
    if entries is None:
        return _builtin_search_polys()
    table = list(entries)
    return tuple(_search_poly(get_entry(table, 12, ell)) for ell in SEARCH_ELLS)


def tau_vanishing_test(
    p: int, polys: Optional[Tuple[SearchPoly, ...]] = None
) -> Dict[int, bool]:
    """
    Decide ``tau(p) = 0 (mod ell)`` for each ``ell`` in ascending order, stopping at the
    first ``ell`` where it fails.

    :returns: The result for each ``ell`` that was tested.

    :raises RamifiedPrimeError: If ``p`` divides ``ell * disc(P_{12,ell})`` for any ``ell``.
    """
    if polys is None:
        polys = search_polys()
    for sp in polys:
        if (sp.ell * sp.disc) % p == 0:
            raise RamifiedPrimeError(
                f"p = {p} divides ell * disc(P_{{12,{sp.ell}}}) for ell = {sp.ell}"
            )
    results: Dict[int, bool] = {}
    for sp in polys:
        results[sp.ell] = splitting_test(reduce_mod(sp.poly, p))
        if not results[sp.ell]:
            break
    return results


def tested_candidates(
    h_lo: int, h_hi: int, polys: Optional[Tuple[SearchPoly, ...]] = None
) -> Iterator[Candidate]:
    """
    The candidates from :func:`serre_sieve`, each with the results of
    :func:`tau_vanishing_test` attached as ``splitting``.

    >>> [c.is_hit for c in tested_candidates(7366218, 7366218)]
    [True]
    """
    for candidate in serre_sieve(max(h_lo, 1), h_hi):
        splitting = tau_vanishing_test(candidate.p, polys)
        yield candidate.model_copy(update={"splitting": splitting})


class ChunkResult(NamedTuple):
    h_lo: int
    h_hi: int
    hits: List[LehmerHit]
    candidates: int
    """
    How many ``h`` passed every filter of the sieve.
    """


def scan_chunk(
    h_lo: int, h_hi: int, polys: Optional[Tuple[SearchPoly, ...]] = None
) -> ChunkResult:
    """
    Search ``h_lo <= h <= h_hi``. This is the unit of work handed to worker processes.
    """
    hits: List[LehmerHit] = []
    candidates = 0
    for candidate in tested_candidates(h_lo, h_hi, polys):
        candidates += 1
        if candidate.is_hit:
            hits.append(LehmerHit(h=candidate.h, p=candidate.p, ells=list(SEARCH_ELLS)))
    return ChunkResult(h_lo, h_hi, hits, candidates)


def lehmer_scan(
    p_limit: int, chunk_size: int = 1_000_000, polys: Optional[Tuple[SearchPoly, ...]] = None
) -> List[int]:
    """
    Every prime ``p <= p_limit`` satisfying Serre's criteria with ``tau(p) = 0`` modulo
    11, 13, 17 and 19, in ascending order.

    >>> lehmer_scan(22689242781695999)
    []

    :raises OutOfRangeError: If ``p_limit`` exceeds :data:`MAX_LIMIT`.
    """
    if p_limit > MAX_LIMIT:
        raise OutOfRangeError(f"searching beyond {MAX_LIMIT} isn't supported, got {p_limit}")
    primes: List[int] = []
    for h_lo, h_hi in chunk_ranges(1, h_max_for_limit(p_limit), chunk_size):
        primes.extend(hit.p for hit in scan_chunk(h_lo, h_hi, polys).hits)
    return primes
