import pytest

from modrep.arith import is_prime, jacobi
from modrep.data_model import TableEntry
from modrep.exceptions import *
from modrep.lehmer import *
from modrep.poly import ddf_pattern, reduce_mod

# Library generator re-exported by the star import above; not a pytest test.
tested_candidates.__test__ = False  # type: ignore[attr-defined]

LEHMER_PRIMES = [22798241520242687999, 60707199950936063999, 93433753964906495999]


def test_modulus():
    assert M == 2**14 * 3**7 * 5**3 * 691
    assert M == 3094972416000


@pytest.mark.parametrize("p", LEHMER_PRIMES)
def test_known_primes_satisfy_the_criteria(p: int):
    h = h_for_prime(p)
    assert h * M - 1 == p
    assert passes_serre_congruences(h)
    assert is_prime(p)
    assert p % 2**14 == 2**14 - 1
    for q in (3**7, 5**3, 691):
        assert p % q == q - 1


def test_first_prime_h():
    assert h_for_prime(LEHMER_PRIMES[0]) == 7366218


def test_h_for_prime_rejects_other_residues():
    with pytest.raises(InvalidArgumentError):
        h_for_prime(LEHMER_PRIMES[0] + 2)


def test_h_max_for_limit():
    assert h_max_for_limit(M - 1) == 1
    assert h_max_for_limit(M - 2) == 0
    assert h_max_for_limit(22689242781695999) == 7331


def test_serre_sieve():
    candidates = list(serre_sieve(1, 5000))
    assert candidates
    hs = [c.h for c in candidates]
    assert hs == sorted(hs)
    for c in candidates:
        assert c.passed_filters
        assert c.h % 49 in H_RESIDUES_MOD_49
        assert jacobi(c.h + 1, 23) == 1
        assert is_prime(c.p)


def test_serre_sieve_trace():
    traced = list(serre_sieve(1, 500, trace=True))
    assert [c.h for c in traced] == list(range(1, 501))
    survivors = [c.h for c in traced if c.passed_filters]
    assert survivors == [c.h for c in serre_sieve(1, 500)]
    for c in traced:
        if not c.passed_mod49:
            assert not c.passed_jacobi and not c.passed_primality
        if c.passed_mod49 and not c.passed_jacobi:
            assert jacobi(c.h + 1, 23) != 1


def test_serre_sieve_rejects_h_below_one():
    with pytest.raises(InvalidArgumentError):
        list(serre_sieve(0, 10))


@pytest.mark.parametrize("p", LEHMER_PRIMES)
def test_tau_vanishing_test_on_known_primes(p: int):
    results = tau_vanishing_test(p)
    assert results == {ell: True for ell in SEARCH_ELLS}
    for sp in search_polys():
        pattern = ddf_pattern(reduce_mod(sp.poly, p))
        assert set(pattern) <= {1, 2} and 2 in pattern


def test_tau_vanishing_test_stops_at_first_failure():
    # Any prime satisfying the criteria other than the three hits fails somewhere.
    candidate = next(c for c in serre_sieve(1, 10_000) if c.p not in LEHMER_PRIMES)
    results = tau_vanishing_test(candidate.p)
    assert not all(results.values())
    assert list(results) == list(SEARCH_ELLS)[: len(results)]
    assert list(results.values())[-1] is False


def test_tau_vanishing_test_ramified_prime():
    with pytest.raises(RamifiedPrimeError):
        tau_vanishing_test(11)


def test_scan_chunk():
    result = scan_chunk(7366000, 7366999)
    assert [hit.p for hit in result.hits] == [LEHMER_PRIMES[0]]
    assert result.candidates == len(list(serre_sieve(7366000, 7366999)))


def test_lehmer_scan_below_the_previous_bound():
    assert lehmer_scan(22689242781695999) == []


def test_lehmer_scan_limit_too_large():
    with pytest.raises(OutOfRangeError):
        lehmer_scan(MAX_LIMIT + 1)


def test_tested_candidates_record_splitting():
    candidates = list(tested_candidates(7366000, 7366999))
    assert [c.h for c in candidates if c.is_hit] == [7366218]
    for c in candidates:
        assert c.passed_filters
        assert c.splitting == tau_vanishing_test(c.p)


def test_search_polys_from_a_modified_table(table):
    assert search_polys(table) == search_polys()
    entries = list(table)
    index = next(i for i, e in enumerate(entries) if e.key == (12, 11))
    coeffs = list(entries[index].coeffs)
    coeffs[0] += 1
    entries[index] = TableEntry(k=12, ell=11, coeffs=tuple(coeffs))
    polys = search_polys(entries)
    assert polys[0].poly != search_polys()[0].poly
    assert scan_chunk(7366000, 7366999, polys).hits == []
    with pytest.raises(EntryNotFound):
        search_polys(e for e in table if e.ell != 17)


def test_sieve_density():
    h_max = 10**6
    passed = sum(1 for h in range(1, h_max + 1) if passes_serre_congruences(h))
    expected = h_max * (3 / 49) * (11 / 23)
    assert abs(passed - expected) <= 0.05 * expected
