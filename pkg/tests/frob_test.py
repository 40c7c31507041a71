from collections import defaultdict
from itertools import product

import pytest

from modrep.arith import prime_list
from modrep.cycle_type import CycleType
from modrep.data_model import *
from modrep.exceptions import *
from modrep.forms import tau_residues_at_primes
from modrep.frob import *
from modrep.poly import discriminant


def brute_force_patterns(ell: int):
    """
    Cycle types of every matrix in GL_2(F_ell), grouped by trace and determinant.
    """
    field = FiniteField(ell)
    patterns = defaultdict(set)
    for m in product(range(ell), repeat=4):
        a, b, c, d = m
        det = (a * d - b * c) % ell
        if det == 0:
            continue
        patterns[((a + d) % ell, det)].add(permutation_cycle_type(projective_action(field, m)))
    return patterns


@pytest.mark.parametrize("ell", [11, 13])
def test_predicted_patterns_match_enumeration(ell: int):
    patterns = brute_force_patterns(ell)
    for t in range(ell):
        for d in range(1, ell):
            predicted = predicted_patterns(FrobeniusData(t=t, d=d, ell=ell))
            assert predicted == frozenset(patterns[(t, d)]), (t, d)


def test_predicted_patterns_examples():
    # Trace zero means an involution.
    for d in range(1, 13):
        assert all(ct.is_involutive() for ct in predicted_patterns(FrobeniusData(t=0, d=d, ell=13)))
    # Repeated eigenvalue: scalar or a single fixed point.
    assert predicted_patterns(FrobeniusData(t=2, d=1, ell=11)) == frozenset(
        {CycleType.identity(12), CycleType([1, 11])}
    )


@pytest.mark.parametrize("ell", [3, 5, 7, 11, 13])
def test_pgl2_cycle_types(ell: int):
    counts = enumerate_pgl2_cycle_types(ell)
    assert sum(counts.values()) == ell**3 - ell
    assert counts[CycleType.identity(ell + 1)] == 1
    assert counts[CycleType([1, ell])] == ell**2 - 1
    assert pgl2_trace_zero_count(ell) == ell**2


def test_pgl2_needs_odd_prime():
    with pytest.raises(InvalidArgumentError):
        enumerate_pgl2_cycle_types(9)
    with pytest.raises(InvalidArgumentError):
        pgl2_trace_zero_count(2)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_trace_zero_equivalence(q: int):
    assert trace_zero_criterion_check(q)


@pytest.mark.parametrize("q", [4, 6, 15])
def test_trace_zero_equivalence_bad_q(q: int):
    with pytest.raises(InvalidArgumentError):
        trace_zero_criterion_check(q)


def test_finite_field_of_nine():
    field = FiniteField(9)
    assert field.characteristic == 3 and field.degree == 2
    for a in range(1, 9):
        assert field.mul(a, field.inv(a)) == 1
        assert field.add(a, field.neg(a)) == 0
    assert sum(1 for a in field if field.mul(a, a) == field.neg(1)) == 2
    with pytest.raises(InvalidArgumentError):
        FiniteField(12)


def test_projective_action():
    field = FiniteField(5)
    # x -> 1/x swaps 0 and infinity.
    perm = projective_action(field, (0, 1, 1, 0))
    assert perm[0] == 5 and perm[5] == 0
    assert permutation_cycle_type(perm) == CycleType([1, 1, 2, 2])


def test_observed_pattern(entry_12_11):
    with pytest.raises(InvalidArgumentError):
        observed_pattern(entry_12_11, 11)
    disc = discriminant(entry_12_11.poly)
    p = next(p for p in prime_list(100) if (11 * disc) % p != 0)
    assert observed_pattern(entry_12_11, p).degree == 12


@pytest.mark.parametrize("k, ell", [(12, 11), (12, 13), (16, 17)])
def test_consistency_scan(k: int, ell: int, table):
    from modrep.reptable import get_entry

    entry = get_entry(table, k, ell)
    report = consistency_scan(entry, 1000, tau_residues_at_primes(k, ell, 1000))
    assert report.ok, report.violations
    assert report.checked + len(report.skipped) == len(prime_list(1000))
    assert ell in report.skipped
    assert sum(report.pattern_counts.values()) == report.checked


def test_consistency_report_flags_violations(entry_12_11):
    good = PrimeObservation(p=2, t=0, d=1, pattern=CycleType([2] * 6), splits=True)
    wrong_pattern = PrimeObservation(p=3, t=0, d=1, pattern=CycleType([1, 1, 5, 5]), splits=False)
    report = consistency_report(entry_12_11, 10, [good, wrong_pattern], skipped=[11])
    assert not report.ok
    kinds = sorted((v.p, v.kind) for v in report.violations)
    assert kinds == [(3, ViolationKind.pattern), (3, ViolationKind.trace_zero)]
    assert report.checked == 2
