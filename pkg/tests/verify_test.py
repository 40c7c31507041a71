import warnings

import pytest

from modrep.cycle_type import CycleType
from modrep.data_model import *
from modrep.exceptions import InvalidArgumentError
from modrep.frob import enumerate_pgl2_cycle_types
from modrep.poly import IntPoly, discriminant
from modrep.reptable import builtin_table
from modrep.verify import *


@pytest.mark.parametrize("entry", builtin_table(), ids=str)
def test_check_discriminant(entry: TableEntry):
    check = check_discriminant(entry)
    assert check.ok
    assert check.sign == check.expected_sign
    assert check.ell_valuation >= check.expected_exponent
    assert (check.ell_valuation - check.expected_exponent) % 2 == 0
    assert check.cofactor_root is not None and check.cofactor_root > 0
    ell = entry.ell
    assert check.disc == check.expected_sign * ell**check.expected_exponent * check.cofactor_root**2


@pytest.mark.parametrize("entry", builtin_table(), ids=str)
def test_check_not_totally_real(entry: TableEntry):
    check = check_not_totally_real(entry)
    assert check.ok
    assert check.criterion != OddnessCriterion.none


def test_oddness_of_12_13(entry_12_13):
    check = check_not_totally_real(entry_12_13)
    assert check.criterion == OddnessCriterion.top_coefficients
    assert check.top_value == 7**2 - 2 * 26 == -3


def test_oddness_of_12_11_uses_the_discriminant(entry_12_11):
    assert check_not_totally_real(entry_12_11).criterion == OddnessCriterion.negative_discriminant


def test_corrupted_entry_fails_discriminant_check(entry_12_11):
    coeffs = list(entry_12_11.coeffs)
    coeffs[0] -= 1
    bad = TableEntry(k=12, ell=11, coeffs=tuple(coeffs))
    assert not check_discriminant(bad).ok


def test_totally_real_polynomial_has_no_witness_of_oddness():
    # (x - 1)(x - 2)(x + 3)(x + 4) has only real roots.
    roots = [1, 2, -3, -4]
    poly = IntPoly([1])
    for r in roots:
        poly = poly * IntPoly([-r, 1])
    entry = TableEntry.model_construct(k=12, ell=5, coeffs=poly.coeffs)
    check = check_not_totally_real(entry)
    assert not check.ok
    assert check.criterion == OddnessCriterion.none


@pytest.mark.parametrize("entry", builtin_table(), ids=str)
def test_irreducibility_witness(entry: TableEntry):
    p = find_irreducibility_witness(entry, 10_000)
    assert p is not None
    assert p != entry.ell
    assert discriminant(entry.poly) % p != 0


def test_irreducibility_witness_for_reducible_polynomial():
    poly = IntPoly([-1, 0, 1]) * IntPoly([2, 0, 1])
    assert irreducibility_witness(poly, 1000) is None


def test_chebotarev_rows():
    ell = 5
    reference = enumerate_pgl2_cycle_types(ell)
    sample = []
    for cycle_type, count in reference.items():
        sample.extend([cycle_type] * count)
    rows = chebotarev_rows(ell, sample, sigma=4.0)
    assert not any(row.flagged for row in rows)
    assert sum(row.expected_fraction for row in rows) == pytest.approx(1.0)
    for row in rows:
        assert row.observed_count == pytest.approx(row.expected_count)


def test_chebotarev_rows_flag_impossible_pattern():
    sample = [CycleType.identity(6)] * 10 + [CycleType([1, 1, 1, 3])]
    rows = chebotarev_rows(5, sample)
    impossible = [row for row in rows if row.cycle_type == str(CycleType([1, 1, 1, 3]))]
    assert len(impossible) == 1
    assert impossible[0].flagged
    assert impossible[0].expected_fraction == 0
    assert impossible[0].deviation == 1.0


def test_chebotarev_report(entry_12_11):
    with pytest.warns(RuntimeWarning, match="small sample"):
        check = chebotarev_report(entry_12_11, 2000)
    assert check.evidence == "corroboration"
    assert check.prime_bound == 2000
    assert check.sample_size + len(check.skipped) == 303
    assert sum(row.observed_count for row in check.rows) == check.sample_size


def test_verify_entry(entry_12_13):
    report = verify_entry(entry_12_13, witness_bound=1000)
    assert report.ok
    assert report.chebotarev is None
    assert report.irreducibility_witness is not None
    assert report.failed_checks == []


def test_chebotarev_bound(entry_12_11):
    with pytest.raises(InvalidArgumentError):
        chebotarev_report(entry_12_11, 1)
    with pytest.warns(RuntimeWarning):
        check_chebotarev_bound(9999)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        check_chebotarev_bound(10_000)
