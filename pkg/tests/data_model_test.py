import pytest

from modrep.data_model import *
from modrep.exceptions import ValidationError
from modrep.util import to_json_line


def test_table_entry_json_uses_strings_for_coefficients(entry_12_11):
    data = entry_12_11.to_json()
    assert data["coeffs"][0] == "-111"
    assert TableEntry.from_json(data) == entry_12_11


def test_table_entry_is_frozen(entry_12_11):
    with pytest.raises(ValidationError):
        entry_12_11.k = 16  # type: ignore


@pytest.mark.parametrize(
    "k, ell, change, message",
    [
        (12, 11, lambda c: c[:-1], "must have degree 12"),
        (12, 11, lambda c: c[:-1] + [2], "must be monic"),
        (12, 15, lambda c: c + [0, 1], "not a prime"),
    ],
    ids=["degree", "monic", "ell"],
)
def test_table_entry_shape_is_validated(entry_12_11, k, ell, change, message):
    coeffs = change(list(entry_12_11.coeffs))
    with pytest.raises(ValidationError, match=message):
        TableEntry(k=k, ell=ell, coeffs=tuple(coeffs))


def test_unknown_fields_warn():
    with pytest.warns(RuntimeWarning, match="Found unknown field 'colour"):
        TauValue.from_json({"k": 12, "n": 2, "tau": "-24", "colour": "blue"})


def test_tau_value_json_line():
    value = TauValue(k=12, n=2, tau=-24)
    assert to_json_line(value.to_json()) == '{"k":12,"n":2,"tau":"-24"}'
    assert TauValue.from_json(value.to_json()) == value


def test_frobenius_data():
    fd = FrobeniusData.from_tau(-24, 2, 12, 11)
    assert (fd.t, fd.d) == (9, 2)
    assert fd.discriminant == (81 - 8) % 11
    with pytest.raises(ValidationError, match="unit"):
        FrobeniusData(t=0, d=0, ell=11)
    with pytest.raises(ValidationError, match="reduced"):
        FrobeniusData(t=11, d=1, ell=11)


def test_lehmer_records():
    hit = LehmerHit(h=7366218, p="22798241520242687999")
    assert hit.p == 22798241520242687999
    assert to_json_line(hit.to_json()) == (
        '{"type":"hit","h":7366218,"p":"22798241520242687999","ells":[11,13,17,19]}'
    )
    progress = LehmerProgress(h_done=1_000_000)
    assert to_json_line(progress.to_json()) == '{"type":"progress","h_done":1000000}'


def test_candidate_validation():
    h = 7366218
    candidate = Candidate(
        h=h,
        p=h * M - 1,
        passed_mod49=True,
        passed_jacobi=True,
        passed_primality=True,
        splitting={11: True, 13: True, 17: True, 19: True},
    )
    assert candidate.passed_filters and candidate.is_hit
    with pytest.raises(ValidationError, match="h\\*M - 1"):
        Candidate(h=h, p=h * M + 1, passed_mod49=True, passed_jacobi=True, passed_primality=True)
    with pytest.raises(ValidationError, match="splitting"):
        Candidate(
            h=h,
            p=h * M - 1,
            passed_mod49=True,
            passed_jacobi=False,
            passed_primality=False,
            splitting={11: True},
        )


def test_run_config_validation():
    common = dict(prime_max=10, workers=1, chebotarev_bound=10, witness_bound=10, sigma=4.0)
    run = RunConfig(command="lehmer", limit=10**20, **common)
    assert run.command == Command.lehmer
    with pytest.raises(ValidationError):
        RunConfig(command="lehmer", **{**common, "workers": 0})
    with pytest.raises(ValidationError):
        RunConfig(command="lehmer", limit=-1, **common)
    with pytest.raises(ValidationError):
        RunConfig(command="nope", **common)


def test_reports_ok():
    assert CongruenceReport(check="691", prime_max=10, checked=4, failures=[], untested=[]).ok
    assert not NonvanishingReport(bound=10, zeros=[7]).ok
    report = ConsistencyReport(
        k=12,
        ell=11,
        prime_max=10,
        checked=3,
        skipped=[11],
        trace_zero_checked=3,
        violations=[],
        pattern_counts={},
    )
    assert report.ok
