import pytest

from modrep import Config, ModRep


@pytest.mark.parametrize("ell", [11, 13])
def test_frequencies_up_to_100000(ell: int):
    client = ModRep(Config(workers=4))
    check = client.verify.chebotarev((12, ell), 100_000, quiet=True)
    assert check.sample_size > 9000
    assert check.ok, [row for row in check.rows if row.flagged]


def test_verify_full_table():
    client = ModRep(Config(workers=4))
    reports = client.verify.table(chebotarev_bound=20_000, quiet=True)
    assert all(report.discriminant.ok and report.oddness.ok for report in reports)
    assert all(report.irreducibility_witness is not None for report in reports)
