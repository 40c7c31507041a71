from modrep import ModRep


def test_every_entry_up_to_10000(client: ModRep):
    reports = client.frobenius.consistency_all(prime_max=10_000)
    assert len(reports) == 13
    for report in reports:
        assert report.ok, report.violations
        assert report.checked >= 1200
        assert report.trace_zero_checked > 0


def test_congruences_up_to_10000(client: ModRep):
    assert client.forms.congruence("691", 10_000).ok
    assert client.forms.congruence("125", 10_000).ok
