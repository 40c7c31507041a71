import io
import json
from pathlib import Path

import pytest

from modrep.cli import main
from modrep.data_model import TableEntry
from modrep.reptable import builtin_table, serialize_table


def run(*argv: str):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue().splitlines()


def test_tau():
    assert run("tau", "--k", "12", "--n", "1") == (0, ['{"k":12,"n":1,"tau":"1"}'])
    assert run("tau", "--k", "12", "--n", "2") == (0, ['{"k":12,"n":2,"tau":"-24"}'])


def test_tau_at_primes():
    code, lines = run("tau", "--k", "16", "--prime-max", "10")
    assert code == 0
    assert [json.loads(line)["n"] for line in lines] == [2, 3, 5, 7]
    assert json.loads(lines[0])["tau"] == "216"


def test_tau_defaults_to_exact_values_at_primes():
    code, lines = run("tau", "--k", "12", "--quiet")
    assert code == 0
    assert len(lines) == 1229
    first, last = json.loads(lines[0]), json.loads(lines[-1])
    assert (first["n"], first["tau"]) == (2, "-24")
    assert last["n"] == 9973
    assert int(last["tau"]) % 691 == (1 + 9973**11) % 691


def test_tau_beyond_exact_bound():
    code, lines = run("tau", "--k", "12", "--n", "600")
    assert code == 0
    # tau(600) = tau(8) * tau(3) * tau(25)
    assert json.loads(lines[0])["tau"] == str(84480 * 252 * -25499225)


def test_tau_residues():
    code, lines = run("tau", "--n", "10000", "--modulus", "691")
    assert code == 0
    assert json.loads(lines[0])["modulus"] == 691


@pytest.mark.parametrize("check", ["691", "125", "nonzero"])
def test_tau_checks(check: str):
    code, lines = run("tau", "--check", check, "--prime-max", "1000", "--quiet")
    assert code == 0
    assert len(lines) == 1


def test_tau_usage_errors():
    assert run("tau", "--k", "14", "--n", "2")[0] == 2
    assert run("tau", "--n", "0")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_consistency():
    code, lines = run("consistency", "--k", "12", "--ell", "13", "--prime-max", "500", "--quiet")
    assert code == 0
    report = json.loads(lines[0])
    assert (report["k"], report["ell"]) == (12, 13)
    assert report["violations"] == []


def test_consistency_unknown_entry():
    assert run("consistency", "--k", "12", "--ell", "23", "--prime-max", "100")[0] == 2


def test_verify_table(table_path: Path):
    code, lines = run(
        "verify-table",
        "--table",
        str(table_path),
        "--witness-bound",
        "1000",
        "--chebotarev-bound",
        "3000",
        "--quiet",
    )
    assert len(lines) == 13
    reports = [json.loads(line) for line in lines]
    assert all(report["chebotarev"]["prime_bound"] == 3000 for report in reports)
    assert all(report["discriminant"]["ok"] for report in reports)
    assert code in (0, 1)


def test_verify_table_corrupted(tmp_path: Path):
    entries = builtin_table()
    coeffs = list(entries[1].coeffs)
    coeffs[3] += 5
    entries[1] = TableEntry(k=12, ell=13, coeffs=tuple(coeffs))
    path = tmp_path / "bad.txt"
    path.write_text(serialize_table(entries))
    code, lines = run("verify-table", "--table", str(path), "--skip-chebotarev", "--quiet")
    assert code == 1
    assert not json.loads(lines[1])["discriminant"]["ok"]


def test_verify_table_malformed(tmp_path: Path):
    path = tmp_path / "bad.txt"
    path.write_text("entry k=12 ell=11\ncoeffs = 1, 2, 3\n")
    code, lines = run("verify-table", "--table", str(path), "--skip-chebotarev")
    assert code == 1
    assert lines == []


def test_lehmer(tmp_path: Path):
    code, lines = run("lehmer", "--limit", "22689242781695999", "--quiet")
    assert code == 0
    assert lines == ['{"type":"progress","h_done":7331}']

    output = tmp_path / "out.jsonl"
    checkpoint = tmp_path / "checkpoint.jsonl"
    code, lines = run(
        "lehmer",
        "--limit",
        "22689242781695999",
        "--checkpoint",
        str(checkpoint),
        "--output",
        str(output),
        "--workers",
        "2",
        "--quiet",
    )
    assert code == 0
    assert lines == []
    assert output.read_text() == '{"type":"progress","h_done":7331}\n'
    assert checkpoint.read_text() == output.read_text()


def test_lehmer_usage_errors():
    assert run("lehmer", "--limit", "1.5")[0] == 2
    assert run("lehmer", "--limit", "1e22")[0] == 2
    assert run("lehmer")[0] == 2


def test_lehmer_uses_the_table_option(tmp_path: Path, table_path: Path):
    entries = builtin_table()
    coeffs = list(entries[0].coeffs)
    coeffs[0] += 1
    entries[0] = TableEntry(k=12, ell=11, coeffs=tuple(coeffs))
    modified = tmp_path / "modified.txt"
    modified.write_text(serialize_table(entries))

    def search(table: Path):
        # Resume just below the first hit so only one short chunk is searched.
        checkpoint = tmp_path / f"{table.stem}.jsonl"
        checkpoint.write_text('{"type":"progress","h_done":7366000}\n')
        limit = "22798241520242687999"
        argv = ["lehmer", "--limit", limit, "--checkpoint", str(checkpoint), "--table", str(table)]
        return run(*argv, "--quiet")

    code, lines = search(table_path)
    assert code == 0
    assert '"h":7366218' in lines[1]
    code, lines = search(modified)
    assert code == 0
    assert lines == [
        '{"type":"progress","h_done":7366000}',
        '{"type":"progress","h_done":7366218}',
    ]


def test_lehmer_malformed_table(tmp_path: Path):
    path = tmp_path / "bad.txt"
    path.write_text("entry k=12 ell=11\ncoeffs = 1, 2, 3\n")
    assert run("lehmer", "--limit", "1e16", "--table", str(path), "--quiet")[0] == 1
