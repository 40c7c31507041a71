import io
from pathlib import Path
from typing import List

from modrep import Config, ModRep
from modrep.cli import main

FIRST_PRIME = 22798241520242687999
ALL_PRIMES = [22798241520242687999, 60707199950936063999, 93433753964906495999]


def scan_lines(client: ModRep, limit: str, checkpoint=None) -> List[str]:
    lines: List[str] = []
    client.lehmer.scan(limit, checkpoint=checkpoint, emit=lines.append, quiet=True)
    return lines


def test_first_prime(client: ModRep):
    assert client.lehmer.primes("2.28e19") == [FIRST_PRIME]


def test_all_primes_up_to_1e20():
    client = ModRep(Config(workers=4))
    assert client.lehmer.primes("1e20") == ALL_PRIMES


def test_output_is_independent_of_workers():
    one = scan_lines(ModRep(Config(workers=1, checkpoint_interval=100_000)), "2.28e19")
    four = scan_lines(ModRep(Config(workers=4, checkpoint_interval=100_000)), "2.28e19")
    assert one == four
    assert one[-2] == '{"type":"hit","h":7366218,"p":"22798241520242687999","ells":[11,13,17,19]}'
    assert one[-1] == '{"type":"progress","h_done":7366786}'


def test_interrupted_cli_run_resumes(tmp_path: Path):
    checkpoint = tmp_path / "checkpoint.jsonl"
    expected = io.StringIO()
    assert main(["lehmer", "--limit", "2.28e19", "--workers", "4", "--quiet"], out=expected) == 0

    full = expected.getvalue().splitlines()
    checkpoint.write_text("\n".join(full[:3]) + "\n" + full[3][:10])
    resumed = io.StringIO()
    code = main(
        ["lehmer", "--limit", "2.28e19", "--checkpoint", str(checkpoint), "--quiet"],
        out=resumed,
    )
    assert code == 0
    assert resumed.getvalue() == expected.getvalue()
    assert checkpoint.read_text() == expected.getvalue()
