from pathlib import Path

import pytest

from modrep.client import ModRep
from modrep.exceptions import InvalidArgumentError
from modrep.services.service_client import ServiceClient, batches
from modrep.util import *


@pytest.mark.parametrize(
    "text, value",
    [
        ("1e20", 10**20),
        ("2.28e19", 22800000000000000000),
        ("2.2689e16", 22689000000000000),
        ("10_000", 10_000),
        ("12345678901234567890123", 12345678901234567890123),
        (17, 17),
    ],
)
def test_parse_limit(text, value: int):
    assert parse_limit(text) == value


@pytest.mark.parametrize("text", ["1.5", "abc", "-3", "0", "1e-3", "inf"])
def test_parse_limit_errors(text: str):
    with pytest.raises(InvalidArgumentError):
        parse_limit(text)


def test_chunk_ranges():
    assert list(chunk_ranges(1, 25, 10)) == [(1, 9), (10, 19), (20, 25)]
    assert list(chunk_ranges(15, 19, 10)) == [(15, 19)]
    assert list(chunk_ranges(5, 4, 10)) == []
    with pytest.raises(InvalidArgumentError):
        list(chunk_ranges(1, 10, 0))


def test_chunk_ranges_are_aligned():
    # A range starting in the middle shares every later chunk with one starting at 1.
    full = list(chunk_ranges(1, 100, 7))
    tail = list(chunk_ranges(29, 100, 7))
    assert tail[1:] == full[-len(tail) + 1 :]


def test_read_json_lines_drops_partial_line(tmp_path: Path):
    path = tmp_path / "records.jsonl"
    path.write_text('{"a":1}\n{"b":2}\n{"c":')
    assert read_json_lines(path) == [{"a": 1}, {"b": 2}]


def test_batches():
    assert batches([1, 2, 3, 4, 5], 2) == [[1, 2], [3, 4], [5]]
    assert batches([], 3) == []


def _square(x: int) -> int:
    return x * x


@pytest.mark.parametrize("workers", [1, 3])
def test_ordered_map_keeps_task_order(client: ModRep, workers: int):
    service = ServiceClient(client)
    tasks = [(i,) for i in range(20)]
    assert list(service.ordered_map(_square, tasks, workers=workers)) == [i * i for i in range(20)]
