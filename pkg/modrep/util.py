import json
import warnings
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Any, Dict, Iterator, List, Set, Tuple, Type, Union

from .aliases import PathOrStr
from .exceptions import InvalidArgumentError

BUG_REPORT_URL = "https://github.com/modrep/modrep-py/issues/new"

_VALIDATION_WARNINGS_ISSUED: Set[Tuple[str, str]] = set()


def issue_data_model_warning(cls: Type, key: str, value: Any):
    warn_about = (cls.__name__, key)
    if warn_about not in _VALIDATION_WARNINGS_ISSUED:
        _VALIDATION_WARNINGS_ISSUED.add(warn_about)
        warnings.warn(
            f"Found unknown field '{key}: {value}' for data model '{cls.__name__}'. "
            "It will be ignored. If the record was written by a newer version of modrep, "
            f"please upgrade, otherwise report it here:\n{BUG_REPORT_URL}",
            RuntimeWarning,
        )


def parse_limit(value: Union[str, int]) -> int:
    """
    Parse a bound given as an integer, with optional underscores, or in scientific
    notation with a decimal mantissa. The result is exact.

    >>> parse_limit("1e20")
    100000000000000000000
    >>> parse_limit("2.2689e16")
    22689000000000000
    >>> parse_limit("10_000")
    10000

    :raises InvalidArgumentError: If the value isn't a positive integer.
    """
    if isinstance(value, int):
        n = value
    else:
        text = value.strip().replace("_", "")
        try:
            number = Decimal(text)
        except InvalidOperation:
            raise InvalidArgumentError(f"invalid limit '{value}'")
        if not number.is_finite() or number != number.to_integral_value():
            raise InvalidArgumentError(f"limit '{value}' is not an integer")
        n = int(number)
    if n < 1:
        raise InvalidArgumentError(f"limit must be positive, got {value}")
    return n


def chunk_ranges(lo: int, hi: int, size: int) -> Iterator[Tuple[int, int]]:
    """
    Split the inclusive range ``[lo, hi]`` into consecutive inclusive ranges of at most
    ``size`` integers, aligned to multiples of ``size``.

    Boundaries depend only on ``size``, so two scans over overlapping ranges agree on
    their shared chunks.

    >>> list(chunk_ranges(1, 25, 10))
    [(1, 9), (10, 19), (20, 25)]
    """
    if size < 1:
        raise InvalidArgumentError(f"chunk size must be positive, got {size}")
    start = lo
    while start <= hi:
        end = min(hi, (start // size + 1) * size - 1)
        yield start, end
        start = end + 1


def to_json_line(record: Dict[str, Any]) -> str:
    return json.dumps(record, separators=(",", ":"))


def read_json_lines(path: PathOrStr) -> List[Dict[str, Any]]:
    """
    Read every record of a JSON Lines file. A trailing partial line, as left behind by an
    interrupted writer, is dropped.
    """
    records = []
    with Path(path).open() as f:
        for line in f:
            if not line.endswith("\n"):
                break
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records
