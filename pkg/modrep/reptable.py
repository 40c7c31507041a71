"""
The polynomials ``P_{k,ell}`` cutting out the projective mod ``ell`` representations
attached to the level one cusp forms ``Delta_k``, and the text format they are stored in.

The format is one record per polynomial::

    # comment
    entry k=12 ell=11
    coeffs = -111, -41, 99, -55, -165, 330, -341, 264, -165, 55, 0, -4, 1

Coefficients are decimal integers in ascending degree order and may continue over any
number of following lines. ``#`` starts a comment anywhere on a line.

>>> from modrep.reptable import builtin_table, get_entry
>>> len(builtin_table())
13
>>> get_entry(builtin_table(), 22, 23).coeffs[0]
2786655204876088
"""

import re
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .aliases import PathOrStr
from .arith import is_prime
from .data_model.table import TableEntry
from .exceptions import (
    CompositeEllError,
    DegreeMismatchError,
    EntryNotFound,
    NonMonicEntryError,
    TableSyntaxError,
    UnknownEntryError,
)

__all__ = [
    "KNOWN_PAIRS",
    "BUILTIN_TABLE_TEXT",
    "builtin_table",
    "parse_table",
    "serialize_table",
    "load_table",
    "get_entry",
]


KNOWN_PAIRS: Tuple[Tuple[int, int], ...] = (
    (12, 11),
    (12, 13),
    (12, 17),
    (12, 19),
    (16, 17),
    (16, 19),
    (16, 23),
    (18, 17),
    (18, 19),
    (18, 23),
    (20, 19),
    (20, 23),
    (22, 23),
)
"""
Every ``(k, ell)`` with a polynomial in the table.
"""

BUILTIN_TABLE_TEXT = """\
# Polynomials belonging to projective modular representations of level one.

entry k=12 ell=11
coeffs = -111, -41, 99, -55, -165, 330, -341, 264, -165, 55, 0, -4, 1

entry k=12 ell=13
coeffs = -215, 506, 169, -2223, 312, 2561, 494, -1248, -702, 52, 169, 78, 26, 7, 1

entry k=12 ell=17
coeffs = 3707, -19773, 47583, -50660, -17323, 134793, -211803, 192355, -111469,
    37468, -1105, -7225, 5355, -2516, 884, -238, 51, -9, 1

entry k=12 ell=19
coeffs = -8055, -31323, -47443, -17841, 30020, 37240, 16340, -11096, -19266, 152,
    6517, -1425, -798, 1121, 114, -380, -38, 76, 0, -7, 1

entry k=16 ell=17
coeffs = -378241, 606768, -1315239, 946288, 455804, -206074, -280041, 95982, 19465,
    -38794, -3672, 5950, 3655, -1904, 204, -17, 0, -2, 1

entry k=16 ell=19
coeffs = -5271039, 6555150, 2406692, -2826364, -3129300, 1074203, 3225611,
    -1219781, -1041219, 75848, -93252, -4902, 130359, 84018, 20444, 4389, 950, 38, 57,
    1, 1

entry k=16 ell=23
coeffs = 55431347, 252536071, 484510019, 438371490, 41851168, -357303183,
    -397878081, -158103380, 60172945, 106722024, 52203054, 2669403, -10740931,
    -6156732, -1208328, 308798, 255599, 59639, 1058, -1886, -138, 115, 46, 9, 1

entry k=18 ell=17
coeffs = 113422599, -141466230, 184016925, -94452714, 45030739, 2916112, -3955645,
    6132223, -390014, 291686, 192780, -41463, 9231, 799, -935, 17, 17, -7, 1

entry k=18 ell=19
coeffs = -8632629109, 1251488657, 2205335301, -1823516526, -1508120801, 593881632,
    95548948, -208954438, 7667184, 13416014, 1629212, -1138233, -333526, 88749, 23446,
    -3420, -361, 228, 57, 10, 1

entry k=18 ell=23
coeffs = 97228856961, -93742087853, 237109280887, -171471034142, 157585411007,
    -92316759105, 33911401963, -9923877597, 596464566, 545807411, -194471417, 57434887,
    59547, -7507476, 2196684, -349853, 96715, 18262, -6739, -483, -345, -69, 23, 0, 1

entry k=20 ell=19
coeffs = 31141888, -538817408, -54940704, -588303992, 8889264, -245996344,
    45895165, -48001353, 20865344, -5756183, 3851661, -787322, 325793, -112347, 15561,
    -8474, 1197, -247, 76, -5, 1

entry k=20 ell=23
coeffs = 314072259618, 1500432519809, 1055509532423, 1139040818642, 176888550627,
    -193255204370, -227855922888, -111605931055, -19169464149, 8576048755, 8319918708,
    3479009049, 1087723107, 282546237, 66851616, 13281488, 1855180, 96508, -22448,
    -5543, -667, -184, -23, -1, 1

entry k=22 ell=23
coeffs = 2786655204876088, -1021047515459130, -228822955123883, 185843346182048,
    -25203414653024, -10606348053144, 4199550444457, -88695572727, -244688866763,
    48774919226, 4265317961, -2612466661, 109304533, 99341324, -16380692, -2490371,
    1170700, -140737, -7222, 6555, -1127, 0, 46, -11, 1
"""

_ENTRY_RE = re.compile(r"^entry\s+k\s*=\s*([+-]?\d+)\s+ell\s*=\s*([+-]?\d+)$")
_COEFFS_RE = re.compile(r"^coeffs\s*=(.*)$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _validate(k: int, ell: int, coeffs: Sequence[int], line: int) -> TableEntry:
    if ell < 2 or not is_prime(ell):
        raise CompositeEllError(f"ell={ell} is not a prime", line)
    if (k, ell) not in KNOWN_PAIRS:
        raise UnknownEntryError(f"(k, ell) = ({k}, {ell}) is not a tabulated pair", line)
    if len(coeffs) - 1 != ell + 1:
        raise DegreeMismatchError(
            f"P_{{{k},{ell}}} must have degree {ell + 1}, got {len(coeffs) - 1}", line
        )
    if coeffs[-1] != 1:
        raise NonMonicEntryError(
            f"P_{{{k},{ell}}} must be monic, got leading coefficient {coeffs[-1]}", line
        )
    return TableEntry(k=k, ell=ell, coeffs=tuple(coeffs))


def _parse_coeffs(text: str, line: int) -> List[int]:
    tokens = [token.strip() for token in text.split(",")]
    if tokens and tokens[-1] == "":
        # Continuation lines may leave a trailing comma at a line break.
        tokens.pop()
    coeffs = []
    for token in tokens:
        if not _INT_RE.match(token):
            raise TableSyntaxError(f"invalid coefficient '{token}'", line)
        coeffs.append(int(token))
    return coeffs


def parse_table(text: str) -> List[TableEntry]:
    """
    Parse polynomial table text.

    :raises TableSyntaxError: If the text doesn't follow the format, or an entry repeats.
    :raises CompositeEllError: If an entry's ``ell`` isn't prime.
    :raises UnknownEntryError: If an entry's ``(k, ell)`` isn't a tabulated pair.
    :raises DegreeMismatchError: If a polynomial doesn't have degree ``ell + 1``.
    :raises NonMonicEntryError: If a polynomial isn't monic.
    """
    entries: List[TableEntry] = []
    seen = set()
    header: Optional[Tuple[int, int, int]] = None
    coeff_text: Optional[str] = None
    coeff_line = 0

    def finish():
        if header is None:
            return
        k, ell, line = header
        if coeff_text is None:
            raise TableSyntaxError(f"entry k={k} ell={ell} has no 'coeffs' line", line)
        if (k, ell) in seen:
            raise TableSyntaxError(f"duplicate entry k={k} ell={ell}", line)
        seen.add((k, ell))
        entries.append(_validate(k, ell, _parse_coeffs(coeff_text, coeff_line), line))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        entry_match = _ENTRY_RE.match(line)
        if entry_match is not None:
            finish()
            header = (int(entry_match.group(1)), int(entry_match.group(2)), lineno)
            coeff_text = None
            continue
        coeffs_match = _COEFFS_RE.match(line)
        if coeffs_match is not None:
            if header is None:
                raise TableSyntaxError("'coeffs' line outside of an entry", lineno)
            if coeff_text is not None:
                raise TableSyntaxError("repeated 'coeffs' line", lineno)
            coeff_text, coeff_line = coeffs_match.group(1), lineno
            continue
        if coeff_text is None:
            raise TableSyntaxError(f"unexpected line '{line}'", lineno)
        joined = coeff_text.rstrip()
        sep = "" if not joined or joined.endswith(",") or line.startswith(",") else ","
        coeff_text = joined + sep + line
    finish()
    return entries


def serialize_table(entries: Iterable[TableEntry], width: int = 88) -> str:
    """
    Write entries in the format read by :func:`parse_table`.
    """
    blocks = []
    for entry in entries:
        lines = [f"entry k={entry.k} ell={entry.ell}"]
        current = "coeffs ="
        for i, c in enumerate(entry.coeffs):
            token = f" {c}" + ("," if i < len(entry.coeffs) - 1 else "")
            if len(current) + len(token) > width:
                lines.append(current)
                current = "   "
            current += token
        lines.append(current)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


@lru_cache(maxsize=None)
def _builtin() -> Tuple[TableEntry, ...]:
    entries = parse_table(BUILTIN_TABLE_TEXT)
    pairs = tuple(entry.key for entry in entries)
    if pairs != KNOWN_PAIRS:
        raise UnknownEntryError(f"built-in table holds {pairs}, expected {KNOWN_PAIRS}")
    return tuple(entries)


def builtin_table() -> List[TableEntry]:
    """
    The thirteen tabulated polynomials, ordered by ``(k, ell)``.
    """
    return list(_builtin())


def load_table(path: PathOrStr) -> List[TableEntry]:
    with open(path, encoding="utf-8") as f:
        return parse_table(f.read())


def get_entry(entries: Iterable[TableEntry], k: int, ell: int) -> TableEntry:
    """
    :raises EntryNotFound: If no entry has this ``(k, ell)``.
    """
    for entry in entries:
        if entry.key == (k, ell):
            return entry
    raise EntryNotFound(f"no polynomial for (k, ell) = ({k}, {ell})")


# Fail at import if the embedded data is damaged.
_builtin()
