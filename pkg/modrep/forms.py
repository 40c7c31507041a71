"""
Truncated q-expansions of the level one cusp forms ``Delta_k`` for the weights where the
space of cusp forms is one-dimensional.

Coefficients are kept either as exact integers or as residues modulo some ``m``. Exact
coefficients grow quickly (``tau_22(n)`` has around fifty digits near ``n = 10**5``), so
scans that only need ``tau_k(p) mod ell`` use the residue regime.

>>> from modrep.forms import delta_k, eisenstein
>>> delta = delta_k(12, 6)
>>> [delta[n] for n in range(1, 7)]
[1, -24, 252, -1472, 4830, -6048]
>>> eisenstein(6, 2)[2]
-16632
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .arith import is_prime, mod_pow, prime_list
from .exceptions import (
    CoefficientOutOfRangeError,
    InvalidArgumentError,
    InvalidWeightError,
)

__all__ = [
    "QExpansion",
    "WEIGHTS",
    "eta24",
    "eisenstein",
    "delta_k",
    "delta_k_crt",
    "tau",
    "divisor_sigma",
    "tau_residues_at_primes",
    "congruence_691",
    "congruence_125",
    "nonvanishing_check",
]


WEIGHTS: Dict[int, Tuple[int, int]] = {
    12: (0, 0),
    16: (1, 0),
    18: (0, 1),
    20: (2, 0),
    22: (1, 1),
}
"""
Maps each weight ``k`` to ``(a, b)`` with ``Delta_k = Delta * E4**a * E6**b``.
"""

_INT64_MAX = 2**63 - 1


class QExpansion:
    """
    A power series ``sum c_n q**n`` truncated after ``q**bound``.

    :param coefficients: ``c_0, ..., c_bound``. Missing trailing coefficients are zero.
    :param bound: The truncation bound ``B``.
    :param modulus: If given, coefficients are residues in ``[0, modulus)``.
    :param weight: The weight of the modular form this expands, if any.
    """

    __slots__ = ("_coeffs", "bound", "modulus", "weight")

    def __init__(
        self,
        coefficients: Union[Sequence[int], np.ndarray],
        bound: int,
        modulus: Optional[int] = None,
        weight: Optional[int] = None,
    ):
        if bound < 0:
            raise InvalidArgumentError(f"truncation bound must be non-negative, got {bound}")
        if modulus is not None and modulus < 2:
            raise InvalidArgumentError(f"coefficient modulus must be at least 2, got {modulus}")
        self.bound = bound
        self.modulus = modulus
        self.weight = weight
        if modulus is None:
            coeffs = [int(c) for c in list(coefficients)[: bound + 1]]
            coeffs.extend([0] * (bound + 1 - len(coeffs)))
            self._coeffs: Union[List[int], np.ndarray] = coeffs
        else:
            arr = np.zeros(bound + 1, dtype=np.int64)
            src = np.asarray(
                [int(c) % modulus for c in list(coefficients)[: bound + 1]], dtype=np.int64
            )
            arr[: len(src)] = src
            self._coeffs = arr

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def coefficient(self, n: int) -> int:
        """
        The coefficient of ``q**n``.

        :raises CoefficientOutOfRangeError: If ``n`` is negative or above the truncation bound.
        """
        if n < 0 or n > self.bound:
            raise CoefficientOutOfRangeError(
                f"coefficient {n} requested from an expansion truncated at q^{self.bound}"
            )
        return int(self._coeffs[n])

    __getitem__ = coefficient

    def coefficients(self) -> List[int]:
        return [int(c) for c in self._coeffs]

    def __len__(self) -> int:
        return self.bound + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QExpansion):
            return NotImplemented
        return (
            self.bound == other.bound
            and self.modulus == other.modulus
            and self.coefficients() == other.coefficients()
        )

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coefficients()[:6])
        more = ", ..." if self.bound >= 6 else ""
        mod = f", modulus={self.modulus}" if self.modulus is not None else ""
        return f"QExpansion([{head}{more}], bound={self.bound}{mod})"

    def _check(self, other: "QExpansion") -> int:
        if self.modulus != other.modulus:
            raise InvalidArgumentError(
                f"can't combine expansions with moduli {self.modulus} and {other.modulus}"
            )
        return min(self.bound, other.bound)

    def reduce(self, modulus: int) -> "QExpansion":
        """
        Reduce the coefficients modulo ``modulus``. A residue expansion can only be reduced
        to a divisor of its own modulus.
        """
        if self.modulus is not None and self.modulus % modulus != 0:
            raise InvalidArgumentError(
                f"can't reduce residues modulo {self.modulus} to residues modulo {modulus}"
            )
        return QExpansion(self.coefficients(), self.bound, modulus=modulus, weight=self.weight)

    def truncate(self, bound: int) -> "QExpansion":
        if bound > self.bound:
            raise CoefficientOutOfRangeError(
                f"can't extend an expansion truncated at q^{self.bound} to q^{bound}"
            )
        return QExpansion(self.coefficients()[: bound + 1], bound, self.modulus, self.weight)

    def __add__(self, other: "QExpansion") -> "QExpansion":
        bound = self._check(other)
        a, b = self.coefficients(), other.coefficients()
        return QExpansion([a[i] + b[i] for i in range(bound + 1)], bound, self.modulus)

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        bound = self._check(other)
        a, b = self.coefficients(), other.coefficients()
        return QExpansion([a[i] - b[i] for i in range(bound + 1)], bound, self.modulus)

    def scale(self, c: int) -> "QExpansion":
        return QExpansion([c * a for a in self.coefficients()], self.bound, self.modulus)

    def __mul__(self, other: "QExpansion") -> "QExpansion":
        bound = self._check(other)
        if self.modulus is None:
            prod = _mul_exact(self.coefficients(), other.coefficients(), bound)
            return QExpansion(prod, bound)
        return QExpansion(
            _mul_residue(
                np.asarray(self._coeffs[: bound + 1]),
                np.asarray(other._coeffs[: bound + 1]),
                bound,
                self.modulus,
            ),
            bound,
            self.modulus,
        )

    def __pow__(self, e: int) -> "QExpansion":
        if e < 0:
            raise InvalidArgumentError(f"exponent must be non-negative, got {e}")
        result = QExpansion([1], self.bound, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


def _mul_exact(a: Sequence[int], b: Sequence[int], bound: int) -> List[int]:
    out = [0] * (bound + 1)
    for i, ai in enumerate(a[: bound + 1]):
        if ai:
            for j in range(bound + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def _residue_fits(modulus: int, bound: int) -> bool:
    return (modulus - 1) ** 2 * (bound + 1) <= _INT64_MAX


def _mul_residue(a: np.ndarray, b: np.ndarray, bound: int, modulus: int) -> np.ndarray:
    if not _residue_fits(modulus, bound):
        prod = _mul_exact([int(x) for x in a], [int(x) for x in b], bound)
        return np.asarray([c % modulus for c in prod], dtype=np.int64)
    return np.convolve(a, b)[: bound + 1] % modulus


def _sparse_square(terms: Sequence[Tuple[int, int]], bound: int) -> List[int]:
    out = [0] * (bound + 1)
    for i, (ei, ci) in enumerate(terms):
        if 2 * ei <= bound:
            out[2 * ei] += ci * ci
        for ej, cj in terms[i + 1 :]:
            if ei + ej > bound:
                break
            out[ei + ej] += 2 * ci * cj
    return out


def _euler_cube_terms(bound: int) -> List[Tuple[int, int]]:
    # prod (1 - q^n)^3 = sum_{n >= 0} (-1)^n (2n + 1) q^(n(n+1)/2)
    terms = []
    n = 0
    while n * (n + 1) // 2 <= bound:
        terms.append((n * (n + 1) // 2, (-1) ** n * (2 * n + 1)))
        n += 1
    return terms


def eta24(bound: int, modulus: Optional[int] = None) -> QExpansion:
    """
    ``Delta = q * prod_{n >= 1} (1 - q**n)**24`` truncated after ``q**bound``.

    The cube of the Euler product is sparse, so it is squared term by term; the two
    remaining squarings are dense.

    :raises InvalidArgumentError: If ``bound < 1``.
    """
    if bound < 1:
        raise InvalidArgumentError(f"truncation bound must be at least 1, got {bound}")
    inner = bound - 1
    sixth = QExpansion(_sparse_square(_euler_cube_terms(inner), inner), inner, modulus)
    twelfth = sixth * sixth
    product = twelfth * twelfth
    return QExpansion([0] + product.coefficients(), bound, modulus, weight=12)


def divisor_sigma(r: int, bound: int, modulus: Optional[int] = None) -> List[int]:
    """
    ``sigma_r(n) = sum_{d | n} d**r`` for ``0 <= n <= bound``, with ``sigma_r(0) = 0``.
    """
    if modulus is None:
        sigma = [0] * (bound + 1)
        for d in range(1, bound + 1):
            dr = d**r
            for multiple in range(d, bound + 1, d):
                sigma[multiple] += dr
        return sigma
    sig = np.zeros(bound + 1, dtype=np.int64)
    for d in range(1, bound + 1):
        sig[d::d] = (sig[d::d] + mod_pow(d, r, modulus)) % modulus
    return [int(s) for s in sig]


def eisenstein(weight: int, bound: int, modulus: Optional[int] = None) -> QExpansion:
    """
    The normalized Eisenstein series ``E4 = 1 + 240 sum sigma_3(n) q**n`` or
    ``E6 = 1 - 504 sum sigma_5(n) q**n``.

    :raises InvalidWeightError: If ``weight`` is not 4 or 6.
    """
    if weight == 4:
        factor, r = 240, 3
    elif weight == 6:
        factor, r = -504, 5
    else:
        raise InvalidWeightError(
            f"Eisenstein series are provided for weights 4 and 6, got {weight}"
        )
    if bound < 1:
        raise InvalidArgumentError(f"truncation bound must be at least 1, got {bound}")
    sigma = divisor_sigma(r, bound, modulus)
    coeffs = [1] + [factor * s for s in sigma[1:]]
    return QExpansion(coeffs, bound, modulus, weight=weight)


def _check_weight(k: int) -> Tuple[int, int]:
    try:
        return WEIGHTS[k]
    except KeyError:
        raise InvalidWeightError(
            f"weight {k} is not one of {sorted(WEIGHTS)}, the weights with a single "
            "normalized level one cusp form"
        )


def delta_k(k: int, bound: int, modulus: Optional[int] = None) -> QExpansion:
    """
    The normalized cusp form ``Delta_k = Delta * E4**a * E6**b`` of level one and weight
    ``k`` truncated after ``q**bound``.

    :param k: One of 12, 16, 18, 20, 22.
    :param bound: The truncation bound.
    :param modulus: Compute residues modulo this instead of exact integers.

    :raises InvalidWeightError: If ``k`` is not a supported weight.
    """
    a, b = _check_weight(k)
    result = eta24(bound, modulus)
    if a:
        result = result * eisenstein(4, bound, modulus) ** a
    if b:
        result = result * eisenstein(6, bound, modulus) ** b
    return QExpansion(result.coefficients(), bound, modulus, weight=k)

def delta_k_crt(k: int, bound: int) -> QExpansion:
    """
    Exact coefficients of ``Delta_k`` up to ``q**bound``, assembled by the Chinese remainder
    theorem from residue expansions modulo a few primes.

    Deligne's bound ``|tau_k(n)| <= d(n) n**((k-1)/2) < n**((k+2)/2)`` fixes how many primes
    are needed. This is much faster than :func:`delta_k` with exact integers once ``bound``
    is in the thousands.

    >>> delta_k_crt(12, 6) == delta_k(12, 6)
    True
    """
    _check_weight(k)
    if bound < 1:
        raise InvalidArgumentError(f"truncation bound must be at least 1, got {bound}")
    limit = 2 * bound ** ((k + 2) // 2) + 1
    first = _safe_prime_moduli(bound, 1)[0]
    moduli = _safe_prime_moduli(bound, limit.bit_length() // (first.bit_length() - 1) + 1)
    values = [0] * (bound + 1)
    product = 1
    for m in moduli:
        residues = delta_k(k, bound, m).coefficients()
        inverse = pow(product % m, -1, m)
        for n in range(bound + 1):
            values[n] += product * ((residues[n] - values[n]) * inverse % m)
        product *= m
    half = product // 2
    return QExpansion([v - product if v > half else v for v in values], bound, weight=k)



def tau(
    k: int,
    n: int,
    expansion: Optional[QExpansion] = None,
    modulus: Optional[int] = None,
) -> int:
    """
    The coefficient ``tau_k(n)`` of ``Delta_k``, or its residue.

    :param expansion: A precomputed expansion of ``Delta_k``. One truncated at ``n`` is
        computed if this isn't given.

    :raises CoefficientOutOfRangeError: If ``n`` is beyond the truncation bound of
        ``expansion`` or below 1.
    """
    _check_weight(k)
    if n < 1:
        raise CoefficientOutOfRangeError(f"tau_k(n) is defined for n >= 1, got {n}")
    if expansion is None:
        expansion = delta_k(k, n, modulus)
    elif expansion.weight is not None and expansion.weight != k:
        raise InvalidArgumentError(
            f"expansion has weight {expansion.weight}, but tau_{k} was requested"
        )
    return expansion.coefficient(n)


def tau_residues_at_primes(k: int, modulus: int, prime_max: int) -> Dict[int, int]:
    """
    ``{p: tau_k(p) mod modulus}`` for every prime ``p <= prime_max``.
    """
    expansion = delta_k(k, max(prime_max, 1), modulus)
    return {p: expansion[p] for p in prime_list(prime_max)}


def congruence_691(prime_max: int) -> Tuple[List[int], List[int]]:
    """
    Test ``tau(p) = 1 + p**11 (mod 691)`` at every prime ``p <= prime_max``.

    :returns: The checked primes and the primes where the congruence fails.
    """
    residues = tau_residues_at_primes(12, 691, prime_max)
    failures = [p for p, t in residues.items() if t != (1 + mod_pow(p, 11, 691)) % 691]
    return sorted(residues), failures


def congruence_125(prime_max: int) -> Tuple[List[int], List[int], List[int]]:
    """
    Test ``tau(p) = p**41 + p**70 (mod 125)`` at every prime ``p <= prime_max`` other
    than 5, where the congruence says nothing.

    :returns: The checked primes, the failures, and the untested primes.
    """
    residues = tau_residues_at_primes(12, 125, prime_max)
    checked = [p for p in sorted(residues) if p != 5]
    untested = [p for p in sorted(residues) if p == 5]
    failures = [
        p
        for p in checked
        if residues[p] != (mod_pow(p, 41, 125) + mod_pow(p, 70, 125)) % 125
    ]
    return checked, failures, untested


def _safe_prime_moduli(bound: int, count: int) -> List[int]:
    limit = 2
    while _residue_fits(2 * limit, bound):
        limit *= 2
    moduli: List[int] = []
    candidate = limit - 1
    while len(moduli) < count and candidate > 2:
        if is_prime(candidate):
            moduli.append(candidate)
        candidate -= 2 if candidate % 2 else 1
    return moduli


def nonvanishing_check(bound: int, moduli: Optional[Iterable[int]] = None) -> List[int]:
    """
    Find every ``1 <= n <= bound`` with ``tau(n) == 0``.

    A nonzero residue modulo anything proves ``tau(n) != 0``, so residues modulo a few
    large primes settle almost every ``n``; whatever survives is decided exactly.

    :returns: The ``n`` with ``tau(n) == 0`` (Lehmer's conjecture predicts none).
    """
    if bound < 1:
        raise InvalidArgumentError(f"bound must be at least 1, got {bound}")
    unresolved = list(range(1, bound + 1))
    for m in moduli if moduli is not None else _safe_prime_moduli(bound, 3):
        expansion = delta_k(12, bound, m)
        unresolved = [n for n in unresolved if expansion[n] == 0]
        if not unresolved:
            return []
    exact = delta_k(12, unresolved[-1])
    return [n for n in unresolved if exact[n] == 0]
