"""
Exact integer arithmetic primitives.

Everything here works on Python integers and returns Python integers; :mod:`gmpy2`
does the heavy lifting.

>>> from modrep.arith import mod_pow, jacobi, is_prime
>>> mod_pow(2, 10, 1000)
24
>>> jacobi(31, 23)
1
>>> is_prime(22798241520242687999)
True
"""

import math
from functools import lru_cache
from typing import List, Optional, Tuple

import gmpy2
import numpy as np

from .exceptions import InvalidArgumentError, OutOfRangeError

__all__ = [
    "mod_pow",
    "jacobi",
    "is_prime",
    "perfect_square_root",
    "p_adic_valuation",
    "primes_up_to",
    "prime_list",
    "DETERMINISTIC_PRIME_BOUND",
    "MILLER_RABIN_BASES",
]


MILLER_RABIN_BASES: Tuple[int, ...] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
"""
The first 13 primes. Strong probable-prime tests to all of these bases are a proof of
primality below :data:`DETERMINISTIC_PRIME_BOUND`.
"""

DETERMINISTIC_PRIME_BOUND = 3317044064679887385961981
"""
The least composite that is a strong pseudoprime to every base in :data:`MILLER_RABIN_BASES`.
"""

SMALL_PRIME_BOUND = 10_000


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """
    Compute ``base ** exponent % modulus`` exactly.

    :param base: Any integer, negative values included.
    :param exponent: A non-negative exponent.
    :param modulus: The modulus, at least 2.

    :raises InvalidArgumentError: If ``exponent < 0`` or ``modulus < 2``.
    """
    if exponent < 0:
        raise InvalidArgumentError(f"exponent must be non-negative, got {exponent}")
    if modulus < 2:
        raise InvalidArgumentError(f"modulus must be at least 2, got {modulus}")
    return int(gmpy2.powmod(base, exponent, modulus))


def jacobi(a: int, n: int) -> int:
    """
    The Jacobi symbol ``(a | n)``, one of ``-1``, ``0`` or ``1``.

    :param a: Any integer.
    :param n: A positive odd integer.

    :raises InvalidArgumentError: If ``n`` is even or not positive.
    """
    if n < 1 or n % 2 == 0:
        raise InvalidArgumentError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    return int(gmpy2.jacobi(a, n))


@lru_cache(maxsize=None)
def _small_primes() -> Tuple[int, ...]:
    return tuple(int(p) for p in primes_up_to(SMALL_PRIME_BOUND))


@lru_cache(maxsize=None)
def _small_primorial() -> "gmpy2.mpz":
    return gmpy2.mpz(math.prod(_small_primes()))


def is_prime(n: int) -> bool:
    """
    Decide whether ``n`` is prime.

    Inputs below ``10**8`` are settled by trial division. Larger inputs run strong
    probable-prime tests to the first 13 prime bases followed by a strong Lucas test
    with Selfridge parameters, i.e. a Baillie-PSW test on top of a Miller-Rabin test
    that is deterministic in this range.

    :raises InvalidArgumentError: If ``n`` is negative.
    :raises OutOfRangeError: If ``n`` is at least :data:`DETERMINISTIC_PRIME_BOUND`.
    """
    if n < 0:
        raise InvalidArgumentError(f"primality is only decided for n >= 0, got {n}")
    if n < SMALL_PRIME_BOUND:
        return n in _small_prime_set()
    if gmpy2.gcd(n, _small_primorial()) != 1:
        return False
    if n < SMALL_PRIME_BOUND * SMALL_PRIME_BOUND:
        return True
    if n >= DETERMINISTIC_PRIME_BOUND:
        raise OutOfRangeError(
            f"{n} is beyond the deterministic primality range (< {DETERMINISTIC_PRIME_BOUND})"
        )
    m = gmpy2.mpz(n)
    for a in MILLER_RABIN_BASES:
        if not gmpy2.is_strong_prp(m, a):
            return False
    return bool(gmpy2.is_strong_selfridge_prp(m))


@lru_cache(maxsize=None)
def _small_prime_set() -> frozenset:
    return frozenset(_small_primes())


def perfect_square_root(n: int) -> Optional[int]:
    """
    Return ``r >= 0`` with ``r * r == n``, or ``None`` if ``n`` isn't a perfect square.

    :raises InvalidArgumentError: If ``n`` is negative.
    """
    if n < 0:
        raise InvalidArgumentError(f"square roots are only taken of n >= 0, got {n}")
    r = gmpy2.isqrt(n)
    if r * r == n:
        return int(r)
    return None


def p_adic_valuation(n: int, p: int) -> Tuple[int, int]:
    """
    Split ``n`` as ``p**v * cofactor`` with ``p`` not dividing ``cofactor``.

    The cofactor carries the sign of ``n``.

    :returns: The pair ``(v, cofactor)``.

    :raises InvalidArgumentError: If ``n == 0`` or ``p < 2``.
    """
    if n == 0:
        raise InvalidArgumentError("the valuation of 0 is infinite")
    if p < 2:
        raise InvalidArgumentError(f"valuations are taken at primes, got {p}")
    cofactor, v = gmpy2.remove(abs(n), p)
    cofactor = int(cofactor)
    return int(v), cofactor if n > 0 else -cofactor


def primes_up_to(limit: int) -> np.ndarray:
    """
    All primes ``p <= limit`` in increasing order, as an ``int64`` array.
    """
    if limit < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p : limit + 1 : p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def prime_list(limit: int) -> List[int]:
    """
    Like :func:`primes_up_to` but as a list of Python integers.
    """
    return [int(p) for p in primes_up_to(limit)]
