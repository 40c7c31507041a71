import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from modrep.arith import *
from modrep.arith import DETERMINISTIC_PRIME_BOUND
from modrep.exceptions import InvalidArgumentError, OutOfRangeError


@given(
    st.integers(min_value=-(10**30), max_value=10**30),
    st.integers(min_value=0, max_value=500),
    st.integers(min_value=2, max_value=10**25),
)
def test_mod_pow_matches_builtin(base: int, exponent: int, modulus: int):
    assert mod_pow(base, exponent, modulus) == pow(base, exponent, modulus)


@pytest.mark.parametrize("exponent, modulus", [(-1, 7), (3, 1), (3, 0)])
def test_mod_pow_bad_arguments(exponent: int, modulus: int):
    with pytest.raises(InvalidArgumentError):
        mod_pow(2, exponent, modulus)


def test_mod_pow_errors_are_value_errors():
    with pytest.raises(ValueError):
        mod_pow(2, -1, 7)


@given(st.integers(min_value=-(10**12), max_value=10**12), st.integers(min_value=0, max_value=5000))
def test_jacobi_matches_sympy(a: int, half: int):
    n = 2 * half + 1
    assert jacobi(a, n) == sympy.jacobi_symbol(a % n, n)


def test_jacobi_known_values():
    assert jacobi(31, 23) == 1
    assert jacobi(5, 23) == -1
    assert jacobi(46, 23) == 0
    assert jacobi(7366219, 23) == 1


@pytest.mark.parametrize("n", [0, -3, 10])
def test_jacobi_bad_modulus(n: int):
    with pytest.raises(InvalidArgumentError):
        jacobi(3, n)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize(
    "n",
    [
        22798241520242687999,
        60707199950936063999,
        93433753964906495999,
        2**61 - 1,
        10**18 + 9,
        99999989,
    ],
)
def test_is_prime_primes(n: int):
    assert is_prime(n)


@pytest.mark.parametrize(
    "n",
    [
        # Strong pseudoprimes to many small bases.
        3215031751,
        3825123056546413051,
        318665857834031151167461,
        # Carmichael numbers.
        561,
        41041,
        (2**61 - 1) * (2**31 - 1),
        99999989 * 99999971,
    ],
)
def test_is_prime_composites(n: int):
    assert not is_prime(n)


@given(st.integers(min_value=0, max_value=10**24))
def test_is_prime_matches_sympy(n: int):
    assert is_prime(n) == sympy.isprime(n)


def test_is_prime_out_of_range():
    with pytest.raises(OutOfRangeError):
        is_prime(DETERMINISTIC_PRIME_BOUND)
    with pytest.raises(InvalidArgumentError):
        is_prime(-7)


def test_perfect_square_root():
    assert perfect_square_root(0) == 0
    assert perfect_square_root(10**40) == 10**20
    assert perfect_square_root(10**40 + 1) is None
    with pytest.raises(InvalidArgumentError):
        perfect_square_root(-4)


def test_p_adic_valuation():
    assert p_adic_valuation(-(11**21) * 9, 11) == (21, -9)
    assert p_adic_valuation(7, 11) == (0, 7)
    with pytest.raises(InvalidArgumentError):
        p_adic_valuation(0, 11)


def test_primes_up_to():
    assert prime_list(1) == []
    assert prime_list(2) == [2]
    assert prime_list(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes_up_to(10_000)) == 1229


def test_is_prime_below_one_million():
    bound = 10**6
    composite = bytearray(bound)
    composite[0] = composite[1] = 1
    for d in range(2, 1001):
        if not composite[d]:
            composite[d * d :: d] = b"\x01" * len(range(d * d, bound, d))
    assert all(is_prime(n) == (not composite[n]) for n in range(bound))
