import math

import pytest

from modrep.arith import prime_list
from modrep.exceptions import *
from modrep.forms import *
from modrep.forms import WEIGHTS

RAMANUJAN_TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]


def test_eta24_matches_known_values():
    expansion = eta24(10)
    assert expansion.coefficients() == [0] + RAMANUJAN_TAU
    assert expansion.weight == 12


def test_eisenstein_series():
    assert eisenstein(4, 3).coefficients() == [1, 240, 2160, 6720]
    assert eisenstein(6, 2).coefficients() == [1, -504, -16632]
    with pytest.raises(InvalidWeightError):
        eisenstein(8, 3)


def test_divisor_sigma():
    assert divisor_sigma(1, 6) == [0, 1, 3, 4, 7, 6, 12]
    assert divisor_sigma(3, 4, modulus=7) == [0, 1, 9 % 7, 28 % 7, 73 % 7]


@pytest.mark.parametrize("k, tau_2", [(12, -24), (16, 216), (18, -528), (20, 456), (22, -288)])
def test_tau_at_2(k: int, tau_2: int):
    assert tau(k, 1) == 1
    assert tau(k, 2) == tau_2


@pytest.mark.parametrize("k", sorted(WEIGHTS))
def test_multiplicativity_and_hecke_recursion(k: int):
    bound = 512
    expansion = delta_k(k, bound)
    t = expansion.coefficients()
    assert t[0] == 0 and t[1] == 1
    for m in range(2, bound + 1):
        for n in range(m + 1, bound // m + 1):
            if math.gcd(m, n) == 1:
                assert t[m * n] == t[m] * t[n], (m, n)
    for p in prime_list(bound):
        power = p
        while power * p <= bound:
            previous = power // p
            assert t[power * p] == t[p] * t[power] - p ** (k - 1) * t[previous], (p, power)
            power *= p


@pytest.mark.parametrize("k", sorted(WEIGHTS))
def test_residues_match_exact_coefficients(k: int):
    exact = delta_k(k, 200)
    for modulus in (11, 691, 2**31 - 1):
        assert delta_k(k, 200, modulus) == exact.reduce(modulus)


def test_large_modulus_falls_back_to_exact_products():
    modulus = 2**61 - 1
    assert delta_k(22, 300, modulus) == delta_k(22, 300).reduce(modulus)


def test_tau_out_of_range():
    expansion = delta_k(12, 10)
    with pytest.raises(CoefficientOutOfRangeError):
        tau(12, 11, expansion)
    with pytest.raises(CoefficientOutOfRangeError):
        tau(12, 0)
    with pytest.raises(IndexError):
        expansion[11]


def test_tau_weight_mismatch():
    with pytest.raises(InvalidArgumentError):
        tau(16, 2, delta_k(12, 5))


def test_invalid_weight():
    with pytest.raises(InvalidWeightError):
        delta_k(14, 10)
    with pytest.raises(ValueError):
        tau(24, 2)


def test_expansion_arithmetic():
    a = QExpansion([1, 1], 3)
    assert (a * a).coefficients() == [1, 2, 1, 0]
    assert (a**3).coefficients() == [1, 3, 3, 1]
    assert (a - a).coefficients() == [0, 0, 0, 0]
    assert a.truncate(1).coefficients() == [1, 1]
    with pytest.raises(InvalidArgumentError):
        a.reduce(5) + a


def test_congruence_691():
    checked, failures = congruence_691(10_000)
    assert len(checked) == 1229
    assert failures == []


def test_congruence_125():
    checked, failures, untested = congruence_125(10_000)
    assert untested == [5]
    assert 5 not in checked
    assert failures == []


def test_tau_residues_at_primes():
    residues = tau_residues_at_primes(12, 11, 10)
    assert residues == {p: RAMANUJAN_TAU[p - 1] % 11 for p in (2, 3, 5, 7)}


def test_nonvanishing():
    assert nonvanishing_check(3000) == []


def test_nonvanishing_exact_fallback():
    # A tiny modulus leaves many n unresolved, which are then decided exactly.
    assert nonvanishing_check(100, moduli=[2]) == []


def test_discriminant_from_eisenstein_series():
    bound = 200
    e4, e6 = eisenstein(4, bound), eisenstein(6, bound)
    assert e4**3 - e6**2 == eta24(bound).scale(1728)


@pytest.mark.parametrize("k", sorted(WEIGHTS))
def test_crt_expansion_matches_exact(k: int):
    assert delta_k_crt(k, 300) == delta_k(k, 300)


def test_crt_expansion_beyond_exact_bound():
    expansion = delta_k_crt(12, 3000)
    for p in prime_list(3000):
        t = expansion[p]
        assert t % 691 == (1 + p**11) % 691
        assert t * t <= 4 * p**11
