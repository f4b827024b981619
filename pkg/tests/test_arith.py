import random
from fractions import Fraction
from math import comb, gcd

import pytest

from agtaut.arith import (
    FACTORIZATION_CAP,
    abs_bernoulli,
    bernoulli,
    dirichlet_convolve,
    divisors,
    factorize,
    is_prime,
    jacobi_totient,
    mobius,
    sigma,
)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(8) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert abs_bernoulli(12) == Fraction(691, 2730)


def test_bernoulli_defining_recurrence():
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 must hold exactly for n in [1, 30]
    for n in range(1, 31):
        total = sum(comb(n + 1, k) * bernoulli(k) for k in range(n + 1))
        assert total == 0, n


def test_bernoulli_sign_pattern():
    # sign(B_2g) = (-1)^(g+1)
    for g in range(1, 12):
        assert (bernoulli(2 * g) > 0) == (g % 2 == 1)


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_sigma_values():
    assert sigma(1, 1) == 1
    assert sigma(3, 2) == 9
    assert sigma(-1, 6) == 2
    assert sigma(0, 12) == 6
    assert sigma(-2, 4) == Fraction(21, 16)


def test_jacobi_totient_values():
    assert jacobi_totient(2, 1) == 1
    assert jacobi_totient(2, 4) == 12
    assert jacobi_totient(2, 6) == 24
    assert jacobi_totient(1, 12) == 4  # k=1 is the classical totient


def test_jacobi_totient_is_moebius_convolution():
    for k in range(2, 9):
        for n in range(1, 1001):
            value = jacobi_totient(k, n)
            assert value.denominator == 1
            assert value == dirichlet_convolve(lambda m, k=k: m**k, mobius, n)


def test_mobius_values():
    assert mobius(1) == 1
    assert mobius(6) == 1
    assert mobius(12) == 0
    assert mobius(30) == -1
    assert mobius(2) == -1


def test_dirichlet_convolution_examples():
    # 1 * mu is the convolution identity: zero away from n = 1
    assert dirichlet_convolve(lambda m: 1, mobius, 5) == 0
    assert dirichlet_convolve(lambda m: 1, mobius, 1) == 1
    assert dirichlet_convolve(lambda m: sigma(-1, m), lambda m: jacobi_totient(2, m), 1) == 1
    lhs = 4 * dirichlet_convolve(
        lambda m: sigma(-1, m), lambda m: jacobi_totient(2, m), 4
    )
    assert lhs == 73 == sigma(3, 4)


def test_factorize():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(97).factors == ((97, 1),)
    f = factorize(360)
    assert f.factors == ((2, 3), (3, 2), (5, 1))
    assert f.v(2) == 3 and f.v(7) == 0
    product = 1
    for p, e in f.factors:
        product *= p**e
    assert product == f.base == 360


def test_factorize_rejects_bad_input():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-4)
    with pytest.raises(ValueError):
        factorize(FACTORIZATION_CAP + 1)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)


def test_divisors():
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)


def test_multiplicativity_on_coprime_pairs():
    rng = random.Random(271828)
    pairs = 0
    while pairs < 60:
        m = rng.randint(1, 400)
        n = rng.randint(1, 400)
        if gcd(m, n) != 1:
            continue
        pairs += 1
        for k in (1, 2, 3):
            assert sigma(k, m * n) == sigma(k, m) * sigma(k, n)
            assert jacobi_totient(k, m * n) == jacobi_totient(k, m) * jacobi_totient(k, n)
        assert mobius(m * n) == mobius(m) * mobius(n)
