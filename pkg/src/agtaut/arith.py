"""Exact rational arithmetic and multiplicative number theory.

Everything downstream consumes these scalars: Bernoulli numbers, divisor
power sums, Jacobi totients, the Moebius function and Dirichlet
convolution.  All values are exact ``fractions.Fraction`` instances (or
plain ints); no floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Tuple

# The universal scalar type.  Fractions are always stored in lowest terms
# with a positive denominator, and Python ints are arbitrary precision.
Rational = Fraction

# Trial division only; inputs beyond this are rejected rather than risking
# a slow or probabilistic path.
FACTORIZATION_CAP = 10**12

ArithmeticFunction = Callable[[int], "Rational | int"]


class Factorization:
    """Prime factorization of a positive integer, primes strictly increasing."""

    __slots__ = ("base", "factors")

    def __init__(self, base: int, factors: Tuple[Tuple[int, int], ...]):
        self.base = base
        self.factors = factors

    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def v(self, p: int) -> int:
        """Exponent of the prime p in the factorization (0 if absent)."""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def divisors(self) -> Tuple[int, ...]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return tuple(sorted(divs))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Factorization)
            and self.base == other.base
            and self.factors == other.factors
        )

    def __repr__(self) -> str:
        return f"Factorization({self.base}, {list(self.factors)})"


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor a positive integer by trial division.

    Rejects n < 1 and n > FACTORIZATION_CAP.  Cache fills are idempotent,
    so concurrent use is safe.
    """
    if n < 1:
        raise ValueError(f"factorize requires a positive integer, got {n}")
    if n > FACTORIZATION_CAP:
        raise ValueError(f"factorize input {n} exceeds cap {FACTORIZATION_CAP}")
    factors = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
        p = 3 if p == 2 else p + 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n).factors
    return len(f) == 1 and f[0][1] == 1


def divisors(n: int) -> Tuple[int, ...]:
    return factorize(n).divisors()


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n.

    Convention fixed by the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 with
    B_0 = 1, which gives B_1 = -1/2.  Only even indices matter downstream,
    and those are convention independent.
    """
    if n < 0:
        raise ValueError(f"bernoulli requires n >= 0, got {n}")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(n):
        acc += comb(n + 1, k) * bernoulli(k)
    return -acc / (n + 1)


def abs_bernoulli(n: int) -> Fraction:
    """|B_n|, the quantity every projection formula actually consumes."""
    return abs(bernoulli(n))


@lru_cache(maxsize=None)
def sigma(k: int, n: int) -> Fraction:
    """Divisor power sum sigma_k(n) = sum_{m | n} m^k, exact for any integer k."""
    if n < 1:
        raise ValueError(f"sigma requires n >= 1, got {n}")
    return sum((Fraction(d) ** k for d in divisors(n)), Fraction(0))


@lru_cache(maxsize=None)
def jacobi_totient(k: int, n: int) -> Fraction:
    """Jacobi totient J_k(n) = n^k prod_{p | n} (1 - p^{-k}).

    Always an integer for k >= 1; asserted here.
    """
    if n < 1 or k < 1:
        raise ValueError(f"jacobi_totient requires n >= 1 and k >= 1, got ({k}, {n})")
    value = Fraction(n) ** k
    for p in factorize(n).primes():
        value *= 1 - Fraction(p) ** (-k)
    assert value.denominator == 1, (k, n, value)
    return value


def mobius(n: int) -> int:
    """Moebius function: 0 on non-square-free n, else (-1)^(number of primes)."""
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    factors = factorize(n).factors
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def dirichlet_convolve(f: ArithmeticFunction, g: ArithmeticFunction, n: int) -> Fraction:
    """(f * g)(n) = sum_{m | n} f(m) g(n/m)."""
    if n < 1:
        raise ValueError(f"dirichlet_convolve requires n >= 1, got {n}")
    return sum((Fraction(f(m)) * Fraction(g(n // m)) for m in divisors(n)), Fraction(0))
