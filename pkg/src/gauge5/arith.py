"""Elementary number theory used throughout the package.

Everything here is exact integer arithmetic on small inputs: prime
factorization by trial division, p-adic valuations, Legendre's formula for
the valuation of a factorial, divisor counting, and the gcd-class map that
indexes principal-bundle types over Moore spaces.

Inputs stay small by design (the largest constant shipped in the Lie catalog
is 45398353 = 7^2 * 11^2 * 13 * 19 * 31), so trial division is a deliberate
choice over a bignum factoring dependency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division.

    >>> [k for k in range(2, 30) if is_prime(k)]
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    >>> is_prime(1), is_prime(0), is_prime(-7)
    (False, False, False)
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    """A factor p**e with p prime and e >= 1."""

    p: int
    e: int

    def value(self) -> int:
        return self.p**self.e


def factorize(m: int) -> tuple[PrimePower, ...]:
    """Prime factorization of m >= 1, sorted by prime.

    >>> factorize(360)
    (PrimePower(p=2, e=3), PrimePower(p=3, e=2), PrimePower(p=5, e=1))
    >>> factorize(1)
    ()
    """
    if m < 1:
        raise ValueError(f"factorize needs a positive integer, got {m}")
    out: list[PrimePower] = []
    for p in _trial_primes(m):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            out.append(PrimePower(p, e))
        if m == 1:
            break
    if m > 1:
        out.append(PrimePower(m, 1))
    return tuple(out)


def _trial_primes(bound: int):
    yield 2
    yield 3
    d = 5
    # 6k +- 1 wheel; bound only caps the search, the caller breaks early.
    while d * d <= bound:
        yield d
        yield d + 2
        d += 6


def prime_divisors(m: int) -> tuple[int, ...]:
    """Distinct primes dividing m >= 1, ascending.

    >>> prime_divisors(45398353)
    (7, 11, 13, 19, 31)
    """
    return tuple(f.p for f in factorize(m))


def nu_p(m: int, p: int) -> int:
    """p-adic valuation of m >= 1. The valuation of 0 is undefined here.

    >>> nu_p(45, 3)
    2
    >>> nu_p(45, 7)
    0
    """
    if not is_prime(p):
        raise ValueError(f"nu_p needs a prime, got p={p}")
    if m < 1:
        raise ValueError(f"nu_p is only defined for positive integers, got m={m}")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n >= 0.

    >>> digit_sum(10, 3)   # 10 = 101_3
    2
    >>> digit_sum(0, 5)
    0
    """
    if not is_prime(p):
        raise ValueError(f"digit_sum base must be prime here, got p={p}")
    if n < 0:
        raise ValueError(f"digit_sum needs n >= 0, got {n}")
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def legendre_valuation(m: int, p: int) -> int:
    """nu_p(m!) via Legendre's identity (m - s_p(m)) / (p - 1), for m >= 0.

    Agrees with the floor-sum form sum_{k>=1} floor(m / p^k).

    >>> legendre_valuation(10, 3)   # 10! = 3^4 * ...
    4
    >>> legendre_valuation(0, 5)
    0
    """
    if m < 0:
        raise ValueError(f"legendre_valuation needs m >= 0, got {m}")
    if not is_prime(p):
        raise ValueError(f"legendre_valuation needs a prime, got p={p}")
    return (m - digit_sum(m, p)) // (p - 1)


def divisor_count(m: int) -> int:
    """Number of positive divisors of m >= 1.

    >>> divisor_count(21)
    4
    >>> divisor_count(1)
    1
    """
    out = 1
    for f in factorize(m):
        out *= f.e + 1
    return out


def divisors(m: int) -> tuple[int, ...]:
    """All positive divisors of m >= 1, ascending.

    >>> divisors(21)
    (1, 3, 7, 21)
    """
    ds = [1]
    for f in factorize(m):
        ds = [d * f.p**k for d in ds for k in range(f.e + 1)]
    return tuple(sorted(ds))


def gcd_class(k: int, d: int) -> int:
    """The bundle-type invariant gcd(k mod d, d), with gcd(0, d) = d.

    Partitions Z/d (and hence Z/c for any multiple c of d) into one class per
    divisor of d.

    >>> [gcd_class(k, 6) for k in range(6)]
    [6, 1, 2, 3, 2, 1]
    >>> gcd_class(-1, 6)
    1
    """
    if d < 1:
        raise ValueError(f"gcd_class needs d >= 1, got {d}")
    return math.gcd(k % d, d)
