"""Exact prime-divisor arithmetic on arbitrary-precision integers.

A ``Factorization`` is the single source of truth for prime-divisor data:
distinct-prime counts (``omega``) and prime sets (``pi_set``) are always read
off a factorization rather than recomputed from the integer. Everything here
is pure and exact; no floats anywhere.
"""

from __future__ import annotations

import math
from array import array
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "Factorization",
    "IntegrityError",
    "PrimeSet",
    "factor",
    "is_prime",
    "is_prime_power",
    "legendre_valuation",
    "omega",
    "pi_set",
    "primes_up_to",
    "valuation",
]

# Sorted tuple of distinct primes; the representation of a set pi(n).
PrimeSet = tuple[int, ...]


class IntegrityError(RuntimeError):
    """An internal exact-arithmetic cross-check failed; signals a bug, not bad input."""


# Deterministic Miller-Rabin witness set, exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin; exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_sieve_limit = 0
_sieve_primes: list[int] = []


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending. The underlying sieve grows and is cached."""
    global _sieve_limit, _sieve_primes
    if limit > _sieve_limit:
        new_limit = max(limit, 2 * _sieve_limit, 1 << 10)
        sieve = bytearray([1]) * (new_limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(new_limit) + 1):
            if sieve[p]:
                start = p * p
                sieve[start : new_limit + 1 : p] = bytearray(
                    len(range(start, new_limit + 1, p))
                )
        _sieve_primes = [i for i in range(new_limit + 1) if sieve[i]]
        _sieve_limit = new_limit
    return _sieve_primes[: bisect_right(_sieve_primes, limit)]


@dataclass(frozen=True)
class Factorization:
    """A finite map prime -> exponent, stored as pairs sorted by prime.

    The empty factorization represents 1. Construction checks structure
    (ascending primes, positive exponents); ``of`` additionally checks
    primality and is the entry point for hand-written data.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.pairs:
            if p <= last:
                raise ValueError(f"primes must be distinct, ascending and >= 2: {self.pairs!r}")
            if e < 1:
                raise ValueError(f"exponents must be >= 1: {self.pairs!r}")
            last = p

    @classmethod
    def of(cls, factors: Mapping[int, int] | Iterable[tuple[int, int]]) -> "Factorization":
        """Build from an explicit prime -> exponent mapping, verifying primality."""
        items = tuple(sorted(dict(factors).items()))
        for p, _ in items:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        return cls(items)

    def value(self) -> int:
        """The represented integer, exactly."""
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.pairs)

    @property
    def primes(self) -> PrimeSet:
        return tuple(p for p, _ in self.pairs)

    def exponent(self, p: int) -> int:
        for q, e in self.pairs:
            if q == p:
                return e
            if q > p:
                break
        return 0

    def __mul__(self, other: "Factorization") -> "Factorization":
        merged = dict(self.pairs)
        for p, e in other.pairs:
            merged[p] = merged.get(p, 0) + e
        return Factorization(tuple(sorted(merged.items())))

    def exact_div(self, other: "Factorization") -> "Factorization":
        """Divide by ``other``; raises IntegrityError unless the quotient is integral."""
        remaining = dict(self.pairs)
        for p, e in other.pairs:
            have = remaining.get(p, 0)
            if have < e:
                raise IntegrityError(f"inexact division: {self} by {other}")
            if have == e:
                del remaining[p]
            else:
                remaining[p] = have - e
        return Factorization(tuple(sorted(remaining.items())))

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs)


# Factorization strategy: direct trial division for tiny inputs, a cached
# smallest-prime-factor sieve below 2^20, trial division by sieved primes
# above. Inputs beyond ~10^14 never arise from the library itself (huge
# character degrees are factored structurally in sym_degrees, not here).
_SMALL_TRIAL = 1 << 12
_SPF_LIMIT = 1 << 20
_TRIAL_CAP = 10**7
_spf: array | None = None


def _spf_table() -> array:
    global _spf
    if _spf is None:
        n = _SPF_LIMIT
        table = array("i", range(n))
        for p in range(2, math.isqrt(n - 1) + 1):
            if table[p] == p:
                for m in range(p * p, n, p):
                    if table[m] == m:
                        table[m] = p
        _spf = table
    return _spf


def _factor_trial(n: int) -> Factorization:
    items: list[tuple[int, int]] = []
    m = n
    for p in primes_up_to(math.isqrt(n)):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            items.append((p, e))
    if m > 1:
        items.append((m, 1))
    return Factorization(tuple(items))


def _factor_spf(n: int) -> Factorization:
    spf = _spf_table()
    items: list[tuple[int, int]] = []
    m = n
    while m > 1:
        p = spf[m]
        e = 1
        m //= p
        while m % p == 0:
            m //= p
            e += 1
        items.append((p, e))
    return Factorization(tuple(items))


def _factor_large(n: int) -> Factorization:
    items: list[tuple[int, int]] = []
    m = n
    if is_prime(m):
        return Factorization(((m, 1),))
    for p in primes_up_to(min(math.isqrt(n), _TRIAL_CAP)):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            items.append((p, e))
            if m == 1:
                break
            if is_prime(m):
                break
    if m > 1:
        if not is_prime(m) and m > _TRIAL_CAP * _TRIAL_CAP:
            raise ValueError(f"{n} has prime factors beyond the supported trial-division range")
        items.append((m, 1))
    return Factorization(tuple(items))


def factor(n: int) -> Factorization:
    """Factor a positive integer; the empty factorization is returned for 1."""
    if n < 1:
        raise ValueError(f"factor requires n >= 1, got {n}")
    if n == 1:
        return Factorization()
    if n < _SMALL_TRIAL:
        return _factor_trial(n)
    if n < _SPF_LIMIT:
        return _factor_spf(n)
    return _factor_large(n)


def omega(n: int) -> int:
    """Number of distinct prime divisors of n; omega(1) = 0."""
    return factor(n).omega


def pi_set(n: int) -> PrimeSet:
    """The set of prime divisors of n as a sorted tuple."""
    return factor(n).primes


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with p**k == n and k >= 1, or None.

    1 is not a prime power under this convention.
    """
    if n < 1:
        raise ValueError(f"is_prime_power requires n >= 1, got {n}")
    f = factor(n)
    if f.omega != 1:
        return None
    return f.pairs[0]


def legendre_valuation(p: int, n: int) -> int:
    """Exponent of the prime p in n!, via sum of floor(n / p^i)."""
    if not is_prime(p):
        raise ValueError(f"legendre_valuation requires a prime, got {p}")
    if n < 0:
        raise ValueError(f"legendre_valuation requires n >= 0, got {n}")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def valuation(p: int, n: int) -> int:
    """Exponent of p in n (p assumed prime, n >= 1)."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
