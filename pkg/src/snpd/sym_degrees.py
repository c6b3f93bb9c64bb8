"""Character degrees of symmetric and alternating groups.

Degrees are computed two independent ways on purpose: as exact factorial
quotients over hook products (``degree_sn``) and structurally as prime
factorizations built from factorial valuations (``degree_factorization``).
The structural route never factors the degree value itself, so it stays
cheap even when the value has hundreds of digits.

Restriction to the alternating group follows the classical rule: a
non-self-conjugate shape restricts irreducibly; a self-conjugate shape
splits into two constituents of half the degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .numtheory import (
    Factorization,
    IntegrityError,
    factor,
    legendre_valuation,
    primes_up_to,
    valuation,
)
from .partitions import Partition, conjugate, hook_lengths, is_self_conjugate, iter_partitions

__all__ = [
    "CharacterDegree",
    "DegreeSet",
    "SpecialDegrees",
    "an_degree_multiset",
    "an_restriction_classes",
    "cd_an",
    "cd_sn",
    "character_degree",
    "degree_factorization",
    "degree_sn",
    "special_degrees",
]

# Below this size the big-integer value and the structural factorization are
# cross-checked against each other at construction time.
_CROSSCHECK_MAX_N = 20

_HALF = Factorization(((2, 1),))


@dataclass(frozen=True)
class CharacterDegree:
    """An irreducible degree of S_n with its source shape and factorization."""

    partition: Partition
    value: int
    factorization: Factorization


@dataclass(frozen=True)
class DegreeSet:
    """Sorted duplicate-free degrees, each with its exact factorization."""

    degrees: tuple[int, ...]
    factorizations: tuple[Factorization, ...]

    def __post_init__(self) -> None:
        if len(self.degrees) != len(self.factorizations):
            raise ValueError("degrees and factorizations must run in parallel")
        if any(a >= b for a, b in zip(self.degrees, self.degrees[1:])):
            raise ValueError("degrees must be strictly ascending")
        for d, f in zip(self.degrees, self.factorizations):
            if f.value() != d:
                raise IntegrityError(f"factorization {f} does not reconstruct {d}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, Factorization]]) -> "DegreeSet":
        seen: dict[int, Factorization] = {}
        for value, fact in pairs:
            if value < 1:
                raise ValueError(f"degrees must be positive, got {value}")
            prior = seen.get(value)
            if prior is not None and prior != fact:
                raise IntegrityError(f"conflicting factorizations for {value}")
            seen[value] = fact
        ordered = sorted(seen.items())
        return cls(tuple(v for v, _ in ordered), tuple(f for _, f in ordered))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "DegreeSet":
        return cls.from_pairs((v, factor(v)) for v in values)

    def pairs(self) -> Iterator[tuple[int, Factorization]]:
        return zip(self.degrees, self.factorizations)

    def __contains__(self, value: int) -> bool:
        return value in self.degrees

    def __len__(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class SpecialDegrees:
    """The four witness degrees used throughout the large-n analysis."""

    n: int
    d1: int  # n-1
    d2: int  # (n-1)(n-2)/2
    d3: int  # (n-1)(n-2)(n-3)/6
    d4: int  # n(n-1)(n-5)/6


def _value_from_hooks(lam: Partition, hooks: tuple[int, ...]) -> int:
    n = lam.n
    quotient, remainder = divmod(math.factorial(n), math.prod(hooks))
    if remainder:
        raise IntegrityError(f"hook product does not divide {n}! for {lam}")
    return quotient


def _factorization_from_hooks(lam: Partition, hooks: tuple[int, ...]) -> Factorization:
    n = lam.n
    pairs: list[tuple[int, int]] = []
    for p in primes_up_to(n):
        e = legendre_valuation(p, n) - sum(valuation(p, h) for h in hooks if h % p == 0)
        if e < 0:
            raise IntegrityError(f"negative exponent for {p} in degree of {lam}")
        if e:
            pairs.append((p, e))
    return Factorization(tuple(pairs))


def degree_sn(lam: Partition) -> int:
    """Degree of the irreducible S_n character labeled by ``lam``: n! over hooks."""
    return _value_from_hooks(lam, hook_lengths(lam))


def degree_factorization(lam: Partition) -> Factorization:
    """Prime factorization of degree_sn(lam), built from valuations only.

    For each prime p <= n the exponent is v_p(n!) minus the p-valuations of
    the hooks. The degree value itself is never factored, so this works
    unchanged for shapes whose degrees are astronomically large.
    """
    return _factorization_from_hooks(lam, hook_lengths(lam))


def character_degree(lam: Partition) -> CharacterDegree:
    hooks = hook_lengths(lam)
    value = _value_from_hooks(lam, hooks)
    fact = _factorization_from_hooks(lam, hooks)
    if lam.n <= _CROSSCHECK_MAX_N and fact.value() != value:
        raise IntegrityError(f"value/factorization mismatch for {lam}")
    return CharacterDegree(lam, value, fact)


def cd_sn(n: int) -> DegreeSet:
    """The degree set of S_n, from the hook formula over all shapes."""
    if n < 1:
        raise ValueError(f"cd_sn requires n >= 1, got {n}")
    return DegreeSet.from_pairs(
        (c.value, c.factorization) for c in map(character_degree, iter_partitions(n))
    )


def an_restriction_classes(n: int) -> Iterator[tuple[Partition, int, int, Factorization]]:
    """Constituent classes of S_n shapes restricted to A_n.

    Yields (representative shape, multiplicity, constituent degree,
    factorization). Each non-self-conjugate pair of shapes restricts to one
    irreducible at full degree (listed once, under the
    reverse-lexicographically larger shape); each self-conjugate shape
    splits into two constituents of half the degree.
    """
    if n < 2:
        raise ValueError(f"restriction classes require n >= 2, got {n}")
    for lam in iter_partitions(n):
        conj = conjugate(lam)
        if lam == conj:
            c = character_degree(lam)
            if c.factorization.exponent(2) < 1:
                raise IntegrityError(f"self-conjugate degree {c.value} is odd for {lam}")
            yield lam, 2, c.value // 2, c.factorization.exact_div(_HALF)
        elif lam.parts > conj.parts:
            c = character_degree(lam)
            yield lam, 1, c.value, c.factorization


def an_degree_multiset(n: int) -> list[tuple[int, Factorization]]:
    """Degrees of all irreducible A_n characters, with multiplicity.

    This multiset is what the n!/2 sum-of-squares identity sees.
    """
    out: list[tuple[int, Factorization]] = []
    for _, count, value, fact in an_restriction_classes(n):
        out.extend([(value, fact)] * count)
    return out


def cd_an(n: int) -> DegreeSet:
    """The degree set of A_n via restriction from S_n."""
    return DegreeSet.from_pairs(an_degree_multiset(n))


def _exact(numerator: int, divisor: int) -> int:
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise IntegrityError(f"{numerator} is not divisible by {divisor}")
    return quotient


def special_degrees(n: int) -> SpecialDegrees:
    """d1..d4 for n >= 8, from closed forms cross-checked against the hook formula."""
    if n < 8:
        raise ValueError(f"special_degrees requires n >= 8, got {n}")
    d1 = n - 1
    d2 = _exact((n - 1) * (n - 2), 2)
    d3 = _exact((n - 1) * (n - 2) * (n - 3), 6)
    d4 = _exact(n * (n - 1) * (n - 5), 6)
    shapes = (
        Partition((n - 1, 1)),
        Partition((n - 2, 1, 1)),
        Partition((n - 3, 1, 1, 1)),
        Partition((n - 3, 3)),
    )
    for d, lam in zip((d1, d2, d3, d4), shapes):
        if degree_sn(lam) != d:
            raise IntegrityError(f"closed form {d} disagrees with hook formula for {lam}")
    return SpecialDegrees(n, d1, d2, d3, d4)
