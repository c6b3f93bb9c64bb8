"""Integer partitions: enumeration, conjugation, hook numbers, tableau counting.

Partitions are immutable value types. Enumeration is available both as a
materialized list and as a generator so consumers can stream; the order is
reverse-lexicographic starting from (n), which is the canonical order for
every report in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "conjugate",
    "enumerate_partitions",
    "hook_lengths",
    "is_self_conjugate",
    "iter_partitions",
    "syt_count",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; the empty tuple is the partition of 0."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for part in self.parts:
            if part < 1:
                raise ValueError(f"parts must be positive: {self.parts!r}")
            if prev is not None and part > prev:
                raise ValueError(f"parts must be weakly decreasing: {self.parts!r}")
            prev = part

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(int(p) for p in parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def iter_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, reverse-lexicographically.

    Starts at (n) and ends at (1,...,1). Streaming counterpart of
    ``enumerate_partitions``; both produce the identical sequence.
    """
    if n < 0:
        raise ValueError(f"partitions are defined for n >= 0, got {n}")
    if n == 0:
        yield Partition()
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        # rightmost part > 1; everything after it is a tail of 1s
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        new = parts[k] - 1
        surplus = len(parts) - k  # the freed unit plus the trailing 1s
        del parts[k:]
        parts.append(new)
        while surplus > 0:
            chunk = min(new, surplus)
            parts.append(chunk)
            surplus -= chunk


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, materialized."""
    return list(iter_partitions(n))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    parts = lam.parts
    if not parts:
        return lam
    out = [0] * parts[0]
    for p in parts:
        for j in range(p):
            out[j] += 1
    return Partition(tuple(out))


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate(lam) == lam


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Hook numbers of every cell, as a multiset sorted descending.

    Cell (i, j) has hook = arm + leg + 1 = parts[i] + conj[j] - i - j - 1.
    """
    parts = lam.parts
    conj = conjugate(lam).parts
    hooks = [
        parts[i] + conj[j] - i - j - 1 for i in range(len(parts)) for j in range(parts[i])
    ]
    hooks.sort(reverse=True)
    return tuple(hooks)


@lru_cache(maxsize=None)
def _syt(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    total = 0
    last = len(parts) - 1
    for i in range(len(parts)):
        if i == last or parts[i] > parts[i + 1]:
            if parts[i] == 1:
                reduced = parts[:i] + parts[i + 1 :]
            else:
                reduced = parts[:i] + (parts[i] - 1,) + parts[i + 1 :]
            total += _syt(reduced)
    return total


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of this shape.

    Computed by corner-removal recursion with memoization, deliberately
    independent of hook numbers so it can serve as an oracle for the
    hook-length degree formula.
    """
    return _syt(lam.parts)
