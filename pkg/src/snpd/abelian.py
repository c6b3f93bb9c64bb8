"""Brute-force checks on small finite abelian p-groups.

A group Z_{p^a1} x ... x Z_{p^ar} is represented by its weakly decreasing
exponent vector; elements are coordinate tuples. Subgroup enumeration
closes under single-element extensions until a fixpoint, which reaches
every subgroup (any subgroup is a chain of cyclic extensions) and
deduplicates by element-set fingerprint. Everything is cached per group,
so repeated direct-factor queries are cheap.

Two independent deciders answer whether a cyclic subgroup is a direct
factor: an exhaustive complement search, and a purity test
(C meet p^k P equals p^k C for all k). Verification runs both and demands
agreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .numtheory import is_prime
from .partitions import iter_partitions
from .reporting import CheckItem, SuiteReport

__all__ = [
    "AbelianPGroup",
    "Element",
    "all_subgroups",
    "budgeted_groups",
    "element_order",
    "elements",
    "is_direct_factor",
    "is_pure_cyclic",
    "verify_lemma_max_order_complement",
    "verify_lemma_maximal_subgroup",
]

Element = tuple[int, ...]


@dataclass(frozen=True)
class AbelianPGroup:
    """Z_{p^a1} x ... x Z_{p^ar} with a1 >= a2 >= ... >= ar >= 1."""

    p: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if not self.exponents:
            raise ValueError("rank must be at least 1")
        prev = None
        for a in self.exponents:
            if a < 1:
                raise ValueError(f"exponents must be positive: {self.exponents!r}")
            if prev is not None and a > prev:
                raise ValueError(f"exponents must be weakly decreasing: {self.exponents!r}")
            prev = a

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(self.p**a for a in self.exponents)

    @property
    def order(self) -> int:
        return self.p ** sum(self.exponents)

    def __str__(self) -> str:
        return " x ".join(f"Z_{m}" for m in self.moduli)


def elements(group: AbelianPGroup) -> list[Element]:
    return [tuple(coords) for coords in product(*(range(m) for m in group.moduli))]


def element_order(group: AbelianPGroup, g: Element) -> int:
    """Least m >= 1 with m*g = 0; always a power of p."""
    if len(g) != len(group.exponents):
        raise ValueError(f"element {g!r} has wrong rank for {group}")
    result = 1
    for coord, modulus in zip(g, group.moduli):
        result = max(result, modulus // math.gcd(coord, modulus))
    return result


class _Tables:
    """Per-group lookup tables over integer element indices."""

    def __init__(self, group: AbelianPGroup):
        self.group = group
        self.elems = elements(group)
        self.index = {e: i for i, e in enumerate(self.elems)}
        moduli = group.moduli
        n = len(self.elems)
        self.add = [
            [
                self.index[tuple((a + b) % m for a, b, m in zip(x, y, moduli))]
                for y in self.elems
            ]
            for x in self.elems
        ]
        self.order = [element_order(group, e) for e in self.elems]
        # cyclic subgroup of each element, as an index list (0, x, 2x, ...)
        self.cyclic: list[list[int]] = []
        for i in range(n):
            multiples = [0]
            current = 0
            for _ in range(self.order[i] - 1):
                current = self.add[current][i]
                multiples.append(current)
            self.cyclic.append(multiples)
        self.cyclic_set = [frozenset(c) for c in self.cyclic]


_tables_cache: dict[AbelianPGroup, _Tables] = {}
_subgroups_cache: dict[AbelianPGroup, list[frozenset[int]]] = {}
_factor_cache: dict[tuple[AbelianPGroup, frozenset[int]], bool] = {}


def _tables(group: AbelianPGroup) -> _Tables:
    t = _tables_cache.get(group)
    if t is None:
        t = _Tables(group)
        _tables_cache[group] = t
    return t


def _extend(t: _Tables, subgroup: frozenset[int], x: int) -> frozenset[int]:
    add = t.add
    return frozenset(add[h][m] for h in subgroup for m in t.cyclic[x])


def all_subgroups(group: AbelianPGroup) -> list[frozenset[int]]:
    """Every subgroup, as frozensets of element indices, deterministically ordered."""
    cached = _subgroups_cache.get(group)
    if cached is not None:
        return cached
    t = _tables(group)
    n = len(t.elems)
    trivial = frozenset({0})
    seen = {trivial}
    queue = [trivial]
    while queue:
        current = queue.pop()
        for x in range(1, n):
            if x in current:
                continue
            extended = _extend(t, current, x)
            if extended not in seen:
                seen.add(extended)
                queue.append(extended)
    result = sorted(seen, key=lambda s: (len(s), sorted(s)))
    _subgroups_cache[group] = result
    return result


def _cyclic_of(t: _Tables, g: Element) -> frozenset[int]:
    return t.cyclic_set[t.index[g]]


def is_direct_factor(group: AbelianPGroup, generator: Element) -> bool:
    """Exhaustive complement search: some H has C meet H = 0 and C + H = P.

    In an abelian group |C + H| = |C||H| / |C meet H|, so it suffices to scan
    subgroups of order |P|/|C| for one meeting C trivially.
    """
    t = _tables(group)
    cyclic = _cyclic_of(t, generator)
    key = (group, cyclic)
    cached = _factor_cache.get(key)
    if cached is not None:
        return cached
    target = len(t.elems) // len(cyclic)
    result = any(
        len(subgroup) == target and len(cyclic & subgroup) == 1
        for subgroup in all_subgroups(group)
    )
    _factor_cache[key] = result
    return result


def is_pure_cyclic(group: AbelianPGroup, generator: Element) -> bool:
    """Purity test: the cyclic subgroup meets p^k P in exactly p^k C, for all k.

    For finite abelian p-groups a cyclic subgroup is a direct factor exactly
    when it is pure; this is the independent counterpart of the complement
    search.
    """
    moduli = group.moduli
    p = group.p
    full = elements(group)
    order = element_order(group, generator)
    cyclic = {tuple((t * g) % m for g, m in zip(generator, moduli)) for t in range(order)}
    scale = p
    while True:
        scaled_group = {tuple((scale * c) % m for c, m in zip(e, moduli)) for e in full}
        scaled_cyclic = {
            tuple((scale * t * g) % m for g, m in zip(generator, moduli))
            for t in range(order)
        }
        if cyclic & scaled_group != scaled_cyclic:
            return False
        if len(scaled_group) == 1:
            return True
        scale *= p


_purity_cache: dict[tuple[AbelianPGroup, frozenset[int]], bool] = {}


def _deciders_agree(group: AbelianPGroup, generator: Element) -> tuple[bool, bool]:
    t = _tables(group)
    key = (group, _cyclic_of(t, generator))
    by_purity = _purity_cache.get(key)
    if by_purity is None:
        by_purity = is_pure_cyclic(group, generator)
        _purity_cache[key] = by_purity
    by_complement = is_direct_factor(group, generator)
    return by_complement, by_complement == by_purity


def verify_lemma_max_order_complement(group: AbelianPGroup) -> SuiteReport:
    """For every x of order p and every y of maximal order with x in <y>,
    <y> must be a direct factor. Counterexamples are reported, never raised."""
    t = _tables(group)
    failures: list[CheckItem] = []
    checked = 0
    for xi, x in enumerate(t.elems):
        if t.order[xi] != group.p:
            continue
        candidates = [yi for yi in range(len(t.elems)) if xi in t.cyclic_set[yi]]
        best = max(t.order[yi] for yi in candidates)
        seen_cyclic: set[frozenset[int]] = set()
        for yi in candidates:
            if t.order[yi] != best or t.cyclic_set[yi] in seen_cyclic:
                continue
            seen_cyclic.add(t.cyclic_set[yi])
            y = t.elems[yi]
            ok, agree = _deciders_agree(group, y)
            checked += 1
            if not ok:
                failures.append(
                    CheckItem(f"{group}: x={x} y={y}", False, "no complement found")
                )
            if not agree:
                failures.append(
                    CheckItem(f"{group}: x={x} y={y}", False, "deciders disagree")
                )
    summary = CheckItem(
        f"{group}: max-order generators over order-p elements",
        not failures,
        f"{checked} cyclic subgroups checked",
    )
    return SuiteReport("lemma:max-order-complement", (*failures, summary))


def verify_lemma_maximal_subgroup(group: AbelianPGroup) -> SuiteReport:
    """For every maximal subgroup Q and every a outside Q of maximal order
    there: a has maximal order in all of P, and <a> is a direct factor."""
    t = _tables(group)
    n = len(t.elems)
    group_max_order = max(t.order)
    failures: list[CheckItem] = []
    checked = 0
    for subgroup in all_subgroups(group):
        if len(subgroup) != n // group.p:
            continue
        outside = [i for i in range(n) if i not in subgroup]
        best = max(t.order[i] for i in outside)
        if best != group_max_order:
            witness = t.elems[min(i for i in outside if t.order[i] == best)]
            failures.append(
                CheckItem(
                    f"{group}: maximal subgroup avoiding {witness}",
                    False,
                    f"max order outside is {best}, group max is {group_max_order}",
                )
            )
        seen_cyclic: set[frozenset[int]] = set()
        for ai in outside:
            if t.order[ai] != best or t.cyclic_set[ai] in seen_cyclic:
                continue
            seen_cyclic.add(t.cyclic_set[ai])
            a = t.elems[ai]
            ok, agree = _deciders_agree(group, a)
            checked += 1
            if not ok:
                failures.append(CheckItem(f"{group}: a={a}", False, "no complement found"))
            if not agree:
                failures.append(CheckItem(f"{group}: a={a}", False, "deciders disagree"))
    summary = CheckItem(
        f"{group}: maximal-order elements outside maximal subgroups",
        not failures,
        f"{checked} cyclic subgroups checked",
    )
    return SuiteReport("lemma:maximal-subgroup", (*failures, summary))


def budgeted_groups() -> list[AbelianPGroup]:
    """The exhaustive verification family: p=2 up to order 2^6, p=3 up to 3^4."""
    groups: list[AbelianPGroup] = []
    for p, max_total in ((2, 6), (3, 4)):
        for total in range(1, max_total + 1):
            for lam in iter_partitions(total):
                groups.append(AbelianPGroup(p, lam.parts))
    return groups
