"""The SNPD predicate and the prime-divisor statistics rho and sigma.

A degree set is SNPD when every degree above 1 has the same number of
distinct prime divisors. Degree-1 entries are ignored; a set with no
non-linear degree is vacuously SNPD with no common omega value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import PrimeSet
from .sym_degrees import DegreeSet

__all__ = [
    "GroupProfile",
    "SnpdVerdict",
    "cd_direct_product",
    "profile",
    "rho",
    "sigma",
    "snpd_check",
]


@dataclass(frozen=True)
class SnpdVerdict:
    """Outcome of the same-number-of-prime-divisors check.

    ``common_omega`` is present exactly when the check passes and at least
    one non-linear degree exists; ``witness`` is the lexicographically
    smallest pair of non-linear degrees with differing omega otherwise.
    """

    is_snpd: bool
    common_omega: int | None = None
    witness: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.is_snpd and self.witness is not None:
            raise ValueError("a passing verdict carries no witness")
        if not self.is_snpd and self.witness is None:
            raise ValueError("a failing verdict requires a witness")


@dataclass(frozen=True)
class GroupProfile:
    name: str
    cd: DegreeSet
    rho: PrimeSet
    sigma: int
    verdict: SnpdVerdict


def snpd_check(cd: DegreeSet) -> SnpdVerdict:
    """Decide whether all non-linear degrees share one omega value."""
    if len(cd) == 0:
        raise ValueError("snpd_check requires a non-empty degree set")
    nonlinear = [(d, f.omega) for d, f in cd.pairs() if d > 1]
    if not nonlinear:
        return SnpdVerdict(True)
    omegas = {w for _, w in nonlinear}
    if len(omegas) == 1:
        return SnpdVerdict(True, common_omega=omegas.pop())
    # degrees are ascending, so the first differing pair is the smallest
    for i, (a, wa) in enumerate(nonlinear):
        for b, wb in nonlinear[i + 1 :]:
            if wa != wb:
                return SnpdVerdict(False, witness=(a, b))
    raise AssertionError("unreachable: omegas differ but no witness found")


def rho(cd: DegreeSet) -> PrimeSet:
    """Union of the prime divisors of every degree in the set."""
    if len(cd) == 0:
        raise ValueError("rho requires a non-empty degree set")
    primes: set[int] = set()
    for f in cd.factorizations:
        primes.update(f.primes)
    return tuple(sorted(primes))


def sigma(cd: DegreeSet) -> int:
    """Maximum omega over the set; 0 for the all-ones set."""
    if len(cd) == 0:
        raise ValueError("sigma requires a non-empty degree set")
    return max(f.omega for f in cd.factorizations)


def cd_direct_product(cd_a: DegreeSet, cd_b: DegreeSet) -> DegreeSet:
    """Degree set of a direct product: all pairwise products, deduplicated."""
    if len(cd_a) == 0 or len(cd_b) == 0:
        raise ValueError("cd_direct_product requires non-empty degree sets")
    return DegreeSet.from_pairs(
        (a * b, fa * fb) for a, fa in cd_a.pairs() for b, fb in cd_b.pairs()
    )


def profile(name: str, cd: DegreeSet) -> GroupProfile:
    return GroupProfile(name, cd, rho(cd), sigma(cd), snpd_check(cd))
