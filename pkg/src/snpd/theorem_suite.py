"""Mechanical verification suites over the embedded data and the degree engine.

The core is the case tree: for every n >= 8 it selects the branch dictated
by the parity and divisibility of n, checks that branch's arithmetic
subclaims, and produces an explicit witness pair of character degrees of
S_n whose distinct-prime-divisor counts differ strictly. The degrees are
built by closed-form factored arithmetic (products and exact divisions of
factorizations), never by factoring the degree values; the closed forms
themselves are cross-checked against the hook formula by
``sym_degrees.special_degrees``.

The remaining suites replay the sporadic witness pairs, the cover-family
verdicts, the rho/sigma bounds and the subgroup-index arithmetic, and
exhaustively verify the two abelian p-group complement lemmas on the
budgeted family of small groups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import atlas_data
from .abelian import (
    AbelianPGroup,
    Element,
    all_subgroups,
    budgeted_groups,
    element_order,
    elements,
    is_direct_factor,
    is_pure_cyclic,
    verify_lemma_max_order_complement,
    verify_lemma_maximal_subgroup,
)
from .numtheory import Factorization, factor
from .reporting import CheckItem, SuiteReport
from .snpd_core import cd_direct_product, rho, sigma, snpd_check
from .sym_degrees import DegreeSet

__all__ = [
    "AbelianPGroup",
    "Branch",
    "CaseReport",
    "Element",
    "Subclaim",
    "WitnessDegree",
    "all_subgroups",
    "budgeted_groups",
    "case_report",
    "case_tree_suite",
    "element_order",
    "elements",
    "is_direct_factor",
    "is_pure_cyclic",
    "verify_a7_subgroup_indices",
    "verify_case_tree",
    "verify_cover_families",
    "verify_lemma_max_order_complement",
    "verify_lemma_maximal_subgroup",
    "verify_lemmas",
    "verify_rho_sigma_bounds",
    "verify_sporadic_pairs",
]


class Branch(str, Enum):
    EVEN = "even"
    FOUR_DIVIDES_NM1 = "four_divides_nm1"
    NM2_NOT_PRIME_POWER = "nm2_not_prime_power"
    DIV3_NM1 = "div3_nm1"
    DIV3_NM2 = "div3_nm2"
    DIV3_NM3 = "div3_nm3"


@dataclass(frozen=True)
class Subclaim:
    description: str
    passed: bool


@dataclass(frozen=True)
class WitnessDegree:
    value: int
    factorization: Factorization

    @property
    def omega(self) -> int:
        return self.factorization.omega

    def __str__(self) -> str:
        return f"{self.value}={self.factorization}"


@dataclass(frozen=True)
class CaseReport:
    n: int
    branch: Branch
    subclaims: tuple[Subclaim, ...]
    witness: tuple[WitnessDegree, WitnessDegree]
    passed: bool

    def to_dict(self) -> dict:
        low, high = self.witness
        return {
            "n": self.n,
            "branch": self.branch.value,
            "passed": self.passed,
            "subclaims": [
                {"claim": s.description, "passed": s.passed} for s in self.subclaims
            ],
            "witness": {
                "low": {
                    "value": str(low.value),
                    "factorization": str(low.factorization),
                    "omega": low.omega,
                },
                "high": {
                    "value": str(high.value),
                    "factorization": str(high.factorization),
                    "omega": high.omega,
                },
            },
        }


_TWO = Factorization(((2, 1),))
_SIX = Factorization(((2, 1), (3, 1)))


def _witness(fact: Factorization) -> WitnessDegree:
    return WitnessDegree(fact.value(), fact)


def case_report(n: int) -> CaseReport:
    """Branch selection, subclaims and witness degrees for one n >= 8.

    Exactly one branch fires for every n. A failing subclaim or a
    non-strict witness marks the report failed; nothing raises.
    """
    if n < 8:
        raise ValueError(f"the case tree starts at n = 8, got {n}")
    f_nm1 = factor(n - 1)
    f_nm2 = factor(n - 2)
    low = WitnessDegree(n - 1, f_nm1)
    d2 = (f_nm1 * f_nm2).exact_div(_TWO)
    subclaims: list[Subclaim]
    if n % 2 == 0:
        branch = Branch.EVEN
        half = (n - 2) // 2
        subclaims = [
            Subclaim(f"gcd({n - 1}, {half}) = 1", math.gcd(n - 1, half) == 1)
        ]
        high = _witness(d2)
    elif (n - 1) % 4 == 0:
        branch = Branch.FOUR_DIVIDES_NM1
        half = (n - 1) // 2
        subclaims = [
            Subclaim(
                f"omega({n - 1}) = omega({half})", f_nm1.omega == factor(half).omega
            )
        ]
        high = _witness(d2)
    elif f_nm2.omega >= 2:
        # contrapositive branch: n-2 fails to be a prime power
        branch = Branch.NM2_NOT_PRIME_POWER
        subclaims = [Subclaim(f"omega({n - 2}) >= 2", f_nm2.omega >= 2)]
        high = _witness(d2)
    elif (n - 1) % 3 == 0:
        branch = Branch.DIV3_NM1
        third = (n - 1) // 3
        half5 = (n - 5) // 2
        core = (factor(n) * factor(n - 5)).exact_div(_TWO)
        subclaims = [
            Subclaim(f"gcd({n}, {third}) = 1", math.gcd(n, third) == 1),
            Subclaim(f"gcd({third}, {half5}) = 1", math.gcd(third, half5) == 1),
            Subclaim(f"{n}*{half5} is not a prime power", core.omega >= 2),
        ]
        d4 = (factor(n) * f_nm1 * factor(n - 5)).exact_div(_SIX)
        high = _witness(d4)
    elif (n - 2) % 3 == 0:
        branch = Branch.DIV3_NM2
        subclaims = [Subclaim(f"{n - 2} is a power of 3", f_nm2.primes == (3,))]
        d3 = (f_nm1 * f_nm2 * factor(n - 3)).exact_div(_SIX)
        high = _witness(d3)
    else:
        branch = Branch.DIV3_NM3
        subclaims = [Subclaim(f"3 divides {n - 3}", (n - 3) % 3 == 0)]
        d3 = (f_nm1 * f_nm2 * factor(n - 3)).exact_div(_SIX)
        high = _witness(d3)
    passed = all(s.passed for s in subclaims) and low.omega < high.omega
    return CaseReport(n, branch, tuple(subclaims), (low, high), passed)


def verify_case_tree(n_max: int) -> list[CaseReport]:
    """One report for every n in [8, n_max]; never aborts on failure."""
    if n_max < 8:
        raise ValueError(f"n_max must be at least 8, got {n_max}")
    return [case_report(n) for n in range(8, n_max + 1)]


def case_tree_suite(n_max: int) -> SuiteReport:
    items = []
    for report in verify_case_tree(n_max):
        low, high = report.witness
        claims = "; ".join(
            f"{s.description}: {'ok' if s.passed else 'FAILED'}" for s in report.subclaims
        )
        items.append(
            CheckItem(
                f"n={report.n}",
                report.passed,
                f"branch={report.branch.value}; witness {low} (omega={low.omega})"
                f" < {high} (omega={high.omega}); {claims}",
            )
        )
    return SuiteReport("theorem12", tuple(items))


def verify_sporadic_pairs() -> SuiteReport:
    """Every embedded sporadic/Tits pair is a non-SNPD witness."""
    items = []
    for pair in atlas_data.sporadic_pairs():
        problems = []
        if pair.first.factorization.value() != pair.first.value:
            problems.append(f"{pair.first.value} does not reconstruct")
        if pair.second.factorization.value() != pair.second.value:
            problems.append(f"{pair.second.value} does not reconstruct")
        wa = pair.first.factorization.omega
        wb = pair.second.factorization.omega
        if wa == wb:
            problems.append(f"omega values agree at {wa}")
        cd = DegreeSet.from_pairs(
            [
                (1, Factorization()),
                (pair.first.value, pair.first.factorization),
                (pair.second.value, pair.second.factorization),
            ]
        )
        verdict = snpd_check(cd)
        expected_witness = tuple(sorted((pair.first.value, pair.second.value)))
        if verdict.is_snpd or verdict.witness != expected_witness:
            problems.append(f"unexpected verdict {verdict}")
        items.append(
            CheckItem(
                pair.name,
                not problems,
                "; ".join(problems)
                or f"omega({pair.first.value})={wa} != omega({pair.second.value})={wb}",
            )
        )
    return SuiteReport("sporadic", tuple(items))


# Expected verdict per embedded full degree set: common omega when SNPD,
# otherwise the witness pair the check must report.
_RECORD_EXPECT: dict[str, int | tuple[int, int]] = {
    "L_2(4)": 1,
    "L_2(8)": 1,
    "A_7": 2,
    "S_7": 2,
    "3.A_7": 2,
    "2.S_7": (6, 8),
    "3.S_7": (6, 30),
    "6.S_7": (6, 8),
}

# Cover families: expected verdict for each subset plus the embedded records
# the subset must be contained in.
_FAMILY_EXPECT: dict[str, tuple[int | tuple[int, int], tuple[str, ...]]] = {
    "A_7": (2, ("A_7",)),
    "2.A_7": ((4, 14), ()),
    "3.A_7": (2, ("3.A_7",)),
    "6.A_7": (2, ()),
    "2.S_7 & 6.S_7": ((6, 8), ("2.S_7", "6.S_7")),
    "3.S_7": ((6, 30), ("3.S_7",)),
}


def _check_verdict(name: str, cd: DegreeSet, expect: int | tuple[int, int]) -> CheckItem:
    verdict = snpd_check(cd)
    if isinstance(expect, int):
        ok = verdict.is_snpd and verdict.common_omega == expect
        detail = (
            f"SNPD with common omega {verdict.common_omega}"
            if verdict.is_snpd
            else f"unexpectedly failed with witness {verdict.witness}"
        )
    else:
        ok = not verdict.is_snpd and verdict.witness == expect
        detail = (
            f"not SNPD, witness {verdict.witness}"
            if not verdict.is_snpd
            else "unexpectedly passed"
        )
    return CheckItem(name, ok, detail)


def verify_cover_families() -> SuiteReport:
    """SNPD verdicts for the embedded degree sets and all cover subsets."""
    items = []
    for name, expect in _RECORD_EXPECT.items():
        items.append(_check_verdict(f"cd({name})", atlas_data.lookup(name).cd, expect))
    for family in atlas_data.cover_families_a7():
        expect, parents = _FAMILY_EXPECT[family.name]
        for subset in family.degree_subsets:
            label = "{" + ",".join(str(d) for d in subset.degrees) + "}"
            items.append(_check_verdict(f"family {family.name} {label}", subset, expect))
            for parent in parents:
                parent_cd = atlas_data.lookup(parent).cd
                contained = all(d in parent_cd for d in subset.degrees)
                items.append(
                    CheckItem(
                        f"family {family.name} {label} inside cd({parent})",
                        contained,
                        "subset of the embedded record" if contained else "NOT a subset",
                    )
                )
    return SuiteReport("covers", tuple(items))


# rho and sigma expected per classified group; the last entry is the cyclic
# 2-group extension of A_7 whose degree set equals cd(S_7).
_RHO_SIGMA_EXPECT: tuple[tuple[str, str, tuple[int, ...], int], ...] = (
    ("L_2(4)", "L_2(4)", (2, 3, 5), 1),
    ("L_2(8)", "L_2(8)", (2, 3, 7), 1),
    ("A_7", "A_7", (2, 3, 5, 7), 2),
    ("S_7", "S_7", (2, 3, 5, 7), 2),
    ("3.A_7", "3.A_7", (2, 3, 5, 7), 2),
    ("A_7:2^k", "S_7", (2, 3, 5, 7), 2),
)

_ONES = DegreeSet.from_pairs([(1, Factorization())])


def verify_rho_sigma_bounds() -> SuiteReport:
    """rho inside {2,3,5,7} and sigma in {1,2} for every classified group,
    stable under a direct product with an all-ones (abelian) degree set."""
    items = []
    for name, record_name, want_rho, want_sigma in _RHO_SIGMA_EXPECT:
        cd = atlas_data.lookup(record_name).cd
        got_rho = rho(cd)
        got_sigma = sigma(cd)
        ok = (
            set(got_rho) <= {2, 3, 5, 7}
            and got_sigma in (1, 2)
            and got_rho == want_rho
            and got_sigma == want_sigma
        )
        items.append(
            CheckItem(
                name,
                ok,
                f"rho={{{','.join(str(p) for p in got_rho)}}} sigma={got_sigma}",
            )
        )
        product = cd_direct_product(_ONES, cd)
        stable = (
            rho(product) == got_rho
            and sigma(product) == got_sigma
            and snpd_check(product) == snpd_check(cd)
        )
        items.append(
            CheckItem(
                f"{name} x abelian",
                stable,
                "rho, sigma and verdict unchanged" if stable else "changed by product",
            )
        )
    return SuiteReport("corollary", tuple(items))


# Index factorizations as published for the maximal subgroups of A_7.
_INDEX_FORMS = {
    "L_2(7)": ((3, 1), (5, 1)),
    "S_5": ((3, 1), (7, 1)),
    "A_6": ((7, 1),),
    "(A_4xC_3):C_2": ((5, 1), (7, 1)),
}


def verify_a7_subgroup_indices() -> SuiteReport:
    """index * order = |A_7| and the printed index factorizations."""
    items = []
    for record in atlas_data.maximal_subgroups_a7():
        product_ok = record.index * record.subgroup_order == 2520
        form_ok = factor(record.index).pairs == _INDEX_FORMS[record.subgroup_name]
        items.append(
            CheckItem(
                record.subgroup_name,
                product_ok and form_ok,
                f"{record.index} * {record.subgroup_order} = "
                f"{record.index * record.subgroup_order}; index = {factor(record.index)}",
            )
        )
    return SuiteReport("table2", tuple(items))


def verify_lemmas() -> SuiteReport:
    """Both abelian p-group lemmas over the whole budgeted family."""
    items = []
    for group in budgeted_groups():
        for tag, verifier in (
            ("max-order complement", verify_lemma_max_order_complement),
            ("maximal-subgroup complement", verify_lemma_maximal_subgroup),
        ):
            report = verifier(group)
            summary = report.items[-1]
            failures = "; ".join(
                f"{item.name}: {item.detail}" for item in report.failures()
            )
            items.append(
                CheckItem(
                    f"{tag}: {group}",
                    report.passed,
                    failures or summary.detail,
                )
            )
    return SuiteReport("lemmas", tuple(items))
