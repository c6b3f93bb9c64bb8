"""Embedded character-degree data for the groups this package reasons about.

The records live in source as literal structures so the test suite cannot
drift from the data; export exists for interoperability. Every degree is
stored together with its factorization exactly as published, and
``integrity_check`` re-multiplies each one (and recomputes the symmetric
and alternating degree sets from hooks) before any verification suite runs.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from .numtheory import Factorization
from .reporting import CheckItem, SuiteReport
from .sym_degrees import DegreeSet, cd_an, cd_sn

__all__ = [
    "CoverFamily",
    "GroupDegreeRecord",
    "LabeledDegree",
    "MaxSubgroupRecord",
    "SporadicPair",
    "canonical_name",
    "cover_families_a7",
    "dataset_dict",
    "export_data",
    "group_names",
    "group_orders",
    "integrity_check",
    "load_json",
    "lookup",
    "maximal_subgroups_a7",
    "sporadic_pairs",
]


@dataclass(frozen=True)
class GroupDegreeRecord:
    name: str
    cd: DegreeSet
    provenance: str
    complete: bool


@dataclass(frozen=True)
class LabeledDegree:
    label: str  # opaque character label as published
    value: int
    factorization: Factorization


@dataclass(frozen=True)
class SporadicPair:
    name: str
    first: LabeledDegree
    second: LabeledDegree


@dataclass(frozen=True)
class MaxSubgroupRecord:
    subgroup_name: str
    index: int
    subgroup_order: int


@dataclass(frozen=True)
class CoverFamily:
    name: str
    degree_subsets: tuple[DegreeSet, ...]
    provenance: str


def _ds(entries: dict[int, dict[int, int]]) -> DegreeSet:
    return DegreeSet.from_pairs((v, Factorization.of(f)) for v, f in entries.items())


_PROV_SMALL = "atlas:simple-group-degree-table"
_PROV_COVERS = "atlas:S_7-cover-degree-table"
_PROV_3A7 = "atlas:3.A_7-degree-list"
_PROV_SPORADIC = "atlas:sporadic-extendible-pairs"
_PROV_MAXSUB = "atlas:A_7-maximal-subgroups"
_PROV_FAMILIES = "atlas:A_7-cover-degree-subsets"
_PROV_WITNESS = "atlas:S_7-cover-witness-subsets"

_A7_DEGREES = {
    1: {},
    6: {2: 1, 3: 1},
    10: {2: 1, 5: 1},
    14: {2: 1, 7: 1},
    15: {3: 1, 5: 1},
    21: {3: 1, 7: 1},
    35: {5: 1, 7: 1},
}
_S7_DEGREES = {
    1: {},
    6: {2: 1, 3: 1},
    14: {2: 1, 7: 1},
    15: {3: 1, 5: 1},
    20: {2: 2, 5: 1},
    21: {3: 1, 7: 1},
    35: {5: 1, 7: 1},
}

_GROUPS = (
    GroupDegreeRecord(
        "L_2(4)", _ds({1: {}, 3: {3: 1}, 4: {2: 2}, 5: {5: 1}}), _PROV_SMALL, True
    ),
    GroupDegreeRecord(
        "L_2(8)", _ds({1: {}, 7: {7: 1}, 8: {2: 3}, 9: {3: 2}}), _PROV_SMALL, True
    ),
    GroupDegreeRecord("A_7", _ds(_A7_DEGREES), _PROV_SMALL, True),
    GroupDegreeRecord("S_7", _ds(_S7_DEGREES), _PROV_SMALL, True),
    GroupDegreeRecord(
        "3.A_7", _ds({**_A7_DEGREES, 24: {2: 3, 3: 1}}), _PROV_3A7, True
    ),
    GroupDegreeRecord(
        "2.S_7",
        _ds({**_S7_DEGREES, 8: {2: 3}, 28: {2: 2, 7: 1}, 36: {2: 2, 3: 2}}),
        _PROV_COVERS,
        True,
    ),
    GroupDegreeRecord(
        "3.S_7",
        _ds(
            {
                **_S7_DEGREES,
                12: {2: 2, 3: 1},
                30: {2: 1, 3: 1, 5: 1},
                42: {2: 1, 3: 1, 7: 1},
                48: {2: 4, 3: 1},
            }
        ),
        _PROV_COVERS,
        True,
    ),
    GroupDegreeRecord(
        "6.S_7",
        _ds(
            {
                **_S7_DEGREES,
                8: {2: 3},
                12: {2: 2, 3: 1},
                28: {2: 2, 7: 1},
                30: {2: 1, 3: 1, 5: 1},
                36: {2: 2, 3: 2},
                42: {2: 1, 3: 1, 7: 1},
                48: {2: 4, 3: 1},
                72: {2: 3, 3: 2},
            }
        ),
        _PROV_COVERS,
        True,
    ),
)

_GROUP_INDEX = {record.name: record for record in _GROUPS}

# Orders are embedded only where integrity checks need them.
_GROUP_ORDERS = {"A_7": 2520, "S_7": 5040}


def _pair(name: str, a: tuple, b: tuple) -> SporadicPair:
    return SporadicPair(
        name,
        LabeledDegree(a[0], a[1], Factorization.of(a[2])),
        LabeledDegree(b[0], b[1], Factorization.of(b[2])),
    )


# One extendible-degree pair per sporadic group plus the Tits group; the two
# omega values differ in every row, which is what verify_sporadic_table asserts.
_SPORADIC = (
    _pair("M_11", ("chi_5", 11, {11: 1}), ("chi_10", 55, {5: 1, 11: 1})),
    _pair("M_12", ("chi_2", 11, {11: 1}), ("chi_11", 66, {2: 1, 3: 1, 11: 1})),
    _pair("M_22", ("chi_2", 21, {3: 1, 7: 1}), ("chi_8", 210, {2: 1, 3: 1, 5: 1, 7: 1})),
    _pair("M_23", ("chi_2", 22, {2: 1, 11: 1}), ("chi_10", 770, {2: 1, 5: 1, 7: 1, 11: 1})),
    _pair("M_24", ("chi_2", 23, {23: 1}), ("chi_9", 483, {3: 1, 7: 1, 23: 1})),
    _pair("J_1", ("chi_6", 77, {7: 1, 11: 1}), ("chi_9", 120, {2: 3, 3: 1, 5: 1})),
    _pair("J_2", ("chi_2", 14, {2: 1, 7: 1}), ("chi_8", 70, {2: 1, 5: 1, 7: 1})),
    _pair("J_3", ("chi_6", 324, {2: 2, 3: 4}), ("chi_10", 1140, {2: 2, 3: 1, 5: 1, 19: 1})),
    _pair("J_4", ("chi_2", 1333, {31: 1, 43: 1}), ("chi_4", 299367, {3: 2, 29: 1, 31: 1, 37: 1})),
    _pair("Co_1", ("chi_3", 299, {13: 1, 23: 1}), ("chi_5", 8855, {5: 1, 7: 1, 11: 1, 23: 1})),
    _pair("Co_2", ("chi_2", 23, {23: 1}), ("chi_5", 1771, {7: 1, 11: 1, 23: 1})),
    _pair("Co_3", ("chi_2", 23, {23: 1}), ("chi_8", 1771, {7: 1, 11: 1, 23: 1})),
    _pair("HS", ("chi_2", 22, {2: 1, 11: 1}), ("chi_10", 770, {2: 1, 5: 1, 7: 1, 11: 1})),
    _pair("McL", ("chi_2", 22, {2: 1, 11: 1}), ("chi_5", 770, {2: 1, 5: 1, 7: 1, 11: 1})),
    _pair("He", ("chi_2", 51, {3: 1, 17: 1}), ("chi_13", 4080, {2: 4, 3: 1, 5: 1, 17: 1})),
    _pair("Ru", ("chi_2", 378, {2: 1, 3: 3, 7: 1}), ("chi_6", 3276, {2: 2, 3: 2, 7: 1, 13: 1})),
    _pair("Suz", ("chi_2", 143, {11: 1, 13: 1}), ("chi_4", 780, {2: 2, 3: 1, 5: 1, 13: 1})),
    _pair("O'N", ("chi_3", 13376, {2: 6, 11: 1, 19: 1}), ("chi_11", 52668, {2: 2, 3: 2, 7: 1, 11: 1, 19: 1})),
    _pair("HN", ("chi_2", 133, {7: 1, 19: 1}), ("chi_6", 8778, {2: 1, 3: 1, 7: 1, 11: 1, 19: 1})),
    _pair("Ly", ("chi_2", 2480, {2: 4, 5: 1, 31: 1}), ("chi_5", 48174, {2: 1, 3: 1, 7: 1, 31: 1, 37: 1})),
    _pair("Th", ("chi_2", 248, {2: 3, 31: 1}), ("chi_6", 30628, {2: 2, 13: 1, 19: 1, 31: 1})),
    _pair("Fi_22", ("chi_2", 78, {2: 1, 3: 1, 13: 1}), ("chi_6", 3003, {3: 1, 7: 1, 11: 1, 13: 1})),
    _pair("Fi_23", ("chi_2", 782, {2: 1, 17: 1, 23: 1}), ("chi_5", 25806, {2: 1, 3: 1, 11: 1, 17: 1, 23: 1})),
    _pair("Fi_24'", ("chi_2", 8671, {13: 1, 23: 1, 29: 1}), ("chi_4", 249458, {2: 1, 11: 1, 17: 1, 23: 1, 29: 1})),
    _pair("B", ("chi_2", 4371, {3: 1, 31: 1, 47: 1}), ("chi_4", 1139374, {2: 1, 17: 1, 23: 1, 31: 1, 47: 1})),
    _pair("M", ("chi_2", 196883, {47: 1, 59: 1, 71: 1}), ("chi_3", 21296876, {2: 2, 31: 1, 41: 1, 59: 1, 71: 1})),
    _pair("2F4(2)'", ("chi_7", 300, {2: 2, 3: 1, 5: 2}), ("chi_15", 675, {3: 3, 5: 2})),
)

_MAX_SUBGROUPS = (
    MaxSubgroupRecord("L_2(7)", 15, 168),
    MaxSubgroupRecord("S_5", 21, 120),
    MaxSubgroupRecord("A_6", 7, 360),
    MaxSubgroupRecord("(A_4xC_3):C_2", 35, 72),
)

# Degree subsets forced into cd(G) by which cover of A_7 (resp. S_7) appears
# as a quotient, with the inducing linear character scaled out. The witness
# subsets are the two-element non-SNPD certificates for the S_7 covers.
_COVER_FAMILIES = (
    CoverFamily(
        "A_7",
        (_ds({1: {}, 6: {2: 1, 3: 1}, 10: {2: 1, 5: 1}, 14: {2: 1, 7: 1}, 15: {3: 1, 5: 1}, 21: {3: 1, 7: 1}, 35: {5: 1, 7: 1}}),),
        _PROV_FAMILIES,
    ),
    CoverFamily(
        "2.A_7",
        (_ds({4: {2: 2}, 14: {2: 1, 7: 1}, 20: {2: 2, 5: 1}, 36: {2: 2, 3: 2}}),),
        _PROV_FAMILIES,
    ),
    CoverFamily(
        "3.A_7",
        (_ds({6: {2: 1, 3: 1}, 15: {3: 1, 5: 1}, 21: {3: 1, 7: 1}, 24: {2: 3, 3: 1}}),),
        _PROV_FAMILIES,
    ),
    CoverFamily(
        "6.A_7",
        (_ds({6: {2: 1, 3: 1}, 24: {2: 3, 3: 1}, 36: {2: 2, 3: 2}}),),
        _PROV_FAMILIES,
    ),
    CoverFamily(
        "2.S_7 & 6.S_7",
        (_ds({6: {2: 1, 3: 1}, 8: {2: 3}}),),
        _PROV_WITNESS,
    ),
    CoverFamily(
        "3.S_7",
        (_ds({6: {2: 1, 3: 1}, 30: {2: 1, 3: 1, 5: 1}}),),
        _PROV_WITNESS,
    ),
)

_NAME_ALIASES = {
    "²F₄(2)′": "2F4(2)'",
    "2F4(2)′": "2F4(2)'",
}


def canonical_name(name: str) -> str:
    cleaned = name.strip()
    return _NAME_ALIASES.get(cleaned, cleaned)


def group_names() -> tuple[str, ...]:
    return tuple(record.name for record in _GROUPS)


def group_orders() -> dict[str, int]:
    return dict(_GROUP_ORDERS)


def lookup(name: str) -> GroupDegreeRecord:
    """Embedded degree record by group name; raises with the available names."""
    record = _GROUP_INDEX.get(canonical_name(name))
    if record is None:
        known = ", ".join(group_names())
        raise KeyError(f"unknown group {name!r}; available: {known}")
    return record


def sporadic_pairs() -> tuple[SporadicPair, ...]:
    return _SPORADIC


def maximal_subgroups_a7() -> tuple[MaxSubgroupRecord, ...]:
    return _MAX_SUBGROUPS


def cover_families_a7() -> tuple[CoverFamily, ...]:
    return _COVER_FAMILIES


def integrity_check() -> SuiteReport:
    """Re-verify every embedded factorization and the hook-formula agreement."""
    items: list[CheckItem] = []
    for record in _GROUPS:
        ok = all(f.value() == d for d, f in record.cd.pairs())
        items.append(CheckItem(f"{record.name}: factorizations reconstruct", ok))
        if record.complete:
            items.append(CheckItem(f"{record.name}: full cd contains 1", 1 in record.cd))
        order = _GROUP_ORDERS.get(record.name)
        if record.complete and order is not None:
            ok = all(order % d == 0 for d in record.cd.degrees)
            items.append(
                CheckItem(f"{record.name}: degrees divide order {order}", ok)
            )
    for computed_name, computed, embedded in (
        ("cd_sn(7)", cd_sn(7), _GROUP_INDEX["S_7"].cd),
        ("cd_an(7)", cd_an(7), _GROUP_INDEX["A_7"].cd),
    ):
        ok = computed == embedded
        items.append(CheckItem(f"{computed_name} matches the embedded record", ok))
    for pair in _SPORADIC:
        ok = (
            pair.first.factorization.value() == pair.first.value
            and pair.second.factorization.value() == pair.second.value
        )
        items.append(CheckItem(f"{pair.name}: pair reconstructs", ok))
    for family in _COVER_FAMILIES:
        ok = all(
            f.value() == d for subset in family.degree_subsets for d, f in subset.pairs()
        )
        items.append(CheckItem(f"cover family {family.name}: subsets reconstruct", ok))
    for sub in _MAX_SUBGROUPS:
        items.append(
            CheckItem(
                f"{sub.subgroup_name}: index*order = 2520",
                sub.index * sub.subgroup_order == 2520,
            )
        )
    return SuiteReport("integrity", tuple(items))


def _fact_json(f: Factorization) -> list[list[str]]:
    return [[str(p), str(e)] for p, e in f.pairs]


def _degrees_json(cd: DegreeSet) -> list[dict]:
    return [{"value": str(d), "factorization": _fact_json(f)} for d, f in cd.pairs()]


def dataset_dict() -> dict:
    """The full embedded dataset, integers as decimal strings, stable order."""
    return {
        "groups": [
            {
                "name": record.name,
                "provenance": record.provenance,
                "complete": record.complete,
                "order": str(_GROUP_ORDERS[record.name]) if record.name in _GROUP_ORDERS else None,
                "degrees": _degrees_json(record.cd),
            }
            for record in _GROUPS
        ],
        "sporadic_pairs": [
            {
                "name": pair.name,
                "first": {
                    "label": pair.first.label,
                    "value": str(pair.first.value),
                    "factorization": _fact_json(pair.first.factorization),
                },
                "second": {
                    "label": pair.second.label,
                    "value": str(pair.second.value),
                    "factorization": _fact_json(pair.second.factorization),
                },
            }
            for pair in _SPORADIC
        ],
        "maximal_subgroups": [
            {
                "subgroup": sub.subgroup_name,
                "index": str(sub.index),
                "order": str(sub.subgroup_order),
            }
            for sub in _MAX_SUBGROUPS
        ],
        "cover_families": [
            {
                "name": family.name,
                "provenance": family.provenance,
                "subsets": [_degrees_json(subset) for subset in family.degree_subsets],
            }
            for family in _COVER_FAMILIES
        ],
    }


def load_json(path: str | Path) -> dict:
    """Load a JSON export; round-trips against dataset_dict()."""
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _fact_csv(f: Factorization) -> str:
    return str(f)


def _export_csv(destination: Path) -> None:
    destination.mkdir(parents=True, exist_ok=True)
    with open(destination / "groups.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["name", "provenance", "complete", "order", "degrees", "factorizations"])
        for record in _GROUPS:
            writer.writerow(
                [
                    record.name,
                    record.provenance,
                    str(record.complete).lower(),
                    _GROUP_ORDERS.get(record.name, ""),
                    " ".join(str(d) for d in record.cd.degrees),
                    ";".join(_fact_csv(f) for f in record.cd.factorizations),
                ]
            )
    with open(destination / "sporadic_pairs.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            [
                "name",
                "first_label",
                "first_degree",
                "first_factorization",
                "second_label",
                "second_degree",
                "second_factorization",
            ]
        )
        for pair in _SPORADIC:
            writer.writerow(
                [
                    pair.name,
                    pair.first.label,
                    pair.first.value,
                    _fact_csv(pair.first.factorization),
                    pair.second.label,
                    pair.second.value,
                    _fact_csv(pair.second.factorization),
                ]
            )
    with open(destination / "maximal_subgroups.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["subgroup", "index", "order"])
        for sub in _MAX_SUBGROUPS:
            writer.writerow([sub.subgroup_name, sub.index, sub.subgroup_order])
    with open(destination / "cover_families.csv", "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["name", "provenance", "subset_index", "degrees", "factorizations"])
        for family in _COVER_FAMILIES:
            for i, subset in enumerate(family.degree_subsets):
                writer.writerow(
                    [
                        family.name,
                        family.provenance,
                        i,
                        " ".join(str(d) for d in subset.degrees),
                        ";".join(_fact_csv(f) for f in subset.factorizations),
                    ]
                )


def export_data(format: str, destination: str | Path) -> None:
    """Serialize the embedded dataset as JSON (one file) or CSV (one directory)."""
    dest = Path(destination)
    if format == "json":
        if dest.parent and not dest.parent.exists():
            raise FileNotFoundError(f"no such directory: {dest.parent}")
        with open(dest, "w", encoding="utf-8") as handle:
            json.dump(dataset_dict(), handle, indent=2, ensure_ascii=True)
            handle.write("\n")
    elif format == "csv":
        _export_csv(dest)
    else:
        raise ValueError(f"unsupported export format {format!r}")
