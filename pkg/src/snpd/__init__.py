"""Exact character-degree arithmetic for symmetric and alternating groups,
SNPD classification checks, and the verification suites behind them."""

__version__ = "0.1.0"

from .numtheory import (
    Factorization,
    IntegrityError,
    factor,
    is_prime,
    is_prime_power,
    legendre_valuation,
    omega,
    pi_set,
)
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    hook_lengths,
    is_self_conjugate,
    iter_partitions,
    syt_count,
)
from .snpd_core import SnpdVerdict, cd_direct_product, profile, rho, sigma, snpd_check
from .sym_degrees import (
    CharacterDegree,
    DegreeSet,
    SpecialDegrees,
    cd_an,
    cd_sn,
    degree_factorization,
    degree_sn,
    special_degrees,
)

__all__ = [
    "CharacterDegree",
    "DegreeSet",
    "Factorization",
    "IntegrityError",
    "Partition",
    "SnpdVerdict",
    "SpecialDegrees",
    "cd_an",
    "cd_direct_product",
    "cd_sn",
    "conjugate",
    "degree_factorization",
    "degree_sn",
    "enumerate_partitions",
    "factor",
    "hook_lengths",
    "is_prime",
    "is_prime_power",
    "is_self_conjugate",
    "iter_partitions",
    "legendre_valuation",
    "omega",
    "pi_set",
    "profile",
    "rho",
    "sigma",
    "snpd_check",
    "special_degrees",
    "syt_count",
    "__version__",
]
