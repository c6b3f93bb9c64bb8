import math

import pytest

from snpd.numtheory import Factorization, IntegrityError
from snpd.partitions import Partition, conjugate, iter_partitions, syt_count
from snpd.sym_degrees import (
    DegreeSet,
    an_degree_multiset,
    an_restriction_classes,
    cd_an,
    cd_sn,
    character_degree,
    degree_factorization,
    degree_sn,
    special_degrees,
)


def test_degree_examples():
    assert degree_sn(Partition((6, 1))) == 6
    assert degree_sn(Partition((7,))) == 1
    assert degree_sn(Partition((4, 1, 1, 1))) == 20


def test_degree_factorization_examples():
    assert degree_factorization(Partition((6, 1))).pairs == ((2, 1), (3, 1))
    assert degree_factorization(Partition((9,))).pairs == ()
    assert degree_factorization(Partition((4, 1, 1, 1))).pairs == ((2, 2), (5, 1))


def test_cd_sn_examples():
    assert cd_sn(7).degrees == (1, 6, 14, 15, 20, 21, 35)
    assert cd_sn(1).degrees == (1,)
    assert cd_sn(2).degrees == (1,)
    with pytest.raises(ValueError):
        cd_sn(0)


def test_cd_an_examples():
    assert cd_an(7).degrees == (1, 6, 10, 14, 15, 21, 35)
    assert cd_an(5).degrees == (1, 3, 4, 5)
    assert cd_an(3).degrees == (1,)
    with pytest.raises(ValueError):
        cd_an(1)


def test_sum_of_degree_squares_is_factorial():
    for n in range(1, 26):
        total = sum(degree_sn(lam) ** 2 for lam in iter_partitions(n))
        assert total == math.factorial(n)


def test_an_degree_squares_sum_to_half_factorial():
    for n in range(2, 21):
        total = sum(v * v for v, _ in an_degree_multiset(n))
        assert total == math.factorial(n) // 2


def test_an_restriction_class_counts():
    # one class per conjugation orbit; split classes carry multiplicity 2
    for n in range(2, 15):
        classes = list(an_restriction_classes(n))
        irreducibles = sum(count for _, count, _, _ in classes)
        pairs = sum(1 for _, count, _, _ in classes if count == 1)
        splits = sum(1 for _, count, _, _ in classes if count == 2)
        total_shapes = sum(1 for _ in iter_partitions(n))
        assert 2 * pairs + splits == total_shapes
        assert irreducibles == pairs + 2 * splits


def test_degree_invariant_under_conjugation():
    for n in range(1, 16):
        for lam in iter_partitions(n):
            assert degree_sn(lam) == degree_sn(conjugate(lam))


def test_degree_equals_tableau_count_oracle():
    for n in range(1, 11):
        for lam in iter_partitions(n):
            assert degree_sn(lam) == syt_count(lam)


def test_degree_factorization_reconstructs_up_to_20():
    for n in range(1, 21):
        for lam in iter_partitions(n):
            assert degree_factorization(lam).value() == degree_sn(lam)


def test_degree_factorization_primes_bounded_by_n():
    for n in range(2, 21):
        for lam in iter_partitions(n):
            assert all(p <= n for p in degree_factorization(lam).primes)


def test_character_degree_record():
    c = character_degree(Partition((4, 1, 1, 1)))
    assert c.value == 20
    assert c.factorization.value() == 20
    assert c.partition.n == 7


def test_large_n_structural_factorization_stays_cheap():
    # value has dozens of digits; factorization comes from valuations alone
    lam = Partition((30, 15, 10, 5))
    fact = degree_factorization(lam)
    assert all(p <= 60 for p in fact.primes)
    assert fact.value() == degree_sn(lam)


def test_special_degrees_examples():
    s8 = special_degrees(8)
    assert (s8.d1, s8.d2, s8.d3, s8.d4) == (7, 21, 35, 28)
    assert special_degrees(11).d3 == 120
    assert special_degrees(19).d4 == 798
    with pytest.raises(ValueError):
        special_degrees(7)


def test_special_degrees_dual_computation_agrees_through_40():
    for n in range(8, 41):
        s = special_degrees(n)
        assert s.d1 == degree_sn(Partition((n - 1, 1)))
        assert s.d2 == degree_sn(Partition((n - 2, 1, 1)))
        assert s.d3 == degree_sn(Partition((n - 3, 1, 1, 1)))
        assert s.d4 == degree_sn(Partition((n - 3, 3)))


def test_degree_set_construction():
    ds = DegreeSet.from_values([6, 1, 6, 35])
    assert ds.degrees == (1, 6, 35)
    assert 6 in ds and 7 not in ds
    assert len(ds) == 3
    with pytest.raises(ValueError):
        DegreeSet.from_values([0])
    with pytest.raises(IntegrityError):
        DegreeSet.from_pairs([(6, Factorization.of({2: 1, 3: 1})), (6, Factorization.of({2: 1}))])
    with pytest.raises(IntegrityError):
        DegreeSet((6,), (Factorization.of({5: 1}),))
