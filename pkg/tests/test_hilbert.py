"""Hilbert-function arithmetic against independent brute-force oracles."""

from itertools import combinations_with_replacement

import pytest

from aci3 import (
    BettiTable,
    DegreeTuple,
    DomainError,
    HilbertFunction,
    ci_hilbert,
    difference,
    hilbert_from_betti,
    koszul_table,
    min_generator_bound,
    recognize_ci,
    socle_degree,
)
from aci3.hilbert import betti_alternating_sum


def poly_mul(a, b):
    """Schoolbook polynomial product, independent of the convolution in ci_hilbert."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def oracle_ci(degs):
    p = [1]
    for d in degs:
        p = poly_mul(p, [1] * d)
    return tuple(p)


def count_monomials(degree, c):
    """Enumerative oracle for the binomial convention in hilbert_from_betti."""
    if degree < 0:
        return 0
    return sum(1 for _ in combinations_with_replacement(range(c), degree))


def all_sorted_tuples(r, lo, hi):
    return combinations_with_replacement(range(lo, hi + 1), r)


class TestHilbertFunction:
    def test_canonical_trim(self):
        assert HilbertFunction((1, 3, 3, 1, 0, 0)).values == (1, 3, 3, 1)
        assert HilbertFunction(()).is_zero
        assert HilbertFunction((0, 0)).is_zero

    def test_rejects_negative_and_bad_start(self):
        with pytest.raises(DomainError):
            HilbertFunction((1, -1))
        with pytest.raises(DomainError):
            HilbertFunction((2, 1))

    def test_at_outside_support(self):
        h = HilbertFunction((1, 2, 1))
        assert h.at(-1) == 0 and h.at(5) == 0 and h.at(1) == 2


class TestCiHilbert:
    def test_binomial_case(self):
        assert ci_hilbert((2, 2, 2)).values == (1, 3, 3, 1)

    def test_frozen_derived_values(self):
        # frozen from the independent product oracle
        assert oracle_ci((3, 3, 3)) == (1, 3, 6, 7, 6, 3, 1)
        assert ci_hilbert((3, 3, 3)).values == (1, 3, 6, 7, 6, 3, 1)
        assert oracle_ci((2, 2, 3)) == (1, 3, 4, 3, 1)
        assert ci_hilbert((2, 2, 3)).values == (1, 3, 4, 3, 1)

    def test_empty_tuple(self):
        assert ci_hilbert(()).values == (1,)

    def test_matches_oracle_exhaustively(self):
        for r in range(0, 4):
            for degs in all_sorted_tuples(r, 1, 6):
                assert ci_hilbert(degs).values == oracle_ci(degs)

    def test_gorenstein_symmetry(self):
        for degs in all_sorted_tuples(3, 2, 6):
            h = ci_hilbert(degs)
            e = socle_degree(h)
            assert all(h.at(n) == h.at(e - n) for n in range(e + 1))

    def test_value_at_one_is_product(self):
        for degs in all_sorted_tuples(3, 1, 6):
            prod = 1
            for d in degs:
                prod *= d
            assert ci_hilbert(degs).total() == prod

    def test_length(self):
        for degs in all_sorted_tuples(3, 2, 5):
            assert len(ci_hilbert(degs).values) == 1 + sum(d - 1 for d in degs)


class TestDifference:
    def test_order_zero_is_identity(self):
        assert difference(HilbertFunction((1, 3, 3, 1)), 0) == (1, 3, 3, 1)

    def test_first_difference(self):
        assert difference(HilbertFunction((1, 2, 1)), 1) == (1, 1, -1, -1)

    def test_third_difference_of_ci_aaa(self):
        # third difference of H_CI(3,3,3) at degree 2a = 6 equals 3
        d3 = difference(ci_hilbert((3, 3, 3)), 3)
        assert d3[6] == 3

    def test_order_c_sums_to_zero(self):
        for degs in all_sorted_tuples(3, 2, 5):
            assert sum(difference(ci_hilbert(degs), 3)) == 0

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            difference(HilbertFunction((1,)), -1)


class TestSocleDegree:
    def test_values(self):
        assert socle_degree(HilbertFunction((1, 3, 3, 1))) == 3
        assert socle_degree(ci_hilbert((2, 2, 3))) == 4  # sum - r = 7 - 3
        assert socle_degree(HilbertFunction((1,))) == 0

    def test_zero_function_rejected(self):
        with pytest.raises(DomainError, match="zero algebra"):
            socle_degree(HilbertFunction(()))


class TestHilbertFromBetti:
    def test_binomial_convention_against_enumeration(self):
        for c in range(1, 5):
            for d in range(-2, 9):
                from aci3.hilbert import _monomial_count
                assert _monomial_count(d, c) == count_monomials(d, c)

    def test_koszul_of_222(self):
        table = BettiTable(3, ((0,), (2, 2, 2), (4, 4, 4), (6,)))
        assert hilbert_from_betti(table).values == (1, 3, 3, 1)

    def test_rigid_table_a2(self):
        table = BettiTable(3, ((0,), (2, 2, 2, 3), (3, 4, 4, 4, 5), (5, 6)))
        assert hilbert_from_betti(table).values == (1, 3, 3, 1)

    def test_koszul_tables_reproduce_ci(self):
        for r in range(1, 4):
            for degs in all_sorted_tuples(r, 1, 5):
                assert hilbert_from_betti(koszul_table(degs)) == ci_hilbert(degs)

    def test_non_artinian_rejected(self):
        # resolution of a single linear form in three variables
        table = BettiTable(3, ((0,), (1,), (), ()))
        with pytest.raises(DomainError, match="non-finitely-supported"):
            hilbert_from_betti(table)
        # the raw alternating sum is still available and grows linearly
        assert betti_alternating_sum(table, 4) == (1, 2, 3, 4, 5)

    def test_negative_value_rejected(self):
        table = BettiTable(1, ((0,), (1, 1)))
        with pytest.raises(DomainError, match="not a Hilbert function"):
            hilbert_from_betti(table)


class TestRecognizeCi:
    def test_frozen_cases(self):
        assert recognize_ci(HilbertFunction((1, 3, 3, 1))).degrees == (2, 2, 2)
        assert recognize_ci(HilbertFunction((1, 3, 1))) is None
        assert recognize_ci(HilbertFunction((1, 2, 1))).degrees == (2, 2)

    def test_131_by_exhaustion(self):
        # no triple with entries 2..4 produces (1, 3, 1): 3 factors of degree
        # >= 1 each make the socle degree at least 3
        for degs in all_sorted_tuples(3, 2, 4):
            assert ci_hilbert(degs).values != (1, 3, 1)

    def test_round_trip(self):
        for r in range(0, 4):
            for degs in all_sorted_tuples(r, 2, 6):
                found = recognize_ci(ci_hilbert(degs))
                assert found is not None
                assert found.degrees == degs

    def test_lexicographically_least(self):
        # (1, 2, 2, 2, 1) = ci(2, 4) = ci(2, 2) * ... check uniqueness handling
        h = ci_hilbert((2, 4))
        found = recognize_ci(h)
        assert found is not None
        assert ci_hilbert(found) == h

    def test_non_ci_sequences(self):
        assert recognize_ci(HilbertFunction((1, 2, 2, 1, 1))) is None
        # (1,2,2,2,2,1) on the other hand is ci(2,5)
        assert recognize_ci(HilbertFunction((1, 2, 2, 2, 2, 1))).degrees == (2, 5)


class TestMinGeneratorBound:
    def test_gorenstein_131_needs_five(self):
        assert min_generator_bound(HilbertFunction((1, 3, 1)), 3, 2) == 5

    def test_ci_222(self):
        assert min_generator_bound(ci_hilbert((2, 2, 2)), 3, 2) == 3

    def test_no_quadric_generators(self):
        h = HilbertFunction((1, 3, 6, 7))
        assert min_generator_bound(h, 3, 2) == 0

    def test_not_a_hilbert_function(self):
        with pytest.raises(DomainError, match="not a Hilbert function"):
            min_generator_bound(HilbertFunction((1, 9)), 2, 1)


class TestDegreeTuple:
    def test_validation(self):
        with pytest.raises(DomainError):
            DegreeTuple((3, 2))
        with pytest.raises(DomainError):
            DegreeTuple((0, 2))
        assert DegreeTuple((2, 2, 3)).r == 3


class TestBettiTable:
    def test_validation(self):
        with pytest.raises(DomainError):
            BettiTable(3, ((0,), (2,), (4,)))  # wrong level count
        with pytest.raises(DomainError):
            BettiTable(2, ((1,), (2,), (3,)))  # level 0 must be (0,)

    def test_sorting_and_t(self):
        table = BettiTable(3, ((0,), (3, 2, 2), (4, 4, 5), (6, 7)))
        assert table.levels[1] == (2, 2, 3)
        assert table.t == 2

    def test_minimality_check(self):
        assert koszul_table((2, 2, 2)).is_minimal()
        cone_like = BettiTable(3, ((0,), (0, 2, 2), (4,), (6,)))
        assert not cone_like.is_minimal()

    def test_json_round_trip(self):
        table = koszul_table((2, 2, 3))
        assert BettiTable.from_json(table.to_json()) == table
