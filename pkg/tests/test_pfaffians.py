"""Polynomial arithmetic, alternating matrices, and the pfaffian engine."""

import random
import warnings

import pytest

from aci3 import (
    DomainError,
    PolyRing,
    alt_matrix,
    pf_squared_equals_det,
    pfaffian,
    pfaffian_int,
    pfaffian_last_row,
    sub_pfaffians,
    witness_ideals_a3_h5,
)
from aci3.intmat import int_det
from aci3.verify import random_alternating


class TestSparsePolynomial:
    def setup_method(self):
        self.ring = PolyRing(("x", "y"))
        self.x = self.ring.var("x")
        self.y = self.ring.var("y")

    def test_arithmetic(self):
        x, y = self.x, self.y
        square = (x + y) * (x + y)
        assert square == x * x + 2 * (x * y) + y * y
        assert (x - x).is_zero
        assert (x + y) * 0 == self.ring.zero()
        assert 1 + x - x == self.ring.one()

    def test_degree_and_homogeneity(self):
        x, y = self.x, self.y
        assert (x * x * y).degree() == 3
        assert (x * y + x * x).is_homogeneous(2)
        assert not (x + x * y).is_homogeneous()
        assert self.ring.zero().degree() is None
        assert self.ring.zero().is_homogeneous()

    def test_str(self):
        x, y = self.x, self.y
        assert str(x * x - 2 * y) == "x^2 - 2*y"
        assert str(self.ring.zero()) == "0"
        assert str(-(x * y)) == "-x*y"

    def test_json(self):
        p = self.x * self.y - 3 * self.y
        assert p.to_json() == [
            {"coeff": 1, "exponents": [1, 1]},
            {"coeff": -3, "exponents": [0, 1]},
        ]

    def test_cross_ring_rejected(self):
        other = PolyRing(("z",))
        with pytest.raises(DomainError):
            _ = self.x + other.var("z")


class TestAltMatrix:
    def test_example_entries(self):
        m = alt_matrix((2, 3, 3, 4, 4))
        assert m.theta == 8
        assert str(m.entry(1, 2)) == "x12^3"
        assert str(m.entry(2, 3)) == "x23^2"
        assert str(m.entry(2, 4)) == "x24"
        assert m.entry(4, 5).is_zero
        assert m.entry(2, 1) == -m.entry(1, 2)
        assert m.entry(3, 3).is_zero

    def test_linear_case(self):
        m = alt_matrix((1, 1, 1))
        assert m.theta == 3
        for i, j in ((1, 2), (1, 3), (2, 3)):
            assert str(m.entry(i, j)) == f"x{i}{j}"

    def test_zero_entry_from_degree_bound(self):
        m = alt_matrix((2, 2, 2, 3, 3))
        assert m.theta == 6
        assert m.entry_degrees[(4, 5)] == 0
        assert m.entry(4, 5).is_zero

    def test_non_integral_theta(self):
        with pytest.raises(DomainError, match="not an integer"):
            alt_matrix((1, 1, 1, 1, 1))

    def test_gaeta_failure_warns_only(self):
        with pytest.warns(UserWarning, match="Gaeta"):
            m = alt_matrix((2, 2, 5, 5, 5, 5, 6))
        assert m.size == 7

    def test_variable_ordering_with_extras(self):
        m = alt_matrix((2, 3, 3, 4, 4), extra_vars=("y1", "y2"))
        assert m.ring.names[:3] == ("x12", "x13", "x14")
        assert m.ring.names[-2:] == ("y1", "y2")


class TestPfaffian:
    def setup_method(self):
        self.m = alt_matrix((2, 3, 3, 4, 4))

    def test_two_by_two_subset(self):
        assert str(pfaffian(self.m, (3, 4))) == "x34"

    def test_empty_subset(self):
        assert pfaffian(self.m, ()) == 1

    def test_four_by_four_with_zero_entry(self):
        p1 = pfaffian(self.m, (2, 3, 4, 5))
        assert str(p1) == "-x24*x35 + x25*x34"

    def test_odd_subset_rejected(self):
        with pytest.raises(DomainError, match="even"):
            pfaffian(self.m, (1, 2, 3))

    def test_sub_pfaffian_degrees(self):
        subs = sub_pfaffians(self.m)
        assert [p.degree() for p in subs] == [2, 3, 3, 4, 4]
        for p, d in zip(subs, (2, 3, 3, 4, 4)):
            assert p.is_homogeneous(d)

    def test_sub_pfaffians_of_linear_matrix(self):
        subs = sub_pfaffians(alt_matrix((1, 1, 1)))
        assert [str(p).lstrip("-") for p in subs] == ["x23", "x13", "x12"]

    def test_sub_pfaffians_need_odd_size(self):
        with pytest.raises(DomainError, match="odd"):
            sub_pfaffians(_even_matrix())

    def test_first_vs_last_row_expansion(self):
        for subset in ((1, 2), (1, 2, 3, 4), (2, 3, 4, 5), (1, 3, 4, 5)):
            assert pfaffian(self.m, subset) == pfaffian_last_row(self.m, subset)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            big = alt_matrix((2, 2, 4, 4, 4, 4, 4))
        assert pfaffian(big, tuple(range(1, 7))) == pfaffian_last_row(big, tuple(range(1, 7)))

    def test_homogeneity_sweep_small(self):
        from itertools import combinations_with_replacement
        for degs in combinations_with_replacement(range(1, 6), 5):
            if sum(degs) % 2:
                continue
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                m = alt_matrix(degs)
            for p, d in zip(sub_pfaffians(m), degs):
                assert p.is_zero or (p.is_homogeneous() and p.degree() == d)


def _even_matrix():
    # helper: a legitimate even-size alternating matrix for error-path tests
    from aci3.pfaffians import AlternatingMatrix
    m = alt_matrix((1, 1, 1))
    return AlternatingMatrix(m.delta[:2], m.theta, 2, m.ring,
                             {(1, 2): m.entry(1, 2)}, {(1, 2): 1})


class TestPfaffianInt:
    def test_two_by_two(self):
        assert pfaffian_int([[0, 5], [-5, 0]]) == 5
        assert pf_squared_equals_det([[0, 5], [-5, 0]])

    def test_classical_identity_randomized(self):
        rng = random.Random(7)
        for size in (2, 4, 6):
            for _ in range(100):
                mat = random_alternating(size, rng)
                assert pf_squared_equals_det(mat)

    def test_odd_size_rejected(self):
        with pytest.raises(DomainError):
            pfaffian_int([[0]])

    def test_non_alternating_rejected(self):
        with pytest.raises(DomainError):
            pfaffian_int([[1, 2], [-2, 0]])

    def test_det_of_odd_alternating_is_zero(self):
        rng = random.Random(8)
        for _ in range(10):
            assert int_det(random_alternating(5, rng)) == 0


class TestWitnessIdeals:
    def setup_method(self):
        self.w = witness_ideals_a3_h5()

    def test_generator_degrees(self):
        assert self.w.degrees_q() == (3, 3, 5, 3)
        assert self.w.degrees_w() == (3, 3, 5, 3)
        assert tuple(sorted(self.w.degrees_q())) == (3, 3, 3, 5)
        assert tuple(sorted(self.w.degrees_w())) == (3, 3, 3, 5)

    def test_generators_nonzero_and_homogeneous(self):
        for p in self.w.iq + self.w.iw:
            assert not p.is_zero
            assert p.is_homogeneous()

    def test_first_generator_structure(self):
        # y2 * p_1 where p_1 = -x24*x35 + x25*x34
        assert str(self.w.iq[0]) == "-x24*x35*y2 + x25*x34*y2"

    def test_deleted_pfaffian_degrees(self):
        # deg p_{1,2,5} = d1 + d2 + d5 - theta = 1; two extra linear variables
        assert self.w.iq[3].degree() == 3
        assert self.w.iw[3].degree() == 3
