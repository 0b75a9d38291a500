"""Prolongation coefficients, relative interior, attainability, conditional
barycenters."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barylab.characterization import (
    CharacterizationReport,
    PreconditionError,
    characterize,
    conditional_barycenter,
    in_relint,
    is_attainable_barycenter,
    is_prolongable,
    max_prolongation,
    prolongable_fraction_of_dense_prefix,
    prolonged_point,
    report_to_json,
)
from barylab.geometry import Polytope, contains
from barylab.hilbert_cube import cube, target_point
from barylab.witness import DiscreteMeasure

from .conftest import random_convex_combination, random_polytope, random_relint_point
from .oracles import interval_alpha

F = Fraction


def V(*coords):
    return tuple(F(c) for c in coords)


class TestMaxProlongation:
    def test_interval_third_against_one(self, segment01):
        res = max_prolongation(segment01, (F(1, 3),), (F(1),))
        assert res.alpha_max == interval_alpha(F(0), F(1), F(1, 3), F(1)) == F(1, 2)
        assert res.witness_point == (F(0),)
        assert not res.unbounded

    def test_same_point_unbounded(self, segment01):
        res = max_prolongation(segment01, (F(1, 3),), (F(1, 3),))
        assert res.unbounded
        assert res.prolongable

    def test_truncated_cube_origin_direction(self):
        for d in (1, 2, 3, 5):
            poly = cube(d).to_polytope()
            a = target_point(d)
            res = max_prolongation(poly, a, (F(0),) * d)
            assert res.alpha_max == F(1, d)

    def test_precondition_errors(self, segment01):
        with pytest.raises(PreconditionError):
            max_prolongation(segment01, (F(2),), (F(1),))
        with pytest.raises(PreconditionError):
            max_prolongation(segment01, (F(1, 2),), (F(3),))

    def test_boundary_point_zero_alpha(self, segment01):
        res = max_prolongation(segment01, (F(0),), (F(1),))
        assert res.alpha_max == F(0)
        assert res.witness_point is None
        assert not res.prolongable

    def test_prolonged_point_formula(self):
        a = V(1, 2)
        x = V(3, -1)
        alpha = F(1, 4)
        point = prolonged_point(a, x, alpha)
        expected = tuple(-alpha * xi + (1 + alpha) * ai for ai, xi in zip(a, x))
        assert point == expected


class TestProlongable:
    def test_interval_interior(self, segment01):
        assert is_prolongable(segment01, (F(1, 3),), (F(1),))

    def test_interval_endpoint_fails(self, segment01):
        assert not is_prolongable(segment01, (F(0),), (F(1),))

    def test_base_point_always_prolongable(self):
        rng = random.Random(13)
        for _ in range(8):
            poly = random_polytope(rng, max_dim=3, max_vertices=6)
            a = random_convex_combination(rng, poly)
            assert is_prolongable(poly, a, a)

    @settings(max_examples=30, deadline=None)
    @given(
        st.randoms(use_true_random=False),
        st.integers(min_value=0, max_value=8),
        st.integers(min_value=0, max_value=3),
    )
    def test_prolongable_set_is_convex(self, rng, tnum, tpow):
        # Dyadic t in [0, 1]; x, y prolongable implies the segment point is.
        t = F(tnum, 8) * F(1, 2**tpow)
        if t > 1:
            t = F(1)
        poly = random_polytope(rng, max_dim=3, max_vertices=5, coord_range=3)
        a = random_relint_point(rng, poly)
        x = random_convex_combination(rng, poly)
        y = random_convex_combination(rng, poly)
        if is_prolongable(poly, a, x) and is_prolongable(poly, a, y):
            z = tuple((1 - t) * xi + t * yi for xi, yi in zip(x, y))
            assert is_prolongable(poly, a, z)


class TestInRelint:
    def test_square_center(self, square):
        assert in_relint(square, V(0, 0))

    def test_square_edge_midpoint(self, square):
        assert not in_relint(square, V(1, 0))

    def test_triangle_quarter_point(self, triangle):
        # (1/4, 1/4) = 1/2*(0,0) + 1/4*(1,0) + 1/4*(0,1): all weights positive.
        assert in_relint(triangle, V(F(1, 4), F(1, 4)))

    def test_point_outside_is_false(self, square):
        assert not in_relint(square, V(3, 3))

    def test_single_point_polytope(self):
        poly = Polytope.from_vertices([(5,)])
        assert in_relint(poly, (F(5),))
        assert not in_relint(poly, (F(4),))

    def test_lower_dimensional_polytope(self):
        seg = Polytope.from_vertices([(0, 0), (2, 2)])
        assert in_relint(seg, V(1, 1))
        assert not in_relint(seg, V(2, 2))
        assert not in_relint(seg, V(1, 0))


class TestAttainability:
    def test_square_center(self, square):
        assert is_attainable_barycenter(square, V(0, 0))

    def test_square_edge_midpoint(self, square):
        assert not is_attainable_barycenter(square, V(1, 0))

    def test_segment_endpoint(self, segment01):
        assert not is_attainable_barycenter(segment01, (F(0),))

    def test_precondition(self, square):
        with pytest.raises(PreconditionError):
            is_attainable_barycenter(square, V(9, 9))

    def test_matches_relint_on_random_instances(self):
        rng = random.Random(4242)
        for _ in range(40):
            poly = random_polytope(rng, max_dim=4, max_vertices=8, coord_range=4)
            pts = [random_convex_combination(rng, poly) for _ in range(2)]
            pts.extend(poly.vertices[:2])
            for a in pts:
                assert is_attainable_barycenter(poly, a) == in_relint(poly, a)

    def test_dense_prefix_diagnostic(self, square):
        assert prolongable_fraction_of_dense_prefix(square, V(0, 0), 16) == 1.0
        frac = prolongable_fraction_of_dense_prefix(square, V(1, 0), 16)
        assert frac < 1.0


class TestConditionalBarycenter:
    def _measure(self):
        return DiscreteMeasure(
            atoms=((F(0),), (F(1),)),
            weights=(F(1, 2), F(1, 2)),
        )

    def test_single_atom_in_ball(self):
        mu = self._measure()
        assert conditional_barycenter(mu, (F(0),), F(1, 10)) == (F(0),)

    def test_ball_containing_all_atoms_gives_barycenter(self):
        mu = self._measure()
        # Full-mass ball: the conditional mean is the barycenter itself.
        assert conditional_barycenter(mu, (F(1, 2),), F(10)) == (F(1, 2),)

    def test_empty_ball_gives_none(self):
        mu = self._measure()
        assert conditional_barycenter(mu, (F(1, 2),), F(1, 10)) is None

    def test_radius_must_be_positive(self):
        with pytest.raises(PreconditionError):
            conditional_barycenter(self._measure(), (F(0),), F(0))

    def test_ball_is_open(self):
        mu = self._measure()
        # Atom at distance exactly r is excluded.
        assert conditional_barycenter(mu, (F(0),), F(1)) == (F(0),)

    def test_conditional_barycenter_is_prolongable(self):
        rng = random.Random(77)
        poly = Polytope.from_vertices([(0, 0), (4, 0), (0, 4), (4, 4)])
        a = V(1, 1)
        from barylab.witness import construct_witness

        mu = construct_witness(poly, a, 6)
        for _ in range(12):
            center = random_convex_combination(rng, poly)
            radius = F(rng.randint(1, 8), 2)
            c_ball = conditional_barycenter(mu, center, radius)
            if c_ball is None:
                continue
            assert contains(poly, c_ball)
            assert is_prolongable(poly, a, c_ball)


class TestEquivariance:
    def _random_affine_map(self, rng, d):
        while True:
            mat = [[F(rng.randint(-3, 3)) for _ in range(d)] for _ in range(d)]
            # Exact determinant by cofactor expansion (d <= 3 here).
            if d == 1:
                det = mat[0][0]
            elif d == 2:
                det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
            else:
                det = (
                    mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1])
                    - mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0])
                    + mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0])
                )
            if det != 0:
                shift = [F(rng.randint(-4, 4)) for _ in range(d)]
                return mat, shift

    def _apply(self, mat, shift, p):
        return tuple(
            sum(mat[i][j] * p[j] for j in range(len(p))) + shift[i]
            for i in range(len(mat))
        )

    def test_verdicts_and_alpha_invariant(self):
        rng = random.Random(123)
        for _ in range(10):
            poly = random_polytope(rng, max_dim=3, max_vertices=6, coord_range=3)
            d = poly.ambient_dim
            mat, shift = self._random_affine_map(rng, d)
            a = random_convex_combination(rng, poly)
            x = random_convex_combination(rng, poly)
            mapped = Polytope(
                vertices=tuple(self._apply(mat, shift, v) for v in poly.vertices),
                ambient_dim=d,
            )
            ma, mx = self._apply(mat, shift, a), self._apply(mat, shift, x)
            assert in_relint(poly, a) == in_relint(mapped, ma)
            assert is_prolongable(poly, a, x) == is_prolongable(mapped, ma, mx)
            r1 = max_prolongation(poly, a, x)
            r2 = max_prolongation(mapped, ma, mx)
            assert r1.alpha_max == r2.alpha_max


class TestReport:
    def test_report_fields_and_json(self, square):
        rep = characterize(square, V(0, 0))
        assert isinstance(rep, CharacterizationReport)
        assert rep.relint and rep.condition_ii and rep.agrees
        data = report_to_json(rep)
        assert data["relint"] is True
        assert data["condition_ii"] is True
        assert data["agrees"] is True
        assert data["alpha_max_per_vertex"] == [[1, 1]] * 4

    def test_unbounded_alpha_serializes_as_null(self):
        poly = Polytope.from_vertices([(7,)])
        rep = characterize(poly, (F(7),))
        assert rep.alpha_max_per_vertex == (None,)
        assert report_to_json(rep)["alpha_max_per_vertex"] == [None]

    def test_parallel_evaluation_identical(self, square):
        seq = characterize(square, V(F(1, 3), F(-1, 5)))
        par = characterize(square, V(F(1, 3), F(-1, 5)), max_workers=4)
        assert seq == par
