"""Tests of the region classifier

if (point outside region (a)) and (stokes_to_gammas):
    - raise NotInRegionAException

if (non-integer point factored):
    - raise NonIntegerParametersException

if (grid step not positive) or (grid empty):
    - raise InvalidArgumentException

- region (a) by the root criterion, printed triple reported alongside
- region (b) strict, all characterizations agree
- gamma_to_stokes and stokes_to_gammas invert each other on the fundamental domain
- 19 integer points of region (a), all products of cyclotomic polynomials
"""

import math
import numpy as np
import pytest
from ttstar import (
    CaseId, StokesParams, AsymptoticData,
    char_poly, monodromy_eigenvalues,
    in_region_a, in_region_b, stokes_to_gammas, gamma_to_stokes,
    integer_points, factor_point, region_grid,
    NotInRegionAException,
    NonIntegerParametersException,
    InvalidArgumentException)


def random_thetas(rng, count: int) -> list[tuple[float, float]]:
    """Random angle pairs 0 < theta1 < theta2 < pi away from collisions"""
    pairs = []
    while len(pairs) < count:
        theta1, theta2 = sorted(rng.uniform(0.05, math.pi - 0.05, size=2))
        if theta2 - theta1 > 0.01:
            pairs.append((theta1, theta2))
    return pairs


class TestsRegionA:
    """Tests of function `in_region_a`"""

    def test_origin(self):
        """Classifying (0, 0)
            - inside regions (a) and (b)
        """
        verdict = in_region_a(StokesParams(0, 0))
        assert (verdict.in_a and verdict.in_b
            and verdict.printed_a
            and np.allclose(verdict.thetas, (math.pi / 4, 3 * math.pi / 4)))

    def test_sliver(self):
        """Classifying (5, -8)
            - printed inequalities hold
            - P(x) = x^2 + 5x + 6 has root -3: outside region (a)
        """
        verdict = in_region_a(StokesParams(5, -8))
        assert (not verdict.in_a
            and verdict.printed_a
            and not verdict.vertex_ok
            and verdict.thetas is None
            and abs(verdict.quadratic_roots[1] + 3) < 1e-12)

    def test_outside(self):
        """Classifying (0, 3)
            - printed inequalities and roots agree: outside
        """
        verdict = in_region_a(StokesParams(0, 3))
        assert not verdict.in_a and not verdict.printed_a and not verdict.in_b

    def test_tangency(self):
        """Classifying (4, -6)
            - double root -2, on the boundary, inside the closed region
        """
        verdict = in_region_a(StokesParams(4, -6))
        assert verdict.in_a and np.allclose(verdict.thetas, (math.pi, math.pi))

    def test_monodromy_on_unit_circle_iff_region_a(self):
        """Comparing eigenvalue moduli of S S^-t with the verdict on a grid of every case
            - all moduli 1 to 1e-8 exactly inside region (a), boundary included
        """
        values = np.linspace(-5, 5, 21)
        for case in CaseId:
            for s1 in values:
                for s2 in values:
                    s = StokesParams(s1, s2, case)
                    on_circle = np.max(np.abs(np.abs(monodromy_eigenvalues(s)) - 1)) < 1e-8
                    assert on_circle == in_region_a(s).in_a, (case, s1, s2)

    def test_equivalences_on_full_grid(self):
        """Classifying the 101 x 101 grid over [-6, 6] x [-9, 4] of case 4a
            - roots in [-2, 2] iff monodromy moduli 1 to 1e-8
            - positivity, printed triple, sign test and interlacing agree
            - no disagreement, double roots at +-2 included
        """
        disagreements = []
        for s1 in np.linspace(-6, 6, 101):
            for s2 in np.linspace(-9, 4, 101):
                s = StokesParams(s1, s2)
                on_circle = np.max(np.abs(np.abs(monodromy_eigenvalues(s)) - 1)) < 1e-8
                if on_circle != in_region_a(s).in_a or not in_region_b(s).agree:
                    disagreements.append((s1, s2))
        assert disagreements == []

    def test_double_root_on_grid(self):
        """Computing eigenvalues at (+-2.64, -3.28), where P has the root -+2 up to rounding
            - all moduli 1 to 1e-12
        """
        for s1 in (2.64, -2.64):
            s = StokesParams(-6 + 0.12 * round((s1 + 6) / 0.12), -9 + 0.13 * 44)
            moduli = np.abs(monodromy_eigenvalues(s))
            assert in_region_a(s).in_a and np.max(np.abs(moduli - 1)) < 1e-12


class TestsRegionB:
    """Tests of function `in_region_b`"""

    def test_origin(self):
        """Classifying (0, 0)
            - inside, all characterizations agree
        """
        verdict = in_region_b(StokesParams(0, 0))
        assert verdict.in_b and verdict.agree and len(verdict.characterizations) == 4

    def test_triangle_vertices(self):
        """Classifying (-2, -2), (2, -2), (0, 2)
            - on the boundary: in region (a), not in region (b)
        """
        for s1, s2 in ((-2, -2), (2, -2), (0, 2)):
            verdict = in_region_b(StokesParams(s1, s2))
            assert verdict.in_a and not verdict.in_b and verdict.agree

    def test_sinh_gordon_point(self):
        """Classifying (0, -2)
            - 2 + s2 = 0: not in region (b), in region (a)
        """
        verdict = in_region_b(StokesParams(0, -2))
        assert verdict.in_a and not verdict.in_b

    def test_subset_of_region_a(self):
        """Checking in_b => in_a on random points of every case"""
        rng = np.random.default_rng(4)
        for case in CaseId:
            for s1, s2 in rng.uniform(-6, 6, size=(200, 2)):
                verdict = in_region_a(StokesParams(s1, s2, case))
                assert verdict.in_a or not verdict.in_b

    def test_positive_definiteness_case_4a(self):
        """Comparing region (b) with positive definiteness of S^-1 + S^-t on a 41 x 41 grid
            - all characterizations agree off the boundary lines
        """
        values = np.linspace(-5, 5, 41)
        for s1 in values:
            for s2 in values:
                if min(abs(2 + s2), abs(2 + 2 * s1 - s2), abs(2 - 2 * s1 - s2)) < 1e-9:
                    continue
                verdict = in_region_b(StokesParams(s1, s2))
                assert verdict.agree, (s1, s2, verdict.characterizations)

    def test_printed_triple_matches_interlacing(self):
        """Comparing printed inequalities with interlacing for cases 5a and 6a
            - 6a: pi/6 < theta1 < pi/2 < theta2 < 5 pi/6
        """
        values = np.linspace(-4, 4, 41)
        for case in (CaseId.CASE_5A, CaseId.CASE_6A):
            triple = case.profile.region_b_triple
            for s1 in values:
                for s2 in values:
                    forms = [const + a * s1 + b * s2 for const, a, b, _ in triple]
                    if min(abs(form) for form in forms) < 1e-6:
                        continue
                    characterizations = in_region_b(StokesParams(s1, s2, case)).characterizations
                    assert (characterizations['printed']
                        == characterizations['interlacing']
                        == characterizations['sign_test'])


class TestsChartMaps:
    """Tests of functions `gamma_to_stokes` and `stokes_to_gammas`"""

    def test_origin(self):
        """Mapping gamma = (0, 0) of case 4a
            - expected s = (0, 0)
        """
        s = gamma_to_stokes(AsymptoticData(0, 0))
        assert abs(s.s1) < 1e-14 and abs(s.s2) < 1e-14

    def test_sinh_gordon(self):
        """Mapping gamma = (1, -1) of case 4a
            - expected s = (0, -2)
        """
        s = gamma_to_stokes(AsymptoticData(1, -1))
        assert abs(s.s1) < 1e-14 and abs(s.s2 + 2) < 1e-14

    def test_corner(self):
        """Mapping gamma = (3, 1) of case 4a
            - expected s = (4, -6), p = (mu + 1)^4
        """
        s = gamma_to_stokes(AsymptoticData(3, 1))
        assert abs(s.s1 - 4) < 1e-14 and abs(s.s2 + 6) < 1e-14

    def test_inverse_of_corner(self):
        """Mapping s = (4, -6) of case 4a back
            - expected gamma = (3, 1)
        """
        g = stokes_to_gammas(StokesParams(4, -6))
        assert abs(g.gamma0 - 3) < 1e-7 and abs(g.gamma1 - 1) < 1e-7

    def test_origin_case_5a(self):
        """Mapping s = (0, 0) of case 5a
            - expected gamma = (-4, -4)
        """
        g = stokes_to_gammas(StokesParams(0, 0, '5a'))
        assert abs(g.gamma0 + 4) < 1e-12 and abs(g.gamma1 + 4) < 1e-12

    def test_round_trip(self):
        """Mapping 1000 random interior points of every case there and back
            - identity to 1e-10
        """
        rng = np.random.default_rng(1)
        for case in CaseId:
            size = case.n_plus_1
            offset0, offset1 = case.profile.chart_offsets
            for theta1, theta2 in random_thetas(rng, 1000):
                g = AsymptoticData(
                    size * theta1 / math.pi - offset0,
                    size * theta2 / math.pi - offset1, case)
                back = stokes_to_gammas(gamma_to_stokes(g))
                assert abs(back.gamma0 - g.gamma0) < 1e-10 and abs(back.gamma1 - g.gamma1) < 1e-10

    def test_roots_of_p(self):
        """Comparing roots of p(gamma_to_stokes(gamma)) for case 4a
            - expected exp(+-i pi (gamma0 + 1) / 4), exp(+-i pi (gamma1 + 3) / 4)
        """
        rng = np.random.default_rng(6)
        for theta1, theta2 in random_thetas(rng, 50):
            g = AsymptoticData(4 * theta1 / math.pi - 1, 4 * theta2 / math.pi - 3)
            roots = char_poly(gamma_to_stokes(g)).roots()
            expected = [np.exp(sign * 1j * theta) for theta in (theta1, theta2) for sign in (1, -1)]
            assert all(np.min(np.abs(roots - value)) < 1e-10 for value in expected)

    def test_exception_outside_region_a(self):
        """Mapping s = (5, -8) of case 4a
            - expected raise NotInRegionAException
        """
        with pytest.raises(NotInRegionAException):
            stokes_to_gammas(StokesParams(5, -8))


class TestsIntegerPoints:
    """Tests of function `integer_points`"""

    def test_count_case_4a(self):
        """Enumerating integer points of case 4a
            - exactly 19
            - every factorization reconstructs p
            - slivers (-5, -8) and (5, -8) in [-6, 6] x [-9, 4]
        """
        points, slivers = integer_points('4a', window=((-6, 6), (-9, 4)))
        assert (len(points) == 19
            and all(point.reconstructs for point in points)
            and sorted(tuple(s) for s in slivers) == [(-5.0, -8.0), (5.0, -8.0)])

    def test_known_factorizations(self):
        """Reading factorizations of (4, -6) and (0, 0)
            - Phi_2^4 and Phi_8
        """
        points, _ = integer_points('4a')
        factors = {tuple(point.s): point.factors for point in points}
        assert factors[(4.0, -6.0)] == {2: 4} and factors[(0.0, 0.0)] == {8: 1}

    def test_cases_5a_and_6a(self):
        """Enumerating integer points of cases 5a and 6a
            - every p is a product of cyclotomic polynomials
        """
        for case in ('5a', '6a'):
            points, _ = integer_points(case)
            assert points and all(point.reconstructs for point in points)

    def test_exception_non_integer(self):
        """Factoring (0.5, 0)
            - expected raise NonIntegerParametersException
        """
        with pytest.raises(NonIntegerParametersException):
            factor_point(StokesParams(0.5, 0))


class TestsRegionGrid:
    """Tests of function `region_grid`"""

    def test_subset(self):
        """Scanning [-4, 4] x [-8, 3] with step 0.25 for case 4a
            - every in_b row is an in_a row
            - row-major order, 33 x 45 rows
        """
        rows = region_grid('4a', ((-4, 4), (-8, 3)), 0.25)
        assert (len(rows) == 33 * 45
            and rows[0][:2] == (-4.0, -8.0)
            and rows[1][:2] == (-4.0, -7.75)
            and all(in_a for _, _, in_a, in_b in rows if in_b)
            and any(in_b for _, _, _, in_b in rows))

    def test_threads_do_not_change_rows(self):
        """Scanning with 1 and 4 threads
            - identical rows
        """
        bounds = ((-3, 3), (-5, 2))
        assert region_grid('6a', bounds, 0.5, threads=1) == region_grid('6a', bounds, 0.5, threads=4)

    def test_tangency_points(self):
        """Reading the grid at s1 = +-4
            - only s2 = -6 is in region (a): parabola and line touch there
        """
        rows = region_grid('4a', ((-4, 4), (-8, 3)), 0.25)
        edge = [(s1, s2) for s1, s2, in_a, _ in rows if in_a and abs(s1) == 4]
        assert sorted(edge) == [(-4.0, -6.0), (4.0, -6.0)]

    def test_exception_step(self):
        """Scanning with step 0
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            region_grid('4a', ((-1, 1), (-1, 1)), 0)

    def test_exception_empty(self):
        """Scanning empty bounds
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            region_grid('4a', ((1, -1), (-1, 1)), 0.1)
