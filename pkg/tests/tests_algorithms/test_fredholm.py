"""Tests of the Fredholm determinant representation

if (case other than 4a) and (c_from_stokes):
    - raise UnsupportedCaseException

if (c_4 != 0) or (c_3 != -i c_1):
    - raise InvalidArgumentException

if (t < 1e-3):
    - raise SmallRadiusException

if (doubling the nodes changes q by more than 1e-6):
    - raise GridInsufficiencyException

if (final roots of the alpha polynomial collide):
    - raise PathObstructionException

- q1 + q2 = q3 + q4 = 0 and Im q = 0 to 1e-8
- q2 = 2 w0 and q3 = 2 w1 against the radial integrator (branch I)
- alphas reproduce the exponents of the region classifier
"""

import math
import numpy as np
import pytest
from ttstar import (
    StokesParams, AsymptoticData,
    gamma_to_stokes, stokes_to_gammas, in_region_a,
    integrate_inward,
    TWParams, NystromGrid, FredholmResult,
    c_from_stokes, kernel_value, fredholm_q, small_t_slope,
    alpha_from_params, gammas_from_alphas, w_from_q,
    UnsupportedCaseException,
    InvalidArgumentException,
    SmallRadiusException,
    GridInsufficiencyException,
    PathObstructionException)


REGION_B_SAMPLES = [(0.5, 0.0), (-0.5, 0.5), (0.5, -1.0), (0.0, 1.0), (-0.3, -1.2)]


def random_region_a_points(rng, count: int) -> list[StokesParams]:
    """Interior points of region (a) of case 4a from random root angles"""
    points = []
    while len(points) < count:
        theta1, theta2 = sorted(rng.uniform(0.1, math.pi - 0.1, size=2))
        if theta2 - theta1 > 0.05:
            g = AsymptoticData(4 * theta1 / math.pi - 1, 4 * theta2 / math.pi - 3)
            points.append(gamma_to_stokes(g))
    return points


class TestsTWParams:
    """Tests of class `TWParams` and function `c_from_stokes`"""

    def test_zero(self):
        """Building c for s = (0, 0)
            - all c = 0
        """
        assert np.all(c_from_stokes(StokesParams(0, 0)).c == 0)

    def test_relations(self):
        """Building c for s = (1.2, -0.7)
            - s1 = -2 pi i c1 e^{pi i/4}, s2 = 2 pi i c2 e^{pi i/2}
            - c3 = -i c1, c4 = 0
        """
        c = c_from_stokes(StokesParams(1.2, -0.7)).c
        assert (abs(-2j * math.pi * c[0] * np.exp(1j * math.pi / 4) - 1.2) < 1e-14
            and abs(2j * math.pi * c[1] * 1j + 0.7) < 1e-14
            and c[2] == -1j * c[0] and c[3] == 0)

    def test_branches(self):
        """Building both branches for one point
            - only the sign of c1 (and c3) differs
        """
        s = StokesParams(0.8, 0.3)
        first, second = c_from_stokes(s, 'I').c, c_from_stokes(s, 'II').c
        assert np.allclose(first[[0, 2]], -second[[0, 2]]) and first[1] == second[1]

    def test_exception_constraint(self):
        """Creating c with c3 != -i c1
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            TWParams(np.array([1, 0, 1, 0]))

    def test_exception_case(self):
        """Building c for a case 6a point
            - expected raise UnsupportedCaseException
        """
        with pytest.raises(UnsupportedCaseException):
            c_from_stokes(StokesParams(0, 0, '6a'))

    def test_exception_branch(self):
        """Building c for branch III
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            c_from_stokes(StokesParams(0, 0), 'III')


class TestsKernel:
    """Tests of function `kernel_value`"""

    def test_zero(self):
        """Evaluating the kernel of c = 0
            - identically 0
        """
        p = c_from_stokes(StokesParams(0, 0))
        assert kernel_value(1, 0.5, 2.0, 1.0, p) == 0

    def test_decay(self):
        """Evaluating at u = 1e-3 and u = 1e3
            - negligible against u = 1
        """
        p = c_from_stokes(StokesParams(1, -1))
        middle = abs(kernel_value(1, 1.0, 1.0, 1.0, p))
        assert (middle > 1e-3
            and abs(kernel_value(1, 1e-3, 1.0, 1.0, p)) < 1e-200
            and abs(kernel_value(1, 1e3, 1.0, 1.0, p)) < 1e-200)

    def test_period(self):
        """Comparing K_k and K_{k+4}
            - equal moduli
        """
        p = c_from_stokes(StokesParams(0.4, 1.1))
        for k in range(4):
            assert abs(abs(kernel_value(k, 0.7, 1.3, 0.5, p)) - abs(kernel_value(k + 4, 0.7, 1.3, 0.5, p))) < 1e-14


class TestsNystromGrid:
    """Tests of class `NystromGrid`"""

    def test_build(self):
        """Building the grid for t = 1
            - 200 positive increasing nodes, positive weights
            - covers [t / 20, 20 / t]
        """
        grid = NystromGrid.build(1.0)
        assert (grid.size == 200
            and np.all(np.diff(grid.nodes) > 0)
            and np.all(grid.weights > 0)
            and grid.nodes[0] < 1 / 20 and grid.nodes[-1] > 20
            and grid.refined().size == 400)

    def test_exception(self):
        """Building the grid for t = 0
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            NystromGrid.build(0.0)


class TestsFredholmQ:
    """Tests of function `fredholm_q`"""

    def test_zero(self):
        """Evaluating c = 0
            - q = 0
        """
        result = fredholm_q(1.0, c_from_stokes(StokesParams(0, 0)))
        assert result.q == (0.0, 0.0, 0.0, 0.0)

    def test_consistency(self):
        """Evaluating random region (a) points at t in {0.5, 1, 2}
            - |Im q| < 1e-8, |q1 + q2| < 1e-8, |q3 + q4| < 1e-8
            - result flagged consistent
        """
        rng = np.random.default_rng(8)
        for s in random_region_a_points(rng, 5):
            for t in (0.5, 1.0, 2.0):
                result = fredholm_q(t, c_from_stokes(s))
                assert (result.imag_max < 1e-8
                    and max(result.anti_symmetry) < 1e-8
                    and result.consistent
                    and result.describe()['consistent'])

    def test_inconsistent_flag(self):
        """Reading results with |Im q| = 1e-6 or |q3 + q4| = 1e-6
            - not consistent
        """
        q = (0.1, -0.1, 0.2, -0.2)
        for imag_max, anti_symmetry in ((1e-6, (0.0, 0.0)), (0.0, (0.0, 1e-6))):
            result = FredholmResult(
                t=1.0, q=q, imag_max=imag_max, anti_symmetry=anti_symmetry, node_count=200)
            assert not result.consistent and not result.describe()['consistent']

    def test_grid_convergence(self):
        """Doubling the nodes at t in {0.5, 1}
            - q changes by less than 1e-6, no exception
        """
        p = c_from_stokes(StokesParams(0.5, -1.0))
        for t in (0.5, 1.0):
            grid = NystromGrid.build(t)
            coarse = fredholm_q(t, p, grid, check=True)
            fine = fredholm_q(t, p, grid.refined())
            change = max(abs(a - b) for a, b in zip(coarse.q, fine.q))
            assert (coarse.node_count == 200
                and fine.node_count > coarse.node_count
                and change < 1e-6)

    def test_matches_integrator(self):
        """Comparing q2, q3 with 2 w0, 2 w1 from the radial integrator at t in {1, 2}
            - within 2% on five region (b) points and s = (0, -2)
        """
        for s1, s2 in REGION_B_SAMPLES + [(0.0, -2.0)]:
            s = StokesParams(s1, s2)
            sol = integrate_inward(s)
            for t in (1.0, 2.0):
                w0, w1 = sol.at(t)
                q_w0, q_w1 = w_from_q(fredholm_q(t, c_from_stokes(s)).q)
                assert abs(q_w0 - w0) <= 0.02 * max(abs(w0), 1e-8)
                assert abs(q_w1 - w1) <= 0.02 * max(abs(w1), 1e-8)

    def test_branch_two(self):
        """Comparing branch II of s with branch I of (-s1, s2)
            - w from q coincide
        """
        s = StokesParams(0.5, -1.0)
        first = w_from_q(fredholm_q(1.0, c_from_stokes(s, 'II')).q, 'II')
        second = w_from_q(fredholm_q(1.0, c_from_stokes(s.reflected(), 'I')).q, 'I')
        assert abs(first[0] + second[1]) < 1e-8 and abs(first[1] + second[0]) < 1e-8

    def test_exception_small_radius(self):
        """Evaluating at t = 5e-4
            - expected raise SmallRadiusException
        """
        with pytest.raises(SmallRadiusException):
            fredholm_q(5e-4, c_from_stokes(StokesParams(0.5, 0)))

    def test_exception_grid(self):
        """Evaluating on 4 nodes with the convergence check
            - expected raise GridInsufficiencyException
        """
        p = c_from_stokes(StokesParams(1.0, -1.0))
        with pytest.raises(GridInsufficiencyException):
            fredholm_q(1.0, p, NystromGrid.build(1.0, nodes=4), check=True)


class TestsAlphas:
    """Tests of functions `alpha_from_params` and `gammas_from_alphas`"""

    def test_zero(self):
        """Tracking c = 0
            - alpha_k = k
        """
        alphas = alpha_from_params(c_from_stokes(StokesParams(0, 0)))
        assert np.allclose(alphas, (1, 2, 3, 4), atol=1e-12)

    def test_matches_region_classifier(self):
        """Comparing exponents from alphas with stokes_to_gammas on 20 random points
            - branch I and branch II agree to 1e-8
        """
        rng = np.random.default_rng(12)
        for s in random_region_a_points(rng, 20):
            expected = stokes_to_gammas(s)
            for branch in ('I', 'II'):
                g = gammas_from_alphas(alpha_from_params(c_from_stokes(s, branch)), branch)
                assert abs(g.gamma0 - expected.gamma0) < 1e-8 and abs(g.gamma1 - expected.gamma1) < 1e-8

    def test_ordering(self):
        """Tracking an interior point
            - alpha_1 < alpha_2 < alpha_3 < alpha_4
        """
        alphas = alpha_from_params(c_from_stokes(StokesParams(1.0, -1.0)))
        assert np.all(np.diff(alphas) > 0)

    def test_small_t_slope(self):
        """Comparing the log t slope of q_k at t = 1e-3 with 2(alpha_k - k)
            - within 5%
        """
        for gamma0, gamma1 in ((0.3, -0.3), (-0.2, 0.2)):
            p = c_from_stokes(gamma_to_stokes(AsymptoticData(gamma0, gamma1)))
            expected = 2 * (alpha_from_params(p) - np.arange(1, 5))
            slopes = small_t_slope(p, 1e-3)
            assert np.all(np.abs(slopes - expected) <= 0.05 * np.maximum(np.abs(expected), 0.2))

    def test_exception_boundary(self):
        """Tracking s = (0, -2), double root of p
            - expected raise PathObstructionException
        """
        assert in_region_a(StokesParams(0, -2)).in_a
        with pytest.raises(PathObstructionException):
            alpha_from_params(c_from_stokes(StokesParams(0, -2)))

    def test_exception_branch(self):
        """Reading exponents for branch III
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            gammas_from_alphas(np.arange(1, 5), 'III')
