"""Algorithms init"""

from . regions import (
    BOUNDARY_TOL,
    RegionVerdict, IntegerPoint,
    quadratic_coefficients, quadratic_value, quadratic_roots,
    printed_region_a, printed_region_b,
    in_region_a, in_region_b,
    stokes_to_gammas, gamma_to_stokes,
    factor_point, integer_points, region_grid)
from . radial_ode import (
    OdeConfig, RadialSolution, GammaFit,
    ode_rhs, sinh_gordon_amplitude, reflect,
    linearized_profile, asymptotic_init,
    linear_modes, mode_profile,
    integrate_state, integrate_inward, extract_gammas,
    verify_connection, verify_limits, connection_sweep)
from . fredholm import (
    TWParams, NystromGrid, FredholmResult,
    c_from_stokes, kernel_value, fredholm_q, small_t_slope,
    alpha_from_params, gammas_from_alphas, w_from_q)
from . riemann_hilbert import (
    Ray, JumpEval, Y0Leading, PositivityX,
    phi, ray_table, jump_G2, jump_G3,
    y0_leading, y0_from_contour, w_from_y0, verify_y0_symmetries,
    positivity_minors, positivity_matrix, positivity_X,
    solvable_from, threshold_table)
