"""Region classifier: smoothness region (a) and positivity region (b)

For every case the characteristic polynomial factors as
(trivial roots) * mu^2 * P(mu + 1/mu) with a monic quadratic

    P(x) = x^2 + b x + c,

b and c affine in (s1, s2). Region (a) is "both roots of P real and in
[-2, 2]" (closed). Region (b) is the strict interlacing of the root angles
with three reference angles (open).
"""

import logging
import math
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from ttstar.core.cases import CaseId, evaluate_affine, evaluate_quadratic
from ttstar.core.params import StokesParams, AsymptoticData
from ttstar.core.polynomials import cyclotomic_factorization, expand_factorization
from ttstar.core.stokes import char_poly, second_stokes_matrix
from ttstar.exceptions.region_exceptions import NotInRegionAException
from ttstar.exceptions.validation_exceptions import (
    InvalidArgumentException,
    NonIntegerParametersException)


logger = logging.getLogger(__name__)

BOUNDARY_TOL = 1e-12


@dataclass
class RegionVerdict:
    """Membership of a point in regions (a) and (b)

    Attributes
    ----------
    in_a, in_b
        Ground truth: root criterion for (a), interlacing sign test for (b)
    quadratic_roots
        Roots of P, larger real part first
    thetas
        (theta1, theta2) with 0 <= theta1 <= theta2 <= pi, None outside (a)
    witness
        Which condition decided the verdict
    printed_a
        Printed inequality triple of region (a)
    vertex_ok
        |b| <= 4, the vertex of P lies in [-2, 2]
    characterizations
        Equivalent region (b) tests, filled by `in_region_b`
    """

    s: StokesParams
    in_a: bool
    in_b: bool
    quadratic_roots: tuple[complex, complex]
    thetas: tuple[float, float] | None
    witness: str
    printed_a: bool
    vertex_ok: bool
    characterizations: dict[str, bool] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        """All computed region (b) characterizations agree with in_b"""
        return all(value == self.in_b for value in self.characterizations.values())

    def describe(self) -> dict:
        """Returns verdict as dict"""
        return {
            **self.s.describe(),
            'in_a': self.in_a,
            'in_b': self.in_b,
            'quadratic_roots': list(self.quadratic_roots),
            'thetas': list(self.thetas) if self.thetas is not None else None,
            'witness': self.witness,
            'printed_a': self.printed_a,
            'vertex_ok': self.vertex_ok,
            'characterizations': dict(self.characterizations)}


@dataclass(frozen=True)
class IntegerPoint:
    """Integer point of region (a) with the cyclotomic factorization of p"""

    s: StokesParams
    factors: dict[int, int]
    reconstructs: bool

    def describe(self) -> dict:
        """Returns point as dict"""
        return {
            **self.s.describe(),
            'factors': {f'Phi{n}': power for n, power in sorted(self.factors.items())},
            'reconstructs': self.reconstructs}


def quadratic_coefficients(s: StokesParams) -> tuple[float, float]:
    """Returns (b, c) of P(x) = x^2 + b x + c"""
    profile = s.case.profile
    return (
        evaluate_affine(profile.quadratic_b, s.s1, s.s2),
        evaluate_affine(profile.quadratic_c, s.s1, s.s2))


def quadratic_value(s: StokesParams, x: float) -> float:
    """Returns P(x)"""
    b, c = quadratic_coefficients(s)
    return x * x + b * x + c


def quadratic_roots(s: StokesParams) -> tuple[complex, complex]:
    """Returns roots of P, larger real part first"""
    b, c = quadratic_coefficients(s)
    root = np.sqrt(complex(b * b - 4 * c))
    first, second = (-b + root) / 2, (-b - root) / 2
    if second.real > first.real:
        first, second = second, first
    return complex(first), complex(second)


def printed_region_a(s: StokesParams) -> bool:
    """Printed inequality triple of region (a), non-strict"""
    return all(
        evaluate_quadratic(form, s.s1, s.s2) >= -BOUNDARY_TOL
        for form in s.case.profile.region_a_triple)


def printed_region_b(s: StokesParams) -> bool:
    """Printed inequality triple of region (b), strict"""
    return all(
        evaluate_quadratic(form, s.s1, s.s2) > BOUNDARY_TOL
        for form in s.case.profile.region_b_triple)


def _root_criterion(s: StokesParams) -> tuple[bool, tuple[float, float] | None, str]:
    b, c = quadratic_coefficients(s)
    discriminant = b * b - 4 * c
    if discriminant < -BOUNDARY_TOL:
        return False, None, f'P has complex roots (b^2 - 4c = {discriminant:.6g})'

    first, second = quadratic_roots(s)
    larger, smaller = first.real, second.real
    if larger > 2 + BOUNDARY_TOL or smaller < -2 - BOUNDARY_TOL:
        return False, None, f'root of P outside [-2, 2] ({smaller:.6g}, {larger:.6g})'

    theta1 = math.acos(min(1.0, max(-1.0, larger / 2)))
    theta2 = math.acos(min(1.0, max(-1.0, smaller / 2)))
    return True, (theta1, theta2), 'roots of P in [-2, 2]'


def _sign_test(s: StokesParams) -> tuple[bool, list[float]]:
    """p at the reference roots of unity is real, its sign is fixed by the case"""
    profile = s.case.profile
    poly = char_poly(s)
    values = [complex(poly(np.exp(1j * math.pi * angle))) for angle in profile.reference_angles]
    signed = [profile.region_b_sign * value.real for value in values]
    return all(value > BOUNDARY_TOL for value in signed), signed


def _interlacing(s: StokesParams, thetas: tuple[float, float] | None) -> bool:
    if thetas is None:
        return False
    first, middle, last = (math.pi * angle for angle in s.case.profile.reference_angles)
    theta1, theta2 = thetas
    tol = 1e-9
    return first + tol < theta1 < middle - tol and middle + tol < theta2 < last - tol


def _positive_definite(s: StokesParams) -> bool:
    """S^-1 + S^-t is positive definite"""
    stokes_inv = second_stokes_matrix(s).T
    symmetric = stokes_inv + stokes_inv.T
    eigenvalues = np.linalg.eigvalsh(symmetric)
    scale = max(1.0, float(np.max(np.abs(eigenvalues))))
    return bool(np.min(eigenvalues) > BOUNDARY_TOL * scale)


def _classify(s: StokesParams) -> RegionVerdict:
    in_a, thetas, witness = _root_criterion(s)
    b, _ = quadratic_coefficients(s)
    printed_a = printed_region_a(s)
    vertex_ok = abs(b) <= 4 + BOUNDARY_TOL

    if printed_a != in_a:
        logger.warning(
            'Printed inequalities of region (a) disagree with the root criterion '
            'at %s (printed %s, roots %s, vertex %s)', s, printed_a, in_a, vertex_ok)

    in_b, _ = _sign_test(s) if in_a else (False, [])
    if in_b:
        witness = 'roots of P interlace with the reference roots of unity'
    elif in_a:
        witness = f'{witness}; sign test of region (b) fails'

    return RegionVerdict(
        s=s, in_a=in_a, in_b=in_b,
        quadratic_roots=quadratic_roots(s),
        thetas=thetas,
        witness=witness,
        printed_a=printed_a,
        vertex_ok=vertex_ok)


def in_region_a(s: StokesParams) -> RegionVerdict:
    """Classifies point by the root criterion of region (a)

    The printed inequality triple is reported alongside; it admits slivers
    beyond the tangency points |b| = 4 where it disagrees with the roots.
    """
    return _classify(s)


def in_region_b(s: StokesParams) -> RegionVerdict:
    """Classifies point for region (b) with all equivalent characterizations

    Characterizations: printed inequality triple, sign test of p at the
    reference roots of unity, interlacing of the root angles, positive
    definiteness of S^-1 + S^-t. A warning is logged if they disagree.
    """
    verdict = _classify(s)
    sign_ok, _ = _sign_test(s)
    verdict.characterizations = {
        'printed': printed_region_b(s),
        'sign_test': sign_ok,
        'interlacing': _interlacing(s, verdict.thetas),
        'positive_definite': _positive_definite(s)}

    if not verdict.agree:
        logger.warning(
            'Region (b) characterizations disagree at %s: %s',
            s, verdict.characterizations)

    return verdict


def stokes_to_gammas(s: StokesParams) -> AsymptoticData:
    """Returns asymptotic data of a region (a) point

    Parameters
    ----------
    s
        Stokes parameters, raise NotInRegionAException outside region (a)

    Returns
    -------
        (gamma0, gamma1) from the fundamental domain 0 <= theta1 <= theta2 <= pi
    """
    in_a, thetas, witness = _root_criterion(s)
    if not in_a:
        raise NotInRegionAException(s1=s.s1, s2=s.s2, witness=witness)

    size = s.case.n_plus_1
    offset0, offset1 = s.case.profile.chart_offsets
    theta1, theta2 = thetas
    return AsymptoticData(
        gamma0=size * theta1 / math.pi - offset0,
        gamma1=size * theta2 / math.pi - offset1,
        case=s.case)


def gamma_to_stokes(g: AsymptoticData) -> StokesParams:
    """Returns Stokes parameters whose P has roots 2 cos(theta_i)

    theta_i = pi (gamma_i + offset_i) / N; P(x) = (x - x1)(x - x2) fixes b and
    c, and the affine relations of the case are inverted for (s1, s2).
    """
    size = g.case.n_plus_1
    profile = g.case.profile
    offset0, offset1 = profile.chart_offsets
    x1 = 2 * math.cos(math.pi * (g.gamma0 + offset0) / size)
    x2 = 2 * math.cos(math.pi * (g.gamma1 + offset1) / size)
    b, c = -(x1 + x2), x1 * x2

    b0, b1, b2 = profile.quadratic_b
    c0, c1, c2 = profile.quadratic_c
    s1, s2 = np.linalg.solve(np.array([[b1, b2], [c1, c2]], dtype=float), [b - b0, c - c0])
    return StokesParams(float(s1), float(s2), g.case)


def _stokes_box(case: CaseId) -> tuple[tuple[int, int], tuple[int, int]]:
    """Integer bounding box in (s1, s2) of the image of |b|, |c| <= 4"""
    profile = case.profile
    b0, b1, b2 = profile.quadratic_b
    c0, c1, c2 = profile.quadratic_c
    inverse = np.linalg.inv(np.array([[b1, b2], [c1, c2]], dtype=float))
    corners = [inverse @ np.array([b - b0, c - c0]) for b in (-4, 4) for c in (-4, 4)]
    s1_values = [corner[0] for corner in corners]
    s2_values = [corner[1] for corner in corners]
    return (
        (math.floor(min(s1_values)), math.ceil(max(s1_values))),
        (math.floor(min(s2_values)), math.ceil(max(s2_values))))


def factor_point(s: StokesParams) -> IntegerPoint:
    """Factors p of an integer point into cyclotomic polynomials

    Parameters
    ----------
    s
        Integer Stokes parameters, raise NonIntegerParametersException
        otherwise
    """
    if not s.is_integer():
        raise NonIntegerParametersException(s1=s.s1, s2=s.s2)

    poly = char_poly(s).integer_coeffs()
    factors = cyclotomic_factorization(poly)
    if factors is None:
        return IntegerPoint(s=s, factors={}, reconstructs=False)

    monic = poly if poly[0] == 1 else [-coeff for coeff in poly]
    return IntegerPoint(s=s, factors=factors, reconstructs=expand_factorization(factors) == monic)


def integer_points(
        case: CaseId | str,
        window: tuple[tuple[int, int], tuple[int, int]] | None = None) -> tuple[list[IntegerPoint], list[StokesParams]]:
    """Enumerates integer points of region (a) and slivers of the printed triple

    Parameters
    ----------
    case
        Case tag
    window, optional
        ((s1_min, s1_max), (s2_min, s2_max)) scanned for slivers, by default
        the bounding box of region (a) widened by 2

    Returns
    -------
        Integer points of region (a) with factorizations (row-major order) and
        integer points where the printed triple holds but the roots do not
    """
    case = CaseId.parse(case)
    (s1_lo, s1_hi), (s2_lo, s2_hi) = _stokes_box(case)

    points = []
    for s1 in range(s1_lo, s1_hi + 1):
        for s2 in range(s2_lo, s2_hi + 1):
            s = StokesParams(s1, s2, case)
            in_a, _, _ = _root_criterion(s)
            if in_a:
                points.append(factor_point(s))

    if window is None:
        window = ((s1_lo - 2, s1_hi + 2), (s2_lo - 2, s2_hi + 2))
    (w1_lo, w1_hi), (w2_lo, w2_hi) = window

    slivers = []
    for s1 in range(int(w1_lo), int(w1_hi) + 1):
        for s2 in range(int(w2_lo), int(w2_hi) + 1):
            s = StokesParams(s1, s2, case)
            in_a, _, _ = _root_criterion(s)
            if printed_region_a(s) and not in_a:
                slivers.append(s)

    logger.info(
        'Case %s: %s integer points in region (a), %s slivers',
        case.value, len(points), len(slivers))
    return points, slivers


def _axis(lo: float, hi: float, step: float) -> np.ndarray:
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


def region_grid(
        case: CaseId | str,
        bounds: tuple[tuple[float, float], tuple[float, float]],
        step: float,
        threads: int = 1) -> list[tuple[float, float, bool, bool]]:
    """Classifies a rectangular grid

    Parameters
    ----------
    case
        Case tag
    bounds
        ((s1_min, s1_max), (s2_min, s2_max)), raise InvalidArgumentException if
        a range is empty
    step
        Grid step, raise InvalidArgumentException if not positive
    threads, optional
        Worker threads, rows are returned in the same order for any value

    Returns
    -------
        Rows (s1, s2, in_a, in_b), s1 outer, s2 inner
    """
    case = CaseId.parse(case)
    if not step > 0:
        raise InvalidArgumentException(name='step', requirement='step must be positive')
    (s1_lo, s1_hi), (s2_lo, s2_hi) = bounds
    if s1_lo > s1_hi or s2_lo > s2_hi:
        raise InvalidArgumentException(name='bounds', requirement='grid is empty')

    s1_axis = _axis(s1_lo, s1_hi, step)
    s2_axis = _axis(s2_lo, s2_hi, step)

    def scan_row(s1: float) -> list[tuple[float, float, bool, bool]]:
        """Classifies one row of the grid"""
        rows = []
        for s2 in s2_axis:
            verdict = _classify(StokesParams(float(s1), float(s2), case))
            rows.append((float(s1), float(s2), verdict.in_a, verdict.in_b))
        return rows

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        blocks = list(executor.map(scan_row, s1_axis))

    return [row for block in blocks for row in block]
