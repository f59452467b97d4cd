"""Large-x Riemann-Hilbert data of case 4a

Jumps are G = e Xi e^{-1} with e(zeta, x) = exp(x^2 zeta d4 + d4^{-1} / zeta).
On the contour Gamma2 every off-diagonal entry sits on one of eight rays; the
rotated contour Gamma2' turns all exponents real. Gamma3 keeps only the rays
pi/8 and 9pi/8, where the jumps are products of four Stokes factors.

Leading order at large x:

    Y(0, x) = I + (1 / 2 pi i) int_{Gamma2'} (G - I) dzeta / zeta + O(e^{-4 sqrt 2 x}),

a circulant whose eigenvalues a = e^{-2 w0}, b = e^{-2 w1} give the solution.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from scipy.integrate import quad, quad_vec
from ttstar.core.cases import CaseId
from ttstar.core.constants import const_matrix, root_of_unity, residual
from ttstar.core.params import StokesParams
from ttstar.core.reports import IdentityReport
from ttstar.core.stokes import q_matrix
from ttstar.exceptions.riemann_hilbert_exceptions import (
    NonPositiveEigenvalueException,
    NoThresholdException)
from ttstar.exceptions.validation_exceptions import (
    InvalidArgumentException,
    RayNotOnContourException,
    UnsupportedCaseException)


logger = logging.getLogger(__name__)

SIZE = 4
CONTOURS = ('rotated', 'original')
RAY_TOL = 1e-12
BALANCE_TOL = 1e-12
FLOOR_RATIO = 0.01
THRESHOLD_TOL = 1e-6
X_MAX = 1e3

_COS = math.cos(math.pi / 8)
_SIN = math.sin(math.pi / 8)

# (row, column, power of omega, sign, Stokes parameter, ray m of angle (2m + 1) pi / 8)
_XI_ENTRIES = (
    (0, 1, 0.5, -1, 1, 6), (0, 2, 3, -1, 2, 5), (0, 3, 1.5, 1, 1, 4),
    (1, 0, 1.5, 1, 1, 2), (1, 2, 0.5, 1, 1, 4), (1, 3, 3, 1, 2, 3),
    (2, 0, 3, 1, 2, 1), (2, 1, 1.5, -1, 1, 0), (2, 3, 0.5, 1, 1, 2),
    (3, 0, 0.5, -1, 1, 0), (3, 1, 3, -1, 2, 7), (3, 2, 1.5, -1, 1, 6))

# rays carrying negative entries are oriented inwards
_INWARD = (0, 5, 6, 7)

# Gamma3 jumps: (row, column, power of omega, coefficient, f or g index)
_G3_ENTRIES = {
    9: (
        (0, 1, 0.5, 'first', 1), (0, 2, 3, 'second', 2), (0, 3, 1.5, 's1', 3),
        (1, 2, 0.5, 's1', 3), (3, 1, 3, 's2', 4), (3, 2, 1.5, 's1', 1)),
    1: (
        (1, 0, -0.5, 'first', 1), (1, 3, 1, 's2', 4), (2, 0, 1, 'second', 2),
        (2, 1, -0.5, 's1', 3), (2, 3, -1.5, 's1', 1), (3, 0, -1.5, 's1', 3))}

# (rate, phase in units of pi / 8) of f_i on the 9pi/8 ray and g_i on the pi/8 ray
_F_PHASES = {1: (math.sqrt(2), -7), 2: (2.0, -9), 3: (math.sqrt(2), -11), 4: (2.0, -5)}
_G_PHASES = {1: (math.sqrt(2), 9), 2: (2.0, 7), 3: (math.sqrt(2), 5), 4: (2.0, -5)}


@dataclass(frozen=True)
class Ray:
    """Ray of a jump contour with the Xi entries it carries"""

    angle: float
    orientation: int
    entries: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class JumpEval:
    """Jump matrix at zeta = k e^{i theta}

    Attributes
    ----------
    ray_angle
        theta in radians
    zeta_modulus
        k > 0
    x
        Radius
    matrix
        4 x 4 jump, unit determinant
    residual
        Distance to the independent construction (Gamma3 only)
    """

    ray_angle: float
    zeta_modulus: float
    x: float
    matrix: np.ndarray
    residual: float = 0.0

    @property
    def det(self) -> complex:
        """Determinant of the jump"""
        return complex(np.linalg.det(self.matrix))

    def describe(self) -> dict:
        """Returns evaluation as dict, complex entries as [re, im]"""
        return {
            'ray_angle': self.ray_angle,
            'zeta_modulus': self.zeta_modulus,
            'x': self.x,
            'matrix': [[[float(z.real), float(z.imag)] for z in row] for row in self.matrix],
            'residual': self.residual}


@dataclass(frozen=True)
class Y0Leading:
    """Leading-order Y(0, x), circulant with first row (t0, t1, t2, t3)

    `eigenvalues` are the circulant eigenvalues (a, b, b', a') in Fourier
    order; `balanced` tells whether a a' = b b' = 1 holds, which the leading
    order only gives up to O(e^{-4 sqrt 2 x}).
    """

    x: float
    matrix: np.ndarray
    a: float
    b: float
    eigenvalues: tuple[complex, ...]
    balanced: bool
    warn: bool

    @property
    def warn_flags(self) -> list[str]:
        """Names of the raised warnings"""
        flags = []
        if self.warn:
            flags.append('amplitude below leading-order floor')
        if not self.balanced:
            flags.append('eigenvalues not reciprocal')
        return flags

    def describe(self) -> dict:
        """Returns x, a, b, w0, w1 and warnings as dict"""
        w0, w1 = w_from_y0(self)
        return {
            'x': self.x,
            'a': self.a,
            'b': self.b,
            'w0': w0,
            'w1': w1,
            'warn_flags': self.warn_flags}


@dataclass(frozen=True)
class PositivityX:
    """Worst-case (l + 1/l = 2) leading minors X2, X3, X4 of X = G3 + G3^H"""

    x: float
    values: tuple[float, float, float]

    @property
    def holds(self) -> bool:
        """X is positive definite on the whole contour"""
        return all(value > 0 for value in self.values)

    def describe(self) -> dict:
        """Returns minors as dict"""
        return {
            'x': self.x,
            'X2': self.values[0],
            'X3': self.values[1],
            'X4': self.values[2],
            'holds': self.holds}


def _require_case_4a(s: StokesParams, operation: str) -> None:
    if s.case is not CaseId.CASE_4A:
        raise UnsupportedCaseException(case=s.case.value, operation=operation)


def _omega(power: float) -> complex:
    return root_of_unity(power, SIZE)


def phi(x: float) -> float:
    """Returns phi(x) = (1 / 2 pi) int_0^inf e^{-x (l + 1/l)} dl / l

    With l = e^sigma the integral becomes (1 / pi) int_0^inf e^{-2x cosh sigma}
    dsigma, computed with the factor e^{-2x} taken out.

    Parameters
    ----------
    x
        Positive radius, raise InvalidArgumentException otherwise

    Returns
    -------
        Positive value, decreasing in x
    """
    if not x > 0:
        raise InvalidArgumentException(name='x', requirement='radius must be positive')
    scaled, _ = quad(
        lambda sigma: math.exp(-2 * x * (math.cosh(sigma) - 1)),
        0, math.inf, epsabs=1e-14, epsrel=1e-13, limit=200)
    return scaled * math.exp(-2 * x) / math.pi


def _ray_angle(m: int, contour: str) -> float:
    angle = (2 * m + 1) * math.pi / 8
    if contour == 'rotated':
        angle -= 3 * math.pi / 8
    return angle % (2 * math.pi)


def _check_contour(contour: str) -> None:
    if contour not in CONTOURS:
        raise InvalidArgumentException(name='contour', requirement=f'one of {CONTOURS}')


def ray_table(contour: str = 'rotated') -> list[Ray]:
    """Returns the eight rays of Gamma2 or Gamma2' in increasing angle

    Parameters
    ----------
    contour, optional
        'rotated' for Gamma2' (rays m pi / 4), 'original' for Gamma2 (rays
        (2m + 1) pi / 8)
    """
    _check_contour(contour)
    rays = []
    for m in range(8):
        entries = tuple((row, column) for row, column, *_, ray in _XI_ENTRIES if ray == m)
        rays.append(Ray(
            angle=_ray_angle(m, contour),
            orientation=-1 if m in _INWARD else 1,
            entries=entries))
    return sorted(rays, key=lambda ray: ray.angle)


def _ray_index(theta: float, contour: str) -> int:
    for m in range(8):
        gap = (theta - _ray_angle(m, contour)) % (2 * math.pi)
        if min(gap, 2 * math.pi - gap) < RAY_TOL:
            return m
    raise RayNotOnContourException(theta=theta, contour=contour)


def jump_G2(theta: float, k: float, x: float, s: StokesParams, contour: str = 'rotated') -> JumpEval:
    """Returns the Gamma2 jump at zeta = k e^{i theta}

    Off-diagonal entries carry e' = exp(sqrt 2 (d / k + x^2 k / d)) for odd
    i - j and e'' = exp(2 (d / k + x^2 k / d)) for even i - j, with
    d = e^{5 pi i / 8} on Gamma2 and d = -1 on Gamma2', where with l = xk they
    become e^{-sqrt 2 x (l + 1/l)} and e^{-2x (l + 1/l)}.

    Parameters
    ----------
    theta
        Ray angle, raise RayNotOnContourException if not a ray of the contour
    k
        Modulus of zeta, positive
    x
        Radius, non-negative
    s
        Stokes parameters of case 4a
    contour, optional
        'rotated' or 'original'
    """
    _require_case_4a(s, 'jump_G2')
    _check_contour(contour)
    if not k > 0 or not x >= 0:
        raise InvalidArgumentException(name='k, x', requirement='k > 0 and x >= 0')
    m = _ray_index(theta, contour)

    d = -1.0 if contour == 'rotated' else complex(np.exp(5j * math.pi / 8))
    exponent = d / k + x * x * k / d
    odd, even = np.exp(math.sqrt(2) * exponent), np.exp(2 * exponent)

    params = {1: s.s1, 2: s.s2}
    matrix = np.eye(SIZE, dtype=complex)
    for row, column, power, sign, param, ray in _XI_ENTRIES:
        if ray == m:
            damping = odd if (row - column) % 2 else even
            matrix[row, column] = sign * _omega(power) * params[param] * damping
    return JumpEval(ray_angle=theta, zeta_modulus=k, x=x, matrix=matrix)


def _exponential(phases: dict, index: int, k: float, x: float) -> complex:
    rate, phase = phases[index]
    turn = np.exp(1j * math.pi * phase / 8)
    return complex(np.exp(rate * (turn / k + x * x * k / turn)))


def _xi3(ray: int, s: StokesParams) -> np.ndarray:
    """Returns Q_{3/2} Q_{7/4} Q_2 Q_{9/4} (9pi/8) or (Q_{1/2} Q_{3/4} Q_1 Q_{5/4})^{-1} (pi/8)"""
    first = Fraction(3, 2) if ray == 9 else Fraction(1, 2)
    product = np.eye(SIZE, dtype=complex)
    for step in range(4):
        product = product @ q_matrix(first + Fraction(step, 4), s)
    if ray == 9:
        return product
    # unipotent: (I + N)^{-1} = I - N + N^2 - N^3 keeps the zero pattern exact
    nilpotent = product - np.eye(SIZE)
    inverse, power = np.eye(SIZE, dtype=complex), np.eye(SIZE, dtype=complex)
    for _ in range(SIZE - 1):
        power = -power @ nilpotent
        inverse = inverse + power
    return inverse


def _conjugated(xi: np.ndarray, zeta: complex, x: float) -> np.ndarray:
    """Returns e Xi e^{-1}, entrywise so that no growing exponential is formed"""
    powers = np.array([_omega(j) for j in range(SIZE)])
    exponents = x * x * zeta * powers + np.conj(powers) / zeta
    scale = max(1.0, float(np.max(np.abs(xi))))
    result = np.zeros_like(xi)
    for row in range(SIZE):
        for column in range(SIZE):
            if abs(xi[row, column]) > 1e-14 * scale:
                result[row, column] = xi[row, column] * np.exp(exponents[row] - exponents[column])
    return result


def jump_G3(theta: float, k: float, x: float, s: StokesParams) -> JumpEval:
    """Returns the Gamma3 jump at zeta = k e^{i theta}, theta in {pi/8, 9pi/8}

    The matrix is assembled from f_1..f_4 (9pi/8) or g_1..g_4 (pi/8); its
    `residual` covers both g_i = f_i and the distance to e Xi e^{-1} built
    from Stokes factors, relative to max(1, max |entry|).
    """
    _require_case_4a(s, 'jump_G3')
    if not k > 0 or not x >= 0:
        raise InvalidArgumentException(name='k, x', requirement='k > 0 and x >= 0')
    ray = None
    for candidate in (1, 9):
        gap = (theta - candidate * math.pi / 8) % (2 * math.pi)
        if min(gap, 2 * math.pi - gap) < RAY_TOL:
            ray = candidate
    if ray is None:
        raise RayNotOnContourException(theta=theta, contour='Gamma3')

    s1, s2 = s.s1, s.s2
    coefficients = {
        'first': s1 + s1 * s2,
        'second': s1 * s1 + s2,
        's1': s1,
        's2': s2}
    phases = _F_PHASES if ray == 9 else _G_PHASES
    exponentials = {index: _exponential(phases, index, k, x) for index in range(1, 5)}

    matrix = np.eye(SIZE, dtype=complex)
    for row, column, power, coefficient, index in _G3_ENTRIES[ray]:
        matrix[row, column] = _omega(power) * coefficients[coefficient] * exponentials[index]

    mismatch = max(
        abs(_exponential(_G_PHASES, index, k, x) - _exponential(_F_PHASES, index, k, x))
        for index in range(1, 5))
    zeta = k * complex(np.exp(1j * ray * math.pi / 8))
    reference = _conjugated(_xi3(ray, s), zeta, x)
    scale = max(1.0, float(np.max(np.abs(matrix))))
    distance = max(mismatch, residual(matrix, reference) / scale)
    if distance > 1e-12:
        logger.warning('G3 on ray %d pi/8 differs from the Stokes factor product by %.3g', ray, distance)
    return JumpEval(ray_angle=theta, zeta_modulus=k, x=x, matrix=matrix, residual=distance)


def y0_leading(s: StokesParams, x: float) -> Y0Leading:
    """Returns the leading-order Y(0, x)

    First row (1, omega^{-1/2} s1 phi(sqrt 2 x), -s2 phi(2x), omega^{1/2} s1 phi(sqrt 2 x)),
    a = t0 + t1 + t2 + t3, b = t0 + i t1 - t2 - i t3.

    Parameters
    ----------
    s
        Stokes parameters of case 4a
    x
        Positive radius; warn is set when e^{-4 sqrt 2 x} is not below 1% of
        the smallest nonzero amplitude

    Returns
    -------
        Circulant leading order, raise NonPositiveEigenvalueException if
        a <= 0 or b <= 0
    """
    _require_case_4a(s, 'y0_leading')
    odd, even = phi(math.sqrt(2) * x), phi(2 * x)
    row = np.array([
        1.0,
        _omega(-0.5) * s.s1 * odd,
        -s.s2 * even,
        _omega(0.5) * s.s1 * odd], dtype=complex)
    matrix = np.array([np.roll(row, shift) for shift in range(SIZE)])

    eigenvalues = const_matrix('Omega', s.case) @ row
    if max(abs(eigenvalues[0].imag), abs(eigenvalues[1].imag)) > 1e-12:
        logger.warning('Imaginary parts of a, b reach %.3g', max(abs(eigenvalues[:2].imag)))
    a, b = float(eigenvalues[0].real), float(eigenvalues[1].real)
    if a <= 0 or b <= 0:
        raise NonPositiveEigenvalueException(x=x, a=a, b=b)

    balanced = bool(
        abs(eigenvalues[0] * eigenvalues[3] - 1) <= BALANCE_TOL
        and abs(eigenvalues[1] * eigenvalues[2] - 1) <= BALANCE_TOL)
    amplitudes = [value for value in (math.sqrt(2) * abs(s.s1) * odd, abs(s.s2) * even) if value > 0]
    warn = bool(amplitudes) and math.exp(-4 * math.sqrt(2) * x) >= FLOOR_RATIO * min(amplitudes)
    if warn:
        logger.debug('Leading order at x = %s is below its error floor', x)
    return Y0Leading(
        x=x, matrix=matrix, a=a, b=b,
        eigenvalues=tuple(complex(value) for value in eigenvalues),
        balanced=balanced, warn=warn)


def y0_from_contour(s: StokesParams, x: float, contour: str = 'rotated') -> np.ndarray:
    """Returns I + (1 / 2 pi i) int (G2 - I) dzeta / zeta by quadrature along every ray

    With k = e^sigma / x each ray integral runs over sigma on a window where
    the damping is above e^{-40} of its peak.
    """
    _require_case_4a(s, 'y0_from_contour')
    if not x > 0:
        raise InvalidArgumentException(name='x', requirement='radius must be positive')
    _check_contour(contour)

    d_real = -1.0 if contour == 'rotated' else math.cos(5 * math.pi / 8)
    rate = -d_real * math.sqrt(2) * x
    half_width = math.acosh(1 + 40 / rate)
    eye = np.eye(SIZE, dtype=complex)

    def packed(sigma: float, angle: float) -> np.ndarray:
        difference = jump_G2(angle, math.exp(sigma) / x, x, s, contour).matrix - eye
        return np.concatenate([difference.real.ravel(), difference.imag.ravel()])

    total = np.zeros((SIZE, SIZE), dtype=complex)
    for ray in ray_table(contour):
        integral, _ = quad_vec(
            lambda sigma, angle=ray.angle: packed(sigma, angle),
            -half_width, half_width, epsabs=1e-15, epsrel=1e-12)
        total += ray.orientation * (integral[:SIZE * SIZE] + 1j * integral[SIZE * SIZE:]).reshape(SIZE, SIZE)
    return eye + total / (2j * math.pi)


def w_from_y0(y: Y0Leading) -> tuple[float, float]:
    """Returns (w0, w1) = (-log(a) / 2, -log(b) / 2), raise NonPositiveEigenvalueException if a or b <= 0"""
    if y.a <= 0 or y.b <= 0:
        raise NonPositiveEigenvalueException(x=y.x, a=y.a, b=y.b)
    return -0.5 * math.log(y.a), -0.5 * math.log(y.b)


def verify_y0_symmetries(y: Y0Leading) -> IdentityReport:
    """Checks cyclic, anti- and reality symmetry of Y(0) and det Y(0) = 1"""
    report = IdentityReport(title='Y(0) symmetries', case=CaseId.CASE_4A.value)
    shift = const_matrix('Pi', CaseId.CASE_4A)
    d4 = const_matrix('D', CaseId.CASE_4A)
    reflection = const_matrix('C', CaseId.CASE_4A)
    matrix = y.matrix

    report.add('Pi^-1 Y Pi = Y', residual(shift.T @ matrix @ shift, matrix))
    report.add('d4^-1 Y^-t d4 = Y', residual(np.conj(d4) @ np.linalg.inv(matrix).T @ d4, matrix))
    report.add('C conj(Y) C = Y', residual(reflection @ np.conj(matrix) @ reflection, matrix))
    report.add('det Y = 1', abs(np.linalg.det(matrix) - 1))
    return report


def _check_radius(x: float) -> None:
    if not x >= 0:
        raise InvalidArgumentException(name='x', requirement='radius must be non-negative')


def _minors(s: StokesParams, g1: float, g2: float, g3: float, g4: float) -> tuple[float, float, float]:
    """Returns X2, X3, X4 from the squared moduli |g_i|^2"""
    s1, s2 = s.s1, s.s2
    x2 = 4 - g1 * s1 ** 2
    x3 = 8 - 2 * s1 ** 2 * s2 * g1 - 2 * s1 ** 2 * (g1 + g3) - 2 * s2 ** 2 * g4
    x4 = (
        16 - 8 * s1 ** 2 * (g1 + g3) - 8 * s1 ** 2 * s2 * (g1 + g2) - 4 * s2 ** 2 * (g2 + g4)
        - 2 * s1 ** 2 * s2 ** 2 * (g2 + g1 ** 2) + s1 ** 4 * (g1 ** 2 + g3 ** 2 - 2 * g2)
        + s2 ** 4 * g1 ** 2)
    return x2, x3, x4


def positivity_minors(s: StokesParams, x: float, l: float) -> tuple[float, float, float]:
    """Returns X2, X3, X4 at l = xk from the moduli of g_1..g_4"""
    _require_case_4a(s, 'positivity_minors')
    _check_radius(x)
    if not l > 0:
        raise InvalidArgumentException(name='l', requirement='l must be positive')
    r = x * (l + 1 / l)
    return _minors(
        s,
        math.exp(-2 * math.sqrt(2) * r * _COS),
        math.exp(-4 * r * _COS),
        math.exp(-2 * math.sqrt(2) * r * _SIN),
        math.exp(-4 * r * _SIN))


def positivity_matrix(s: StokesParams, x: float, l: float) -> tuple[float, float, float]:
    """Returns X2, X3, X4 as trailing principal minors of G3 + G3^H on the pi/8 ray"""
    if not x > 0 or not l > 0:
        raise InvalidArgumentException(name='x, l', requirement='x and l must be positive')
    jump = jump_G3(math.pi / 8, l / x, x, s).matrix
    hermitian = jump + jump.conj().T
    return tuple(
        float(np.linalg.det(hermitian[SIZE - size:, SIZE - size:]).real)
        for size in (2, 3, 4))


def positivity_X(s: StokesParams, x: float) -> PositivityX:
    """Returns the worst-case minors at l + 1/l = 2

    With c = e^{-4x cos(pi/8)} and s = e^{-4x sin(pi/8)}:

        X2 = 4 - cs s1^2
        X3 = 8 - 2(cs + c/s) s1^2 - 2 s^2 s2^2 - 2 cs s1^2 s2
        X4 = 16 - 8(cs + c/s) s1^2 - 4(c^2 + s^2) s2^2 - 8(cs + c^2) s1^2 s2
             + (c^2/s^2 + c^2 s^2 - 2c^2) s1^4 - 2(c^2 + c^2 s^2) s1^2 s2^2 + c^2 s^2 s2^4

    Parameters
    ----------
    s
        Stokes parameters of case 4a
    x
        Non-negative radius, x = 0 gives c = s = 1
    """
    _require_case_4a(s, 'positivity_X')
    _check_radius(x)
    c, sn = math.exp(-4 * x * _COS), math.exp(-4 * x * _SIN)
    s1, s2 = s.s1, s.s2
    x2 = 4 - c * sn * s1 ** 2
    x3 = 8 - 2 * (c * sn + c / sn) * s1 ** 2 - 2 * sn ** 2 * s2 ** 2 - 2 * c * sn * s1 ** 2 * s2
    x4 = (
        16 - 8 * (c * sn + c / sn) * s1 ** 2 - 4 * (c ** 2 + sn ** 2) * s2 ** 2
        - 8 * (c * sn + c ** 2) * s1 ** 2 * s2
        + (c ** 2 / sn ** 2 + c ** 2 * sn ** 2 - 2 * c ** 2) * s1 ** 4
        - 2 * (c ** 2 + c ** 2 * sn ** 2) * s1 ** 2 * s2 ** 2
        + c ** 2 * sn ** 2 * s2 ** 4)
    return PositivityX(x=x, values=(x2, x3, x4))


def solvable_from(s: StokesParams, x_max: float = X_MAX, tol: float = THRESHOLD_TOL) -> float:
    """Returns the smallest x* with positivity_X holding on (x*, inf)

    The conditions only get weaker as x grows, so the threshold is bracketed
    by doubling and refined by bisection.

    Parameters
    ----------
    s
        Finite Stokes parameters of case 4a
    x_max, optional
        Raise NoThresholdException if the conditions still fail there
    tol, optional
        Bisection width; thresholds below tol are reported as 0

    Returns
    -------
        0 on the closure of region (b), positive otherwise
    """
    _require_case_4a(s, 'solvable_from')
    if not (math.isfinite(s.s1) and math.isfinite(s.s2)):
        raise InvalidArgumentException(name='s', requirement='Stokes parameters must be finite')
    if positivity_X(s, 0.0).holds:
        return 0.0

    low, high = 0.0, 1.0
    while not positivity_X(s, high).holds:
        low, high = high, 2 * high
        if high > x_max:
            raise NoThresholdException(s1=s.s1, s2=s.s2, x_max=x_max)
    while high - low > tol:
        middle = (low + high) / 2
        if positivity_X(s, middle).holds:
            high = middle
        else:
            low = middle
    logger.debug('Threshold of (%s, %s) is %s', s.s1, s.s2, high)
    return 0.0 if high <= tol else high


def threshold_table(points: list[StokesParams], threads: int = 1) -> list[tuple[float, float, float]]:
    """Returns rows (s1, s2, x_threshold) in input order"""
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        thresholds = list(executor.map(solvable_from, points))
    return [(s.s1, s.s2, x) for s, x in zip(points, thresholds)]
