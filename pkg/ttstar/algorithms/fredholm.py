"""Fredholm determinant representation of case 4a solutions

    K_k(u, v) = sum_j omega_j^k c_j exp(-t[(1 - omega_j) u + (1 - omega_j^-1) / u]) / (v - omega_j u),
    q_k = log det(I - K_k) - log det(I - K_{k-1}),

omega_j = e^{2 pi i j / 4}, c_4 = 0, c_3 = -i c_1, the homotopy parameter is
folded into c. Branch (I) identifies 2 w0 = q_2, 2 w1 = q_3.
"""

import logging
import math
from dataclasses import dataclass
import numpy as np
from scipy.optimize import linear_sum_assignment
from ttstar.core.cases import CaseId
from ttstar.core.params import StokesParams, AsymptoticData
from ttstar.exceptions.fredholm_exceptions import (
    DeterminantNearZeroException,
    GridInsufficiencyException,
    PathObstructionException,
    SmallRadiusException)
from ttstar.exceptions.validation_exceptions import (
    InvalidArgumentException,
    UnsupportedCaseException)


logger = logging.getLogger(__name__)

SIZE = 4
BRANCHES = ('I', 'II')
T_MIN = 1e-3
DET_MIN = 1e-14
GRID_TOL = 1e-6
CHECK_TOL = 1e-8
OMEGAS = np.exp(2j * np.pi * np.arange(1, SIZE + 1) / SIZE)


def _check_branch(branch: str) -> None:
    if branch not in BRANCHES:
        raise InvalidArgumentException(name='branch', requirement=f'one of {BRANCHES}')


class TWParams:
    """Kernel coefficients c_1..c_4 with c_4 = 0 and c_3 = -i c_1"""

    def __init__(self, c: np.ndarray, branch: str = 'I', lam: float = 1.0):
        c = np.asarray(c, dtype=complex)
        self._validation(c=c, branch=branch, lam=lam)
        self.__c = c
        self.__branch = branch
        self.__lam = float(lam)

    @staticmethod
    def _validation(c: np.ndarray, branch: str, lam: float) -> None:
        """Validation function for kernel coefficients"""

        def check_size() -> None:
            """Checks N = 4"""
            if c.shape != (SIZE,):
                raise InvalidArgumentException(
                    name='c', requirement=f'{SIZE} coefficients are required')

        def check_anti_symmetry() -> None:
            """Checks c_4 = 0 and c_3 = -i c_1"""
            scale = max(1.0, float(np.max(np.abs(c))))
            if abs(c[3]) > 1e-14 * scale or abs(c[2] + 1j * c[0]) > 1e-14 * scale:
                raise InvalidArgumentException(
                    name='c', requirement='c_4 = 0 and c_3 = -i c_1 are required')

        def check_lambda() -> None:
            """Checks 0 <= lambda <= 1"""
            if not 0 <= lam <= 1:
                raise InvalidArgumentException(
                    name='lam', requirement='homotopy parameter must lie in [0, 1]')

        check_size()
        check_anti_symmetry()
        check_lambda()
        _check_branch(branch)

    @property
    def c(self) -> np.ndarray:
        """Coefficients c_1..c_4"""
        return self.__c.copy()

    @property
    def branch(self) -> str:
        """Branch of the identification with (s1, s2)"""
        return self.__branch

    @property
    def lam(self) -> float:
        """Homotopy parameter"""
        return self.__lam

    def scaled(self) -> np.ndarray:
        """Returns lambda * c"""
        return self.__lam * self.__c

    def describe(self) -> dict:
        """Returns parameters as dict"""
        return {
            'N': SIZE,
            'c': [[float(value.real), float(value.imag)] for value in self.__c],
            'branch': self.__branch,
            'lambda': self.__lam}

    def __repr__(self):
        return f'TWParams(c1={self.__c[0]:.6g}, c2={self.__c[1]:.6g}, branch={self.__branch})'


@dataclass(frozen=True)
class NystromGrid:
    """Quadrature on (0, inf) through u = e^sigma, trapezoid over [-L, L]"""

    nodes: np.ndarray
    weights: np.ndarray
    half_width: float

    @property
    def map(self) -> str:
        """Substitution used"""
        return f'u = exp(sigma), sigma in [-{self.half_width:.6g}, {self.half_width:.6g}], trapezoid'

    @property
    def size(self) -> int:
        """Node count"""
        return int(self.nodes.size)

    @classmethod
    def build(cls, t: float, nodes: int = 200) -> 'NystromGrid':
        """Builds the grid for radius t

        L = log(50 / t) + 1 puts the row factor e^{-t(u + 1/u)} below e^{-50} at
        both ends.
        """
        if not t > 0:
            raise InvalidArgumentException(name='t', requirement='radius must be positive')
        if nodes < 2:
            raise InvalidArgumentException(name='nodes', requirement='at least 2 nodes')
        half_width = max(1.0, math.log(50 / t) + 1)
        sigma, step = np.linspace(-half_width, half_width, nodes, retstep=True)
        values = np.exp(sigma)
        return cls(nodes=values, weights=step * values, half_width=half_width)

    def refined(self) -> 'NystromGrid':
        """Returns the grid with doubled node count over the same interval"""
        count = 2 * self.size
        sigma, step = np.linspace(-self.half_width, self.half_width, count, retstep=True)
        values = np.exp(sigma)
        return NystromGrid(nodes=values, weights=step * values, half_width=self.half_width)


@dataclass(frozen=True)
class FredholmResult:
    """q_1..q_4 at one radius with the consistency residuals"""

    t: float
    q: tuple[float, float, float, float]
    imag_max: float
    anti_symmetry: tuple[float, float]
    node_count: int

    @property
    def consistent(self) -> bool:
        """Imaginary parts and anti-symmetry residuals below 1e-8"""
        return self.imag_max < CHECK_TOL and max(self.anti_symmetry) < CHECK_TOL

    def describe(self) -> dict:
        """Returns result as dict"""
        return {
            't': self.t,
            **{f'q{k}': value for k, value in enumerate(self.q, start=1)},
            'node_count': self.node_count,
            'consistent': self.consistent,
            'residuals': {
                'imag_max': self.imag_max,
                'q1+q2': self.anti_symmetry[0],
                'q3+q4': self.anti_symmetry[1]}}


def c_from_stokes(s: StokesParams, branch: str = 'I') -> TWParams:
    """Returns kernel coefficients of a case 4a point

    Parameters
    ----------
    s
        Stokes parameters, raise UnsupportedCaseException outside case 4a
    branch, optional
        (I): s1 = -2 pi i c1 e^{pi i/4}; (II): s1 = 2 pi i c1 e^{pi i/4};
        both: s2 = 2 pi i c2 e^{pi i/2}

    Returns
    -------
        c1, c2 solving the branch relations, c3 = -i c1, c4 = 0
    """
    if s.case is not CaseId.CASE_4A:
        raise UnsupportedCaseException(case=s.case.value, operation='c_from_stokes')
    _check_branch(branch)

    sign = 1 if branch == 'I' else -1
    c1 = sign * s.s1 * np.exp(1j * np.pi / 4) / (2 * np.pi)
    c2 = -s.s2 / (2 * np.pi) + 0j
    return TWParams(np.array([c1, c2, -1j * c1, 0j]), branch=branch)


def kernel_value(k: int, u: float, v: float, t: float, p: TWParams) -> complex:
    """Returns K_k(u, v) at radius t"""
    if not (u > 0 and v > 0 and t > 0):
        raise InvalidArgumentException(name='u', requirement='u, v, t must be positive')
    return complex(_kernel_matrix(k, np.array([u]), np.array([v]), t, p)[0, 0])


def _kernel_matrix(k: int, rows: np.ndarray, columns: np.ndarray, t: float, p: TWParams) -> np.ndarray:
    coeffs = p.scaled()
    u = rows[:, None]
    v = columns[None, :]
    matrix = np.zeros((rows.size, columns.size), dtype=complex)
    # c_4 = 0: the j = N term never enters, so v - omega_j u stays away from 0
    for omega, coeff in zip(OMEGAS[:-1], coeffs[:-1]):
        if coeff == 0:
            continue
        decay = np.exp(-t * ((1 - omega) * u + (1 - 1 / omega) / u))
        matrix += omega ** k * coeff * decay / (v - omega * u)
    return matrix


def _log_det(k: int, t: float, p: TWParams, grid: NystromGrid) -> complex:
    root = np.sqrt(grid.weights)
    matrix = root[:, None] * _kernel_matrix(k, grid.nodes, grid.nodes, t, p) * root[None, :]
    sign, log_abs = np.linalg.slogdet(np.eye(grid.size) - matrix)
    if log_abs < math.log(DET_MIN):
        raise DeterminantNearZeroException(k=k, t=t, modulus=math.exp(log_abs))
    return complex(np.log(sign)) + log_abs


def _evaluate(t: float, p: TWParams, grid: NystromGrid) -> FredholmResult:
    log_dets = [_log_det(k % SIZE, t, p, grid) for k in range(SIZE)]
    values, imag_parts = [], []
    for k in range(1, SIZE + 1):
        difference = log_dets[k % SIZE] - log_dets[k - 1]
        imag_parts.append(abs((difference.imag + math.pi) % (2 * math.pi) - math.pi))
        values.append(float(difference.real))

    result = FredholmResult(
        t=t,
        q=tuple(values),
        imag_max=max(imag_parts),
        anti_symmetry=(abs(values[0] + values[1]), abs(values[2] + values[3])),
        node_count=grid.size)

    if not result.consistent:
        logger.warning(
            'Fredholm consistency at t = %s: |Im q| = %s, |q1+q2|, |q3+q4| = %s',
            t, result.imag_max, result.anti_symmetry)
    return result


def fredholm_q(
        t: float,
        p: TWParams,
        grid: NystromGrid | None = None,
        check: bool = False) -> FredholmResult:
    """Returns q_1..q_4 at radius t

    Parameters
    ----------
    t
        Radius, raise SmallRadiusException below 1e-3
    p
        Kernel coefficients
    grid, optional
        Nystrom grid, by default NystromGrid.build(t)
    check, optional
        Recompute on the refined grid, raise GridInsufficiencyException if q
        changes by more than 1e-6

    Returns
    -------
        q values with |Im q|, |q1+q2| and |q3+q4|
    """
    if not t > 0:
        raise InvalidArgumentException(name='t', requirement='radius must be positive')
    if t < T_MIN:
        raise SmallRadiusException(t=t, limit=T_MIN)
    grid = grid if grid is not None else NystromGrid.build(t)
    if grid.nodes[-1] * t < 20 or grid.nodes[0] / t > 1 / 20:
        logger.warning('Nystrom grid %s does not cover the kernel scale at t = %s', grid.map, t)

    result = _evaluate(t, p, grid)
    logger.debug('Fredholm q at t = %s on %s nodes: %s', t, grid.size, result.q)

    if check:
        refined = _evaluate(t, p, grid.refined())
        change = max(abs(a - b) for a, b in zip(result.q, refined.q))
        if change > GRID_TOL:
            raise GridInsufficiencyException(t=t, change=change, limit=GRID_TOL)
    return result


def small_t_slope(p: TWParams, t: float, grid_nodes: int = 200) -> np.ndarray:
    """Returns (q_k(2t) - q_k(t)) / log 2, the log t slope of q_k near t"""
    near = fredholm_q(t, p, NystromGrid.build(t, grid_nodes))
    far = fredholm_q(2 * t, p, NystromGrid.build(2 * t, grid_nodes))
    return (np.array(far.q) - np.array(near.q)) / math.log(2)


def _alpha_coefficients(p: TWParams, lam: float) -> np.ndarray:
    """Returns y^4 + 2 pi i lam sum_j c_j omega_j^-1 y^j - 1, highest degree first"""
    terms = 2j * np.pi * lam * p.scaled()[:3] / OMEGAS[:3]
    return np.array([1, terms[2], terms[1], terms[0], -1], dtype=complex)


def _match(previous: np.ndarray, current: np.ndarray) -> tuple[np.ndarray, bool]:
    """Returns assignment previous -> current and whether it is unambiguous"""
    distances = np.abs(previous[:, None] - current[None, :])
    _, columns = linear_sum_assignment(distances)
    separation = min(
        abs(current[i] - current[j])
        for i in range(current.size) for j in range(i + 1, current.size))
    moved = float(np.max(distances[np.arange(previous.size), columns]))
    return columns, moved < 0.5 * separation


def alpha_from_params(p: TWParams, steps: int = 64) -> np.ndarray:
    """Returns alpha_1 < ... < alpha_4, y_k = e^{pi i alpha_k / 2} roots of the alpha polynomial

    Roots start at y_k = e^{pi i k / 2} for lambda = 0 and are tracked along
    lambda in [0, 1] by nearest matching, halving the step while the matching
    is ambiguous. The arguments are unwrapped along the path.

    Raises
    ------
    PathObstructionException
        Final roots off the unit circle or colliding (boundary of region (a))
    """
    roots = np.exp(1j * np.pi * np.arange(1, SIZE + 1) / 2)
    alphas = np.arange(1, SIZE + 1, dtype=float)
    base_step = 1.0 / steps
    lam, step = 0.0, base_step

    while lam < 1.0:
        step = min(step, 1.0 - lam)
        current = np.roots(_alpha_coefficients(p, lam + step))
        columns, unambiguous = _match(roots, current)
        if not unambiguous and step > 1e-9:
            step /= 2
            logger.debug('Homotopy step halved to %s at lambda = %s', step, lam)
            continue

        matched = current[columns]
        alphas += 2 / np.pi * np.angle(matched / roots)
        roots = matched
        lam += step
        step = min(2 * step, base_step)

    if np.max(np.abs(np.abs(roots) - 1)) > 1e-8:
        raise PathObstructionException(step=1.0)

    # a path through a double root may swap the outer pair: keep alpha_4 - alpha_1 < 4
    alphas = np.sort(alphas)
    while alphas[-1] - alphas[0] > 4:
        alphas[0], alphas[-1] = alphas[-1] - 4, alphas[0] + 4
        alphas = np.sort(alphas)
    if np.min(np.diff(alphas)) < 1e-7:
        raise PathObstructionException(step=1.0)
    return alphas


def gammas_from_alphas(alphas: np.ndarray, branch: str = 'I') -> AsymptoticData:
    """Returns (I) gamma = (2(alpha_2 - 2), 2(alpha_3 - 3)) or (II) (2(alpha_4 - 4), 2(alpha_1 - 1))"""
    _check_branch(branch)
    if branch == 'I':
        return AsymptoticData(2 * (alphas[1] - 2), 2 * (alphas[2] - 3))
    return AsymptoticData(2 * (alphas[3] - 4), 2 * (alphas[0] - 1))


def w_from_q(q: tuple[float, float, float, float], branch: str = 'I') -> tuple[float, float]:
    """Returns (w0, w1): (I) 2 w0 = q_2, 2 w1 = q_3; (II) 2 w0 = q_4, 2 w1 = q_1"""
    _check_branch(branch)
    if branch == 'I':
        return q[1] / 2, q[2] / 2
    return q[3] / 2, q[0] / 2
