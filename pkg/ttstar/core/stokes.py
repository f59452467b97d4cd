"""Stokes factors, Stokes matrices, monodromy and characteristic polynomial

Sector indices k live on the lattice (1/N)Z and are handled as integer
numerators m = kN. The two base factors Q_1 and Q_{1+1/N} are assembled from
the real tilde entries of the case profile; every other factor follows from

    Q_{k + 2/N} = Pi Q_k Pi^{-1},

which makes the sequence 2-periodic in k.
"""

import logging
import numpy as np
from ttstar.core.cases import CaseId, FactorEntry, evaluate_affine
from ttstar.core.constants import const_matrix, base_shift, residual
from ttstar.core.lattice import ComplexMatrix, SectorIndex, Numerator, to_numerator
from ttstar.core.params import StokesParams
from ttstar.core.polynomials import PalindromicPoly
from ttstar.core.reports import IdentityReport, IDENTITY_TOL
from ttstar.exceptions.validation_exceptions import (
    UnsupportedCaseException,
    IdentityMismatchException)


logger = logging.getLogger(__name__)


def _real_factor(entries: tuple[FactorEntry, ...], s: StokesParams) -> np.ndarray:
    """Returns I + sum (a s1 + b s2) e_ij"""
    matrix = np.eye(s.case.n_plus_1)
    for row, column, a, b in entries:
        matrix[row, column] += a * s.s1 + b * s.s2
    return matrix


def _q_by_numerator(m: Numerator, s: StokesParams) -> ComplexMatrix:
    """Returns Q^(inf)_{m/N}"""
    size = s.case.n_plus_1
    profile = s.case.profile
    d_inf = const_matrix('Dinf', s.case)
    d_inf_inv = np.conj(d_inf)

    if (m - size) % 2 == 0:
        base_numerator, entries = size, profile.first_factor
    else:
        base_numerator, entries = size + 1, profile.second_factor

    base = d_inf @ _real_factor(entries, s) @ d_inf_inv
    steps = ((m - base_numerator) // 2) % size
    shift = np.linalg.matrix_power(const_matrix('Pi', s.case), steps)
    return shift @ base @ shift.T


def _tilde_by_numerator(m: Numerator, s: StokesParams) -> ComplexMatrix:
    d_inf = const_matrix('Dinf', s.case)
    return np.conj(d_inf) @ _q_by_numerator(m, s) @ d_inf


def q_matrix(k: SectorIndex, s: StokesParams) -> ComplexMatrix:
    """Returns Stokes factor Q^(inf)_k

    Parameters
    ----------
    k
        Sector index on the lattice (1/N)Z, raise LatticeViolationException
        otherwise
    s
        Stokes parameters

    Returns
    -------
        Unipotent complex matrix
    """
    return _q_by_numerator(to_numerator(k, s.case.n_plus_1), s)


def q_zero_matrix(k: SectorIndex, s: StokesParams) -> ComplexMatrix:
    """Returns Q^(0)_k = d_(0)^2 Q^(inf)_k d_(0)^-2"""
    d_zero_sq = const_matrix('D0', s.case) @ const_matrix('D0', s.case)
    return d_zero_sq @ q_matrix(k, s) @ np.conj(d_zero_sq)


def tilde_q_matrix(k: SectorIndex, s: StokesParams, real: bool = True) -> np.ndarray:
    """Returns Q~_k = d_(inf)^-1 Q^(inf)_k d_(inf)

    Parameters
    ----------
    k
        Sector index on the lattice
    s
        Stokes parameters
    real, optional
        Drop the (rounding-level) imaginary part
    """
    matrix = _tilde_by_numerator(to_numerator(k, s.case.n_plus_1), s)
    return matrix.real if real else matrix


def _half_turn(first: Numerator, s: StokesParams) -> np.ndarray:
    """Returns Q~_{first/N} Q~_{(first+1)/N} ... over N consecutive sectors"""
    size = s.case.n_plus_1
    matrix = np.eye(size, dtype=complex)
    for m in range(first, first + size):
        matrix = matrix @ _tilde_by_numerator(m, s)
    return matrix.real


def stokes_matrix(s: StokesParams) -> np.ndarray:
    """Returns real Stokes matrix S = Q~_1 Q~_{1+1/N} ... Q~_{2-1/N}"""
    return _half_turn(s.case.n_plus_1, s)


def second_stokes_matrix(s: StokesParams) -> np.ndarray:
    """Returns S~_2 = Q~_2 ... Q~_{3-1/N}, equal to S^{-t}, without inverting S"""
    return _half_turn(2 * s.case.n_plus_1, s)


def generator(s: StokesParams) -> np.ndarray:
    """Returns M = Q~_1 Q~_{1+1/N} P, with P = PiHat for 4a and Pi otherwise"""
    size = s.case.n_plus_1
    first = _tilde_by_numerator(size, s).real
    second = _tilde_by_numerator(size + 1, s).real
    return first @ second @ base_shift(s.case).real


def _power_scale(matrix: np.ndarray) -> float:
    """Size of the entries of M^N and of det(M - mu I) on the unit circle"""
    return max(1.0, float(np.max(np.abs(matrix)))) ** matrix.shape[0]


def monodromy(s: StokesParams) -> np.ndarray:
    """Returns S S^{-t}

    The product is compared with sign * M^N, raise IdentityMismatchException
    if they differ by more than 1e-12 relative to max(1, |M|)^N.
    """
    product = stokes_matrix(s) @ second_stokes_matrix(s)

    matrix = generator(s)
    power = s.case.profile.monodromy_sign * np.linalg.matrix_power(matrix, s.case.n_plus_1)
    mismatch = residual(product, power)
    tolerance = IDENTITY_TOL * _power_scale(matrix)
    if mismatch > tolerance:
        raise IdentityMismatchException(
            identity='S S^-t and sign * M^N', residual=mismatch, tolerance=tolerance)

    return product


def _unit_pair(root: complex) -> tuple[complex, complex]:
    """Returns the two mu with mu + 1/mu = root

    A real root in [-2, 2] gives exp(+-i acos(root / 2)), exactly unimodular.
    """
    if root.imag == 0 and abs(root.real) <= 2 + IDENTITY_TOL:
        theta = float(np.arccos(np.clip(root.real / 2, -1.0, 1.0)))
        return complex(np.exp(1j * theta)), complex(np.exp(-1j * theta))
    if root.imag == 0:
        real = root.real
        first = (real + np.copysign(np.sqrt(real * real - 4), real)) / 2
        return complex(first), complex(1 / first)
    first = (root + np.sqrt(root * root - 4)) / 2
    return complex(first), complex(1 / first)


def char_poly_roots(s: StokesParams) -> np.ndarray:
    """Returns roots of p from its factorization (trivial roots) * mu^2 P(mu + 1/mu)

    P(x) = x^2 + b x + c; a discriminant above -1e-12 is treated as real roots.
    """
    profile = s.case.profile
    b = evaluate_affine(profile.quadratic_b, s.s1, s.s2)
    c = evaluate_affine(profile.quadratic_c, s.s1, s.s2)
    discriminant = b * b - 4 * c
    if discriminant >= -IDENTITY_TOL:
        root = complex(np.sqrt(max(discriminant, 0.0)))
    else:
        root = 1j * float(np.sqrt(-discriminant))
    quadratic = ((-b + root) / 2, (-b - root) / 2)

    mus = [complex(value) for value in profile.trivial_roots]
    for value in quadratic:
        mus.extend(_unit_pair(value))
    return np.array(mus)


def monodromy_eigenvalues(s: StokesParams) -> np.ndarray:
    """Returns eigenvalues of S S^{-t} as sign * mu^N over the roots mu of p

    The roots come from the factorization of p, so the eigenvalues of region
    (a) points lie on the unit circle up to rounding of exp.
    """
    char_poly(s)  # raises on a closed / numeric mismatch
    mus = char_poly_roots(s)
    return s.case.profile.monodromy_sign * mus ** s.case.n_plus_1


def closed_form_coefficients(s: StokesParams) -> np.ndarray:
    """Returns coefficients of p from the closed formula of the case"""
    return np.array([
        evaluate_affine(form, s.s1, s.s2)
        for form in s.case.profile.poly_coefficients])


def numeric_coefficients(s: StokesParams) -> np.ndarray:
    """Returns coefficients of det(M - mu I) interpolated at N + 1 roots of unity"""
    matrix = generator(s)
    points = matrix.shape[0] + 1
    nodes = np.exp(2j * np.pi * np.arange(points) / points)
    values = np.array([np.linalg.det(matrix - node * np.eye(points - 1)) for node in nodes])
    ascending = np.fft.fft(values) / points
    return np.real(ascending[::-1])


def char_poly(s: StokesParams) -> PalindromicPoly:
    """Returns characteristic polynomial p(mu) = det(M - mu I)

    The closed form is returned. It is compared against the coefficients of
    the numerical matrix, raise IdentityMismatchException if they differ by
    more than 1e-12 relative to max(1, |M|)^N.
    """
    closed = closed_form_coefficients(s)
    numeric = numeric_coefficients(s)
    mismatch = float(np.max(np.abs(closed - numeric)))
    tolerance = IDENTITY_TOL * _power_scale(generator(s))
    if mismatch > tolerance:
        raise IdentityMismatchException(
            identity='closed and numeric coefficients of p', residual=mismatch, tolerance=tolerance)
    logger.debug('Characteristic polynomial at %s: mismatch %s', s, mismatch)

    return PalindromicPoly(
        coeffs=tuple(float(coeff) for coeff in closed),
        sign=s.case.profile.palindromic_sign)


def verify_tilde_symmetries(s: StokesParams) -> IdentityReport:
    """Checks the tilde symmetries over one period of sector indices

    - (1) Q~_{k+2/N} = Pi~ Q~_k Pi~^-1
    - (2) Q~_{k+1} = Q~_k^{-t}
    - (3) Q~_k = C~ conj(Q~_{(N+2)/N - k})^-1 C~
    - reality of every Q~_k and of S
    - S S^-t = sign * M^N
    """
    case = s.case
    size = case.n_plus_1
    shift_tilde = const_matrix('PiTilde', case)
    shift_tilde_inv = np.linalg.inv(shift_tilde)
    reflection = const_matrix('CTilde', case)

    numerators = range(size, 3 * size)
    tilde = {m: _tilde_by_numerator(m, s) for m in range(-2 * size, 4 * size)}

    report = IdentityReport(title='Tilde symmetries', case=case.value)
    report.add('(1) shift by 2/N', max(
        residual(tilde[m + 2], shift_tilde @ tilde[m] @ shift_tilde_inv)
        for m in numerators))
    report.add('(2) shift by 1', max(
        residual(tilde[m + size], np.linalg.inv(tilde[m]).T)
        for m in numerators))
    report.add('(3) reflection', max(
        residual(tilde[m], reflection @ np.linalg.inv(np.conj(tilde[size + 2 - m])) @ reflection)
        for m in numerators))
    report.add('reality of Q~', max(
        float(np.max(np.abs(tilde[m].imag))) for m in numerators))
    product = np.eye(size, dtype=complex)
    for m in range(size, 2 * size):
        product = product @ tilde[m]
    report.add(
        'reality of S',
        float(np.max(np.abs(product.imag))) / max(1.0, float(np.max(np.abs(product)))))
    report.add('period 2', max(
        residual(tilde[m + 2 * size], tilde[m]) for m in range(-size, size)))

    power = case.profile.monodromy_sign * np.linalg.matrix_power(generator(s), size)
    scale = max(1.0, float(np.max(np.abs(power))))
    report.add(
        'S S^-t = sign * M^N',
        residual(stokes_matrix(s) @ second_stokes_matrix(s), power) / scale)

    return report


def stokes_determinant_identity(s: StokesParams) -> IdentityReport:
    """Checks det(S^-1 + S^-t) = (2 + 2 s1 - s2)(2 + s2)^2(2 - 2 s1 - s2) for 4a"""
    if s.case is not CaseId.CASE_4A:
        raise UnsupportedCaseException(
            case=s.case.value, operation='stokes_determinant_identity')

    stokes_inv = second_stokes_matrix(s).T
    symmetric = stokes_inv + stokes_inv.T
    numeric = float(np.linalg.det(symmetric))
    hadamard = float(np.prod(np.linalg.norm(symmetric, axis=1)))
    closed = (2 + 2 * s.s1 - s.s2) * (2 + s.s2) ** 2 * (2 - 2 * s.s1 - s.s2)

    report = IdentityReport(title='Stokes determinant identity', case=s.case.value)
    report.add(
        'det(S^-1 + S^-t)',
        abs(numeric - closed) / max(1.0, abs(closed), hadamard),
        tolerance=1e-10)
    return report
