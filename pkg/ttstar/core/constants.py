"""Frequently used constant matrices and their identities

Names accepted by `const_matrix`:

- Pi: cyclic shift, ones at (j, j + 1 mod N)
- Omega: Omega_jk = omega^(jk)
- D: diag(1, omega, ..., omega^(N - 1))
- Delta: anti-diagonal
- C: C_jk = 1 iff j + k = 0 mod N
- D0, Dinf: d_(0) and d_(inf) = d_(0)^{-1}
- PiTilde: d_(inf)^{-1} Pi d_(inf)
- PiHat: Pi with -1 in the lower-left corner (case 4a only)
- CTilde: d_(0) C d_(0)
"""

import logging
import numpy as np
from ttstar.core.cases import CaseId
from ttstar.core.lattice import ComplexMatrix
from ttstar.core.reports import IdentityReport
from ttstar.exceptions.validation_exceptions import (
    UnknownMatrixNameException,
    UnsupportedCaseException)


logger = logging.getLogger(__name__)

MATRIX_NAMES = [
    'Pi', 'Omega', 'D', 'Delta', 'C', 'D0', 'Dinf', 'PiTilde', 'PiHat', 'CTilde']


def root_of_unity(exponent: float, size: int) -> complex:
    """Returns omega^exponent = exp(2 pi i exponent / size)

    Integer exponents are reduced modulo size first, so that omega^N is
    exactly 1 up to rounding of the single exponential.
    """
    if float(exponent).is_integer():
        exponent = int(exponent) % size
    return complex(np.exp(2j * np.pi * exponent / size))


def residual(left: ComplexMatrix, right: ComplexMatrix) -> float:
    """Returns max-entry distance between two matrices"""
    return float(np.max(np.abs(np.asarray(left) - np.asarray(right))))


def _shift(size: int) -> ComplexMatrix:
    return np.roll(np.eye(size, dtype=complex), 1, axis=1)


def _dft(size: int) -> ComplexMatrix:
    indices = np.arange(size)
    exponents = np.outer(indices, indices) % size
    return np.exp(2j * np.pi * exponents / size)


def _diagonal(size: int) -> ComplexMatrix:
    return np.diag([root_of_unity(j, size) for j in range(size)])


def _anti_diagonal(size: int) -> ComplexMatrix:
    return np.fliplr(np.eye(size, dtype=complex))


def _reflection(size: int) -> ComplexMatrix:
    indices = np.arange(size)
    return ((indices[:, None] + indices[None, :]) % size == 0).astype(complex)


def _d_zero(case: CaseId) -> ComplexMatrix:
    size = case.n_plus_1
    kappa = case.profile.kappa
    return np.diag([root_of_unity(kappa * j, size) for j in range(size)])


def _pi_hat(case: CaseId) -> ComplexMatrix:
    if case is not CaseId.CASE_4A:
        raise UnsupportedCaseException(case=case.value, operation='PiHat')
    matrix = _shift(case.n_plus_1)
    matrix[-1, 0] = -1
    return matrix


def const_matrix(name: str, case: CaseId | str) -> ComplexMatrix:
    """Returns constant matrix of the case

    Parameters
    ----------
    name
        One of MATRIX_NAMES, raise UnknownMatrixNameException otherwise
    case
        Case tag, PiHat raises UnsupportedCaseException outside case 4a

    Returns
    -------
        Fresh N x N complex matrix
    """
    case = CaseId.parse(case)
    size = case.n_plus_1

    if name == 'Pi':
        return _shift(size)
    if name == 'Omega':
        return _dft(size)
    if name == 'D':
        return _diagonal(size)
    if name == 'Delta':
        return _anti_diagonal(size)
    if name == 'C':
        return _reflection(size)
    if name == 'D0':
        return _d_zero(case)
    if name == 'Dinf':
        return np.conj(_d_zero(case))
    if name == 'PiTilde':
        d_zero = _d_zero(case)
        return d_zero @ _shift(size) @ np.conj(d_zero)
    if name == 'PiHat':
        return _pi_hat(case)
    if name == 'CTilde':
        d_zero = _d_zero(case)
        return d_zero @ _reflection(size) @ d_zero

    raise UnknownMatrixNameException(name=name, known=MATRIX_NAMES)


def base_shift(case: CaseId | str) -> ComplexMatrix:
    """Returns P of the generator Q~_1 Q~_{1+1/N} P: PiHat for 4a, Pi otherwise"""
    case = CaseId.parse(case)
    if case is CaseId.CASE_4A:
        return _pi_hat(case)
    return _shift(case.n_plus_1)


def verify_identities(case: CaseId | str) -> IdentityReport:
    """Checks identities F1-F7 and the structural identities of the tilde frame

    Parameters
    ----------
    case
        Case tag

    Returns
    -------
        Report with one max-entry residual per identity
    """
    case = CaseId.parse(case)
    size = case.n_plus_1
    omega = case.omega
    identity = np.eye(size)

    shift = const_matrix('Pi', case)
    dft = const_matrix('Omega', case)
    diagonal = const_matrix('D', case)
    anti = const_matrix('Delta', case)
    reflection = const_matrix('C', case)
    d_zero = const_matrix('D0', case)
    d_inf = const_matrix('Dinf', case)
    shift_tilde = const_matrix('PiTilde', case)
    reflection_tilde = const_matrix('CTilde', case)
    shift_inv = np.linalg.inv(shift)
    dft_inv = np.linalg.inv(dft)

    report = IdentityReport(title='Constant matrix identities', case=case.value)

    # F1 - F7
    report.add('F1: conj(Omega) Omega = N I', residual(np.conj(dft) @ dft, size * identity))
    report.add('F2: Pi Omega = Omega d', residual(shift @ dft, dft @ diagonal))
    report.add('F3: Pi C = Delta', residual(shift @ reflection, anti))
    report.add('F3: C Pi^-1 = Delta', residual(reflection @ shift_inv, anti))
    report.add('F4: d C d = C', residual(diagonal @ reflection @ diagonal, reflection))
    report.add('F5: Omega d Omega = N Delta', residual(dft @ diagonal @ dft, size * anti))
    report.add(
        'F5: Omega Delta Omega = N d^-1',
        residual(dft @ anti @ dft, size * np.linalg.inv(diagonal)))
    report.add(
        'F6: C = Omega conj(Omega)^-1',
        residual(reflection, dft @ np.linalg.inv(np.conj(dft))))
    report.add('F6: C = Omega^2 / N', residual(reflection, dft @ dft / size))
    report.add('F6: C = N Omega^-2', residual(reflection, size * dft_inv @ dft_inv))
    for power in (1, 2):
        shift_power = np.linalg.matrix_power(shift, power)
        report.add(
            f'F7: Pi^{power} d = omega^{power} d Pi^{power}',
            residual(shift_power @ diagonal, omega ** power * diagonal @ shift_power))

    # tilde frame
    report.add('d(0) d(inf) = I', residual(d_zero @ d_inf, identity))
    report.add(
        'PiTilde = d(inf)^-1 Pi d(inf)',
        residual(shift_tilde, np.linalg.inv(d_inf) @ shift @ d_inf))
    report.add(
        'PiTilde = scale * P',
        residual(shift_tilde, case.profile.shift_scale * base_shift(case)))
    report.add(
        'PiTilde^N = I',
        residual(np.linalg.matrix_power(shift_tilde, size), identity))
    report.add('CTilde is real', float(np.max(np.abs(reflection_tilde.imag))))
    report.add('CTilde^2 = I', residual(reflection_tilde @ reflection_tilde, identity))

    if not report.passed:
        logger.warning(
            'Constant identities failed for case %s: %s',
            case.value, [check.name for check in report.failures()])

    return report
