"""Connection matrices E_k of case 4a

E_1 = 1/4 C Q^(inf)_{3/4} generates all E_k through

    d^-1 E_k = Q_{k-1/4}^-1 d^-1 E_{k-1/4} Q_{k-1/4},

with d = diag(1, omega, omega^2, omega^3).
"""

from fractions import Fraction
import numpy as np
from ttstar.core.cases import CaseId
from ttstar.core.constants import const_matrix, residual
from ttstar.core.lattice import ComplexMatrix, SectorIndex, to_numerator
from ttstar.core.params import StokesParams
from ttstar.core.reports import IdentityReport
from ttstar.core.stokes import q_matrix, q_zero_matrix, tilde_q_matrix
from ttstar.exceptions.validation_exceptions import UnsupportedCaseException


CIRCLE_SECTORS = [Fraction(m, 4) for m in range(3, 11)]


def _require_4a(s: StokesParams, operation: str) -> None:
    if s.case is not CaseId.CASE_4A:
        raise UnsupportedCaseException(case=s.case.value, operation=operation)


def connection_matrix(k: SectorIndex, s: StokesParams) -> ComplexMatrix:
    """Returns connection matrix E_k

    Parameters
    ----------
    k
        Quarter-integer sector index, raise LatticeViolationException otherwise
    s
        Stokes parameters of case 4a, raise UnsupportedCaseException otherwise

    Returns
    -------
        Complex 4 x 4 matrix
    """
    _require_4a(s, 'connection_matrix')
    m = to_numerator(k, 4)

    matrix = 0.25 * const_matrix('C', s.case) @ q_matrix(Fraction(3, 4), s)
    current = 4
    while current < m:
        index = Fraction(current, 4)
        matrix = np.linalg.inv(q_zero_matrix(index, s)) @ matrix @ q_matrix(index, s)
        current += 1
    while current > m:
        index = Fraction(current - 1, 4)
        matrix = q_zero_matrix(index, s) @ matrix @ np.linalg.inv(q_matrix(index, s))
        current -= 1

    return matrix


def tilde_connection_matrix(s: StokesParams) -> np.ndarray:
    """Returns real matrix d_(0)^-1 E_1 d_(0)^-1 = 1/4 C~ Q~_{3/4}"""
    _require_4a(s, 'tilde_connection_matrix')
    d_zero_inv = np.conj(const_matrix('D0', s.case))
    return (d_zero_inv @ connection_matrix(1, s) @ d_zero_inv).real


def verify_connection_symmetries(k: SectorIndex, s: StokesParams) -> IdentityReport:
    """Checks cyclic symmetry, anti-symmetry, reality and det E_1 = -1/256"""
    _require_4a(s, 'verify_connection_symmetries')
    k = Fraction(to_numerator(k, 4), 4)
    case = s.case

    diagonal_inv = np.linalg.inv(const_matrix('D', case))
    shift = const_matrix('Pi', case)
    reflection = const_matrix('C', case)
    reduced = diagonal_inv @ connection_matrix(k, s)

    report = IdentityReport(title='Connection matrix symmetries', case=case.value)

    cycle = q_matrix(k, s) @ q_matrix(k + Fraction(1, 4), s) @ shift
    report.add('cyclic symmetry', residual(reduced, case.omega * cycle @ reduced @ cycle))

    twist = diagonal_inv @ shift @ shift
    report.add(
        'anti-symmetry',
        residual(reduced, -twist @ np.linalg.inv(reduced).T @ np.linalg.inv(twist) / 16))

    mirrored = connection_matrix(Fraction(7, 4) - k, s)
    report.add(
        'reality',
        residual(connection_matrix(k, s), reflection @ np.conj(mirrored) @ reflection))

    first = connection_matrix(1, s)
    report.add('det E_1 = -1/256', abs(np.linalg.det(first) + 1 / 256))

    tilde = 0.25 * const_matrix('CTilde', case).real @ tilde_q_matrix(Fraction(3, 4), s)
    report.add('tilde E_1 = 1/4 C~ Q~_{3/4}', residual(tilde_connection_matrix(s), tilde))
    d_zero_inv = np.conj(const_matrix('D0', case))
    report.add(
        'tilde E_1 is real',
        float(np.max(np.abs((d_zero_inv @ first @ d_zero_inv).imag))))

    return report


def circle_jump(k: SectorIndex, s: StokesParams) -> ComplexMatrix:
    """Returns jump J_k = (E_{7/4-k} T_k)^-1 on the unit circle

    T_k transports from sector 7/4 - k to sector k: the product
    Q_{7/4-k} ... Q_{k-1/4} when k > 7/4 - k, the inverse of
    Q_k ... Q_{7/4-k-1/4} otherwise.
    """
    _require_4a(s, 'circle_jump')
    m = to_numerator(k, 4)
    mirror = 7 - m

    transport = np.eye(4, dtype=complex)
    if m > mirror:
        for index in range(mirror, m):
            transport = transport @ q_matrix(Fraction(index, 4), s)
    else:
        for index in range(m, mirror):
            transport = transport @ q_matrix(Fraction(index, 4), s)
        transport = np.linalg.inv(transport)

    return np.linalg.inv(connection_matrix(Fraction(mirror, 4), s) @ transport)


def verify_circle_jumps(s: StokesParams) -> IdentityReport:
    """Checks that every jump on the unit circle equals 4C"""
    _require_4a(s, 'verify_circle_jumps')
    target = 4 * const_matrix('C', s.case)

    report = IdentityReport(title='Circle jumps', case=s.case.value)
    for k in CIRCLE_SECTORS:
        report.add(f'J_{k} = 4C', residual(circle_jump(k, s), target))
    return report
