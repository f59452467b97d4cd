"""Palindromic polynomials, cyclotomic factors and discriminants

Coefficient lists are ordered from the leading coefficient to the constant
term, as numpy.polyval and numpy.roots expect.
"""

from dataclasses import dataclass
from functools import lru_cache
import numpy as np
from ttstar.exceptions.validation_exceptions import InvalidArgumentException


IntegerPoly = list[int]


@dataclass(frozen=True)
class PalindromicPoly:
    """Polynomial with coeffs[k] = sign * coeffs[degree - k]

    Attributes
    ----------
    coeffs
        Real coefficients, leading to constant
    sign
        +1 (palindromic) or -1 (anti-palindromic)
    """

    coeffs: tuple[float, ...]
    sign: int = 1

    @property
    def degree(self) -> int:
        """Polynomial degree"""
        return len(self.coeffs) - 1

    def __call__(self, mu: complex | np.ndarray) -> complex | np.ndarray:
        return np.polyval(self.coeffs, mu)

    def roots(self) -> np.ndarray:
        """Returns roots of the polynomial"""
        return np.roots(self.coeffs)

    def symmetry_residual(self) -> float:
        """Returns max |coeffs[k] - sign * coeffs[degree - k]|"""
        coeffs = np.asarray(self.coeffs, dtype=float)
        return float(np.max(np.abs(coeffs - self.sign * coeffs[::-1])))

    def is_integer(self) -> bool:
        """Checks that all coefficients are integers"""
        return all(float(coeff).is_integer() for coeff in self.coeffs)

    def integer_coeffs(self) -> IntegerPoly:
        """Returns coefficients as integers"""
        return [int(round(coeff)) for coeff in self.coeffs]

    def describe(self) -> dict:
        """Returns polynomial as dict"""
        return {
            'degree': self.degree,
            'coeffs': list(self.coeffs),
            'palindromic': self.sign == 1}


def trim(poly: IntegerPoly) -> IntegerPoly:
    """Strips leading zero coefficients"""
    index = 0
    while index < len(poly) - 1 and poly[index] == 0:
        index += 1
    return list(poly[index:])


def multiply(left: IntegerPoly, right: IntegerPoly) -> IntegerPoly:
    """Returns product of two integer polynomials"""
    product = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            product[i + j] += a * b
    return product


def divide(numerator: IntegerPoly, denominator: IntegerPoly) -> tuple[IntegerPoly, IntegerPoly]:
    """Exact long division by a monic integer polynomial

    Returns
    -------
        Quotient and remainder
    """
    denominator = trim(denominator)
    if denominator[0] != 1:
        raise InvalidArgumentException(
            name='denominator', requirement='divisor must be monic')

    remainder = list(trim(numerator))
    if len(remainder) < len(denominator):
        return [0], remainder

    quotient = []
    for _ in range(len(remainder) - len(denominator) + 1):
        lead = remainder[0]
        quotient.append(lead)
        for j, coeff in enumerate(denominator):
            remainder[j] -= lead * coeff
        remainder.pop(0)

    return quotient, trim(remainder) if remainder else [0]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Returns Phi_n, built from x^n - 1 by dividing out Phi_d for d | n, d < n"""
    if n < 1:
        raise InvalidArgumentException(name='n', requirement='index must be positive')

    poly = [1] + [0] * (n - 1) + [-1]
    for d in range(1, n):
        if n % d == 0:
            poly, _ = divide(poly, list(cyclotomic(d)))
    return tuple(poly)


def cyclotomic_factorization(poly: IntegerPoly, max_index: int = 12) -> dict[int, int] | None:
    """Factors integer polynomial into Phi_1 ... Phi_max_index by trial division

    Parameters
    ----------
    poly
        Integer coefficients, leading coefficient +1 or -1
    max_index, optional
        Largest cyclotomic index tried

    Returns
    -------
        Multiplicities {n: power}, None if a non-cyclotomic cofactor remains
    """
    poly = trim(poly)
    if poly[0] not in (1, -1):
        raise InvalidArgumentException(
            name='poly', requirement='leading coefficient must be 1 or -1')
    if poly[0] == -1:
        poly = [-coeff for coeff in poly]

    factors = {}
    for n in range(1, max_index + 1):
        factor = list(cyclotomic(n))
        while len(poly) > 1:
            quotient, remainder = divide(poly, factor)
            if any(remainder):
                break
            poly = quotient
            factors[n] = factors.get(n, 0) + 1

    if poly != [1]:
        return None
    return factors


def expand_factorization(factors: dict[int, int]) -> IntegerPoly:
    """Returns product of cyclotomic powers"""
    product = [1]
    for n, power in sorted(factors.items()):
        for _ in range(power):
            product = multiply(product, list(cyclotomic(n)))
    return product


def format_factorization(factors: dict[int, int]) -> str:
    """Returns factorization as text, e.g. 'Phi2^4'"""
    if not factors:
        return '1'
    return ' '.join(
        f'Phi{n}' if power == 1 else f'Phi{n}^{power}'
        for n, power in sorted(factors.items()))


def sylvester_matrix(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Returns Sylvester matrix of two coefficient arrays"""
    n, m = len(p) - 1, len(q) - 1
    size = n + m
    matrix = np.zeros((size, size), dtype=np.result_type(p, q, float))
    for row in range(m):
        matrix[row, row:row + n + 1] = p
    for row in range(n):
        matrix[m + row, row:row + m + 1] = q
    return matrix


def discriminant(coeffs) -> float:
    """Returns discriminant (-1)^(n(n-1)/2) Res(p, p') / a_n

    Parameters
    ----------
    coeffs
        Coefficients, leading to constant, leading coefficient nonzero
    """
    coeffs = np.asarray(coeffs, dtype=float)
    degree = len(coeffs) - 1
    if degree < 1 or coeffs[0] == 0:
        raise InvalidArgumentException(
            name='coeffs', requirement='polynomial must have positive degree')

    derivative = np.polyder(coeffs)
    resultant = np.linalg.det(sylvester_matrix(coeffs, derivative))
    sign = -1 if (degree * (degree - 1) // 2) % 2 else 1
    return float(sign * resultant / coeffs[0])
