"""Type aliases for matrices and sector indices"""

from fractions import Fraction
from typing import TypeAlias
import numpy as np
from ttstar.exceptions.validation_exceptions import LatticeViolationException


ComplexMatrix: TypeAlias = np.ndarray
"""Dense square complex matrix of the case size"""

Numerator: TypeAlias = int
"""Sector index k stored as the integer m with k = m / N"""

SectorIndex: TypeAlias = int | float | Fraction
"""Sector index as accepted by the public operations"""


def to_numerator(k: SectorIndex, denominator: int) -> Numerator:
    """Returns m such that k = m / denominator, raises if k is off the lattice

    Parameters
    ----------
    k
        Sector index (int, float or Fraction)
    denominator
        Lattice denominator, equal to the matrix size N

    Returns
    -------
        Integer numerator
    """
    if isinstance(k, Fraction):
        scaled = k * denominator
        if scaled.denominator != 1:
            raise LatticeViolationException(k=float(k), denominator=denominator)
        return int(scaled)

    scaled = float(k) * denominator
    numerator = round(scaled)
    if abs(scaled - numerator) > 1e-9:
        raise LatticeViolationException(k=float(k), denominator=denominator)
    return int(numerator)


def to_index(numerator: Numerator, denominator: int) -> Fraction:
    """Returns the sector index m / N as an exact fraction"""
    return Fraction(numerator, denominator)
