"""Cases 4a, 5a, 6a and their per-case constants

Every number that distinguishes the three cases lives in `CaseProfile`; the
algebra and the classifiers read it instead of branching on the case tag.
Matrix entries use 0-based (row, column) positions.
"""

import cmath
import math
from enum import Enum
from dataclasses import dataclass


# affine form in the Stokes parameters: const + a * s1 + b * s2
Affine = tuple[float, float, float]

# quadratic form: const + a * s1 + b * s2 + c * s1 ** 2
Quadratic = tuple[float, float, float, float]

# unipotent factor entry: (row, column, a, b) with value a * s1 + b * s2
FactorEntry = tuple[int, int, int, int]


class CaseId(Enum):
    """Two-function reductions of the tt*-Toda equations"""

    CASE_4A = '4a'
    CASE_5A = '5a'
    CASE_6A = '6a'

    @classmethod
    def parse(cls, tag: 'str | CaseId') -> 'CaseId':
        """Returns case by its tag ('4a', '5a', '6a')"""
        if isinstance(tag, CaseId):
            return tag
        return cls(str(tag).lower())

    @property
    def n_plus_1(self) -> int:
        """Matrix size N = n + 1"""
        return int(self.value[0])

    @property
    def omega(self) -> complex:
        """Primitive root of unity e^{2 pi i / N}"""
        return cmath.exp(2j * math.pi / self.n_plus_1)

    @property
    def profile(self) -> 'CaseProfile':
        """Constants of the case"""
        return PROFILES[self]

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CaseProfile:
    """Per-case constants

    Attributes
    ----------
    kappa
        d_(0) = diag(exp(2 pi i kappa j / N))
    shift_scale
        Pi~ = shift_scale * P, with P = Pi^ for 4a and P = Pi otherwise
    monodromy_sign
        S S^{-t} = monodromy_sign * (Q~_1 Q~_{1+1/N} P)^N
    first_factor, second_factor
        Entries of the real factors Q~_1 and Q~_{1+1/N}
    poly_coefficients
        p(mu) = det(M - mu I), highest power first, each an affine form
    palindromic_sign
        coeffs[k] = palindromic_sign * coeffs[degree - k]
    quadratic_b, quadratic_c
        P(x) = x^2 + b x + c with x = mu + 1 / mu
    chart_offsets
        theta_i = pi (gamma_i + offset_i) / N
    reference_angles
        Angles (in units of pi) that the roots of p interlace with in region (b)
    region_b_sign
        Sign of p at the reference roots of unity inside region (b)
    region_a_triple, region_b_triple
        Printed inequality lists of the two regions
    trivial_roots
        Roots of p that do not depend on the Stokes parameters
    """

    kappa: float
    shift_scale: complex
    monodromy_sign: int
    first_factor: tuple[FactorEntry, ...]
    second_factor: tuple[FactorEntry, ...]
    poly_coefficients: tuple[Affine, ...]
    palindromic_sign: int
    quadratic_b: Affine
    quadratic_c: Affine
    chart_offsets: tuple[float, float]
    reference_angles: tuple[float, float, float]
    region_b_sign: int
    region_a_triple: tuple[Quadratic, ...]
    region_b_triple: tuple[Quadratic, ...]
    trivial_roots: tuple[float, ...]


_SQRT3 = math.sqrt(3.0)
_SQRT5 = math.sqrt(5.0)

PROFILES: dict[CaseId, CaseProfile] = {
    CaseId.CASE_4A: CaseProfile(
        kappa=0.5,
        shift_scale=cmath.exp(-0.25j * math.pi),
        monodromy_sign=-1,
        first_factor=((1, 0, -1, 0), (2, 3, 1, 0)),
        second_factor=((1, 3, 0, -1),),
        poly_coefficients=(
            (1, 0, 0), (0, 1, 0), (0, 0, -1), (0, 1, 0), (1, 0, 0)),
        palindromic_sign=1,
        quadratic_b=(0, 1, 0),
        quadratic_c=(-2, 0, -1),
        chart_offsets=(1.0, 3.0),
        reference_angles=(0.0, 0.5, 1.0),
        region_b_sign=1,
        region_a_triple=((8, 0, 4, 1), (2, 2, -1, 0), (2, -2, -1, 0)),
        region_b_triple=((2, 0, 1, 0), (2, 2, -1, 0), (2, -2, -1, 0)),
        trivial_roots=()),
    CaseId.CASE_5A: CaseProfile(
        kappa=3.0,
        shift_scale=cmath.exp(0.8j * math.pi),
        monodromy_sign=1,
        first_factor=((1, 0, 1, 0), (2, 4, 0, -1)),
        second_factor=((2, 3, -1, 0), (1, 4, 0, 1)),
        poly_coefficients=(
            (-1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1), (0, -1, 0),
            (1, 0, 0)),
        palindromic_sign=-1,
        quadratic_b=(1, -1, 0),
        quadratic_c=(-1, -1, -1),
        chart_offsets=(6.0, 8.0),
        reference_angles=(0.2, 0.6, 1.0),
        region_b_sign=1,
        region_a_triple=((5, 2, 4, 1), (5, -3, -1, 0), (1, 1, -1, 0)),
        region_b_triple=(
            (2, (-1 - _SQRT5) / 2, (1 - _SQRT5) / 2, 0),
            (2, (-1 + _SQRT5) / 2, (1 + _SQRT5) / 2, 0),
            (2, 2, -2, 0)),
        trivial_roots=(1.0,)),
    CaseId.CASE_6A: CaseProfile(
        kappa=1.0,
        shift_scale=cmath.exp(-1j * math.pi / 3),
        monodromy_sign=1,
        first_factor=((1, 0, -1, 0), (3, 4, 1, 0)),
        second_factor=((1, 5, 0, 1), (2, 4, 0, -1)),
        poly_coefficients=(
            (1, 0, 0), (0, 1, 0), (0, 0, -1), (0, 0, 0), (0, 0, 1),
            (0, -1, 0), (-1, 0, 0)),
        palindromic_sign=-1,
        quadratic_b=(0, 1, 0),
        quadratic_c=(-1, 0, -1),
        chart_offsets=(2.0, 4.0),
        reference_angles=(1 / 6, 0.5, 5 / 6),
        region_b_sign=-1,
        region_a_triple=((4, 0, 4, 1), (3, 2, -1, 0), (3, -2, -1, 0)),
        region_b_triple=((2, _SQRT3, -1, 0), (1, 0, 1, 0), (2, -_SQRT3, -1, 0)),
        trivial_roots=(1.0, -1.0)),
}


def evaluate_affine(form: Affine, s1: float, s2: float) -> float:
    """Evaluates const + a * s1 + b * s2"""
    const, a, b = form
    return const + a * s1 + b * s2


def evaluate_quadratic(form: Quadratic, s1: float, s2: float) -> float:
    """Evaluates const + a * s1 + b * s2 + c * s1 ** 2"""
    const, a, b, c = form
    return const + a * s1 + b * s2 + c * s1 * s1
