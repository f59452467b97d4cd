"""Tests of value types `CaseId`, `StokesParams` and `AsymptoticData`

if (non-finite or non-real parameter):
    - raise InvalidArgumentException

if (unknown case tag):
    - raise ValueError

- omega is a primitive root of unity of order N
- complexified parameters omega^(3/2) s1 and omega^3 s2
- sector indices converted to exact numerators
"""

import math
from fractions import Fraction
import pytest
from ttstar import (
    CaseId, StokesParams, AsymptoticData,
    to_numerator, to_index,
    InvalidArgumentException,
    LatticeViolationException)


class TestsCaseId:
    """Tests of enumeration `CaseId`"""

    def test_sizes(self):
        """Reading matrix sizes"""
        assert [case.n_plus_1 for case in CaseId] == [4, 5, 6]

    def test_primitive_root(self):
        """Checking omega^N = 1 and omega^k != 1 for 0 < k < N"""
        for case in CaseId:
            omega = case.omega
            size = case.n_plus_1
            assert (abs(omega ** size - 1) < 1e-14
                and all(abs(omega ** k - 1) > 1e-3 for k in range(1, size)))

    def test_parse(self):
        """Parsing tags
            - case insensitive, CaseId passed through
        """
        assert (CaseId.parse('5A') is CaseId.CASE_5A
            and CaseId.parse(CaseId.CASE_6A) is CaseId.CASE_6A
            and str(CaseId.CASE_4A) == '4a')

    def test_exception_unknown_tag(self):
        """Parsing tag '7a'
            - expected raise ValueError
        """
        with pytest.raises(ValueError):
            CaseId.parse('7a')


class TestsStokesParams:
    """Tests of class `StokesParams`"""

    def test_creating(self):
        """Creating parameters from integers
            - stored as floats, default case 4a
        """
        s = StokesParams(1, -2)
        assert (isinstance(s.s1, float)
            and s.s2 == -2.0
            and s.case is CaseId.CASE_4A
            and s.is_integer()
            and tuple(s) == (1.0, -2.0))

    def test_complexified(self):
        """Reading complexified parameters of case 4a
            - omega^(3/2) s1 = exp(3 pi i / 4) s1
            - omega^3 s2 = -i s2
        """
        s = StokesParams(2, 3)
        assert (abs(s.complex_s1 - 2 * complex(math.cos(0.75 * math.pi), math.sin(0.75 * math.pi))) < 1e-14
            and abs(s.complex_s2 + 3j) < 1e-14)

    def test_reflected(self):
        """Reflecting (s1, s2) -> (-s1, s2)"""
        s = StokesParams(1.5, -0.5, '6a').reflected()
        assert s == StokesParams(-1.5, -0.5, '6a')

    def test_describe(self):
        """Describing parameters as dict"""
        assert StokesParams(0.5, 1, '5a').describe() == {'case': '5a', 's1': 0.5, 's2': 1.0}

    def test_exception_not_finite(self):
        """Creating parameters with nan and inf
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            StokesParams(float('nan'), 0)
        with pytest.raises(InvalidArgumentException):
            StokesParams(0, float('inf'))

    def test_exception_not_real(self):
        """Creating parameters with str and complex
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            StokesParams('1', 0)
        with pytest.raises(InvalidArgumentException):
            StokesParams(1j, 0)


class TestsAsymptoticData:
    """Tests of class `AsymptoticData`"""

    def test_creating(self):
        """Creating exponents"""
        g = AsymptoticData(1, -1)
        assert tuple(g) == (1.0, -1.0) and g.case is CaseId.CASE_4A

    def test_exception_not_finite(self):
        """Creating exponents with nan
            - expected raise InvalidArgumentException
        """
        with pytest.raises(InvalidArgumentException):
            AsymptoticData(float('nan'), 0)


class TestsLattice:
    """Tests of sector index conversion"""

    def test_numerators(self):
        """Converting quarter indices
            - 7/4 -> 7, 1.25 -> 5, 2 -> 8
        """
        assert (to_numerator(Fraction(7, 4), 4) == 7
            and to_numerator(1.25, 4) == 5
            and to_numerator(2, 4) == 8
            and to_index(6, 5) == Fraction(6, 5))

    def test_exception_off_lattice(self):
        """Converting 1/3 on the quarter lattice
            - expected raise LatticeViolationException
        """
        with pytest.raises(LatticeViolationException):
            to_numerator(Fraction(1, 3), 4)
