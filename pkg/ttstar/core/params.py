"""Stokes parameters and asymptotic data"""

import math
import cmath
import numbers
from ttstar.core.cases import CaseId
from ttstar.exceptions.validation_exceptions import InvalidArgumentException


class StokesParams:
    """Real Stokes parameters (s1, s2) of one of the cases

    No region restriction is imposed here: the classifiers decide where the
    point lies.
    """

    def __init__(self, s1: float, s2: float, case: CaseId | str = CaseId.CASE_4A):
        self._validation(s1=s1, s2=s2)
        self.__s1 = float(s1)
        self.__s2 = float(s2)
        self.__case = CaseId.parse(case)

    @staticmethod
    def _validation(s1, s2) -> None:
        """Validation function for Stokes parameters"""

        def check_type() -> None:
            """Checks that parameters are real numbers"""
            for name, value in (('s1', s1), ('s2', s2)):
                if isinstance(value, bool) or not isinstance(value, numbers.Real):
                    raise InvalidArgumentException(
                        name=name, requirement='Stokes parameter must be real')

        def check_finite() -> None:
            """Checks that parameters are finite"""
            for name, value in (('s1', s1), ('s2', s2)):
                if not math.isfinite(value):
                    raise InvalidArgumentException(
                        name=name, requirement='Stokes parameter must be finite')

        check_type()
        check_finite()

    @property
    def s1(self) -> float:
        """First real Stokes parameter"""
        return self.__s1

    @property
    def s2(self) -> float:
        """Second real Stokes parameter"""
        return self.__s2

    @property
    def case(self) -> CaseId:
        """Case tag"""
        return self.__case

    @property
    def complex_s1(self) -> complex:
        """Complexified parameter omega^{3/2} * s1"""
        return cmath.exp(3j * math.pi / self.case.n_plus_1) * self.s1

    @property
    def complex_s2(self) -> complex:
        """Complexified parameter omega^3 * s2"""
        return cmath.exp(6j * math.pi / self.case.n_plus_1) * self.s2

    def is_integer(self) -> bool:
        """Checks that both parameters are integers"""
        return self.s1.is_integer() and self.s2.is_integer()

    def reflected(self) -> 'StokesParams':
        """Returns (-s1, s2), the point of the swapped pair (w0, w1) -> (-w1, -w0)"""
        return StokesParams(-self.s1, self.s2, self.case)

    def describe(self) -> dict:
        """Returns parameters as dict"""
        return {'case': self.case.value, 's1': self.s1, 's2': self.s2}

    def __iter__(self):
        yield self.s1
        yield self.s2

    def __eq__(self, other):
        return isinstance(other, StokesParams) and \
            self.case == other.case and \
            self.s1 == other.s1 and \
            self.s2 == other.s2

    def __hash__(self):
        return hash((self.case, self.s1, self.s2))

    def __repr__(self):
        return f'StokesParams(s1={self.s1:.6g}, s2={self.s2:.6g}, case={self.case})'


class AsymptoticData:
    """Asymptotic exponents: 2 w_i ~ gamma_i log x as x -> 0"""

    def __init__(
            self, gamma0: float, gamma1: float,
            case: CaseId | str = CaseId.CASE_4A):
        for name, value in (('gamma0', gamma0), ('gamma1', gamma1)):
            if isinstance(value, bool) or not isinstance(value, numbers.Real) or \
                    not math.isfinite(value):
                raise InvalidArgumentException(
                    name=name, requirement='exponent must be a finite real')
        self.__gamma0 = float(gamma0)
        self.__gamma1 = float(gamma1)
        self.__case = CaseId.parse(case)

    @property
    def gamma0(self) -> float:
        """Exponent of w0"""
        return self.__gamma0

    @property
    def gamma1(self) -> float:
        """Exponent of w1"""
        return self.__gamma1

    @property
    def case(self) -> CaseId:
        """Case tag"""
        return self.__case

    def describe(self) -> dict:
        """Returns exponents as dict"""
        return {'case': self.case.value, 'gamma0': self.gamma0, 'gamma1': self.gamma1}

    def __iter__(self):
        yield self.gamma0
        yield self.gamma1

    def __eq__(self, other):
        return isinstance(other, AsymptoticData) and \
            self.case == other.case and \
            self.gamma0 == other.gamma0 and \
            self.gamma1 == other.gamma1

    def __hash__(self):
        return hash((self.case, self.gamma0, self.gamma1))

    def __repr__(self):
        return (
            f'AsymptoticData(gamma0={self.gamma0:.6g}, '
            f'gamma1={self.gamma1:.6g}, case={self.case})')
