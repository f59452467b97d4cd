"""Validation exceptions

- ValidationException
    - UnknownMatrixNameException
    - UnsupportedCaseException
    - LatticeViolationException
    - NonIntegerParametersException
    - InvalidArgumentException
        - RayNotOnContourException
    - IdentityMismatchException
"""


class ValidationException(Exception):
    """Validation exception"""
    def __init__(self, message: str):
        super().__init__()
        prefix = 'Validation exception!'
        self._message = f'{prefix} {message}'

    def __str__(self):
        return self._message


class UnknownMatrixNameException(ValidationException):
    """Unknown matrix name exception"""
    def __init__(self, name: str, known: list[str]):
        message = (
            f'Unknown constant matrix {name}: matrix name must be one of '
            f'{", ".join(known)}!')
        super().__init__(message=message)


class UnsupportedCaseException(ValidationException):
    """Unsupported case exception"""
    def __init__(self, case: str, operation: str):
        message = f'Case {case} is not supported by {operation}!'
        super().__init__(message=message)


class LatticeViolationException(ValidationException):
    """Lattice violation exception"""
    def __init__(self, k: float, denominator: int):
        message = (
            f'Sector index {k} is not on the lattice: index must be a '
            f'multiple of 1/{denominator}!')
        super().__init__(message=message)


class NonIntegerParametersException(ValidationException):
    """Non integer parameters exception"""
    def __init__(self, s1: float, s2: float):
        message = (
            f'Stokes parameters ({s1}, {s2}) are not integers: cyclotomic '
            f'factorization needs integer coefficients!')
        super().__init__(message=message)


class InvalidArgumentException(ValidationException):
    """Invalid argument exception"""
    def __init__(self, name: str, requirement: str):
        message = f'Wrong value of {name}: {requirement}!'
        super().__init__(message=message)


class RayNotOnContourException(InvalidArgumentException):
    """Ray is not on contour exception"""
    def __init__(self, theta: float, contour: str):
        super().__init__(
            name='ray angle',
            requirement=f'angle {theta:.6g} is not a ray of contour {contour}')


class IdentityMismatchException(ValidationException):
    """Identity mismatch exception"""
    def __init__(self, identity: str, residual: float, tolerance: float):
        message = (
            f'Two computations of {identity} differ by {residual:.3g}: '
            f'agreement to {tolerance:.3g} is required!')
        super().__init__(message=message)
