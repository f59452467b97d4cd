"""Fredholm determinant exceptions

- FredholmException
    - DeterminantNearZeroException
    - GridInsufficiencyException
    - PathObstructionException
    - SmallRadiusException
"""


class FredholmException(Exception):
    """Fredholm exception"""
    def __init__(self, message: str):
        super().__init__()
        prefix = 'Fredholm determinant exception!'
        self._message = f'{prefix} {message}'

    def __str__(self):
        return self._message


class DeterminantNearZeroException(FredholmException):
    """Determinant near zero exception"""
    def __init__(self, k: int, t: float, modulus: float):
        message = (
            f'det(I - K_{k}) at t = {t:.6g} has modulus {modulus:.3g}: '
            f'the kernel is too strong for this radius!')
        super().__init__(message=message)


class GridInsufficiencyException(FredholmException):
    """Grid insufficiency exception"""
    def __init__(self, t: float, change: float, limit: float):
        message = (
            f'Doubling the quadrature nodes at t = {t:.6g} changes q by '
            f'{change:.3g} > {limit:.1g}: refine the grid!')
        super().__init__(message=message)


class PathObstructionException(FredholmException):
    """Path obstruction exception"""
    def __init__(self, step: float):
        message = (
            f'Roots collide at homotopy parameter {step:.6g}: the point is on '
            f'the boundary of region (a)!')
        super().__init__(message=message)


class SmallRadiusException(FredholmException):
    """Small radius exception"""
    def __init__(self, t: float, limit: float):
        message = (
            f'Radius t = {t:.3g} is below {limit:.1g}: the determinant is '
            f'not resolved there!')
        super().__init__(message=message)
