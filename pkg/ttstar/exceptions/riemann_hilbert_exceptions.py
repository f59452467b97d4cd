"""Riemann-Hilbert exceptions

- RiemannHilbertException
    - NonPositiveEigenvalueException
    - NoThresholdException
"""


class RiemannHilbertException(Exception):
    """Riemann-Hilbert exception"""
    def __init__(self, message: str):
        super().__init__()
        prefix = 'Riemann-Hilbert exception!'
        self._message = f'{prefix} {message}'

    def __str__(self):
        return self._message


class NonPositiveEigenvalueException(RiemannHilbertException):
    """Non positive eigenvalue exception"""
    def __init__(self, x: float, a: float, b: float):
        message = (
            f'Leading-order Y(0) at x = {x:.6g} has eigenvalues a = {a:.6g}, '
            f'b = {b:.6g}: both must be positive (w would take values in '
            f'i*pi/2 + i*pi*Z)!')
        super().__init__(message=message)


class NoThresholdException(RiemannHilbertException):
    """No threshold exception"""
    def __init__(self, s1: float, s2: float, x_max: float):
        message = (
            f'Positivity conditions for ({s1:.6g}, {s2:.6g}) fail up to '
            f'x = {x_max:.6g}!')
        super().__init__(message=message)
