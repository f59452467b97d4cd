"""Integration exceptions

- IntegrationException
    - BlowUpException
    - StepSizeUnderflowException
    - InitialAmplitudeTooLargeException
    - PoorLogFitException
"""


class IntegrationException(Exception):
    """Integration exception"""
    def __init__(self, message: str):
        super().__init__()
        prefix = 'Integration exception!'
        self._message = f'{prefix} {message}'

    def __str__(self):
        return self._message


class BlowUpException(IntegrationException):
    """Blow up exception"""
    def __init__(self, x: float):
        self.x = x
        message = f'Solution blows up near x = {x:.6g}!'
        super().__init__(message=message)


class StepSizeUnderflowException(IntegrationException):
    """Step size underflow exception"""
    def __init__(self, x: float, reason: str):
        self.x = x
        message = f'Integrator stopped at x = {x:.6g}: {reason}!'
        super().__init__(message=message)


class InitialAmplitudeTooLargeException(IntegrationException):
    """Initial amplitude too large exception"""
    def __init__(self, x_start: float, amplitude: float, limit: float):
        message = (
            f'Asymptotic amplitude {amplitude:.3g} at x_start = {x_start:.6g} '
            f'exceeds {limit:.1g}: start the integration further out!')
        super().__init__(message=message)


class PoorLogFitException(IntegrationException):
    """Poor logarithmic fit exception"""
    def __init__(self, residual: float, limit: float):
        message = (
            f'Logarithmic fit residual {residual:.3g} exceeds {limit:.1g}: '
            f'solution is not in the logarithmic regime!')
        super().__init__(message=message)
