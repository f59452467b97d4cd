"""Region exceptions

- RegionException
    - NotInRegionAException
"""


class RegionException(Exception):
    """Region exception"""
    def __init__(self, message: str):
        super().__init__()
        prefix = 'Region exception!'
        self._message = f'{prefix} {message}'

    def __str__(self):
        return self._message


class NotInRegionAException(RegionException):
    """Point is not in region (a) exception"""
    def __init__(self, s1: float, s2: float, witness: str):
        message = (
            f'Stokes parameters ({s1:.6g}, {s2:.6g}) are outside region (a): '
            f'{witness}!')
        super().__init__(message=message)
