"""Wrong file extension exception

- WrongFileExtensionException
"""


class WrongFileExtensionException(Exception):
    """Wrong file extension exception"""
    def __init__(self, received: str, required: str | list[str]):
        super().__init__()

        if isinstance(required, str):
            required = [required]

        plural = '' if len(required) == 1 else 's'
        allowed = ' or '.join(f'.{extension}' for extension in required)

        self._message = (
            f'Results can not be written to a .{received} file! Supported '
            f'extension{plural}: {allowed}!')

    def __str__(self):
        return self._message
