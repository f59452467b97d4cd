"""Functions for export tables to CSV"""

import csv
from typing import Iterable, TextIO
from ttstar.exceptions.validation_exceptions import InvalidArgumentException
from ttstar.exceptions.wrong_file_extension_exception import (
    WrongFileExtensionException)


REGION_GRID_HEADER = ('s1', 's2', 'in_a', 'in_b')
TRAJECTORY_HEADER = ('x', 'w0', 'w1', 'dw0', 'dw1')
THRESHOLD_HEADER = ('s1', 's2', 'x_threshold')


def _convert_cell(value):
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    return value


def write_rows(rows: Iterable[tuple], header: tuple[str, ...], stream: TextIO) -> None:
    """Writes header and rows to an open text stream"""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        if len(row) != len(header):
            raise InvalidArgumentException(
                name='row', requirement=f'{len(header)} values per row are required')
        writer.writerow([_convert_cell(value) for value in row])


def export_rows_to_csv(rows: Iterable[tuple], header: tuple[str, ...], file_path: str) -> None:
    """Export table rows to CSV, booleans as true/false, floats at full precision

    Parameters
    ----------
    rows
        Tuples of the same length as the header
    header
        Column names, e.g. REGION_GRID_HEADER
    file_path
        Path to CSV file
    """

    file_extension = file_path.split('.')[-1]
    if file_extension != 'csv':
        raise WrongFileExtensionException(received=file_extension, required='csv')

    with open(file_path, 'w', encoding='utf-8', newline='') as file:
        write_rows(rows, header, file)
