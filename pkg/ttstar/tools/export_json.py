"""Functions for export results to JSON"""

import json
from enum import Enum
import numpy as np
from ttstar.exceptions.wrong_file_extension_exception import (
    WrongFileExtensionException)


SCHEMA_VERSION = 'v1'


def _convert_for_json(value):
    if hasattr(value, 'describe'):
        return _convert_for_json(value.describe())
    if isinstance(value, dict):
        return {str(key): _convert_for_json(item) for key, item in value.items()}
    if isinstance(value, np.ndarray):
        return [_convert_for_json(item) for item in value.tolist()]
    if isinstance(value, (list, tuple, set)):
        return [_convert_for_json(item) for item in value]
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, Enum):
        return value.value
    return value


def to_json_payload(data) -> dict:
    """Converts result to a JSON-ready dict with the schema field

    Objects with `describe()` are replaced by their description, complex
    numbers become [re, im], numpy arrays and tuples become lists.
    """
    payload = _convert_for_json(data)
    if not isinstance(payload, dict):
        payload = {'result': payload}
    return {'schema': SCHEMA_VERSION, **payload}


def export_report_to_json(data, file_path: str) -> None:
    """Export result to JSON

    Parameters
    ----------
    data
        Report, dataclass with `describe()` or dict
    file_path
        Path to JSON file
    """

    file_extension = file_path.split('.')[-1]
    if file_extension != 'json':
        raise WrongFileExtensionException(received=file_extension, required='json')

    with open(file_path, 'w', encoding='utf-8') as file:
        json.dump(to_json_payload(data), file, indent=2)
