"""Tools init"""

from . export_json import SCHEMA_VERSION, to_json_payload, export_report_to_json
from . export_csv import (
    REGION_GRID_HEADER, TRAJECTORY_HEADER, THRESHOLD_HEADER,
    write_rows, export_rows_to_csv)
from . cli import main, build_parser
