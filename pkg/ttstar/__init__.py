"""Main init"""

from . core import *
from . algorithms import *
from . tools import (
    # results to json / csv
    SCHEMA_VERSION,
    to_json_payload,
    export_report_to_json,
    REGION_GRID_HEADER,
    TRAJECTORY_HEADER,
    THRESHOLD_HEADER,
    write_rows,
    export_rows_to_csv,
    # command line
    main,
    build_parser)
from . exceptions import (
    # validation exceptions
    ValidationException,
    UnknownMatrixNameException,
    UnsupportedCaseException,
    LatticeViolationException,
    NonIntegerParametersException,
    InvalidArgumentException,
    RayNotOnContourException,
    IdentityMismatchException,
    # region exceptions
    RegionException,
    NotInRegionAException,
    # integration exceptions
    IntegrationException,
    BlowUpException,
    StepSizeUnderflowException,
    InitialAmplitudeTooLargeException,
    PoorLogFitException,
    # fredholm exceptions
    FredholmException,
    DeterminantNearZeroException,
    GridInsufficiencyException,
    PathObstructionException,
    SmallRadiusException,
    # riemann-hilbert exceptions
    RiemannHilbertException,
    NonPositiveEigenvalueException,
    NoThresholdException,
    # wrong file extension exception
    WrongFileExtensionException,)
