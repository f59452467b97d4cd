"""Exceptions init"""

from . validation_exceptions import (
    ValidationException,
    UnknownMatrixNameException,
    UnsupportedCaseException,
    LatticeViolationException,
    NonIntegerParametersException,
    InvalidArgumentException,
    RayNotOnContourException,
    IdentityMismatchException)
from . region_exceptions import (
    RegionException,
    NotInRegionAException)
from . integration_exceptions import (
    IntegrationException,
    BlowUpException,
    StepSizeUnderflowException,
    InitialAmplitudeTooLargeException,
    PoorLogFitException)
from . fredholm_exceptions import (
    FredholmException,
    DeterminantNearZeroException,
    GridInsufficiencyException,
    PathObstructionException,
    SmallRadiusException)
from . riemann_hilbert_exceptions import (
    RiemannHilbertException,
    NonPositiveEigenvalueException,
    NoThresholdException)
from . wrong_file_extension_exception import (
    WrongFileExtensionException)
