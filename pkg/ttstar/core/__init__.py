"""Core init"""

from . lattice import (
    ComplexMatrix, Numerator, SectorIndex,
    to_numerator, to_index)
from . cases import CaseId, CaseProfile, PROFILES
from . params import StokesParams, AsymptoticData
from . reports import IdentityCheck, IdentityReport, IDENTITY_TOL
from . constants import (
    MATRIX_NAMES,
    const_matrix, base_shift, root_of_unity,
    verify_identities)
from . polynomials import (
    PalindromicPoly,
    cyclotomic, cyclotomic_factorization,
    expand_factorization, format_factorization,
    discriminant)
from . stokes import (
    q_matrix, q_zero_matrix, tilde_q_matrix,
    stokes_matrix, second_stokes_matrix,
    generator, monodromy, monodromy_eigenvalues, char_poly_roots,
    char_poly, closed_form_coefficients, numeric_coefficients,
    verify_tilde_symmetries, stokes_determinant_identity)
from . connection import (
    connection_matrix, tilde_connection_matrix,
    verify_connection_symmetries,
    circle_jump, verify_circle_jumps)
