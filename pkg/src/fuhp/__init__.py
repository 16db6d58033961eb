"""Finite upper half plane graphs over F_q: the plane and its GL_2(F_q)
action, the commutative Hecke algebra of the spherical pair, two orthogonal
eigenfunction bases, closed-form spectra with the Ramanujan bound, and
moment/distribution statistics across prime sweeps.
"""

__version__ = "0.1.0"

from .fields import FieldCtx, FieldError, make_field_ctx
from .plane import PlaneCtx, make_plane_ctx
from .gl2chars import SphericalRep, character_value, classify, spherical_inventory
from .hecke import (char_sum_table, convolve, hecke_identity, idempotent,
                    idempotent_table, indicator, operator_matrix,
                    projector_matrix, structure_constants, t_apply)
from .eigenfunctions import (c_sum, chi_func, evans_h, fourier_coeff,
                             psi_star_eta, terras_k, verify_section7,
                             verify_theorem2, verify_theorem3, verify_theorem4)
from .spectra import (adjacency_matrix, default_a, eigenvalue_formula,
                      eigenvalue_table, eigenvalues_bruteforce,
                      eigenvalues_with_multiplicity, histogram, ks_distance,
                      moment_matrix, ramanujan_check, sato_tate_report,
                      semicircle_cdf, spectrum_report, unweighted_moments,
                      weighted_m2_target, weighted_moments)

__all__ = [
    "__version__",
    "FieldCtx", "FieldError", "make_field_ctx",
    "PlaneCtx", "make_plane_ctx",
    "SphericalRep", "character_value", "classify", "spherical_inventory",
    "char_sum_table", "convolve", "hecke_identity", "idempotent",
    "idempotent_table", "indicator", "operator_matrix", "projector_matrix",
    "structure_constants", "t_apply",
    "c_sum", "chi_func", "evans_h", "fourier_coeff", "psi_star_eta",
    "terras_k", "verify_section7", "verify_theorem2", "verify_theorem3",
    "verify_theorem4",
    "adjacency_matrix", "default_a", "eigenvalue_formula", "eigenvalue_table",
    "eigenvalues_bruteforce", "eigenvalues_with_multiplicity", "histogram",
    "ks_distance", "moment_matrix", "ramanujan_check", "sato_tate_report",
    "semicircle_cdf", "spectrum_report", "unweighted_moments",
    "weighted_m2_target", "weighted_moments",
]
