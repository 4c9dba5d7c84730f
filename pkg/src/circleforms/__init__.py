"""Root localization for polynomials via Hermitian forms and their inertia.

Counts roots of a polynomial relative to the unit circle (inside / on /
outside, with multiplicity) or the real line and half-planes, and decides
interlacing of root sets, all through the signatures of small Hermitian
matrices built from the coefficients.  Works in float or exact
Gaussian-rational arithmetic.
"""
from .circle import CircleCount, CountMethod, Exactness, count_circle, gcd_chain, \
    theorem3_count
from .errors import CircleformsError, DomainError, InconsistencyError, NumericError, \
    ParseError, UnsupportedModeError
from .forms import FormKind, HermitianForm, coefficient_transform, gram_form, \
    krein_form, pair_form, power_sum_form, schur_cohn_form, substitute
from .inertia import Definiteness, Inertia, definiteness, inertia
from .interlacing import InterlaceVerdict, Sign, derivative_interlace, interlace_test, \
    mapping_form_identity, pencil_trace
from .oracle import RootSet, classify_circle, classify_line, find_roots, \
    oracle_interlace, oracle_interlace_line
from .poly import Poly, SymmetryClass, SymmetryKind, adjoint, classify_symmetry, \
    delta, mobius_to_real, power_sums, symmetrize
from .realline import LineCount, LineMethod, bezout_k_form, count_halfplane, \
    count_real_line, derivative_interlace_real, half_plane_form, \
    hankel_borchardt_form, hermite_k1_form, hurwitz_pair_form, real_interlace_test

__version__ = "0.1.0"

__all__ = [
    "CircleCount", "CountMethod", "Exactness", "count_circle", "gcd_chain",
    "theorem3_count",
    "CircleformsError", "DomainError", "InconsistencyError", "NumericError",
    "ParseError", "UnsupportedModeError",
    "FormKind", "HermitianForm", "coefficient_transform", "gram_form",
    "krein_form", "pair_form", "power_sum_form", "schur_cohn_form", "substitute",
    "Definiteness", "Inertia", "definiteness", "inertia",
    "InterlaceVerdict", "Sign", "derivative_interlace", "interlace_test",
    "mapping_form_identity", "pencil_trace",
    "RootSet", "classify_circle", "classify_line", "find_roots",
    "oracle_interlace", "oracle_interlace_line",
    "Poly", "SymmetryClass", "SymmetryKind", "adjoint", "classify_symmetry",
    "delta", "mobius_to_real", "power_sums", "symmetrize",
    "LineCount", "LineMethod", "bezout_k_form", "count_halfplane",
    "count_real_line", "derivative_interlace_real", "half_plane_form",
    "hankel_borchardt_form", "hermite_k1_form", "hurwitz_pair_form",
    "real_interlace_test",
]
