"""Exact Waring decompositions and apolar rank bounds for elementary symmetric polynomials."""

from .apolar import (
    BoundsReport,
    bounds,
    catalecticant,
    disjointness_matrix,
    hilbert_function,
    lower_bound,
    perp_member,
    row_aggregation,
    squarefree_refine,
)
from .decomp import (
    Decomposition,
    SignedLinearForm,
    VerificationReport,
    decompose_even,
    decompose_monomial,
    decompose_odd,
    upper_bound,
    verify,
)
from .kernels import BACKEND
from .linalg import ExactMatrix, exact_rank, rank_mod_p
from .poly import (
    DomainError,
    Polynomial,
    apply_diff,
    elementary_symmetric,
    expand_linear_power,
    poly_add,
    poly_eval,
    poly_scale,
    poly_sub,
)
from .witness import (
    SignPointSet,
    identity_check,
    power_span_matrix,
    proposition_search,
    span_membership,
)

__version__ = "0.1.0"
