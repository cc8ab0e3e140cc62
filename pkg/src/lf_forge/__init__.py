"""Characteristic numbers, Lefschetz-fibration gluing and Meyer signatures
for surface bundles over surfaces."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .fibrations import (  # noqa: F401
    FibrationDescriptor,
    SurfaceBundle,
    elliptic_surface,
    equivalent,
    glue_difference,
    knot_surgered_fibration,
    x_family,
)
from .invariants import CharNumbers, fiber_sum, from_chi_c1, from_e_sigma  # noqa: F401
from .meyer import (  # noqa: F401
    SympMatrix,
    TwistWord,
    meyer_tau,
    signature_from_word,
    transvection,
    word_product,
)
from .search import (  # noqa: F401
    GeographyPoint,
    ParamSolution,
    construct_bundle,
    geography_emit,
    nonzero_signature_filter,
    solve_params,
)
