"""capbound: eigenvalue and polynomial-rank bounds for capacities of graph powers.

The package pinches the Shannon capacity of a graph power G^k between an
exact independent-set lower bound and two families of spectral upper
bounds — trace (ratio-type) bounds from degree-capped polynomials, and rank
bounds from fitting polynomials — with optional cross-checks against an
external SDP solver's theta values.
"""

from .errors import (
    ArgumentError,
    CapboundError,
    FormatError,
    Graph6Error,
    InapplicableError,
    InfeasibleParametersError,
    NumericalError,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    catalog,
    cocktail_party,
    complement,
    complete,
    cycle,
    diameter,
    distances,
    emit_graph6,
    hypercube,
    is_connected,
    kneser,
    parse_graph6,
    petersen,
    power,
    strong_product,
)
from .oracle import (
    DEFAULT_BUDGET,
    CapacityLower,
    MisResult,
    Verdict,
    alpha_k,
    capacity_lower_bound,
    max_independent_set,
    sandwich_verdict,
)
from .polynomials import (
    Poly,
    dd_constraint_rows,
    divided_difference,
    eval_on_matrix,
    eval_on_spectrum,
    explicit_minor,
    interpolate,
    minor_zero_indices,
    newton_coefficients,
    poly_from_csv,
    poly_to_csv,
    trace_on_spectrum,
)
from .rank_bounds import (
    FitCheck,
    ShannonSolution,
    fit_check,
    haemers_rank,
    numeric_rank,
    rank_type_bound,
    shannon_exhaustive,
    shannon_greedy,
)
from .ratio_bounds import (
    MinorSolution,
    closed_form_H,
    cycle_theta,
    minor_lp,
    ratio_type_bound,
    ratio_type_general,
    theta_eigen_bound,
)
from .reports import BoundReport
from .spectra import (
    AntipodalPower,
    Spectrum,
    SrgParams,
    antipodal_power_spectrum,
    cluster,
    eigensolve,
    first_walk_defect,
    is_k_partially_walk_regular,
    spectrum_from_csv,
    spectrum_of,
    spectrum_to_csv,
    srg_parameters,
    srg_spectrum,
    triangles_per_vertex,
)
from .theta_sdp import ThetaSolution, cage_check, export_sdpa, import_solution

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "CapboundError",
    "FormatError",
    "Graph6Error",
    "InapplicableError",
    "InfeasibleParametersError",
    "NumericalError",
    "DistanceMatrix",
    "Graph",
    "catalog",
    "cocktail_party",
    "complement",
    "complete",
    "cycle",
    "diameter",
    "distances",
    "emit_graph6",
    "hypercube",
    "is_connected",
    "kneser",
    "parse_graph6",
    "petersen",
    "power",
    "strong_product",
    "DEFAULT_BUDGET",
    "CapacityLower",
    "MisResult",
    "Verdict",
    "alpha_k",
    "capacity_lower_bound",
    "max_independent_set",
    "sandwich_verdict",
    "Poly",
    "dd_constraint_rows",
    "divided_difference",
    "eval_on_matrix",
    "eval_on_spectrum",
    "explicit_minor",
    "interpolate",
    "minor_zero_indices",
    "newton_coefficients",
    "poly_from_csv",
    "poly_to_csv",
    "trace_on_spectrum",
    "FitCheck",
    "ShannonSolution",
    "fit_check",
    "haemers_rank",
    "numeric_rank",
    "rank_type_bound",
    "shannon_exhaustive",
    "shannon_greedy",
    "MinorSolution",
    "closed_form_H",
    "cycle_theta",
    "minor_lp",
    "ratio_type_bound",
    "ratio_type_general",
    "theta_eigen_bound",
    "BoundReport",
    "AntipodalPower",
    "Spectrum",
    "SrgParams",
    "antipodal_power_spectrum",
    "cluster",
    "eigensolve",
    "first_walk_defect",
    "is_k_partially_walk_regular",
    "spectrum_from_csv",
    "spectrum_of",
    "spectrum_to_csv",
    "srg_parameters",
    "srg_spectrum",
    "triangles_per_vertex",
    "ThetaSolution",
    "cage_check",
    "export_sdpa",
    "import_solution",
    "__version__",
]
