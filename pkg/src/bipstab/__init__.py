"""Independence polynomials of complete bipartite graphs: roots, Hurwitz
stability, and the stability/instability thresholds of the K_{m,m+k} and
K_{m, l*m} families."""

from .balanced import (
    BalancedThreshold,
    PkPolynomial,
    ck,
    delta_k,
    minimize_on_interval,
    pk_polynomial,
    threshold_Nk,
)
from .contour import (
    BETA,
    GAMMA,
    ContourSpec,
    MarginReport,
    RouchePair,
    builtin_scenarios,
    rouche_margin,
    winding_zero_count,
)
from .cpoly import DensePolynomial, evaluate, evaluate_trinomial
from .errors import (
    BipstabError,
    ContourError,
    ConvergenceError,
    EvaluationError,
    InvalidInputError,
    RefinementDepthError,
    SizeLimitError,
    ZeroOnContourError,
)
from .graphs import (
    IntPolynomial,
    SimpleGraph,
    TrinomialSpec,
    independence_polynomial_bipartite,
    independence_polynomial_bruteforce,
    load_edge_list,
    phi_trinomial,
)
from .ratio import (
    DominantRoot,
    Ratio,
    RatioThreshold,
    closed_form_max_re,
    delta_s_theta,
    dominant_root,
    instability_witness,
    make_ratio,
    threshold_Nell,
    witness_scan,
)
from .roots import (
    ReducedForm,
    RootSet,
    SolverConfig,
    all_roots_dense,
    reduce_trinomial,
    shift_roots_to_x,
    trinomial_roots,
)
from .stability import (
    StabilityReport,
    classify_bipartite,
    classify_rootset,
    stability_grid,
)

__version__ = "0.1.0"
