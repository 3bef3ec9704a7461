"""rakit: shift-and-invert rational Arnoldi refinement solvers for
ill-conditioned dense linear systems, with the classical iterated-refinement
and Tikhonov-regularized variants, standard Fredholm test problems, baseline
Krylov solvers, and the supporting shift-selection / error-bound theory."""

from .analysis import (
    AprioriBound,
    IntervalMap,
    LambdaHeuristic,
    aposteriori_exact_error,
    aposteriori_relative_bound,
    apriori_bound,
    cond_bound_spd,
    convergence_factor,
    estimate_condition,
    interval_map,
    lambda_heuristic,
    lambda_star,
    rhat,
)
from .backend import backend_name
from .baselines import cg_solve, cgls_solve, gmres_solve
from .errors import (
    DegenerateDenominatorError,
    IndefiniteMatrixError,
    MatrixMarketError,
    NotSPDError,
    RakitError,
    SingularFunctionError,
    SingularMatrixError,
)
from .krylov import ArnoldiDecomposition, MatrixOperator, arnoldi_extend, arnoldi_start
from .linalg import (
    Factorization,
    SpectralEstimate,
    cholesky_factor,
    extreme_eigs_spd,
    hessenberg_det,
    is_symmetric,
    lu_factor,
    norm2,
    solve_factored,
)
from .problems import (
    NoiseSpec,
    TestProblem,
    add_noise,
    franke_function,
    generate_franke_rbf,
    generate_fredholm,
    load_matrix_market,
    read_matrix_market,
    write_matrix_market,
)
from .solvers import (
    IterationRecord,
    RatOperator,
    ShiftInvertOperator,
    SolveReport,
    eval_f_small,
    ra_solve,
    rat_solve,
    riley_solve,
    second_difference_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AprioriBound",
    "ArnoldiDecomposition",
    "DegenerateDenominatorError",
    "Factorization",
    "IndefiniteMatrixError",
    "IntervalMap",
    "IterationRecord",
    "LambdaHeuristic",
    "MatrixMarketError",
    "MatrixOperator",
    "NoiseSpec",
    "NotSPDError",
    "RakitError",
    "RatOperator",
    "ShiftInvertOperator",
    "SingularFunctionError",
    "SingularMatrixError",
    "SolveReport",
    "SpectralEstimate",
    "TestProblem",
    "add_noise",
    "aposteriori_exact_error",
    "aposteriori_relative_bound",
    "apriori_bound",
    "arnoldi_extend",
    "arnoldi_start",
    "backend_name",
    "cg_solve",
    "cgls_solve",
    "cholesky_factor",
    "cond_bound_spd",
    "convergence_factor",
    "estimate_condition",
    "eval_f_small",
    "extreme_eigs_spd",
    "franke_function",
    "generate_franke_rbf",
    "generate_fredholm",
    "gmres_solve",
    "hessenberg_det",
    "interval_map",
    "is_symmetric",
    "lambda_heuristic",
    "lambda_star",
    "load_matrix_market",
    "lu_factor",
    "norm2",
    "ra_solve",
    "rat_solve",
    "read_matrix_market",
    "rhat",
    "riley_solve",
    "second_difference_matrix",
    "solve_factored",
    "write_matrix_market",
]
