"""Ground-truth spectra: exact integer multiplicities, numeric eigenvalues, cluster checks."""

from .bareiss import bareiss_rank
from .clusters import (
    Cluster,
    FactorizationCheck,
    PredictedRoot,
    find_clusters,
    overlay_cluster_graphs,
    verify_cluster_factorization,
)
from .jacobi import jacobi_eigenvalues
from .spectrum import (
    DEFAULT_TOL,
    INTEGER_MATCH_TOL,
    ExactReport,
    LaplacianMatrix,
    default_tol,
    exact_report,
    format_multiplicities,
    format_spectrum,
    integer_counts,
    integer_multiplicity,
    laplacian,
    numeric_spectrum,
    numeric_spectrum_with_residual,
)

__all__ = [
    "Cluster",
    "DEFAULT_TOL",
    "ExactReport",
    "FactorizationCheck",
    "INTEGER_MATCH_TOL",
    "LaplacianMatrix",
    "PredictedRoot",
    "bareiss_rank",
    "default_tol",
    "exact_report",
    "find_clusters",
    "format_multiplicities",
    "format_spectrum",
    "integer_counts",
    "integer_multiplicity",
    "jacobi_eigenvalues",
    "laplacian",
    "numeric_spectrum",
    "numeric_spectrum_with_residual",
    "overlay_cluster_graphs",
    "verify_cluster_factorization",
]
