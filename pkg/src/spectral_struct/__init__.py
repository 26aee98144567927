"""Integer Laplacian eigenvalues from graph structure, checked against exact and numeric spectra."""

from .chordal import (
    ChordalResult,
    CliqueStructure,
    Separator,
    boundary_cliques,
    minimal_vertex_separators,
    recognize_chordal,
)
from .errors import ConvergenceError, HypothesisError, ParseError
from .generators import (
    expand_true_twins,
    fixture,
    gen_block_graph,
    gen_chordal,
    gen_strictly_chordal,
)
from .graph import Graph, degree, is_connected, parse_edge_list, read_edge_list, to_edge_list
from .strictly import (
    BoundaryFamily,
    boundary_eigenvalues,
    boundary_families,
    non_boundary_simplicial_eigenvalues,
    recognize_strictly_chordal,
    run_pipeline,
    separator_eigenvalues,
    structural_pipeline,
    uniquely_provided_count,
)
from .structural import Entry, Provenance, StructuralSpectrum
from .twins import TwinPartition, twin_eigenvalues, twin_partition

__version__ = "0.1.0"
