"""Laplacian spectra of semigraphs."""

__version__ = "0.1.0"

from .core import (
    Edge,
    EdgeClass,
    Kind,
    PairKind,
    ParseError,
    Semigraph,
    SemigraphError,
    ValidationError,
    VertexClass,
    classify_edge,
    classify_vertex,
    edge_census,
    edge_distance,
    emit_semigraph,
    is_connected,
    pair_kinds,
    parse_semigraph,
    skeleton,
)
from .matrix import (
    SymmetricQMatrix,
    adjacency,
    degrees,
    edge_form,
    edge_laplacian,
    laplacian,
    quadratic_form_decomposed,
    quadratic_form_direct,
    signless,
)
from .spectra import (
    CharPoly,
    ConvergenceError,
    Spectrum,
    algebraic_connectivity,
    charpoly_exact,
    eigenvalues_sym,
    is_connected_spectral,
    is_psd,
)
from .bounds import (
    BoundsError,
    BoundsReport,
    bounds_report,
    common_profile,
    degree_profile,
    diagonal_lower_bound,
    lower_bound,
    upper_bound,
)
from .families import (
    ClosedFormSpectrum,
    gen_star,
    gen_tree3,
    solve_cubic_real,
    star_spectrum_closed,
    tree3_spectrum_closed,
)
