"""Normalized Hessenberg determinants of binomial coefficients.

Builds the binomial matrices whose determinants count lattice paths under
upper/lower step-height boundaries, evaluates them with three exact
engines, and checks them against Catalan, Fuss-Catalan and Bizley closed
forms and against brute-force path counts.
"""
from .boundaries import (
    BoundaryError,
    BoundaryPair,
    custom_boundary,
    fuss_boundary,
    rational_boundary,
)
from .closed_forms import (
    NonIntegerResult,
    PartitionMultiset,
    bizley_count,
    bizley_phi,
    catalan,
    enumerate_partitions,
    fuss_catalan,
)
from .engines import (
    DetAll,
    DetReport,
    Engine,
    NotHessenbergError,
    ZeroPivot,
    det_all,
    det_elimination,
    det_fraction_free,
    det_recurrence,
    determinant,
)
from .exact import (
    Integer,
    Rational,
    binomial,
    factorial,
    format_integer,
    format_rational,
    parse_integer,
    parse_rational,
)
from .hessenberg import BinomialHessenberg, build_path_matrix, is_normalized_hessenberg
from .paths import PathCount, PathModel, count_below_line, count_boundary_paths
from .sequences import (
    BFile,
    Comparison,
    CostGuard,
    EmptyOverlap,
    MalformedLine,
    NonContiguousIndex,
    Route,
    SequenceSpec,
    compare,
    generate,
    parse_bfile,
    render_bfile,
)

__version__ = "0.1.0"
