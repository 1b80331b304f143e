"""Distance invariants of fullerene graphs.

Wiener index, Wiener complexity, diameter and pentagon statistics for
fullerene graphs read from planar-code files, plus closed forms for the
nanotubical families that maximise the Wiener index.
"""

from fullwiener.graph import (
    FaceSet,
    FullereneGraph,
    GraphError,
    ValidationReport,
    trace_faces,
    validate_fullerene,
)
from fullwiener.metrics import (
    GraphReport,
    bfs_distances,
    diameter,
    report,
    transmission,
    transmissions,
    wiener_complexity,
    wiener_index,
)
from fullwiener.pentagons import PentagonStats, pentagon_adjacency, pentagon_stats
from fullwiener.families import (
    FamilyKind,
    best_family,
    classify_order,
    complexity_formula,
    construct_type_a,
    diameter_formula,
    family_table,
    wiener_formula,
)

__version__ = "0.1.0"

__all__ = [
    "FaceSet",
    "FamilyKind",
    "FullereneGraph",
    "GraphError",
    "GraphReport",
    "PentagonStats",
    "ValidationReport",
    "best_family",
    "bfs_distances",
    "classify_order",
    "complexity_formula",
    "construct_type_a",
    "diameter",
    "diameter_formula",
    "family_table",
    "pentagon_adjacency",
    "pentagon_stats",
    "report",
    "trace_faces",
    "transmission",
    "transmissions",
    "validate_fullerene",
    "wiener_complexity",
    "wiener_formula",
    "wiener_index",
]
