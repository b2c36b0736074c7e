"""Gap k-planarity workbench.

Multigraphs with per-edge multiplicities, combinatorial drawings with
verifiable crossing counts, a 3-partition-to-gadget compiler with witness
drawings, an exact brute-force crossing oracle, the crossing-tradeoff graph
family, and exact rational bound calculators.
"""

from .bounds import crossing_lemma_lb, r_product_ratio, r_upper
from .drawing import (
    CrossingReport,
    Drawing,
    DrawingFormatError,
    empty_drawing,
    is_kplanar_drawing,
    is_planar,
    is_planar_bruteforce,
    planarize,
    remove_crossing,
    verify,
)
from .family import FamilyGraph, build_family, drawing_d1, drawing_d2, tradeoff_product
from .mgraph import (
    EdgeCopy,
    Multigraph,
    SubdivisionMap,
    collapse,
    new_multigraph,
    simplify,
    subdivide,
    total_edge_copies,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    OracleBudget,
    cr_exact,
    decide_kplanar,
    lcr_exact,
)
from .reduction import ReductionGraph, compile_reduction, witness_drawing
from .tpart import (
    Partition,
    ThreePartitionInstance,
    ValidationResult,
    generate,
    solve,
    validate,
)

__all__ = [
    "BudgetExhausted",
    "CrossingReport",
    "DEFAULT_BUDGET",
    "Drawing",
    "DrawingFormatError",
    "EdgeCopy",
    "FamilyGraph",
    "Multigraph",
    "OracleBudget",
    "Partition",
    "ReductionGraph",
    "SubdivisionMap",
    "ThreePartitionInstance",
    "ValidationResult",
    "build_family",
    "collapse",
    "compile_reduction",
    "cr_exact",
    "crossing_lemma_lb",
    "decide_kplanar",
    "drawing_d1",
    "drawing_d2",
    "empty_drawing",
    "generate",
    "is_kplanar_drawing",
    "is_planar",
    "is_planar_bruteforce",
    "lcr_exact",
    "new_multigraph",
    "planarize",
    "r_product_ratio",
    "r_upper",
    "remove_crossing",
    "simplify",
    "solve",
    "subdivide",
    "total_edge_copies",
    "tradeoff_product",
    "validate",
    "verify",
    "witness_drawing",
]
