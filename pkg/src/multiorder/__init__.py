"""Exact-arithmetic orders on multipartitions and quiver fixed-point checks."""

__version__ = "0.1.0"

from .errors import BudgetExceededError, LiteralError, NonGenericChiError
from .partitions import (
    Box,
    Multipartition,
    Partition,
    boxes,
    enumerate_multipartitions,
    enumerate_partitions,
    multipartition,
    removable_boxes,
)
from .orders import (
    FORCED_ABOVE,
    FORCED_INCOMPARABLE,
    KIND_ADJACENCY,
    KIND_GEQ,
    KIND_SANDWICH,
    KIND_TRIANGLE,
    UNDETERMINED,
    AdjacencyWitness,
    OrderMatrix,
    are_adjacent,
    as_char_vector,
    asymptotic_geq,
    asymptotic_representative,
    build_order_matrix,
    find_drop_witness,
    geq,
    geq_oracle,
    is_asymptotic,
    is_generic,
    sandwich_classify,
    shifted_contents,
    triangle,
)
from .chambers import (
    ChamberSpec,
    CounterexampleReport,
    chamber_representative,
    counterexample_search,
    default_clamp,
    enumerate_chamber_reps,
    sample_generic_chi,
)
from .ratmat import RatMatrix
from .quiver import (
    ConnectingOrbit,
    OrbitReport,
    QuiverPoint,
    WeightEntry,
    WeightTable,
    build_connecting_orbit,
    build_fixed_point,
    check_adhm,
    check_orbit,
    check_stability,
    det_section,
    section_matrix,
    torus_weights,
)

__all__ = [
    "AdjacencyWitness",
    "Box",
    "BudgetExceededError",
    "ChamberSpec",
    "ConnectingOrbit",
    "CounterexampleReport",
    "FORCED_ABOVE",
    "FORCED_INCOMPARABLE",
    "KIND_ADJACENCY",
    "KIND_GEQ",
    "KIND_SANDWICH",
    "KIND_TRIANGLE",
    "LiteralError",
    "Multipartition",
    "NonGenericChiError",
    "OrbitReport",
    "OrderMatrix",
    "Partition",
    "QuiverPoint",
    "RatMatrix",
    "UNDETERMINED",
    "WeightEntry",
    "WeightTable",
    "are_adjacent",
    "as_char_vector",
    "asymptotic_geq",
    "asymptotic_representative",
    "boxes",
    "build_connecting_orbit",
    "build_fixed_point",
    "build_order_matrix",
    "chamber_representative",
    "check_adhm",
    "check_orbit",
    "check_stability",
    "counterexample_search",
    "default_clamp",
    "det_section",
    "enumerate_chamber_reps",
    "enumerate_multipartitions",
    "enumerate_partitions",
    "find_drop_witness",
    "geq",
    "geq_oracle",
    "is_asymptotic",
    "is_generic",
    "multipartition",
    "removable_boxes",
    "sample_generic_chi",
    "sandwich_classify",
    "section_matrix",
    "shifted_contents",
    "torus_weights",
    "triangle",
]
