"""Meandric permutations, Gauss diagrams, and GF(2) criteria."""

from .errors import OrderCapError, ValidationError
from .gaussdiag import (
    ChordDiagram,
    InterlacementGraph,
    diagram_of_permutation,
    interlacement,
    is_realizable,
    make_chord_diagram,
    meandric_graph_of,
)
from .gf2mat import Gf2Matrix
from .meander import (
    DivergenceReport,
    arc_system_of,
    compare_criterion_oracle,
    count_meanders,
    criterion_is_meandric,
    enumerate_meanders,
    graph_is_meandric,
    neighbor_parity_ok,
    oracle_is_meandric,
)
from .construct import algorithm1_generate
from .permcore import PairSet, Permutation, make_permutation

__all__ = [
    "ChordDiagram",
    "DivergenceReport",
    "Gf2Matrix",
    "InterlacementGraph",
    "OrderCapError",
    "PairSet",
    "Permutation",
    "ValidationError",
    "algorithm1_generate",
    "arc_system_of",
    "compare_criterion_oracle",
    "count_meanders",
    "criterion_is_meandric",
    "diagram_of_permutation",
    "enumerate_meanders",
    "graph_is_meandric",
    "interlacement",
    "is_realizable",
    "make_chord_diagram",
    "make_permutation",
    "meandric_graph_of",
    "neighbor_parity_ok",
    "oracle_is_meandric",
]
