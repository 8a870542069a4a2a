"""Construction and exact verification of cubic graphs with large circumference deficit."""

from .block import Block, CopyPartition, Group
from .circumference import Budget, Claim, SearchResult, circumference_report, longest_cycle
from .codecs import block_decode, block_encode, graph6_decode, graph6_encode
from .constructions import (
    RingSpec,
    block_b,
    double_h,
    excise_adjacent_pair,
    join_h,
    petersen,
    register_external_block,
    ring_of_blocks,
    ring_with_spine,
    theorem3_graph,
)
from .graph import Cycle, CubicGraph, Dangle, EdgeColoring, build_graph, enumerate_cycles, is_bridgeless
from .verifiers import (
    bad_vertex_decomposition,
    cyclic_edge_connectivity,
    girth,
    lemma1_check,
    resistance,
    three_edge_color,
)

__version__ = "0.1.0"
