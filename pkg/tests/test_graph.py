import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cubicdeficit.block import Block, Group
from cubicdeficit.codecs import block_decode, block_encode, graph6_decode, graph6_encode
from cubicdeficit.constructions import block_b, k4, petersen
from cubicdeficit.errors import (
    CapExceeded,
    DuplicateSlotTag,
    GroupArityMismatch,
    HasDangles,
    InvalidGraph,
    Malformed6,
    NotCubic,
    ParallelEdge,
    ParseError,
)
from cubicdeficit.graph import (
    Cycle,
    build_graph,
    bridges,
    enumerate_cycles,
    is_bridgeless,
    join_dangles,
    split_edge,
)

from oracles import cycle_count_by_cycle_space


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def random_cubic(n, seed):
    g = nx.random_regular_graph(3, n, seed=seed)
    return build_graph(n, g.edges())


cubic_graphs = st.builds(
    random_cubic, st.sampled_from([4, 6, 8, 10, 12]), st.integers(0, 10**6)
)


def test_build_k4():
    g = build_graph(4, itertools.combinations(range(4), 2))
    assert g.n == 4 and len(g.edges) == 6
    assert all(g.degree(v) == 3 for v in range(4))


def test_build_dumbbell_with_dangles():
    g = build_graph(2, [(0, 1)], [(0, "a"), (0, "b"), (1, "c"), (1, "d")])
    assert g.degree(0) == g.degree(1) == 3
    assert g.tags == {"a": 0, "b": 0, "c": 1, "d": 1}


def test_build_rejects_low_degree():
    with pytest.raises(NotCubic):
        build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


@pytest.mark.parametrize(
    "n, edges, dangles, exc",
    [
        (2, [(0, 1), (1, 0)], [(0, "a"), (0, "b"), (1, "c"), (1, "d")], ParallelEdge),
        (2, [(0, 1)], [(0, "a"), (0, "a"), (1, "c"), (1, "d")], DuplicateSlotTag),
        (2, [(0, 0)], [], InvalidGraph),
        (2, [(0, 2)], [], InvalidGraph),
    ],
)
def test_build_errors(n, edges, dangles, exc):
    with pytest.raises(exc):
        build_graph(n, edges, dangles)


def test_graph6_k4():
    g = graph6_decode("C~")
    assert g.n == 4 and len(g.edges) == 6
    assert graph6_encode(g) == "C~"


def test_graph6_petersen_matches_reference_writer():
    ref = nx.to_graph6_bytes(nx_graph(petersen()), header=False)
    s = ref.decode().strip()
    assert graph6_encode(graph6_decode(s)) == s
    assert graph6_encode(petersen()) == s
    assert graph6_decode(s).edges == petersen().edges


def test_graph6_long_form():
    n = 70
    g = nx.circulant_graph(n, [1, n // 2])
    ours = graph6_encode(build_graph(n, g.edges()))
    ref = nx.to_graph6_bytes(g, header=False).decode().strip()
    assert ours == ref and ours.startswith("~")
    assert graph6_decode(ours).edge_set == build_graph(n, g.edges()).edge_set


def test_graph6_header_accepted():
    assert graph6_decode(">>graph6<<C~\n").n == 4


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f"])
def test_graph6_malformed(bad):
    with pytest.raises(Malformed6):
        graph6_decode(bad)


def test_graph6_rejects_graphs_with_dangles():
    g = split_edge(graph6_decode("C~"), 0, 1, "a", "b")
    with pytest.raises(HasDangles):
        graph6_encode(g)


@given(cubic_graphs)
@settings(max_examples=30, deadline=None)
def test_graph6_round_trip(g):
    s = graph6_encode(g)
    assert graph6_decode(s).edge_set == g.edge_set
    assert s == nx.to_graph6_bytes(nx_graph(g), header=False).decode().strip()


def test_block_round_trip_block_b():
    b = block_b()
    text = block_encode(b)
    again = block_decode(text)
    assert again == b
    assert block_encode(again) == text


def test_block_format_layout():
    text = block_encode(block_b())
    lines = text.splitlines()
    assert lines[0] == "block B" and lines[1] == "vertices 8"
    assert sum(1 for ln in lines if ln.startswith("edge ")) == 10
    assert lines[-4:] == [
        "dangle 2 in pair in 0",
        "dangle 3 in pair in 1",
        "dangle 0 out pair out 0",
        "dangle 4 out pair out 1",
    ]


def test_block_decode_ignores_comments_and_blank_lines():
    text = "# header\n\n" + block_encode(block_b()).replace("vertices 8", "vertices 8\n# note")
    assert block_decode(text) == block_b()


def test_block_group_arity_mismatch():
    text = (
        "block bad\nvertices 2\nedge 0 1\n"
        "dangle 0 in pair in 0\ndangle 0 in pair in 1\ndangle 1 in pair in 2\n"
        "dangle 1 x single spine 0\n"
    )
    with pytest.raises(GroupArityMismatch):
        block_decode(text)


def test_block_parse_error_has_line_number():
    with pytest.raises(ParseError) as info:
        block_decode("block x\nvertices 2\nedge 0 one\n")
    assert info.value.line == 3


def test_block_parse_rejects_unsorted_edge():
    with pytest.raises(ParseError):
        block_decode("block x\nvertices 2\nedge 1 0\n")


def test_block_validation_errors_pass_through():
    with pytest.raises(NotCubic):
        block_decode("block x\nvertices 2\nedge 0 1\ndangle 0 a pair in 0\ndangle 1 a pair in 1\n")


def test_n2_shaped_block_accepted():
    # two pairs of dangles on a 26-vertex cubic fragment: 26*3 = 2*37 + 4
    g = nx.circulant_graph(26, [1, 13])
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    for e in [(0, 1), (13, 14)]:
        edges.remove(e)
    lines = ["block N2like", "vertices 26"] + [f"edge {u} {v}" for u, v in edges]
    lines += ["dangle 0 a pair in 0", "dangle 1 a pair in 1", "dangle 13 b pair out 0", "dangle 14 b pair out 1"]
    blk = block_decode("\n".join(lines) + "\n")
    assert blk.order == 26 and len(blk.graph.edges) == 37
    assert [grp.arity for grp in blk.groups] == ["pair", "pair"]


def test_block_requires_every_dangle_grouped():
    g = build_graph(2, [(0, 1)], [(0, "a"), (0, "b"), (1, "c"), (1, "d")])
    with pytest.raises(Exception):
        Block("x", g, (Group("g", "pair", "in", ("a", "b")),))


def test_is_bridgeless_examples():
    assert is_bridgeless(k4())
    assert is_bridgeless(petersen())
    # K4 with one edge subdivided, twice, joined through the subdivision vertices
    half = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3), (3, 4)]
    edges = half + [(u + 5, v + 5) for u, v in half] + [(4, 9)]
    g = build_graph(10, edges)
    assert not is_bridgeless(g)
    assert bridges(g) == [(4, 9)]


def test_is_bridgeless_agrees_with_networkx():
    for seed in range(20):
        g = random_cubic(12, seed)
        ng = nx_graph(g)
        assert is_bridgeless(g) == (nx.is_connected(ng) and not nx.has_bridges(ng))


def test_is_bridgeless_requires_closed_graph():
    with pytest.raises(HasDangles):
        is_bridgeless(block_b().graph)


def test_enumerate_cycles_k4():
    cycles = enumerate_cycles(k4())
    assert len(cycles) == 7
    assert sorted(len(c) for c in cycles) == [3, 3, 3, 3, 4, 4, 4]


def test_enumerate_cycles_petersen():
    cycles = enumerate_cycles(petersen())
    by_len = {}
    for c in cycles:
        by_len[len(c)] = by_len.get(len(c), 0) + 1
    assert by_len == cycle_count_by_cycle_space(petersen())
    assert 10 not in by_len
    assert len(cycles) == 57


def test_enumerate_cycles_cap():
    with pytest.raises(CapExceeded) as info:
        enumerate_cycles(k4(), cap=1)
    assert len(info.value.partial) == 1


@given(cubic_graphs)
@settings(max_examples=25, deadline=None)
def test_cycles_are_valid_canonical_and_complete(g):
    cycles = enumerate_cycles(g)
    assert len(set(cycles)) == len(cycles)
    for c in cycles:
        assert c.is_valid_in(g)
        assert c.canonical() == c
    counts = {}
    for c in cycles:
        counts[len(c)] = counts.get(len(c), 0) + 1
    assert counts == cycle_count_by_cycle_space(g)


def test_cycle_canonical_rotation():
    assert Cycle((3, 1, 0, 2)).canonical().vertices == (0, 1, 3, 2)
    with pytest.raises(InvalidGraph):
        Cycle((1, 2, 1))


def test_join_dangles_closes_graph():
    g = split_edge(k4(), 0, 1, "a", "b")
    assert len(g.dangles) == 2
    assert join_dangles(g, "a", "b").edge_set == k4().edge_set
