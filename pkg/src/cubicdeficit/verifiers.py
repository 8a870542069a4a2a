"""Exact decision procedures: 3-edge-coloring, resistance, girth, cyclic
edge-connectivity, and the resistance/cycle-miss property of composed graphs."""

from __future__ import annotations

import itertools
import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .block import CopyPartition
from .errors import Acyclic, CapExceeded, Disconnected, NotBridgeless
from .graph import (
    Cycle,
    CubicGraph,
    Edge,
    EdgeColoring,
    Item,
    build_graph,
    components,
    induced_subgraph,
    is_bridgeless,
    is_connected,
    iter_cycles,
)

# ---------------------------------------------------------------------------
# 3-edge-coloring
# ---------------------------------------------------------------------------


def _item_ends(graph: CubicGraph, items: Sequence[Item]) -> list[tuple[int, ...]]:
    return [graph.endpoints(i) for i in items]


def _locality_order(n: int, ends: list[tuple[int, ...]]) -> list[int]:
    """Item indices in breadth-first order so neighbouring items get close ranks."""
    inc: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(ends):
        for v in e:
            inc[v].append(i)
    rank: list[int] = []
    seen_item = [False] * len(ends)
    seen_v = [False] * n
    for root in range(n):
        if seen_v[root]:
            continue
        seen_v[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for i in inc[v]:
                if not seen_item[i]:
                    seen_item[i] = True
                    rank.append(i)
                for w in ends[i]:
                    if not seen_v[w]:
                        seen_v[w] = True
                        queue.append(w)
    rank.extend(i for i in range(len(ends)) if not seen_item[i])
    return rank


def _solve_coloring(n: int, ends: list[tuple[int, ...]]) -> list[int] | None:
    """Backtracking with most-constrained-item selection and color symmetry breaking.

    Returns a color (1..3) per item, or None when no proper coloring exists.
    """
    m = len(ends)
    if m == 0:
        return []
    order = _locality_order(n, ends)
    pos = [0] * m
    for r, i in enumerate(order):
        pos[i] = r
    used = [0] * n  # bitmask of colors present at each vertex
    color = [0] * m
    uncolored = set(range(m))

    def pick() -> tuple[int, int]:
        best, best_dom, best_size = -1, 0, 4
        for i in uncolored:
            mask = 0
            for v in ends[i]:
                mask |= used[v]
            dom = 7 & ~mask
            size = bin(dom).count("1")
            if size < best_size or (size == best_size and pos[i] < pos[best]):
                best, best_dom, best_size = i, dom, size
                if size == 0:
                    break
        return best, best_dom

    def search(maxc: int) -> bool:
        if not uncolored:
            return True
        i, dom = pick()
        if dom == 0:
            return False
        uncolored.discard(i)
        for c in (1, 2, 3):
            if not dom & (1 << (c - 1)):
                continue
            if c > maxc + 1:
                break
            bit = 1 << (c - 1)
            color[i] = c
            for v in ends[i]:
                used[v] |= bit
            if search(max(maxc, c)):
                return True
            for v in ends[i]:
                used[v] &= ~bit
        color[i] = 0
        uncolored.add(i)
        return False

    return color if search(0) else None


def three_edge_color(graph: CubicGraph) -> EdgeColoring | None:
    """A proper 3-edge-coloring of all edges and dangles, or None if uncolorable."""
    items = graph.items()
    colors = _solve_coloring(graph.n, _item_ends(graph, items))
    if colors is None:
        return None
    return EdgeColoring(dict(zip(items, colors)))


def is_colorable(graph: CubicGraph) -> bool:
    return three_edge_color(graph) is not None


def iter_colorings(graph: CubicGraph) -> Iterator[EdgeColoring]:
    """Every proper 3-edge-coloring (no symmetry reduction), in item order."""
    items = graph.items()
    ends = _item_ends(graph, items)
    used = [0] * graph.n
    color = [0] * len(items)

    def rec(i: int) -> Iterator[EdgeColoring]:
        if i == len(items):
            yield EdgeColoring(dict(zip(items, color)))
            return
        mask = 0
        for v in ends[i]:
            mask |= used[v]
        for c in (1, 2, 3):
            bit = 1 << (c - 1)
            if mask & bit:
                continue
            color[i] = c
            for v in ends[i]:
                used[v] |= bit
            yield from rec(i + 1)
            for v in ends[i]:
                used[v] &= ~bit

    yield from rec(0)


# ---------------------------------------------------------------------------
# Resistance
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ResistanceResult:
    """Outcome of the deletion search.

    ``k`` is None when no deletion set of size at most ``k_max`` works; the
    result is then a budget overrun rather than an answer.
    """

    k: int | None
    witness: tuple[Item, ...]
    exhausted: bool
    k_max: int

    @property
    def budget_exceeded(self) -> bool:
        return self.k is None


def _colorable_without(n: int, ends: list[tuple[int, ...]], removed: Sequence[int]) -> bool:
    drop = set(removed)
    return _solve_coloring(n, [e for i, e in enumerate(ends) if i not in drop]) is not None


def _first_working_subset(args) -> tuple[int, ...] | None:
    n, ends, k, first = args
    rest = range(first + 1, len(ends))
    for tail in itertools.combinations(rest, k - 1):
        subset = (first,) + tail
        if _colorable_without(n, ends, subset):
            return subset
    return None


def resistance(graph: CubicGraph, k_max: int, *, threads: int = 1) -> ResistanceResult:
    """Fewest edges/dangles whose removal leaves a 3-edge-colorable graph.

    Deletion sets are tried by increasing size, each size in lexicographic
    order of item index, so the witness is the lexicographically least one.
    With ``threads > 1`` each size is split by first element across worker
    processes; the answer and witness are the same as sequentially.
    """
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    items = graph.items()
    ends = _item_ends(graph, items)
    n = graph.n
    for k in range(0, min(k_max, len(items)) + 1):
        found: tuple[int, ...] | None = None
        if k == 0:
            found = () if _colorable_without(n, ends, ()) else None
        elif threads > 1:
            jobs = [(n, ends, k, f) for f in range(len(items) - k + 1)]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                for res in pool.map(_first_working_subset, jobs):
                    if res is not None:
                        found = res
                        break
        else:
            for f in range(len(items) - k + 1):
                found = _first_working_subset((n, ends, k, f))
                if found is not None:
                    break
        if found is not None:
            return ResistanceResult(k, tuple(items[i] for i in found), True, k_max)
    return ResistanceResult(None, (), False, k_max)


# ---------------------------------------------------------------------------
# Girth
# ---------------------------------------------------------------------------


def _bfs_cycle_through(graph: CubicGraph, root: int, limit: float = math.inf) -> Cycle | None:
    """A shortest cycle through ``root`` (None if none shorter than ``limit``)."""
    adj = graph.adjacency
    dist = {root: 0}
    parent = {root: -1}
    branch = {root: -1}
    queue = deque([root])
    best: tuple[int, int, int] | None = None
    while queue:
        x = queue.popleft()
        if 2 * dist[x] + 1 >= limit:
            break
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                branch[y] = y if x == root else branch[x]
                queue.append(y)
            elif y != parent[x] and x != root and y != root and branch[x] != branch[y]:
                length = dist[x] + dist[y] + 1
                if length < limit:
                    limit = length
                    best = (x, y, length)
    if best is None:
        return None
    x, y, _ = best
    left, right = [], []
    while x != root:
        left.append(x)
        x = parent[x]
    while y != root:
        right.append(y)
        y = parent[y]
    return Cycle((root,) + tuple(reversed(left)) + tuple(right)).canonical()


def shortest_cycle(graph: CubicGraph) -> Cycle:
    best: Cycle | None = None
    for r in range(graph.n):
        c = _bfs_cycle_through(graph, r, len(best) if best else math.inf)
        if c is not None:
            best = c
    if best is None:
        raise Acyclic("graph has no cycle")
    return best


def girth(graph: CubicGraph) -> int:
    """Length of a shortest cycle, ignoring dangles."""
    return len(shortest_cycle(graph))


# ---------------------------------------------------------------------------
# Cyclic edge-connectivity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclicConnectivityResult:
    """``value`` is None when the graph has no cycle-separating edge cut."""

    value: int | None
    witness: tuple[Edge, ...]

    @property
    def no_cyclic_cut(self) -> bool:
        return self.value is None

    def text(self) -> str:
        return "no-cyclic-cut" if self.value is None else str(self.value)


def _has_cycle(graph: CubicGraph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    edges = sum(1 for u, v in graph.edges if u in vs and v in vs)
    return edges > len(vs) - len(components(graph, vs))


def boundary(graph: CubicGraph, side: Iterable[int]) -> list[Edge]:
    s = set(side)
    return [(u, v) for u, v in graph.edges if (u in s) != (v in s)]


def is_cyclic_cut(graph: CubicGraph, side: Iterable[int]) -> bool:
    s = set(side)
    return _has_cycle(graph, s) and _has_cycle(graph, set(range(graph.n)) - s)


def _connected_sets(graph: CubicGraph, size: int) -> list[tuple[int, ...]]:
    adj = graph.adjacency
    level = {frozenset([v]) for v in range(graph.n)}
    for _ in range(size - 1):
        nxt = set()
        for s in level:
            for v in s:
                for w in adj[v]:
                    if w not in s:
                        nxt.add(s | {w})
        level = nxt
    return sorted(tuple(sorted(s)) for s in level)


class _Flow:
    """Unit-capacity undirected max-flow between two vertex sets."""

    def __init__(self, graph: CubicGraph):
        self.adj = graph.adjacency
        self.n = graph.n

    def min_cut_side(self, src: Sequence[int], dst: Sequence[int], limit: int) -> set[int] | None:
        """Source side of a minimum cut if its value is at most ``limit``, else None."""
        adj = self.adj
        in_src = set(src)
        in_dst = set(dst)
        flow: dict[tuple[int, int], int] = {}
        value = 0
        while True:
            parent: dict[int, int] = {v: -1 for v in in_src}
            queue = deque(in_src)
            hit = -1
            while queue and hit < 0:
                x = queue.popleft()
                for y in adj[x]:
                    if y in parent or flow.get((x, y), 0) >= 1:
                        continue
                    parent[y] = x
                    if y in in_dst:
                        hit = y
                        break
                    queue.append(y)
            if hit < 0:
                return set(parent)
            value += 1
            if value > limit:
                return None
            y = hit
            while parent[y] >= 0:
                x = parent[y]
                flow[(x, y)] = flow.get((x, y), 0) + 1
                flow[(y, x)] = flow.get((y, x), 0) - 1
                y = x


def _cyclic_upper_bound(graph: CubicGraph) -> tuple[int, tuple[Edge, ...]] | None:
    """Smallest cut isolating a candidate cycle whose complement still has a cycle."""
    everything = set(range(graph.n))
    best: tuple[int, tuple[Edge, ...]] | None = None
    candidates: Iterable[Cycle] = filter(None, (_bfs_cycle_through(graph, v) for v in range(graph.n)))
    for c in candidates:
        if _has_cycle(graph, everything - set(c.vertices)):
            cut = tuple(boundary(graph, c.vertices))
            if best is None or len(cut) < best[0]:
                best = (len(cut), cut)
    if best is not None:
        return best
    # no shortest cycle leaves a cycle behind; fall back to all cycles
    for c in iter_cycles(graph):
        if _has_cycle(graph, everything - set(c.vertices)):
            cut = tuple(boundary(graph, c.vertices))
            if best is None or len(cut) < best[0]:
                best = (len(cut), cut)
    return best


def _find_cyclic_cut(graph: CubicGraph, k: int) -> tuple[Edge, ...] | None:
    """A cycle-separating cut of size at most k, assuming none smaller than k exists.

    Both sides of such a cut are connected and hold at least k-1 vertices, so
    each contains a connected seed of that size; conversely any minimum cut
    between two disjoint connected seeds of size k-1 with value at most k is
    cycle-separating.
    """
    flow = _Flow(graph)
    size = max(1, k - 1)
    seeds = _connected_sets(graph, size)
    if size == 1:
        # a single vertex never straddles a cut
        pairs: Iterable = ((seeds[0], t) for t in seeds[1:])
    else:
        pairs = itertools.combinations(seeds, 2)
    for s, t in pairs:
        if set(s) & set(t):
            continue
        side = flow.min_cut_side(s, t, k)
        if side is not None and is_cyclic_cut(graph, side):
            return tuple(boundary(graph, side))
    return None


def cyclic_edge_connectivity(graph: CubicGraph) -> CyclicConnectivityResult:
    """Minimum size of an edge cut leaving two components that contain cycles."""
    graph.require_closed()
    if not is_connected(graph):
        raise Disconnected("cyclic edge-connectivity needs a connected graph")
    upper = _cyclic_upper_bound(graph)
    if upper is None:
        return CyclicConnectivityResult(None, ())
    for k in range(1, upper[0]):
        cut = _find_cyclic_cut(graph, k)
        if cut is not None:
            return CyclicConnectivityResult(len(cut), tuple(sorted(cut)))
    return CyclicConnectivityResult(upper[0], tuple(sorted(upper[1])))


# ---------------------------------------------------------------------------
# Cycles versus high-resistance subgraphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lemma1Verdict:
    holds: bool
    cycles_checked: int
    counterexample: tuple[Cycle, int] | None = None  # (cycle, copy index)

    def text(self) -> str:
        if self.holds:
            return f"holds cycles={self.cycles_checked}"
        c, copy = self.counterexample
        return f"counterexample copy={copy} cycle={c.text()}"


def lemma1_check(
    graph: CubicGraph, partition: CopyPartition, k: int, cycle_cap: int | None = None
) -> Lemma1Verdict:
    """Check that every cycle leaving a copy class misses at least k of its vertices.

    Cycles are enumerated exhaustively; CapExceeded is raised (inconclusive)
    when there are more than ``cycle_cap``.
    """
    if not is_bridgeless(graph):
        raise NotBridgeless("the graph has a bridge or is disconnected")
    partition.check(graph.n)
    copy_of = partition.copy_of
    sizes = [len(c) for c in partition.classes()]
    count = 0
    for cycle in iter_cycles(graph):
        if cycle_cap is not None and count >= cycle_cap:
            raise CapExceeded(cycle_cap, [])
        count += 1
        hits = [0] * len(sizes)
        for v in cycle.vertices:
            if copy_of[v] is not None:
                hits[copy_of[v]] += 1
        for copy, h in enumerate(hits):
            if h < len(cycle) and sizes[copy] - h < k:
                return Lemma1Verdict(False, count, (cycle, copy))
    return Lemma1Verdict(True, count)


@dataclass(frozen=True)
class BadVertexResult:
    """The path-alternating coloring of a copy, keyed by original edges."""

    coloring: dict[Edge, int]
    bad: frozenset[int]
    remainder_colorable: bool
    proper: bool


def bad_vertex_decomposition(graph: CubicGraph, cycle: Cycle, copy: Iterable[int]) -> BadVertexResult:
    """Color the copy's edges along the cycle's traversal and find the bad vertices.

    Edges with at least one end in the copy are colored: the cycle's edges
    alternately 1 and 2 along each maximal stretch of the cycle meeting the
    copy, every other edge 3.  A vertex all of whose edges are 3 is bad.  The
    copy with its bad vertices deleted (keeping edges to the outside as
    dangles) is then re-checked by the colorer.

    When the whole cycle lies inside the copy the alternation runs around the
    cycle; an odd cycle then gets color 3 on its closing edge and the coloring
    is reported as not proper.
    """
    inside = set(copy)
    vs = cycle.vertices
    L = len(vs)
    coloring: dict[Edge, int] = {}
    for u, v in graph.edges:
        if u in inside or v in inside:
            coloring[(u, v)] = 3
    if all(v in inside for v in vs):
        for i, e in enumerate(cycle.edges()):
            coloring[e] = 1 + (i % 2) if not (L % 2 and i == L - 1) else 3
    else:
        start = next(i for i, v in enumerate(vs) if v not in inside)
        rot = vs[start:] + vs[:start]
        i = 0
        while i < L:
            if rot[(i + 1) % L] not in inside:
                i += 1
                continue
            # stretch: rot[i] outside, rot[i+1..j] inside, rot[j+1] outside
            j = i + 1
            while rot[(j + 1) % L] in inside:
                j += 1
            for step, a in enumerate(range(i, j + 1)):
                u, v = rot[a % L], rot[(a + 1) % L]
                coloring[(min(u, v), max(u, v))] = 1 + (step % 2)
            i = j + 1
    bad = set()
    for v in inside:
        if all(coloring[(min(v, w), max(v, w))] == 3 for w in graph.adjacency[v]):
            bad.add(v)
    proper = all(
        len({coloring[(min(v, w), max(v, w))] for w in graph.adjacency[v]}) == 3 for v in inside - bad
    )
    ok = _remainder_colorable(graph, frozenset(inside), frozenset(bad))
    return BadVertexResult(coloring, frozenset(bad), ok, proper)


@lru_cache(maxsize=4096)
def _remainder_colorable(graph: CubicGraph, inside: frozenset, bad: frozenset) -> bool:
    # many cycles share a bad set, so the colorer runs once per distinct one
    remainder, _ = induced_subgraph(graph, inside - bad, boundary_dangles=True)
    # edges into deleted bad vertices disappear with them
    keep = [d for d in remainder.dangles if int(d.tag[1:].split("-")[1]) not in bad]
    remainder = build_graph(remainder.n, remainder.edges, keep, subcubic=True)
    return is_colorable(remainder)


# ---------------------------------------------------------------------------
# Report records
# ---------------------------------------------------------------------------


def record(prop: str, value, certificate: str = "") -> str:
    """One ``<property> <value> <certificate>`` line."""
    if isinstance(value, bool):
        value = "true" if value else "false"
    return f"{prop} {value} {certificate}".rstrip()


def edges_text(edges: Iterable[Item]) -> str:
    return ",".join(e if isinstance(e, str) else f"{e[0]}-{e[1]}" for e in edges) or "-"
