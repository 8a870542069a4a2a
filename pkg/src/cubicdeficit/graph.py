"""Cubic graphs with dangling half-edges, cycles and edge colorings.

Vertices are dense integers ``0..n-1``.  A dangle is a half-edge hanging off a
single vertex; it is identified by a slot tag that is unique in its graph.
Joining two dangles turns them into an ordinary edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    CapExceeded,
    DuplicateSlotTag,
    HasDangles,
    InvalidGraph,
    NotCubic,
    ParallelEdge,
)

Edge = tuple[int, int]
# an edge (u, v) with u < v, or the slot tag of a dangle
Item = Union[Edge, str]


@dataclass(frozen=True, order=True)
class Dangle:
    vertex: int
    tag: str


@dataclass(frozen=True)
class CubicGraph:
    """Immutable simple graph whose vertices have degree 3 counting dangles.

    Build instances with :func:`build_graph`, which validates them.  Graphs
    built with ``subcubic=True`` only require degree at most 3; these occur
    as intermediate remainders inside verifiers.
    """

    n: int
    edges: tuple[Edge, ...]
    dangles: tuple[Dangle, ...] = ()
    subcubic: bool = field(default=False, compare=False)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def dangles_at(self) -> tuple[tuple[str, ...], ...]:
        at: list[list[str]] = [[] for _ in range(self.n)]
        for d in self.dangles:
            at[d.vertex].append(d.tag)
        return tuple(tuple(sorted(a)) for a in at)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def tags(self) -> dict[str, int]:
        return {d.tag: d.vertex for d in self.dangles}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v]) + len(self.dangles_at[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def items(self) -> list[Item]:
        """Edges in sorted order followed by dangle tags in sorted order."""
        return list(self.edges) + sorted(d.tag for d in self.dangles)

    def incident(self, v: int) -> list[Item]:
        out: list[Item] = [(min(u, v), max(u, v)) for u in self.adjacency[v]]
        out.extend(self.dangles_at[v])
        return out

    def endpoints(self, item: Item) -> tuple[int, ...]:
        if isinstance(item, str):
            return (self.tags[item],)
        return item

    def require_closed(self) -> None:
        if self.dangles:
            raise HasDangles(f"graph has {len(self.dangles)} dangling half-edges")

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, |E|={len(self.edges)}, dangles={len(self.dangles)})"


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    dangles: Iterable[Dangle | tuple[int, str]] = (),
    *,
    subcubic: bool = False,
) -> CubicGraph:
    """Validate and freeze a graph.

    Raises NotCubic, ParallelEdge, DuplicateSlotTag, or InvalidGraph for
    out-of-range ids and loops.
    """
    if n < 0:
        raise InvalidGraph(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraph(f"edge {u}-{v} out of range for n={n}")
        if u == v:
            raise InvalidGraph(f"loop at vertex {u}")
        key = _norm_edge(u, v)
        if key in seen:
            raise ParallelEdge(f"edge {key[0]}-{key[1]} appears twice")
        seen.add(key)
    ds: list[Dangle] = []
    tags: set[str] = set()
    for d in dangles:
        d = d if isinstance(d, Dangle) else Dangle(int(d[0]), str(d[1]))
        if not 0 <= d.vertex < n:
            raise InvalidGraph(f"dangle {d.tag!r} at out-of-range vertex {d.vertex}")
        if d.tag in tags:
            raise DuplicateSlotTag(f"slot tag {d.tag!r} used twice")
        tags.add(d.tag)
        ds.append(d)
    deg = [0] * n
    for u, v in seen:
        deg[u] += 1
        deg[v] += 1
    for d in ds:
        deg[d.vertex] += 1
    for v, k in enumerate(deg):
        if k > 3 or (k != 3 and not subcubic):
            raise NotCubic(f"vertex {v} has degree {k}")
    return CubicGraph(n, tuple(sorted(seen)), tuple(sorted(ds)), subcubic)


def join_dangles(graph: CubicGraph, tag_a: str, tag_b: str) -> CubicGraph:
    """Identify two dangles, producing an ordinary edge between their vertices."""
    u, v = graph.tags[tag_a], graph.tags[tag_b]
    rest = [d for d in graph.dangles if d.tag not in (tag_a, tag_b)]
    return build_graph(graph.n, graph.edges + ((u, v),), rest, subcubic=graph.subcubic)


def split_edge(graph: CubicGraph, u: int, v: int, tag_u: str, tag_v: str) -> CubicGraph:
    """Cut edge uv, leaving a dangle at each end."""
    key = _norm_edge(u, v)
    if key not in graph.edge_set:
        raise InvalidGraph(f"no edge {u}-{v}")
    edges = [e for e in graph.edges if e != key]
    ds = list(graph.dangles) + [Dangle(u, tag_u), Dangle(v, tag_v)]
    return build_graph(graph.n, edges, ds, subcubic=graph.subcubic)


def induced_subgraph(
    graph: CubicGraph, keep: Iterable[int], *, boundary_dangles: bool = False
) -> tuple[CubicGraph, list[int]]:
    """Subgraph induced on ``keep``, renumbered in ascending order.

    With ``boundary_dangles`` each edge leaving ``keep`` becomes a dangle tagged
    ``"x<u>-<v>"`` (original ids) and existing dangles are retained; otherwise
    both are dropped.  Returns the subgraph and the new-to-old id map.
    """
    order = sorted(set(keep))
    index = {v: i for i, v in enumerate(order)}
    edges = []
    ds = []
    for u, v in graph.edges:
        if u in index and v in index:
            edges.append((index[u], index[v]))
        elif boundary_dangles and (u in index or v in index):
            a, b = (u, v) if u in index else (v, u)
            ds.append(Dangle(index[a], f"x{a}-{b}"))
    if boundary_dangles:
        ds.extend(Dangle(index[d.vertex], d.tag) for d in graph.dangles if d.vertex in index)
    return build_graph(len(order), edges, ds, subcubic=True), order


@dataclass(frozen=True)
class Cycle:
    """A cycle given as a cyclic vertex sequence."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise InvalidGraph("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidGraph("cycle repeats a vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [_norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def canonical(self) -> Cycle:
        """Rotate/reflect so the smallest vertex is first and its smaller neighbor second."""
        vs = self.vertices
        i = vs.index(min(vs))
        rot = vs[i:] + vs[:i]
        if rot[-1] < rot[1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return Cycle(rot)

    def is_valid_in(self, graph: CubicGraph) -> bool:
        return all(graph.has_edge(u, v) for u, v in self.edges())

    def text(self) -> str:
        return ",".join(map(str, self.vertices))


@dataclass(frozen=True)
class EdgeColoring:
    """Colors 1, 2, 3 on every edge and dangle of a graph."""

    color: Mapping[Hashable, int]

    def __getitem__(self, item: Item) -> int:
        return self.color[item]

    def is_proper(self, graph: CubicGraph) -> bool:
        items = graph.items()
        if set(items) != set(self.color) or any(self.color[i] not in (1, 2, 3) for i in items):
            return False
        for v in range(graph.n):
            cs = [self.color[i] for i in graph.incident(v)]
            if len(set(cs)) != len(cs):
                return False
        return True

    def text(self) -> str:
        parts = []
        for item in sorted(self.color, key=lambda i: (isinstance(i, str), i)):
            key = item if isinstance(item, str) else f"{item[0]}-{item[1]}"
            parts.append(f"{key}:{self.color[item]}")
        return ",".join(parts)


def components(graph: CubicGraph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of the subgraph induced on ``vertices`` (default: all)."""
    allowed = set(range(graph.n)) if vertices is None else set(vertices)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in graph.adjacency[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(graph: CubicGraph) -> bool:
    return graph.n == 0 or len(components(graph)) == 1


def bridges(graph: CubicGraph) -> list[Edge]:
    """Cut edges, by iterative low-link DFS."""
    n = graph.n
    adj = graph.adjacency
    disc = [-1] * n
    low = [0] * n
    out: list[Edge] = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    out.append(_norm_edge(parent, v))
    return sorted(out)


def is_bridgeless(graph: CubicGraph) -> bool:
    """True iff the dangle-free graph is connected and has no cut edge."""
    graph.require_closed()
    return is_connected(graph) and not bridges(graph)


def iter_cycles(graph: CubicGraph) -> Iterator[Cycle]:
    """Yield every cycle once, in canonical rotation, ordered by smallest vertex."""
    adj = graph.adjacency
    n = graph.n
    on_path = [False] * n
    for s in range(n):
        path = [s]
        on_path[s] = True
        # each frame: iterator over candidate successors of path[-1]
        frames = [iter([w for w in adj[s] if w > s])]
        while frames:
            advanced = False
            for w in frames[-1]:
                if on_path[w]:
                    continue
                path.append(w)
                on_path[w] = True
                if len(path) >= 3 and s in adj[w] and w > path[1]:
                    yield Cycle(tuple(path))
                frames.append(iter([x for x in adj[w] if x > s]))
                advanced = True
                break
            if not advanced:
                frames.pop()
                on_path[path.pop()] = False


def enumerate_cycles(graph: CubicGraph, cap: int | None = None) -> list[Cycle]:
    """All cycles of a dangle-free graph.

    Raises CapExceeded, carrying the first ``cap`` cycles, when there are more.
    """
    graph.require_closed()
    out: list[Cycle] = []
    for c in iter_cycles(graph):
        if cap is not None and len(out) >= cap:
            raise CapExceeded(cap, out)
        out.append(c)
    return out
