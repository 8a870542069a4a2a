"""Gadgets and circular compositions of blocks.

Composed graphs number the vertices of copy ``k`` contiguously from
``k * block.order``; spine vertices (if any) come last.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .block import Block, CopyPartition, Group, slot_tag
from .codecs import block_decode, parse_claims
from .errors import ClaimViolated, NotAdjacent, NotSimple, SeedNotSnark, ShapeMismatch, TooFewCopies
from .errors import ParallelEdge
from .graph import CubicGraph, Dangle, build_graph
from .verifiers import girth, is_colorable, resistance


def petersen() -> CubicGraph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return build_graph(10, outer + spokes + inner)


def k4() -> CubicGraph:
    return build_graph(4, itertools.combinations(range(4), 2))


def excise_adjacent_pair(graph: CubicGraph, u: int, v: int, name: str = "excised") -> Block:
    """Delete adjacent vertices u and v, keeping their other edges as dangles.

    The dangles left by u form the pair-group ``in`` and those left by v the
    pair-group ``out``; within a group, index 0 sits at the lower-numbered
    former neighbour.  Surviving vertices keep their relative order.
    """
    graph.require_closed()
    if not graph.has_edge(u, v):
        raise NotAdjacent(f"vertices {u} and {v} are not adjacent")
    keep = [x for x in range(graph.n) if x not in (u, v)]
    index = {x: i for i, x in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in graph.edges if a in index and b in index]
    dangles = []
    groups = []
    for gname, center, other in (("in", u, v), ("out", v, u)):
        ends = sorted(w for w in graph.neighbors(center) if w != other)
        tags = tuple(slot_tag(gname, i) for i in range(len(ends)))
        dangles += [Dangle(index[w], t) for w, t in zip(ends, tags)]
        groups.append(Group(gname, "pair", gname, tags))
    g = build_graph(len(keep), edges, dangles)
    return Block(name, g, tuple(groups), origin=tuple(keep))


def block_b() -> Block:
    """Petersen graph with the adjacent pair 0, 1 removed."""
    return excise_adjacent_pair(petersen(), 0, 1, name="B")


def through_paths(block: Block) -> list[tuple[int, ...]]:
    """All simple paths from an in-group vertex to an out-group vertex.

    Paths of a single vertex count when that vertex carries both kinds of dangle.
    """
    ins, outs = block.ring_groups()
    starts = sorted(set(block.member_vertices(ins)))
    ends = set(block.member_vertices(outs))
    adj = block.graph.adjacency
    out = []

    def rec(path: list[int], seen: set[int]):
        if path[-1] in ends:
            out.append(tuple(path))
        for w in adj[path[-1]]:
            if w not in seen:
                seen.add(w)
                path.append(w)
                rec(path, seen)
                path.pop()
                seen.discard(w)

    for s in starts:
        rec([s], {s})
    return out


def join_h(a: Block, b: Block, name: str = "H") -> Block:
    """Two excised blocks glued as in the girth construction.

    The second in-dangle (f) of ``a`` is joined to that of ``b``; the first
    in-dangles (e) of both are joined to a new vertex carrying the spine
    dangle.  ``a``'s out-pair becomes the new in-group and ``b``'s out-pair
    the new out-group.
    """
    for blk in (a, b):
        if [g.arity for g in blk.with_role("in")] != ["pair"] or [
            g.arity for g in blk.with_role("out")
        ] != ["pair"] or len(blk.groups) != 2:
            raise ShapeMismatch(f"block {blk.name!r} is not one in-pair plus one out-pair")
    na, nb = a.order, b.order
    ain, aout = a.ring_groups()
    bin_, bout = b.ring_groups()
    ea, fa = (a.graph.tags[t] for t in ain.members)
    eb, fb = (b.graph.tags[t] for t in bin_.members)
    v = na + nb
    edges = list(a.graph.edges) + [(x + na, y + na) for x, y in b.graph.edges]
    edges += [(fa, fb + na), (ea, v), (eb + na, v)]
    in_tags = tuple(slot_tag("in", i) for i in range(2))
    out_tags = tuple(slot_tag("out", i) for i in range(2))
    dangles = [Dangle(a.graph.tags[t], nt) for t, nt in zip(aout.members, in_tags)]
    dangles += [Dangle(b.graph.tags[t] + na, nt) for t, nt in zip(bout.members, out_tags)]
    spine = slot_tag("spine", 0)
    dangles.append(Dangle(v, spine))
    try:
        g = build_graph(na + nb + 1, edges, dangles)
    except ParallelEdge as exc:
        raise NotSimple(str(exc)) from exc
    groups = (
        Group("in", "pair", "in", in_tags),
        Group("out", "pair", "out", out_tags),
        Group("spine", "single", "spine", (spine,)),
    )
    return Block(name, g, groups)


@dataclass(frozen=True)
class RingSpec:
    """``m`` copies; ``wiring[k][j]`` is the in-member of copy k+1 receiving out-member j of copy k."""

    m: int
    wiring: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def uniform(cls, m: int, perm: Sequence[int]) -> RingSpec:
        return cls(m, tuple(tuple(perm) for _ in range(m)))

    def junction(self, k: int, arity: int) -> tuple[int, ...]:
        if self.wiring is None:
            return tuple(range(arity))
        w = tuple(self.wiring[k])
        if sorted(w) != list(range(arity)):
            raise ShapeMismatch(f"junction {k} wiring {w} is not a bijection on {arity} members")
        return w


def _copy_tag(tag: str, k: int) -> str:
    return f"{tag}@{k}"


def ring_of_blocks(block: Block, spec: RingSpec | int) -> tuple[CubicGraph, CopyPartition]:
    """Arrange copies on a circle, joining each copy's out-group to the next copy's in-group.

    Dangles of any other groups remain, tagged ``<tag>@<copy>``.
    """
    if isinstance(spec, int):
        spec = RingSpec(spec)
    gin, gout = block.ring_groups()
    m = spec.m
    if m < 2:
        raise TooFewCopies(f"a ring needs at least 2 copies, got {m}")
    if spec.wiring is not None and len(spec.wiring) != m:
        raise ShapeMismatch(f"wiring lists {len(spec.wiring)} junctions for {m} copies")
    order = block.order
    tags = block.graph.tags
    edges = []
    for k in range(m):
        off = k * order
        edges += [(x + off, y + off) for x, y in block.graph.edges]
    arity = len(gin.members)
    for k in range(m):
        nxt = (k + 1) % m
        perm = spec.junction(k, arity)
        for j, tag in enumerate(gout.members):
            x = tags[tag] + k * order
            y = tags[gin.members[perm[j]]] + nxt * order
            edges.append((x, y))
    ring_tags = set(gin.members) | set(gout.members)
    dangles = [
        Dangle(d.vertex + k * order, _copy_tag(d.tag, k))
        for k in range(m)
        for d in block.graph.dangles
        if d.tag not in ring_tags
    ]
    try:
        g = build_graph(m * order, edges, dangles)
    except ParallelEdge as exc:
        raise NotSimple(str(exc)) from exc
    partition = CopyPartition(tuple(v // order for v in range(m * order)))
    return g, partition


def ring_with_spine(block: Block, m: int) -> tuple[CubicGraph, CopyPartition]:
    """Ring of copies whose single dangles are attached to a new m-cycle, one per spine vertex."""
    singles = [g for g in block.groups if g.arity == "single"]
    if len(singles) != 1 or len(block.groups) != 3:
        raise ShapeMismatch(f"block {block.name!r} needs exactly one single-group besides in/out")
    if m < 3:
        raise TooFewCopies(f"a spine cycle needs at least 3 copies, got {m}")
    ring, part = ring_of_blocks(block, RingSpec(m))
    base = ring.n
    edges = list(ring.edges)
    edges += [(base + k, base + (k + 1) % m) for k in range(m)]
    tag = singles[0].members[0]
    for k in range(m):
        edges.append((ring.tags[_copy_tag(tag, k)], base + k))
    g = build_graph(base + m, edges)
    return g, CopyPartition(part.copy_of + (None,) * m)


def double_h(h: Block | None = None) -> tuple[CubicGraph, CopyPartition]:
    """Two copies of H joined pairwise, with their spine dangles joined by an edge."""
    h = h or join_h(block_b(), block_b())
    ring, part = ring_of_blocks(h, RingSpec(2))
    tag = h.with_role("spine")[0].members[0]
    a, b = ring.tags[_copy_tag(tag, 0)], ring.tags[_copy_tag(tag, 1)]
    g = build_graph(ring.n, list(ring.edges) + [(a, b)])
    return g, part


def is_snark_seed(seed: CubicGraph, g: int) -> bool:
    return not is_colorable(seed) and girth(seed) >= g


def theorem3_graph(g: int, seed: CubicGraph, u: int = 0, v: int = 1) -> tuple[CubicGraph, CopyPartition]:
    """Snark of girth >= g built from g copies of H around a spine g-cycle.

    H is two copies of ``seed`` minus the adjacent pair (u, v), glued by
    :func:`join_h`.
    """
    if g < 5:
        raise ValueError("girth target must be at least 5")
    seed.require_closed()
    if not seed.has_edge(u, v):
        raise NotAdjacent(f"seed vertices {u} and {v} are not adjacent")
    if is_colorable(seed):
        raise SeedNotSnark("seed is 3-edge-colorable")
    sg = girth(seed)
    if sg < g:
        raise SeedNotSnark(f"seed girth {sg} is below target {g}")
    h1 = excise_adjacent_pair(seed, u, v, name="H1")
    return ring_with_spine(join_h(h1, h1), g)


@dataclass(frozen=True)
class ClaimCheck:
    key: str
    claimed: int
    observed: int | None
    status: str  # confirmed | refuted | inconclusive

    def text(self) -> str:
        obs = "?" if self.observed is None else self.observed
        return f"claim {self.key} {self.claimed} observed={obs} {self.status}"


def check_block_claims(block: Block, claims: dict[str, int], resistance_budget: int = 3) -> list[ClaimCheck]:
    """Verify order, girth and resistance claims for a block.

    Resistance is searched up to ``max(claim, resistance_budget)`` deletions;
    a claim beyond reach of the search is inconclusive.
    """
    out = []
    for key, claimed in sorted(claims.items()):
        if key == "order":
            obs = block.order
            out.append(ClaimCheck(key, claimed, obs, "confirmed" if obs == claimed else "refuted"))
        elif key == "girth":
            obs = girth(block.graph)
            out.append(ClaimCheck(key, claimed, obs, "confirmed" if obs == claimed else "refuted"))
        elif key == "resistance":
            res = resistance(block.graph, max(claimed, resistance_budget))
            if res.k is None:
                out.append(ClaimCheck(key, claimed, None, "inconclusive"))
            else:
                out.append(ClaimCheck(key, claimed, res.k, "confirmed" if res.k == claimed else "refuted"))
        else:
            out.append(ClaimCheck(key, claimed, None, "inconclusive"))
    return out


def register_external_block(source: str | Path, resistance_budget: int = 3) -> tuple[Block, list[ClaimCheck]]:
    """Load a block file (path or text) and verify its ``# claim`` annotations.

    Raises ClaimViolated if any checked claim is false.
    """
    text = Path(source).read_text() if isinstance(source, Path) or "\n" not in str(source) else source
    block = block_decode(text)
    report = check_block_claims(block, parse_claims(text), resistance_budget)
    bad = [c for c in report if c.status == "refuted"]
    if bad:
        raise ClaimViolated("; ".join(c.text() for c in bad), report)
    return block, report


def copy_subgraph_edges(graph: CubicGraph, partition: CopyPartition, copy: int) -> list[tuple[int, int]]:
    """Edges inside one copy class, shifted so the class starts at 0."""
    cls = partition.classes()[copy]
    base = cls[0]
    members = set(cls)
    return sorted((u - base, v - base) for u, v in graph.edges if u in members and v in members)


def iter_disjoint_path_pairs(paths: list[tuple[int, ...]]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for p, q in itertools.combinations(paths, 2):
        if not set(p) & set(q):
            yield p, q
