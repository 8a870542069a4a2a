"""graph6 and the line-based block file format."""

from __future__ import annotations

from .block import ARITY, Block, CopyPartition, Group, slot_tag
from .errors import GroupArityMismatch, Malformed6, ParseError
from .graph import CubicGraph, Dangle, build_graph

_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: {n}")


def graph6_encode(graph: CubicGraph) -> str:
    """Encode a dangle-free graph as a graph6 string (no header, no newline)."""
    graph.require_closed()
    n = graph.n
    bits = []
    edges = graph.edge_set
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return _encode_size(n) + "".join(body)


def _decode_edges(text: str) -> tuple[int, list[tuple[int, int]]]:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Malformed6("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in vals):
        raise Malformed6("character outside the graph6 range")
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise Malformed6("truncated size field")
        n, pos = 0, 8
        for x in vals[2:8]:
            n = (n << 6) | x
    else:
        if len(vals) < 4:
            raise Malformed6("truncated size field")
        n, pos = 0, 4
        for x in vals[1:4]:
            n = (n << 6) | x
    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise Malformed6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for x in body:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Malformed6("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return n, edges


def graph6_decode(text: str) -> CubicGraph:
    """Decode one graph6 string into a validated cubic graph."""
    n, edges = _decode_edges(text)
    return build_graph(n, edges)


def read_graph6_file(path) -> list[CubicGraph]:
    with open(path) as fh:
        return [graph6_decode(line) for line in fh if line.strip()]


def block_encode(block: Block) -> str:
    g = block.graph
    lines = [f"block {block.name}", f"vertices {g.n}"]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    for grp in sorted(block.groups, key=lambda x: x.name):
        for i, tag in enumerate(grp.members):
            lines.append(f"dangle {g.tags[tag]} {grp.name} {grp.arity} {grp.role} {i}")
    return "\n".join(lines) + "\n"


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def parse_claims(text: str) -> dict[str, int]:
    """Collect ``# claim <key> <int>`` annotations."""
    claims = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.lstrip("#").split() if raw.lstrip().startswith("#") else []
        if len(parts) >= 1 and parts[0] == "claim":
            if len(parts) != 3:
                raise ParseError("claim needs a key and a value", lineno)
            claims[parts[1]] = _ints(parts[2:], lineno)[0]
    return claims


def block_decode(text: str) -> Block:
    """Parse a block file.  Comment lines start with ``#``."""
    name = None
    n = None
    edges: list[tuple[int, int]] = []
    groups: dict[str, tuple[str, str, dict[int, int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if name is None:
            if kind != "block" or len(parts) != 2:
                raise ParseError("first record must be 'block <name>'", lineno)
            name = parts[1]
        elif n is None:
            if kind != "vertices" or len(parts) != 2:
                raise ParseError("second record must be 'vertices <n>'", lineno)
            n = _ints(parts[1:], lineno)[0]
        elif kind == "edge":
            if len(parts) != 3:
                raise ParseError("edge record needs two vertices", lineno)
            u, v = _ints(parts[1:], lineno)
            if not u < v:
                raise ParseError(f"edge endpoints must satisfy u < v, got {u} {v}", lineno)
            edges.append((u, v))
        elif kind == "dangle":
            if len(parts) != 6:
                raise ParseError("dangle record needs vertex, group, arity, role, index", lineno)
            vertex, gname, arity, role, idx = parts[1:]
            (vertex,) = _ints([vertex], lineno)
            (idx,) = _ints([idx], lineno)
            if arity not in ARITY:
                raise ParseError(f"unknown arity {arity!r}", lineno)
            if role not in ("in", "out", "spine"):
                raise ParseError(f"unknown role {role!r}", lineno)
            prev = groups.setdefault(gname, (arity, role, {}))
            if prev[:2] != (arity, role):
                raise ParseError(f"group {gname!r} declared with conflicting arity/role", lineno)
            if idx in prev[2]:
                raise ParseError(f"group {gname!r} index {idx} repeated", lineno)
            prev[2][idx] = vertex
        else:
            raise ParseError(f"unknown record {kind!r}", lineno)
    if name is None or n is None:
        raise ParseError("missing block header")
    dangles = []
    grps = []
    for gname, (arity, role, members) in groups.items():
        if sorted(members) != list(range(len(members))):
            raise GroupArityMismatch(f"group {gname!r} indices are not 0..k-1")
        if len(members) != ARITY[arity]:
            raise GroupArityMismatch(f"group {gname!r} declared {arity} but has {len(members)} members")
        tags = tuple(slot_tag(gname, i) for i in range(len(members)))
        dangles += [Dangle(members[i], tags[i]) for i in range(len(members))]
        grps.append(Group(gname, arity, role, tags))
    graph = build_graph(n, edges, dangles)
    return Block(name, graph, tuple(sorted(grps, key=lambda g: g.name)))


def write_partition(partition: CopyPartition, path) -> None:
    with open(path, "w") as fh:
        for v, c in enumerate(partition.copy_of):
            fh.write(f"{v} {'aux' if c is None else c}\n")


def read_partition(path) -> CopyPartition:
    out: dict[int, int | None] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            parts = raw.split()
            if not parts or parts[0].startswith("#"):
                continue
            if len(parts) != 2:
                raise ParseError("partition lines are '<vertex> <copy|aux>'", lineno)
            v = _ints(parts[:1], lineno)[0]
            out[v] = None if parts[1] == "aux" else _ints(parts[1:], lineno)[0]
    if sorted(out) != list(range(len(out))):
        raise ParseError("partition does not cover vertices 0..n-1")
    return CopyPartition(tuple(out[v] for v in range(len(out))))
