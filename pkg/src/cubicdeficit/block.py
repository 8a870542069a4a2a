"""Blocks: cubic graph fragments with labelled groups of dangles."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GroupArityMismatch, ShapeMismatch
from .graph import CubicGraph

ARITY = {"pair": 2, "triple": 3, "single": 1}
ROLES = ("in", "out", "spine")


@dataclass(frozen=True)
class Group:
    name: str
    arity: str
    role: str
    members: tuple[str, ...]  # slot tags, in group-index order


def slot_tag(group: str, index: int) -> str:
    return f"{group}.{index}"


@dataclass(frozen=True)
class Block:
    """A graph together with a partition of its dangles into interface groups.

    ``origin`` optionally records, for each vertex, its id in the graph the
    block was cut from.
    """

    name: str
    graph: CubicGraph
    groups: tuple[Group, ...]
    origin: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        members = [t for g in self.groups for t in g.members]
        for g in self.groups:
            if g.arity not in ARITY:
                raise GroupArityMismatch(f"group {g.name!r}: unknown arity {g.arity!r}")
            if g.role not in ROLES:
                raise ShapeMismatch(f"group {g.name!r}: unknown role {g.role!r}")
            if len(g.members) != ARITY[g.arity]:
                raise GroupArityMismatch(
                    f"group {g.name!r} declared {g.arity} but has {len(g.members)} members"
                )
        if len(set(members)) != len(members) or set(members) != set(self.graph.tags):
            raise ShapeMismatch("every dangle must belong to exactly one group")
        if len({g.name for g in self.groups}) != len(self.groups):
            raise ShapeMismatch("duplicate group name")

    @property
    def order(self) -> int:
        return self.graph.n

    def with_role(self, role: str) -> list[Group]:
        return [g for g in self.groups if g.role == role]

    def group(self, name: str) -> Group:
        for g in self.groups:
            if g.name == name:
                return g
        raise KeyError(name)

    def member_vertices(self, group: Group) -> tuple[int, ...]:
        return tuple(self.graph.tags[t] for t in group.members)

    def ring_groups(self) -> tuple[Group, Group]:
        """The unique in-group and out-group, which must have equal arity."""
        ins, outs = self.with_role("in"), self.with_role("out")
        if len(ins) != 1 or len(outs) != 1:
            raise ShapeMismatch(
                f"block {self.name!r} needs one in-group and one out-group, "
                f"has {len(ins)} and {len(outs)}"
            )
        if ins[0].arity != outs[0].arity or ins[0].arity == "single":
            raise ShapeMismatch("in- and out-groups must both be pairs or both triples")
        return ins[0], outs[0]


@dataclass(frozen=True)
class CopyPartition:
    """Assignment of each vertex of a composed graph to a block copy.

    ``copy_of[v]`` is the copy index, or ``None`` for auxiliary (spine) vertices.
    """

    copy_of: tuple[int | None, ...]

    @property
    def m(self) -> int:
        return 1 + max((c for c in self.copy_of if c is not None), default=-1)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.m)]
        for v, c in enumerate(self.copy_of):
            if c is not None:
                out[c].append(v)
        return out

    @property
    def aux(self) -> list[int]:
        return [v for v, c in enumerate(self.copy_of) if c is None]

    def check(self, n: int) -> None:
        if len(self.copy_of) != n:
            raise ShapeMismatch(f"partition covers {len(self.copy_of)} vertices, graph has {n}")
        sizes = {len(c) for c in self.classes()}
        if len(sizes) > 1 or 0 in sizes:
            raise ShapeMismatch("copy classes must be non-empty and of equal size")
