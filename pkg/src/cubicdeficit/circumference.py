"""Anytime branch-and-bound for the longest cycle, and circumference reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoCycle
from .graph import Cycle, CubicGraph


@dataclass(frozen=True)
class Budget:
    """Search limits; ``None`` means unlimited."""

    seconds: float | None = None
    nodes: int | None = None

    @classmethod
    def parse(cls, text: str | None) -> Budget:
        """``"600s"``, ``"10m"``, ``"1h"`` give a time limit; ``"50000"`` or ``"50000n"`` a node limit."""
        if not text:
            return cls()
        t = text.strip().lower()
        units = {"s": 1, "m": 60, "h": 3600}
        if t[-1] in units:
            return cls(seconds=float(t[:-1]) * units[t[-1]])
        if t.endswith("nodes"):
            t = t[:-5]
        elif t.endswith("n"):
            t = t[:-1]
        return cls(nodes=int(t))


@dataclass(frozen=True)
class SearchResult:
    best: Cycle
    length: int
    optimal: bool
    upper_bound: int
    nodes_explored: int
    elapsed: float = field(compare=False)


class _OutOfBudget(Exception):
    pass


def _blockpath_size(adj, allowed: list[bool], end: int, target: int) -> int:
    """Vertices lying on some end-target path inside ``allowed`` (both ends counted).

    Returns 0 when target is unreachable.  Uses a biconnected-component DFS
    rooted at ``end``: a vertex lies on such a path iff it belongs to a block
    on the block-cut tree path from end to target.
    """
    disc: dict[int, int] = {end: 0}
    low: dict[int, int] = {end: 0}
    parent: dict[int, int] = {end: -1}
    estack: list[tuple[int, int]] = []
    block_of_tree_edge: dict[int, int] = {}  # child vertex -> block id
    blocks: list[set[int]] = []
    t = 1
    stack = [(end, iter(adj[end]))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if not allowed[w] or w == parent[v]:
                continue
            if w not in disc:
                disc[w] = low[w] = t
                t += 1
                parent[w] = v
                estack.append((v, w))
                stack.append((w, iter(adj[w])))
                advanced = True
                break
            if disc[w] < disc[v]:
                estack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if advanced:
            continue
        stack.pop()
        p = parent[v]
        if p >= 0:
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                bid = len(blocks)
                verts = set()
                while True:
                    a, b = estack.pop()
                    verts.add(a)
                    verts.add(b)
                    if parent.get(b) == a and disc[b] > disc[a]:
                        block_of_tree_edge[b] = bid
                    if (a, b) == (p, v):
                        break
                blocks.append(verts)
    if target not in disc:
        return 0
    on_path: set[int] = set()
    seen_blocks: set[int] = set()
    x = target
    while x != end:
        bid = block_of_tree_edge[x]
        if bid not in seen_blocks:
            seen_blocks.add(bid)
            on_path |= blocks[bid]
        x = parent[x]
    return len(on_path)


def longest_cycle(graph: CubicGraph, budget: Budget | None = None) -> SearchResult:
    """Longest cycle by depth-first path extension with pruning.

    Cycles are searched by their smallest vertex ``s`` using only vertices
    >= s, extending paths in ascending neighbour order.  A partial path is cut
    when its length plus the number of free vertices that could still lie on
    a closing path back to ``s`` cannot beat the incumbent.  A path end with
    a single continuation is extended without re-bounding.

    When the budget runs out the best cycle so far is returned with
    ``optimal=False`` and a proven ``upper_bound``.
    """
    graph.require_closed()
    budget = budget or Budget()
    n = graph.n
    adj = graph.adjacency
    t0 = time.monotonic()
    deadline = t0 + budget.seconds if budget.seconds is not None else None
    node_limit = budget.nodes
    nodes = 0
    best: tuple[int, ...] = ()
    allowed = [True] * n
    on_path = [False] * n

    def tick():
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _OutOfBudget
        if deadline is not None and (nodes & 1023) == 0 and time.monotonic() > deadline:
            raise _OutOfBudget

    def extend(path: list[int], s: int, forced: bool):
        nonlocal best
        tick()
        end = path[-1]
        if not forced and len(path) > 1:
            # free vertices are allowed and off the path; end and s are endpoints
            saved = [(v, allowed[v]) for v in path[1:-1]]
            for v in path[1:-1]:
                allowed[v] = False
            reach = _blockpath_size(adj, allowed, end, s)
            for v, a in saved:
                allowed[v] = a
            if reach == 0 or len(path) + reach - 2 <= len(best):
                return
        nxt = []
        for w in adj[end]:
            if w == s:
                if len(path) >= 3 and end > path[1] and len(path) > len(best):
                    best = tuple(path)
            elif allowed[w] and not on_path[w]:
                nxt.append(w)
        for w in nxt:
            path.append(w)
            on_path[w] = True
            extend(path, s, forced=len(nxt) == 1 and s not in adj[w])
            on_path[w] = False
            path.pop()

    upper = n
    complete = True
    for s in range(n):
        for v in range(s):
            allowed[v] = False
        root_bound = _root_bound(adj, allowed, s)
        if root_bound <= len(best):
            continue
        on_path[s] = True
        try:
            extend([s], s, forced=False)
        except _OutOfBudget:
            complete = False
            upper = max(len(best), root_bound)
            on_path = [False] * n
            for later in range(s + 1, n):
                allowed[later - 1] = False
                upper = max(upper, _root_bound(adj, allowed, later))
            break
        on_path[s] = False
    if not best:
        if complete:
            raise NoCycle("graph has no cycle")
    if complete:
        upper = len(best)
    elapsed = time.monotonic() - t0
    cyc = Cycle(best).canonical() if best else None
    return SearchResult(cyc, len(best), complete, upper, nodes, elapsed)


def _root_bound(adj, allowed: list[bool], s: int) -> int:
    """Order of the largest block through s among allowed vertices.

    A cycle through s uses some edge sw and lies in the block containing it.
    """
    return max((_blockpath_size(adj, allowed, w, s) for w in adj[s] if allowed[w]), default=0)


# ---------------------------------------------------------------------------
# Claims and reports
# ---------------------------------------------------------------------------

_OPS = ("<=", ">=", "=")


@dataclass(frozen=True)
class Claim:
    """A claimed relation ``key op value``; ``asymptotic`` claims are never decided at finite n."""

    key: str
    op: str
    value: Fraction
    asymptotic: bool = False

    @classmethod
    def parse(cls, text: str) -> Claim:
        """Parse ``key=v``, ``key<=v``, ``key>=v`` or ``key=<=v``; values may be ``p/q`` or decimals."""
        t = text.strip()
        hits = [(t.find(op), op) for op in ("<=", ">=", "=") if op in t]
        if not hits:
            raise ValueError(f"claim {text!r} is not key=value")
        # "<=" also contains "=", so the earliest (then longest) match wins
        pos, op = min(hits, key=lambda h: (h[0], -len(h[1])))
        key, val = t[:pos], t[pos + len(op):]
        if op == "=":
            for inner in ("<=", ">="):
                if val.startswith(inner):
                    op, val = inner, val[2:]
        key = key.strip()
        asymptotic = key.endswith("-asymptotic")
        if asymptotic:
            key = key[: -len("-asymptotic")]
        val = val.strip().lower()
        if val in ("true", "false"):
            value = Fraction(int(val == "true"))
        else:
            value = Fraction(val)
        return cls(key, op, value, asymptotic)

    def text(self) -> str:
        suffix = "-asymptotic" if self.asymptotic else ""
        return f"{self.key}{suffix}{self.op}{self.value}"


def decide(op: str, value: Fraction, lo: Fraction, hi: Fraction) -> str:
    """Status of ``x op value`` when x is only known to lie in [lo, hi]."""
    if op == "<=":
        return "confirmed" if hi <= value else "refuted" if lo > value else "inconclusive"
    if op == ">=":
        return "confirmed" if lo >= value else "refuted" if hi < value else "inconclusive"
    if lo == hi:
        return "confirmed" if lo == value else "refuted"
    return "refuted" if value < lo or value > hi else "inconclusive"


@dataclass(frozen=True)
class ClaimOutcome:
    claim: Claim
    status: str  # confirmed | refuted | inconclusive
    note: str = ""


@dataclass(frozen=True)
class CircumferenceReport:
    n: int
    result: SearchResult
    outcomes: tuple[ClaimOutcome, ...] = ()

    @property
    def circumference(self) -> int:
        return self.result.length

    @property
    def deficit(self) -> int | None:
        return self.n - self.result.length if self.result.optimal else None

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.result.length, self.n)

    def records(self, *, deterministic: bool = False) -> list[str]:
        r = self.result
        cyc = r.best.text() if r.best else "-"
        lines = [f"n {self.n}"]
        if r.optimal:
            lines.append(f"circumference {r.length} cycle={cyc}")
            lines.append(f"deficit {self.n - r.length}")
        else:
            lines.append(f"circumference {r.length}..{r.upper_bound} cycle={cyc}")
            lines.append(f"deficit {self.n - r.upper_bound}..{self.n - r.length}")
        lines.append(f"optimal {'true' if r.optimal else 'false'}")
        lines.append(f"upper-bound {r.upper_bound}")
        ratio = self.ratio
        lines.append(f"ratio-exact {ratio.numerator}/{ratio.denominator}")
        lines.append(f"ratio-decimal {float(ratio):.6f}")
        lines.append(f"nodes {r.nodes_explored}")
        if not deterministic:
            lines.append(f"elapsed {r.elapsed:.3f}")
        for o in self.outcomes:
            lines.append(f"claim {o.claim.text()} {o.status}" + (f" {o.note}" if o.note else ""))
        return lines

    def table(self) -> str:
        r = self.result
        c = str(r.length) if r.optimal else f"{r.length}..{r.upper_bound}"
        rows = [
            ("order n", str(self.n)),
            ("circumference", c),
            ("optimal", "yes" if r.optimal else "no (budget)"),
            ("deficit", str(self.n - r.length) if r.optimal else f"{self.n - r.upper_bound}..{self.n - r.length}"),
            ("ratio", f"{self.ratio} = {float(self.ratio):.4f}"),
        ]
        rows += [(f"claim {o.claim.text()}", o.status + (f" ({o.note})" if o.note else "")) for o in self.outcomes]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def evaluate_claims(n: int, result: SearchResult, claims) -> tuple[ClaimOutcome, ...]:
    lo, hi = Fraction(result.length), Fraction(result.upper_bound)
    intervals = {
        "circumference": (lo, hi),
        "deficit": (n - hi, n - lo),
        "ratio": (lo / n, hi / n),
    }
    out = []
    for claim in claims:
        if claim.key not in intervals:
            raise ValueError(f"unknown circumference claim key {claim.key!r}")
        if claim.asymptotic:
            out.append(ClaimOutcome(claim, "inconclusive", "asymptotic claim; finite instance only"))
            continue
        a, b = intervals[claim.key]
        status = decide(claim.op, claim.value, a, b)
        note = "" if status != "inconclusive" else ("budget" if not result.optimal else "")
        out.append(ClaimOutcome(claim, status, note))
    return tuple(out)


def circumference_report(graph: CubicGraph, budget: Budget | None = None, claims=()) -> CircumferenceReport:
    """Longest-cycle search plus deficit, exact ratio and claim verdicts."""
    claims = [Claim.parse(c) if isinstance(c, str) else c for c in claims]
    result = longest_cycle(graph, budget)
    return CircumferenceReport(graph.n, result, evaluate_claims(graph.n, result, claims))
