"""Ratio reports over generated families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circumference import Budget, SearchResult, longest_cycle
from .constructions import block_b, ring_of_blocks

# circumference ratio (7m+2)/8m of the block-B chain tends to this value
CHAIN_B_ASYMPTOTE = Fraction(7, 8)


@dataclass(frozen=True)
class FamilyRow:
    m: int
    n: int
    result: SearchResult
    expected: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.result.length, self.n)

    @property
    def matches(self) -> bool:
        return self.result.optimal and self.result.length == self.expected


def chain_b_rows(ms, budget: Budget | None = None) -> list[FamilyRow]:
    rows = []
    for m in ms:
        g, _ = ring_of_blocks(block_b(), m)
        rows.append(FamilyRow(m, g.n, longest_cycle(g, budget), 7 * m + 2))
    return rows


def chain_b_records(rows: list[FamilyRow], *, deterministic: bool = False) -> list[str]:
    lines = []
    for r in rows:
        ratio = r.ratio
        c = r.result.length if r.result.optimal else f"{r.result.length}..{r.result.upper_bound}"
        parts = [
            f"m={r.m}",
            f"n={r.n}",
            f"circumference={c}",
            f"optimal={'true' if r.result.optimal else 'false'}",
            f"expected={r.expected}",
            f"ratio-exact={ratio.numerator}/{ratio.denominator}",
            f"ratio-decimal={float(ratio):.6f}",
            f"formula={'match' if r.matches else 'mismatch'}",
        ]
        if not deterministic:
            parts.append(f"elapsed={r.result.elapsed:.3f}")
        lines.append("row " + " ".join(parts))
    a = CHAIN_B_ASYMPTOTE
    trend = all(x.ratio > y.ratio > a for x, y in zip(rows, rows[1:])) if len(rows) > 1 else bool(rows) and rows[0].ratio > a
    lines.append(f"asymptote {a.numerator}/{a.denominator} {float(a):.3f} cyclic-connectivity=4")
    lines.append(f"trend {'decreasing-toward-asymptote' if trend else 'not-monotone'}")
    return lines


def chain_b_table(rows: list[FamilyRow]) -> str:
    head = f"{'m':>3} {'n':>4} {'c(G)':>7} {'7m+2':>5} {'ratio':>7} {'decimal':>8}"
    out = [head, "-" * len(head)]
    for r in rows:
        c = str(r.result.length) if r.result.optimal else f"{r.result.length}+?"
        out.append(
            f"{r.m:>3} {r.n:>4} {c:>7} {r.expected:>5} {str(r.ratio):>7} {float(r.ratio):>8.4f}"
        )
    out.append("asymptote: 7/8 = 0.875 (ratio (7m+2)/8m decreases toward it as m grows)")
    return "\n".join(out)
