"""Command-line front end.

Exit codes: 0 success or all claims confirmed, 1 a claim refuted or a
counterexample found, 2 usage or input error, 3 some claim inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import codecs
from .circumference import Budget, Claim, circumference_report, decide
from .constructions import (
    RingSpec,
    block_b,
    double_h,
    excise_adjacent_pair,
    join_h,
    petersen,
    ring_of_blocks,
    ring_with_spine,
    theorem3_graph,
)
from .errors import CapExceeded, GraphError
from .graph import CubicGraph
from .reports import chain_b_records, chain_b_rows, chain_b_table
from .verifiers import (
    cyclic_edge_connectivity,
    edges_text,
    lemma1_check,
    resistance,
    shortest_cycle,
    three_edge_color,
)

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

FAMILIES = ("petersen", "chain-b", "theorem3", "ring", "ring-spine", "double-h", "block-b", "h")


class UsageError(Exception):
    pass


def _parse_ms(text: str | None) -> list[int]:
    if text is None:
        raise UsageError("--m is required")
    out = []
    for part in text.split(","):
        if "-" in part or ".." in part:
            a, b = part.replace("..", "-").split("-")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


def _load_graph(path: str) -> CubicGraph:
    text = Path(path).read_text()
    if text.lstrip().startswith("block") or "\nblock " in text:
        return codecs.block_decode(text).graph
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError(f"{path}: empty graph file")
    return codecs.graph6_decode(lines[0])


def _seed(args) -> CubicGraph:
    return _load_graph(args.seed) if args.seed else petersen()


def _generate(args):
    """Returns (graph or None, partition or None, block or None)."""
    fam = args.family
    if fam == "petersen":
        return petersen(), None, None
    if fam == "block-b":
        return None, None, block_b()
    if fam == "h":
        h1 = excise_adjacent_pair(_seed(args), args.u, args.v, name="H1")
        return None, None, join_h(h1, h1)
    if fam == "double-h":
        h1 = excise_adjacent_pair(_seed(args), args.u, args.v, name="H1")
        g, p = double_h(join_h(h1, h1))
        return g, p, None
    if fam == "theorem3":
        g, p = theorem3_graph(args.g, _seed(args), args.u, args.v)
        return g, p, None
    ms = _parse_ms(args.m)
    if len(ms) != 1:
        raise UsageError("gen takes a single --m")
    m = ms[0]
    if fam == "chain-b":
        g, p = ring_of_blocks(block_b(), RingSpec(m))
        return g, p, None
    if not args.block:
        raise UsageError(f"--family {fam} needs --block FILE")
    blk = codecs.block_decode(Path(args.block).read_text())
    if fam == "ring":
        g, p = ring_of_blocks(blk, RingSpec(m))
    else:
        g, p = ring_with_spine(blk, m)
    return g, p, None


def cmd_gen(args, out) -> int:
    graph, part, block = _generate(args)
    if block is not None:
        text = codecs.block_encode(block)
    elif graph.dangles:
        raise UsageError("generated graph still has dangles; graph6 cannot store it")
    else:
        text = codecs.graph6_encode(graph) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    if part is not None and args.partition:
        codecs.write_partition(part, args.partition)
    n = block.order if block is not None else graph.n
    print(f"generated {args.family} n={n}", file=sys.stderr)
    return EXIT_OK


def _status_code(statuses: list[str]) -> int:
    if "refuted" in statuses:
        return EXIT_REFUTED
    if "inconclusive" in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _exact_claim(claim: Claim, observed) -> str:
    if observed is None:
        return "inconclusive"
    v = Fraction(observed)
    return decide(claim.op, claim.value, v, v)


def cmd_verify(args, out) -> int:
    graph = _load_graph(args.graph)
    claims = [Claim.parse(c) for c in args.claim]
    by_key: dict[str, list[Claim]] = {}
    for c in claims:
        by_key.setdefault(c.key, []).append(c)
    known = {"order", "girth", "colorable", "resistance", "cyclic-connectivity", "circumference", "deficit", "ratio"}
    unknown = set(by_key) - known
    if unknown:
        raise UsageError(f"unknown claim keys: {', '.join(sorted(unknown))}")
    records: list[str] = [f"order {graph.n}"]
    statuses: list[str] = []
    claim_lines: list[str] = []

    def settle(key: str, observed):
        for c in by_key.get(key, []):
            st = _exact_claim(c, observed)
            statuses.append(st)
            claim_lines.append(f"claim {c.text()} {st}")

    settle("order", graph.n)
    if args.girth or "girth" in by_key:
        cyc = shortest_cycle(graph)
        records.append(f"girth {len(cyc)} cycle={cyc.text()}")
        settle("girth", len(cyc))
    if args.colorable or "colorable" in by_key:
        col = three_edge_color(graph)
        if col is None:
            records.append("colorable false")
        else:
            records.append(f"colorable true coloring={col.text()}")
        settle("colorable", int(col is not None))
    if args.resistance or "resistance" in by_key:
        res = resistance(graph, args.max_k, threads=args.threads)
        if res.k is None:
            records.append(f"resistance >{args.max_k} budget-exceeded")
            for c in by_key.get("resistance", []):
                st = decide(c.op, c.value, Fraction(args.max_k + 1), Fraction(10**9))
                statuses.append(st)
                claim_lines.append(f"claim {c.text()} {st}")
        else:
            records.append(f"resistance {res.k} witness={edges_text(res.witness)} exhausted=true")
            settle("resistance", res.k)
    if args.cyclic_connectivity or "cyclic-connectivity" in by_key:
        cc = cyclic_edge_connectivity(graph)
        cert = f"cut={edges_text(cc.witness)}" if cc.value is not None else ""
        records.append(f"cyclic-connectivity {cc.text()} {cert}".rstrip())
        settle("cyclic-connectivity", cc.value)
    circ_claims = [c for k in ("circumference", "deficit", "ratio") for c in by_key.get(k, [])]
    if args.circumference or circ_claims:
        rep = circumference_report(graph, Budget.parse(args.budget), circ_claims)
        lines = rep.records(deterministic=args.deterministic)
        if args.format == "text":
            records.append(rep.table())
        else:
            records.extend(line for line in lines if not line.startswith("claim ") and not line.startswith("n "))
        for o in rep.outcomes:
            statuses.append(o.status)
            claim_lines.append(f"claim {o.claim.text()} {o.status}" + (f" {o.note}" if o.note else ""))
    out.write("\n".join(records + claim_lines) + "\n")
    return _status_code(statuses)


def cmd_report(args, out) -> int:
    budget = Budget.parse(args.budget)
    if args.graph:
        rep = circumference_report(_load_graph(args.graph), budget, args.claim)
        text = rep.table() if args.format == "text" else "\n".join(rep.records(deterministic=args.deterministic))
        out.write(text + "\n")
        return _status_code([o.status for o in rep.outcomes])
    if args.family != "chain-b":
        if args.family is None:
            raise UsageError("report needs a graph file or --family chain-b")
        graph, _, block = _generate(args)
        if graph is None:
            raise UsageError("report needs a closed graph family")
        rep = circumference_report(graph, budget, args.claim)
        text = rep.table() if args.format == "text" else "\n".join(rep.records(deterministic=args.deterministic))
        out.write(text + "\n")
        return _status_code([o.status for o in rep.outcomes])
    rows = chain_b_rows(_parse_ms(args.m), budget)
    if args.format == "text":
        out.write(chain_b_table(rows) + "\n")
    else:
        out.write("\n".join(chain_b_records(rows, deterministic=args.deterministic)) + "\n")
    if any(not r.result.optimal for r in rows):
        return EXIT_INCONCLUSIVE
    return EXIT_OK if all(r.matches for r in rows) else EXIT_REFUTED


def cmd_lemma1(args, out) -> int:
    graph = _load_graph(args.graph)
    if not args.partition:
        raise UsageError("lemma1 needs --partition FILE")
    part = codecs.read_partition(args.partition)
    try:
        verdict = lemma1_check(graph, part, args.k, args.cap)
    except CapExceeded as exc:
        out.write(f"lemma1 inconclusive cycle-cap={exc.cap}\n")
        return EXIT_INCONCLUSIVE
    out.write(f"lemma1 k={args.k} {verdict.text()}\n")
    return EXIT_OK if verdict.holds else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicdeficit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "records"), default="records")
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--deterministic", action="store_true")
        sp.add_argument("--budget", help="time (600s, 10m, 1h) or node count (50000 / 50000n)")
        sp.add_argument("--claim", action="append", default=[], metavar="KEY=VALUE")

    def family(sp):
        sp.add_argument("--family", choices=FAMILIES)
        sp.add_argument("--m", help="copy count; report accepts lists and ranges like 2-4")
        sp.add_argument("--g", type=int, default=5)
        sp.add_argument("--seed", metavar="FILE")
        sp.add_argument("--u", type=int, default=0)
        sp.add_argument("--v", type=int, default=1)
        sp.add_argument("--block", metavar="FILE")

    g = sub.add_parser("gen", help="generate a family member")
    family(g)
    g.add_argument("--out", metavar="FILE")
    g.add_argument("--partition", metavar="FILE")
    common(g)

    v = sub.add_parser("verify", help="verify properties of a graph6 or block file")
    v.add_argument("graph")
    for flag in ("--girth", "--colorable", "--resistance", "--cyclic-connectivity", "--circumference"):
        v.add_argument(flag, action="store_true")
    v.add_argument("--max-k", type=int, default=3)
    common(v)

    r = sub.add_parser("report", help="circumference/ratio report for a graph or family")
    r.add_argument("graph", nargs="?")
    family(r)
    common(r)

    lm = sub.add_parser("lemma1", help="check that cycles leaving a copy miss >= k of its vertices")
    lm.add_argument("graph")
    lm.add_argument("--partition", metavar="FILE")
    lm.add_argument("--k", type=int, required=True)
    lm.add_argument("--cap", type=int, default=None, help="maximum number of cycles to enumerate")
    common(lm)
    return p


COMMANDS = {"gen": cmd_gen, "verify": cmd_verify, "report": cmd_report, "lemma1": cmd_lemma1}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "gen" and not args.family:
            raise UsageError("gen needs --family")
        return COMMANDS[args.command](args, out)
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
