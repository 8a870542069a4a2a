from fractions import Fraction
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cubicdeficit.circumference import Budget, Claim, circumference_report, decide, longest_cycle
from cubicdeficit.codecs import read_graph6_file
from cubicdeficit.constructions import block_b, double_h, k4, petersen, ring_of_blocks
from cubicdeficit.errors import HasDangles, NoCycle
from cubicdeficit.graph import build_graph, enumerate_cycles
from cubicdeficit.reports import CHAIN_B_ASYMPTOTE, chain_b_records, chain_b_rows, chain_b_table

CORPUS = Path(__file__).parent / "data" / "connected_cubic_n4-12.g6"


def random_cubic(n, seed):
    g = nx.random_regular_graph(3, n, seed=seed)
    return build_graph(n, g.edges())


cubic_graphs = st.builds(random_cubic, st.sampled_from([6, 8, 10, 12, 14]), st.integers(0, 10**6))


def test_k4_is_hamiltonian():
    r = longest_cycle(k4())
    assert r.length == 4 and r.optimal and r.upper_bound == 4
    assert r.best.is_valid_in(k4())


def test_petersen_circumference():
    r = longest_cycle(petersen())
    assert (r.length, r.optimal, r.upper_bound) == (9, True, 9)
    assert r.best.is_valid_in(petersen())


@pytest.mark.parametrize("m", [2, 3])
def test_chain_b_formula(m):
    g, _ = ring_of_blocks(block_b(), m)
    r = longest_cycle(g)
    assert r.optimal and r.length == 7 * m + 2
    assert r.best.is_valid_in(g)


def test_no_cycle_and_dangles():
    with pytest.raises(HasDangles):
        longest_cycle(block_b().graph)
    forest = build_graph(4, [(0, 1), (1, 2), (2, 3)], subcubic=True)
    with pytest.raises(NoCycle):
        longest_cycle(forest)


def test_matches_enumeration_on_corpus():
    for g in read_graph6_file(CORPUS):
        r = longest_cycle(g)
        assert r.optimal and r.best.is_valid_in(g)
        assert r.length == max(len(c) for c in enumerate_cycles(g)), g.edges


@given(cubic_graphs)
@settings(max_examples=25, deadline=None)
def test_matches_enumeration_random(g):
    r = longest_cycle(g)
    assert r.optimal and r.best.is_valid_in(g)
    assert r.length == max(len(c) for c in enumerate_cycles(g))


@given(st.integers(1, 400), st.integers(1, 400))
@settings(max_examples=20, deadline=None)
def test_anytime_monotone_in_node_budget(a, b):
    g, _ = double_h()
    lo, hi = sorted((a, b))
    r1 = longest_cycle(g, Budget(nodes=lo))
    r2 = longest_cycle(g, Budget(nodes=hi))
    assert r1.length <= r2.length
    for r in (r1, r2):
        assert r.length <= r.upper_bound
        assert r.best is None or r.best.is_valid_in(g)


def test_budget_exhaustion_keeps_a_valid_bound():
    g, _ = double_h()
    full = longest_cycle(g)
    part = longest_cycle(g, Budget(nodes=50))
    assert full.optimal and full.length == 32
    assert not part.optimal
    assert part.length <= full.length <= part.upper_bound <= g.n


def test_search_is_deterministic():
    g, _ = ring_of_blocks(block_b(), 3)
    assert longest_cycle(g) == longest_cycle(g)


@pytest.mark.parametrize(
    "text, budget",
    [
        ("600s", Budget(seconds=600.0)),
        ("10m", Budget(seconds=600.0)),
        ("1h", Budget(seconds=3600.0)),
        ("50000", Budget(nodes=50000)),
        ("50000n", Budget(nodes=50000)),
        (None, Budget()),
    ],
)
def test_budget_parse(text, budget):
    assert Budget.parse(text) == budget


@pytest.mark.parametrize(
    "text, key, op, value, asym",
    [
        ("circumference=23", "circumference", "=", Fraction(23), False),
        ("deficit>=5", "deficit", ">=", Fraction(5), False),
        ("ratio<=7/8", "ratio", "<=", Fraction(7, 8), False),
        ("ratio-asymptotic=<=0.875", "ratio", "<=", Fraction(7, 8), True),
        ("colorable=false", "colorable", "=", Fraction(0), False),
    ],
)
def test_claim_parse(text, key, op, value, asym):
    c = Claim.parse(text)
    assert (c.key, c.op, c.value, c.asymptotic) == (key, op, value, asym)


def test_claim_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Claim.parse("circumference")


@pytest.mark.parametrize(
    "op, value, lo, hi, expected",
    [
        ("<=", 5, 3, 5, "confirmed"),
        ("<=", 5, 6, 9, "refuted"),
        ("<=", 5, 4, 6, "inconclusive"),
        (">=", 5, 5, 9, "confirmed"),
        (">=", 5, 1, 4, "refuted"),
        ("=", 5, 5, 5, "confirmed"),
        ("=", 5, 4, 4, "refuted"),
        ("=", 5, 4, 6, "inconclusive"),
        ("=", 9, 4, 6, "refuted"),
    ],
)
def test_decide(op, value, lo, hi, expected):
    assert decide(op, Fraction(value), Fraction(lo), Fraction(hi)) == expected


def test_report_chain_b_m4():
    g, _ = ring_of_blocks(block_b(), 4)
    rep = circumference_report(g, claims=["circumference=30", "deficit=2", "ratio=15/16"])
    assert (rep.n, rep.circumference, rep.deficit, rep.ratio) == (32, 30, 2, Fraction(15, 16))
    assert [o.status for o in rep.outcomes] == ["confirmed"] * 3
    recs = rep.records(deterministic=True)
    assert "ratio-exact 15/16" in recs and "ratio-decimal 0.937500" in recs
    assert "deficit 2" in recs and not any(r.startswith("elapsed") for r in recs)


def test_report_asymptotic_claim_is_inconclusive():
    g, _ = ring_of_blocks(block_b(), 4)
    rep = circumference_report(g, claims=["ratio-asymptotic<=0.875"])
    assert rep.outcomes[0].status == "inconclusive"
    # the finite claim is simply false at m=4
    assert circumference_report(g, claims=["ratio<=0.875"]).outcomes[0].status == "refuted"


def test_report_under_budget_is_inconclusive():
    g, _ = double_h()
    rep = circumference_report(g, Budget(nodes=30), ["deficit>=2"])
    assert not rep.result.optimal and rep.deficit is None
    assert rep.outcomes[0].status in ("inconclusive", "confirmed")
    assert any(r.startswith("circumference ") and ".." in r for r in rep.records())


def test_deficit_semantics():
    for g in (k4(), petersen(), double_h()[0]):
        rep = circumference_report(g)
        assert rep.deficit + rep.circumference == g.n


def test_report_table_mentions_values():
    rep = circumference_report(petersen(), claims=["deficit>=1"])
    text = rep.table()
    assert "circumference" in text and "9/10" in text and "confirmed" in text


def test_chain_b_report_rows():
    rows = chain_b_rows([2, 3, 4])
    assert [r.ratio for r in rows] == [Fraction(1), Fraction(23, 24), Fraction(15, 16)]
    assert all(r.matches for r in rows)
    recs = chain_b_records(rows, deterministic=True)
    assert recs[-2] == "asymptote 7/8 0.875 cyclic-connectivity=4"
    assert recs[-1] == "trend decreasing-toward-asymptote"
    assert all(r.ratio > CHAIN_B_ASYMPTOTE for r in rows)
    assert "15/16" in chain_b_table(rows)
