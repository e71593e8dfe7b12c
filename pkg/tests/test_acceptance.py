"""Exit criteria. Each test prints one ``[ACCEPT] ... PASS|FAIL`` line.

All comparisons are exact rational equalities or strict inequalities;
runtime budgets are asserted alongside.
"""

import json
import random
import time
from fractions import Fraction

import networkx as nx
import pytest

from conftest import brute_alpha, from_nx, random_graph
from toughlab import engine
from toughlab.engine import is_minimally_tough, toughness, toughness_oracle
from toughlab.families import (
    FamilyKind,
    canonical_hints,
    edge_witness,
    expected_toughness,
    family_graph,
    family_id,
    kriesell_gap,
    tight_cut,
)
from toughlab.graph import (
    Graph,
    circulant,
    components,
    delete_edge,
    independence_number,
    popcount,
    relabel,
    rotate_set,
    vertex_connectivity,
)
from toughlab.io import read_graph6, write_graph6
from toughlab.report import certify_document, report_document, run_verification

FOUR, SIX = FamilyKind.FOUR_REGULAR, FamilyKind.SIX_REGULAR
FOUR_KS = range(3, 11)
SIX_KS = range(3, 7)


@pytest.fixture
def announce(capsys):
    def emit(name: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[ACCEPT] {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    return emit


def _theorem_sweep(kind, ks):
    """Toughness per k plus canonical-witness minimality, with timings."""
    rows, t_tau, t_min = [], 0.0, 0.0
    for k in ks:
        fid = family_id(kind, k)
        g = family_graph(fid)
        t0 = time.perf_counter()
        tau = toughness(g).value
        t1 = time.perf_counter()
        report = is_minimally_tough(g, witness_hint=canonical_hints(fid))
        t2 = time.perf_counter()
        t_tau += t1 - t0
        t_min += t2 - t1  # includes the toughness call made inside is_minimally_tough
        rows.append((k, tau, expected_toughness(fid), report.minimally_tough,
                     all(v.canonical for v in report.per_edge)))
    return rows, t_tau, t_min


def test_theorem_four_regular(announce):
    rows, t_tau, t_min = _theorem_sweep(FOUR, FOUR_KS)
    exact = all(tau == Fraction(k + 1, k - 1) == exp for k, tau, exp, _, _ in rows)
    minimal = all(m and canon for *_, m, canon in rows)

    t0 = time.perf_counter()
    general = all(is_minimally_tough(family_graph(family_id(FOUR, k))).minimally_tough for k in range(3, 7))
    t_general = time.perf_counter() - t0

    ok = exact and minimal and general and t_tau < 10 and t_general < 60
    announce("4-regular family k=3..10: tau=(k+1)/(k-1), minimally tough", ok,
             f"tau {t_tau:.2f}s, canonical minimality {t_min:.2f}s, general per-edge k=3..6 {t_general:.2f}s")
    assert exact and minimal and general
    assert t_tau < 10 and t_general < 60


def test_theorem_four_regular_canonical_minimality_budget(announce):
    graphs = [(family_id(FOUR, k), family_graph(family_id(FOUR, k))) for k in FOUR_KS]
    taus = {fid: expected_toughness(fid) for fid, _ in graphs}
    t0 = time.perf_counter()
    ok = True
    for fid, g in graphs:
        hint = canonical_hints(fid)
        for e in g.edges():
            ok &= engine.tau_drops_below(g, e, taus[fid], hint=hint(e)).canonical
    elapsed = time.perf_counter() - t0
    announce("4-regular per-edge minimality via canonical witnesses < 1 s", ok and elapsed < 1,
             f"{elapsed:.3f}s over {sum(g.num_edges for _, g in graphs)} edges")
    assert ok and elapsed < 1


def test_theorem_six_regular(announce):
    t0 = time.perf_counter()
    rows, t_tau, t_min = _theorem_sweep(SIX, SIX_KS)
    elapsed = time.perf_counter() - t0
    exact = all(tau == Fraction(2 * k, k - 1) == exp for k, tau, exp, _, _ in rows)
    minimal = all(m and canon for *_, m, canon in rows)

    t1 = time.perf_counter()
    general = all(is_minimally_tough(family_graph(family_id(SIX, k))).minimally_tough for k in SIX_KS)
    t_general = time.perf_counter() - t1

    ok = exact and minimal and general and elapsed < 300
    announce("6-regular family k=3..6: tau=2k/(k-1), minimally tough", ok,
             f"{elapsed:.2f}s (tau {t_tau:.2f}s); general per-edge search also {t_general:.2f}s")
    assert exact and minimal and general and elapsed < 300


def test_theorem_six_regular_k7_slow_tier(announce):
    reports = run_verification(SIX, [7], canonical=True, timeout=600)
    r = reports[0]
    ok = r["status"] == "PASS" and r["computed_tau"] == "7/3"
    announce("6-regular family k=7 (n=22) under the 10-minute timeout", ok,
             f"status {r['status']}, tau {r.get('computed_tau')}, {sum(r.get('elapsed_ms', {}).values()):.0f} ms")
    assert ok


@pytest.mark.slow
def test_theorem_six_regular_k7_general_search(announce):
    t0 = time.perf_counter()
    report = is_minimally_tough(family_graph(family_id(SIX, 7)))
    elapsed = time.perf_counter() - t0
    ok = report.minimally_tough and report.tau == Fraction(7, 3) and not any(v.canonical for v in report.per_edge)
    announce("6-regular k=7 minimality by general per-edge search", ok, f"{elapsed:.1f}s")
    assert ok and elapsed < 600


def test_kriesell_violation(announce):
    ok = True
    for k in range(5, 11):
        ok &= tuple(kriesell_gap(family_id(FOUR, k))) == (4, 3, True)
        ok &= tuple(kriesell_gap(family_id(SIX, k))) == (6, 5, True)
    for k in (3, 4):
        ok &= not kriesell_gap(family_id(FOUR, k)).violates
        ok &= not kriesell_gap(family_id(SIX, k)).violates
    announce("Kriesell gap: violated for k=5..10, not for k=3,4", ok, "exact ceilings")
    assert ok


def test_witness_certificates(announce, tmp_path, monkeypatch):
    docs = []
    for kind, ks in ((FOUR, list(FOUR_KS)), (SIX, list(range(3, 8)))):
        docs.append(report_document(kind, ks, True, run_verification(kind, ks, timeout=0)))
    path = tmp_path / "reports.json"
    path.write_text(json.dumps(docs))

    # direct check of the listed (size, components) pairs and strict ratios
    direct = True
    for kind, ks in ((FOUR, FOUR_KS), (SIX, range(3, 8))):
        for k in ks:
            fid = family_id(kind, k)
            g, t = family_graph(fid), expected_toughness(fid)
            tc = tight_cut(fid)
            direct &= Fraction(popcount(tc.cut), components(g, tc.cut)) == t
            for e in g.edges():
                w = edge_witness(fid, e)
                c = components(delete_edge(g, *e), w.cut)
                direct &= (popcount(w.cut), c) == (w.expected_size, w.expected_components)
                direct &= Fraction(popcount(w.cut), c) < t

    def disabled(*a, **kw):
        raise AssertionError("toughness engine must not run during certification")
    for name in ("toughness", "is_t_tough", "tau_drops_below", "is_minimally_tough", "toughness_oracle"):
        monkeypatch.setattr(engine, name, disabled)
    failures = [f for doc in json.loads(path.read_text()) for f in certify_document(doc)]
    ok = direct and not failures
    announce("witness certificates re-checked without the engine", ok,
             f"{sum(len(d['reports']) for d in docs)} reports, {len(failures)} failures")
    assert ok, failures[:5]


def test_claim_independence_bound(announce):
    ok = True
    for k in range(3, 11):
        for kind in (FOUR, SIX):
            ok &= independence_number(family_graph(family_id(kind, k))) <= k - 1
    exact = all(
        brute_alpha(family_graph(family_id(kind, k))) == independence_number(family_graph(family_id(kind, k))) == k - 1
        for kind in (FOUR, SIX) for k in (3, 4)
    )
    announce("independence number <= k-1 for k=3..10 (= k-1 by brute force at k=3,4)", ok and exact, "exact")
    assert ok and exact


def test_oracle_equivalence(announce, random_corpus):
    t0 = time.perf_counter()
    family = [family_graph(family_id(kind, k)) for kind, ks in ((FOUR, range(3, 8)), (SIX, range(3, 6))) for k in ks]
    assert all(g.n <= 16 for g in family)
    named = [Graph.cycle(n) for n in range(4, 11)] + [
        from_nx(nx.complete_bipartite_graph(2, 3)),
        from_nx(nx.complete_bipartite_graph(3, 3)),
        from_nx(nx.petersen_graph()),
    ]
    pinned = [Fraction(1)] * 7 + [Fraction(2, 3), Fraction(1), Fraction(4, 3)]
    mismatches = 0
    for g in family + random_corpus + named:
        mismatches += toughness(g).value != toughness_oracle(g).value
    pins = all(toughness(g).value == p for g, p in zip(named, pinned))
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and pins and elapsed < 120 and len(random_corpus) == 500
    announce("engine == exhaustive oracle (families n<=16, 500 random, named)", ok,
             f"{len(family) + len(random_corpus) + len(named)} graphs, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def test_property_suites(announce, random_corpus):
    t0 = time.perf_counter()
    mono = sandwich = True
    for g in random_corpus:
        tau = toughness(g).value
        for e in g.edges():
            mono &= toughness(delete_edge(g, *e)).value <= tau
        if not g.is_complete():
            kappa, alpha = vertex_connectivity(g), independence_number(g)
            sandwich &= Fraction(kappa, alpha) <= tau <= Fraction(kappa, 2)

    rng = random.Random(50)
    rotation = True
    for _ in range(50):
        n = rng.randint(5, 18)
        ds = rng.sample(range(1, n // 2 + 1), rng.randint(1, max(1, n // 4)))
        g = circulant(n, ds)
        r = toughness(g)
        perm = list(range(n))
        rng.shuffle(perm)
        rotation &= toughness(relabel(g, perm)).value == r.value
        if r.witness is not None:
            moved = rotate_set(r.witness, rng.randrange(n), n)
            rotation &= Fraction(popcount(moved), components(g, moved)) == r.value

    rng = random.Random(1000)
    round_trip = all(
        read_graph6(write_graph6(g)) == g
        for g in (random_graph(rng, rng.randint(1, 20), rng.random()) for _ in range(1000))
    )
    elapsed = time.perf_counter() - t0
    ok = mono and sandwich and rotation and round_trip and elapsed < 120
    announce("properties: edge monotonicity, sandwich bounds, rotation invariance, graph6 round trip", ok,
             f"{elapsed:.1f}s")
    assert ok
