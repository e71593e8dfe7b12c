"""Theorem verification reports and their engine-free certificate checker.

A report is plain JSON. Rationals are lowest-terms ``"p/q"`` strings (or
``"inf"``), vertex labels are 1-based, edges are ``[u, v]`` pairs of labels.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from typing import Any, Optional

from . import families as fam
from .graph import (
    Edge,
    VertexSet,
    components,
    degree_profile,
    delete_edge,
    independence_number,
    members,
    popcount,
    vertex_connectivity,
    vertex_set,
)
from .io import read_graph6, write_graph6
from .ratio import ceil_ratio, format_ratio, is_finite, less_than, parse_ratio
from .engine import MinimalityReport, ToughnessResult, is_minimally_tough, toughness

SCHEMA = "toughlab.theorem-report/1"
DEFAULT_TIMEOUT = 600.0

PASS, FAIL, TIMEOUT, ERROR = "PASS", "FAIL", "TIMEOUT", "ERROR"


class ReportFormatError(ValueError):
    """The report JSON does not follow the schema."""


def labels(mask: Optional[VertexSet]) -> Optional[list[int]]:
    return None if mask is None else [v + 1 for v in members(mask)]


def edge_labels(edge: Edge) -> list[int]:
    return [edge[0] + 1, edge[1] + 1]


def toughness_json(result: ToughnessResult, n: int, elapsed_ms: Optional[float] = None) -> dict[str, Any]:
    out: dict[str, Any] = {
        "tau": format_ratio(result.value),
        "n": n,
        "witness": labels(result.witness),
        "components": result.witness_components,
    }
    if elapsed_ms is not None:
        out["elapsed_ms"] = round(elapsed_ms, 3)
    return out


def minimality_json(report: MinimalityReport) -> dict[str, Any]:
    return {
        "tau": format_ratio(report.tau),
        "minimally_tough": report.minimally_tough,
        "per_edge": [
            {
                "edge": edge_labels(v.edge),
                "tau_dropped": v.tau_dropped,
                "witness": labels(v.witness),
                "components": v.components,
                "canonical": v.canonical,
            }
            for v in report.per_edge
        ],
    }


@dataclass
class TheoremReport:
    fid: fam.FamilyId
    status: str
    graph6: str = ""
    computed_tau: Any = None
    expected_tau: Any = None
    minimally_tough: bool = False
    alpha: Optional[int] = None
    kappa: Optional[int] = None
    kriesell: Optional[fam.KriesellGap] = None
    tight: Optional[fam.WitnessCut] = None
    engine_witness: Optional[ToughnessResult] = None
    minimality: Optional[MinimalityReport] = None
    elapsed_ms: Optional[dict[str, float]] = None
    message: str = ""

    @property
    def tau_matches(self) -> bool:
        return self.computed_tau is not None and self.computed_tau == self.expected_tau

    def to_json(self) -> dict[str, Any]:
        fid = self.fid
        out: dict[str, Any] = {
            "family": fid.kind.value,
            "k": fid.k,
            "order": fid.order,
            "status": self.status,
        }
        if self.status in (TIMEOUT, ERROR) and self.computed_tau is None:
            out["message"] = self.message
            return out
        out.update(
            graph6=self.graph6,
            computed_tau=format_ratio(self.computed_tau),
            expected_tau=format_ratio(self.expected_tau),
            tau_matches=self.tau_matches,
            minimally_tough=self.minimally_tough,
            alpha=self.alpha,
            kappa=self.kappa,
            kriesell=self.kriesell._asdict() if self.kriesell else None,
            tight_cut=_cut_json(self.tight.cut, self.tight.expected_size, self.tight.expected_components),
            engine_witness=(
                _cut_json(self.engine_witness.witness, popcount(self.engine_witness.witness),
                          self.engine_witness.witness_components)
                if self.engine_witness and self.engine_witness.witness is not None
                else None
            ),
            edge_certificates=[
                {
                    "edge": edge_labels(v.edge),
                    "cut": labels(v.witness),
                    "size": popcount(v.witness) if v.witness is not None else None,
                    "components": v.components,
                    "canonical": v.canonical,
                    "tau_dropped": v.tau_dropped,
                }
                for v in (self.minimality.per_edge if self.minimality else [])
            ],
            elapsed_ms={k: round(v, 3) for k, v in (self.elapsed_ms or {}).items()},
        )
        if self.message:
            out["message"] = self.message
        return out


def _cut_json(cut: VertexSet, size: int, comps: int) -> dict[str, Any]:
    return {"cut": labels(cut), "size": size, "components": comps}


def passes(report: TheoremReport) -> bool:
    if report.status in (TIMEOUT, ERROR) or report.kriesell is None:
        return False
    return report.tau_matches and report.minimally_tough and (report.fid.k < 5 or report.kriesell.violates)


def verify_family(fid: fam.FamilyId, canonical: bool = True, jobs: Optional[int] = 1) -> TheoremReport:
    """Run every check of the family theorem at one ``k``.

    Toughness always comes from the full engine. The per-edge phase tries the
    canonical witnesses first unless ``canonical`` is false.
    """
    elapsed: dict[str, float] = {}

    def timed(phase: str, fn, *args, **kwargs):
        t0 = time.perf_counter()
        value = fn(*args, **kwargs)
        elapsed[phase] = (time.perf_counter() - t0) * 1000
        return value

    g = timed("construct", fam.family_graph, fid)
    result = timed("toughness", toughness, g, jobs=jobs)
    alpha = timed("alpha", independence_number, g)
    kappa = timed("kappa", vertex_connectivity, g)
    hint = fam.canonical_hints(fid) if canonical else None
    minimality = timed("minimality", is_minimally_tough, g, witness_hint=hint, jobs=jobs)
    report = TheoremReport(
        fid=fid,
        status=FAIL,
        graph6=write_graph6(g),
        computed_tau=result.value,
        expected_tau=fam.expected_toughness(fid),
        minimally_tough=minimality.minimally_tough,
        alpha=alpha,
        kappa=kappa,
        kriesell=fam.kriesell_gap(fid),
        tight=fam.tight_cut(fid),
        engine_witness=result,
        minimality=minimality,
        elapsed_ms=elapsed,
    )
    report.status = PASS if passes(report) else FAIL
    return report


def _child(conn, fid: fam.FamilyId, canonical: bool, jobs: int) -> None:
    try:
        conn.send(("ok", verify_family(fid, canonical, jobs).to_json()))
    except Exception as exc:  # reported per k, never swallowed
        conn.send(("error", f"{type(exc).__name__}: {exc}"))
    finally:
        conn.close()


def run_verification(
    kind: fam.FamilyKind,
    ks: list[int],
    canonical: bool = True,
    jobs: int = 1,
    timeout: Optional[float] = DEFAULT_TIMEOUT,
) -> list[dict[str, Any]]:
    """Verify each ``k`` and return JSON reports ordered by ``k``.

    With a timeout each ``k`` runs in its own process and is killed when the
    budget runs out, yielding an explicit TIMEOUT entry. Up to ``jobs``
    values of ``k`` run at once.
    """
    fids = [fam.family_id(kind, k) for k in ks]
    if not timeout:
        return [verify_family(fid, canonical, jobs).to_json() for fid in fids]

    ctx = multiprocessing.get_context("fork")
    slots = max(1, min(jobs, len(fids)))
    engine_jobs = jobs if slots == 1 else 1
    results: dict[int, dict[str, Any]] = {}
    pending = list(fids)
    running: list[tuple[fam.FamilyId, Any, Any, float]] = []
    while pending or running:
        while pending and len(running) < slots:
            fid = pending.pop(0)
            parent, child = ctx.Pipe(duplex=False)
            proc = ctx.Process(target=_child, args=(child, fid, canonical, engine_jobs))
            proc.start()
            child.close()
            running.append((fid, proc, parent, time.monotonic() + timeout))
        still = []
        for fid, proc, conn, deadline in running:
            if conn.poll(0.05):
                try:
                    tag, payload = conn.recv()
                except EOFError:
                    tag, payload = "error", "worker exited without a result"
                proc.join()
                results[fid.k] = payload if tag == "ok" else _stub(fid, ERROR, payload)
            elif not proc.is_alive():
                results[fid.k] = _stub(fid, ERROR, f"worker died with exit code {proc.exitcode}")
            elif time.monotonic() > deadline:
                proc.terminate()
                proc.join()
                results[fid.k] = _stub(fid, TIMEOUT, f"exceeded {timeout:g} s")
            else:
                still.append((fid, proc, conn, deadline))
        running = still
    return [results[fid.k] for fid in fids]


def _stub(fid: fam.FamilyId, status: str, message: str) -> dict[str, Any]:
    return TheoremReport(fid, status, message=message).to_json()


def report_document(kind: fam.FamilyKind, ks: list[int], canonical: bool, reports: list[dict]) -> dict:
    return {
        "schema": SCHEMA,
        "family": kind.value,
        "k_values": ks,
        "canonical_witnesses": canonical,
        "all_pass": all(r["status"] == PASS for r in reports),
        "reports": reports,
    }


def format_table(reports: list[dict[str, Any]]) -> str:
    header = ("k", "n", "tau", "expected", "alpha", "kappa", "minimal", "kriesell", "status")
    rows = []
    for r in reports:
        if "computed_tau" not in r:
            rows.append((str(r["k"]), str(r["order"]), "-", "-", "-", "-", "-", "-", r["status"]))
            continue
        kr = r["kriesell"]
        if kr["violates"]:
            gap = f"{kr['ceil_2t']} < {kr['degree']} VIOLATED"
        else:
            gap = f"{kr['ceil_2t']} = {kr['degree']} holds" if kr["ceil_2t"] == kr["degree"] else \
                f"{kr['ceil_2t']} vs {kr['degree']} holds"
        rows.append((
            str(r["k"]), str(r["order"]), _short(r["computed_tau"]), _short(r["expected_tau"]),
            str(r["alpha"]), str(r["kappa"]), "yes" if r["minimally_tough"] else "no", gap, r["status"],
        ))
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in rows]
    return "\n".join(line.rstrip() for line in lines)


def _short(text: str) -> str:
    # "2/1" -> "2" for the human table only
    return text[:-2] if text.endswith("/1") else text


# --- certificate checking (no toughness engine) -------------------------------


def _require(entry: dict, key: str, kind: type | tuple[type, ...]):
    if key not in entry:
        raise ReportFormatError(f"missing field {key!r}")
    value = entry[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ReportFormatError(f"field {key!r} has type {type(value).__name__}")
    return value


def _cut_from_labels(cut_labels: Any, n: int) -> VertexSet:
    if not isinstance(cut_labels, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in cut_labels):
        raise ReportFormatError(f"cut must be a list of integer labels, got {cut_labels!r}")
    if len(set(cut_labels)) != len(cut_labels):
        raise ReportFormatError(f"cut has repeated labels: {cut_labels}")
    if any(not 1 <= x <= n for x in cut_labels):
        raise ReportFormatError(f"cut label out of range 1..{n}: {cut_labels}")
    return vertex_set(x - 1 for x in cut_labels)


def certify_entry(entry: dict[str, Any]) -> list[str]:
    """Re-check one report entry. Returns human-readable failures (empty if sound)."""
    if not isinstance(entry, dict):
        raise ReportFormatError("report entry is not an object")
    kind_text = _require(entry, "family", str)
    k = _require(entry, "k", int)
    status = _require(entry, "status", str)
    where = f"{kind_text} k={k}"
    try:
        fid = fam.family_id(kind_text, k)
    except ValueError as exc:
        return [f"{where}: {exc}"]
    if status != PASS:
        return [f"{where}: status {status}, nothing certified"]

    failures: list[str] = []

    def check(ok: bool, what: str) -> None:
        if not ok:
            failures.append(f"{where}: {what}")

    try:
        g = read_graph6(_require(entry, "graph6", str))
    except ValueError as exc:
        raise ReportFormatError(f"{where}: bad graph6: {exc}") from exc
    check(_require(entry, "order", int) == g.n == fid.order, "order mismatch")
    if g != fam.family_graph(fid):
        failures.append(f"{where}: graph6 is not the family graph for this k")
        return failures

    try:
        computed = parse_ratio(_require(entry, "computed_tau", str))
        expected = parse_ratio(_require(entry, "expected_tau", str))
    except ValueError as exc:
        raise ReportFormatError(f"{where}: {exc}") from exc
    formula = fam.expected_toughness(fid)
    check(expected == formula, f"expected_tau {format_ratio(expected)} != formula {format_ratio(formula)}")
    check(_require(entry, "tau_matches", bool) == (computed == expected), "tau_matches flag inconsistent")
    check(computed == expected, f"computed_tau {format_ratio(computed)} != expected {format_ratio(expected)}")
    if not is_finite(computed):
        failures.append(f"{where}: computed_tau is infinite")
        return failures

    # tight cut: an upper bound on toughness that must hit the claimed value
    for field_name in ("tight_cut", "engine_witness"):
        cut_entry = entry.get(field_name)
        if cut_entry is None:
            check(field_name != "tight_cut", "tight_cut missing")
            continue
        cut = _cut_from_labels(cut_entry.get("cut"), g.n)
        size, comps = popcount(cut), components(g, cut)
        check(size == cut_entry.get("size"), f"{field_name} size {cut_entry.get('size')} != {size}")
        check(comps == cut_entry.get("components"), f"{field_name} components {cut_entry.get('components')} != {comps}")
        check(comps >= 2 and size * computed.denominator == computed.numerator * comps,
              f"{field_name} {labels(cut)} has ratio {size}/{comps}, not {format_ratio(computed)}")
    tight = fam.tight_cut(fid)
    if entry.get("tight_cut"):
        check(_cut_from_labels(entry["tight_cut"].get("cut"), g.n) == tight.cut, "tight_cut is not the family's tight cut")

    # one strict certificate per edge
    certs = _require(entry, "edge_certificates", list)
    seen: set[Edge] = set()
    for cert in certs:
        if not isinstance(cert, dict):
            raise ReportFormatError(f"{where}: edge certificate is not an object")
        pair = cert.get("edge")
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
            raise ReportFormatError(f"{where}: bad edge {pair!r}")
        u, v = sorted(x - 1 for x in pair)
        if not g.has_edge(u, v):
            failures.append(f"{where}: certificate for non-edge {pair}")
            continue
        if (u, v) in seen:
            failures.append(f"{where}: duplicate certificate for edge {pair}")
        seen.add((u, v))
        if cert.get("cut") is None:
            failures.append(f"{where}: edge {pair} has no certifying cut")
            continue
        cut = _cut_from_labels(cert["cut"], g.n)
        size, comps = popcount(cut), components(delete_edge(g, u, v), cut)
        check(size == cert.get("size") and comps == cert.get("components"),
              f"edge {pair}: declared ({cert.get('size')}, {cert.get('components')}) but cut {labels(cut)} gives ({size}, {comps})")
        check(comps >= 2 and less_than(size, comps, computed),
              f"edge {pair}: cut {labels(cut)} gives {size}/{comps}, not below {format_ratio(computed)}")
        if cert.get("canonical"):
            w = fam.edge_witness(fid, (u, v))
            check((w.cut, w.expected_size, w.expected_components) == (cut, size, comps),
                  f"edge {pair}: canonical certificate differs from the family witness")
    missing = sorted(set(g.edges()) - seen)
    check(not missing, f"{len(missing)} edges lack certificates, e.g. {[edge_labels(e) for e in missing[:3]]}")
    check(_require(entry, "minimally_tough", bool) and not missing, "minimal toughness not established")

    alpha = independence_number(g)
    kappa = vertex_connectivity(g)
    check(_require(entry, "alpha", int) == alpha, f"alpha {entry['alpha']} != {alpha}")
    check(alpha <= k - 1, f"alpha {alpha} exceeds k-1")
    check(_require(entry, "kappa", int) == kappa, f"kappa {entry['kappa']} != {kappa}")
    check(kappa >= ceil_ratio(2 * computed), f"kappa {kappa} below ceil(2 tau)")

    kr = _require(entry, "kriesell", dict)
    profile = degree_profile(g)
    ceil_2t = ceil_ratio(2 * computed)
    check(profile.is_regular and kr.get("degree") == profile.min_degree, "kriesell degree mismatch")
    check(kr.get("ceil_2t") == ceil_2t, f"kriesell ceil_2t {kr.get('ceil_2t')} != {ceil_2t}")
    check(kr.get("violates") == (ceil_2t < profile.min_degree), "kriesell violates flag wrong")
    check(k < 5 or ceil_2t < profile.min_degree, "no Kriesell violation at k >= 5")
    return failures


def certify_document(doc: Any) -> list[str]:
    if not isinstance(doc, dict):
        raise ReportFormatError("report is not a JSON object")
    if doc.get("schema") != SCHEMA:
        raise ReportFormatError(f"unknown schema {doc.get('schema')!r}")
    reports = _require(doc, "reports", list)
    if not reports:
        raise ReportFormatError("report has no entries")
    failures: list[str] = []
    for entry in reports:
        failures += certify_entry(entry)
    return failures

