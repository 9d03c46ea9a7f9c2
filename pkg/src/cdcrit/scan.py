"""Bulk evaluation of graphs against the registered structure checks.

Input is a graph6 stream or an internal labeled enumeration; output is one
JSON record per graph, in input order, plus a sweep summary. Records
serialize with sorted keys and fixed separators, so two runs over the same
input with the same flags are byte-identical regardless of worker count:
the input is cut into fixed-size chunks and results merge back in order.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .domination import is_k_gamma_c_critical
from .enumeration import enumerate_connected_graphs, graph_from_edge_mask
from .fastscan import critical3_gc_masks
from .graphs import BudgetExceededError, Graph, Graph6Error, parse_graph6, to_graph6
from .invariants import profile
from .theorems import CHECKS, FAIL, NA, PASS, CheckReport, Facts, run_check

DEFAULT_CHECKS = ("pm0", "k", "mp1", "mp2")
PROBE_CHECKS = ("open-problem",)
DEFAULT_RECORD_CHUNK = 1024

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 2
EXIT_INPUT = 3
EXIT_BUDGET = 4

# every graph meeting the open-problem hypotheses has delta >= alpha+1 >= 4,
# so an enumeration probe may discard lower minimum degrees up front
PROBE_MIN_DEGREE = 4


class ScanInputError(ValueError):
    """A graph6 line failed to parse; carries the 1-based line number."""

    def __init__(self, line_no: int, text: str, reason: str):
        super().__init__(f"line {line_no}: {reason} ({text!r})")
        self.line_no = line_no
        self.text = text
        self.reason = reason


def classification_bucket(alpha: int, kappa: int, critical3: bool) -> str | None:
    if not critical3:
        return None
    if alpha - kappa >= 2:
        return "alpha=kappa+2"
    if alpha - kappa == 1:
        return "alpha=kappa+1"
    return "alpha<=kappa"


def evaluate_graph(g6: str, g: Graph, check_ids, budgets: dict) -> dict:
    """Full record for one graph: profile, criticality, requested checks.

    A check that overruns its budget is recorded not-applicable with reason
    "budget" rather than aborting the sweep; summaries count these.
    """
    prof = profile(g)
    critical = g.is_connected and is_k_gamma_c_critical(g).is_critical
    facts = Facts(
        g, critical3=critical, alpha=prof.alpha, kappa=prof.kappa, delta=prof.delta
    )
    checks = []
    for cid in check_ids:
        try:
            rep = run_check(cid, g, facts, budgets)
        except BudgetExceededError as exc:
            rep = CheckReport(cid, NA, {"reason": "budget", "detail": str(exc)})
        checks.append(rep.to_dict())
    return {
        "graph6": g6,
        "profile": prof.to_dict(),
        "critical3": critical,
        "checks": checks,
        "classification": classification_bucket(prof.alpha, prof.kappa, critical),
    }


def record_line(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _record_is_budget_na(entry: dict) -> bool:
    return entry["status"] == NA and (entry["witness"] or {}).get("reason") == "budget"


def _scan_chunk(payload) -> list[dict]:
    """Worker: evaluate one chunk of graph6 lines, keep records per mode."""
    g6_list, check_ids, budgets, mode = payload
    records = []
    for g6 in g6_list:
        record = evaluate_graph(g6, parse_graph6(g6), check_ids, budgets)
        if mode == "critical3" and not record["critical3"]:
            continue
        if mode == "probe":
            entry = record["checks"][0]
            if entry["status"] == NA and not _record_is_budget_na(entry):
                continue
        records.append(record)
    return records


@dataclass
class SweepSummary:
    scanned: int = 0
    emitted: int = 0
    skipped_lines: int = 0
    budget_skips: int = 0
    buckets: dict = field(default_factory=dict)
    check_counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    applicable: int | None = None
    verdict: str | None = None
    input_digest: str = ""
    wall_time: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        if self.counterexamples:
            return EXIT_COUNTEREXAMPLE
        if self.budget_skips:
            return EXIT_BUDGET
        return EXIT_OK

    def to_dict(self) -> dict:
        out = {
            "scanned": self.scanned,
            "emitted": self.emitted,
            "skipped_lines": self.skipped_lines,
            "budget_skips": self.budget_skips,
            "buckets": dict(sorted(self.buckets.items())),
            "check_counts": self.check_counts,
            "counterexamples": self.counterexamples,
            "input_digest": self.input_digest,
            "wall_time": self.wall_time,
            "exit_code": self.exit_code,
        }
        if self.applicable is not None:
            out["applicable"] = self.applicable
        if self.verdict is not None:
            out["verdict"] = self.verdict
        if self.notes:
            out["notes"] = self.notes
        return out

    def lines(self) -> list[str]:
        out = [
            f"scanned={self.scanned} emitted={self.emitted} "
            f"skipped={self.skipped_lines} budget_skips={self.budget_skips}"
        ]
        if self.buckets:
            parts = [f"{k}:{v}" for k, v in sorted(self.buckets.items())]
            out.append("buckets " + " ".join(parts))
        for cid, counts in self.check_counts.items():
            out.append(
                f"check {cid} pass={counts[PASS]} fail={counts[FAIL]} na={counts[NA]}"
            )
        if self.counterexamples:
            out.append("counterexamples " + " ".join(self.counterexamples))
        if self.verdict is not None:
            out.append(self.verdict)
        for key, value in self.notes.items():
            out.append(f"note {key}={value}")
        out.append(f"digest={self.input_digest}")
        out.append(f"wall={self.wall_time:.3f}s")
        return out


def _absorb(summary: SweepSummary, record: dict) -> None:
    summary.emitted += 1
    bucket = record["classification"]
    if bucket is not None:
        summary.buckets[bucket] = summary.buckets.get(bucket, 0) + 1
    any_fail = False
    for entry in record["checks"]:
        counts = summary.check_counts.setdefault(
            entry["check"], {PASS: 0, FAIL: 0, NA: 0}
        )
        counts[entry["status"]] += 1
        if entry["status"] == FAIL:
            any_fail = True
        elif _record_is_budget_na(entry):
            summary.budget_skips += 1
    if any_fail:
        summary.counterexamples.append(record["graph6"])


def _batched(iterable, size: int):
    batch = []
    for item in iterable:
        batch.append(item)
        if len(batch) >= size:
            yield batch
            batch = []
    if batch:
        yield batch


def _check_ids_or_raise(check_ids) -> tuple[str, ...]:
    ids = tuple(check_ids)
    for cid in ids:
        if cid not in CHECKS:
            raise ValueError(
                f"unknown check {cid!r}; known: {', '.join(sorted(CHECKS))}"
            )
    return ids


def _run_batches(
    g6_iter, check_ids, budgets, mode, jobs, chunk, sink, summary
) -> None:
    payloads = ((batch, check_ids, budgets, mode) for batch in _batched(g6_iter, chunk))
    if jobs <= 1:
        results = map(_scan_chunk, payloads)
        for records in results:
            for record in records:
                _absorb(summary, record)
                if sink is not None:
                    sink(record)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for records in pool.map(_scan_chunk, payloads):
                for record in records:
                    _absorb(summary, record)
                    if sink is not None:
                        sink(record)


def _finish_probe(summary: SweepSummary) -> None:
    counts = summary.check_counts.get("open-problem", {PASS: 0, FAIL: 0, NA: 0})
    summary.applicable = counts[PASS] + counts[FAIL]
    if summary.counterexamples:
        summary.verdict = "counterexample found: " + " ".join(summary.counterexamples)
    elif summary.budget_skips:
        summary.verdict = (
            f"inconclusive: {summary.budget_skips} graphs exceeded the search budget"
        )
    else:
        summary.verdict = (
            f"no counterexample among {summary.applicable} applicable graphs"
        )


def _stream_g6(lines, skip_bad: bool, digest, summary: SweepSummary):
    line_no = 0
    for raw in lines:
        line_no += 1
        text = raw.strip()
        if not text:
            continue
        digest.update(text.encode("utf-8", "replace") + b"\n")
        try:
            parse_graph6(text)
        except (Graph6Error, ValueError) as exc:
            if skip_bad:
                summary.skipped_lines += 1
                continue
            raise ScanInputError(line_no, text, str(exc)) from exc
        summary.scanned += 1
        yield text


def scan_stream(
    lines,
    check_ids=DEFAULT_CHECKS,
    budgets: dict | None = None,
    filter_spec: str = "none",
    jobs: int = 1,
    chunk: int = DEFAULT_RECORD_CHUNK,
    skip_bad: bool = False,
    sink=None,
) -> SweepSummary:
    """Evaluate a graph6 line stream; returns the summary, records via sink."""
    if filter_spec not in ("none", "critical3"):
        raise ValueError(f"unknown filter {filter_spec!r}; known: none, critical3")
    check_ids = _check_ids_or_raise(check_ids)
    budgets = dict(budgets or {})
    summary = SweepSummary()
    digest = hashlib.sha256()
    start = time.monotonic()
    mode = filter_spec if filter_spec == "critical3" else "all"
    g6_iter = _stream_g6(lines, skip_bad, digest, summary)
    _run_batches(g6_iter, check_ids, budgets, mode, jobs, chunk, sink, summary)
    summary.input_digest = "sha256:" + digest.hexdigest()
    summary.wall_time = time.monotonic() - start
    return summary


def _critical_candidate_g6(n: int, dedup: bool, summary: SweepSummary):
    """graph6 lines of the vectorized criticality screen's survivors.

    The screen implements the full criticality definition bit-parallel and
    the cross-check tests pin it to the per-graph solver exhaustively, so
    restricting evaluation to its survivors loses no critical graph; every
    survivor is still re-verified exactly inside evaluate_graph.
    """
    from .graphs import canonical_form

    stats: dict = {}
    masks = critical3_gc_masks(n, stats=stats)
    summary.scanned = stats["connected"]
    summary.notes["candidates"] = int(masks.size)
    summary.notes["screen"] = "critical3"
    seen: set[str] = set()
    for mask in masks:
        g = graph_from_edge_mask(n, int(mask))
        if dedup:
            key = canonical_form(g).key
            if key in seen:
                continue
            seen.add(key)
        yield to_graph6(g)


def scan_enumeration(
    n: int,
    check_ids=DEFAULT_CHECKS,
    budgets: dict | None = None,
    filter_spec: str = "none",
    dedup: bool = False,
    jobs: int = 1,
    chunk: int = DEFAULT_RECORD_CHUNK,
    sink=None,
) -> SweepSummary:
    """Evaluate every connected labeled graph on n vertices (dedup optional).

    With the critical3 filter the sweep runs the vectorized screen first and
    evaluates only its survivors, which is what makes order-7 sweeps cheap.
    """
    if filter_spec not in ("none", "critical3"):
        raise ValueError(f"unknown filter {filter_spec!r}; known: none, critical3")
    check_ids = _check_ids_or_raise(check_ids)
    budgets = dict(budgets or {})
    summary = SweepSummary()
    summary.input_digest = "sha256:" + hashlib.sha256(
        f"enumerate:n={n}:dedup={dedup}:filter={filter_spec}".encode()
    ).hexdigest()
    start = time.monotonic()
    if filter_spec == "critical3":
        g6_iter = _critical_candidate_g6(n, dedup, summary)
        _run_batches(
            g6_iter, check_ids, budgets, "critical3", jobs, chunk, sink, summary
        )
    else:

        def counted():
            for g in enumerate_connected_graphs(n, dedup=dedup):
                summary.scanned += 1
                yield to_graph6(g)

        _run_batches(counted(), check_ids, budgets, "all", jobs, chunk, sink, summary)
    summary.wall_time = time.monotonic() - start
    return summary


def probe_stream(
    lines,
    budgets: dict | None = None,
    jobs: int = 1,
    chunk: int = DEFAULT_RECORD_CHUNK,
    skip_bad: bool = False,
    sink=None,
) -> SweepSummary:
    """Open-problem probe over a graph6 stream.

    Emits records only for graphs the question applies to (plus any budget
    skips, which are never silently dropped) and sets a final verdict line.
    """
    budgets = dict(budgets or {})
    summary = SweepSummary()
    digest = hashlib.sha256()
    start = time.monotonic()
    g6_iter = _stream_g6(lines, skip_bad, digest, summary)
    _run_batches(g6_iter, PROBE_CHECKS, budgets, "probe", jobs, chunk, sink, summary)
    summary.input_digest = "sha256:" + digest.hexdigest()
    _finish_probe(summary)
    summary.wall_time = time.monotonic() - start
    return summary


def probe_enumeration(
    n: int,
    budgets: dict | None = None,
    jobs: int = 1,
    chunk: int = DEFAULT_RECORD_CHUNK,
    sink=None,
) -> SweepSummary:
    """Open-problem probe over every connected labeled graph on n vertices.

    Candidates come from the criticality screen under a minimum-degree floor
    of PROBE_MIN_DEGREE; graphs below the floor cannot meet the problem's
    hypotheses, so the restriction changes no verdict.
    """
    budgets = dict(budgets or {})
    summary = SweepSummary()
    summary.input_digest = "sha256:" + hashlib.sha256(
        f"probe:n={n}:min_deg={PROBE_MIN_DEGREE}".encode()
    ).hexdigest()
    start = time.monotonic()
    stats: dict = {}
    masks = critical3_gc_masks(n, min_deg=PROBE_MIN_DEGREE, stats=stats)
    summary.scanned = stats["connected"]
    summary.notes["candidates"] = int(masks.size)
    summary.notes["prefilter_min_degree"] = PROBE_MIN_DEGREE
    g6_iter = (to_graph6(graph_from_edge_mask(n, int(m))) for m in masks)
    _run_batches(g6_iter, PROBE_CHECKS, budgets, "probe", jobs, chunk, sink, summary)
    _finish_probe(summary)
    summary.wall_time = time.monotonic() - start
    return summary


__all__ = [
    "DEFAULT_CHECKS",
    "DEFAULT_RECORD_CHUNK",
    "EXIT_BUDGET",
    "EXIT_COUNTEREXAMPLE",
    "EXIT_INPUT",
    "EXIT_OK",
    "PROBE_CHECKS",
    "PROBE_MIN_DEGREE",
    "ScanInputError",
    "SweepSummary",
    "classification_bucket",
    "evaluate_graph",
    "probe_enumeration",
    "probe_stream",
    "record_line",
    "scan_enumeration",
    "scan_stream",
]
