"""Pruned enumeration of Weil candidates, batch classification, and the
small-field elliptic point-counting oracle.

Enumeration walks coefficient tuples (a_1..a_g) depth-first in lexicographic
order, bounding each level with coefficient_interval, and emits the candidates
that pass the exact Weil test.  Batch classification streams one report per
candidate with deterministic ordering; two runs of the same job are
byte-identical.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field, replace

from .hondatate import IsogenyClassReport, classify
from .weil import WeilCandidate, coefficient_interval, is_prime, is_weil

DEFAULT_NODE_CAP = 10**8


class CapExceeded(RuntimeError):
    """A full enumeration was refused because the search-space estimate is too big."""


@dataclass(frozen=True)
class EnumerationJob:
    """One enumeration or sampling run over the g-dimensional coefficient box."""

    p: int
    n: int
    g: int
    mode: str = "full"  # "full" | "sample"
    count: int = 0  # sample size (sample mode)
    seed: int = 0
    pruning_depth: int | None = None  # None: refine all levels; 0: baseline bounds
    node_cap: int = DEFAULT_NODE_CAP
    acknowledge_cap: bool = False
    sample_box: str = "conditioned"  # "conditioned" | "baseline"
    a1_range: tuple | None = None  # partition override for the top level

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.mode not in ("full", "sample"):
            raise ValueError("mode must be 'full' or 'sample'")
        if self.mode == "sample" and self.count < 1:
            raise ValueError("sample mode needs a positive count")
        if self.sample_box not in ("conditioned", "baseline"):
            raise ValueError("sample_box must be 'conditioned' or 'baseline'")


def estimate_nodes(p: int, n: int, g: int) -> int:
    """Size of the baseline coefficient box (the full-mode cap estimate)."""
    total = 1
    for k in range(1, g + 1):
        lo, hi = coefficient_interval(p, n, g, (0,) * (k - 1), depth=0)
        total *= hi - lo + 1
    return total


def _check_cap(job: EnumerationJob):
    if job.mode == "full" and not job.acknowledge_cap:
        est = estimate_nodes(job.p, job.n, job.g)
        if est > job.node_cap:
            raise CapExceeded(
                f"full enumeration estimate {est} exceeds the cap {job.node_cap}; "
                "use sample mode or acknowledge the cap explicitly"
            )


def _iter_leaves(job: EnumerationJob):
    """All leaf tuples of the pruned DFS tree, in lexicographic order."""
    p, n, g = job.p, job.n, job.g
    depth = job.pruning_depth
    prefix: list = []

    def rec(k):
        lo, hi = coefficient_interval(p, n, g, tuple(prefix), depth=depth)
        if k == 1 and job.a1_range is not None:
            lo = max(lo, job.a1_range[0])
            hi = min(hi, job.a1_range[1])
        for a in range(lo, hi + 1):
            prefix.append(a)
            if k == g:
                yield tuple(prefix)
            else:
                yield from rec(k + 1)
            prefix.pop()

    yield from rec(1)


def enumerate_weil(job: EnumerationJob):
    """Candidates passing the Weil test, in lexicographic (a_1..a_g) order.

    >>> [c.a[0] for c in enumerate_weil(EnumerationJob(5, 1, 1))]
    [-4, -3, -2, -1, 0, 1, 2, 3, 4]
    """
    _check_cap(job)
    if job.mode != "full":
        raise ValueError("enumerate_weil runs full jobs; use sample_candidates for sampling")
    for a in _iter_leaves(job):
        c = WeilCandidate(job.p, job.n, job.g, a)
        if is_weil(c):
            yield c


def sample_candidates(job: EnumerationJob):
    """Stream of (candidate, weil) draws for a sample job, deterministic in the seed.

    The conditioned box draws a_k uniformly from the power-sum interval of the
    prefix (the baseline box is so sparse at g = 5 that uniform draws almost
    never hit a Weil tuple); infeasible prefixes count as failed draws."""
    if job.mode != "sample":
        raise ValueError("sample_candidates needs a sample-mode job")
    rng = random.Random(job.seed)
    p, n, g = job.p, job.n, job.g
    depth = 0 if job.sample_box == "baseline" else None
    for _ in range(job.count):
        a: list = []
        for _k in range(g):
            lo, hi = coefficient_interval(p, n, g, tuple(a), depth=depth)
            if lo > hi:
                break
            a.append(rng.randint(lo, hi))
        if len(a) < g:
            yield None, False
            continue
        c = WeilCandidate(p, n, g, tuple(a))
        yield c, is_weil(c)


def partition_job(job: EnumerationJob, workers: int):
    """Split a full job into jobs over contiguous a_1 ranges.  Concatenating
    the partition streams in order reproduces the single-worker stream."""
    if job.mode != "full":
        return [job]
    lo, hi = coefficient_interval(job.p, job.n, job.g, (), depth=job.pruning_depth)
    if job.a1_range is not None:
        lo, hi = max(lo, job.a1_range[0]), min(hi, job.a1_range[1])
    total = hi - lo + 1
    workers = max(1, min(workers, total))
    out = []
    start = lo
    for w in range(workers):
        size = total // workers + (1 if w < total % workers else 0)
        if size == 0:
            continue
        out.append(replace(job, a1_range=(start, start + size - 1), acknowledge_cap=True))
        start += size
    return out


# ---------------------------------------------------------------------------
# Batch classification
# ---------------------------------------------------------------------------


@dataclass
class ClassificationSummary:
    """Aggregate counts for one classification run."""

    job: EnumerationJob
    per_case: dict = field(default_factory=dict)
    per_e_dim: dict = field(default_factory=dict)
    visited: int = 0
    weil: int = 0
    wall_time: float = 0.0

    @property
    def acceptance_rate(self) -> float:
        return self.weil / self.visited if self.visited else 0.0

    def _count(self, report):
        if not report.weil:
            key = "not-weil"
        elif report.simple_char_poly:
            key = report.case_label  # I(1), II(k), or non-dim5
        elif report.candidate.g == 5:
            key = "rejected"
        else:
            key = "not-simple"
        self.per_case[key] = self.per_case.get(key, 0) + 1
        if report.simple_char_poly:
            ed = (report.multiplicity, report.dimension)
            self.per_e_dim[ed] = self.per_e_dim.get(ed, 0) + 1

    def check_counting_invariant(self):
        return sum(self.per_case.values()) == self.visited


def classify_all(job: EnumerationJob):
    """Classify every candidate of the job; returns (summary, reports).

    Reports appear in deterministic (lexicographic or draw) order and cover
    Weil candidates only; non-Weil visits are tallied in the summary.  The
    internal theorem cross-checks run on every classified candidate and raise
    on violation, so a completed run certifies them.
    """
    t0 = time.time()
    summary = ClassificationSummary(job=job)
    reports = []
    if job.mode == "full":
        _check_cap(job)
        for a in _iter_leaves(job):
            c = WeilCandidate(job.p, job.n, job.g, a)
            summary.visited += 1
            if not is_weil(c):
                summary.per_case["not-weil"] = summary.per_case.get("not-weil", 0) + 1
                continue
            summary.weil += 1
            report = classify(c)
            reports.append(report)
            summary._count(report)
    else:
        for c, ok in sample_candidates(job):
            summary.visited += 1
            if not ok:
                summary.per_case["not-weil"] = summary.per_case.get("not-weil", 0) + 1
                continue
            summary.weil += 1
            report = classify(c)
            reports.append(report)
            summary._count(report)
    summary.wall_time = time.time() - t0
    assert summary.check_counting_invariant()
    return summary, reports


# ---------------------------------------------------------------------------
# Serialization (frozen record schema)
# ---------------------------------------------------------------------------

RECORD_FIELDS = ("p", "n", "g", "a", "weil", "simple", "e", "dim", "case_label", "invariants", "tags")
CSV_HEADER = ",".join(RECORD_FIELDS)


def _invariant_str(inv) -> str:
    v = inv.value
    return f"{'real' if inv.place == 'real' else 'p'}:{v.numerator}/{v.denominator}"


def report_to_record(report: IsogenyClassReport) -> dict:
    c = report.candidate
    return {
        "p": c.p,
        "n": c.n,
        "g": c.g,
        "a": list(c.a),
        "weil": report.weil,
        "simple": report.simple_char_poly,
        "e": report.multiplicity,
        "dim": report.dimension,
        "case_label": report.case_label,
        "invariants": [_invariant_str(i) for i in report.invariants],
        "tags": list(report.interpretation_tags),
    }


def record_to_json_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), sort_keys=False)


def record_to_csv_line(record: dict) -> str:
    cells = []
    for name in RECORD_FIELDS:
        v = record[name]
        if isinstance(v, list):
            cells.append(" ".join(str(x) for x in v))
        elif v is None:
            cells.append("")
        elif isinstance(v, bool):
            cells.append("true" if v else "false")
        else:
            cells.append(str(v))
    return ",".join('"' + c + '"' if "," in c else c for c in cells)


def summary_to_json(summary: ClassificationSummary) -> str:
    job = summary.job
    doc = {
        "p": job.p,
        "n": job.n,
        "g": job.g,
        "mode": job.mode,
        "seed": job.seed if job.mode == "sample" else None,
        "visited": summary.visited,
        "weil": summary.weil,
        "acceptance_rate": round(summary.acceptance_rate, 8),
        "per_case": {k: summary.per_case[k] for k in sorted(summary.per_case)},
        "per_e_dim": {f"e={e},dim={d}": v for (e, d), v in sorted(summary.per_e_dim.items())},
        "wall_time_s": round(summary.wall_time, 3),
    }
    return json.dumps(doc, separators=(",", ":"), sort_keys=False)


# ---------------------------------------------------------------------------
# Elliptic point-counting oracle (small prime fields)
# ---------------------------------------------------------------------------


def elliptic_trace_oracle(p: int) -> Counter:
    """Traces p + 1 - #E(F_p) over all nonsingular Weierstrass curves.

    Long Weierstrass form for p in {2, 3}, short form otherwise; points are
    counted naively.  Returns the multiset of traces; its support is the
    ground truth for the g = 1 enumeration over F_p.

    >>> sorted(elliptic_trace_oracle(2))
    [-2, -1, 0, 1, 2]
    """
    if not is_prime(p) or p > 97:
        raise ValueError("oracle is for prime fields with p <= 97")
    traces: Counter = Counter()
    if p in (2, 3):
        rng = range(p)
        for a1 in rng:
            for a2 in rng:
                for a3 in rng:
                    for a4 in rng:
                        for a6 in rng:
                            b2 = a1 * a1 + 4 * a2
                            b4 = 2 * a4 + a1 * a3
                            b6 = a3 * a3 + 4 * a6
                            b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
                            disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
                            if disc % p == 0:
                                continue
                            count = 1
                            for x in rng:
                                for y in rng:
                                    if (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % p == 0:
                                        count += 1
                            traces[p + 1 - count] += 1
        return traces
    squares = {(y * y) % p for y in range(p)}
    for a in range(p):
        for b in range(p):
            if (4 * a**3 + 27 * b * b) % p == 0:
                continue
            count = 1
            for x in range(p):
                rhs = (x**3 + a * x + b) % p
                if rhs == 0:
                    count += 1
                elif rhs in squares:
                    count += 2
            traces[p + 1 - count] += 1
    return traces
