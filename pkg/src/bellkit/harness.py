"""Cross-verification battery and benchmark runner behind ``bellkit verify``/``bench``."""

from __future__ import annotations

import csv
import hashlib
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bell import ALGORITHMS, AlgorithmId, bell, enumerate_partitions
from .polyalgebra import Polynomial, degree_weight, evaluate_at_ones
from .reference import published
from .render import canonical_bytes, render_text
from .stirling import StirlingMethod, stirling

CSV_HEADER = ("n", "k", "algo", "term_count", "wall_time_ns", "digest")


def digest(p: Polynomial) -> str:
    return hashlib.sha256(canonical_bytes(p)).hexdigest()


@dataclass(frozen=True)
class ComputationReport:
    algo: AlgorithmId
    n: int
    k: int
    term_count: int
    wall_time_ns: int
    digest: str

    def row(self) -> tuple:
        return (self.n, self.k, str(self.algo), self.term_count, self.wall_time_ns, self.digest)


def run_one(n: int, k: int, algo: AlgorithmId, repetitions: int = 1) -> ComputationReport:
    """Compute B(n, k) ``repetitions`` times and keep the fastest wall time."""
    best = None
    result = None
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        result = bell(n, k, algo)
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return ComputationReport(AlgorithmId(algo), n, k, len(result), best, digest(result))


def _run_one_args(args):
    return run_one(*args)


def _map(fn, tasks: list, jobs: int) -> list:
    # results come back in task order whatever the completion order
    if jobs <= 1 or len(tasks) < 2:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def bench_tasks(max_n: int, k_list: list[int]) -> list[tuple[int, int]]:
    """(n, k) pairs benchmarked: k < n <= max_n, ordered by n then k.

    The diagonal n == k (where every algorithm returns x1**k) is skipped.
    """
    ks = sorted(set(k_list))
    return [(n, k) for n in range(1, max_n + 1) for k in ks if 1 <= k < n]


@dataclass
class BenchResult:
    reports: list[ComputationReport]
    mismatches: list[tuple[int, int]] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.reports:
            w.writerow(r.row())
        return buf.getvalue()


def run_bench(max_n: int, k_list: list[int], repetitions: int = 1, jobs: int = 1) -> BenchResult:
    tasks = [(n, k, algo, repetitions) for n, k in bench_tasks(max_n, k_list) for algo in ALGORITHMS]
    reports = _map(_run_one_args, tasks, jobs)
    groups: dict[tuple[int, int], set[str]] = {}
    for r in reports:
        groups.setdefault((r.n, r.k), set()).add(r.digest)
    mismatches = [nk for nk, ds in groups.items() if len(ds) != 1]
    return BenchResult(reports, mismatches)


# verification battery

CHECKS = ("five_way", "degree_weight", "positive", "term_count", "coeff_sum", "stirling", "published")


@dataclass
class Failure:
    n: int
    k: int
    check: str
    detail: str


@dataclass
class CellResult:
    n: int
    k: int
    failures: list[Failure]
    published_checked: bool = False


def check_cell(n: int, k: int) -> CellResult:
    """Run every cross-identity for one (n, k); collect failures, never raise."""
    failures: list[Failure] = []

    def fail(check, detail):
        failures.append(Failure(n, k, check, detail))

    results = {}
    for algo in ALGORITHMS:
        try:
            results[algo] = bell(n, k, algo)
        except Exception as exc:  # reported, not propagated
            fail("five_way", f"{algo} raised {type(exc).__name__}: {exc}")
    if not results:
        return CellResult(n, k, failures)
    base_algo, base = next(iter(results.items()))
    for algo, p in results.items():
        if p != base:
            fail("five_way", f"{algo} differs from {base_algo}:\n  {base_algo}: {render_text(base)}\n  {algo}: {render_text(p)}")

    if base.is_zero():
        fail("degree_weight", "zero polynomial")
    elif degree_weight(base) != (k, n):
        fail("degree_weight", f"got {degree_weight(base)}, expected ({k}, {n})")
    if any(c <= 0 for c in base.coefficients()):
        fail("positive", "non-positive coefficient")
    count = len(enumerate_partitions(n, k))
    if len(base) != count:
        fail("term_count", f"{len(base)} terms, {count} partitions")

    s = stirling(n, k, StirlingMethod.EXPLICIT)
    if evaluate_at_ones(base) != s:
        fail("coeff_sum", f"coefficient sum {evaluate_at_ones(base)} != S({n},{k}) = {s}")
    routes = {StirlingMethod.BELL: stirling(n, k, StirlingMethod.BELL)}
    if k >= 2:
        routes[StirlingMethod.NESTED] = stirling(n, k, StirlingMethod.NESTED)
    if 2 <= k <= 6:
        routes[StirlingMethod.CLOSED] = stirling(n, k, StirlingMethod.CLOSED)
    for method, v in routes.items():
        if v != s:
            fail("stirling", f"{method} gives {v}, explicit gives {s}")

    ref = published(n, k)
    if ref is not None and ref != base:
        fail("published", f"expected {render_text(ref)}\n  got      {render_text(base)}")
    return CellResult(n, k, failures, published_checked=ref is not None)


def _check_cell_args(args):
    return check_cell(*args)


def run_verify(max_n: int, jobs: int = 1) -> list[CellResult]:
    tasks = [(n, k) for n in range(1, max_n + 1) for k in range(1, n + 1)]
    return _map(_check_cell_args, tasks, jobs)


def format_matrix(cells: list[CellResult], max_n: int) -> str:
    """Lower-triangular grid: '.' all checks passed, 'X' something failed."""
    status = {(c.n, c.k): ("X" if c.failures else ".") for c in cells}
    width = len(str(max_n))
    lines = [" " * (width + 3) + " ".join(f"{k:>{width}}" for k in range(1, max_n + 1))]
    for n in range(1, max_n + 1):
        row = " ".join(f"{status.get((n, k), ' '):>{width}}" for k in range(1, n + 1))
        lines.append(f"n={n:>{width}} {row}")
    return "\n".join(lines)
