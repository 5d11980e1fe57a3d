"""Per-zone discovery on a worker pool and the signed merge of zone results."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from motiftrans.engine import TransitionStats, discover_window
from motiftrans.errors import InvariantViolation
from motiftrans.graph_io import TemporalEdge, TemporalGraph
from motiftrans.tzp import RunConfig, Zone, partition_graph, slice_edges

log = logging.getLogger(__name__)

BACKENDS = ("process", "thread")


@dataclass(frozen=True)
class ZoneResult:
    zone: Zone
    stats: TransitionStats

    @property
    def sign(self) -> int:
        return self.zone.sign


def merge(results: Iterable[ZoneResult]) -> TransitionStats:
    """Add growth-zone counters and subtract boundary-zone counters.

    Zero entries are dropped; a negative entry means the zone results are
    inconsistent and raises :class:`InvariantViolation`.
    """
    transitions: Counter = Counter()
    terminals: Counter = Counter()
    observed: Counter = Counter()
    dwell_sum: Counter = Counter()
    dwell_n: Counter = Counter()
    for r in results:
        s = r.sign
        for k, v in r.stats.transitions.items():
            transitions[k] += s * v
        for k, v in r.stats.terminals.items():
            terminals[k] += s * v
        for k, v in r.stats.observed.items():
            observed[k] += s * v
        for k, (total, n) in r.stats.dwell.items():
            dwell_sum[k] += s * total
            dwell_n[k] += s * n

    def settle(name, counter):
        out = {}
        for k in sorted(counter):
            v = counter[k]
            if v < 0:
                raise InvariantViolation(f"negative merged {name} counter for {k!r}: {v}")
            if v:
                out[k] = v
        return out

    sums = settle("dwell-sum", dwell_sum)
    counts = settle("dwell-count", dwell_n)
    if set(sums) - set(counts):
        raise InvariantViolation("dwell time left over for a transition with zero count")
    return TransitionStats(
        transitions=settle("transition", transitions),
        terminals=settle("terminal", terminals),
        observed=settle("observed", observed),
        dwell={k: (sums.get(k, 0), n) for k, n in counts.items()},
    )


def _run_zone(job: tuple[Zone, tuple[TemporalEdge, ...], int, int]) -> ZoneResult:
    zone, edges, delta, l_max = job
    return ZoneResult(zone, discover_window(edges, delta, l_max, zone.t_end))


def run_zones(
    graph: TemporalGraph,
    cfg: RunConfig,
    backend: str = "process",
    executor: Executor | None = None,
) -> list[ZoneResult]:
    """Discover every zone independently; results come back in zone order.

    A caller-owned ``executor`` is used as is (and left open); otherwise a
    pool of ``cfg.threads`` workers is created for this call.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")
    zones = partition_graph(graph, cfg)
    jobs = [
        (z, part, cfg.delta, cfg.l_max)
        for z, part in zip(zones, slice_edges(graph, zones))
    ]
    workers = min(cfg.threads, len(jobs))
    log.debug("%d zones over %d workers (%s)", len(jobs), workers, backend)
    if workers <= 1 and executor is None:
        return [_run_zone(j) for j in jobs]
    # largest zones first so stragglers do not dominate the tail
    order = sorted(range(len(jobs)), key=lambda i: -len(jobs[i][1]))
    ordered = [jobs[i] for i in order]
    # several chunks per worker keeps dynamic balancing while amortizing IPC
    chunk = max(1, len(jobs) // (4 * max(workers, 1)))
    if executor is not None:
        done = list(executor.map(_run_zone, ordered, chunksize=chunk))
    else:
        pool_cls = ProcessPoolExecutor if backend == "process" else ThreadPoolExecutor
        with pool_cls(max_workers=workers) as pool:
            done = list(pool.map(_run_zone, ordered, chunksize=chunk))
    results: list[ZoneResult | None] = [None] * len(jobs)
    for i, r in zip(order, done):
        results[i] = r
    return results


def run_parallel(
    graph: TemporalGraph,
    cfg: RunConfig,
    backend: str = "process",
    tamper: Callable[[list[ZoneResult]], None] | None = None,
    executor: Executor | None = None,
) -> TransitionStats:
    """Zone-partitioned discovery; equal to :func:`run_sequential` counter for counter.

    ``tamper`` is a test hook that may mutate the zone results before merging.
    """
    results = run_zones(graph, cfg, backend, executor)
    if tamper is not None:
        tamper(results)
    return merge(results)


def run_sequential(graph: TemporalGraph, cfg: RunConfig) -> TransitionStats:
    """The whole graph as a single window."""
    if not graph.edges:
        return TransitionStats()
    return discover_window(graph.edges, cfg.delta, cfg.l_max, graph.t_max + 1)


def diff_stats(a: TransitionStats, b: TransitionStats) -> list[tuple[str, object, object, object]]:
    """Differences between two stats as ``(map, key, a_value, b_value)`` rows, sorted."""
    rows = []
    for name in ("transitions", "terminals", "observed", "dwell"):
        ma, mb = getattr(a, name), getattr(b, name)
        for key in sorted(set(ma) | set(mb)):
            if ma.get(key) != mb.get(key):
                rows.append((name, key, ma.get(key), mb.get(key)))
    return rows

