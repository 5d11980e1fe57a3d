"""Sequential motif transition process discovery over one time window.

Every edge spawns a 1-edge process. A live process is extended by the first
later edge (strictly later timestamp, gap at most ``delta``) that touches
one of its nodes; it stops when it reaches ``l_max`` edges or when no such
edge arrives within ``delta`` of its last edge. Processes never interact, so
one edge may extend any number of live processes at once.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from motiftrans.errors import ContractViolation
from motiftrans.graph_io import TemporalEdge
from motiftrans.motif_code import extend

ROOT_CODE = "01"
SELF_LOOP_ROOT = "00"


@dataclass
class TransitionStats:
    """Counters produced by a discovery run.

    ``transitions`` and ``dwell`` are keyed by ``(parent_code, child_code)``;
    ``dwell`` values are ``(sum_of_gaps_seconds, count)``.
    """

    transitions: dict[tuple[str, str], int] = field(default_factory=dict)
    terminals: dict[str, int] = field(default_factory=dict)
    observed: dict[str, int] = field(default_factory=dict)
    dwell: dict[tuple[str, str], tuple[int, int]] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not (self.transitions or self.terminals or self.observed or self.dwell)

    def mean_dwell(self, parent: str, child: str) -> float | None:
        total, n = self.dwell.get((parent, child), (0, 0))
        return total / n if n else None

    def children(self, parent: str) -> dict[str, int]:
        return {c: n for (p, c), n in self.transitions.items() if p == parent}

    def roots(self) -> int:
        """Number of spawned processes (1-edge motifs, including self-loops)."""
        return self.observed.get(ROOT_CODE, 0) + self.observed.get(SELF_LOOP_ROOT, 0)

    def conservation_errors(self) -> list[str]:
        """Return human-readable violations of the counter identities (empty when sound)."""
        errors = []
        out = Counter()
        into = Counter()
        for (p, c), n in self.transitions.items():
            out[p] += n
            into[c] += n
            if self.dwell.get((p, c), (0, 0))[1] != n:
                errors.append(f"dwell count for {p}->{c} != transition count {n}")
        for code in set(self.observed) | set(self.terminals) | set(out):
            obs = self.observed.get(code, 0)
            if obs != self.terminals.get(code, 0) + out[code]:
                errors.append(f"observed({code}) != terminals + outgoing transitions")
            if len(code) > 2 and obs != into[code]:
                errors.append(f"observed({code}) != incoming transitions")
        if sum(self.terminals.values()) != self.roots():
            errors.append("terminal total != number of spawned processes")
        return errors


class Candidate:
    """A live process: its node labelling, code, last-edge time and size."""

    __slots__ = ("id", "labels", "code", "t_last", "size")

    def __init__(self, id: int, labels: dict, code: str, t_last: int, size: int):
        self.id = id
        self.labels = labels
        self.code = code
        self.t_last = t_last
        self.size = size

    @property
    def members(self):
        return self.labels.keys()

    def __repr__(self):
        return f"Candidate({self.id}, {self.code!r}, t_last={self.t_last})"


class CandidateIndex:
    """Live processes indexed by member node, plus a FIFO ordered by ``t_last``.

    Candidates are always created with ``t_last`` equal to the current edge
    time, which never decreases, so insertion order is ``t_last`` order.
    """

    def __init__(self):
        self._ids = itertools.count()
        self.active: dict[int, Candidate] = {}
        self.by_node: dict[object, dict[int, Candidate]] = {}
        self._fifo: deque[Candidate] = deque()

    def __len__(self):
        return len(self.active)

    def new(self, labels: dict, code: str, t_last: int, size: int) -> Candidate:
        return Candidate(next(self._ids), labels, code, t_last, size)

    def add(self, cand: Candidate) -> None:
        self.active[cand.id] = cand
        for node in cand.labels:
            self.by_node.setdefault(node, {})[cand.id] = cand
        self._fifo.append(cand)

    def remove(self, cand: Candidate) -> None:
        del self.active[cand.id]
        for node in cand.labels:
            bucket = self.by_node[node]
            del bucket[cand.id]
            if not bucket:
                del self.by_node[node]

    def adjacent(self, u, v) -> list[Candidate]:
        """Live candidates containing ``u`` or ``v``, in creation order."""
        found = dict(self.by_node.get(u, ()))
        if v != u:
            found.update(self.by_node.get(v, {}))
        return [found[k] for k in sorted(found)]

    def expire(self, now: int, delta: int) -> list[Candidate]:
        """Remove and return every candidate with ``now - t_last > delta``."""
        expired = []
        fifo = self._fifo
        while fifo and now - fifo[0].t_last > delta:
            cand = fifo.popleft()
            if cand.id in self.active:
                self.remove(cand)
                expired.append(cand)
        return expired

    def drain(self) -> list[Candidate]:
        rest = sorted(self.active.values(), key=lambda c: c.id)
        for cand in rest:
            self.remove(cand)
        self._fifo.clear()
        return rest


def try_to_transit(
    e: TemporalEdge, delta: int, l_max: int, candidates: CandidateIndex
) -> list[tuple[Candidate, Candidate]]:
    """Find every live candidate that ``e`` extends; returns ``(old, new)`` pairs.

    Neither the index nor any counter is modified.
    """
    out = []
    for cand in candidates.adjacent(e.src, e.dst):
        gap = e.t - cand.t_last
        if 0 < gap <= delta and cand.size < l_max:
            code, labels = extend(cand.code, cand.labels, e.src, e.dst)
            out.append((cand, candidates.new(labels, code, e.t, cand.size + 1)))
    return out


def _check_args(edges: Sequence[TemporalEdge], delta: int, l_max: int, t_end: int | None):
    if delta < 1:
        raise ContractViolation(f"delta must be >= 1, got {delta}")
    if l_max < 1:
        raise ContractViolation(f"l_max must be >= 1, got {l_max}")
    prev = None
    for e in edges:
        key = (e.t, e.seq)
        if prev is not None and key < prev:
            raise ContractViolation(f"edges not in (t, seq) order at seq={e.seq}")
        prev = key
    if t_end is not None and edges and edges[-1].t >= t_end:
        raise ContractViolation(f"edge at t={edges[-1].t} not before window end {t_end}")


def discover_window(
    edges: Sequence[TemporalEdge],
    delta: int,
    l_max: int,
    t_end: int | None = None,
) -> TransitionStats:
    """Count transitions, terminal states, observed motifs and dwell times.

    ``edges`` must be sorted by ``(t, seq)`` and lie before ``t_end``; the
    window end only matters through the edges it admits, since processes
    still alive after the last edge are closed there.
    """
    _check_args(edges, delta, l_max, t_end)
    transitions: Counter = Counter()
    terminals: Counter = Counter()
    observed: Counter = Counter()
    dwell_sum: Counter = Counter()
    index = CandidateIndex()

    for e in edges:
        for cand in index.expire(e.t, delta):
            terminals[cand.code] += 1

        for old, new in try_to_transit(e, delta, l_max, index):
            key = (old.code, new.code)
            transitions[key] += 1
            dwell_sum[key] += e.t - old.t_last
            observed[new.code] += 1
            index.remove(old)
            if new.size >= l_max:
                terminals[new.code] += 1
            else:
                index.add(new)

        code, labels = extend("", {}, e.src, e.dst)
        observed[code] += 1
        if l_max == 1:
            terminals[code] += 1
        else:
            index.add(index.new(labels, code, e.t, 1))

    for cand in index.drain():
        terminals[cand.code] += 1

    return TransitionStats(
        transitions=dict(transitions),
        terminals=dict(terminals),
        observed=dict(observed),
        dwell={k: (dwell_sum[k], n) for k, n in transitions.items()},
    )


def peak_live_candidates(edges: Iterable[TemporalEdge], delta: int, l_max: int) -> int:
    """Largest number of simultaneously live candidates during a run."""
    edges = list(edges)
    _check_args(edges, delta, l_max, None)
    index = CandidateIndex()
    peak = 0
    for e in edges:
        index.expire(e.t, delta)
        for old, new in try_to_transit(e, delta, l_max, index):
            index.remove(old)
            if new.size < l_max:
                index.add(new)
        if l_max > 1:
            code, labels = extend("", {}, e.src, e.dst)
            index.add(index.new(labels, code, e.t, 1))
        peak = max(peak, len(index))
    return peak
