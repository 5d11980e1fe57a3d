"""Temporal zone partitioning.

Growth zones have length ``L_g = omega * delta * l_max`` and start every
``L_g - L_b`` seconds, so consecutive growth zones overlap by exactly
``L_b = delta * l_max``. That overlap is the boundary zone. A process spans
at most ``(l_max - 1) * delta`` seconds and is settled ``delta`` after its
last edge, so one that starts before the next growth zone begins is seen
in full by the current one. A process starting inside the overlap is cut
off in exactly the same way by ``G_i`` and ``B_i``, which share their right
end. Subtracting ``B_i`` therefore leaves ``G_{i+1}``'s complete count.

All intervals are half-open ``[t_start, t_end)``.
"""

from __future__ import annotations

import bisect
import enum
import os
from dataclasses import dataclass, field

from motiftrans.errors import ContractViolation
from motiftrans.graph_io import TemporalEdge, TemporalGraph


class ZoneKind(str, enum.Enum):
    GROWTH = "growth"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class Zone:
    kind: ZoneKind
    index: int
    t_start: int
    t_end: int

    def __post_init__(self):
        if self.t_start >= self.t_end:
            raise ContractViolation(f"empty zone [{self.t_start}, {self.t_end})")

    @property
    def sign(self) -> int:
        return 1 if self.kind is ZoneKind.GROWTH else -1

    @property
    def name(self) -> str:
        return f"{'G' if self.kind is ZoneKind.GROWTH else 'B'}{self.index}"

    def __contains__(self, t: int) -> bool:
        return self.t_start <= t < self.t_end


def _default_threads() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True)
class RunConfig:
    delta: int = 600
    l_max: int = 6
    omega: int = 20
    threads: int = field(default_factory=_default_threads)

    def __post_init__(self):
        for name, lo in (("delta", 1), ("l_max", 1), ("omega", 2), ("threads", 1)):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ContractViolation(f"{name} must be an integer, got {value!r}")
            if value < lo:
                raise ContractViolation(f"{name} must be >= {lo}, got {value}")

    @property
    def growth_length(self) -> int:
        return self.omega * self.delta * self.l_max

    @property
    def boundary_length(self) -> int:
        return self.delta * self.l_max

    @property
    def stride(self) -> int:
        return self.growth_length - self.boundary_length


def growth_zone_count(t_min: int, t_max: int, cfg: RunConfig) -> int:
    """Closed form of the number of growth zones :func:`partition` emits."""
    span = t_max - t_min - cfg.boundary_length
    return max(1, -(-span // cfg.stride))


def partition(t_min: int, t_max: int, cfg: RunConfig) -> list[Zone]:
    """Growth zones interleaved with their boundary zones, in time order.

    Zones are added until one reaches ``t_max``; that last growth zone is
    then cut or stretched to end at ``t_max + 1``.
    """
    if t_min > t_max:
        raise ContractViolation(f"t_min {t_min} > t_max {t_max}")
    lg, lb = cfg.growth_length, cfg.boundary_length
    zones: list[Zone] = []
    start = t_min
    i = 1
    while True:
        end = start + lg
        if end >= t_max:
            zones.append(Zone(ZoneKind.GROWTH, i, start, t_max + 1))
            return zones
        zones.append(Zone(ZoneKind.GROWTH, i, start, end))
        zones.append(Zone(ZoneKind.BOUNDARY, i, end - lb, end))
        start += cfg.stride
        i += 1


def partition_graph(graph: TemporalGraph, cfg: RunConfig) -> list[Zone]:
    if not graph.edges:
        return []
    return partition(graph.t_min, graph.t_max, cfg)


def slice_edges(graph: TemporalGraph, zones: list[Zone]) -> list[tuple[TemporalEdge, ...]]:
    """Per-zone edge slices, each in canonical order."""
    times = [e.t for e in graph.edges]
    out = []
    for z in zones:
        lo = bisect.bisect_left(times, z.t_start)
        hi = bisect.bisect_left(times, z.t_end)
        out.append(graph.edges[lo:hi])
    return out


def zone_table(graph: TemporalGraph, cfg: RunConfig) -> str:
    zones = partition_graph(graph, cfg)
    rows = ["index\tkind\tstart\tend\tedges"]
    for z, part in zip(zones, slice_edges(graph, zones)):
        rows.append(f"{z.name}\t{z.kind.value}\t{z.t_start}\t{z.t_end}\t{len(part)}")
    return "\n".join(rows) + "\n"
