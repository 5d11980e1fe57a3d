"""Loading, ordering, writing and synthesizing temporal edge lists.

The text format is SNAP-like: one ``src dst t`` triple of whitespace
separated integers per line; lines starting with ``#`` or ``%`` are comments.
"""

from __future__ import annotations

import io
import random
from dataclasses import dataclass, field
from typing import IO, Iterable, NamedTuple, Sequence

from motiftrans.errors import ContractViolation, ParseError

COMMENT_PREFIXES = ("#", "%")


class TemporalEdge(NamedTuple):
    src: int
    dst: int
    t: int
    seq: int


def sort_canonical(edges: Iterable[TemporalEdge]) -> list[TemporalEdge]:
    """Return ``edges`` ordered by ``(t, seq)``."""
    return sorted(edges, key=lambda e: (e.t, e.seq))


def is_canonical(edges: Sequence[TemporalEdge]) -> bool:
    return all((a.t, a.seq) <= (b.t, b.seq) for a, b in zip(edges, edges[1:]))


@dataclass(frozen=True)
class TemporalGraph:
    """An immutable, canonically ordered directed temporal multigraph.

    ``skipped`` counts input lines dropped by a non-strict parse.
    """

    edges: tuple[TemporalEdge, ...]
    skipped: int = field(default=0, compare=False)

    def __post_init__(self):
        if not is_canonical(self.edges):
            object.__setattr__(self, "edges", tuple(sort_canonical(self.edges)))

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[int, int, int]]) -> TemporalGraph:
        return cls(tuple(TemporalEdge(s, d, t, i) for i, (s, d, t) in enumerate(triples)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def node_count(self) -> int:
        nodes = set()
        for e in self.edges:
            nodes.add(e.src)
            nodes.add(e.dst)
        return len(nodes)

    @property
    def t_min(self) -> int | None:
        return self.edges[0].t if self.edges else None

    @property
    def t_max(self) -> int | None:
        return self.edges[-1].t if self.edges else None

    def __len__(self) -> int:
        return len(self.edges)


def _parse_line(line: str) -> tuple[int, int, int]:
    tokens = line.split()
    if len(tokens) < 3:
        raise ValueError(f"expected 3 fields, got {len(tokens)}")
    try:
        src, dst, t = (int(tok) for tok in tokens[:3])
    except ValueError:
        raise ValueError("non-integer field") from None
    if src < 0 or dst < 0:
        raise ValueError("negative node id")
    if t < 0:
        raise ValueError("negative timestamp")
    return src, dst, t


def parse_edge_list(source: IO[str] | str, strict: bool = True) -> TemporalGraph:
    """Read an edge list from a text stream (or a string holding its contents).

    With ``strict`` a malformed line raises :class:`ParseError`; otherwise it
    is dropped and counted in ``TemporalGraph.skipped``. Extra columns after
    the third are ignored.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    edges = []
    skipped = 0
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        try:
            src, dst, t = _parse_line(line)
        except ValueError as exc:
            if strict:
                raise ParseError(lineno, line, str(exc)) from None
            skipped += 1
            continue
        edges.append(TemporalEdge(src, dst, t, len(edges)))
    return TemporalGraph(tuple(sort_canonical(edges)), skipped=skipped)


def serialize_edge_list(graph: TemporalGraph) -> str:
    return "".join(f"{e.src}\t{e.dst}\t{e.t}\n" for e in graph.edges)


def gen_uniform(
    nodes: int, edges: int, span: int, seed: int, self_loops: bool = False
) -> TemporalGraph:
    """Uniform random temporal graph: endpoints uniform over ``range(nodes)``,
    timestamps uniform over ``[0, span)``. Deterministic in its arguments."""
    if nodes < 2:
        raise ContractViolation(f"nodes must be >= 2, got {nodes}")
    if edges < 0:
        raise ContractViolation(f"edges must be >= 0, got {edges}")
    if span < 1:
        raise ContractViolation(f"span must be >= 1, got {span}")
    rng = random.Random(seed)
    triples = []
    for _ in range(edges):
        src = rng.randrange(nodes)
        dst = rng.randrange(nodes)
        while dst == src and not self_loops:
            dst = rng.randrange(nodes)
        triples.append((src, dst, rng.randrange(span)))
    return TemporalGraph.from_triples(triples)
