"""Proportion tables, transition trees and (de)serialization of stats."""

from __future__ import annotations

import io
import json
import warnings
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Any

from motiftrans.engine import TransitionStats
from motiftrans.errors import ParseError
from motiftrans.motif_code import is_valid_code

TRANSITION_HEADER = ("parent", "child", "count", "pct", "mean_dwell_s")
TERMINAL_HEADER = ("code", "count")
_CENT = Decimal("0.01")


def percent(count: int, total: int) -> Decimal:
    """``100 * count / total`` rounded half-up to two decimals."""
    if total <= 0:
        raise ValueError("total must be positive")
    return (Decimal(100 * count) / Decimal(total)).quantize(_CENT, rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class ProportionRow:
    parent: str
    child: str
    count: int
    pct: Decimal
    mean_dwell: float | None


@dataclass(frozen=True)
class ParentGroup:
    parent: str
    rows: tuple[ProportionRow, ...]

    @property
    def total_evolved(self) -> int:
        return sum(r.count for r in self.rows)


@dataclass(frozen=True)
class ProportionReport:
    groups: tuple[ParentGroup, ...]
    terminals: tuple[tuple[str, int], ...]

    def group(self, parent: str) -> ParentGroup:
        for g in self.groups:
            if g.parent == parent:
                return g
        raise KeyError(parent)

    def render(self) -> str:
        out = io.StringIO()
        if self.groups:
            out.write("\t".join(TRANSITION_HEADER) + "\n")
        for g in self.groups:
            for r in g.rows:
                out.write(_transition_line(r) + "\n")
            out.write(f"{g.parent}\tTotal Evolved\t{g.total_evolved}\t100.00\t\n")
        if self.terminals:
            out.write("\n" + "\t".join(TERMINAL_HEADER) + "\n")
            for code, n in self.terminals:
                out.write(f"{code}\t{n}\n")
        return out.getvalue()


def _transition_line(r: ProportionRow) -> str:
    dwell = "" if r.mean_dwell is None else repr(r.mean_dwell)
    return f"{r.parent}\t{r.child}\t{r.count}\t{r.pct}\t{dwell}"


def proportions(stats: TransitionStats) -> ProportionReport:
    """Per-parent transition shares, parents in code order, children by descending count."""
    by_parent: dict[str, list[tuple[str, int]]] = {}
    for (p, c), n in stats.transitions.items():
        by_parent.setdefault(p, []).append((c, n))
    groups = []
    for parent in sorted(by_parent):
        kids = sorted(by_parent[parent], key=lambda cn: (-cn[1], cn[0]))
        total = sum(n for _, n in kids)
        rows = tuple(
            ProportionRow(parent, c, n, percent(n, total), stats.mean_dwell(parent, c))
            for c, n in kids
            if n > 0
        )
        groups.append(ParentGroup(parent, rows))
    terminals = tuple(sorted(stats.terminals.items()))
    return ProportionReport(tuple(groups), terminals)


def _known(stats: TransitionStats, code: str) -> bool:
    return (
        code in stats.observed
        or code in stats.terminals
        or any(code in key for key in stats.transitions)
    )


def _ordered_children(stats: TransitionStats, code: str) -> list[tuple[str, int]]:
    return sorted(stats.children(code).items(), key=lambda cn: (-cn[1], cn[0]))


def render_tree(stats: TransitionStats, root: str, max_depth: int = 3) -> str:
    """Indented text tree of the transitions reachable from ``root``."""
    if not is_valid_code(root):
        raise ValueError(f"invalid motif code {root!r}")
    if not _known(stats, root):
        warnings.warn(f"motif {root} does not occur in these stats", stacklevel=2)
        return ""
    lines = [root]

    def walk(code: str, prefix: str, depth: int):
        kids = _ordered_children(stats, code)
        total = sum(n for _, n in kids)
        for i, (child, n) in enumerate(kids):
            last = i == len(kids) - 1
            lines.append(f"{prefix}{'└── ' if last else '├── '}{child} ({n}, {percent(n, total)}%)")
            if depth + 1 < max_depth:
                walk(child, prefix + ("    " if last else "│   "), depth + 1)

    if max_depth > 0:
        if not stats.children(root):
            lines.append("└── (no transitions)")
        else:
            walk(root, "", 0)
    return "\n".join(lines) + "\n"


def render_dot(stats: TransitionStats, root: str, max_depth: int = 3) -> str:
    """Graphviz DOT for the same tree; edge labels are ``count / pct%``."""
    if not is_valid_code(root):
        raise ValueError(f"invalid motif code {root!r}")
    lines = ["digraph transitions {", f'  "{root}";']
    frontier = [root]
    seen = {root}
    for _ in range(max_depth):
        nxt = []
        for code in frontier:
            kids = _ordered_children(stats, code)
            total = sum(n for _, n in kids)
            for child, n in kids:
                lines.append(f'  "{code}" -> "{child}" [label="{n} / {percent(n, total)}%"];')
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
    lines.append("}")
    return "\n".join(lines) + "\n"


def _meta_items(meta: dict[str, Any] | None):
    return sorted((meta or {}).items())


def to_tsv(stats: TransitionStats, meta: dict[str, Any] | None = None) -> str:
    """Sectioned TSV: transitions, terminals, observed.

    Mean dwell is written with ``repr`` so the integer dwell sum can be
    recovered exactly on reading.
    """
    out = io.StringIO()
    for k, v in _meta_items(meta):
        out.write(f"#meta\t{k}\t{json.dumps(v)}\n")
    out.write("#transitions\n" + "\t".join(TRANSITION_HEADER) + "\n")
    totals: dict[str, int] = {}
    for (p, _), n in stats.transitions.items():
        totals[p] = totals.get(p, 0) + n
    for (p, c) in sorted(stats.transitions):
        n = stats.transitions[(p, c)]
        row = ProportionRow(p, c, n, percent(n, totals[p]), stats.mean_dwell(p, c))
        out.write(_transition_line(row) + "\n")
    for section, data in (("terminals", stats.terminals), ("observed", stats.observed)):
        out.write(f"#{section}\n" + "\t".join(TERMINAL_HEADER) + "\n")
        for code in sorted(data):
            out.write(f"{code}\t{data[code]}\n")
    return out.getvalue()


def to_json(stats: TransitionStats, meta: dict[str, Any] | None = None) -> str:
    doc = {
        "meta": dict(_meta_items(meta)),
        "transitions": {f"{p}->{c}": n for (p, c), n in sorted(stats.transitions.items())},
        "terminals": dict(sorted(stats.terminals.items())),
        "observed": dict(sorted(stats.observed.items())),
        "dwell": {
            f"{p}->{c}": {"sum_s": s, "count": n} for (p, c), (s, n) in sorted(stats.dwell.items())
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def serialize(stats: TransitionStats, fmt: str = "tsv", meta: dict[str, Any] | None = None) -> str:
    if fmt == "tsv":
        return to_tsv(stats, meta)
    if fmt == "json":
        return to_json(stats, meta)
    raise ValueError(f"unknown format {fmt!r}")


def _split_pair(key: str) -> tuple[str, str]:
    p, _, c = key.partition("->")
    return p, c


def _from_json(text: str) -> tuple[TransitionStats, dict]:
    doc = json.loads(text)
    stats = TransitionStats(
        transitions={_split_pair(k): v for k, v in doc.get("transitions", {}).items()},
        terminals=dict(doc.get("terminals", {})),
        observed=dict(doc.get("observed", {})),
        dwell={_split_pair(k): (v["sum_s"], v["count"]) for k, v in doc.get("dwell", {}).items()},
    )
    return stats, doc.get("meta", {})


def _from_tsv(text: str) -> tuple[TransitionStats, dict]:
    stats = TransitionStats()
    meta: dict[str, Any] = {}
    section = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        if line.startswith("#meta\t"):
            _, key, value = line.split("\t", 2)
            meta[key] = json.loads(value)
            continue
        if line.startswith("#"):
            section = line[1:]
            continue
        fields = line.split("\t")
        if tuple(fields) in (TRANSITION_HEADER, TERMINAL_HEADER):
            continue
        try:
            if section == "transitions":
                p, c, n, _, dwell = fields
                n = int(n)
                stats.transitions[(p, c)] = n
                stats.dwell[(p, c)] = (round(float(dwell) * n) if dwell else 0, n)
            elif section in ("terminals", "observed"):
                code, n = fields
                getattr(stats, section)[code] = int(n)
            else:
                raise ValueError(f"row outside a known section ({section!r})")
        except ValueError as exc:
            raise ParseError(lineno, line, str(exc)) from None
    return stats, meta


def parse_stats(text: str, fmt: str | None = None) -> tuple[TransitionStats, dict]:
    """Inverse of :func:`serialize`; guesses the format when ``fmt`` is None."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "tsv"
    if fmt == "json":
        return _from_json(text)
    if fmt == "tsv":
        return _from_tsv(text)
    raise ValueError(f"unknown format {fmt!r}")
