import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from motiftrans.graph_io import TemporalGraph, parse_edge_list  # noqa: E402

DATA = Path(__file__).parent / "data"

# Terminal counts per zone for the two-zone example: code -> (G1, G2, B1, whole graph)
ZONE_LEDGER = {
    "0101": (1, 1, 0, 2),
    "0102": (1, 1, 1, 1),
    "010232": (0, 1, 0, 1),
    "0112": (2, 1, 1, 2),
    "011202": (1, 0, 0, 1),
    "011213": (1, 1, 1, 1),
    "0121": (1, 1, 0, 2),
    "012121": (1, 0, 0, 1),
    "012130": (0, 1, 0, 1),
}

A, B, C = 0, 1, 2
TRIANGLE = [(A, B, 3600), (B, C, 4800), (A, C, 5400)]


@pytest.fixture
def two_zone_graph() -> TemporalGraph:
    with open(DATA / "two_zone_example.tsv") as fh:
        return parse_edge_list(fh)


@pytest.fixture
def triangle_graph() -> TemporalGraph:
    return TemporalGraph.from_triples(TRIANGLE)


def as_dict(stats):
    return {
        "transitions": stats.transitions,
        "terminals": stats.terminals,
        "observed": stats.observed,
        "dwell": stats.dwell,
    }


ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool | None, detail: str) -> None:
    """Log one acceptance line; ``ok=None`` marks an informational criterion."""
    status = "INFO" if ok is None else ("PASS" if ok else "FAIL")
    ACCEPTANCE_LINES.append(f"[{status}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
