"""Exact, zone-parallel discovery of motif transition processes in temporal graphs."""

from motiftrans.engine import TransitionStats, discover_window
from motiftrans.errors import (
    AlphabetExhausted,
    ContractViolation,
    InvariantViolation,
    ParseError,
)
from motiftrans.graph_io import TemporalEdge, TemporalGraph, gen_uniform, parse_edge_list
from motiftrans.motif_code import encode_instance, extend
from motiftrans.parallel import merge, run_parallel, run_sequential
from motiftrans.tzp import RunConfig, Zone, ZoneKind, partition, slice_edges

__version__ = "0.1.0"

__all__ = [
    "AlphabetExhausted",
    "ContractViolation",
    "InvariantViolation",
    "ParseError",
    "RunConfig",
    "TemporalEdge",
    "TemporalGraph",
    "TransitionStats",
    "Zone",
    "ZoneKind",
    "discover_window",
    "encode_instance",
    "extend",
    "gen_uniform",
    "merge",
    "parse_edge_list",
    "partition",
    "run_parallel",
    "run_sequential",
    "slice_edges",
]
