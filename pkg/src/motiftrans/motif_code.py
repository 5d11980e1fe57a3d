"""First-appearance relabeling codes for motif instances.

A motif with edges ``(u_1, v_1), ..., (u_l, v_l)`` in temporal order is
written as ``f(u_1) f(v_1) ... f(u_l) f(v_l)`` where ``f`` hands out local
labels 0, 1, 2, ... to nodes in order of first appearance. Each label is a
single base-36 character, so a code has exactly two symbols per edge and a
motif can touch at most 36 distinct nodes.
"""

from __future__ import annotations

import string
from typing import Hashable, Mapping, Sequence

from motiftrans.errors import AlphabetExhausted, ContractViolation

ALPHABET = string.digits + string.ascii_lowercase
MAX_LABELS = len(ALPHABET)
_SYMBOL_VALUE = {ch: i for i, ch in enumerate(ALPHABET)}

LabelMap = Mapping[Hashable, int]


def _label(labels: dict, node) -> str:
    lab = labels.get(node)
    if lab is None:
        lab = len(labels)
        if lab >= MAX_LABELS:
            raise AlphabetExhausted(f"motif needs more than {MAX_LABELS} node labels")
        labels[node] = lab
    return ALPHABET[lab]


def extend(code: str, labels: LabelMap, u, v) -> tuple[str, dict]:
    """Append edge ``(u, v)`` to a motif; returns the new code and a new label map.

    At least one endpoint must already belong to the motif, unless ``code`` is
    empty (first edge).
    """
    if code and u not in labels and v not in labels:
        raise ContractViolation(f"edge ({u!r}, {v!r}) shares no node with motif {code}")
    new_labels = dict(labels)
    return code + _label(new_labels, u) + _label(new_labels, v), new_labels


def encode_instance(pairs: Sequence[tuple]) -> str:
    if not pairs:
        raise ContractViolation("cannot encode an empty motif")
    labels: dict = {}
    code = ""
    for u, v in pairs:
        code, labels = extend(code, labels, u, v)
    return code


def labels_of(code: str) -> list[int]:
    try:
        return [_SYMBOL_VALUE[ch] for ch in code]
    except KeyError as exc:
        raise ContractViolation(f"invalid symbol {exc.args[0]!r} in code {code!r}") from None


def arity(code: str) -> tuple[int, int]:
    """``(edge_count, node_count)`` of a code."""
    if not code or len(code) % 2:
        raise ContractViolation(f"invalid code {code!r}: length must be even and non-zero")
    return len(code) // 2, 1 + max(labels_of(code))


def is_valid_code(code: str) -> bool:
    """Check the structural rules every emitted code obeys.

    Labels start at 0 and appear in contiguous first-appearance order, and
    each edge after the first reuses at least one earlier label.
    """
    if not code or len(code) % 2 or any(ch not in _SYMBOL_VALUE for ch in code):
        return False
    seen = -1
    symbols = labels_of(code)
    for i, lab in enumerate(symbols):
        if lab > seen + 1:
            return False
        seen = max(seen, lab)
    for i in range(2, len(symbols), 2):
        earlier = set(symbols[:i])
        if symbols[i] not in earlier and symbols[i + 1] not in earlier:
            return False
    return True
