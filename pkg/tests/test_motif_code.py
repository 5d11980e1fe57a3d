import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motiftrans.errors import AlphabetExhausted, ContractViolation
from motiftrans.motif_code import arity, encode_instance, extend, is_valid_code

A, B, C, D = "A", "B", "C", "D"


@pytest.mark.parametrize(
    "pairs, code",
    [
        ([(A, B)], "01"),
        ([(A, B), (A, B)], "0101"),
        ([(A, B), (B, A)], "0110"),
        ([(A, B), (B, C), (A, C)], "011202"),
        ([(A, A)], "00"),
    ],
)
def test_encode_instance(pairs, code):
    assert encode_instance(pairs) == code


def test_extend_new_node():
    code, labels = extend("01", {A: 0, B: 1}, B, C)
    assert code == "0112"
    assert labels == {A: 0, B: 1, C: 2}


def test_extend_no_new_labels():
    code, labels = extend("01", {A: 0, B: 1}, A, B)
    assert code == "0101" and labels == {A: 0, B: 1}


def test_extend_does_not_mutate_input():
    labels = {A: 0, B: 1}
    extend("01", labels, B, C)
    assert labels == {A: 0, B: 1}


def test_extend_disconnected():
    with pytest.raises(ContractViolation):
        extend("01", {A: 0, B: 1}, C, D)


def test_encode_disconnected_and_empty():
    with pytest.raises(ContractViolation):
        encode_instance([(A, B), (C, D)])
    with pytest.raises(ContractViolation):
        encode_instance([])


def test_alphabet_exhausted():
    star = [(0, i) for i in range(1, 36)]
    assert encode_instance(star).endswith("0z")
    with pytest.raises(AlphabetExhausted):
        encode_instance(star + [(0, 36)])


@pytest.mark.parametrize("code, expected", [("01", (1, 2)), ("0101", (2, 2)), ("011202", (3, 3))])
def test_arity(code, expected):
    assert arity(code) == expected


@pytest.mark.parametrize("bad", ["", "0", "011"])
def test_arity_rejects(bad):
    with pytest.raises(ContractViolation):
        arity(bad)


def test_two_edge_universe():
    # every way a second edge can reuse >= 1 of the first edge's nodes {0, 1} plus one fresh node 2
    codes = set()
    for u, v in itertools.product(range(3), repeat=2):
        if u in (0, 1) or v in (0, 1):
            codes.add(extend("01", {0: 0, 1: 1}, u, v)[0])
    assert codes == {"0100", "0111", "0101", "0102", "0110", "0112", "0120", "0121"}
    # without self-loops
    assert {c for c in codes if c[2] != c[3]} == {"0101", "0102", "0110", "0112", "0120", "0121"}


@pytest.mark.parametrize(
    "code, ok",
    [("01", True), ("00", True), ("10", False), ("02", False), ("0123", False), ("011202", True),
     ("010232", True), ("0101x", False), ("01!1", False)],
)
def test_is_valid_code(code, ok):
    assert is_valid_code(code) is ok


def connected_pairs(max_nodes=8, max_edges=10):
    """Random connected edge sequences over small ints."""

    @st.composite
    def build(draw):
        n_edges = draw(st.integers(1, max_edges))
        nodes = [draw(st.integers(0, max_nodes)), draw(st.integers(0, max_nodes))]
        pairs = [tuple(nodes)]
        for _ in range(n_edges - 1):
            known = draw(st.sampled_from(sorted(set(nodes))))
            other = draw(st.integers(0, max_nodes))
            pair = (known, other) if draw(st.booleans()) else (other, known)
            pairs.append(pair)
            nodes.extend(pair)
        return pairs

    return build()


@given(connected_pairs(), st.permutations(range(9)))
def test_renaming_invariance(pairs, perm):
    renamed = [(perm[u], perm[v]) for u, v in pairs]
    assert encode_instance(renamed) == encode_instance(pairs)


@given(connected_pairs())
def test_prefix_property_and_validity(pairs):
    full = encode_instance(pairs)
    assert is_valid_code(full)
    for i in range(1, len(pairs) + 1):
        assert full.startswith(encode_instance(pairs[:i]))


@given(connected_pairs())
def test_incremental_equals_batch(pairs):
    code, labels = "", {}
    for u, v in pairs:
        code, labels = extend(code, labels, u, v)
    assert code == encode_instance(pairs)
    assert sorted(labels.values()) == list(range(len(labels)))
