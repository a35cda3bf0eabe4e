import itertools

import pytest
from hypothesis import given, strategies as st

from multidb.sequences import (
    Params,
    canonical_cycle,
    canonical_multicycle,
    count_occurrences_cyclic,
    format_multicycle,
    format_word,
    is_lyndon,
    is_member,
    is_necklace,
    is_primitive,
    kmer_counts,
    least_rotation,
    linear_to_linearized,
    linearized_to_linear,
    parse_multicycle,
    parse_word,
    root,
    rotate,
    rotation_order,
    rotations,
)

words = st.lists(st.integers(0, 2), min_size=1, max_size=12).map(tuple)


def test_params_validation():
    with pytest.raises(ValueError):
        Params(0, 2, 2)
    with pytest.raises(ValueError):
        Params(1, 2, -1)
    p = Params(2, 3, 2)
    assert p.length == 18
    assert p.linear_length == 19


def test_rotate_is_right_shift():
    assert rotate((0, 1, 2), 1) == (2, 0, 1)
    assert rotate((0, 1, 2), 3) == (0, 1, 2)


@given(words)
def test_least_rotation_matches_brute_force(s):
    assert least_rotation(s) == min(s[i:] + s[:i] for i in range(len(s)))


@given(words)
def test_rotation_order_counts_identical_rotations(s):
    d = rotation_order(s)
    assert d == sum(1 for r in rotations(s) if r == s)
    assert root(s) * d == s
    assert is_primitive(s) == (d == 1)


@given(words)
def test_lyndon_and_necklace_definitions(s):
    rots = [s[i:] + s[:i] for i in range(1, len(s))]
    assert is_necklace(s) == all(s <= r for r in rots)
    assert is_lyndon(s) == all(s < r for r in rots)


def test_canonical_multicycle_sorts_and_rejects_powers():
    assert canonical_multicycle([(1, 0), (0,)]) == ((0,), (0, 1))
    with pytest.raises(ValueError):
        canonical_multicycle([(0, 1, 0, 1)])


def test_occurrences_wrap_on_short_cycles():
    # (0) contains 00 once, (01) contains 010 once
    assert count_occurrences_cyclic((0,), (0, 0)) == 1
    assert count_occurrences_cyclic((0, 1), (0, 1, 0)) == 1
    assert count_occurrences_cyclic((0, 1), (0, 0)) == 0


def test_membership_examples():
    p = Params(2, 2, 2)
    assert is_member((0, 0, 1, 1, 0, 0, 1, 1), "cyclic", p)
    assert is_member((0, 0, 0, 1, 0, 1, 1, 1, 0), "linear", p)
    assert is_member(((0,), (0,), (0, 1), (0, 1), (1,), (1,)), "multicyclic", p)
    assert not is_member((0, 0, 0, 0, 1, 1, 1, 1), "cyclic", p)
    assert not is_member((0, 0, 1, 1), "cyclic", p)


def test_membership_q1():
    p = Params(3, 1, 4)
    assert is_member((0, 0, 0), "cyclic", p)
    assert is_member(((0,), (0,), (0,)), "multicyclic", p)
    assert is_member((0,) * 6, "linear", p)


def test_membership_rejects_bad_symbols():
    with pytest.raises(ValueError):
        is_member((0, 2, 1, 1), "cyclic", Params(1, 2, 2))


def test_linear_linearized_roundtrip():
    p = Params(2, 2, 2)
    for s in itertools.product((0, 1), repeat=8):
        if is_member(s, "linearized", p):
            t = linearized_to_linear(s, p)
            assert is_member(t, "linear", p)
            assert linear_to_linearized(t, p) == s
    with pytest.raises(ValueError):
        linearized_to_linear((0,) * 8, p)


def test_kmer_counts_linear():
    c = kmer_counts((0, 0, 1, 1, 0), "linear", 2)
    assert c == {(0, 0): 1, (0, 1): 1, (1, 1): 1, (1, 0): 1}


def test_format_and_parse():
    assert format_word((0, 1, 1)) == "011"
    assert format_word((0, 11, 3), 12) == "[0,11,3]"
    assert parse_word("[0,11,3]") == (0, 11, 3)
    assert parse_word("0110") == (0, 1, 1, 0)
    sigma = parse_multicycle("(0001)(011)(1)")
    assert format_multicycle(canonical_multicycle(sigma)) == "(0001)(011)(1)"
    assert canonical_cycle((1, 0, 0)) == (0, 0, 1)
