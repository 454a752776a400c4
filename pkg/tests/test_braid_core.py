import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qheegaard.braid_core import (
    BraidWord,
    closure_info,
    cycles,
    free_reduce,
    parse_braid,
    permutation_of,
    random_conjugate,
    random_relation,
)
from qheegaard.errors import BraidSyntaxError, InvalidIndex

from conftest import braids


def test_parse_powers():
    assert parse_braid("s1^3", 2).letters == (1, 1, 1)
    assert parse_braid("s1 s2^-1 s1 s2^-1", 3).letters == (1, -2, 1, -2)
    assert parse_braid("", 4).letters == ()


def test_parse_alphabetic():
    assert parse_braid("aBa", 3, alphabetic=True).letters == (1, -2, 1)


@pytest.mark.parametrize("text", ["s1^0", "t1", "s^2", "s1^", "s1 2"])
def test_parse_rejects_garbage(text):
    with pytest.raises(BraidSyntaxError):
        parse_braid(text, 3)


def test_index_out_of_range():
    with pytest.raises(InvalidIndex):
        parse_braid("s3", 3)
    with pytest.raises(InvalidIndex):
        BraidWord(2, (2,))


def test_closure_examples():
    tre = closure_info(parse_braid("s1^3", 2))
    assert (tre.writhe, tre.permutation, tre.components) == (3, (2, 1), 1)
    empty = closure_info(BraidWord(4, ()))
    assert (empty.writhe, empty.permutation, empty.components) == (0, (1, 2, 3, 4), 4)
    fig8 = closure_info(parse_braid("s1 s2^-1 s1 s2^-1", 3))
    assert fig8.writhe == 0 and fig8.components == 1
    assert fig8.permutation == (2, 3, 1)


def test_cycles_partition():
    assert cycles((2, 1, 3)) == [[1, 2], [3]]


@given(braids())
def test_text_round_trip(w):
    assert parse_braid(w.text(), w.n) == w
    assert parse_braid(w.compact(), w.n) == w


@given(braids())
def test_inverse_has_inverse_permutation(w):
    p = permutation_of(w)
    q = permutation_of(w.inverse())
    assert tuple(q[p[i] - 1] for i in range(w.n)) == tuple(range(1, w.n + 1))
    assert free_reduce(w * w.inverse()).letters == ()


@given(braids())
def test_mirror_negates_writhe(w):
    assert closure_info(w.mirror()).writhe == -closure_info(w).writhe
    assert closure_info(w.mirror()).components == closure_info(w).components


@given(braids(), st.integers(0, 10**6))
def test_relations_preserve_closure_data(w, seed):
    rng = random.Random(seed)
    v = w
    for _ in range(4):
        v = random_relation(v, rng)
    assert permutation_of(v) == permutation_of(w)
    assert closure_info(v).writhe == closure_info(w).writhe


@given(braids(), st.integers(0, 10**6))
def test_conjugation_preserves_cycle_type(w, seed):
    v = random_conjugate(w, random.Random(seed))
    a, b = closure_info(w), closure_info(v)
    assert (a.writhe, a.components) == (b.writhe, b.components)
    assert sorted(map(len, cycles(a.permutation))) == sorted(map(len, cycles(b.permutation)))
