import pytest
from hypothesis import given, settings

from qheegaard.braid_core import BraidWord, parse_braid
from qheegaard.errors import BudgetExceeded
from qheegaard.laurent import LaurentPoly1
from qheegaard.oracles import alexander_burau, jones_kauffman, kauffman_bracket, reduced_burau

from conftest import braids, knot_braids

P = LaurentPoly1.from_text


def test_trefoil_values():
    w = parse_braid("s1^3", 2)
    assert alexander_burau(w) == P("x - 1 + x^-1")
    assert jones_kauffman(w) == P("-x^-4 + x^-3 + x^-1")


def test_unknot_and_mirror():
    assert alexander_burau(parse_braid("s1", 2)) == P("1")
    assert jones_kauffman(parse_braid("s1", 2)) == P("1")
    assert jones_kauffman(parse_braid("s1^-3", 2)) == P("-x^4 + x^3 + x")


def test_figure_eight_alexander():
    assert alexander_burau(parse_braid("s1 s2^-1 s1 s2^-1", 3)) == P("-x + 3 - x^-1")


def test_hopf_bracket():
    # A-exponent -> coefficient
    assert kauffman_bracket(parse_braid("s1^2", 2)) == {4: -1, -4: -1}


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        jones_kauffman(parse_braid("s1^6", 2), budget=5)


def test_burau_braid_relation():
    a, b = reduced_burau(1, 3), reduced_burau(2, 3)
    assert (a * b * a - b * a * b).expand().is_zero_matrix


@settings(max_examples=40)
@given(braids(max_n=4, max_len=7))
def test_jones_mirror_symmetry(w):
    assert jones_kauffman(w.mirror()) == jones_kauffman(w).bar()


@settings(max_examples=40)
@given(knot_braids(max_n=4, max_len=7))
def test_alexander_mirror_and_symmetry(w):
    a = alexander_burau(w)
    assert a.bar() == a
    assert a.at_one() == 1
    assert alexander_burau(w.mirror()) == a


@settings(max_examples=25)
@given(braids(max_n=3, max_len=5))
def test_markov_stabilisation(w):
    up = BraidWord(w.n + 1, w.letters + (w.n,))
    down = BraidWord(w.n + 1, w.letters + (-w.n,))
    j = jones_kauffman(w)
    assert jones_kauffman(up) == j and jones_kauffman(down) == j
