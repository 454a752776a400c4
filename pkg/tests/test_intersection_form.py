import itertools
import math

import pytest
from hypothesis import given, settings

from qheegaard.braid_core import BraidWord, parse_braid
from qheegaard.disc_model import enumerate_pair_intersections, realise
from qheegaard.errors import NotAKnot
from qheegaard.intersection_form import (
    Grader,
    alexander_of_braid,
    enumerate_tuples,
    jones_from_omega,
    jones_of_braid,
    omega_q,
    specialize,
    tint_jones,
    transported_model,
)
from qheegaard.laurent import LaurentPoly1, LaurentPoly2
from qheegaard.oracles import alexander_burau, jones_kauffman

from conftest import braids, knot_braids

P = LaurentPoly1.from_text
TREFOIL_BRACKET = LaurentPoly2({(-6, 0): -1, (-4, 0): 1, (-2, 0): -1, (0, 0): 1, (0, 1): -1})


def test_trefoil_omega():
    res = omega_q(parse_braid("s1^3", 2))
    assert res.omega == LaurentPoly2.monomial(4, 3) * TREFOIL_BRACKET
    assert (res.prefactor_ex2, res.prefactor_ed) == (4, 3)
    assert sorted((g.a_hf, g.a_qhf) for g in res.gradings) == [(-3, 0), (-2, 0), (-1, 0), (0, 0), (0, 1)]


def test_trefoil_specialisations_carry_the_global_sign():
    omega = LaurentPoly2.monomial(4, 3) * TREFOIL_BRACKET
    assert specialize(omega, "AlexanderD1") == -P("x - 1 + x^-1")
    assert specialize(omega, "JonesDminusXinv") == -P("-x^-4 + x^-3 + x^-1")
    assert specialize(LaurentPoly2(), "AlexanderD1").is_zero()
    with pytest.raises(ValueError):
        specialize(omega, "nonsense")


def test_trefoil_invariants():
    w = parse_braid("s1^3", 2)
    assert alexander_of_braid(w) == P("x - 1 + x^-1")
    assert jones_of_braid(w) == P("-x^-4 + x^-3 + x^-1")
    assert jones_of_braid(w.mirror()) == P("-x^4 + x^3 + x")


def test_one_strand():
    res = omega_q(BraidWord(1, ()))
    assert res.omega == LaurentPoly2.one()
    assert len(res.tuples) == 1 and res.tuples[0].sign == 1 and res.tuples[0].crossings == ()


def test_unknot_specialisations_are_units():
    res = omega_q(parse_braid("s1", 2))
    for mode in ("AlexanderD1", "JonesDminusXinv"):
        p = specialize(res.omega, mode)
        assert len(p.terms) == 1 and abs(next(iter(p.terms.values()))) == 1
    assert alexander_of_braid(parse_braid("s1", 2)) == P("1")


def test_figure_eight():
    w = parse_braid("s1 s2^-1 s1 s2^-1", 3)
    assert alexander_of_braid(w) == P("-x + 3 - x^-1")
    assert jones_of_braid(w) == jones_kauffman(w)


def test_alexander_refuses_links():
    with pytest.raises(NotAKnot):
        alexander_of_braid(parse_braid("s1^2", 2))


@pytest.mark.parametrize("text", ["s1 s2^-1 s1 s2^-1", "s1^3 s2", "s1 s2 s1 s2"])
def test_tuple_count_matches_permanent_formula(text):
    w = parse_braid(text, 3)
    cr = enumerate_pair_intersections(realise(transported_model(w)))
    m = w.n - 1
    expected = sum(math.prod(len(cr[(p[k], k)]) for k in range(m)) for p in itertools.permutations(range(m)))
    assert len(enumerate_tuples(cr, w.n)) == expected


@settings(max_examples=30)
@given(braids(max_n=4, max_len=6))
def test_jones_matches_kauffman(w):
    assert jones_from_omega(omega_q(w)) == jones_kauffman(w)


@settings(max_examples=30)
@given(knot_braids(max_n=4, max_len=7))
def test_alexander_matches_burau(w):
    assert alexander_of_braid(w) == alexander_burau(w)


@settings(max_examples=20)
@given(braids(max_n=4, max_len=6))
def test_reduction_does_not_change_omega(w):
    assert omega_q(w, reduce=True).omega == omega_q(w, reduce=False).omega


@settings(max_examples=20)
@given(braids(max_n=4, max_len=6))
def test_fast_and_slow_gradings_agree(w):
    real = realise(transported_model(w))
    cr = enumerate_pair_intersections(real)
    g = Grader(real, cr)
    for t in enumerate_tuples(cr, w.n)[:40]:
        assert g.raw(t.crossings) == g.raw_slow(t.crossings)
        assert g.grade(t.crossings) == g.grade(t.crossings)


@settings(max_examples=20)
@given(braids(max_n=4, max_len=6))
def test_tint_formula(w):
    res = omega_q(w)
    assert tint_jones(res).equal_up_to_unit(jones_from_omega(res))


@settings(max_examples=20)
@given(braids(max_n=3, max_len=5))
def test_jones_mirror_and_stabilisation(w):
    j = jones_of_braid(w)
    assert jones_of_braid(w.mirror()) == j.bar()
    assert jones_of_braid(BraidWord(w.n + 1, w.letters + (-w.n,))) == j
