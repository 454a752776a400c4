import random
from fractions import Fraction

import pytest

from qheegaard.braid_core import parse_braid
from qheegaard.errors import NonBigonIndexOne
from qheegaard.heegaard import DomainChain, build_heegaard_diagram, domain_between, push_domain_to_surface
from qheegaard.hfk_desk import (
    _is_embedded_bigon,
    bigon_homology_ranks,
    bigraded_generators,
    differential,
    euler_char_check,
    euler_measure,
    lipshitz_index,
    point_measure,
)
from qheegaard.intersection_form import transported_model
from qheegaard.laurent import LaurentPoly1
from qheegaard.oracles import alexander_burau


def diagram(text, n):
    w = parse_braid(text, n)
    return build_heegaard_diagram(transported_model(w), w)


@pytest.fixture(scope="module")
def trefoil():
    d = diagram("s1^3", 2)
    return d, bigraded_generators(d)


def test_zero_chain_has_index_zero(trefoil):
    d, data = trefoil
    x = data.generators[0].tuple.crossings
    assert lipshitz_index(d, DomainChain([0] * d.complex.n_faces), x, x) == 0


def test_trefoil_bigon_measures(trefoil):
    d, data = trefoil
    (i, j), = differential(data)
    x, y = data.generators[i].tuple.crossings, data.generators[j].tuple.crossings
    dom = data.surface_domains[i] - data.surface_domains[j]
    assert euler_measure(d, dom) == Fraction(1, 2)
    assert point_measure(d, dom, x) == point_measure(d, dom, y) == Fraction(1, 4)
    assert lipshitz_index(d, dom, x, y) == 1
    assert _is_embedded_bigon(d, dom, x, y)


def test_index_is_additive(trefoil):
    d, data = trefoil
    gens = data.generators
    rng = random.Random(7)
    for _ in range(20):
        a, b, c = (rng.choice(gens).tuple.crossings for _ in range(3))
        d1 = push_domain_to_surface(d, domain_between(d, a, b))
        d2 = push_domain_to_surface(d, domain_between(d, b, c))
        d12 = push_domain_to_surface(d, domain_between(d, a, c))
        assert lipshitz_index(d, d1 + d2, a, c) == lipshitz_index(d, d1, a, b) + lipshitz_index(d, d2, b, c)
        assert lipshitz_index(d, d12, a, c) == lipshitz_index(d, d1 + d2, a, c)


def test_trefoil_table(trefoil):
    d, data = trefoil
    assert len(data.generators) == 5
    ranks = bigon_homology_ranks(d, data)
    assert ranks.entries == {(-1, 0): 1, (0, 1): 1, (1, 2): 1}
    assert ranks.to_json()["entries"][0] == {"maslov": -1, "alexander": 0, "rank": 1}
    assert "M\\A" in ranks.to_text()


def test_unknot_tables():
    d = diagram("s1", 2)
    ranks = bigon_homology_ranks(d)
    assert ranks.total() == 1 and ranks.entries == {(0, 0): 1}
    lone = diagram("s1^-1", 2)
    data = bigraded_generators(lone)
    assert [(g.maslov, g.alexander) for g in data.generators] == [(0, 0)]


def test_torus_knot_table_is_the_shifted_standard_one():
    ranks = bigon_homology_ranks(diagram("s1^5", 2))
    assert ranks.entries == {(-2, 0): 1, (-1, 1): 1, (0, 2): 1, (1, 3): 1, (2, 4): 1}


def test_no_bigons_means_ranks_are_generator_counts():
    d = diagram("s1^-5", 2)
    data = bigraded_generators(d)
    assert differential(data) == []
    counts = {}
    for g in data.generators:
        counts[(g.maslov, g.alexander)] = counts.get((g.maslov, g.alexander), 0) + 1
    assert bigon_homology_ranks(d, data).entries == counts


@pytest.mark.parametrize("text,n", [("s1^3", 2), ("s1^5", 2), ("s1", 2), ("s1^-3", 2)])
def test_counted_bigons_are_graded(text, n):
    d = diagram(text, n)
    data = bigraded_generators(d)
    for i, j in differential(data):
        gi, gj = data.generators[i], data.generators[j]
        dom = data.surface_domains[i] - data.surface_domains[j]
        assert dom.faces[d.w_face] == dom.faces[d.z_face] == 0
        assert lipshitz_index(d, dom, gi.tuple.crossings, gj.tuple.crossings) == 1
        assert (gi.maslov - gj.maslov, gi.alexander - gj.alexander) == (1, 0)


@pytest.mark.parametrize("text,n", [("s1^3", 2), ("s1 s2^-1 s1 s2^-1", 3), ("s1^3 s2 s1^-1 s2", 3)])
def test_maslov_cycle_consistency(text, n):
    d = diagram(text, n)
    data = bigraded_generators(d)
    gens = data.generators
    rng = random.Random(3)
    for _ in range(25):
        i, j = rng.randrange(len(gens)), rng.randrange(len(gens))
        x, y = gens[i].tuple.crossings, gens[j].tuple.crossings
        dom = push_domain_to_surface(d, domain_between(d, x, y))
        assert lipshitz_index(d, dom, x, y) - 2 * dom.faces[d.w_face] == gens[i].maslov - gens[j].maslov


def test_euler_characteristic_generator_and_homology_levels(trefoil):
    d, data = trefoil
    e = euler_char_check(d, data)
    assert e == LaurentPoly1.from_text("x - 1 + x^-1")
    ranks = bigon_homology_ranks(d, data)
    chi = LaurentPoly1({2 * a: (-1) ** m * r for (m, a), r in ranks.entries.items()})
    assert chi.equal_up_to_unit(e)


def test_figure_eight_is_refused_but_euler_still_checked():
    d = diagram("s1 s2^-1 s1 s2^-1", 3)
    data = bigraded_generators(d)
    with pytest.raises(NonBigonIndexOne):
        bigon_homology_ranks(d, data)
    assert euler_char_check(d, data) == alexander_burau(d.word)
