import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qheegaard.braid_core import BraidWord, parse_braid
from qheegaard.errors import NotAKnot, NotSupported
from qheegaard.heegaard import (
    DomainChain,
    boundary_cycle,
    build_heegaard_diagram,
    diagram_json,
    diagram_text,
    domain_between,
    domain_gradings,
    push_domain_to_surface,
)
from qheegaard.intersection_form import Grader, enumerate_tuples, transported_model

from conftest import knot_braids


def diagram(text, n):
    w = parse_braid(text, n)
    return build_heegaard_diagram(transported_model(w), w)


@pytest.fixture(scope="module")
def trefoil():
    return diagram("s1^3", 2)


def test_trefoil_shape(trefoil):
    assert trefoil.genus == 1
    assert len(trefoil.alphas) == len(trefoil.betas) == 1
    assert len(trefoil.q_points) == 2
    assert len(trefoil.surface_groups()) == trefoil.complex.n_faces - 1


def test_genus_two_alpha_span():
    d = diagram("s1 s2^-1 s1 s2^-1", 3)
    assert d.genus == 2
    assert d.meta["alpha_span_rank"] == 2
    assert abs(d.meta["alpha_beta_det"]) == 1


def test_rejections():
    with pytest.raises(NotSupported):
        build_heegaard_diagram(transported_model(BraidWord(1, ())), BraidWord(1, ()))
    with pytest.raises(NotAKnot):
        diagram("s1^2", 2)


def test_self_domain_is_zero(trefoil):
    x = tuple(trefoil.loops.entry)
    assert domain_between(trefoil, x, x).is_zero()
    assert push_domain_to_surface(trefoil, DomainChain([0] * trefoil.complex.n_faces)).is_zero()
    assert domain_gradings(trefoil, DomainChain([0] * trefoil.complex.n_faces)) == (0, 0)


def test_trefoil_bigon_avoids_basepoints(trefoil):
    cr = trefoil.crossings
    g = Grader(trefoil.real, cr)
    top = [t.crossings for t in enumerate_tuples(cr, 2) if g.grade(t.crossings).a_hf == 0]
    dom = domain_between(trefoil, top[1], top[0])
    assert dom.faces[trefoil.z_face] == dom.faces[trefoil.w_face] == 0
    assert set(dom.faces) <= {0, 1, -1} and not dom.is_zero()


def test_trefoil_alexander_differences(trefoil):
    cr = trefoil.crossings
    ref = tuple(trefoil.loops.entry)
    got = []
    for t in enumerate_tuples(cr, 2):
        surf = push_domain_to_surface(trefoil, domain_between(trefoil, t.crossings, ref))
        got.append(domain_gradings(trefoil, surf, t.crossings, ref)[0])
    assert sorted(got) == [-3, -2, -1, 0, 0]


def test_equal_ends_add_tube_without_disc(trefoil):
    faces = [0] * trefoil.complex.n_faces
    t = trefoil.tubes[0]
    faces[t.start_face] = faces[t.end_face] = 1
    pushed = push_domain_to_surface(trefoil, DomainChain(faces))
    assert pushed.tubes == {0: 1}
    assert pushed.faces == faces


@settings(max_examples=15)
@given(knot_braids(max_n=3, max_len=6), st.integers(0, 10**6))
def test_domains_solve_their_boundary_and_push_conserves(w, seed):
    d = build_heegaard_diagram(transported_model(w), w)
    tuples = enumerate_tuples(d.crossings, w.n)
    rng = random.Random(seed)
    g = Grader(d.real, d.crossings)
    for _ in range(5):
        x, y = rng.choice(tuples).crossings, rng.choice(tuples).crossings
        dom = domain_between(d, x, y)
        assert d.complex.residual(dom.faces, boundary_cycle(d, x, y)) == 0
        trace = []
        surf = push_domain_to_surface(d, dom, trace)
        assert len(set(trace)) == 1
        a, q = domain_gradings(d, surf, x, y)
        gx, gy = g.grade(x), g.grade(y)
        assert (a, q) == (gx.a_hf - gy.a_hf, gx.a_qhf - gy.a_qhf)


def test_exports(trefoil):
    text = diagram_text(trefoil)
    assert text.startswith("braid s1 s1 s1 n=2 genus=1")
    js = diagram_json(trefoil)
    assert js["genus"] == 1 and len(js["tubes"]) == 1
    assert set(js["curves"]) == {"alpha0", "beta0"}
