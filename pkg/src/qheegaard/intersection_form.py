"""Generator tuples, the two-variable intersection form and its specialisations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .braid_core import BraidWord, closure_info
from .disc_model import (
    Crossing,
    Realisation,
    apply_braid,
    build_initial_model,
    enumerate_pair_intersections,
    pos_of,
    realise,
)
from .errors import NotAKnot
from .grading import (
    Bigrading,
    LoopBuilder,
    endpoint_half_turns,
    pairwise_delta_winding,
    path_crossings,
    winding_vector,
)
from .laurent import LaurentPoly1, LaurentPoly2, conway_normalize


@dataclass(frozen=True)
class GeneratorTuple:
    assignment: tuple[int, ...]          # assignment[k] = arc used on circle k
    crossings: tuple[Crossing, ...]      # crossings[k] lies on circle k
    sign: int


def perm_sign(p) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def enumerate_tuples(crossings: dict, n: int) -> list[GeneratorTuple]:
    m = n - 1
    out = []
    for perm in itertools.permutations(range(m)):
        lists = [crossings[(perm[k], k)] for k in range(m)]
        if any(not l for l in lists):
            continue
        ps = perm_sign(perm)
        for choice in itertools.product(*lists):
            s = ps
            for c in choice:
                s *= c.sign
            out.append(GeneratorTuple(tuple(perm), tuple(choice), s))
    return out


class Grader:
    """Raw and normalised bigradings of tuples over one realisation."""

    def __init__(self, real: Realisation, crossings: dict):
        self.real = real
        self.lb = LoopBuilder(real, crossings)
        n = real.model.n
        self.n = n
        layout = real.model.layout()
        self.punct = [(real.px[i], 0) for i in range(3 * n)]
        self.kind = [k for k, _ in layout]
        self._solo: dict = {}
        self._pair: dict = {}
        x0 = tuple(self.lb.entry)
        self.ref = self.raw(x0)

    def _weights(self, w):
        # q-punctures sit next to their w partner and carry its orientation
        hf = q = 0
        for kind, v in zip(self.kind, w):
            if kind == "Z":
                hf += v
            elif kind == "W":
                hf -= v
            else:
                q -= v
        return hf, q

    def _solo_terms(self, k, x):
        key = (k, x)
        if key not in self._solo:
            p1 = self.lb.phase1_path(k, x)
            p2 = self.lb.phase2_path(x)
            w = [path_crossings(p1, p) + path_crossings(p2, p) for p in self.punct]
            self._solo[key] = self._weights(w)
        return self._solo[key]

    def _f(self, tag, path_key, path, center, first):
        key = (tag, path_key, center, first)
        v = self._pair.get(key)
        if v is None:
            v = path_crossings(path, center, first)
            self._pair[key] = v
        return v

    def raw(self, pts: tuple) -> tuple[int, int]:
        m = self.n - 1
        lb = self.lb
        hf = q = 0
        for k in range(m):
            a, b = self._solo_terms(k, pts[k])
            hf += a
            q += b
        c = 0
        for k in range(m):
            for l in range(k + 1, m):
                xk, xl = pts[k], pts[l]
                c += self._f(1, (k, xk), lb.phase1_path(k, xk), lb.base[l], True)
                c += self._f(1, (l, xl), lb.phase1_path(l, xl), xk.point, False)
                c += self._f(2, xk, lb.phase2_path(xk), xl.point, True)
                c += self._f(2, xl, lb.phase2_path(xl), lb.base[xk.arc], False)
        end = [lb.base[p.arc] for p in pts]
        delta = 2 * c + endpoint_half_turns(lb.base, end)
        return hf, q + delta

    def raw_slow(self, pts: tuple) -> tuple[int, int]:
        loop = self.lb.tuple_loop(list(pts))
        w = winding_vector(loop, self.punct)
        hf, q = self._weights(w)
        return hf, q + pairwise_delta_winding(loop)

    def grade(self, pts: tuple) -> Bigrading:
        hf, q = self.raw(pts)
        return Bigrading(hf - self.ref[0], q - self.ref[1] + self.n - 1)


@dataclass
class OmegaResult:
    word: BraidWord
    omega: LaurentPoly2
    tuples: list
    gradings: list
    prefactor_ex2: int
    prefactor_ed: int
    writhe: int
    components: int
    crossing_counts: dict = field(default_factory=dict)

    def sum_part(self) -> LaurentPoly2:
        s = LaurentPoly2()
        for t, g in zip(self.tuples, self.gradings):
            s = s + LaurentPoly2.monomial(2 * g.a_hf, g.a_qhf, t.sign)
        return s


def transported_model(word: BraidWord):
    return apply_braid(build_initial_model(word.n), word)


def omega_q(word: BraidWord, reduce: bool = True) -> OmegaResult:
    info = closure_info(word)
    n = word.n
    pre_ex2 = info.writhe + n - 1
    pre_ed = info.writhe
    if n == 1:
        omega = LaurentPoly2.monomial(pre_ex2, pre_ed)
        return OmegaResult(word, omega, [GeneratorTuple((), (), 1)], [Bigrading(0, 0)],
                           pre_ex2, pre_ed, info.writhe, info.components)
    model = transported_model(word)
    real = realise(model, reduce=reduce)
    cr = enumerate_pair_intersections(real)
    tuples = enumerate_tuples(cr, n)
    grader = Grader(real, cr)
    grads = [grader.grade(t.crossings) for t in tuples]
    s = LaurentPoly2()
    for t, g in zip(tuples, grads):
        s = s + LaurentPoly2.monomial(2 * g.a_hf, g.a_qhf, t.sign)
    omega = LaurentPoly2.monomial(pre_ex2, pre_ed) * s
    counts = {f"{i},{k}": len(v) for (i, k), v in sorted(cr.items())}
    return OmegaResult(word, omega, tuples, grads, pre_ex2, pre_ed, info.writhe, info.components, counts)


def specialize(poly: LaurentPoly2, mode: str) -> LaurentPoly1:
    if mode == "AlexanderD1":
        return poly.substitute_d(0, 1)
    if mode == "JonesDminusXinv":
        return poly.substitute_d(-2, -1)
    raise ValueError(f"unknown mode {mode}")


JONES_UNIT_RULE = "(-1)^(n-1)"


def alexander_of_braid(word: BraidWord, reduce: bool = True) -> LaurentPoly1:
    info = closure_info(word)
    if not info.is_knot:
        raise NotAKnot(f"closure has {info.components} components")
    p = specialize(omega_q(word, reduce).omega, "AlexanderD1")
    return conway_normalize(p)


def jones_unit(n: int) -> int:
    return -1 if (n - 1) % 2 else 1


def jones_from_omega(res: OmegaResult) -> LaurentPoly1:
    p = specialize(res.omega, "JonesDminusXinv")
    return p * jones_unit(res.word.n)


def jones_of_braid(word: BraidWord, reduce: bool = True) -> LaurentPoly1:
    return jones_from_omega(omega_q(word, reduce))


def tint_jones(res: OmegaResult) -> LaurentPoly1:
    """Jones polynomial read directly off the tuples.

    Each tuple contributes (-1)^{A^q} sign x^{A - A^q}; the prefactor is
    (-1)^w x^{-(w-(n-1))/2}.
    """
    n = res.word.n
    w = res.writhe
    acc: dict[int, int] = {}
    for t, g in zip(res.tuples, res.gradings):
        c = t.sign * (-1 if g.a_qhf % 2 else 1)
        e = 2 * (g.a_hf - g.a_qhf) - (w - (n - 1))
        acc[e] = acc.get(e, 0) + c
    p = LaurentPoly1(acc)
    return p * (-1 if w % 2 else 1)
