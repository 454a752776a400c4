"""Desk-scale knot Floer homology over the braid Heegaard diagram.

Maslov gradings come from the Lipshitz index of surface domains.  The
differential counts embedded bigons that miss both base points, over F_2.
Anything else of index one is refused.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonBigonIndexOne
from .heegaard import (
    DomainChain,
    HeegaardDiagram,
    domain_between,
    push_domain_to_surface,
    whole_surface,
)
from .intersection_form import GeneratorTuple, Grader, enumerate_tuples
from .laurent import LaurentPoly1, conway_normalize


def euler_measure(diagram: HeegaardDiagram, chain: DomainChain) -> Fraction:
    e4 = diagram.region_euler4()
    e = Fraction(sum(m * e4[f] for f, m in enumerate(chain.faces) if m), 4)
    # gluing a tube costs one unit of Euler characteristic in its region
    e -= sum(chain.tubes.values())
    return e


def point_measure(diagram: HeegaardDiagram, chain: DomainChain, pts: tuple) -> Fraction:
    total = Fraction(0)
    for c in pts:
        fs = diagram.complex.corner_faces[c.point]
        total += Fraction(sum(chain.faces[f] for f in fs), 4)
    return total


def lipshitz_index(diagram: HeegaardDiagram, chain: DomainChain, x: tuple, y: tuple) -> int:
    mu = euler_measure(diagram, chain) + point_measure(diagram, chain, x) + point_measure(diagram, chain, y)
    if mu.denominator != 1:
        raise ValueError(f"non-integral index {mu}")
    return int(mu)


@dataclass
class BigradedGenerator:
    tuple: GeneratorTuple
    maslov: int
    alexander: int


@dataclass
class HFKData:
    diagram: HeegaardDiagram
    generators: list[BigradedGenerator]
    surface_domains: list[DomainChain]     # from each generator to the reference
    reference: int
    maslov_shift: int
    alexander_shift: int
    meta: dict = field(default_factory=dict)


def _surface_to_reference(diagram: HeegaardDiagram, tuples, ref: tuple):
    return [push_domain_to_surface(diagram, domain_between(diagram, t.crossings, ref)) for t in tuples]


def bigraded_generators(diagram: HeegaardDiagram) -> HFKData:
    """All generators with absolute (Maslov, Alexander) gradings.

    Relative gradings come from domains to the canonical generator.  The
    absolute shift puts the bottom of the Euler characteristic's support at
    Alexander grading 0, so the support is [0, 2g], and the top Maslov grading
    at Alexander 0 at -g.  A lone generator lands at (0, 0); the (2, 2k+1)
    torus knots land at their usual tables shifted by (g, g).
    """
    n = diagram.word.n
    tuples = enumerate_tuples(diagram.crossings, n)
    ref = tuple(diagram.loops.entry)
    ridx = [i for i, t in enumerate(tuples) if t.crossings == ref]
    if len(ridx) != 1:
        raise AssertionError("canonical generator missing")
    grader = Grader(diagram.real, diagram.crossings)
    doms = _surface_to_reference(diagram, tuples, ref)
    rel_m = []
    rel_a = []
    for t, d in zip(tuples, doms):
        mu = lipshitz_index(diagram, d, t.crossings, ref)
        nw = d.faces[diagram.w_face]
        rel_m.append(mu - 2 * nw)
        rel_a.append(grader.grade(t.crossings).a_hf)
    chi: dict[int, int] = {}
    for m, a in zip(rel_m, rel_a):
        chi[a] = chi.get(a, 0) + (-1 if m % 2 else 1)
    support = [a for a, c in chi.items() if c]
    if not support:
        raise AssertionError("generator Euler characteristic vanishes")
    amin, amax = min(support), max(support)
    g = (amax - amin) // 2
    low = [m for m, a in zip(rel_m, rel_a) if a == amin]
    mshift = -g - max(low)
    gens = [BigradedGenerator(t, m + mshift, a - amin) for t, m, a in zip(tuples, rel_m, rel_a)]
    return HFKData(diagram, gens, doms, ridx[0], mshift, -amin,
                   {"normalisation": "Euler support -> [0, 2g], top Maslov at Alexander 0 -> -g", "genus_bound": g})


@dataclass
class RankTable:
    entries: dict          # (maslov, alexander) -> rank

    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict:
        return {"entries": [{"maslov": m, "alexander": a, "rank": r}
                            for (m, a), r in sorted(self.entries.items()) if r]}

    def to_text(self) -> str:
        if not any(self.entries.values()):
            return "(zero)\n"
        ms = sorted({m for m, _ in self.entries})
        als = sorted({a for _, a in self.entries})
        head = "M\\A " + " ".join(f"{a:>3}" for a in als)
        rows = [head]
        for m in reversed(ms):
            rows.append(f"{m:>3} " + " ".join(f"{self.entries.get((m, a), 0) or '.':>3}" for a in als))
        return "\n".join(rows) + "\n"


def _is_embedded_bigon(diagram, dom: DomainChain, x: tuple, y: tuple) -> bool:
    if any(v not in (0, 1) for v in dom.faces) or any(v not in (0, 1) for v in dom.tubes.values()):
        return False
    moved = [k for k in range(len(x)) if x[k] != y[k]]
    if len(moved) != 1:
        return False
    k = moved[0]
    if euler_measure(diagram, dom) != Fraction(1, 2):
        return False
    if point_measure(diagram, dom, (x[k],)) != Fraction(1, 4) or point_measure(diagram, dom, (y[k],)) != Fraction(1, 4):
        return False
    others = tuple(c for j, c in enumerate(x) if j != k)
    return point_measure(diagram, dom, others) == 0


def differential(data: HFKData) -> list[tuple[int, int]]:
    """Pairs (i, j) with a counted bigon from generator i to generator j."""
    diagram = data.diagram
    gens = data.generators
    sigma = whole_surface(diagram)
    by_grade: dict = {}
    for i, g in enumerate(gens):
        by_grade.setdefault((g.maslov, g.alexander), []).append(i)
    arrows = []
    for i, g in enumerate(gens):
        for j in by_grade.get((g.maslov - 1, g.alexander), []):
            d = data.surface_domains[i] - data.surface_domains[j]
            d = d - sigma.scaled(d.faces[diagram.w_face])
            if any(v < 0 for v in d.faces) or any(v < 0 for v in d.tubes.values()):
                continue
            x, y = g.tuple.crossings, gens[j].tuple.crossings
            if _is_embedded_bigon(diagram, d, x, y):
                arrows.append((i, j))
            else:
                raise NonBigonIndexOne(
                    f"index-1 positive domain between generators {i} and {j} is not an embedded bigon"
                )
    return arrows


def _rank_f2(rows: list[int]) -> int:
    """Rank over F_2 of a matrix given as integer bitmasks."""
    basis: dict = {}
    r = 0
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                r += 1
                break
    return r


def bigon_homology_ranks(diagram: HeegaardDiagram, data: HFKData | None = None) -> RankTable:
    data = data or bigraded_generators(diagram)
    gens = data.generators
    arrows = differential(data)
    counts: dict = {}
    for g in gens:
        counts[(g.maslov, g.alexander)] = counts.get((g.maslov, g.alexander), 0) + 1
    # matrix of d restricted to each bigrading, as bitmasks over targets
    out_rows: dict = {}
    for i, j in arrows:
        out_rows[i] = out_rows.get(i, 0) ^ (1 << j)
    # d o d = 0
    for i, row in out_rows.items():
        acc = 0
        for j in range(len(gens)):
            if row >> j & 1:
                acc ^= out_rows.get(j, 0)
        if acc:
            raise AssertionError("d o d != 0")
    rank_from: dict = {}
    for key in counts:
        idx = [i for i, g in enumerate(gens) if (g.maslov, g.alexander) == key]
        rank_from[key] = _rank_f2([out_rows.get(i, 0) for i in idx])
    ranks = {}
    for (m, a), c in counts.items():
        r = c - rank_from[(m, a)] - rank_from.get((m + 1, a), 0)
        if r:
            ranks[(m, a)] = r
    return RankTable(ranks)


def euler_char_check(diagram: HeegaardDiagram, data: HFKData | None = None) -> LaurentPoly1:
    data = data or bigraded_generators(diagram)
    acc: dict = {}
    for g in data.generators:
        acc[2 * g.alexander] = acc.get(2 * g.alexander, 0) + (-1 if g.maslov % 2 else 1)
    return conway_normalize(LaurentPoly1(acc))
