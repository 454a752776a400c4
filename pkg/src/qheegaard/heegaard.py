"""Heegaard diagram of a braid closure built from the transported disc model.

The surface is the disc capped off to a sphere, with one tube attached at the
two ends of every arc.  Each alpha curve is an arc closed up through its tube;
the betas are the circles.  Everything here is combinatorial: regions are the
faces of the exact planar drawing, tubes are bookkeeping cells joining the
faces around the two feet of an arc.

Domains are integer multiplicities on faces (plus one multiplicity per tube).
A disc domain is found by propagating multiplicities across edges from the
outer face, then every edge is rechecked.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .braid_core import BraidWord, closure_info
from .disc_model import (
    Crossing,
    DiscModel,
    Realisation,
    chords,
    circle_orientation,
    enumerate_pair_intersections,
    pos_of,
)
from .errors import GeometryDegenerate, NoSolution, NotAKnot, NotSupported, RankDeficient
from .grading import LoopBuilder, TupleLoop, _partial, pairwise_delta_winding, path_crossings

Vertex = tuple


@dataclass(frozen=True)
class Edge:
    curve: tuple          # ("a", i) or ("b", k)
    index: int            # position along the curve
    tail: Vertex
    head: Vertex
    poly: tuple           # polyline in curve direction


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


class RegionComplex:
    """Faces of the arrangement of arcs and circles in the plane.

    Face 0 is the outer face (it contains the disc boundary and, on the
    sphere, the capping disc).
    """

    def __init__(self, real: Realisation, crossings: dict):
        self.real = real
        self.crossings = crossings
        self.n = real.model.n
        self._build_edges()
        self._trace_faces()
        self._assign_holes()
        self._face_data()

    # -- graph -------------------------------------------------------------
    def position(self, v: Vertex):
        if v[0] == "P":
            return (self.real.px[v[1]], 0)
        if v[0] == "pt":
            return (self.real.x[v[1]], 0)
        return v[1]

    def _build_edges(self):
        on_chord: dict = {}
        for lst in self.crossings.values():
            for c in lst:
                on_chord.setdefault((("a", c.arc), c.arc_chord), []).append(c)
                on_chord.setdefault((("b", c.circle), c.circle_chord), []).append(c)
        self.edges: list[Edge] = []
        self.curve_vertices: dict = {}
        self.curve_edges: dict = {}
        by_curve: dict = {}
        for ch in chords(self.real):
            by_curve.setdefault(ch.curve, []).append(ch)
        for key in sorted(by_curve):
            chs = sorted(by_curve[key], key=lambda c: c.index)
            verts: list[Vertex] = []
            pieces = []
            for ch in chs:
                xs = sorted(on_chord.get((key, ch.index), []), key=lambda c: abs(c.point[0] - ch.u))
                seq = [ch.start] + [("X", c.point) for c in xs] + [ch.end]
                for a, b in zip(seq, seq[1:]):
                    pieces.append((ch, a, b))
                if not verts:
                    verts.append(ch.start)
                verts.extend(seq[1:])
            closed = key[0] == "b"
            if closed:
                assert verts[-1] == verts[0]
                verts = verts[:-1]
            eids = []
            for idx, (ch, a, b) in enumerate(pieces):
                pa, pb = self.position(a), self.position(b)
                poly = tuple(_partial(ch, pa[0], pb[0]))
                if poly[0] != pa or poly[-1] != pb:
                    raise GeometryDegenerate("edge does not meet its vertices")
                eids.append(len(self.edges))
                self.edges.append(Edge(key, idx, a, b, poly))
            self.curve_vertices[key] = verts
            self.curve_edges[key] = eids
        self.vpos_on_curve = {
            key: {v: i for i, v in enumerate(vs)} for key, vs in self.curve_vertices.items()
        }
        out: dict = {}
        for e, ed in enumerate(self.edges):
            d0 = (ed.poly[1][0] - ed.poly[0][0], ed.poly[1][1] - ed.poly[0][1])
            d1 = (ed.poly[-2][0] - ed.poly[-1][0], ed.poly[-2][1] - ed.poly[-1][1])
            out.setdefault(ed.tail, []).append((math.atan2(_sgn(d0[1]), _sgn(d0[0])), (e, 1)))
            out.setdefault(ed.head, []).append((math.atan2(_sgn(d1[1]), _sgn(d1[0])), (e, -1)))
        self.rotation = {}
        for v, lst in out.items():
            lst.sort()
            angles = [a for a, _ in lst]
            if len(set(angles)) != len(angles):
                raise GeometryDegenerate(f"overlapping edges at {v}")
            self.rotation[v] = [h for _, h in lst]

    def head(self, h):
        e, s = h
        return self.edges[e].head if s == 1 else self.edges[e].tail

    def tail(self, h):
        e, s = h
        return self.edges[e].tail if s == 1 else self.edges[e].head

    def half_poly(self, h):
        p = self.edges[h[0]].poly
        return p if h[1] == 1 else p[::-1]

    def next_half(self, h):
        v = self.head(h)
        rot = self.rotation[v]
        twin = (h[0], -h[1])
        i = rot.index(twin)
        return rot[i - 1]

    # -- faces -------------------------------------------------------------
    def _trace_faces(self):
        seen = set()
        self.cycles: list[list] = []
        for e in range(len(self.edges)):
            for s in (1, -1):
                h = (e, s)
                if h in seen:
                    continue
                cyc = []
                while h not in seen:
                    seen.add(h)
                    cyc.append(h)
                    h = self.next_half(h)
                self.cycles.append(cyc)
        self.cycle_poly = []
        self.cycle_area2 = []
        for cyc in self.cycles:
            pts: list = []
            for h in cyc:
                pts.extend(self.half_poly(h)[:-1])
            self.cycle_poly.append(pts + [pts[0]])
            a2 = 0
            for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
                a2 += x1 * y2 - x2 * y1
            self.cycle_area2.append(a2)
        # connected components of the drawing
        parent: dict = {}

        def find(v):
            while parent.setdefault(v, v) != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for ed in self.edges:
            parent[find(ed.tail)] = find(ed.head)
        self.cycle_comp = [find(self.edges[c[0][0]].tail) for c in self.cycles]

    def _winds(self, ci: int, pt) -> bool:
        return path_crossings(self.cycle_poly[ci], pt) != 0

    def _assign_holes(self):
        pos = [i for i, a in enumerate(self.cycle_area2) if a > 0]
        pos.sort(key=lambda i: self.cycle_area2[i])
        self.face_of_cycle = {}
        self.face_outer = [None]
        self.face_holes: list[list[int]] = [[]]
        for i in pos:
            self.face_of_cycle[i] = len(self.face_outer)
            self.face_outer.append(i)
            self.face_holes.append([])
        for i, a in enumerate(self.cycle_area2):
            if a > 0:
                continue
            pt = self.position(self.tail(self.cycles[i][0]))
            host = 0
            for j in pos:
                if self.cycle_comp[j] != self.cycle_comp[i] and self._winds(j, pt):
                    host = self.face_of_cycle[j]
                    break
            self.face_of_cycle[i] = host
            self.face_holes[host].append(i)

    def locate(self, pt) -> int:
        """Face containing a point that is not on the drawing."""
        for j in sorted(self.face_of_cycle, key=lambda i: self.cycle_area2[i]):
            if self.cycle_area2[j] > 0 and self._winds(j, pt):
                return self.face_of_cycle[j]
        return 0

    def _face_data(self):
        nf = len(self.face_outer)
        self.n_faces = nf
        self.half_face = {}
        for ci, cyc in enumerate(self.cycles):
            for h in cyc:
                self.half_face[h] = self.face_of_cycle[ci]
        self.left = [self.half_face[(e, 1)] for e in range(len(self.edges))]
        self.right = [self.half_face[(e, -1)] for e in range(len(self.edges))]
        self.chi = []
        for f in range(nf):
            if f == 0:
                self.chi.append(2 - len(self.face_holes[0]))
            else:
                self.chi.append(1 - len(self.face_holes[f]))
        self.corners = [0] * nf
        self.corner_faces: dict = {}
        for ci, cyc in enumerate(self.cycles):
            f = self.face_of_cycle[ci]
            for h in cyc:
                v = self.head(h)
                if v[0] == "X":
                    self.corners[f] += 1
                    self.corner_faces.setdefault(v[1], []).append(f)
        for p, fs in self.corner_faces.items():
            if len(fs) != 4:
                raise GeometryDegenerate(f"crossing {p} has {len(fs)} corners")
        self.adj: list[list] = [[] for _ in range(nf)]
        for e in range(len(self.edges)):
            self.adj[self.left[e]].append((e, self.right[e], 1))
            self.adj[self.right[e]].append((e, self.left[e], -1))

    def puncture_face(self, p: int) -> int:
        """Face around a puncture; an arc end sits on the boundary of one face."""
        cache = self.__dict__.setdefault("_pface", {})
        if p in cache:
            return cache[p]
        v = ("P", p)
        if v in self.rotation:
            fs = {self.half_face[h] for h in self.rotation[v]}
            fs |= {self.half_face[(h[0], -h[1])] for h in self.rotation[v]}
            if len(fs) != 1:
                raise GeometryDegenerate(f"arc end {p} touches {len(fs)} faces")
            f = fs.pop()
        else:
            f = self.locate((self.real.px[p], 0))
        cache[p] = f
        return f

    def regions(self) -> list[dict]:
        out = []
        for f in range(self.n_faces):
            bnd = []
            for ci in ([self.face_outer[f]] if self.face_outer[f] is not None else []) + self.face_holes[f]:
                bnd.append([(self.edges[e].curve, self.edges[e].index, s) for e, s in self.cycles[ci]])
            out.append({"id": f, "chi": self.chi[f], "corners": self.corners[f], "boundary": bnd})
        return out

    # -- chains ------------------------------------------------------------
    def solve(self, chain: dict) -> list[int]:
        """Multiplicities m with m(left) - m(right) = chain(edge), m(outer) = 0."""
        m: list = [None] * self.n_faces
        m[0] = 0
        dq = deque([0])
        while dq:
            f = dq.popleft()
            for e, g, s in self.adj[f]:
                if m[g] is None:
                    m[g] = m[f] - s * chain.get(e, 0)
                    dq.append(g)
        if any(v is None for v in m):
            raise NoSolution("face graph is disconnected")
        if self.residual(m, chain):
            raise NoSolution("boundary condition violated")
        return m

    def boundary(self, m: list[int]) -> dict:
        out = {}
        for e in range(len(self.edges)):
            c = m[self.left[e]] - m[self.right[e]]
            if c:
                out[e] = c
        return out

    def residual(self, m: list[int], chain: dict) -> int:
        b = self.boundary(m)
        keys = set(b) | {e for e, c in chain.items() if c}
        return sum(abs(b.get(e, 0) - chain.get(e, 0)) for e in keys)

    def curve_walk(self, key, v_from, v_to, step: int) -> dict:
        """Edges of a curve walked from one vertex to another (circles wrap)."""
        pos = self.vpos_on_curve[key]
        eids = self.curve_edges[key]
        i, j = pos[v_from], pos[v_to]
        L = len(eids)
        out: dict = {}
        closed = key[0] == "b"
        while i != j:
            if step == 1:
                e = eids[i]
                i = (i + 1) % L if closed else i + 1
            else:
                i = (i - 1) % L if closed else i - 1
                e = eids[i]
            out[e] = out.get(e, 0) + step
        return out


@dataclass
class DomainChain:
    faces: list[int]
    tubes: dict = field(default_factory=dict)   # arc index -> multiplicity

    def __add__(self, other):
        t = dict(self.tubes)
        for k, v in other.tubes.items():
            t[k] = t.get(k, 0) + v
        return DomainChain([a + b for a, b in zip(self.faces, other.faces)], t)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c: int):
        return DomainChain([c * a for a in self.faces], {k: c * v for k, v in self.tubes.items()})

    def is_zero(self) -> bool:
        return not any(self.faces) and not any(self.tubes.values())


@dataclass
class Tube:
    arc: int
    start_face: int
    end_face: int


@dataclass
class HeegaardDiagram:
    word: BraidWord
    genus: int
    real: Realisation
    crossings: dict
    complex: RegionComplex
    loops: LoopBuilder
    tubes: list[Tube]
    traversal: list[int]               # arcs in knot order
    basepoint_w: int                   # puncture index
    basepoint_z: int
    q_points: list[int]
    w_face: int
    z_face: int
    q_faces: list[int]
    o_discs: list[DomainChain]         # O_k: disc bounded by b_k
    alpha_beta: list[list[int]]        # algebraic intersection numbers
    belt_pairing: list[list[int]]
    meta: dict = field(default_factory=dict)

    @property
    def alphas(self):
        return [("a", i) for i in range(self.genus)]

    @property
    def betas(self):
        return [("b", k) for k in range(self.genus)]

    def surface_groups(self) -> list[list[int]]:
        parent = list(range(self.complex.n_faces))

        def find(f):
            while parent[f] != f:
                parent[f] = parent[parent[f]]
                f = parent[f]
            return f

        for t in self.tubes:
            parent[find(t.start_face)] = find(t.end_face)
        groups: dict = {}
        for f in range(self.complex.n_faces):
            groups.setdefault(find(f), []).append(f)
        return sorted(groups.values())

    def region_euler(self, f: int) -> Fraction:
        return Fraction(self.complex.chi[f]) - Fraction(self.complex.corners[f], 4)

    def region_euler4(self) -> list[int]:
        """4 x the Euler measure of every face, as integers."""
        if "_e4" not in self.__dict__:
            self.__dict__["_e4"] = [4 * self.complex.chi[f] - self.complex.corners[f]
                                    for f in range(self.complex.n_faces)]
        return self.__dict__["_e4"]


def knot_traversal(model: DiscModel) -> list[int]:
    """Arcs in the order met along the knot, starting from the arc at z_1.

    Arc k ends at w_{k+2}; the disc O_k leads on to z_{k+2}, where the next
    arc starts.
    """
    n = model.n
    starts = {a.start: i for i, a in enumerate(model.arcs)}
    order = []
    cur = starts.get(pos_of(n, "Z", 1))
    while cur is not None:
        if cur in order:
            raise NotAKnot("arc traversal closes early")
        order.append(cur)
        cur = starts.get(pos_of(n, "Z", cur + 2))
    if len(order) != n - 1:
        raise NotAKnot("closure is not connected")
    return order


def build_heegaard_diagram(model: DiscModel, word: BraidWord, real: Realisation | None = None) -> HeegaardDiagram:
    from .disc_model import realise

    n = word.n
    if n < 2:
        raise NotSupported("a 1-strand braid has no Heegaard data")
    info = closure_info(word)
    if not info.is_knot:
        raise NotAKnot(f"closure has {info.components} components")
    if real is None:
        real = realise(model)
    cr = enumerate_pair_intersections(real)
    cx = RegionComplex(real, cr)
    lb = LoopBuilder(real, cr)
    g = n - 1
    tubes = [Tube(i, cx.puncture_face(a.start), cx.puncture_face(a.end)) for i, a in enumerate(model.arcs)]
    order = knot_traversal(model)
    arc_starts = {a.start for a in model.arcs}
    zs = [pos_of(n, "Z", j) for j in range(1, n + 1)]
    free_z = [p for p in zs if p not in arc_starts]
    if len(free_z) != 1:
        raise GeometryDegenerate("expected exactly one free z puncture")
    w = pos_of(n, "W", 1)
    qs = [pos_of(n, "Q", j) for j in range(1, n + 1)]
    odiscs = []
    for k in range(g):
        o = circle_orientation(real, k)
        chain = {e: o for e in cx.curve_edges[("b", k)]}
        odiscs.append(DomainChain(cx.solve(chain)))
    ab = [[0] * g for _ in range(g)]
    for (i, k), lst in cr.items():
        ab[i][k] = sum(c.sign for c in lst)
    # belt circle of tube i: boundary of the small disc at the foot a_i.start.
    # alpha_j crosses it once for each of its ends at that puncture.
    belt = [[(a.start == model.arcs[i].start) - (a.end == model.arcs[i].start) for a in model.arcs]
            for i in range(g)]
    span = sympy.Matrix(belt).rank() if g else 0
    if span != g:
        raise RankDeficient("alpha classes do not span a genus-dimensional subspace")
    d = HeegaardDiagram(
        word=word, genus=g, real=real, crossings=cr, complex=cx, loops=lb, tubes=tubes,
        traversal=order, basepoint_w=w, basepoint_z=free_z[0], q_points=qs,
        w_face=cx.puncture_face(w), z_face=cx.puncture_face(free_z[0]),
        q_faces=[cx.puncture_face(q) for q in qs], o_discs=odiscs,
        alpha_beta=ab, belt_pairing=belt,
    )
    d.meta["alpha_beta_det"] = int(sympy.Matrix(ab).det())
    d.meta["alpha_span_rank"] = int(span)
    return d


# --- domains between tuples ----------------------------------------------------------


def boundary_cycle(diagram: HeegaardDiagram, x: tuple, y: tuple) -> dict:
    """The 1-cycle l_{x,y}: along alphas from x to y, along betas from y to x.

    Beta pieces follow the access walk of each circle, so the cut point of a
    circle is never crossed.
    """
    cx = diagram.complex
    lb = diagram.loops
    chain: dict = {}

    def add(c: dict, s: int):
        for e, v in c.items():
            chain[e] = chain.get(e, 0) + s * v

    for pts, s in ((x, 1), (y, -1)):
        for k, c in enumerate(pts):
            key = ("b", k)
            add(cx.curve_walk(key, ("X", lb.entry[k].point), ("X", c.point), lb.entry_dir[k]), s)
            akey = ("a", c.arc)
            end = cx.curve_vertices[akey][-1]
            add(cx.curve_walk(akey, ("X", c.point), end, 1), s)
    return {e: v for e, v in chain.items() if v}


def domain_between(diagram: HeegaardDiagram, x: tuple, y: tuple) -> DomainChain:
    """Disc domain with boundary l_{x,y}; x and y are tuples of crossings."""
    if tuple(x) == tuple(y):
        return DomainChain([0] * diagram.complex.n_faces)
    return DomainChain(diagram.complex.solve(boundary_cycle(diagram, x, y)))


def _mult_at(diagram: HeegaardDiagram, chain: DomainChain, p: int) -> int:
    return chain.faces[diagram.complex.puncture_face(p)]


def push_domain_to_surface(diagram: HeegaardDiagram, chain: DomainChain, trace: list | None = None) -> DomainChain:
    """Add tubes along the knot order, correcting each with the disc O_k.

    If trace is a list, the value n_z - n_w over the remaining base points is
    appended before the first step and after every step.
    """
    model = diagram.real.model
    n = model.n
    d = DomainChain(list(chain.faces), dict(chain.tubes))
    remaining = list(diagram.traversal)

    def diff():
        zs = [model.arcs[i].start for i in remaining] + [diagram.basepoint_z]
        ws = [model.arcs[i].end for i in remaining] + [diagram.basepoint_w]
        return sum(_mult_at(diagram, d, p) for p in zs) - sum(_mult_at(diagram, d, p) for p in ws)

    if trace is not None:
        trace.append(diff())
    for i in diagram.traversal:
        arc = model.arcs[i]
        m = _mult_at(diagram, d, arc.start)
        s = _mult_at(diagram, d, arc.end)
        d.tubes[i] = d.tubes.get(i, 0) + m
        if m != s:
            d = d + diagram.o_discs[i].scaled(m - s)
        remaining.remove(i)
        if trace is not None:
            trace.append(diff())
    for t in diagram.tubes:
        if not (d.faces[t.start_face] == d.faces[t.end_face] == d.tubes[t.arc]):
            raise NoSolution("surface domain is not constant across a tube")
    return d


def domain_gradings(diagram: HeegaardDiagram, chain: DomainChain, x: tuple | None = None, y: tuple | None = None):
    """(n_z - n_w, -n_q + n_d) of a domain from x to y.

    q-points carry the orientation of their w partners.  n_d is the
    half-turn count of the boundary tuple-loop l_x followed by l_y reversed;
    without tuples it is taken as zero.
    """
    a = chain.faces[diagram.z_face] - chain.faces[diagram.w_face]
    nq = sum(chain.faces[f] for f in diagram.q_faces)
    nd = 0
    if x is not None and y is not None:
        nd = diagonal_winding(diagram, x, y)
    return a, -nq + nd


def reverse_loop(loop: TupleLoop) -> TupleLoop:
    return TupleLoop(loop.end(), [(k, p[::-1]) for k, p in reversed(loop.motions)])


def concat_loops(first: TupleLoop, second: TupleLoop) -> TupleLoop:
    """first then second, relabelling second's components by position."""
    where = {p: k for k, p in enumerate(first.end())}
    relabel = {k: where[p] for k, p in enumerate(second.start)}
    return TupleLoop(list(first.start), first.motions + [(relabel[k], p) for k, p in second.motions])


def diagonal_winding(diagram: HeegaardDiagram, x: tuple, y: tuple) -> int:
    lb = diagram.loops
    loop = concat_loops(lb.tuple_loop(list(x)), reverse_loop(lb.tuple_loop(list(y))))
    return pairwise_delta_winding(loop)


def whole_surface(diagram: HeegaardDiagram) -> DomainChain:
    return DomainChain([1] * diagram.complex.n_faces, {t.arc: 1 for t in diagram.tubes})


# --- export ----------------------------------------------------------------------------


def diagram_text(diagram: HeegaardDiagram) -> str:
    cx = diagram.complex
    lines = [
        f"braid {diagram.word.text()} n={diagram.word.n} genus={diagram.genus}",
        f"basepoints w=face{diagram.w_face} z=face{diagram.z_face} q=" + ",".join(f"face{f}" for f in diagram.q_faces),
    ]
    for t in diagram.tubes:
        lines.append(f"tube a{t.arc} joins face{t.start_face} face{t.end_face}")
    for key in sorted(cx.curve_edges):
        name = ("alpha" if key[0] == "a" else "beta") + str(key[1])
        word = " ".join(f"e{e}" for e in cx.curve_edges[key])
        close = f" | tube{key[1]}" if key[0] == "a" else ""
        lines.append(f"{name}: {word}{close}")
    for r in cx.regions():
        bd = " ; ".join(" ".join(f"{c[0]}{c[1]}.{i}{'+' if s > 0 else '-'}" for c, i, s in cyc) for cyc in r["boundary"])
        lines.append(f"face{r['id']} chi={r['chi']} corners={r['corners']} : {bd}")
    return "\n".join(lines) + "\n"


def diagram_json(diagram: HeegaardDiagram) -> dict:
    cx = diagram.complex
    return {
        "braid": diagram.word.text(),
        "n": diagram.word.n,
        "genus": diagram.genus,
        "basepoints": {"w": diagram.w_face, "z": diagram.z_face, "q": diagram.q_faces},
        "tubes": [{"arc": t.arc, "faces": [t.start_face, t.end_face]} for t in diagram.tubes],
        "curves": {
            ("alpha" if k[0] == "a" else "beta") + str(k[1]): cx.curve_edges[k] for k in sorted(cx.curve_edges)
        },
        "regions": [{"id": r["id"], "chi": r["chi"], "corners": r["corners"]} for r in cx.regions()],
        "alpha_beta": diagram.alpha_beta,
        "alpha_beta_det": diagram.meta.get("alpha_beta_det"),
    }
