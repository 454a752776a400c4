"""The punctured-disc configuration: punctures, arcs a_i, circles b_i.

Curves are stored as crossing words (see curves.py) and realised on demand
as exact integer polylines: every chord between two consecutive line
crossings is drawn as a 45-degree tent over the line, so two chords in the
same half-plane meet iff their endpoints interleave, and then exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from .braid_core import BraidWord
from .curves import DOWN, UP, ArcWord, CircleWord, reduce_circle, twist_arc
from .errors import GeometryDegenerate

SCALE = 8  # line objects sit at SCALE * rank; keeps every derived point integral


@dataclass(frozen=True)
class Puncture:
    id: int            # position on the line, left to right
    kind: str          # "Z", "W" or "Q"
    index: int         # 1..n
    position: tuple    # (x, y), filled in by the realisation


def puncture_layout(n: int) -> list[tuple[str, int]]:
    """z_1..z_n, then q_j, w_j for j = n..1."""
    out = [("Z", j) for j in range(1, n + 1)]
    for j in range(n, 0, -1):
        out += [("Q", j), ("W", j)]
    return out


def pos_of(n: int, kind: str, j: int) -> int:
    if kind == "Z":
        return j - 1
    base = n + 2 * (n - j)
    return base if kind == "Q" else base + 1


@dataclass(frozen=True)
class DiscModel:
    n: int
    arcs: tuple[ArcWord, ...]
    circles: tuple[CircleWord, ...]
    word: tuple[int, ...] = ()

    @property
    def n_punctures(self) -> int:
        return 3 * self.n

    def layout(self):
        return puncture_layout(self.n)


def build_initial_model(n: int) -> DiscModel:
    if n < 1:
        raise ValueError("n must be positive")
    arcs = []
    circles = []
    for k in range(1, n):
        z = pos_of(n, "Z", k + 1)
        w = pos_of(n, "W", k + 1)
        q = pos_of(n, "Q", k + 1)
        arcs.append(ArcWord(z, w, (), DOWN))
        A, B, S, C, E = z, z + 1, q, q + 1, w + 1
        circles.append(reduce_circle(CircleWord((A, B, S, E, C, S), UP)))
    return DiscModel(n, tuple(arcs), tuple(circles))


def apply_braid(model: DiscModel, word: BraidWord) -> DiscModel:
    if word.n != model.n:
        raise ValueError("strand count mismatch")
    arcs = list(model.arcs)
    for k in word.letters:
        p = pos_of(model.n, "Z", abs(k))
        arcs = [twist_arc(a, p, k > 0) for a in arcs]
    return DiscModel(model.n, tuple(arcs), model.circles, model.word + word.letters)


# --- realisation ------------------------------------------------------------


@dataclass
class Realisation:
    """Exact drawing of a model.

    points: list of (segment, curve, index); curve is ("a", i) or ("b", i)
    order: per segment, point ids left to right
    x: integer x-coordinate of every point id
    px: integer x-coordinate of every puncture
    """

    model: DiscModel
    points: list
    order: dict
    x: list = field(default_factory=list)
    px: list = field(default_factory=list)
    curve_points: dict = field(default_factory=dict)


def _curve_list(model: DiscModel):
    out = []
    for i, a in enumerate(model.arcs):
        out.append((("a", i), a))
    for i, c in enumerate(model.circles):
        out.append((("b", i), c))
    return out


def _chord_ends(curve, word, pts, t, h):
    """Other endpoint of the chord in half-plane h at crossing t of a curve.

    Returns ("pt", point_id) or ("P", puncture).
    """
    L = len(word.segs)
    if curve[0] == "a":
        sides = word.sides()
        c = t if sides[t] == h else t + 1
        if c == t:
            return ("P", word.start) if t == 0 else ("pt", pts[t - 1])
        return ("P", word.end) if t == L - 1 else ("pt", pts[t + 1])
    sides = word.sides()
    if sides[t] == h:
        return ("pt", pts[(t + 1) % L])
    return ("pt", pts[(t - 1) % L])


class _Orderer:
    def __init__(self, model: DiscModel):
        self.model = model
        self.curves = _curve_list(model)
        self.points = []
        self.curve_points = {}
        for key, word in self.curves:
            ids = []
            for t, s in enumerate(word.segs):
                ids.append(len(self.points))
                self.points.append((s, key, t))
            self.curve_points[key] = ids
        self.words = dict(self.curves)
        self.limit = 4 * len(self.points) + 8

    def land(self, pid, h):
        s, key, t = self.points[pid]
        return _chord_ends(key, self.words[key], self.curve_points[key], t, h)

    def line_pos(self, end):
        if end[0] == "P":
            return 2 * end[1] + 1
        return 2 * self.points[end[1]][0]

    def cmp(self, x, y) -> int:
        if x == y:
            return 0
        h = UP
        flip = 1
        a, b = x, y
        for _ in range(self.limit):
            s = self.points[a][0]
            la, lb = self.land(a, h), self.land(b, h)
            if la[0] == "pt" and lb[0] == "pt" and self.points[la[1]][0] == self.points[lb[1]][0]:
                if la[1] == lb[1]:
                    raise GeometryDegenerate("two chords share an endpoint")
                a, b = la[1], lb[1]
                h = -h
                flip = -flip
                continue
            pa, pb = self.line_pos(la), self.line_pos(lb)
            if pa == pb:
                raise GeometryDegenerate("two chords end at the same puncture")
            c = 2 * s
            if (pa < c) != (pb < c):
                r = -1 if pa < c else 1
            else:
                r = -1 if pa > pb else 1
            return r * flip
        # parallel forever: break ties by identity
        kx, ky = self.points[x][1:], self.points[y][1:]
        return -1 if kx < ky else 1

    def order(self):
        by_seg: dict[int, list[int]] = {}
        for pid, (s, _, _) in enumerate(self.points):
            by_seg.setdefault(s, []).append(pid)
        return {s: sorted(ids, key=cmp_to_key(self.cmp)) for s, ids in by_seg.items()}


def realise(model: DiscModel, reduce: bool = True) -> Realisation:
    o = _Orderer(model)
    order = o.order()
    r = Realisation(model, o.points, order, curve_points=o.curve_points)
    _assign_coordinates(r)
    if reduce:
        reduce_bigons(r)
    check_embedding(r)
    return r


def _assign_coordinates(r: Realisation):
    m = r.model.n_punctures
    x = [0] * len(r.points)
    px = [0] * m
    rank = 0
    for s in range(m + 1):
        for pid in r.order.get(s, []):
            x[pid] = SCALE * rank
            rank += 1
        if s < m:
            px[s] = SCALE * rank
            rank += 1
    r.x, r.px = x, px


# --- chords -------------------------------------------------------------------


@dataclass(frozen=True)
class Chord:
    curve: tuple      # ("a", i) or ("b", i)
    index: int        # chord index along the curve
    side: int
    u: int            # x-coordinate where the chord starts (curve direction)
    v: int            # x-coordinate where it ends
    start: tuple      # ("pt", id) or ("P", puncture)
    end: tuple


def chords(r: Realisation) -> list[Chord]:
    out = []
    for key, word in _curve_list(r.model):
        pts = r.curve_points[key]
        sides = word.sides()
        L = len(word.segs)
        if key[0] == "a":
            ends = [("P", word.start)] + [("pt", p) for p in pts] + [("P", word.end)]
            for c in range(L + 1):
                out.append(Chord(key, c, sides[c], _xof(r, ends[c]), _xof(r, ends[c + 1]), ends[c], ends[c + 1]))
        else:
            for t in range(L):
                a, b = ("pt", pts[t]), ("pt", pts[(t + 1) % L])
                out.append(Chord(key, t, sides[t], _xof(r, a), _xof(r, b), a, b))
    return out


def _xof(r: Realisation, end) -> int:
    return r.px[end[1]] if end[0] == "P" else r.x[end[1]]


def interleaved(c1: Chord, c2: Chord) -> bool:
    if c1.side != c2.side:
        return False
    a1, b1 = sorted((c1.u, c1.v))
    a2, b2 = sorted((c2.u, c2.v))
    if len({a1, b1, a2, b2}) < 4:
        return False
    return (a1 < a2 < b1) != (a1 < b2 < b1)


def apex(c: Chord) -> tuple[int, int]:
    return ((c.u + c.v) // 2, c.side * abs(c.v - c.u) // 2)


def chord_polyline(c: Chord) -> list[tuple[int, int]]:
    return [(c.u, 0), apex(c), (c.v, 0)]


def crossing_point(c1: Chord, c2: Chord) -> tuple[int, int]:
    """Intersection of two interleaved tents (exact, integral)."""
    a1, b1 = sorted((c1.u, c1.v))
    a2, b2 = sorted((c2.u, c2.v))
    if a2 < a1:
        a1, b1, a2, b2 = a2, b2, a1, b1
    # a1 < a2 < b1 < b2: descending side of the first meets ascending side of the second
    x = (b1 + a2) // 2
    return (x, c1.side * (b1 - a2) // 2)


def tangent_at(c: Chord, pt: tuple[int, int]) -> tuple[int, int]:
    """Direction of travel of the chord at a point of it (not the apex)."""
    mx = (c.u + c.v) // 2
    dx = 1 if c.v > c.u else -1
    # before the apex the tent moves away from the line, after it towards it
    before = (pt[0] - mx) * dx < 0
    return (dx, c.side if before else -c.side)


def check_embedding(r: Realisation):
    """Arcs pairwise disjoint, circles pairwise disjoint, no self-crossings."""
    ch = chords(r)
    by_kind = {"a": [c for c in ch if c.curve[0] == "a"], "b": [c for c in ch if c.curve[0] == "b"]}
    for kind, lst in by_kind.items():
        for side in (UP, DOWN):
            sub = sorted((min(c.u, c.v), max(c.u, c.v)) for c in lst if c.side == side)
            # laminar family test: intervals must be nested or disjoint
            stack: list[int] = []
            for a, b in sub:
                while stack and stack[-1] < a:
                    stack.pop()
                if stack and stack[-1] < b:
                    raise GeometryDegenerate(f"{kind}-curves cross each other")
                stack.append(b)


# --- bigon removal ---------------------------------------------------------------


def _point_chords(r: Realisation):
    """For every point id, its two chords keyed by side."""
    out: dict[int, dict[int, Chord]] = {}
    for c in chords(r):
        for e in (c.start, c.end):
            if e[0] == "pt":
                out.setdefault(e[1], {})[c.side] = c
    return out


def _other_end(c: Chord, pid: int):
    return c.end if c.start == ("pt", pid) else c.start


def find_bigons(r: Realisation) -> list[list[tuple[int, int]]]:
    """Innermost empty arc/circle bigons, as lists of adjacent (arc pt, circle pt) pairs."""
    ch = chords(r)
    pc = _point_chords(r)
    rank = {}
    for s, ids in r.order.items():
        for i, pid in enumerate(ids):
            rank[pid] = (s, i)
    arc_ch = [c for c in ch if c.curve[0] == "a"]
    circ_ch = [c for c in ch if c.curve[0] == "b"]
    found = []
    used_pts: set[int] = set()
    used_x: set = set()
    for ca in arc_ch:
        for cb in circ_ch:
            if not interleaved(ca, cb):
                continue
            if (ca, cb) in used_x:
                continue
            for ea in (ca.start, ca.end):
                if ea[0] != "pt":
                    continue
                for eb in (cb.start, cb.end):
                    if eb[0] != "pt":
                        continue
                    stretch = _walk(r, pc, rank, ca, cb, ea[1], eb[1])
                    if stretch is None:
                        continue
                    pairs, endpair = stretch
                    pts = {p for pr in pairs for p in pr}
                    if pts & used_pts or (ca, cb) in used_x or endpair in used_x:
                        continue
                    used_pts |= pts
                    used_x.add((ca, cb))
                    used_x.add(endpair)
                    found.append(pairs)
    return found


def _walk(r, pc, rank, ca, cb, pa, pb):
    pairs = []
    cur_a, cur_b = ca, cb
    while True:
        sa, ia = rank[pa]
        sb, ib = rank[pb]
        if sa != sb or abs(ia - ib) != 1:
            return None
        pairs.append((pa, pb))
        na = pc[pa][-cur_a.side]
        nb = pc[pb][-cur_b.side]
        if interleaved(na, nb):
            return pairs, (na, nb)
        ea, eb = _other_end(na, pa), _other_end(nb, pb)
        if ea[0] != "pt" or eb[0] != "pt":
            return None
        if len(pairs) > len(r.points):
            return None
        pa, pb, cur_a, cur_b = ea[1], eb[1], na, nb


def reduce_bigons(r: Realisation) -> int:
    removed = 0
    while True:
        bigons = find_bigons(r)
        if not bigons:
            return removed
        for pairs in bigons:
            for pa, pb in pairs:
                s = r.points[pa][0]
                lst = r.order[s]
                i, j = lst.index(pa), lst.index(pb)
                lst[i], lst[j] = lst[j], lst[i]
            removed += 1
        _assign_coordinates(r)


# --- intersections ---------------------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    """A point of a'_i and b_k."""

    arc: int
    circle: int
    point: tuple[int, int]
    sign: int
    arc_chord: int
    circle_chord: int


def circle_orientation(r: Realisation, k: int) -> int:
    """+1 if circle k's crossing word runs counterclockwise in the drawing."""
    area2 = 0
    poly = []
    for c in chords(r):
        if c.curve == ("b", k):
            poly.extend(chord_polyline(c)[:-1])
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        area2 += x1 * y2 - x2 * y1
    if area2 == 0:
        raise GeometryDegenerate("circle with zero area")
    return 1 if area2 > 0 else -1


def enumerate_pair_intersections(r: Realisation) -> dict[tuple[int, int], list[Crossing]]:
    """All crossings of arcs with circles, keyed by (arc, circle), ordered along the arc."""
    ch = chords(r)
    orient = {k: circle_orientation(r, k) for k in range(len(r.model.circles))}
    arc_ch = [c for c in ch if c.curve[0] == "a"]
    circ_ch = [c for c in ch if c.curve[0] == "b"]
    out: dict[tuple[int, int], list[Crossing]] = {}
    for i in range(len(r.model.arcs)):
        for k in range(len(r.model.circles)):
            out[(i, k)] = []
    for ca in arc_ch:
        for cb in circ_ch:
            if not interleaved(ca, cb):
                continue
            p = crossing_point(ca, cb)
            ta = tangent_at(ca, p)
            tb = tangent_at(cb, p)
            tb = (tb[0] * orient[cb.curve[1]], tb[1] * orient[cb.curve[1]])
            cross = ta[0] * tb[1] - ta[1] * tb[0]
            if cross == 0:
                raise GeometryDegenerate("tangential crossing")
            out[(ca.curve[1], cb.curve[1])].append(
                Crossing(ca.curve[1], cb.curve[1], p, 1 if cross > 0 else -1, ca.index, cb.index)
            )
    for key, lst in out.items():
        lst.sort(key=lambda c: _arc_param(r, c))
    return out


def _arc_param(r: Realisation, c: Crossing):
    """Position along the arc: chord index then distance travelled in that chord."""
    a = r.model.arcs[c.arc]
    pts = r.curve_points[("a", c.arc)]
    u = r.px[a.start] if c.arc_chord == 0 else r.x[pts[c.arc_chord - 1]]
    return (c.arc_chord, abs(c.point[0] - u))


def dump_text(r: Realisation) -> str:
    """One line per primitive: punctures, chords, crossings.  Coordinates are exact."""

    def q(v) -> str:
        f = Fraction(v)
        return f"{f.numerator}/{f.denominator}"

    n = r.model.n
    lines = [f"model n={n} punctures={r.model.n_punctures}"]
    for i, (kind, j) in enumerate(puncture_layout(n)):
        lines.append(f"puncture {kind.lower()}{j} index={i} at=({q(r.px[i])},0/1)")
    for c in sorted(chords(r), key=lambda c: (c.curve, c.index)):
        ax, ay = apex(c)
        name = ("a" if c.curve[0] == "a" else "b") + str(c.curve[1] + 1)
        lines.append(f"chord {name}.{c.index} from=({q(c.u)},0/1) apex=({q(ax)},{q(ay)}) to=({q(c.v)},0/1)")
    cr = enumerate_pair_intersections(r)
    for (i, k), lst in sorted(cr.items()):
        for c in lst:
            lines.append(f"crossing a{i + 1}xb{k + 1} at=({q(c.point[0])},{q(c.point[1])}) sign={c.sign:+d}")
    return "\n".join(lines) + "\n"
