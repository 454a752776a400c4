"""Local-system gradings of intersection tuples.

A tuple's loop moves the n-1 configuration points in two phases: first each
point k runs from its base point d^k to the entry point of circle b_k and
along b_k to x_k, then each point runs along its arc back to a base point.
Points move one at a time, which keeps them apart because the traces of
different components are disjoint.

Monodromy around a puncture is counted by signed crossings of a ray going
straight up from it.  The swap class delta is counted in half-turns of the
difference vector of each pair of points.  A ray that is exactly vertical is
tilted infinitesimally to the right, so every count is an exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ComponentCollision, PathThroughPuncture

Point = tuple[int, int]


def side(v: Point) -> int:
    """Side of the tilted vertical ray through the origin: +1 right, -1 left."""
    if v[0] != 0:
        return 1 if v[0] > 0 else -1
    if v[1] == 0:
        raise ZeroDivisionError
    return -1 if v[1] > 0 else 1


def cut_crossings(va: Point, vb: Point) -> int:
    """Signed crossings of the segment va->vb with the upward (tilted) ray.

    +1 for a counterclockwise crossing.  Raises ZeroDivisionError if the
    segment passes through the origin.
    """
    sa, sb = side(va), side(vb)
    if sa == sb:
        return 0
    dx = vb[0] - va[0]
    if dx == 0:
        raise ZeroDivisionError
    num = va[1] * vb[0] - va[0] * vb[1]
    if num == 0:
        raise ZeroDivisionError
    above = (num > 0) == (dx > 0)
    if not above:
        return 0
    return 1 if sa > 0 else -1


def path_crossings(path: list[Point], center: Point, moving_first: bool = True) -> int:
    """Cut crossings of (path - center), or of (center - path) if moving_first is False."""
    total = 0
    cx, cy = center
    for a, b in zip(path, path[1:]):
        if moving_first:
            va, vb = (a[0] - cx, a[1] - cy), (b[0] - cx, b[1] - cy)
        else:
            va, vb = (cx - a[0], cy - a[1]), (cx - b[0], cy - b[1])
        total += cut_crossings(va, vb)
    return total


def _side_safe(v, what):
    try:
        return side(v)
    except ZeroDivisionError:
        raise ComponentCollision(what) from None


@dataclass
class TupleLoop:
    """Sequential loop in configuration space.

    start: base positions of the components
    motions: ordered (component, polyline) moves; each polyline starts at the
             component's current position
    """

    start: list[Point]
    motions: list[tuple[int, list[Point]]]

    def end(self) -> list[Point]:
        pos = list(self.start)
        for k, path in self.motions:
            pos[k] = path[-1]
        return pos


def winding_vector(loop: TupleLoop, punctures: list[Point]) -> list[int]:
    """Total signed winding of all components around each puncture.

    The loop must close up as a set of points; then the per-segment counts
    add up to an integer winding number.
    """
    out = []
    for p in punctures:
        w = 0
        for _, path in loop.motions:
            try:
                w += path_crossings(path, p)
            except ZeroDivisionError:
                raise PathThroughPuncture(f"path meets puncture at {p}") from None
        out.append(w)
    return out


def pairwise_delta_winding(loop: TupleLoop) -> int:
    """Total half-turns of all pairwise difference vectors along the loop."""
    pos = list(loop.start)
    m = len(pos)
    crossings = 0
    for k, path in loop.motions:
        for l in range(m):
            if l == k:
                continue
            try:
                if k < l:
                    crossings += path_crossings(path, pos[l], True)
                else:
                    crossings += path_crossings(path, pos[l], False)
            except ZeroDivisionError:
                raise ComponentCollision(f"components {k} and {l} collide") from None
        pos[k] = path[-1]
    return 2 * crossings + endpoint_half_turns(loop.start, pos)


def endpoint_half_turns(start: list[Point], end: list[Point]) -> int:
    """Half-turn correction when the loop permutes the base points."""
    index = {p: i for i, p in enumerate(start)}
    if set(index) != set(end) or len(index) != len(start):
        raise ValueError("loop does not return to the base configuration")
    perm = [index[p] for p in end]
    total = 0
    m = len(start)
    for k in range(m):
        for l in range(k + 1, m):
            i, j = perm[k], perm[l]
            if i > j:
                u = (start[j][0] - start[i][0], start[j][1] - start[i][1])
                total += 1 if _side_safe(u, "base points coincide") < 0 else -1
    return total


@dataclass(frozen=True)
class Bigrading:
    a_hf: int
    a_qhf: int


# --- loops attached to intersection tuples -----------------------------------------


def _tent_point(c, x: int) -> Point:
    """Point of chord c with abscissa x."""
    a, b = sorted((c.u, c.v))
    h = min(x - a, b - x)
    return (x, c.side * h)


def _partial(c, x1: int, x2: int) -> list[Point]:
    """Polyline along chord c from abscissa x1 to x2."""
    mx = (c.u + c.v) // 2
    pts = [_tent_point(c, x1)]
    if (x1 - mx) * (x2 - mx) < 0:
        pts.append((mx, c.side * abs(c.v - c.u) // 2))
    pts.append(_tent_point(c, x2))
    return pts


def _join(paths: list[list[Point]]) -> list[Point]:
    out: list[Point] = []
    for p in paths:
        if out and p and out[-1] == p[0]:
            out.extend(p[1:])
        else:
            out.extend(p)
    return out


class LoopBuilder:
    """Base points, access points and component paths for one realised model."""

    def __init__(self, real, crossings: dict):
        from .disc_model import chords, circle_orientation, pos_of

        self.real = real
        model = real.model
        self.n = model.n
        n = self.n
        self.crossings = crossings
        allch = chords(real)
        self.arc_chords = {i: [c for c in allch if c.curve == ("a", i)] for i in range(n - 1)}
        self.circ_chords = {k: [c for c in allch if c.curve == ("b", k)] for k in range(n - 1)}
        self.base: list[Point] = []
        self.entry: list = []       # the canonical crossing of a'_k with b_k
        self.entry_dir: list[int] = []
        for k in range(n - 1):
            arc = model.arcs[k]
            final = self.arc_chords[k][-1]
            if not final.v > final.u:
                raise AssertionError("final chord must approach w from the left")
            q = real.px[pos_of(n, "Q", k + 2)]
            w = real.px[pos_of(n, "W", k + 2)]
            assert w == final.v and arc.end == pos_of(n, "W", k + 2)
            # the circle chord hugging w_{k+1}: endpoints on the two segments around it
            seg_c, seg_e = arc.end, arc.end + 1
            loop_chord = None
            for c in self.circ_chords[k]:
                segs = {real.points[e[1]][0] for e in (c.start, c.end)}
                if segs == {seg_c, seg_e}:
                    loop_chord = c
            if loop_chord is None:
                raise AssertionError("circle does not hug its w puncture")
            xc = min(loop_chord.u, loop_chord.v)
            ustar = (q + xc) // 2
            xd = (w + ustar) // 2
            self.base.append(_tent_point(final, xd))
            ent = [c for c in crossings[(k, k)]
                   if c.arc_chord == len(arc.segs) and c.circle_chord == loop_chord.index]
            if len(ent) != 1:
                raise AssertionError("canonical crossing not found")
            self.entry.append(ent[0])
            # walk b_k from the entry towards the segment left of w
            towards_end = min(loop_chord.u, loop_chord.v) == loop_chord.v
            self.entry_dir.append(1 if towards_end else -1)
        self._p1: dict = {}
        self._p2: dict = {}

    def phase1_path(self, k: int, x) -> list[Point]:
        """d^k -> canonical crossing -> along b_k (away from the cut) -> x."""
        key = (k, x)
        if key in self._p1:
            return self._p1[key]
        e = self.entry[k]
        d = self.base[k]
        final = self.arc_chords[k][-1]
        paths = [_partial(final, d[0], e.point[0])]
        chs = self.circ_chords[k]
        L = len(chs)
        step = self.entry_dir[k]
        t = e.circle_chord
        cur = e.point[0]
        for _ in range(L + 1):
            c = chs[t]
            if t == x.circle_chord and (t != e.circle_chord or _between(cur, x.point[0], c, step)):
                paths.append(_partial(c, cur, x.point[0]))
                out = _join(paths)
                self._p1[key] = out
                return out
            end_x = c.v if step == 1 else c.u
            paths.append(_partial(c, cur, end_x))
            t = (t + step) % L
            nc = chs[t]
            cur = nc.u if step == 1 else nc.v
        raise AssertionError("point not found on its circle")

    def phase2_path(self, x) -> list[Point]:
        """x -> along its arc -> the base point on that arc."""
        if x in self._p2:
            return self._p2[x]
        i = x.arc
        chs = self.arc_chords[i]
        d = self.base[i]
        last = len(chs) - 1
        c0 = x.arc_chord
        if c0 == last:
            out = _partial(chs[last], x.point[0], d[0])
        else:
            paths = [_partial(chs[c0], x.point[0], chs[c0].v)]
            for c in range(c0 + 1, last):
                paths.append(_partial(chs[c], chs[c].u, chs[c].v))
            paths.append(_partial(chs[last], chs[last].u, d[0]))
            out = _join(paths)
        self._p2[x] = out
        return out

    def tuple_loop(self, points: list) -> TupleLoop:
        """points[k] is the crossing on circle k."""
        m = self.n - 1
        motions = [(k, self.phase1_path(k, points[k])) for k in range(m)]
        motions += [(k, self.phase2_path(points[k])) for k in range(m)]
        return TupleLoop(list(self.base), motions)


def _between(cur: int, target: int, c, step: int) -> bool:
    """Whether target lies ahead of cur when walking chord c in direction step."""
    forward = (c.v - c.u) > 0
    ahead = target >= cur if forward == (step == 1) else target <= cur
    return ahead
