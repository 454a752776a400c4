"""Curves in the punctured disc encoded by how they cross the puncture line.

All 3n punctures sit on a horizontal line.  Line segment j lies between
punctures j-1 and j (segment 0 is left of everything, segment m right of
everything).  A curve in minimal position with the line is determined up to
isotopy by the sequence of segments it crosses, the half-plane of its first
chord and, for arcs, its two endpoint punctures.
"""

from __future__ import annotations

from dataclasses import dataclass

UP, DOWN = 1, -1


@dataclass(frozen=True)
class ArcWord:
    start: int                # puncture index
    end: int
    segs: tuple[int, ...]     # crossed segments in order
    side0: int                # half-plane of the first chord (UP/DOWN)

    def sides(self) -> list[int]:
        """Half-plane of each chord; chord c runs from crossing c-1 to crossing c."""
        return [self.side0 * (-1) ** c for c in range(len(self.segs) + 1)]

    def dirs(self) -> list[int]:
        """Direction of each crossing: UP means from the lower to the upper half."""
        return [-self.side0 * (-1) ** t for t in range(len(self.segs))]

    def reversed(self) -> "ArcWord":
        last = self.side0 * (-1) ** len(self.segs)
        return ArcWord(self.end, self.start, tuple(reversed(self.segs)), last)


@dataclass(frozen=True)
class CircleWord:
    segs: tuple[int, ...]     # cyclic; even length
    side0: int                # half-plane of the chord from crossing 0 to crossing 1

    def sides(self) -> list[int]:
        """Side of chord t, which joins crossing t to crossing t+1."""
        return [self.side0 * (-1) ** t for t in range(len(self.segs))]

    def reversed(self) -> "CircleWord":
        L = len(self.segs)
        segs = tuple(self.segs[(-t) % L] for t in range(L))
        # new chord t joins old crossings -t and -t-1, i.e. old chord -t-1
        return CircleWord(segs, self.side0 * (-1) ** ((-1) % L) if L else self.side0)


def _adjacent(seg: int, punct: int) -> bool:
    return seg == punct or seg == punct + 1


def _arc_from_pairs(start: int, end: int, cr: list, side0: int) -> ArcWord:
    if cr:
        side0 = -cr[0][1]
        for (_, d1), (_, d2) in zip(cr, cr[1:]):
            if d1 == d2:
                raise AssertionError("crossing directions do not alternate")
    return ArcWord(start, end, tuple(s for s, _ in cr), side0)


def reduce_arc(a: ArcWord) -> ArcWord:
    cr = list(zip(a.segs, a.dirs()))
    side0 = a.side0
    changed = True
    while changed:
        changed = False
        out: list = []
        for c in cr:
            if out and out[-1][0] == c[0]:
                out.pop()
            else:
                out.append(c)
        if len(out) != len(cr):
            cr, changed = out, True
        if cr and _adjacent(cr[0][0], a.start):
            side0 = cr[0][1]
            cr.pop(0)
            changed = True
        if cr and _adjacent(cr[-1][0], a.end):
            cr.pop()
            changed = True
    if not cr and abs(a.start - a.end) == 1:
        side0 = UP
    return _arc_from_pairs(a.start, a.end, cr, side0)


def reduce_circle(c: CircleWord) -> CircleWord:
    cr = list(zip(c.segs, [c.side0 * (-1) ** t for t in range(len(c.segs))]))
    changed = True
    while changed and cr:
        changed = False
        for t in range(len(cr)):
            u = (t + 1) % len(cr)
            if cr[t][0] == cr[u][0]:
                for k in sorted((t, u), reverse=True):
                    del cr[k]
                changed = True
                break
    if not cr:
        return CircleWord((), c.side0)
    return CircleWord(tuple(s for s, _ in cr), cr[0][1])


def _start_rule(start: int, side: int, p: int, positive: bool):
    """New start puncture, new first side and the crossing inserted after it."""
    L, R = p, p + 2
    if positive:
        pre = (L, UP) if side == UP else (R, DOWN)
    else:
        pre = (R, UP) if side == UP else (L, DOWN)
    return (p + 1 if start == p else p), -side, pre


def _sub(cr, p: int, positive: bool) -> list:
    L, M, R = p, p + 1, p + 2
    out = []
    for s, d in cr:
        if s != M:
            out.append((s, d))
        elif positive:
            out.extend([(L, DOWN), (M, UP), (R, DOWN)] if d == DOWN else [(R, UP), (M, DOWN), (L, UP)])
        else:
            out.extend([(R, DOWN), (M, UP), (L, DOWN)] if d == DOWN else [(L, UP), (M, DOWN), (R, UP)])
    return out


def twist_arc(a: ArcWord, p: int, positive: bool) -> ArcWord:
    """Image of an arc under the half-twist of punctures p and p+1, reduced.

    positive=True is the counterclockwise half-twist.
    """
    cr = list(zip(a.segs, a.dirs()))
    start, end, side0 = a.start, a.end, a.side0
    last_side = a.side0 * (-1) ** len(a.segs)
    new = _sub(cr, p, positive)
    if start in (p, p + 1):
        start, side0, pre = _start_rule(start, side0, p, positive)
        new.insert(0, pre)
    if end in (p, p + 1):
        end, _, pre = _start_rule(end, last_side, p, positive)
        new.append((pre[0], -pre[1]))
    return reduce_arc(_arc_from_pairs(start, end, new, side0))


def twist_circle(c: CircleWord, p: int, positive: bool) -> CircleWord:
    cr = list(zip(c.segs, c.sides()))  # crossing t enters chord t
    new = _sub(cr, p, positive)
    return reduce_circle(CircleWord(tuple(s for s, _ in new), new[0][1] if new else c.side0))
