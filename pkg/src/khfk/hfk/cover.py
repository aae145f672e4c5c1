"""Exact geometry of a (1,1) diagram in the universal cover of the torus.

Lifts of beta are the vertical lines ``x = k``; the point with absolute
index ``j`` on line ``k`` sits at ``(k, -j)``. Strip ``k`` (between lines
``k`` and ``k + 1``) holds one copy of the square for every vertical
offset ``m``: its left point L_i is index ``i + m p`` on line ``k`` and its
right point R_i is index ``i + s + m p`` on line ``k + 1``.

Alpha arcs are drawn as rational polylines. Rainbows are rectangles hugging
their line, nested with depth step ``h``; through strands run horizontally
near both lines and diagonally in the middle of the strip. With this
layout all winding numbers, corner multiplicities and turning angles are
computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..diagram.oneone import OneOneDiagram

Point = Tuple[Fraction, Fraction]
QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Visit:
    """Alpha-tilde passing through line ``line`` at absolute index ``index``."""
    line: int
    index: int


class CoverGeometry:
    """One lift of alpha together with its intersections with line 0."""

    def __init__(self, D: OneOneDiagram):
        self.D = D
        P = D.params
        self.p, self.q, self.r, self.s = P.p, P.q, P.r, P.s
        self.h = Fraction(1, 4 * (self.q + 1))
        self.partner: Dict[Tuple[str, int], Tuple[str, int]] = {}
        self.depth: Dict[Tuple[str, int], Fraction] = {}
        for a, b in D.arcs:
            self.partner[a] = b
            self.partner[b] = a
        for i in range(1, self.q + 1):
            d = (self.q + 1 - i) * self.h
            for e in (("L", i), ("L", 2 * self.q + 1 - i),
                      ("R", self.r + i), ("R", self.r + 2 * self.q + 1 - i)):
                self.depth[e] = d
        self.visits, self.paths = self._trace()
        self.line0 = [t for t, v in enumerate(self.visits) if v.line == 0]
        classes = sorted(self.point_class(self.visits[t]) for t in self.line0)
        if classes != list(range(1, self.p + 1)):
            raise AssertionError(f"alpha lift meets line 0 in classes {classes}")

    # -- combinatorics ------------------------------------------------------
    def point_class(self, v: Visit) -> int:
        """Beta point (1..p) covered by a visit."""
        return (v.index - 1) % self.p + 1

    def _step_right(self, k: int, j: int):
        """Leave (k, j) into strip k; return next visit, direction and polyline."""
        p, s = self.p, self.s
        i = (j - 1) % p + 1
        m = (j - i) // p
        side, i2 = self.partner[("L", i)]
        x0 = Fraction(k)
        if side == "L":
            j2 = i2 + m * p
            d = self.depth[("L", i)]
            pts = [(x0, -j), (x0 + d, -j), (x0 + d, -j2), (x0, -j2)]
            return Visit(k, j2), "left", pts
        j2 = i2 + s + m * p
        pts = [(x0, -j), (x0 + QUARTER, -j), (x0 + 1 - QUARTER, -j2), (x0 + 1, -j2)]
        return Visit(k + 1, j2), "right", pts

    def _step_left(self, k: int, j: int):
        """Leave (k, j) into strip k - 1."""
        p, s = self.p, self.s
        i = (j - s - 1) % p + 1
        m = (j - s - i) // p
        side, i2 = self.partner[("R", i)]
        x0 = Fraction(k)
        if side == "R":
            j2 = i2 + s + m * p
            d = self.depth[("R", i)]
            pts = [(x0, -j), (x0 - d, -j), (x0 - d, -j2), (x0, -j2)]
            return Visit(k, j2), "right", pts
        j2 = i2 + m * p
        pts = [(x0, -j), (x0 - QUARTER, -j), (x0 - 1 + QUARTER, -j2), (x0 - 1, -j2)]
        return Visit(k - 1, j2), "left", pts

    def _trace(self):
        """Trace alpha-tilde from point 1 on line 0 both ways far enough."""
        steps = self.p * (self.p + 3)
        fwd_v, fwd_p = [Visit(0, 1)], []
        v, direction = Visit(0, 1), "right"
        for _ in range(steps):
            v2, direction, pts = (self._step_right if direction == "right" else self._step_left)(v.line, v.index)
            fwd_v.append(v2)
            fwd_p.append(pts)
            v = v2
        back_v, back_p = [], []
        v, direction = Visit(0, 1), "left"
        for _ in range(steps):
            v2, direction, pts = (self._step_right if direction == "right" else self._step_left)(v.line, v.index)
            back_v.append(v2)
            back_p.append(pts[::-1])
            v = v2
        visits = back_v[::-1] + fwd_v
        paths = back_p[::-1] + fwd_p  # paths[t] joins visits[t] -> visits[t + 1]
        return visits, paths

    # -- loops --------------------------------------------------------------
    def alpha_path(self, t0: int, t1: int) -> List[Point]:
        """Polyline of alpha-tilde from visit t0 to visit t1 (t0 < t1)."""
        pts: List[Point] = [self.paths[t0][0]]
        for t in range(t0, t1):
            pts.extend(self.paths[t][1:])
        return pts

    def loop(self, t0: int, t1: int) -> List[Point]:
        """Closed polygon: alpha from visit t0 to t1, then line 0 back to t0."""
        pts = self.alpha_path(t0, t1)
        return pts  # closing edge (last -> first) runs along line 0

    def is_simple(self, t0: int, t1: int) -> bool:
        """The alpha arc avoids the open beta segment between its endpoints."""
        lo, hi = sorted((self.visits[t0].index, self.visits[t1].index))
        return not any(lo < self.visits[t].index < hi
                       for t in range(t0 + 1, t1) if self.visits[t].line == 0)


def winding_number(poly: Sequence[Point], P: Point) -> int:
    """Winding number of a closed polygon around a point not on it."""
    px, py = P
    w = 0
    n = len(poly)
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % n]
        if y1 <= py:
            if y2 > py and (x2 - x1) * (py - y1) - (px - x1) * (y2 - y1) > 0:
                w += 1
        elif y2 <= py and (x2 - x1) * (py - y1) - (px - x1) * (y2 - y1) < 0:
            w -= 1
    return w


def turning(poly: Sequence[Point]) -> Fraction:
    """Total turning of an open polyline in quarter turns (left positive).

    Every vertex of the layouts used here turns by 0 or +-90 degrees
    except in the middle of through strands, where two opposite turns
    cancel; the exact angle is never needed, only the signed count of
    right angles, so non-right angles are accumulated pairwise.
    """
    total = Fraction(0)
    pending = 0
    for a, b, c in zip(poly, poly[1:], poly[2:]):
        ux, uy = b[0] - a[0], b[1] - a[1]
        vx, vy = c[0] - b[0], c[1] - b[1]
        cross = ux * vy - uy * vx
        dot = ux * vx + uy * vy
        if cross == 0 and dot > 0:
            continue
        if dot == 0:
            total += 1 if cross > 0 else -1
        else:
            # oblique bend at a through strand; paired with its mirror bend
            pending += 1 if cross > 0 else -1
    if pending:
        raise AssertionError("unpaired oblique bend in alpha polyline")
    return total
