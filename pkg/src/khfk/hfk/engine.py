"""Knot Floer homology of (1,1) knots by counting bigons in the universal cover."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra import (BigradedComplex, GradedGenerator, HomologyTable, LaurentPolynomial,
                       filtered_reduce, homology, poincare_polynomial)
from ..diagram.oneone import OneOneDiagram, OneOneParams, build_one_one
from .cover import HALF, CoverGeometry, Point, turning, winding_number


class HFKError(AssertionError):
    """A (1,1) computation violated one of its structural checks."""


@dataclass(frozen=True)
class HFKGenerator:
    point: int
    A: int
    M: int
    sign: int

    @property
    def delta(self) -> int:
        return self.A - self.M


@dataclass(frozen=True)
class BigonDomain:
    source: int  # beta point of the starting corner
    target: int
    n_x: int
    n_y: int


@dataclass
class DomainData:
    """Invariants of the loop domain joining two line-0 visits."""
    mu: Fraction
    n_x: int
    n_y: int


@dataclass
class HFKTable:
    table: HomologyTable            # keyed by (M, A)
    tau: int
    generators: List[HFKGenerator] = field(default_factory=list)
    params: Optional[OneOneParams] = None
    mirror: bool = False

    @property
    def total_rank(self) -> int:
        return self.table.total_rank

    def poincare(self) -> LaurentPolynomial:
        return poincare_polynomial(self.table, ("t", "u"))

    def euler(self) -> LaurentPolynomial:
        return self.poincare().substitute("u", -1)

    def delta_polynomial(self) -> LaurentPolynomial:
        return self.poincare().collapse((1, -1), "δ")

    def delta_ranks(self) -> Dict[int, int]:
        return self.table.delta_ranks(1, -1)

    def is_a_symmetric(self) -> bool:
        ranks = Counter()
        for (m, a), r in self.table.ranks().items():
            ranks[(a, a - m)] += r
        return all(ranks[(-a, d)] == r for (a, d), r in ranks.items())


def _integral_winding(poly: Sequence[Point], h: Fraction):
    """Winding numbers around ``poly`` with every coordinate scaled to an integer.

    Fractions make the crossing tests slow; all coordinates used here have
    power-of-two denominators, so one common scale factor clears them.
    """
    L = 1
    for x in [Fraction(h) / 2, HALF] + [c for pt in poly for c in pt]:
        L = lcm(L, Fraction(x).denominator)
    ipoly = [(int(x * L), int(y * L)) for x, y in poly]

    def wind(x, y) -> int:
        X, Y = x * L, y * L
        if Fraction(X).denominator != 1 or Fraction(Y).denominator != 1:
            return winding_number(poly, (x, y))
        return winding_number(ipoly, (int(X), int(Y)))

    return wind


class OneOneComplex:
    """Generators, gradings and bigons of a K(p,q,r,s) diagram."""

    def __init__(self, D: OneOneDiagram):
        self.D = D
        # loop orientation convention, frozen by the reference table (see module doc)
        self.orient = 1 if D.mirror else -1
        if D.p == 1:
            self.geom = None
            self.generators = [HFKGenerator(1, 0, 0, D.signs[1])]
            self.bigons: List[BigonDomain] = []
            return
        if D.params.q == 0:
            raise HFKError("q = 0 with p > 1 cannot be a knot diagram")
        self.geom = CoverGeometry(D)
        self._rel = self._relative_gradings()
        self.bigons = self._bigons()
        self.generators = self._normalize()

    # -- domains ---------------------------------------------------------------
    def _lifts(self, poly: List[Point]):
        xs = [x for x, _ in poly]
        ys = [y for _, y in poly]
        kmin, kmax = int(min(xs)) - 1, int(max(xs)) + 1
        jmin, jmax = int(-max(ys)) - 1, int(-min(ys)) + 1
        return kmin, kmax, jmin, jmax

    def domain(self, t0: int, t1: int) -> DomainData:
        """Domain of the loop alpha(t0 -> t1) + beta(t1 -> t0), oriented by ``self.orient``."""
        G = self.geom
        o = self.orient
        poly = G.alpha_path(t0, t1)
        kmin, kmax, jmin, jmax = self._lifts(poly)
        p, q, r, s, h = G.p, G.q, G.r, G.s, G.h
        wind = _integral_winding(poly, h)
        n_x = n_y = 0
        mmin, mmax = (jmin - 2 * p - s) // p - 1, (jmax + p) // p + 1
        for k in range(kmin, kmax + 1):
            for m in range(mmin, mmax + 1):
                n_x += wind(Fraction(k) + h / 2, -(q + HALF + m * p))
                n_y += wind(Fraction(k + 1) - h / 2, -(r + q + HALF + s + m * p))

        def corner_avg(k: int, j: int) -> Fraction:
            tot = 0
            for dx in (h / 2, -h / 2):
                for dy in (HALF, -HALF):
                    tot += wind(Fraction(k) + dx, -j + dy)
            return Fraction(tot, 4)

        a, b = G.visits[t0], G.visits[t1]
        na = nb = Fraction(0)
        ca, cb = G.point_class(a), G.point_class(b)
        for k in range(kmin, kmax + 1):
            for j in range(jmin, jmax + 1):
                c = (j - 1) % p + 1
                if c == ca:
                    na += corner_avg(k, j)
                if c == cb:
                    nb += corner_avg(k, j)
        e = turning(poly) / 4
        mu = o * (e + na + nb)
        return DomainData(mu, o * n_x, o * n_y)

    def _corner_count(self, poly, v) -> int:
        h = self.geom.h
        wind = _integral_winding(poly, h)
        return sum(1 for dx in (h / 2, -h / 2) for dy in (HALF, -HALF)
                   if wind(Fraction(v.line) + dx, -v.index + dy) != 0)

    def _relative_gradings(self) -> Dict[int, Tuple[Fraction, int]]:
        """(M, A) of every line-0 visit relative to the first one along alpha."""
        G = self.geom
        t_ref = min(G.line0)
        rel = {t_ref: (Fraction(0), 0)}
        for t in G.line0:
            if t == t_ref:
                continue
            dd = self.domain(t_ref, t)  # in pi_2(ref, t)
            # M(ref) - M(t) = mu - 2 n_x ; A(ref) - A(t) = n_y - n_x
            rel[t] = (-(dd.mu - 2 * dd.n_x), -(dd.n_y - dd.n_x))
        for t, (m, _) in rel.items():
            if m.denominator != 1:
                raise HFKError(f"non-integral Maslov difference {m}")
        return rel

    def _bigons(self) -> List[BigonDomain]:
        G = self.geom
        out = []
        for i, t0 in enumerate(G.line0):
            for t1 in G.line0[i + 1:]:
                if not G.is_simple(t0, t1):
                    continue
                poly = G.alpha_path(t0, t1)
                a, b = G.visits[t0], G.visits[t1]
                if self._corner_count(poly, a) != 1 or self._corner_count(poly, b) != 1:
                    continue
                dd = self.domain(t0, t1)
                if dd.mu * (1 if dd.mu > 0 else -1) != 1:
                    raise HFKError(f"embedded bigon with Maslov index {dd.mu}")
                ca, cb = G.point_class(a), G.point_class(b)
                if dd.mu == 1:
                    out.append(BigonDomain(ca, cb, dd.n_x, dd.n_y))
                else:
                    out.append(BigonDomain(cb, ca, -dd.n_x, -dd.n_y))
        return out

    def _normalize(self) -> List[HFKGenerator]:
        G = self.geom
        raw = {}
        for t, (m, a) in self._rel.items():
            raw[G.point_class(G.visits[t])] = (int(m), a)
        # consistency with bigons
        for bg in self.bigons:
            (ms, as_), (mt, at) = raw[bg.source], raw[bg.target]
            if ms - mt != 1 - 2 * bg.n_x or as_ - at != bg.n_y - bg.n_x:
                raise HFKError(f"bigon {bg} disagrees with path gradings")
        As = sorted(a for _, a in raw.values())
        shift2 = -(As[0] + As[-1])
        if shift2 % 2:
            raise HFKError("Alexander gradings cannot be centred")
        shiftA = shift2 // 2
        gens = {j: (m, a + shiftA) for j, (m, a) in raw.items()}
        counts = Counter((a, a - m) for m, a in gens.values())
        if any(counts[(-a, d)] != c for (a, d), c in counts.items()):
            raise HFKError("Alexander gradings are not symmetric")
        C = self._complex(gens, blocking_only=True)
        _, pages = filtered_reduce(C, 2)
        if len(pages.survivors) != 1:
            raise HFKError(f"{len(pages.survivors)} survivors in the tau complex")
        m0 = pages.survivors[0][0]
        out = [HFKGenerator(j, a, m - m0, self.D.signs[j]) for j, (m, a) in sorted(gens.items())]
        glob = {(-1) ** (g.M % 2) * g.sign for g in out}
        if len(glob) != 1:
            raise HFKError("Maslov parity disagrees with intersection signs")
        return out

    def _complex(self, gens: Dict[int, Tuple[int, int]], blocking_only: bool) -> BigradedComplex:
        order = sorted(gens)
        idx = {j: i for i, j in enumerate(order)}
        G_ = [GradedGenerator(j, gens[j][0], gens[j][1]) for j in order]
        diff: Dict[int, Dict[int, int]] = {}
        for bg in self.bigons:
            if bg.n_x != 0:
                continue
            row = diff.setdefault(idx[bg.source], {})
            row[idx[bg.target]] = (row.get(idx[bg.target], 0) + 1) % 2
        diff = {i: {j: c for j, c in r.items() if c} for i, r in diff.items()}
        C = BigradedComplex(G_, diff, d_degree=-1, upward=False, validate=False)
        C.validate(modulus=2)
        return C

    def filtered_complex(self) -> BigradedComplex:
        gens = {g.point: (g.M, g.A) for g in self.generators}
        if self.geom is None:
            return BigradedComplex([GradedGenerator(1, 0, 0)], {})
        return self._complex(gens, blocking_only=True)


@lru_cache(maxsize=256)
def _cached(params: OneOneParams, mirror: bool) -> OneOneComplex:
    return OneOneComplex(build_one_one(params, mirror))


def one_one_complex(D: OneOneDiagram | OneOneParams | tuple, mirror: bool = False) -> OneOneComplex:
    if isinstance(D, OneOneDiagram):
        return _cached(D.params, D.mirror)
    P = D if isinstance(D, OneOneParams) else OneOneParams(*D)
    return _cached(P, mirror)


def enumerate_bigons(D) -> List[BigonDomain]:
    return list(one_one_complex(D).bigons)


def gradings(D) -> List[HFKGenerator]:
    return list(one_one_complex(D).generators)


def hfk_table(D, mirror: bool = False) -> HFKTable:
    """HFK of a (1,1) knot over Z/2, graded by (M, A)."""
    X = one_one_complex(D, mirror)
    C = X.filtered_complex()
    H = homology(C, 2)
    table = HomologyTable(H.entries, "Z/2")
    if any(b.n_x == 0 and b.n_y == 0 for b in X.bigons):
        raise HFKError("basepoint-free bigon: the diagram is not taut")
    if table.total_rank != X.D.p:
        raise HFKError(f"total rank {table.total_rank} differs from p = {X.D.p}")
    survivors = filtered_reduce(C, 2)[1].survivors
    return HFKTable(table, survivors[0][1], list(X.generators), X.D.params, X.D.mirror)


def tau(D, mirror: bool = False) -> int:
    return hfk_table(D, mirror).tau
