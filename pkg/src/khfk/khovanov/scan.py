"""Khovanov complexes by tangle scanning with delooping and elimination.

Crossings are added one at a time to a complex over the current tangle.
Objects are crossingless matchings of the open boundary with a q-shift
and a homological degree; morphisms are dotted cobordisms (see
``cobordism``). After each crossing, closed loops are delooped and every
differential entry that is a unit multiple of an identity cobordism is
cancelled by Gaussian elimination, which keeps the complex small.

With ``t = 1`` the complex computes the Lee deformation over R[t]
specialized at t = 1; the power of t in every entry is recorded through
the q-shifts, so setting it to zero recovers Khovanov's differential.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from ..algebra import BigradedComplex, GradedGenerator, parse_coefficients
from ..diagram.pd import DiagramError, PlanarDiagram
from ..diagram.scan import scan_order
from . import cobordism as cb
from .cobordism import EMPTY, Matching, Morphism
from .cube import ResourceLimit

SMOOTHINGS = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}


class Ring:
    """Coefficient arithmetic for Z, Q or Z/p."""

    def __init__(self, coefficients="Q"):
        self.kind, self.p = parse_coefficients(coefficients)

    def norm(self, c):
        if self.kind == "Zp":
            return c % self.p
        if self.kind == "Q" and isinstance(c, Fraction) and c.denominator == 1:
            return int(c)
        return c

    def is_unit(self, c) -> bool:
        if self.kind == "Z":
            return c in (1, -1)
        return self.norm(c) != 0

    def inv(self, c):
        if self.kind == "Zp":
            return pow(c, self.p - 2, self.p)
        if c in (1, -1):
            return c
        return Fraction(1) / c


@dataclass
class Obj:
    M: Matching
    k: int      # q-shift
    u: int      # homological degree (before the global -n_minus shift)


class ScanComplex:
    """A complex over a planar tangle, built crossing by crossing."""

    def __init__(self, ring: Ring, t: int, max_objects: Optional[int] = None):
        self.ring = ring
        self.t = t
        self.max_objects = max_objects
        self.boundary: Dict[int, int] = {}      # open label -> 1
        self.objs: Dict[int, Obj] = {0: Obj((), 0, 0)}
        self.out: Dict[int, Dict[int, Morphism]] = {0: {}}
        self.inn: Dict[int, set] = {0: set()}
        self._next = 1
        self.max_size = 1

    # -- bookkeeping -------------------------------------------------------
    def _new(self, o: Obj) -> int:
        i = self._next
        self._next += 1
        self.objs[i] = o
        self.out[i] = {}
        self.inn[i] = set()
        return i

    def _set(self, x: int, y: int, m: Morphism) -> None:
        if m:
            self.out[x][y] = m
            self.inn[y].add(x)
        elif y in self.out[x]:
            del self.out[x][y]
            self.inn[y].discard(x)

    def _clean(self, m: Morphism) -> Morphism:
        norm = self.ring.norm
        out = {}
        for k, v in m.items():
            v = norm(v)
            if v:
                out[k] = v
        return out

    # -- adding a crossing ---------------------------------------------------
    def add_crossing(self, labels: Tuple[int, int, int, int]) -> None:
        B = self.boundary
        ports: List[Tuple[str, int]] = [("T", a) for a in sorted(B)] + [("C", i) for i in range(4)]
        label_of = [a for a in sorted(B)] + list(labels)
        index = {p: i for i, p in enumerate(ports)}
        occ: Dict[int, List[int]] = {}
        for i, a in enumerate(label_of):
            occ.setdefault(a, []).append(i)
        other = {}
        for a, ps in occ.items():
            if len(ps) == 2:
                other[ps[0]], other[ps[1]] = ps[1], ps[0]
            elif len(ps) > 2:
                raise DiagramError(f"arc {a} occurs {len(ps)} times")
        new_boundary = {a: 1 for a, ps in occ.items() if len(ps) == 1}
        n_ports = len(ports)

        def edges(M: Matching, e: int) -> List[int]:
            mate = [0] * n_ports
            for a, b in M:
                ia, ib = index[("T", a)], index[("T", b)]
                mate[ia], mate[ib] = ib, ia
            for i, j in SMOOTHINGS[e]:
                ia, ib = index[("C", i)], index[("C", j)]
                mate[ia], mate[ib] = ib, ia
            return mate

        glue_cache: Dict[Tuple[Matching, int], Tuple[Matching, Tuple[Tuple[int, ...], ...]]] = {}

        def glue(M: Matching, e: int):
            key = (M, e)
            if key in glue_cache:
                return glue_cache[key]
            mate = edges(M, e)
            seen = [False] * n_ports
            arcs = []
            for s in range(n_ports):
                if s in other or seen[s]:
                    continue
                cur = s
                while True:
                    seen[cur] = True
                    nxt = mate[cur]
                    seen[nxt] = True
                    if nxt in other:
                        cur = other[nxt]
                    else:
                        arcs.append((label_of[s], label_of[nxt]))
                        break
            loops = []
            for s in range(n_ports):
                if seen[s]:
                    continue
                loop = []
                cur = s
                while not seen[cur]:
                    seen[cur] = True
                    loop.append(cur)
                    nxt = mate[cur]
                    seen[nxt] = True
                    loop.append(nxt)
                    cur = other[nxt]
                loops.append(tuple(loop))
            res = (cb.matching(arcs), tuple(loops))
            glue_cache[key] = res
            return res

        bport = {label_of[i]: i for i in range(n_ports) if i not in other}
        internal_pairs = [(i, j) for i, j in other.items() if i < j]
        t = self.t

        def extend(piece_of: List[int], n_pieces: int, dots: List[int],
                   src: Tuple, tgt: Tuple, lab_s: Tuple[int, ...], lab_t: Tuple[int, ...]) -> Morphism:
            Ms, loops_s = src
            Mt, loops_t = tgt
            gluings = [(piece_of[i], piece_of[j]) for i, j in internal_pairs]
            caps = [(piece_of[lp[0]], 1 if l else 0) for lp, l in zip(loops_s, lab_s)]
            # target loops: coordinate of 1 is a dotted cap, of X a plain cap
            caps += [(piece_of[lp[0]], 0 if l else 1) for lp, l in zip(loops_t, lab_t)]
            boundary = [(c[0], piece_of[bport[c[0]]]) for c in cb.cycles(Ms, Mt)]
            return cb.assemble(n_pieces, dots, gluings, caps, boundary, t)

        def crossing_pieces(e: int, offset: int, piece_of: List[int]) -> int:
            for n, (i, j) in enumerate(SMOOTHINGS[e]):
                piece_of[index[("C", i)]] = offset + n
                piece_of[index[("C", j)]] = offset + n
            return offset + 2

        phi_cache: Dict[tuple, Morphism] = {}

        def phi_ext(M1: Matching, M2: Matching, D, e: int, ls, lt) -> Morphism:
            key = (M1, M2, D, e, ls, lt)
            if key in phi_cache:
                return phi_cache[key]
            piece_of = [0] * n_ports
            cyc = cb.cycles(M1, M2)
            names = cb.cycle_names(M1, M2)
            num = {c[0]: n for n, c in enumerate(cyc)}
            for a in B:
                piece_of[index[("T", a)]] = num[names[a]]
            n = crossing_pieces(e, len(cyc), piece_of)
            dots = [1 if c[0] in D else 0 for c in cyc] + [0, 0]
            m = extend(piece_of, n, dots, glue(M1, e), glue(M2, e), ls, lt)
            phi_cache[key] = m
            return m

        saddle_cache: Dict[tuple, Morphism] = {}

        def saddle_ext(M: Matching, ls, lt) -> Morphism:
            key = (M, ls, lt)
            if key in saddle_cache:
                return saddle_cache[key]
            piece_of = [0] * n_ports
            for n, (a, b) in enumerate(M):
                piece_of[index[("T", a)]] = n
                piece_of[index[("T", b)]] = n
            for i in range(4):
                piece_of[index[("C", i)]] = len(M)
            m = extend(piece_of, len(M) + 1, [0] * (len(M) + 1), glue(M, 0), glue(M, 1), ls, lt)
            saddle_cache[key] = m
            return m

        # new objects
        old_objs, old_out = self.objs, self.out
        self.objs, self.out, self.inn = {}, {}, {}
        self.boundary = new_boundary
        images: Dict[Tuple[int, int], List[Tuple[Tuple[int, ...], int]]] = {}
        for x, o in old_objs.items():
            for e in (0, 1):
                Mg, loops = glue(o.M, e)
                lst = []
                for lab in product((0, 1), repeat=len(loops)):
                    # label 0 is the unit (q + 1), label 1 is X (q - 1)
                    k = o.k + e + sum(1 if l == 0 else -1 for l in lab)
                    lst.append((lab, self._new(Obj(Mg, k, o.u + e))))
                images[(x, e)] = lst
        add = self._accumulate
        for x, row in old_out.items():
            Mx = old_objs[x].M
            for y, phi in row.items():
                My = old_objs[y].M
                for e in (0, 1):
                    for ls, nx in images[(x, e)]:
                        for lt, ny in images[(y, e)]:
                            for D, c in phi.items():
                                m = phi_ext(Mx, My, D, e, ls, lt)
                                if m:
                                    add(nx, ny, m, c)
        for x, o in old_objs.items():
            sign = -1 if o.u % 2 else 1
            for ls, n0 in images[(x, 0)]:
                for lt, n1 in images[(x, 1)]:
                    m = saddle_ext(o.M, ls, lt)
                    if m:
                        add(n0, n1, m, sign)
        for x in list(self.out):
            for y in list(self.out[x]):
                self._set(x, y, self._clean(self.out[x][y]))
        self.max_size = max(self.max_size, len(self.objs))
        if self.max_objects is not None and len(self.objs) > self.max_objects:
            raise ResourceLimit(f"{len(self.objs)} objects exceeds the limit {self.max_objects}")
        self.eliminate()

    def _accumulate(self, x: int, y: int, m: Morphism, c) -> None:
        row = self.out[x]
        cur = row.get(y)
        if cur is None:
            cur = row[y] = {}
            self.inn[y].add(x)
        for k, v in m.items():
            cur[k] = cur.get(k, 0) + c * v

    # -- Gaussian elimination -------------------------------------------------
    def _pivot_coeff(self, x: int, y: int):
        ox, oy = self.objs[x], self.objs[y]
        if ox.M != oy.M or ox.k != oy.k:
            return None
        m = self.out[x][y]
        if len(m) != 1 or EMPTY not in m:
            raise AssertionError("inhomogeneous degree-zero map between equal objects")
        c = m[EMPTY]
        return c if self.ring.is_unit(c) else None

    def eliminate(self) -> None:
        while True:
            cands = []
            for x, row in self.out.items():
                for y in row:
                    c = self._pivot_coeff(x, y)
                    if c is not None:
                        cands.append(((len(self.inn[y]) - 1) * (len(row) - 1), x, y))
            if not cands:
                return
            cands.sort()
            done = set()
            for _, x, y in cands:
                if x in done or y in done or x not in self.objs or y not in self.out[x]:
                    continue
                c = self._pivot_coeff(x, y)
                if c is None:
                    continue
                self._cancel(x, y, c)
                done.update((x, y))

    def _cancel(self, x: int, y: int, c) -> None:
        ring, t = self.ring, self.t
        cinv = ring.inv(c)
        M = self.objs[x].M
        sources = [z for z in self.inn[y] if z != x]
        targets = [(w, b) for w, b in self.out[x].items() if w != y]
        for z in sources:
            alpha = self.out[z][y]
            Mz = self.objs[z].M
            for w, beta in targets:
                Mw = self.objs[w].M
                comp = cb.compose(beta, alpha, Mz, M, Mw, t)
                if not comp:
                    continue
                cur = dict(self.out[z].get(w, {}))
                for k, v in comp.items():
                    cur[k] = cur.get(k, 0) - cinv * v
                self._set(z, w, self._clean(cur))
        for v in (x, y):
            for w in list(self.out[v]):
                self.inn[w].discard(v)
            for z in list(self.inn[v]):
                del self.out[z][v]
            del self.out[v], self.inn[v], self.objs[v]

    # -- output ---------------------------------------------------------------
    def check_d_squared(self) -> None:
        for x, row in self.out.items():
            acc: Dict[int, Morphism] = {}
            for y, a in row.items():
                for w, b in self.out[y].items():
                    comp = cb.compose(b, a, self.objs[x].M, self.objs[y].M, self.objs[w].M, self.t)
                    tgt = acc.setdefault(w, {})
                    for k, v in comp.items():
                        tgt[k] = tgt.get(k, 0) + v
            for w, m in acc.items():
                if self._clean(m):
                    raise AssertionError(f"d^2 != 0 on the tangle complex ({x} -> {w})")


def _cut_marked(D: PlanarDiagram, marked: int) -> Tuple[List[Tuple[int, ...]], int]:
    """Split the marked arc into two boundary labels; returns crossings and the new label."""
    if marked not in D.arcs:
        raise DiagramError(f"marked arc {marked} is not in the diagram")
    fresh = max(D.arcs) + 1
    crossings = [list(c) for c in D.crossings]
    hits = [(i, k) for i, c in enumerate(crossings) for k, a in enumerate(c) if a == marked]
    i, k = hits[-1]
    crossings[i][k] = fresh
    return [tuple(c) for c in crossings], fresh


def scan_complex(D: PlanarDiagram, coefficients="Q", lee: bool = False,
                 marked: Optional[int] = None, check: bool = False,
                 max_objects: Optional[int] = None) -> BigradedComplex:
    """Simplified Khovanov (or Lee) complex of ``D`` as a bigraded complex in (u, q).

    With ``marked`` set, returns the reduced complex for the component
    through that arc. Entries of the Lee complex raise q by multiples of 4.
    ``max_objects`` bounds the intermediate complex (the memory ceiling);
    exceeding it raises ResourceLimit.
    """
    ring = Ring(coefficients)
    if lee and marked is not None:
        raise ValueError("the Lee deformation is only implemented unreduced")
    if lee and ring.kind == "Z":
        raise ValueError("the Lee complex needs field coefficients")
    crossings = list(D.crossings)
    if marked is not None:
        crossings, fresh = _cut_marked(D, marked)
    S = ScanComplex(ring, 1 if lee else 0, max_objects)
    first = None
    if marked is not None:
        first = next(i for i, c in enumerate(crossings) if marked in c)
    order = scan_order(PlanarDiagram(tuple(D.crossings), D.free_loops), first)
    for ci in order:
        S.add_crossing(crossings[ci])
        if check:
            S.check_d_squared()
    if marked is not None:
        if set(S.boundary) != {marked, fresh}:
            raise AssertionError("reduced scan did not end on the marked arc")
    elif S.boundary:
        raise AssertionError("open boundary left after scanning every crossing")
    ids = sorted(S.objs)
    idx = {x: i for i, x in enumerate(ids)}
    n_plus, n_minus = D.n_plus, D.n_minus
    gens = []
    for x in ids:
        o = S.objs[x]
        gens.append((o.u - n_minus, o.k + n_plus - 2 * n_minus))
    diff: Dict[int, Dict[int, object]] = {}
    for x, row in S.out.items():
        for y, m in row.items():
            c = m.get(EMPTY, 0)
            if c:
                diff.setdefault(idx[x], {})[idx[y]] = c
    # free unknotted components each contribute a factor q + q^-1
    for _ in range(D.free_loops):
        n = len(gens)
        gens = [(u, q + 1) for u, q in gens] + [(u, q - 1) for u, q in gens]
        shifted = {i + n: {j + n: c for j, c in row.items()} for i, row in diff.items()}
        diff.update(shifted)
    G = [GradedGenerator(i, u, q) for i, (u, q) in enumerate(gens)]
    C = BigradedComplex(G, diff, d_degree=1, upward=True, validate=False)
    C.validate(modulus=ring.p)
    C.scan_stats = {"max_objects": S.max_size}
    return C
