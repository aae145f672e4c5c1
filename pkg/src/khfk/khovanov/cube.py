"""The cube of resolutions, built explicitly (small diagrams and oracle use)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from ..algebra import BigradedComplex, GradedGenerator
from ..diagram.pd import DiagramError, PlanarDiagram

SMOOTHINGS = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}


class ResourceLimit(RuntimeError):
    """A computation would exceed a configured size limit."""


@dataclass(frozen=True)
class ResolutionState:
    vertex: Tuple[int, ...]
    circles: Tuple[Tuple[int, ...], ...]   # each circle as its sorted arc labels; free loops are ()

    @property
    def n_circles(self) -> int:
        return len(self.circles)

    @property
    def height(self) -> int:
        return sum(self.vertex)


def resolve(D: PlanarDiagram, vertex: Tuple[int, ...]) -> ResolutionState:
    parent = {a: a for a in D.arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c, bit in zip(D.crossings, vertex):
        for i, j in SMOOTHINGS[bit]:
            ra, rb = find(c[i]), find(c[j])
            if ra != rb:
                parent[ra] = rb
    groups: Dict[int, List[int]] = {}
    for a in D.arcs:
        groups.setdefault(find(a), []).append(a)
    circles = sorted(tuple(sorted(g)) for g in groups.values())
    return ResolutionState(tuple(vertex), tuple(circles) + ((),) * D.free_loops)


@dataclass
class KhovanovComplex:
    complex: BigradedComplex
    reduced: bool = False
    marked: Optional[int] = None
    lee: bool = False
    states: int = 0


def khovanov_complex(D: PlanarDiagram, reduced: bool = False, marked: Optional[int] = None,
                     deformation: Optional[str] = None, max_crossings: int = 12) -> KhovanovComplex:
    """Full cube complex with gradings (u, q) = (|v| - n_-, labels + |v| + n_+ - 2 n_-).

    Labels: 0 is the unit (degree +1), 1 is X (degree -1). Edge signs are
    (-1)^(number of 1-bits before the flipped coordinate). ``deformation``
    is None or "lee".
    """
    lee = deformation is not None
    if lee and deformation != "lee":
        raise ValueError(f"unknown deformation {deformation!r}")
    if reduced:
        if marked is None:
            raise DiagramError("reduced complex requested without a marked arc")
        if marked not in D.arcs:
            raise DiagramError(f"marked arc {marked} is not in the diagram")
    n = D.n_crossings
    if n > max_crossings:
        raise ResourceLimit(f"{n} crossings exceeds the cube limit {max_crossings}")
    t = 1 if lee else 0
    n_plus, n_minus = D.n_plus, D.n_minus
    gens: List[GradedGenerator] = []
    index: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
    by_vertex: Dict[Tuple[int, ...], List[Tuple[Tuple[int, ...], int]]] = {}
    states: Dict[Tuple[int, ...], ResolutionState] = {}
    for v in product((0, 1), repeat=n):
        S = resolve(D, v)
        states[v] = S
        fixed = _marked_circle(S, marked) if reduced else None
        for labels in product((0, 1), repeat=S.n_circles):
            if fixed is not None and labels[fixed] != 1:
                continue
            q = sum(1 if l == 0 else -1 for l in labels) + S.height + n_plus - 2 * n_minus
            if reduced:
                q += 1
            index[(v, labels)] = len(gens)
            by_vertex.setdefault(v, []).append((labels, len(gens)))
            gens.append(GradedGenerator(len(gens), S.height - n_minus, q))
    diff: Dict[int, Dict[int, int]] = {}
    for v, S in states.items():
        for i in range(n):
            if v[i]:
                continue
            w = v[:i] + (1,) + v[i + 1:]
            T = states[w]
            sign = -1 if sum(v[:i]) % 2 else 1
            for labels, gi in by_vertex.get(v, ()):
                for labels2, c in _edge(S, T, labels, t):
                    gj = index.get((w, labels2))
                    if gj is None:
                        continue
                    row = diff.setdefault(gi, {})
                    row[gj] = row.get(gj, 0) + sign * c
    C = BigradedComplex(gens, diff, d_degree=1, upward=True)
    return KhovanovComplex(C, reduced, marked, lee, len(states))


def _marked_circle(S: ResolutionState, marked: int) -> int:
    return next(i for i, c in enumerate(S.circles) if marked in c)


def _edge(S: ResolutionState, T: ResolutionState, labels: Tuple[int, ...], t: int):
    """Merge or split map between adjacent states, on one labelled generator."""
    where_T = {a: j for j, c in enumerate(T.circles) for a in c}
    # circles untouched by the edge keep their label; free loops are matched by position
    image: Dict[int, int] = {}
    free_S = [i for i, c in enumerate(S.circles) if not c]
    free_T = [j for j, c in enumerate(T.circles) if not c]
    for i, j in zip(free_S, free_T):
        image[i] = j
    pre: Dict[int, List[int]] = {}
    for i, c in enumerate(S.circles):
        if c:
            pre.setdefault(where_T[c[0]], []).append(i)
    changed_S = [i for i, c in enumerate(S.circles) if c and sorted(c) != sorted(T.circles[where_T[c[0]]])]
    changed_T = sorted({where_T[S.circles[i][0]] for i in changed_S} |
                       {j for j, c in enumerate(T.circles) if c and j not in pre})
    for i, c in enumerate(S.circles):
        if c and i not in changed_S:
            image[i] = where_T[c[0]]
    base = [0] * T.n_circles
    for i, j in image.items():
        base[j] = labels[i]
    if len(changed_S) == 2 and len(changed_T) == 1:
        a, b = labels[changed_S[0]], labels[changed_S[1]]
        j = changed_T[0]
        if a == 0 or b == 0:
            out = [(a + b, 1)]
        else:
            out = [(0, t)] if t else []
        for lab, c in out:
            new = list(base)
            new[j] = lab
            yield tuple(new), c
    elif len(changed_S) == 1 and len(changed_T) == 2:
        a = labels[changed_S[0]]
        j1, j2 = changed_T
        terms = [((0, 1), 1), ((1, 0), 1)] if a == 0 else [((1, 1), 1)] + ([((0, 0), t)] if t else [])
        for (l1, l2), c in terms:
            new = list(base)
            new[j1], new[j2] = l1, l2
            yield tuple(new), c
    else:
        raise AssertionError("adjacent resolutions must differ by a merge or a split")
