"""Dotted cobordisms between crossingless matchings.

A crossingless matching on a boundary set B is a sorted tuple of pairs.
For matchings M1, M2 on the same boundary, the cycles of M1 ∪ M2 index
a basis of Hom(M1, M2): a basis cobordism is one disk per cycle, each
carrying at most one dot. A morphism is a dict ``dotset -> coeff`` where
``dotset`` is the frozenset of dotted cycles, each named by its least
boundary label.

Relations are those of the Frobenius algebra A = R[X]/(X^2 - t) with
``t`` a scalar (0 for Khovanov, 1 for Lee). All maps that arise are
homogeneous for the grading where t has degree -4, so the power of t
in any coefficient is implied by the gradings of its endpoints.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

Matching = Tuple[Tuple[int, int], ...]
Morphism = Dict[FrozenSet[int], object]

EMPTY: FrozenSet[int] = frozenset()


def matching(pairs: Iterable[Tuple[int, int]]) -> Matching:
    return tuple(sorted((a, b) if a < b else (b, a) for a, b in pairs))


def partner(M: Matching) -> Dict[int, int]:
    out = {}
    for a, b in M:
        out[a] = b
        out[b] = a
    return out


@lru_cache(maxsize=None)
def cycles(M1: Matching, M2: Matching) -> Tuple[Tuple[int, ...], ...]:
    """Cycles of M1 ∪ M2, each as a sorted tuple of boundary labels."""
    p1, p2 = partner(M1), partner(M2)
    seen = set()
    out = []
    for start in sorted(p1):
        if start in seen:
            continue
        cyc = []
        a = start
        while True:
            b = p1[a]
            cyc += [a, b]
            seen.update((a, b))
            a = p2[b]
            if a == start:
                break
        out.append(tuple(sorted(cyc)))
    return tuple(out)


def cycle_names(M1: Matching, M2: Matching) -> Dict[int, int]:
    """Boundary label -> name (least label) of its cycle in M1 ∪ M2."""
    return {x: c[0] for c in cycles(M1, M2) for x in c}


def identity(M: Matching) -> Morphism:
    return {EMPTY: 1}


def basis_degree(M1: Matching, M2: Matching, dots: int) -> int:
    """q-degree of a basis cobordism with ``dots`` dots."""
    return len(cycles(M1, M2)) - len(M1) - 2 * dots


class _UF:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@lru_cache(maxsize=None)
def _comultiply(k: int, t: int, a0: int, a1: int) -> Tuple[Tuple[int, int], ...]:
    """Coefficients of Δ^{(k)}(a0 + a1 X) by number of X factors.

    Δ^{(k)}(1) has a term t^m on each tensor word with k-1-2m X's, and
    Δ^{(k)}(X) one with k-2m X's. Returned as ((j, coeff), ...) where
    the coefficient applies to every word with j X's.
    """
    out = []
    for j in range(k + 1):
        c = 0
        if (k - 1 - j) >= 0 and (k - 1 - j) % 2 == 0:
            c += a0 * t ** ((k - 1 - j) // 2)
        if (k - j) % 2 == 0:
            c += a1 * t ** ((k - j) // 2)
        if c:
            out.append((j, c))
    return tuple(out)


def component_value(chi: int, dots: int, boundary: Sequence[int], t: int) -> Morphism:
    """A connected surface as an element of A^{⊗ boundary}.

    ``chi`` is its Euler characteristic, ``dots`` the number of dots and
    ``boundary`` names its boundary cycles. The surface equals
    Δ^{(k)}(X^dots (2X)^g) with k boundary circles and genus g; a closed
    surface evaluates through the counit.
    """
    k = len(boundary)
    g2 = 2 - k - chi
    if g2 < 0 or g2 % 2:
        raise AssertionError(f"impossible surface: chi={chi}, boundary circles={k}")
    g = g2 // 2
    a0, a1 = 1, 0
    for _ in range(dots + g):
        a0, a1 = t * a1, a0
    a0 <<= g
    a1 <<= g
    if k == 0:
        return {EMPTY: a1} if a1 else {}
    out: Morphism = {}
    for j, c in _comultiply(k, t, a0, a1):
        for dotted in combinations(boundary, j):
            out[frozenset(dotted)] = c
    return out


def tensor(parts: List[Morphism]) -> Morphism:
    """Product of morphisms on disjoint sets of cycles."""
    acc: Morphism = {EMPTY: 1}
    for m in parts:
        if not m:
            return {}
        if len(m) == 1 and EMPTY in m:
            c = m[EMPTY]
            if c != 1:
                acc = {k: v * c for k, v in acc.items()}
            continue
        nxt: Morphism = {}
        for k1, v1 in acc.items():
            for k2, v2 in m.items():
                nxt[k1 | k2] = v1 * v2
        acc = nxt
    return acc


def assemble(n_pieces: int, piece_dots: Sequence[int], gluings: Iterable[Tuple[int, int]],
             caps: Iterable[Tuple[int, int]], boundary: Sequence[Tuple[int, int]],
             t: int) -> Morphism:
    """Evaluate a surface built from disks.

    ``n_pieces`` disks carry ``piece_dots`` dots; each gluing joins two
    pieces along an interval (Euler characteristic -1). ``caps`` are
    extra disks ``(piece, dots)`` glued along a circle. ``boundary``
    lists ``(cycle name, piece)`` for each boundary cycle of the result.
    """
    uf = _UF(n_pieces)
    chi_drop: Dict[int, int] = {}
    glued = list(gluings)
    for a, b in glued:
        uf.union(a, b)
    dots = list(piece_dots)
    extra_chi = [0] * n_pieces
    for piece, d in caps:
        extra_chi[piece] += 1
        dots[piece] += d
    comp_chi: Dict[int, int] = {}
    comp_dots: Dict[int, int] = {}
    for i in range(n_pieces):
        r = uf.find(i)
        comp_chi[r] = comp_chi.get(r, 0) + 1 + extra_chi[i]
        comp_dots[r] = comp_dots.get(r, 0) + dots[i]
    for a, _ in glued:
        r = uf.find(a)
        chi_drop[r] = chi_drop.get(r, 0) + 1
    comp_bd: Dict[int, List[int]] = {r: [] for r in comp_chi}
    for name, piece in boundary:
        comp_bd[uf.find(piece)].append(name)
    parts = [component_value(comp_chi[r] - chi_drop.get(r, 0), comp_dots[r], comp_bd[r], t)
             for r in comp_chi]
    return tensor(parts)


@lru_cache(maxsize=None)
def _compose_basis(M1: Matching, M2: Matching, M3: Matching, D1: FrozenSet[int],
                   D2: FrozenSet[int], t: int) -> Tuple[Tuple[FrozenSet[int], int], ...]:
    c12, c23 = cycles(M1, M2), cycles(M2, M3)
    n12 = {c[0]: i for i, c in enumerate(c12)}
    n23 = {c[0]: len(c12) + i for i, c in enumerate(c23)}
    name12, name23 = cycle_names(M1, M2), cycle_names(M2, M3)
    gluings = [(n12[name12[a]], n23[name23[a]]) for a, _ in M2]
    dots = [1 if c[0] in D1 else 0 for c in c12] + [1 if c[0] in D2 else 0 for c in c23]
    boundary = [(c[0], n12[name12[c[0]]]) for c in cycles(M1, M3)]
    m = assemble(len(dots), dots, gluings, (), boundary, t)
    return tuple(m.items())


def compose(beta: Morphism, alpha: Morphism, M1: Matching, M2: Matching, M3: Matching,
            t: int) -> Morphism:
    """beta ∘ alpha for alpha: M1 -> M2 and beta: M2 -> M3."""
    out: Morphism = {}
    for D1, c1 in alpha.items():
        for D2, c2 in beta.items():
            c = c1 * c2
            for D, v in _compose_basis(M1, M2, M3, D1, D2, t):
                out[D] = out.get(D, 0) + c * v
    return {k: v for k, v in out.items() if v}
