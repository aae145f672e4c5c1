"""Knot signature from the Goeritz matrix and the Gordon-Litherland correction."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Dict, List, Tuple

from ..diagram.pd import DiagramError, PlanarDiagram

Corner = Tuple[int, int]  # (crossing, slot): the corner between slot k and slot k + 1


def faces(D: PlanarDiagram) -> List[List[Corner]]:
    """Faces of the diagram as cycles of crossing corners."""
    ends: Dict[int, List[Tuple[int, int]]] = {}
    for i, c in enumerate(D.crossings):
        for k, a in enumerate(c):
            ends.setdefault(a, []).append((i, k))
    seen = set()
    out = []
    for i in range(D.n_crossings):
        for k in range(4):
            if (i, k) in seen:
                continue
            face = []
            cur = (i, k)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                ci, ck = cur
                x, y = ends[D.crossings[ci][ck]]
                j, l = y if x == cur else x
                cur = (j, (l - 1) % 4)
            out.append(face)
    return out


def checkerboard(D: PlanarDiagram) -> Tuple[List[List[Corner]], List[int]]:
    """Faces and a proper 2-colouring (adjacent faces differ)."""
    F = faces(D)
    where = {c: f for f, face in enumerate(F) for c in face}
    colour = [-1] * len(F)
    adj: Dict[int, set] = {f: set() for f in range(len(F))}
    for f, face in enumerate(F):
        for (i, k) in face:
            g = where[(i, (k - 1) % 4)]  # across the arc at slot k
            adj[f].add(g)
            adj[g].add(f)
    colour[0] = 0
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for g in adj[f]:
            if colour[g] < 0:
                colour[g] = 1 - colour[f]
                queue.append(g)
            elif colour[g] == colour[f]:
                raise DiagramError("diagram faces admit no checkerboard colouring")
    if min(colour) < 0:
        raise DiagramError("split diagrams are not supported")
    return F, colour


def symmetric_signature(M: List[List[Fraction]]) -> int:
    """Signature of a symmetric rational matrix by congruence diagonalization."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    sig = 0
    active = list(range(n))
    while active:
        i = active[0]
        if A[i][i] == 0:
            j = next((j for j in active[1:] if A[j][j] != 0), None)
            if j is not None:
                active.remove(j)
                active.insert(0, j)
                continue
            j = next((j for j in active[1:] if A[i][j] != 0), None)
            if j is None:
                active.pop(0)  # zero row: contributes nothing
                continue
            # e_i -> e_i + e_j gives a nonzero diagonal entry 2 A_ij
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            continue
        piv = A[i][i]
        sig += 1 if piv > 0 else -1
        rest = active[1:]
        row = list(A[i])
        for r in rest:
            f = row[r] / piv
            if f:
                for c in rest:
                    A[r][c] -= f * row[c]
        active = rest
    return sig


def signature(D: PlanarDiagram, white: int = 0) -> int:
    """Signature, normalized so that positive knots have positive signature.

    ``white`` selects which checkerboard colour plays the role of the
    Goeritz regions; both choices give the same answer.
    """
    if not D.is_knot():
        raise DiagramError("signature expects a knot diagram")
    if D.n_crossings == 0:
        return 0
    F, colour = checkerboard(D)
    where = {c: f for f, face in enumerate(F) for c in face}
    whites = [f for f in range(len(F)) if colour[f] == white]
    widx = {f: i for i, f in enumerate(whites)}
    n = len(whites)
    G = [[Fraction(0)] * n for _ in range(n)]
    mu = 0
    for i, sign in enumerate(D.signs):
        corners = [where[(i, k)] for k in range(4)]
        # corners k = 0, 2 lie between (a,b) and (c,d); k = 1, 3 between (b,c) and (d,a)
        if colour[corners[0]] == white:
            eta, w1, w2 = 1, corners[0], corners[2]
        else:
            eta, w1, w2 = -1, corners[1], corners[3]
        if w1 != w2:
            a, b = widx[w1], widx[w2]
            G[a][b] -= eta
            G[b][a] -= eta
            G[a][a] += eta
            G[b][b] += eta
        # type II: the oriented smoothing keeps the two white corners apart
        if (sign > 0) == (eta > 0):
            mu += eta
    Gr = [row[1:] for row in G[1:]]
    # Gordon-Litherland gives the classical sign (right trefoil -2); flip it
    return mu - symmetric_signature(Gr)
