"""Alexander polynomial by Fox calculus on the Wirtinger presentation."""

from __future__ import annotations

from math import gcd
from typing import Dict, List

from ..algebra import LaurentPolynomial
from ..diagram.pd import DiagramError, PlanarDiagram

T = ("t",)
ZERO = LaurentPolynomial({}, T)
ONE = LaurentPolynomial.constant(1, T)


def _t(k: int) -> LaurentPolynomial:
    return LaurentPolynomial({(k,): 1}, T)


def overarcs(D: PlanarDiagram) -> Dict[int, int]:
    """Map each PD arc label to its Wirtinger generator (over-arc) index."""
    parent = {a: a for a in D.arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for _, b, _, d in D.crossings:
        ra, rb = find(b), find(d)
        if ra != rb:
            parent[ra] = rb
    roots = sorted({find(a) for a in D.arcs})
    index = {r: i for i, r in enumerate(roots)}
    return {a: index[find(a)] for a in D.arcs}


def fox_matrix(D: PlanarDiagram) -> List[List[LaurentPolynomial]]:
    """Abelianized Fox Jacobian: one row per crossing, one column per over-arc.

    Relation at a crossing with over-arc k, incoming under-arc i and
    outgoing under-arc j: x_j = x_k x_i x_k^-1 (positive) or
    x_j = x_k^-1 x_i x_k (negative).
    """
    gen = overarcs(D)
    n_gen = len(set(gen.values()))
    rows = []
    for (a, b, c, d), sign in zip(D.crossings, D.signs):
        row = [ZERO] * n_gen
        k, i, j = gen[b], gen[a], gen[c]
        if sign > 0:
            entries = [(k, ONE - _t(1)), (i, _t(1)), (j, -ONE)]
        else:
            entries = [(k, ONE - _t(-1)), (i, _t(-1)), (j, -ONE)]
        for col, val in entries:
            row[col] = row[col] + val
        rows.append(row)
    return rows


def bareiss_determinant(M: List[List[LaurentPolynomial]]) -> LaurentPolynomial:
    """Fraction-free determinant over Z[t, t^-1]."""
    n = len(M)
    if n == 0:
        return ONE
    A = [list(r) for r in M]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not A[k][k]:
            piv = next((i for i in range(k + 1, n) if A[i][k]), None)
            if piv is None:
                return ZERO
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).exact_divide(prev)
        prev = A[k][k]
    return A[n - 1][n - 1] * sign


def alexander_fox(D: PlanarDiagram) -> LaurentPolynomial:
    """Symmetrized Alexander polynomial with Δ(1) = 1 of a knot diagram."""
    if not D.is_knot():
        raise DiagramError("alexander_fox expects a knot diagram (one component)")
    if D.n_crossings == 0:
        return ONE
    M = fox_matrix(D)
    minor = [row[1:] for row in M[1:]]
    delta = bareiss_determinant(minor)
    if not delta:
        raise AssertionError("vanishing Alexander minor for a knot diagram")
    return delta.symmetrize()


def torus_alexander(p: int, q: int) -> LaurentPolynomial:
    """(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError(f"torus_alexander needs coprime p, q >= 2 (got {p}, {q})")
    num = (_t(p * q) - ONE) * (_t(1) - ONE)
    den = (_t(p) - ONE) * (_t(q) - ONE)
    return num.exact_divide(den).symmetrize()
