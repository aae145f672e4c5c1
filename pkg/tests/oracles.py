"""Slow, independent reference computations used only by the tests."""

from fractions import Fraction
from itertools import combinations
from math import gcd


def rref(rows):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    A = [[Fraction(x) for x in r] for r in rows]
    if not A:
        return [], []
    m, n = len(A), len(A[0])
    pivots, r = [], 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        lead = A[r][c]
        A[r] = [x / lead for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A[:r], pivots


def rank(rows):
    return len(rref(rows)[1]) if rows else 0


def nullspace(M, ncols):
    """Basis of {x : M x = 0} for an m x ncols matrix (list of rows)."""
    if not M:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, piv = rref(M)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(R, piv):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def determinant(M):
    n = len(M)
    A = [[Fraction(x) for x in r] for r in M]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return int(det)


def invariant_factors(M):
    """Invariant factors from gcds of k x k minors (determinantal divisors)."""
    m = len(M)
    n = len(M[0]) if m else 0
    prev, out = 1, []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, determinant([[M[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def _matrix(C, src, tgt):
    """Matrix of d restricted to src -> tgt indices (rows = targets)."""
    return [[Fraction(C.differential.get(i, {}).get(j, 0)) for i in src] for j in tgt]


def dense_homology(C):
    """Associated-graded homology ranks over Q, per (u, f)."""
    out = {}
    keys = {(g.u, g.f) for g in C.generators}
    for u, f in keys:
        here = [i for i, g in enumerate(C.generators) if (g.u, g.f) == (u, f)]
        below = [i for i, g in enumerate(C.generators) if (g.u, g.f) == (u + C.d_degree, f)]
        above = [i for i, g in enumerate(C.generators) if (g.u, g.f) == (u - C.d_degree, f)]
        r_out = rank(_matrix(C, here, below)) if below else 0
        r_in = rank(_matrix(C, above, here)) if above else 0
        h = len(here) - r_out - r_in
        if h:
            out[(u, f)] = h
    return out


def dense_pages(C, max_page):
    """Pages E_1..E_max_page via subquotients, downward filtration, d of degree -1.

    Uses the textbook E_r^p = Z_r^p / (Z_{r-1}^{p-1} + d Z_{r-1}^{p+r-1}) with
    Z_r^p = F_p cap d^{-1} F_{p-r}; the page numbered i is textbook E_{i-1}.
    """
    n = len(C.generators)
    gens = C.generators
    D = [[Fraction(C.differential.get(i, {}).get(j, 0)) for i in range(n)] for j in range(n)]

    def Z(r, p, u):
        basis = [i for i in range(n) if gens[i].u == u and gens[i].f <= p]
        if not basis:
            return []
        high = [j for j in range(n) if gens[j].f > p - r]
        M = [[D[j][i] for i in basis] for j in high]
        vecs = nullspace(M, len(basis)) if high else nullspace([], len(basis))
        out = []
        for v in vecs:
            w = [Fraction(0)] * n
            for c, i in zip(v, basis):
                w[i] = c
            out.append(w)
        return out

    def apply(v):
        return [sum(D[j][i] * v[i] for i in range(n)) for j in range(n)]

    pages = []
    fs = sorted({g.f for g in gens})
    us = sorted({g.u for g in gens})
    for page in range(1, max_page + 1):
        r = page - 1
        table = {}
        for u in us:
            for p in fs:
                top = Z(r, p, u)
                if not top:
                    continue
                if r == 0:
                    dim = sum(1 for g in gens if (g.u, g.f) == (u, p))
                    if dim:
                        table[(u, p)] = dim
                    continue
                low = Z(r - 1, p - 1, u)
                bnd = [apply(v) for v in Z(r - 1, p + r - 1, u + 1)]
                dim = rank(top) - rank(low + bnd)
                if dim:
                    table[(u, p)] = dim
        pages.append(table)
    return pages



def state_sum_jones(D):
    """(q + q^-1) V(q^2) by summing over all 2^n Kauffman states.

    Returns {exponent: coefficient}; exponential, for small diagrams only.
    """
    from itertools import product

    from khfk.algebra import LaurentPolynomial

    smooth = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}
    qq = LaurentPolynomial({(1,): 1, (-1,): 1}, ("q",))
    total = LaurentPolynomial({}, ("q",))
    for v in product((0, 1), repeat=D.n_crossings):
        parent = {a: a for a in D.arcs}

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for c, bit in zip(D.crossings, v):
            for i, j in smooth[bit]:
                ra, rb = find(c[i]), find(c[j])
                if ra != rb:
                    parent[ra] = rb
        circles = len({find(a) for a in D.arcs}) + D.free_loops
        r = sum(v)
        total = total + LaurentPolynomial({(r,): (-1) ** r}, ("q",)) * qq ** circles
    shift = LaurentPolynomial({(D.n_plus - 2 * D.n_minus,): (-1) ** D.n_minus}, ("q",))
    return total * shift


def sylvester_signature(M):
    """Signature of a symmetric matrix from numpy eigenvalues."""
    import numpy as np

    if not M:
        return 0
    w = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in M]))
    return int((w > 1e-9).sum() - (w < -1e-9).sum())
