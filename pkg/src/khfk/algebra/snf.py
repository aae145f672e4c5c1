"""Sparse exact integer linear algebra: Smith normal form and ranks."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

Rows = Dict[int, Dict[int, int]]
MatrixLike = Union[Sequence[Sequence[int]], Mapping[int, Mapping[int, int]], Rows]


def to_rows(M: MatrixLike) -> Rows:
    """Copy a dense or dict-of-dicts matrix into sparse row form."""
    rows: Rows = {}
    if isinstance(M, Mapping):
        for i, row in M.items():
            r = {j: v for j, v in row.items() if v}
            if r:
                rows[i] = r
        return rows
    for i, row in enumerate(M):
        r = {j: v for j, v in enumerate(row) if v}
        if r:
            rows[i] = r
    return rows


def _columns(rows: Rows) -> Dict[int, set]:
    cols: Dict[int, set] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)
    return cols


def _invariant_factors(diag: List[int]) -> List[int]:
    """Turn a diagonal into a divisibility chain with the same cokernel."""
    d = sorted(abs(x) for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                g = gcd(a, b)
                if g != a:
                    d[i], d[j] = g, a // g * b
                    changed = True
        d.sort()
    return d


def smith_normal_form(M: MatrixLike) -> Tuple[List[int], int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns ``(divisors, rank)`` where ``divisors`` lists the nonzero
    invariant factors ``d1 | d2 | ...``. Elimination pivots on entries of
    minimal absolute value; unit pivots are cleared first, which removes
    the bulk of a typical boundary matrix cheaply.
    """
    rows = to_rows(M)
    cols = _columns(rows)
    diag: List[int] = []

    def eliminate(pi: int, pj: int) -> bool:
        """Clear row ``pi`` and column ``pj`` around pivot; True if clean."""
        p = rows[pi][pj]
        clean = True
        # column operations reduce the pivot row
        for j, v in list(rows[pi].items()):
            if j == pj:
                continue
            q = v // p
            if q:
                for i in list(cols[pj]):
                    a = rows[i][pj]
                    row = rows[i]
                    nv = row.get(j, 0) - q * a
                    if nv:
                        if j not in row:
                            cols.setdefault(j, set()).add(i)
                        row[j] = nv
                    elif j in row:
                        del row[j]
                        cols[j].discard(i)
            if rows[pi].get(j, 0):
                clean = False
        # row operations reduce the pivot column
        prow = rows[pi]
        for i in list(cols[pj]):
            if i == pi:
                continue
            row = rows[i]
            v = row[pj]
            q = v // p
            if q:
                for j, a in prow.items():
                    nv = row.get(j, 0) - q * a
                    if nv:
                        if j not in row:
                            cols.setdefault(j, set()).add(i)
                        row[j] = nv
                    else:
                        row.pop(j, None)
                        cols[j].discard(i)
            if row.get(pj, 0):
                clean = False
        return clean

    # unit pivots first
    changed = True
    while changed:
        changed = False
        for i in list(rows):
            row = rows.get(i)
            if not row:
                continue
            unit = next((j for j, v in row.items() if v in (1, -1)), None)
            if unit is None:
                continue
            eliminate(i, unit)
            diag.append(1)
            _drop(rows, cols, i, unit)
            changed = True

    while True:
        best = None
        for i, row in rows.items():
            for j, v in row.items():
                a = abs(v)
                if best is None or a < best[0]:
                    best = (a, i, j)
                    if a == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if eliminate(pi, pj):
            diag.append(rows[pi][pj])
            _drop(rows, cols, pi, pj)
    divisors = _invariant_factors(diag)
    return divisors, len(divisors)


def _drop(rows: Rows, cols: Dict[int, set], i: int, j: int) -> None:
    for jj in rows.pop(i, {}):
        cols[jj].discard(i)
    for ii in cols.pop(j, set()):
        if ii in rows:
            rows[ii].pop(j, None)
            if not rows[ii]:
                del rows[ii]


def rank_mod_p(M: MatrixLike, p: int) -> int:
    """Rank over the prime field Z/p."""
    rows = {i: {j: v % p for j, v in r.items() if v % p} for i, r in to_rows(M).items()}
    rows = {i: r for i, r in rows.items() if r}
    rank = 0
    pivots: Dict[int, Dict[int, int]] = {}
    for _, row in rows.items():
        row = dict(row)
        while row:
            j = min(row)
            if j in pivots:
                prow = pivots[j]
                f = row[j]
                for jj, v in prow.items():
                    nv = (row.get(jj, 0) - f * v) % p
                    if nv:
                        row[jj] = nv
                    else:
                        row.pop(jj, None)
            else:
                inv = pow(row[j], p - 2, p)
                pivots[j] = {jj: (v * inv) % p for jj, v in row.items()}
                rank += 1
                break
    return rank


def rank_rational(M: MatrixLike) -> int:
    """Rank over Q by exact fraction elimination."""
    rows = to_rows(M)
    rank = 0
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for _, r in rows.items():
        row = {j: Fraction(v) for j, v in r.items()}
        while row:
            j = min(row)
            if j in pivots:
                prow = pivots[j]
                f = row[j]
                for jj, v in prow.items():
                    nv = row.get(jj, 0) - f * v
                    if nv:
                        row[jj] = nv
                    else:
                        row.pop(jj, None)
            else:
                lead = row[j]
                pivots[j] = {jj: v / lead for jj, v in row.items()}
                rank += 1
                break
    return rank


def dense_rank(M: Sequence[Sequence[int]], p: int | None = None) -> int:
    """Textbook dense row reduction; an independent oracle for tests."""
    A = [[Fraction(x) if p is None else x % p for x in row] for row in M]
    if not A:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        if p is None:
            inv = 1 / A[r][c]
        else:
            inv = pow(A[r][c], p - 2, p)
        A[r] = [x * inv if p is None else (x * inv) % p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b if p is None else (a - f * b) % p for a, b in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return r


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def iter_entries(rows: Rows) -> Iterable[Tuple[int, int, int]]:
    for i, row in rows.items():
        for j, v in row.items():
            yield i, j, v
