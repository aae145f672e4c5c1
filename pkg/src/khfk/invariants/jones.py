"""Jones polynomial from a scanned Kauffman state sum.

The normalization matches Khovanov homology: for a diagram with n_+
positive and n_- negative crossings,

    J(D) = (-1)^{n_-} q^{n_+ - 2 n_-} sum_states (-q)^{r} (q + q^{-1})^{#circles}

where r counts 1-smoothings. At ``X[a,b,c,d]`` the 0-smoothing joins
(a,b) and (c,d), the 1-smoothing joins (a,d) and (b,c). This is
(q + q^{-1}) V(q^2); dividing by q + q^{-1} gives the reduced form V(q^2).
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, Tuple

from ..algebra import LaurentPolynomial
from ..diagram.pd import PlanarDiagram
from ..diagram.scan import scan_order

Matching = Tuple[Tuple[int, int], ...]

SMOOTHINGS = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}


def join(matching: Dict[int, int], u: int, v: int) -> int:
    """Add a strand u-v to a matching of open arc ends, in place.

    Returns the number of circles closed (0 or 1).
    """
    if u == v:
        return 1
    if matching.get(u) == v:
        del matching[u]
        del matching[v]
        return 1
    ends = []
    for w in (u, v):
        if w in matching:
            x = matching.pop(w)
            del matching[x]
            ends.append(x)
        else:
            ends.append(w)
    a, b = ends
    matching[a] = b
    matching[b] = a
    return 0


def _key(m: Dict[int, int]) -> Matching:
    return tuple(sorted((a, b) for a, b in m.items() if a < b))


def bracket_states(D: PlanarDiagram) -> Dict[Tuple[int, int], int]:
    """Counts of (number of 1-smoothings, number of circles) over all states."""
    states: Dict[Matching, Dict[Tuple[int, int], int]] = {(): {(0, 0): 1}}
    for ci in scan_order(D):
        cr = D.crossings[ci]
        nxt: Dict[Matching, Dict[Tuple[int, int], int]] = defaultdict(lambda: defaultdict(int))
        for key, counts in states.items():
            for bit, pairs in SMOOTHINGS.items():
                m = dict(key)
                m.update({b: a for a, b in key})
                closed = 0
                for x, y in pairs:
                    closed += join(m, cr[x], cr[y])
                k2 = _key(m)
                for (r, c), v in counts.items():
                    nxt[k2][(r + bit, c + closed)] += v
        states = {k: dict(v) for k, v in nxt.items()}
    total: Dict[Tuple[int, int], int] = defaultdict(int)
    for key, counts in states.items():
        if key:
            raise AssertionError("open ends remain after scanning every crossing")
        for (r, c), v in counts.items():
            total[(r, c + D.free_loops)] += v
    return dict(total)


def jones(D: PlanarDiagram, reduced: bool = False) -> LaurentPolynomial:
    """Jones polynomial in the variable q, unreduced (default) or reduced."""
    qq = LaurentPolynomial({(1,): 1, (-1,): 1}, ("q",))
    total = LaurentPolynomial({}, ("q",))
    powers = {0: LaurentPolynomial.constant(1, ("q",))}
    for (r, c), v in sorted(bracket_states(D).items()):
        if c not in powers:
            powers[c] = qq ** c
        total = total + LaurentPolynomial({(r,): v * (-1) ** r}, ("q",)) * powers[c]
    npos, nneg = D.n_plus, D.n_minus
    J = total * LaurentPolynomial({(npos - 2 * nneg,): (-1) ** nneg}, ("q",))
    if reduced:
        return J.exact_divide(qq)
    return J


def jones_at_i(J: LaurentPolynomial) -> Tuple[int, int]:
    """Evaluate a q-polynomial at q = i; returns (real, imaginary) integers."""
    re = im = 0
    for (e,), c in J.terms.items():
        k = e % 4
        if k == 0:
            re += c
        elif k == 1:
            im += c
        elif k == 2:
            re -= c
        else:
            im -= c
    return re, im
