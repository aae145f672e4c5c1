"""Doubly pointed genus-1 diagrams K(p, q, r, s).

The torus is a square whose left and right sides are a copy of beta,
glued so that the i-th point on the right is the (i + s)-th point on the
left (indices mod p, counted from the top). Alpha meets each side in p
points and consists of

* a left rainbow of q nested arcs pairing L_i with L_{2q+1-i};
* p - 2q through strands; strand k starts at L_{2q+k} and ends at R_k
  when k <= r and at R_{k+2q} otherwise;
* a right rainbow of q nested arcs pairing R_{r+i} with R_{r+2q+1-i}.

The basepoint x sits inside the innermost left rainbow and y inside the
innermost right rainbow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

End = Tuple[str, int]  # ("L" | "R", index 1..p)


class OneOneError(ValueError):
    pass


@dataclass(frozen=True)
class OneOneParams:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        for name in ("p", "q", "r", "s"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise OneOneError(f"{name} must be a non-negative integer, got {v!r}")
        if self.p < 1:
            raise OneOneError("p must be positive")
        if 2 * self.q + self.r > self.p:
            raise OneOneError(f"constraint 2q + r <= p fails: {2 * self.q + self.r} > {self.p}")
        if self.s >= self.p:
            raise OneOneError(f"constraint s < p fails: {self.s} >= {self.p}")

    def __str__(self):
        return f"K({self.p},{self.q},{self.r},{self.s})"


def alpha_arcs(P: OneOneParams) -> List[Tuple[End, End]]:
    """The alpha arcs in the square, as pairs of side endpoints."""
    p, q, r = P.p, P.q, P.r
    arcs: List[Tuple[End, End]] = []
    for i in range(1, q + 1):
        arcs.append((("L", i), ("L", 2 * q + 1 - i)))
    for k in range(1, p - 2 * q + 1):
        arcs.append((("L", 2 * q + k), ("R", k if k <= r else k + 2 * q)))
    for i in range(1, q + 1):
        arcs.append((("R", r + i), ("R", r + 2 * q + 1 - i)))
    return arcs


@dataclass(frozen=True)
class OneOneDiagram:
    """Validated K(p,q,r,s) with the alpha traversal and local signs.

    ``order`` lists beta-points (1..p) in the order alpha visits them,
    ``signs[j]`` is +1 when alpha crosses beta at point j moving from
    the right side of the square to the left side (rightward in the
    universal cover), and -1 otherwise.
    """
    params: OneOneParams
    mirror: bool = False
    arcs: Tuple[Tuple[End, End], ...] = field(default=(), compare=False, repr=False)
    order: Tuple[int, ...] = field(default=(), compare=False, repr=False)
    signs: Dict[int, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def p(self) -> int:
        return self.params.p

    def point_of(self, end: End) -> int:
        side, i = end
        if side == "L":
            return i
        return (i + self.params.s - 1) % self.params.p + 1

    @property
    def intersection_number(self) -> int:
        return sum(self.signs.values())

    @property
    def x_segment(self) -> Tuple[int, int]:
        """Left-side points bounding the innermost left rainbow (contains x)."""
        q = self.params.q
        return (q, q + 1)

    @property
    def y_segment(self) -> Tuple[int, int]:
        """Right-side points bounding the innermost right rainbow (contains y)."""
        q, r = self.params.q, self.params.r
        return (r + q, r + q + 1)


def build_one_one(params: OneOneParams | Tuple[int, int, int, int], mirror: bool = False) -> OneOneDiagram:
    """Instantiate and validate the normal form for the given parameters."""
    P = params if isinstance(params, OneOneParams) else OneOneParams(*params)
    arcs = alpha_arcs(P)
    partner: Dict[End, End] = {}
    for a, b in arcs:
        partner[a] = b
        partner[b] = a
    if len(partner) != 2 * P.p:
        raise OneOneError("alpha arcs do not cover every side point exactly once")
    D = OneOneDiagram(P, mirror)

    def ends_at(j: int) -> Tuple[End, End]:
        return ("L", j), ("R", (j - P.s - 1) % P.p + 1)

    order: List[int] = []
    signs: Dict[int, int] = {}
    j, leave = 1, "L"
    while True:
        if j in signs:
            break
        signs[j] = 1 if leave == "L" else -1
        order.append(j)
        left_end, right_end = ends_at(j)
        arrive = partner[left_end if leave == "L" else right_end]
        j = D.point_of(arrive)
        leave = "R" if arrive[0] == "L" else "L"
    if len(order) != P.p or j != 1:
        raise OneOneError(f"not a knot diagram: alpha closes into several curves ({P})")
    if abs(sum(signs.values())) != 1:
        raise OneOneError(f"not a knot diagram: alpha.beta = {sum(signs.values())} ({P})")
    object.__setattr__(D, "arcs", tuple(arcs))
    object.__setattr__(D, "order", tuple(order))
    object.__setattr__(D, "signs", signs)
    return D
