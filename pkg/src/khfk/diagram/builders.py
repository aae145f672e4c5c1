"""Diagram generators: braid closures, torus knots and pretzel knots.

Diagrams are assembled from abstract crossings with slots numbered
counterclockwise ``0 = SW, 1 = SE, 2 = NE, 3 = NW`` and a flag saying
which diagonal passes over. Tracing the strands then yields arc labels
and the PD tuple (rotated so that it starts at the incoming under-slot).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .pd import DiagramError, PlanarDiagram

Slot = Tuple[int, int]  # (crossing index, slot number)


@dataclass
class SlotGraph:
    """Crossings with over-diagonal flags and slot-to-slot connections."""
    over_sw_ne: List[bool] = field(default_factory=list)
    links: Dict[Slot, Slot] = field(default_factory=dict)
    free_loops: int = 0

    def add_crossing(self, sw_ne_over: bool) -> int:
        self.over_sw_ne.append(sw_ne_over)
        return len(self.over_sw_ne) - 1

    def connect(self, a: Slot, b: Slot) -> None:
        if a in self.links or b in self.links:
            raise DiagramError(f"slot already connected: {a} / {b}")
        self.links[a] = b
        self.links[b] = a

    def to_pd(self, starts: Sequence[Slot] = ()) -> PlanarDiagram:
        """Trace components (entering at ``starts`` first) and emit a PD code."""
        n = len(self.over_sw_ne)
        if len(self.links) != 4 * n:
            raise DiagramError("unconnected crossing slots")
        slot_label: Dict[Slot, int] = {}
        entered: Dict[Slot, bool] = {}
        label = 0
        candidates = list(starts) + [(i, k) for i in range(n) for k in range(4)]
        for start in candidates:
            if start in entered:
                continue
            ci, k = start
            while (ci, k) not in entered:
                entered[(ci, k)] = True
                out = (ci, (k + 2) % 4)
                entered[out] = False
                label += 1
                nxt = self.links[out]
                slot_label[out] = label
                slot_label[nxt] = label
                ci, k = nxt
        crossings = []
        for i in range(n):
            under = (1, 3) if self.over_sw_ne[i] else (0, 2)
            k_in = next(k for k in under if entered[(i, k)])
            crossings.append(tuple(slot_label[(i, (k_in + j) % 4)] for j in range(4)))
        return PlanarDiagram(tuple(crossings), self.free_loops)


def braid_closure(word: Sequence[int], n_strands: int) -> PlanarDiagram:
    """Closure of a braid word; ``i`` is sigma_i and ``-i`` its inverse.

    Strands run upward. In sigma_i the strand from position i (bottom
    left) crosses over to position i + 1, which is a positive crossing.
    """
    if n_strands < 1:
        raise DiagramError("a braid needs at least one strand")
    G = SlotGraph()
    bottom: Dict[int, Optional[Slot]] = {k: None for k in range(1, n_strands + 1)}
    top: Dict[int, Optional[Slot]] = dict(bottom)
    for g in word:
        i = abs(g)
        if not 1 <= i < n_strands:
            raise DiagramError(f"generator {g} out of range for {n_strands} strands")
        c = G.add_crossing(g > 0)
        for pos, slot_in in ((i, 0), (i + 1, 1)):
            if top[pos] is None:
                bottom[pos] = (c, slot_in)
            else:
                G.connect(top[pos], (c, slot_in))
        top[i] = (c, 3)
        top[i + 1] = (c, 2)
    for pos in range(1, n_strands + 1):
        if top[pos] is None:
            G.free_loops += 1
        else:
            G.connect(top[pos], bottom[pos])
    if not word:
        return PlanarDiagram((), G.free_loops)
    starts = [bottom[pos] for pos in range(1, n_strands + 1) if bottom[pos] is not None]
    return G.to_pd(starts)


def torus_braid_diagram(p: int, q: int) -> PlanarDiagram:
    """Closure of the positive braid (sigma_1 ... sigma_{p-1})^q."""
    if p < 2:
        raise DiagramError("torus braid needs p >= 2")
    if q < 1:
        raise DiagramError("torus braid needs q >= 1")
    return braid_closure(list(range(1, p)) * q, p)


def pretzel_diagram(*twists: int) -> PlanarDiagram:
    """Pretzel diagram with vertical twist columns of the given signed lengths.

    Positive parameters use right-handed half twists, so that
    ``pretzel_diagram(1, 1, 1)`` is the right-handed trefoil.
    """
    if len(twists) < 2:
        raise DiagramError("a pretzel diagram needs at least two columns")
    if any(t == 0 for t in twists):
        raise DiagramError("pretzel parameters must be nonzero")
    G = SlotGraph()
    ends = []
    for t in twists:
        cs = [G.add_crossing(t < 0) for _ in range(abs(t))]
        for lo, hi in zip(cs, cs[1:]):
            G.connect((lo, 3), (hi, 0))
            G.connect((lo, 2), (hi, 1))
        ends.append(((cs[0], 0), (cs[0], 1), (cs[-1], 3), (cs[-1], 2)))  # BL, BR, TL, TR
    m = len(ends)
    for j in range(m - 1):
        G.connect(ends[j][3], ends[j + 1][2])  # tops
        G.connect(ends[j][1], ends[j + 1][0])  # bottoms
    G.connect(ends[0][2], ends[-1][3])
    G.connect(ends[0][0], ends[-1][1])
    return G.to_pd([ends[0][0]])


def torus_link_components(p: int, q: int) -> int:
    return gcd(p, q)
