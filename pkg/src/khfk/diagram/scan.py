"""Crossing orders for tangle-scanning algorithms."""

from __future__ import annotations

from typing import List, Optional, Sequence

from .pd import PlanarDiagram


def scan_order(D: PlanarDiagram, first: Optional[int] = None) -> List[int]:
    """Greedy crossing order keeping the open boundary small.

    Each step takes the crossing that closes the most currently open arcs,
    breaking ties by the fewest newly opened arcs and then by index.
    """
    n = D.n_crossings
    if n == 0:
        return []
    remaining = set(range(n))
    open_arcs: set = set()
    order: List[int] = []
    start = 0 if first is None else first
    while remaining:
        if not order:
            best = start
        else:
            best = max(remaining, key=lambda i: (_closing(D.crossings[i], open_arcs),
                                                 -_opening(D.crossings[i], open_arcs), -i))
        remaining.discard(best)
        order.append(best)
        for a in D.crossings[best]:
            if a in open_arcs:
                open_arcs.discard(a)
            else:
                open_arcs.add(a)
    return order


def _closing(c: Sequence[int], open_arcs: set) -> int:
    return sum(1 for a in c if a in open_arcs)


def _opening(c: Sequence[int], open_arcs: set) -> int:
    return sum(1 for a in c if a not in open_arcs)
