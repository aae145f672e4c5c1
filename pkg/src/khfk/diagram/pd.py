"""Planar diagram (PD) codes: parsing, validation, orientation and signs.

A crossing ``X[a,b,c,d]`` lists its four arcs counterclockwise, starting
from the incoming under-strand, so the under-strand runs ``a -> c``. The
over-strand runs either ``d -> b`` (positive crossing) or ``b -> d``
(negative crossing); which one is decided by following the components.

Worked example, the right-handed trefoil as a closed 2-braid::

    X[4,2,5,1], X[2,6,3,5], X[6,4,1,3]

Every over-strand here runs ``d -> b``, so all three crossings are
positive and the writhe is +3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

Crossing = Tuple[int, int, int, int]


class DiagramError(ValueError):
    """Malformed PD input; ``location`` points at the offending token."""

    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        super().__init__(message if location is None else f"{message} (at {location})")


@dataclass(frozen=True)
class PlanarDiagram:
    """Oriented link diagram given by a PD code.

    ``free_loops`` counts split unknotted circles without crossings, so the
    0-crossing unknot is ``PlanarDiagram((), free_loops=1)``.
    """
    crossings: Tuple[Crossing, ...]
    free_loops: int = 0
    # derived data, filled in by __post_init__
    over_in: Tuple[int, ...] = field(default=(), compare=False, repr=False)
    components: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        crossings = tuple(tuple(int(x) for x in c) for c in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        over_in, comps = _orient(crossings)
        object.__setattr__(self, "over_in", over_in)
        object.__setattr__(self, "components", comps)

    # -- counts ----------------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components) + self.free_loops

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(1 if o == 3 else -1 for o in self.over_in)

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def writhe(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def arcs(self) -> List[int]:
        return sorted({a for c in self.crossings for a in c})

    def is_knot(self) -> bool:
        return self.n_components == 1

    def component_of(self) -> Dict[int, int]:
        """Arc label -> component index."""
        return {a: k for k, comp in enumerate(self.components) for a in comp}

    def __str__(self):
        return serialize_pd(self)


def _orient(crossings: Sequence[Crossing]) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    """Decide the over-strand direction at every crossing.

    Returns ``over_in`` (slot 1 or 3 of the incoming over-arc) and the
    components as arc sequences in the direction of travel.
    """
    slots: Dict[int, List[Tuple[int, int]]] = {}
    for i, c in enumerate(crossings):
        for k, a in enumerate(c):
            slots.setdefault(a, []).append((i, k))
    for a, occ in slots.items():
        if len(occ) != 2:
            raise DiagramError(f"arc multiplicity: label {a} occurs {len(occ)} times",
                               f"arc {a}")
    over_in: List[Optional[int]] = [None] * len(crossings)
    seen_arcs: set = set()
    comps: List[Tuple[int, ...]] = []

    def other_end(a: int, here: Tuple[int, int]) -> Tuple[int, int]:
        x, y = slots[a]
        return y if x == here else x

    def trace(i: int, k: int) -> None:
        """Walk a component entering crossing i at slot k."""
        arcs = []
        start = (i, k)
        while True:
            if k in (1, 3):
                if over_in[i] is not None and over_in[i] != k:
                    raise DiagramError("inconsistent orientation at over-strand",
                                       f"crossing {i + 1}")
                over_in[i] = k
            elif k != 0:
                raise DiagramError("component enters a crossing on its outgoing under-arc",
                                   f"crossing {i + 1}")
            out_slot = (k + 2) % 4
            a = crossings[i][out_slot]
            arcs.append(a)
            seen_arcs.add(a)
            i, k = other_end(a, (i, out_slot))
            if (i, k) == start:
                break
            if len(arcs) > 2 * len(crossings) + 2:
                raise DiagramError("component does not close")
        comps.append(tuple(arcs))

    # components through an under-strand have a forced direction
    for i, c in enumerate(crossings):
        if c[0] not in seen_arcs:
            trace(i, 0)
    # components that only pass over: orient so labels increase (d -> b when b = d + 1)
    for i, c in enumerate(crossings):
        if over_in[i] is None:
            b, d = c[1], c[3]
            k = 3 if (b - d == 1 or d - b > 1) else 1
            trace(i, k)
    # every arc of a closed component must have been traversed
    for a in slots:
        if a not in seen_arcs:
            raise DiagramError("non-closing component", f"arc {a}")
    return tuple(over_in), tuple(comps)


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``X[a,b,c,d]`` tokens (or ``X a b c d`` lines); header ``components=n``."""
    components = None
    body_lines = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        m = re.fullmatch(r"components\s*=\s*(\d+)", stripped)
        if m:
            components = int(m.group(1))
            continue
        body_lines.append((lineno, stripped))
    crossings: List[Crossing] = []
    for lineno, line in body_lines:
        rest = line.strip().strip(",")
        if rest.upper().startswith("PD[") and rest.endswith("]"):
            rest = rest[3:-1]
        pos = 0
        while pos < len(rest):
            if rest[pos] in ", \t":
                pos += 1
                continue
            m = re.compile(r"X\s*\[([^\]]*)\]").match(rest, pos)
            if m:
                parts = [p for p in re.split(r"[,\s]+", m.group(1).strip()) if p]
            else:
                m = re.compile(r"X((?:\s+-?\d+)+)\s*,?").match(rest, pos)
                if not m:
                    raise DiagramError("unrecognized token", f"line {lineno}, column {pos + 1}")
                parts = m.group(1).split()
            if len(parts) != 4:
                raise DiagramError(f"crossing has {len(parts)} entries, expected 4",
                                   f"line {lineno}, column {pos + 1}")
            try:
                crossings.append(tuple(int(p) for p in parts))
            except ValueError:
                raise DiagramError("non-integer arc label", f"line {lineno}, column {pos + 1}")
            pos = m.end()
    D = PlanarDiagram(tuple(crossings))
    if components is not None:
        extra = components - len(D.components)
        if extra < 0:
            raise DiagramError(f"header declares {components} components, "
                               f"diagram has {len(D.components)}")
        D = PlanarDiagram(D.crossings, extra)
    elif not crossings:
        raise DiagramError("empty diagram (use 'components=1' for the unknot)")
    return D


def serialize_pd(D: PlanarDiagram) -> str:
    body = ", ".join("X[" + ",".join(str(x) for x in c) + "]" for c in D.crossings)
    if D.free_loops or not D.crossings:
        header = f"components={D.n_components}"
        return header + ("\n" + body if body else "") + "\n"
    return body + "\n"


def mirror(D: PlanarDiagram) -> PlanarDiagram:
    """Change every crossing; the over-strand becomes the under-strand."""
    out = []
    for (a, b, c, d), o in zip(D.crossings, D.over_in):
        out.append((d, a, b, c) if o == 3 else (b, c, d, a))
    return PlanarDiagram(tuple(out), D.free_loops)


def relabel(D: PlanarDiagram) -> PlanarDiagram:
    """Relabel arcs 1..2n consecutively along the components."""
    mapping: Dict[int, int] = {}
    for comp in D.components:
        for a in comp:
            mapping[a] = len(mapping) + 1
    return PlanarDiagram(tuple(tuple(mapping[x] for x in c) for c in D.crossings), D.free_loops)
