"""Knot determinant, computed twice and cross-checked."""

from __future__ import annotations

from ..diagram.pd import DiagramError, PlanarDiagram
from .alexander import alexander_fox
from .jones import jones, jones_at_i


def determinant(D: PlanarDiagram) -> int:
    """|Δ(-1)|, checked against the reduced Jones polynomial at q^2 = -1."""
    if not D.is_knot():
        raise DiagramError("determinant expects a knot diagram")
    det = abs(alexander_fox(D).evaluate(-1))
    re, im = jones_at_i(jones(D, reduced=True))
    if im != 0 or abs(re) != det:
        raise AssertionError(f"determinant mismatch: |Δ(-1)| = {det}, V(-1) = {re}+{im}i")
    return det
