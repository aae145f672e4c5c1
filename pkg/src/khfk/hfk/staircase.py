"""Knot Floer homology of L-space knots from the Alexander polynomial."""

from __future__ import annotations

from typing import List, Tuple

from ..algebra import (BigradedComplex, GradedGenerator, HomologyTable, LaurentPolynomial,
                       filtered_reduce)
from .engine import HFKGenerator, HFKTable


class StaircaseError(ValueError):
    pass


def staircase_exponents(delta: LaurentPolynomial) -> List[int]:
    """Exponents of an admissible Alexander polynomial, highest first."""
    if len(delta.variables) != 1:
        raise StaircaseError("expected a polynomial in one variable")
    if not delta:
        raise StaircaseError("zero polynomial")
    if delta.evaluate(1) == -1:
        delta = -delta
    if delta.evaluate(1) != 1:
        raise StaircaseError(f"Δ(1) = {delta.evaluate(1)}, expected ±1")
    if not delta.is_symmetric():
        raise StaircaseError("Δ is not symmetric")
    terms = delta.sorted_terms()
    for k, ((e,), c) in enumerate(terms):
        if c != (-1) ** k:
            raise StaircaseError(f"coefficient {c} at t^{e} breaks the ±1 alternation")
    return [e for (e,), _ in terms]


def staircase_complex(delta: LaurentPolynomial) -> BigradedComplex:
    """Alexander-filtered staircase complex (hat flavour) realizing Δ."""
    ns = staircase_exponents(delta)
    gens: List[Tuple[int, int]] = []  # (M, A)
    m = 0
    for k, n in enumerate(ns):
        if k:
            m -= 2 * (ns[k - 1] - n) - 1 if k % 2 else 1
        gens.append((m, n))
    G = [GradedGenerator(k, m, a) for k, (m, a) in enumerate(gens)]
    # vertical arrows x_{2j+1} -> x_{2j+2}
    diff = {k: {k + 1: 1} for k in range(1, len(gens) - 1, 2)}
    return BigradedComplex(G, diff, d_degree=-1, upward=False)


def staircase_from_alexander(delta: LaurentPolynomial) -> HFKTable:
    """HFK table of an L-space knot with Alexander polynomial ``delta``.

    The top generator sits at (A, M) = (n_1, 0); going down the staircase
    the Maslov grading drops by 2(n_k - n_{k+1}) - 1 and 1 alternately.
    """
    C = staircase_complex(delta)
    table = HomologyTable.from_ranks(C.generator_counts(), "Z")
    _, pages = filtered_reduce(C, 2)
    if len(pages.survivors) != 1 or pages.survivors[0][0] != 0:
        raise StaircaseError("staircase complex does not have rank-one homology in degree 0")
    tau = pages.survivors[0][1]
    gens = [HFKGenerator(g.id, g.f, g.u, (-1) ** (g.u % 2)) for g in C.generators]
    return HFKTable(table, tau, gens)


def genus_from_hfk(T: HFKTable) -> int:
    """Largest Alexander grading carrying homology (Seifert genus detection)."""
    As = [a for (_, a), r in T.table.ranks().items() if r]
    if not As:
        raise ValueError("empty HFK table")
    return max(As)
