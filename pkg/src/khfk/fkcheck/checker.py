"""δ-thinness and the FK verdict.

A knot has the FK property when rank HFK(K, *, j) = rank Kh_r(K, *, 2j)
for every j (δ-gradings A - M and q - 2u) and s(K) = 2 τ(K).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..algebra import HomologyTable
from ..hfk import HFKTable


@dataclass(frozen=True)
class ThinnessReport:
    theory: str                      # "HFK" or "Kh"
    thin: bool
    delta: Optional[int]
    buckets: Dict[int, int]
    signature: Optional[int] = None
    matches_signature: Optional[bool] = None
    torsion_free: Optional[bool] = None


@dataclass(frozen=True)
class FKReport:
    condition1: List[Tuple[int, int, int, bool]]   # (j, rank HFK at j, rank Kh_r at 2j, equal)
    condition2: Tuple[int, int, bool]               # (s, 2 tau, equal)
    provenance: Dict[str, str] = field(default_factory=dict)

    @property
    def condition1_holds(self) -> bool:
        return all(ok for *_, ok in self.condition1)

    @property
    def condition2_holds(self) -> bool:
        return self.condition2[2]

    @property
    def failed(self) -> List[int]:
        return [n for n, ok in ((1, self.condition1_holds), (2, self.condition2_holds)) if not ok]

    @property
    def verdict(self) -> str:
        if not self.failed:
            return "holds"
        if len(self.failed) == 1:
            return f"fails condition {self.failed[0]} only"
        return "fails conditions 1 and 2"

    def to_dict(self) -> dict:
        return {
            "condition1": [{"j": j, "hfk": a, "khr": b, "ok": ok} for j, a, b, ok in self.condition1],
            "condition2": {"s": self.condition2[0], "two_tau": self.condition2[1],
                           "ok": self.condition2[2]},
            "verdict": self.verdict,
            "provenance": dict(self.provenance),
        }


def _hfk_buckets(T) -> Dict[int, int]:
    if isinstance(T, HFKTable):
        return T.delta_ranks()
    return T.delta_ranks(1, -1)


def property_fk(hfk: HFKTable, khr: HomologyTable, s: int, tau: int,
                provenance: Optional[Dict[str, str]] = None) -> FKReport:
    """Compare δ-graded ranks and s against 2τ.

    ``hfk`` is keyed by (M, A) and ``khr`` by (u, q). The two are assumed
    to describe the same knot; that claim belongs to the caller.
    """
    kb = khr.delta_ranks(1, -2)
    odd = [d for d, r in kb.items() if r and d % 2]
    if odd:
        raise ValueError(f"odd Khovanov δ-gradings {odd}: expected a reduced table")
    hb = _hfk_buckets(hfk)
    js = sorted({j for j, r in hb.items() if r} | {d // 2 for d, r in kb.items() if r})
    cond1 = [(j, hb.get(j, 0), kb.get(2 * j, 0), hb.get(j, 0) == kb.get(2 * j, 0)) for j in js]
    cond2 = (s, 2 * tau, s == 2 * tau)
    return FKReport(cond1, cond2, dict(provenance or {}))


def delta_thin(table, theory: str, signature: Optional[int] = None) -> ThinnessReport:
    """Thinness of an HFK table (δ = A - M) or a reduced Khovanov table (δ = q - 2u).

    With a signature, checks the alternating predictions δ = σ/2 (HFK) and
    δ = σ (Kh). Kh-thin also requires integral tables to be torsion free.
    """
    if theory == "HFK":
        buckets = _hfk_buckets(table)
        expected = None if signature is None else (signature // 2 if signature % 2 == 0 else None)
        torsion_free = None
    elif theory == "Kh":
        buckets = table.delta_ranks(1, -2)
        expected = signature
        torsion_free = None
        if table.coefficients == "Z":
            torsion_free = not any(table.torsion().values())
    else:
        raise ValueError(f"unknown theory {theory!r}")
    nonzero = sorted(d for d, r in buckets.items() if r)
    thin = len(nonzero) == 1 and torsion_free is not False
    delta = nonzero[0] if len(nonzero) == 1 else None
    match = None
    if signature is not None:
        match = thin and delta == expected
    return ThinnessReport(theory, thin, delta, {d: buckets[d] for d in nonzero},
                          signature, match, torsion_free)
