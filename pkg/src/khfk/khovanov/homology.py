"""Khovanov homology, reduced Khovanov homology and the s-invariant."""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Optional, Sequence

from ..algebra import (BigradedComplex, GradedGenerator, HomologyEntry, HomologyTable,
                       filtered_reduce, homology, parse_coefficients)
from ..diagram.pd import DiagramError, PlanarDiagram
from .cube import ResourceLimit, khovanov_complex
from .scan import scan_complex

METHODS = ("scan", "cube")
INTEGRAL_PATHS = ("snf", "ucf")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("KHFK_JOBS", "1")))
    except ValueError:
        return 1


def default_marked(D: PlanarDiagram) -> Optional[int]:
    arcs = D.arcs
    return arcs[0] if arcs else None


def khovanov_chain_complex(D: PlanarDiagram, reduced: bool = False, coefficients="Q",
                           marked: Optional[int] = None, lee: bool = False,
                           method: str = "scan", max_crossings: int = 16,
                           max_objects: Optional[int] = None) -> BigradedComplex:
    """A complex in (u, q) chain homotopy equivalent to the Khovanov (or Lee) complex."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if D.n_crossings > max_crossings:
        raise ResourceLimit(f"{D.n_crossings} crossings exceeds --max-crossings {max_crossings}")
    if reduced:
        marked = default_marked(D) if marked is None else marked
        if marked is None:
            return _reduced_unlinks(D)
    elif marked is not None:
        raise DiagramError("a marked arc only makes sense for the reduced complex")
    if method == "cube":
        return khovanov_complex(D, reduced, marked, "lee" if lee else None,
                                max_crossings=max_crossings).complex
    return scan_complex(D, coefficients, lee=lee, marked=marked if reduced else None,
                        max_objects=max_objects)


def _reduced_unlinks(D: PlanarDiagram) -> BigradedComplex:
    # crossingless diagram: the marked loop is one of the free loops
    if D.free_loops < 1:
        raise DiagramError("empty diagram")
    gens = [(0, 0)]
    for _ in range(D.free_loops - 1):
        gens = [(u, q + s) for u, q in gens for s in (1, -1)]
    return BigradedComplex([GradedGenerator(i, u, q) for i, (u, q) in enumerate(gens)], {},
                           d_degree=1, upward=True)


def _column(args):
    C, coefficients = args
    return homology(C, coefficients).entries


def _split_columns(C: BigradedComplex):
    cols: Dict[int, list] = defaultdict(list)
    for i, g in enumerate(C.generators):
        cols[g.f].append(i)
    for q, idxs in sorted(cols.items()):
        local = {i: n for n, i in enumerate(idxs)}
        gens = [GradedGenerator(n, C.generators[i].u, q) for n, i in enumerate(idxs)]
        diff = {}
        for i in idxs:
            row = {local[j]: c for j, c in C.differential.get(i, {}).items() if j in local}
            if row:
                diff[local[i]] = row
        yield BigradedComplex(gens, diff, d_degree=C.d_degree, upward=C.upward, validate=False)


def khovanov_homology(D: PlanarDiagram, reduced: bool = False, coefficients="Q",
                      marked: Optional[int] = None, method: str = "scan",
                      jobs: Optional[int] = None, max_crossings: int = 16,
                      integral: str = "snf", primes: Sequence[int] = (2, 3, 5),
                      max_objects: Optional[int] = None) -> HomologyTable:
    """Kh (or Kh_r) of ``D`` keyed by (u, q).

    The undeformed differential preserves q, so q-columns are independent;
    ``jobs > 1`` evaluates them in a process pool. Over Z, ``integral``
    selects Smith normal form ("snf") or the comparison of Q with Z/p
    ranks through universal coefficients ("ucf"). The latter only sees
    p-torsion for p in ``primes`` and records each summand as Z/p.
    """
    kind, p = parse_coefficients(coefficients)
    if integral not in INTEGRAL_PATHS:
        raise ValueError(f"unknown integral path {integral!r}")
    jobs = default_jobs() if jobs is None else jobs
    if kind == "Z" and integral == "ucf":
        C = khovanov_chain_complex(D, reduced, "Z", marked, False, method, max_crossings,
                                   max_objects)
        return _ucf(C, primes, jobs)
    C = khovanov_chain_complex(D, reduced, coefficients, marked, False, method, max_crossings,
                               max_objects)
    label = {"Q": "Q", "Z": "Z", "Zp": f"Z/{p}"}[kind]
    return HomologyTable(_columns(C, coefficients, jobs), label)


def _columns(C: BigradedComplex, coefficients, jobs: int) -> Dict:
    cols = list(_split_columns(C))
    entries: Dict = {}
    if jobs > 1 and len(cols) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_column, [(c, coefficients) for c in cols]):
                entries.update(part)
    else:
        for c in cols:
            entries.update(_column((c, coefficients)))
    return entries


def _ucf(C: BigradedComplex, primes: Sequence[int], jobs: int) -> HomologyTable:
    # d raises u, so dim H^u(C; Z/p) = r_u + t_u + t_{u+1} with t_u the number
    # of p-primary summands in H^u(C; Z); solve for t from the top degree down
    free = {k: e.rank for k, e in _columns(C, "Q", jobs).items()}
    torsion: Dict = defaultdict(list)
    for p in primes:
        modp = {k: e.rank for k, e in _columns(C, p, jobs).items()}
        for q in sorted({k[1] for k in modp}):
            us = [u for u, f in modp if f == q] + [u for u, f in free if f == q]
            above = 0
            for u in range(max(us), min(us) - 1, -1):
                t = modp.get((u, q), 0) - free.get((u, q), 0) - above
                if t < 0:
                    raise AssertionError(f"universal coefficients violated at {(u, q)} mod {p}")
                torsion[(u, q)].extend([p] * t)
                above = t
    keys = set(free) | set(torsion)
    return HomologyTable({k: HomologyEntry(free.get(k, 0), tuple(sorted(torsion.get(k, ()))))
                          for k in keys}, "Z")


def lee_complex(D: PlanarDiagram, method: str = "scan", max_crossings: int = 16,
                max_objects: Optional[int] = None) -> BigradedComplex:
    """Unreduced Lee complex over Q, filtered by q."""
    return khovanov_chain_complex(D, False, "Q", None, True, method, max_crossings, max_objects)


def s_invariant(D: PlanarDiagram, method: str = "scan", max_crossings: int = 16,
                max_objects: Optional[int] = None) -> int:
    """Rasmussen's s: the average q-grading of the two Lee survivors."""
    if not D.is_knot():
        raise DiagramError("s is defined for knots only")
    C = lee_complex(D, method, max_crossings, max_objects)
    _, pages = filtered_reduce(C, "Q")
    surv = pages.survivors
    if len(surv) != 2:
        raise AssertionError(f"Lee spectral sequence left {len(surv)} survivors, expected 2")
    (u1, q1), (u2, q2) = sorted(surv)
    if u1 != 0 or u2 != 0 or abs(q1 - q2) != 2:
        raise AssertionError(f"unexpected Lee survivors {surv}")
    return (q1 + q2) // 2


def delta_view(T: HomologyTable, reduced: Optional[bool] = None) -> Dict[int, int]:
    """Ranks regrouped by δ = q - 2u.

    For a knot, unreduced δ-gradings are odd and reduced ones even; pass
    ``reduced`` to assert the expected parity.
    """
    out = T.delta_ranks(1, -2)
    if reduced is not None:
        want = 0 if reduced else 1
        bad = [d for d, r in out.items() if r and d % 2 != want]
        if bad:
            raise AssertionError(f"δ-grading parity violated at {bad}")
    return dict(sorted(out.items()))


def rank_table(T: HomologyTable) -> Dict:
    return {k: e.rank for k, e in T.entries.items() if e.rank}

