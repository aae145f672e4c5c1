"""Acceptance criteria 1-9, one test each, exact equality throughout.

Literal comparisons against misprinted reference values are kept as strict
xfails next to the criterion they belong to; the criterion itself checks
the corrected value recorded in ``khfk.reference.CORRECTIONS``.
"""

import random
import resource
import time

import pytest

from khfk.algebra import (LaurentPolynomial, filtered_euler_characteristic, filtered_reduce, homology,
                          poincare_polynomial, table_euler_characteristic)
from khfk.corpus import CORPUS, load
from khfk.diagram import mirror
from khfk.fkcheck import property_fk
from khfk.hfk import hfk_table, one_one_complex, staircase_from_alexander
from khfk.invariants import alexander_fox, jones, torus_alexander
from khfk.khovanov import (delta_view, khovanov_chain_complex, khovanov_homology, lee_complex,
                           s_invariant)
from khfk.reference import (CORRECTIONS, HFK_POLYNOMIALS, KH_EXAMPLES, ONE_ONE_BLOCKS,
                            ONE_ONE_TABLE, S_VALUES, TORUS_KHR, poly)

from oracles import dense_homology, dense_pages
from test_algebra import random_complex

QU = ("q", "u")
GB = 1 << 30


def kh(D, reduced=False, coeff="Q", **kw):
    return khovanov_homology(D, reduced, coeff, jobs=1, **kw)


def P_qu(T):
    return poincare_polynomial(T, QU)


def torsion_poly(T):
    """Torsion degrees as a (q, u) polynomial counting Z/2 summands."""
    terms = {}
    for (u, q), orders in T.torsion().items():
        n = sum(1 for o in orders if o == 2)
        if n:
            terms[(q, u)] = n
    return LaurentPolynomial(terms, QU)


def timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t


def max_rss_bytes():
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024


# -- 1 ------------------------------------------------------------------------

def test_criterion_1_khovanov_examples():
    for (name, theory, coeff), text in KH_EXAMPLES.items():
        T, dt = timed(kh, load(name), theory == "Kh_r", coeff)
        assert P_qu(T) == poly(text, QU), (name, theory, coeff)
        assert dt < 1.0


# -- 2 ------------------------------------------------------------------------

def test_criterion_2_torus_45_reduced_khovanov():
    D = load("t4_5")
    start = time.perf_counter()
    Q = kh(D, True, "Q")
    Z = kh(D, True, "Z")
    F2 = kh(D, True, 2)
    free, tors = TORUS_KHR[(4, 5)]
    assert P_qu(Q) == poly(free, QU)
    assert Q.total_rank == 9
    assert torsion_poly(Z) == poly(tors, QU)
    assert all(o == (2,) for o in Z.torsion().values())
    # the torsion shows up mod 2 at the printed degree and one step below
    assert F2.total_rank == 9 + 2 * 2
    assert time.perf_counter() - start < 600
    assert max_rss_bytes() < 8 * GB


@pytest.mark.slow
def test_criterion_2_extended_torus_47():
    D = load("t4_7")
    Q = kh(D, True, "Q", max_crossings=21)
    Z = kh(D, True, "Z", max_crossings=21)
    free, _ = TORUS_KHR[(4, 7)]
    assert P_qu(Q) == poly(free, QU)
    assert Q.total_rank == 17
    assert torsion_poly(Z) == poly(CORRECTIONS["T(4,7) Kh_r torsion"].value, QU)
    printed_q = sorted(q for (q, _), _ in poly(TORUS_KHR[(4, 7)][1], QU))
    assert sorted(q for (_, q) in Z.torsion()) == printed_q


@pytest.mark.slow
@pytest.mark.xfail(strict=True, reason="printed T(4,7) torsion u-degrees are one lower")
def test_criterion_2_extended_torus_47_literal_torsion():
    Z = kh(load("t4_7"), True, "Z", max_crossings=21)
    assert torsion_poly(Z) == poly(TORUS_KHR[(4, 7)][1], QU)


# -- 3 ------------------------------------------------------------------------

def test_criterion_3_s_invariant():
    assert s_invariant(load("unknot")) == 0
    (s, dt) = timed(s_invariant, load("trefoil"))
    assert s == 2 and dt < 1.0
    assert s_invariant(mirror(load("trefoil"))) == -2
    assert s_invariant(load("trefoil_left")) == -2
    start = time.perf_counter()
    assert s_invariant(load("t4_5")) == 12
    assert time.perf_counter() - start < 600


# -- 4 ------------------------------------------------------------------------

STAIRCASE_RANKS = {(2, 3): 3, (3, 4): 5, (4, 5): 7, (4, 7): 11}


def test_criterion_4_staircases():
    for (p, q), text in HFK_POLYNOMIALS.items():
        H = staircase_from_alexander(torus_alexander(p, q))
        expected = CORRECTIONS.get(f"T({p},{q}) HFK")
        target = poly(expected.value if expected else text)
        assert H.poincare() == target, (p, q)
        assert H.total_rank == STAIRCASE_RANKS[(p, q)]


@pytest.mark.xfail(strict=True, reason="printed T(4,7) polynomial has -u^{-7} and t^{-5}u^{12}")
def test_criterion_4_literal_torus_47():
    H = staircase_from_alexander(torus_alexander(4, 7))
    assert H.poincare() == poly(HFK_POLYNOMIALS[(4, 7)])


# -- 5 ------------------------------------------------------------------------

def _row_params(row):
    fix = CORRECTIONS.get("K(" + ",".join(map(str, row.params)) + ")")
    return fix.params if fix and fix.params else row.params


def _row_delta(row):
    fix = CORRECTIONS.get("K(" + ",".join(map(str, row.params)) + ")")
    return fix.delta if fix and fix.delta else row.delta


def test_criterion_5_one_one_table():
    assert len(ONE_ONE_TABLE) == 14
    for row in ONE_ONE_TABLE:
        params = _row_params(row)
        H, dt = timed(hfk_table, params)
        assert H.total_rank == params[0] == row.params[0], row.params
        assert H.delta_polynomial() == poly(_row_delta(row), ("δ",)), row.params
        assert H.tau == row.tau, row.params
        assert dt < 1.0, (row.params, dt)


@pytest.mark.xfail(strict=True, reason="printed ranks 3 + 11 do not add up to p = 15")
def test_criterion_5_literal_K15452():
    row = next(r for r in ONE_ONE_TABLE if r.params == (15, 4, 5, 2))
    assert hfk_table(row.params).delta_polynomial() == row.delta_polynomial()


@pytest.mark.xfail(strict=True, reason="K(17,7,1,2) does not close up to a knot diagram")
def test_criterion_5_literal_K17712():
    row = next(r for r in ONE_ONE_TABLE if r.params == (17, 7, 1, 2))
    H = hfk_table(row.params)
    assert H.delta_polynomial() == row.delta_polynomial()


# -- 6 ------------------------------------------------------------------------

def test_criterion_6_one_one_full_polynomials():
    expected_tau = {(13, 4, 2, 1): -1, (15, 3, 6, 1): 0, (15, 5, 3, 1): 0}
    expected_s = {(13, 4, 2, 1): -2, (15, 3, 6, 1): 0, (15, 5, 3, 1): 0}
    for b in ONE_ONE_BLOCKS:
        H = hfk_table(b.params)
        fix = CORRECTIONS.get("K(" + ",".join(map(str, b.params)) + ") HFK")
        assert H.poincare() == poly(fix.value if fix else b.hfk), b.params
        assert H.total_rank == b.rank_hfk == b.params[0]
        assert H.tau == expected_tau[b.params] == b.tau
        # recorded annotations: s and Kh_r come from the literature, not recomputed
        assert b.s == expected_s[b.params]
        assert poly(b.khr, QU).evaluate(1, 1) == b.rank_khr


@pytest.mark.xfail(strict=True, reason="printed t^2u breaks A-symmetry; t^2u^2 restores it")
def test_criterion_6_literal_K15531():
    b = next(b for b in ONE_ONE_BLOCKS if b.params == (15, 5, 3, 1))
    assert hfk_table(b.params).poincare() == poly(b.hfk)


# -- 7 ------------------------------------------------------------------------

def test_criterion_7_property_fk():
    for name, params in (("unknot", (1, 0, 0, 0)), ("trefoil", (3, 1, 0, 2))):
        D = load(name)
        H = hfk_table(params)
        R = property_fk(H, kh(D, True), s_invariant(D), H.tau)
        assert R.verdict == "holds", name
    D = load("t4_5")
    H = staircase_from_alexander(torus_alexander(4, 5))
    khr = kh(D, True)
    R = property_fk(H, khr, s_invariant(D), H.tau)
    assert R.verdict == "fails condition 1 only"
    assert (H.total_rank, khr.total_rank) == (7, 9)
    # T(3,4) = 8_19: both engines, compared at doubled δ
    D = load("t3_4")
    H = hfk_table(CORPUS["t3_4"].one_one)
    hb = {d: r for d, r in H.delta_ranks().items() if r}
    kb = delta_view(kh(D, True), reduced=True)
    assert hb == {3: 4, 2: 1}
    assert kb == {6: 4, 4: 1}
    assert {2 * d: r for d, r in hb.items()} == kb
    assert property_fk(H, kh(D, True), s_invariant(D), H.tau).verdict == "holds"


# -- 8 ------------------------------------------------------------------------

def test_criterion_8_exotic_pipeline():
    D = load("pretzel_m3_5_7")
    start = time.perf_counter()
    assert D.n_crossings == 15
    assert alexander_fox(D) == 1
    s = s_invariant(D)
    assert s != 0
    assert s % 2 == 0
    # the recorded value is odd and therefore cannot be an s-invariant
    recorded = S_VALUES["pretzel(-3,5,7)"]
    assert recorded % 2 == 1 and recorded != s
    assert time.perf_counter() - start < 600


# -- 9 ------------------------------------------------------------------------

def _check_complex(C, modulus=None):
    assert not C.d_squared(modulus)
    for i, row in C.differential.items():
        for j in row:
            gi, gj = C.generators[i], C.generators[j]
            assert gj.u == gi.u + C.d_degree
            assert (gj.f >= gi.f) if C.upward else (gj.f <= gi.f)


def _check_pages(C):
    _, pages = filtered_reduce(C)
    chi = filtered_euler_characteristic(C)
    for a, b in zip(pages.pages, pages.pages[1:]):
        assert all(b.rank(*k) <= r for k, r in a.ranks().items())
        assert set(b.ranks()) <= set(a.ranks())
    for table in pages.pages[:2]:
        assert table_euler_characteristic(table) == chi
    return pages


def test_criterion_9_property_suites():
    small = [n for n in sorted(CORPUS) if load(n).n_crossings <= 16]
    for name in small:
        D = load(name)
        e = CORPUS[name]
        for reduced in (False, True):
            _check_complex(khovanov_chain_complex(D, reduced, "Z"))
        L = lee_complex(D)
        _check_complex(L)
        pages = _check_pages(L)
        assert len(pages.survivors) == 2 ** D.n_components
        # Jones / Kh Euler identities
        assert table_euler_characteristic(kh(D), "q") == jones(D)
        assert table_euler_characteristic(kh(D, True), "q") == jones(D, reduced=True)
        # rank doubling over Z/2, bigraded
        full, red = kh(D, False, 2).ranks(), kh(D, True, 2).ranks()
        shifted = {}
        for (u, q), r in red.items():
            for k in (q - 1, q + 1):
                shifted[(u, k)] = shifted.get((u, k), 0) + r
        assert full == shifted, name
        # mirror duality over fields
        for coeff in ("Q", 2):
            assert kh(mirror(D), False, coeff) == kh(D, False, coeff).reflect()
        # Alexander / HFK
        if D.is_knot() and (e.one_one or e.torus):
            H = (hfk_table(e.one_one, e.one_one_mirror) if e.one_one
                 else staircase_from_alexander(torus_alexander(*e.torus)))
            A = alexander_fox(D)
            assert H.euler() in (A, -A), name
    # Alexander / HFK for the one entry above the Khovanov guard
    big = load("t4_7")
    assert staircase_from_alexander(torus_alexander(4, 7)).euler() == alexander_fox(big)
    # A-symmetry of every HFK table produced here
    tables = [hfk_table(_row_params(r)) for r in ONE_ONE_TABLE]
    tables += [hfk_table(b.params) for b in ONE_ONE_BLOCKS]
    tables += [staircase_from_alexander(torus_alexander(*pq)) for pq in HFK_POLYNOMIALS]
    for H in tables:
        assert H.is_a_symmetric()
    for params in [(3, 1, 0, 2), (11, 3, 3, 2), (15, 5, 3, 1)]:
        X = one_one_complex(params).filtered_complex()
        _check_complex(X, 2)
    # brute-force oracle on 200 random filtered complexes with at most 8 generators
    rng = random.Random(20240)
    for _ in range(200):
        C = random_complex(rng, n_max=8)
        assert len(C) <= 8
        _check_complex(C)
        assert homology(C).ranks() == dense_homology(C)
        pages = _check_pages(C)
        oracle = dense_pages(C, len(pages.pages) + 1)
        for i, table in enumerate(pages.pages):
            assert table.ranks() == oracle[i]
