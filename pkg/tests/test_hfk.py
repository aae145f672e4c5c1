import pytest
from hypothesis import assume, given, settings, strategies as st

from khfk.algebra import parse_polynomial
from khfk.corpus import CORPUS, load
from khfk.diagram import OneOneError, OneOneParams
from khfk.hfk import (StaircaseError, enumerate_bigons, genus_from_hfk, gradings,
                      hfk_table, one_one_complex, staircase_complex, staircase_exponents,
                      staircase_from_alexander, tau)
from khfk.invariants import alexander_fox, torus_alexander
from khfk.reference import ONE_ONE_BLOCKS, ONE_ONE_TABLE

TU = ("t", "u")


def P(text, v=TU):
    return parse_polynomial(text, v)


def test_trefoil_one_one():
    H = hfk_table((3, 1, 0, 2))
    assert H.poincare() == P("t + u^{-1} + t^{-1}u^{-2}")
    assert H.tau == 1
    assert H.total_rank == 3
    assert len(gradings((3, 1, 0, 2))) == 3
    assert tau((3, 1, 0, 1)) == -1


def test_unknot_one_one():
    H = hfk_table((1, 0, 0, 0))
    assert H.poincare() == P("1")
    assert H.tau == 0


def test_bigons_carry_basepoint_counts():
    bigons = enumerate_bigons((5, 1, 2, 1))
    assert bigons
    assert all(b.n_x + b.n_y > 0 for b in bigons)
    assert all(b.n_x >= 0 and b.n_y >= 0 for b in bigons)


def test_filtered_complex_squares_to_zero():
    C = one_one_complex((11, 3, 3, 2)).filtered_complex()
    assert not C.d_squared(2)


@pytest.mark.parametrize("p, q, params", [
    (2, 3, (3, 1, 0, 2)), (2, 5, (5, 1, 0, 2)), (3, 4, (5, 1, 2, 1)), (4, 5, (7, 1, 3, 1)),
    (2, 7, (7, 1, 0, 2)), (3, 5, (7, 1, 1, 4)),
])
def test_staircase_matches_one_one_engine(p, q, params):
    S = staircase_from_alexander(torus_alexander(p, q))
    H = hfk_table(params)
    assert S.table.ranks() == H.table.ranks()
    assert S.tau == H.tau == (p - 1) * (q - 1) // 2
    assert genus_from_hfk(S) == S.tau


def test_mirror_reflects_table():
    for params in [(5, 1, 2, 1), (11, 3, 3, 2), (7, 2, 0, 3)]:
        H, M = hfk_table(params), hfk_table(params, mirror=True)
        assert M.table == H.table.reflect()
        assert M.tau == -H.tau


@pytest.mark.parametrize("name", [n for n, e in sorted(CORPUS.items()) if e.one_one])
def test_euler_characteristic_is_alexander(name):
    e = CORPUS[name]
    H = hfk_table(e.one_one, e.one_one_mirror)
    A = alexander_fox(load(name))
    assert H.euler() in (A, -A)
    assert H.is_a_symmetric()


@pytest.mark.parametrize("row", ONE_ONE_TABLE, ids=lambda r: str(r.params))
def test_table_rows_structural(row):
    try:
        H = hfk_table(row.params)
    except OneOneError:
        pytest.skip("parameters do not give a knot")
    assert H.total_rank == row.params[0]
    assert H.is_a_symmetric()
    assert H.euler().is_symmetric()
    assert abs(H.euler().evaluate(1)) == 1


@pytest.mark.parametrize("block", ONE_ONE_BLOCKS, ids=lambda b: str(b.params))
def test_block_knots_structural(block):
    H = hfk_table(block.params)
    assert H.total_rank == block.params[0]
    assert H.is_a_symmetric()
    assert abs(H.tau) <= genus_from_hfk(H)


@given(st.integers(3, 13), st.integers(0, 6), st.integers(0, 12), st.integers(0, 12))
@settings(max_examples=120, deadline=None)
def test_random_parameters(p, q, r, s):
    assume(2 * q + r <= p and s < p)
    try:
        H = hfk_table((p, q, r, s))
    except OneOneError:
        return
    assert H.total_rank == p
    assert H.is_a_symmetric()
    E = H.euler()
    assert E.is_symmetric() and abs(E.evaluate(1)) == 1
    assert abs(H.tau) <= genus_from_hfk(H)


def test_staircase_shapes():
    assert staircase_exponents(torus_alexander(3, 4)) == [3, 2, 0, -2, -3]
    C = staircase_complex(torus_alexander(2, 3))
    assert len(C) == 3 and not C.d_squared()
    H = staircase_from_alexander(P("1", ("t",)))
    assert H.poincare() == P("1") and H.tau == 0


@pytest.mark.parametrize("text", ["2t - 3 + 2t^{-1}", "t^2 + t^{-1}", "t - 1 + t^{-1} + 3",
                                  "-t + 3 - t^{-1}"])
def test_staircase_rejects_non_lspace(text):
    with pytest.raises(StaircaseError):
        staircase_from_alexander(P(text, ("t",)))


def test_staircase_accepts_either_sign():
    a = staircase_from_alexander(P("t - 1 + t^{-1}", ("t",)))
    b = staircase_from_alexander(P("-t + 1 - t^{-1}", ("t",)))
    assert a.table == b.table


def test_params_type():
    P_ = OneOneParams(7, 2, 0, 3)
    H = hfk_table(P_)
    assert H.params == P_
    assert H.tau == 1
