import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from khfk.algebra import parse_polynomial
from khfk.corpus import CORPUS, load
from khfk.diagram import DiagramError, braid_closure, mirror, relabel
from khfk.invariants import (alexander_fox, checkerboard, determinant, jones, jones_at_i,
                             signature, symmetric_signature, torus_alexander)

from oracles import state_sum_jones, sylvester_signature

T = ("t",)


def P(text):
    return parse_polynomial(text, T)


# -- Jones ------------------------------------------------------------------------

def test_jones_unknot_and_trefoil():
    q = ("q",)
    assert jones(load("unknot")) == parse_polynomial("q + q^{-1}", q)
    assert jones(load("unknot_kink")) == parse_polynomial("q + q^{-1}", q)
    # V(q^2) of the right trefoil, unreduced form carries the factor q + 1/q
    assert jones(load("trefoil"), reduced=True) == parse_polynomial("q^2 + q^6 - q^8", q)
    assert jones(load("trefoil")) == parse_polynomial("q + q^3 + q^5 - q^9", q)


@pytest.mark.parametrize("name", [n for n, e in sorted(CORPUS.items())
                                  if load(n).n_crossings <= 10])
def test_jones_matches_state_sum(name):
    D = load(name)
    assert jones(D) == state_sum_jones(D)


@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=1, max_size=9))
@settings(max_examples=60, deadline=None)
def test_jones_random_braids(word):
    D = relabel(braid_closure(word, 4))
    assert jones(D) == state_sum_jones(D)


def test_jones_mirror():
    D = load("knot_5_2")
    assert jones(mirror(D)) == jones(D).invert_variable()


# -- Alexander -----------------------------------------------------------------------

@pytest.mark.parametrize("name, expected", [
    ("unknot", "1"),
    ("unknot_kink", "1"),
    ("trefoil", "t - 1 + t^{-1}"),
    ("trefoil_left", "t - 1 + t^{-1}"),
    ("figure_eight", "-t + 3 - t^{-1}"),
    ("knot_5_2", "2t - 3 + 2t^{-1}"),
    ("t2_5", "t^2 - t + 1 - t^{-1} + t^{-2}"),
    ("pretzel_m3_5_7", "1"),
])
def test_alexander_table(name, expected):
    A = alexander_fox(load(name))
    assert A in (P(expected), -P(expected))


@pytest.mark.parametrize("p, q", [(2, 3), (2, 5), (3, 4), (4, 5), (4, 7)])
def test_alexander_torus_formula(p, q):
    name = {(2, 3): "trefoil", (2, 5): "t2_5", (3, 4): "t3_4", (4, 5): "t4_5",
            (4, 7): "t4_7"}[(p, q)]
    A = alexander_fox(load(name))
    assert A in (torus_alexander(p, q), -torus_alexander(p, q))


def test_torus_alexander_rejects_links():
    with pytest.raises(ValueError):
        torus_alexander(2, 4)


def test_alexander_symmetric_and_normalized():
    for name in CORPUS:
        D = load(name)
        if D.is_knot():
            A = alexander_fox(D)
            assert A.is_symmetric()
            assert abs(A.evaluate(1)) == 1


# -- signature and determinant ----------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.data())
def test_symmetric_signature_vs_eigenvalues(n, data):
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = data.draw(st.integers(-4, 4))
    assert symmetric_signature([[Fraction(x) for x in r] for r in M]) == sylvester_signature(M)


@pytest.mark.parametrize("name, sigma", [
    ("unknot", 0), ("unknot_kink", 0), ("trefoil", 2), ("trefoil_kink", 2), ("trefoil_left", -2),
    ("figure_eight", 0), ("t2_5", 4), ("knot_5_2", 2), ("t3_4", 6), ("t4_5", 8),
    ("t4_7", 14), ("pretzel_m3_5_7", 0),
])
def test_signature_values(name, sigma):
    D = load(name)
    assert signature(D) == sigma
    assert signature(D, white=1) == sigma
    assert signature(mirror(D)) == -sigma


def test_checkerboard_is_proper():
    D = load("figure_eight")
    faces, colour = checkerboard(D)
    assert len(faces) == D.n_crossings + 2
    assert sorted(set(colour)) == [0, 1]


@pytest.mark.parametrize("name, det", [
    ("unknot", 1), ("trefoil", 3), ("figure_eight", 5), ("knot_5_2", 7), ("t2_5", 5),
    ("t3_4", 3), ("pretzel_m3_5_7", 1),
])
def test_determinant(name, det):
    D = load(name)
    assert determinant(D) == det
    re, im = jones_at_i(jones(D, reduced=True))
    assert im == 0 and abs(re) == det


def test_determinant_rejects_links():
    with pytest.raises(DiagramError):
        determinant(load("hopf"))


def test_signature_bounded_by_determinant_parity():
    # knots have even signature and odd determinant
    rng = random.Random(3)
    for _ in range(20):
        word = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(1, 8))]
        D = relabel(braid_closure(word, 3))
        if not D.is_knot():
            continue
        assert signature(D) % 2 == 0
        assert determinant(D) % 2 == 1
