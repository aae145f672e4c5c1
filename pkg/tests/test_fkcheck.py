import pytest

from khfk.algebra import HomologyTable
from khfk.corpus import load
from khfk.fkcheck import delta_thin, property_fk
from khfk.hfk import hfk_table, staircase_from_alexander
from khfk.invariants import signature, torus_alexander
from khfk.khovanov import khovanov_homology, s_invariant


def khr(name, coeff="Q"):
    return khovanov_homology(load(name), True, coeff, jobs=1)


def test_trefoil_holds():
    R = property_fk(hfk_table((3, 1, 0, 2)), khr("trefoil"), s_invariant(load("trefoil")), 1)
    assert R.verdict == "holds"
    assert R.condition1 == [(1, 3, 3, True)]
    assert R.to_dict()["condition2"] == {"s": 2, "two_tau": 2, "ok": True}


def test_t45_fails_condition_one_only():
    H = staircase_from_alexander(torus_alexander(4, 5))
    R = property_fk(H, khr("t4_5"), 12, H.tau)
    assert R.failed == [1]
    assert R.verdict == "fails condition 1 only"
    assert sum(a for _, a, _, _ in R.condition1) == 7
    assert sum(b for _, _, b, _ in R.condition1) == 9


def test_condition_two_failure():
    H = hfk_table((3, 1, 0, 2))
    R = property_fk(H, khr("trefoil"), 0, H.tau, {"s": "made up"})
    assert R.verdict == "fails condition 2 only"
    assert R.provenance == {"s": "made up"}
    both = property_fk(H, HomologyTable.from_ranks({(0, 0): 1}), 0, 1)
    assert both.verdict == "fails conditions 1 and 2"


def test_rejects_unreduced_table():
    unreduced = khovanov_homology(load("trefoil"), False, "Q", jobs=1)
    with pytest.raises(ValueError, match="reduced"):
        property_fk(hfk_table((3, 1, 0, 2)), unreduced, 2, 1)


@pytest.mark.parametrize("name, params", [
    ("trefoil", (3, 1, 0, 2)), ("trefoil_left", (3, 1, 0, 1)), ("figure_eight", (5, 2, 0, 1)),
    ("knot_5_2", (7, 2, 0, 3)), ("t2_5", (5, 1, 0, 2)),
])
def test_alternating_knots_are_thin_at_signature(name, params):
    sigma = signature(load(name))
    H = delta_thin(hfk_table(params), "HFK", sigma)
    K = delta_thin(khr(name, "Z"), "Kh", sigma)
    assert H.thin and H.matches_signature
    assert K.thin and K.matches_signature and K.torsion_free
    assert H.delta * 2 == K.delta


def test_t34_is_not_thin():
    assert not delta_thin(hfk_table((5, 1, 2, 1)), "HFK").thin
    K = delta_thin(khr("t3_4"), "Kh", 6)
    assert not K.thin and K.matches_signature is False
    assert K.buckets == {4: 1, 6: 4}


def test_torsion_breaks_kh_thinness():
    T = HomologyTable.from_ranks({(0, 0): 1}, "Z")
    assert delta_thin(T, "Kh").thin
    from khfk.algebra import HomologyEntry
    T2 = HomologyTable({(0, 0): HomologyEntry(1), (1, 2): HomologyEntry(0, (2,))}, "Z")
    R = delta_thin(T2, "Kh")
    assert R.torsion_free is False and not R.thin


def test_unknown_theory():
    with pytest.raises(ValueError):
        delta_thin(HomologyTable(), "Kh2")
