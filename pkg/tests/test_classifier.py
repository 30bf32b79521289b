# tests/test_classifier.py
import pytest

from classifier.depth_zero import DepthZeroInput, classify_depth_zero, depth_zero_rule
from classifier.genericity import Verdict, classify_genericity, theorem_table
from classifier.sampler import mutate
from core.errors import UnsupportedConfiguration
from core.stratum import StratumType
from geometry.criteria import XBeta


# =========================
# Tabla del teorema
# =========================
def test_type_a_is_always_generic():
    assert theorem_table("A", None, None, None, XBeta.NONEMPTY) == Verdict.GENERIC


@pytest.mark.parametrize("iso,q1,q2,expected", [
    (True, 4, 2, Verdict.GENERIC),
    (True, 4, 6, Verdict.NONGENERIC),
    (False, 2, 1, Verdict.NONGENERIC),
    (False, 2, 5, Verdict.GENERIC),
])
def test_type_b_table(iso, q1, q2, expected):
    assert theorem_table(StratumType.B, iso, q1, q2, XBeta.EMPTY) == expected


def test_type_b_needs_distinct_q():
    with pytest.raises(UnsupportedConfiguration):
        theorem_table("B", True, 4, 4, XBeta.EMPTY)


@pytest.mark.parametrize("xbeta", [XBeta.EMPTY, XBeta.NONEMPTY])
def test_type_c_is_never_generic(xbeta):
    assert theorem_table("C", True, 4, 2, xbeta) == Verdict.NONGENERIC


def test_type_d_follows_xbeta():
    assert theorem_table("D", None, None, None, XBeta.NONEMPTY) == Verdict.GENERIC
    assert theorem_table("D", None, None, None, "Empty") == Verdict.NONGENERIC


# =========================
# Clasificacion de estratos
# =========================
def test_classify_type_a(type_a):
    report = classify_genericity(type_a)
    assert report.verdict == Verdict.GENERIC
    assert report.case_path[-1].lemma == "typeA-generic"


def test_classify_type_b(type_b):
    report = classify_genericity(type_b)
    assert report.verdict == Verdict.GENERIC
    assert report.xbeta == XBeta.NONEMPTY


def test_classify_type_c_both_ways(type_c_iso, type_c_aniso):
    iso = classify_genericity(type_c_iso)
    aniso = classify_genericity(type_c_aniso)
    assert iso.xbeta == XBeta.NONEMPTY
    assert aniso.xbeta == XBeta.EMPTY
    assert iso.verdict == aniso.verdict == Verdict.NONGENERIC


def test_classify_type_d(type_d_empty, type_d_nonempty):
    assert classify_genericity(type_d_empty).verdict == Verdict.NONGENERIC
    assert classify_genericity(type_d_nonempty).verdict == Verdict.GENERIC


def test_verdict_matches_table(type_b, type_c_iso, type_d_empty):
    for s, iso, q in ((type_b, True, (4, 2)), (type_c_iso, True, (4, 2)), (type_d_empty, None, (None, None))):
        report = classify_genericity(s)
        assert theorem_table(s.kind, iso, q[0], q[1], report.xbeta) == report.verdict


def test_classify_with_witness(type_d_nonempty):
    report = classify_genericity(type_d_nonempty, search_depth=6, node_budget=200)
    assert report.witness is not None
    assert report.certificate is not None
    assert report.case_path[-1].lemma == "xbeta-search"
    assert "witness:" in report.to_text()


def test_classify_rejects_invalid(type_c_iso):
    with pytest.raises(UnsupportedConfiguration):
        classify_genericity(mutate(type_c_iso, "skewness"))


# =========================
# Profundidad cero
# =========================
@pytest.mark.parametrize("ramified,lattice,generic,expected", [
    (False, "L1", True, Verdict.GENERIC),
    (False, "L2", True, Verdict.NONGENERIC),
    (True, "L1", True, Verdict.GENERIC),
    (True, "L2", True, Verdict.NONGENERIC),
    (False, "L1", False, Verdict.NONGENERIC),
    (True, "Λ1", False, Verdict.NONGENERIC),
])
def test_depth_zero_rule(ramified, lattice, generic, expected):
    assert depth_zero_rule(DepthZeroInput(ramified, lattice, generic)) == expected


def test_depth_zero_quotients():
    assert DepthZeroInput(True, "L2", True).quotient.startswith("SL(2)")
    with pytest.raises(ValueError):
        DepthZeroInput(False, "L3", True)


def test_depth_zero_report_is_tagged():
    report = classify_depth_zero(DepthZeroInput(True, "L1", True))
    assert report.kind == StratumType.DEPTH_ZERO
    assert report.verdict == Verdict.GENERIC
    assert report.xbeta == XBeta.NONEMPTY
    assert report.case_path[0].lemma == "depth-zero"
    assert "type           : depth-zero" in report.to_text()


def test_theorem_table_refuses_depth_zero():
    with pytest.raises(UnsupportedConfiguration):
        theorem_table(StratumType.DEPTH_ZERO, None, None, None, XBeta.NONEMPTY)
