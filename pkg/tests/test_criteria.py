# tests/test_criteria.py
import pytest

from core.errors import UnsupportedConfiguration
from core.padic import is_norm_class
from geometry.criteria import XBeta, criterion_status, norm_triple
from geometry.relative_norm import relative_norm_test


def _lemmas(result):
    return [step.lemma for step in result.trace]


def test_type_a_always_nonempty(type_a):
    result = criterion_status(type_a)
    assert result.status == XBeta.NONEMPTY
    assert _lemmas(result) == ["typeA-cubic-flag"]


def test_type_c_follows_isotropy(type_c_iso, type_c_aniso):
    assert criterion_status(type_c_iso).status == XBeta.NONEMPTY
    aniso = criterion_status(type_c_aniso)
    assert aniso.status == XBeta.EMPTY
    assert _lemmas(aniso) == ["typeC-anisotropic"]


def test_type_b_isotropic_q1_above_q2(type_b):
    result = criterion_status(type_b)
    assert result.status == XBeta.NONEMPTY
    lemmas = _lemmas(result)
    assert lemmas[0] == "typeB-iso-q1-gt-q2"
    assert "typeB-relative-norm" in lemmas


def test_type_b_relative_norm_agrees(type_b):
    rel = relative_norm_test(type_b, window=8)
    assert rel.member


def test_relative_norm_needs_type_b(type_c_iso):
    with pytest.raises(UnsupportedConfiguration):
        relative_norm_test(type_c_iso)


def test_type_d_parity_rule(type_d_empty, type_d_nonempty):
    empty = criterion_status(type_d_empty)
    assert empty.status == XBeta.EMPTY
    assert _lemmas(empty) == ["typeD-unram-isotropic-lines", "typeD-norm-triple"]
    assert criterion_status(type_d_nonempty).status == XBeta.NONEMPTY


def test_norm_triple_classes(type_d_empty, type_d_nonempty):
    c1, c2, c3 = norm_triple(type_d_empty)
    assert [is_norm_class(c) for c in (c1, c2, c3)] == [True, False, False]
    classes = {is_norm_class(c) for c in norm_triple(type_d_nonempty)}
    assert len(classes) == 1


def test_trace_steps_render(type_d_empty):
    text = criterion_status(type_d_empty).trace[0].to_text()
    assert text.startswith("[typeD-unram-isotropic-lines]")
    assert "-> Empty" in text
