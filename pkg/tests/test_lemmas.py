# tests/test_lemmas.py
import random
from fractions import Fraction

import pytest

from classifier.lemmas import (
    ShallowCase,
    char_nontrivial,
    character_check,
    check_claim,
    claim_inequalities,
    conjugation_identity,
    random_conjugation_triple,
    random_isotropic_coords,
    shallow_case,
    shallowness,
    shallowness_threshold,
    shallowness_value,
    stable_shallowness,
    valuation_separation,
)
from core.errors import HypothesisViolated, UnsupportedConfiguration
from core.hermitian import identity, random_unitary
from core.padic import BaseElement, ExtElement, solve_norm_equation
from core.stratum import StratumType
from geometry.criteria import XBeta

C, D = StratumType.C, StratumType.D


# =========================
# Caracter
# =========================
def test_character_level_on_type_d(cfg5, type_d_empty):
    g = identity(cfg5, 3)
    check = character_check(g, type_d_empty, 3)
    assert check.level == 3
    assert check.nontrivial
    assert check.trace_identity is None
    assert not char_nontrivial(g, type_d_empty, 4)
    assert char_nontrivial(g, type_d_empty, 2)


def test_character_trace_identity_on_witt_basis(cfg5, type_a):
    rng = random.Random(2)
    g = random_unitary(rng, cfg5, steps=1, max_val=1)
    for side in ("upper", "lower"):
        check = character_check(g, type_a, 1, side)
        assert check.trace_identity is True
        assert check.nontrivial == (1 <= check.level)


def test_character_rejects_bad_side(cfg5, type_a):
    with pytest.raises(ValueError):
        character_check(identity(cfg5, 3), type_a, 1, "middle")


# =========================
# Separacion de valuaciones
# =========================
def test_separation_holds_on_empty_type_d(type_d_empty):
    rng = random.Random(5)
    for _ in range(5):
        coords = random_isotropic_coords(rng, type_d_empty)
        check = valuation_separation(type_d_empty, coords)
        assert check.holds, (check.lhs, check.rhs)


def test_separation_hypotheses(cfg5, type_d_empty, type_c_iso):
    zero, one = ExtElement.zero(cfg5), ExtElement.one(cfg5)
    eps = solve_norm_equation(BaseElement.from_int(cfg5, -1))
    with pytest.raises(HypothesisViolated):
        valuation_separation(type_c_iso, (one, zero, zero))
    with pytest.raises(HypothesisViolated):
        valuation_separation(type_d_empty, (one, zero, zero))
    with pytest.raises(HypothesisViolated):
        valuation_separation(type_d_empty, (zero, one, eps))
    coords = random_isotropic_coords(random.Random(1), type_d_empty)
    with pytest.raises(HypothesisViolated):
        valuation_separation(type_d_empty, coords, xbeta=XBeta.NONEMPTY)


# =========================
# Poca profundidad
# =========================
def test_type_c_unramified_op_stable_value():
    case = ShallowCase(C, False, "op", 2, 1)
    assert shallowness_value(case, "w", Fraction(20)) == 2
    assert stable_shallowness(case, "w") == 2
    assert shallowness_value(case, "id", Fraction(20)) == 0


def test_type_c_ramified_stable_value():
    case = ShallowCase(C, True, "op", 2, 1)
    assert shallowness_value(case, "w", Fraction(20)) == 1
    assert shallowness_value(case, "id", Fraction(1, 2)) == 1


def test_type_d_unramified_oo_at_zero():
    case = ShallowCase(D, False, "oo", 3, 1, 1, 0)
    assert shallowness_value(case, "id", Fraction(0)) == max(case.m2 + 1, case.m + 1)


def test_threshold_marks_the_stable_region():
    case = ShallowCase(C, False, "oo", 3, 1)
    t = shallowness_threshold(case, "id")
    stable = stable_shallowness(case, "id")
    assert shallowness_value(case, "id", t) == stable
    assert shallowness_value(case, "id", t - 1) == stable + 1


def test_shallow_case_from_strata(cfg5, type_c_iso, type_c_aniso, type_d_empty):
    assert shallow_case(type_c_iso) == ShallowCase(C, False, "oo", 1, 0)
    assert shallow_case(type_d_empty) == ShallowCase(D, False, "oo", 1, 1, 1, 0)
    assert shallowness(type_c_iso, "id", ExtElement.one(cfg5)) == 2
    with pytest.raises(UnsupportedConfiguration):
        shallow_case(type_c_aniso)


def test_shallow_case_rejects_other_types():
    with pytest.raises(UnsupportedConfiguration):
        ShallowCase(StratumType.B, False, "oo", 1, 0)
    with pytest.raises(ValueError):
        ShallowCase(C, False, "pp", 1, 0)


# =========================
# Desigualdades
# =========================
@pytest.mark.parametrize("shape", ["oo", "op"])
def test_type_c_claim_example(shape):
    check = check_claim(ShallowCase(C, False, shape, 3, 1), "id", Fraction(0))
    assert check.lhs == -7
    assert check.rhs == -4
    assert check.holds


def test_type_d_ramified_claim_example():
    check = check_claim(ShallowCase(D, True, "oo", 5, 0, 2, 0), "id", Fraction(1))
    assert check.lhs == -3
    assert check.rhs == -2
    assert check.holds


def test_claim_at_stable_value_violates_hypotheses():
    with pytest.raises(HypothesisViolated):
        check_claim(ShallowCase(C, False, "oo", 1, 0), "id", Fraction(5))


def test_claim_on_stratum_uses_actual_elements(cfg5, type_c_iso):
    check = claim_inequalities(type_c_iso, "id", ExtElement.one(cfg5))
    assert check.lhs == -2
    assert check.rhs == -2
    assert check.holds


def test_claim_rejects_non_integral_x(cfg5, type_c_iso):
    x = ExtElement.from_base(BaseElement.power_of_p(cfg5, -1))
    with pytest.raises(HypothesisViolated):
        claim_inequalities(type_c_iso, "id", x)


# =========================
# Identidad de conjugacion
# =========================
def test_conjugation_identity_on_random_triples(any_cfg):
    rng = random.Random(13)
    for _ in range(3):
        assert conjugation_identity(*random_conjugation_triple(rng, any_cfg, max_val=1))


def test_conjugation_identity_with_zero_x(cfg5):
    zero = ExtElement.zero(cfg5)
    a = ExtElement.delta(cfg5)
    assert conjugation_identity(zero, zero, a)
