# tests/test_system.py
import pytest

from core.padic import BaseElement, ExtElement
from geometry.system import (
    assemble_system,
    join_coordinates,
    split_coordinates,
    system_from_matrices,
)


def test_coordinates_round_trip(cfg5):
    v = [ExtElement(BaseElement.from_int(cfg5, k), BaseElement.from_int(cfg5, k + 1)) for k in range(3)]
    z = split_coordinates(v)
    assert len(z) == 6
    assert join_coordinates(z) == v
    with pytest.raises(ValueError):
        join_coordinates(z[:5])


def test_isotropic_line_of_v2_is_a_zero(cfg5, type_c_iso):
    system = assemble_system(type_c_iso)
    zero, one = ExtElement.zero(cfg5), ExtElement.one(cfg5)
    q1, q2 = system.evaluate(split_coordinates([zero, one, zero]))
    assert q1.is_zero() and q2.is_zero()


def test_forms_on_the_first_line(cfg5, type_c_iso):
    system = assemble_system(type_c_iso)
    zero, one = ExtElement.zero(cfg5), ExtElement.one(cfg5)
    q1, q2 = system.evaluate(split_coordinates([one, zero, zero]))
    assert q1 == 1
    # h(e, beta e) / d = sigma(d p^-2) / d
    assert q2 == BaseElement.power_of_p(cfg5, -2, -1)


def test_evaluate_checks_arity(cfg5, type_c_iso):
    system = assemble_system(type_c_iso)
    with pytest.raises(ValueError):
        system.evaluate([BaseElement.from_int(cfg5, 1)] * 4)


def test_rescaled_forms_are_primitive(type_c_iso):
    scaled = assemble_system(type_c_iso).rescaled((0, 0, 0))
    r1, r2 = scaled.residue_forms()
    assert r1.any() and r2.any()
    with pytest.raises(ValueError):
        assemble_system(type_c_iso).rescaled((0, 1))


def test_system_from_matrices(cfg5):
    eye = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    hyper = [[0] * 6 for _ in range(6)]
    hyper[0][1] = hyper[1][0] = 1
    system = system_from_matrices(cfg5, eye, hyper)
    z = [BaseElement.from_int(cfg5, k) for k in (1, 2, 0, 0, 0, 0)]
    q1, q2 = system.evaluate(z)
    assert q1 == 5
    assert q2 == 4
    assert not system.is_degenerate()
