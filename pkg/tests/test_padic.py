# tests/test_padic.py
import random
from fractions import Fraction

import pytest

from core.errors import IndeterminateValuation, NoSolution, ParseError
from core.padic import (
    BaseElement,
    ExtElement,
    PrimeConfig,
    is_norm_class,
    is_square,
    parse_base_literal,
    parse_ext_literal,
    random_ext,
    solve_norm_equation,
    square_root,
)


def test_prime_config_rejects_bad_primes():
    with pytest.raises(ValueError):
        PrimeConfig.make(2)
    with pytest.raises(ValueError):
        PrimeConfig.make(9)
    with pytest.raises(ValueError):
        PrimeConfig(p=5, ramified=False, nonsquare_unit=4)


def test_prime_config_picks_smallest_nonsquare():
    assert PrimeConfig.make(5).nonsquare_unit == 2
    assert PrimeConfig.make(7).nonsquare_unit == 3
    assert PrimeConfig.make(5, True).d2 == -5


def test_base_arithmetic(cfg5):
    a = BaseElement.from_int(cfg5, 50)
    assert a.valuation() == 2
    b = BaseElement.power_of_p(cfg5, -3, 2)
    assert (a * b).valuation() == -1
    assert (a / a) == 1
    assert (a - a).is_zero()


def test_delta_valuation(cfg5, cfg5_ram):
    assert ExtElement.delta(cfg5).valuation_F() == 0
    assert ExtElement.delta(cfg5_ram).valuation_F() == 1
    assert ExtElement.delta(cfg5_ram).valuation_rel() == Fraction(1, 2)


def test_norm_and_trace(cfg5):
    x = ExtElement(BaseElement.from_int(cfg5, 3), BaseElement.from_int(cfg5, 1))
    # N(3 + d) = 9 - 2
    assert x.norm() == 7
    assert x.trace() == 6
    assert (x * x.conj()) == ExtElement.from_base(x.norm())


def test_norm_class_unramified(cfg5):
    assert is_norm_class(BaseElement.from_int(cfg5, 3))
    assert not is_norm_class(BaseElement.from_int(cfg5, 15))
    assert is_norm_class(BaseElement.power_of_p(cfg5, -2, 3))


def test_norm_class_ramified(cfg5_ram):
    assert is_norm_class(BaseElement.from_int(cfg5_ram, 4))
    assert not is_norm_class(BaseElement.from_int(cfg5_ram, 2))
    # N(d) = -d^2 = p
    assert is_norm_class(BaseElement.from_int(cfg5_ram, 5))


def test_norm_class_of_zero_is_indeterminate(cfg5):
    with pytest.raises(IndeterminateValuation):
        is_norm_class(BaseElement.zero(cfg5))


def test_solve_norm_equation(any_cfg):
    rng = random.Random(7)
    for _ in range(5):
        t = random_ext(rng, any_cfg, rng.randint(-2, 2)).norm()
        eps = solve_norm_equation(t)
        assert eps.norm() == t


def test_solve_norm_equation_without_solution(cfg5):
    with pytest.raises(NoSolution):
        solve_norm_equation(BaseElement.from_int(cfg5, 5))


def test_square_root(cfg5):
    x = BaseElement.from_int(cfg5, 4 * 25)
    r = square_root(x)
    assert r * r == x
    assert is_square(x)
    with pytest.raises(NoSolution):
        square_root(BaseElement.from_int(cfg5, 2))


def test_literal_parsing(cfg5):
    assert parse_base_literal(cfg5, "3*p^-2") == BaseElement.power_of_p(cfg5, -2, 3)
    assert parse_base_literal(cfg5, "-p") == BaseElement.from_int(cfg5, -5)
    d = ExtElement.delta(cfg5)
    assert parse_ext_literal(cfg5, "d") == d
    assert parse_ext_literal(cfg5, "-d") == -d
    assert parse_ext_literal(cfg5, "(2*p^-1)*d") == d * BaseElement.power_of_p(cfg5, -1, 2)
    x = parse_ext_literal(cfg5, "(1) + (3*p^1)*d")
    assert x.a == 1 and x.b == 15


def test_literal_round_trip(cfg5):
    x = parse_ext_literal(cfg5, "(4*p^-1) + (2*p^3)*d")
    assert parse_ext_literal(cfg5, x.to_literal()) == x


def test_bad_literal_reports_position(cfg5):
    with pytest.raises(ParseError) as info:
        parse_ext_literal(cfg5, "q^2", line=3, column=9)
    assert (info.value.line, info.value.column) == (3, 9)
