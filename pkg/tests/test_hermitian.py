# tests/test_hermitian.py
import random

import pytest

from core.errors import ConstraintViolated
from core.hermitian import (
    adjoint,
    conjugation_identity,
    det,
    diag,
    h_eval,
    hyperbolic_gram,
    identity,
    is_hermitian,
    is_isotropic_space,
    is_skew,
    is_unitary,
    make_unipotent,
    mat_equal,
    matmul,
    matrix,
    random_unitary,
    unipotent_partner,
    weyl_matrix,
    witt_from_anisotropic_pair,
    witt_gram,
)
from core.padic import BaseElement, ExtElement, random_base, random_ext


def test_witt_gram_is_hermitian(any_cfg):
    g = witt_gram(any_cfg)
    assert is_hermitian(g)
    assert det(g) == -1


def test_unipotent_constraint(cfg5):
    c = ExtElement.from_int(cfg5, 1)
    with pytest.raises(ConstraintViolated):
        make_unipotent(c, ExtElement.zero(cfg5))
    d = unipotent_partner(c)
    u = make_unipotent(c, d)
    assert is_unitary(witt_gram(cfg5), u)
    assert is_unitary(witt_gram(cfg5), make_unipotent(c, d, lower=True))


def test_random_unitary_preserves_form(any_cfg):
    rng = random.Random(3)
    g = random_unitary(rng, any_cfg, steps=2, max_val=1)
    assert is_unitary(witt_gram(any_cfg), g)


def test_weyl_element(cfg5):
    w = weyl_matrix(cfg5, "w")
    assert is_unitary(witt_gram(cfg5), w)
    assert mat_equal(matmul(w, w), identity(cfg5, 3))
    with pytest.raises(ValueError):
        weyl_matrix(cfg5, "s")


def test_skew_iff_adjoint_is_negative(cfg5, type_a):
    beta = type_a.beta
    gram = type_a.gram
    assert is_skew(gram, beta)
    assert mat_equal(adjoint(gram, beta), -beta)
    assert not is_skew(gram, beta + identity(cfg5, 3))


def test_isotropy_by_dimension(cfg5):
    assert not is_isotropic_space(diag(cfg5, [1]))
    assert is_isotropic_space(hyperbolic_gram(cfg5))
    p = BaseElement.from_int(cfg5, 5)
    assert not is_isotropic_space(diag(cfg5, [1, p]))
    assert is_isotropic_space(witt_gram(cfg5))


def test_conjugation_identity_random(any_cfg):
    rng = random.Random(11)
    for _ in range(4):
        x = random_ext(rng, any_cfg, rng.randint(0, 2))
        y = unipotent_partner(x, random_base(rng, any_cfg, rng.randint(-1, 1)))
        a = ExtElement(BaseElement.zero(any_cfg), random_base(rng, any_cfg, rng.randint(-1, 1)))
        assert conjugation_identity(x, y, a)


def test_conjugation_identity_rejects_bad_a(cfg5):
    x = ExtElement.zero(cfg5)
    with pytest.raises(ConstraintViolated):
        conjugation_identity(x, x, ExtElement.one(cfg5))


def test_witt_pair_from_isotropic_plane(cfg5):
    l1 = BaseElement.from_int(cfg5, 1)
    l3 = BaseElement.from_int(cfg5, 3)
    pair = witt_from_anisotropic_pair(l1, l3)
    gram = diag(cfg5, [l1, l3])
    e1 = list(pair.e1)
    em1 = list(pair.em1)
    assert h_eval(gram, e1, e1).is_zero()
    assert h_eval(gram, em1, em1).is_zero()
    assert h_eval(gram, e1, em1) == 1


def test_matrix_literal_shapes(cfg5):
    m = matrix(cfg5, [[1, 0], [0, 1]])
    assert m.shape == (2, 2)
    assert mat_equal(m, identity(cfg5, 2))
