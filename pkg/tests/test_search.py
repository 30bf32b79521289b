# tests/test_search.py
import random

import numpy as np
import pytest

from classifier.sampler import sample_stratum
from core.padic import PrimeConfig
from geometry.criteria import XBeta, criterion_status
from geometry.hensel import HenselCertificate, Rejected, Witness, certify_scaled, hensel_check
from geometry.search import brute_search, weight_vectors
from geometry.system import assemble_system


def test_weight_vectors_order():
    vecs = weight_vectors(1)
    assert vecs[0] == (0, 0, 0)
    assert all(min(w) == 0 for w in vecs)
    assert len(vecs) == 7
    assert [max(w) for w in vecs] == sorted(max(w) for w in vecs)


def test_depth_below_minimum_is_rejected(type_c_iso):
    with pytest.raises(ValueError):
        brute_search(assemble_system(type_c_iso), 2)


def test_finds_certified_point_on_smooth_system(type_d_nonempty):
    system = assemble_system(type_d_nonempty)
    result = brute_search(system, 6, node_budget=200)
    assert result.found
    assert result.status == "Witness"
    assert isinstance(result.certificate, HenselCertificate)
    assert result.certificate.residual_level > 2 * result.certificate.minor_valuation
    assert result.witness.residual_level == system.cfg.precision


def test_singular_exact_point_is_not_certified(type_c_iso):
    # en el tipo C isotropo X_beta vive en V2, donde el jacobiano tiene rango 1
    system = assemble_system(type_c_iso)
    result = brute_search(system, 6, node_budget=200)
    assert result.found
    assert result.certificate is None
    assert result.witness.residual_level >= 6
    q1, q2 = system.evaluate(list(result.witness.point))
    assert q1.is_zero() and q2.is_zero()


def test_search_is_deterministic(type_d_nonempty):
    system = assemble_system(type_d_nonempty)
    a = brute_search(system, 6, node_budget=200)
    b = brute_search(system, 6, node_budget=200, threads=2)
    assert a.witness.scaled == b.witness.scaled
    assert a.witness.pin == b.witness.pin
    assert a.certificate == b.certificate


def test_hensel_check_accepts_search_witness(type_d_nonempty):
    system = assemble_system(type_d_nonempty)
    result = brute_search(system, 6, node_budget=200)
    cert = hensel_check(system, result.witness)
    assert isinstance(cert, HenselCertificate)
    assert cert.residual_level > 2 * cert.minor_valuation


def test_hensel_check_rejects_singular_search_witness(type_c_iso):
    system = assemble_system(type_c_iso)
    result = brute_search(system, 6, node_budget=200)
    cert = hensel_check(system, result.witness)
    assert isinstance(cert, Rejected)
    assert cert.residual_level <= 2 * cert.minor_valuation


def test_exact_singular_point_is_rejected(type_c_iso):
    system = assemble_system(type_c_iso)
    scaled = system.rescaled((0, 0, 0))
    # e1 de V2 (coordenada x1): isotropo y con beta escalar, anula ambas formas
    z = [0, 0, 1, 0, 0, 0]
    assert scaled.residual(z) == scaled.precision
    cert, lifted = certify_scaled(scaled, z)
    assert isinstance(cert, Rejected)
    assert lifted is None
    assert cert.residual_level <= 2 * cert.minor_valuation
    w = Witness(point=scaled.to_original(z), residual_level=scaled.precision, weights=(0, 0, 0), scaled=tuple(z), pin=2)
    assert isinstance(hensel_check(system, w), Rejected)


def test_hensel_check_rejects_non_zero(type_c_iso):
    system = assemble_system(type_c_iso)
    # e1 de V1: Q1 = 1 no se anula modulo p
    w = Witness(point=(), residual_level=1, weights=(0, 0, 0), scaled=(1, 0, 0, 0, 0, 0), pin=0)
    assert isinstance(hensel_check(system, w), Rejected)
    with pytest.raises(ValueError):
        hensel_check(system, Witness(point=(), residual_level=0, weights=(0, 0, 0), scaled=(1, 0, 0, 0, 0, 0), pin=0))


def test_empty_stratum_has_no_certified_point(type_c_aniso):
    result = brute_search(assemble_system(type_c_aniso), 4, node_budget=300, max_weight=2)
    assert result.certificate is None


def test_primitive_mask_follows_original_coordinates(type_d_empty):
    scaled = assemble_system(type_d_empty).rescaled((1, 0, 0))
    rows = np.array([
        [1, 0, 0, 0, 0, 0],  # solo la coordenada escalada por p
        [1, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
    ], dtype=np.int64)
    assert scaled.primitive_mask(rows).tolist() == [False, True, True]


def test_unramified_empty_strata_give_primitive_uncertified_points():
    cfg = PrimeConfig.make(7, False, precision=16)
    rng = random.Random(1)
    checked = 0
    for _ in range(40):
        if checked == 3:
            break
        s = sample_stratum(rng, "D", cfg, max_valuation=4)
        if criterion_status(s).status != XBeta.EMPTY:
            continue
        checked += 1
        result = brute_search(assemble_system(s), 8, node_budget=500, max_weight=4)
        assert result.certificate is None
        if result.found:
            assert min(x.valuation() for x in result.witness.point if not x.is_zero()) == 0
    assert checked == 3


def test_result_text(type_d_nonempty):
    text = brute_search(assemble_system(type_d_nonempty), 6, node_budget=200).to_text()
    assert "status         : Witness" in text
    assert "certificate    : " in text
