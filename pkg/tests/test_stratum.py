# tests/test_stratum.py
from dataclasses import replace

import pytest
from conftest import TYPE_B_TEXT

from classifier.sampler import MUTATION_CLAUSES, mutate
from core.errors import ValidationError
from core.stratum import StratumType, q_invariants, validate, validate_or_raise
from harness.input_file import parse_stratum_text


def _clauses(s):
    return [v.clause for v in validate(s)]


@pytest.mark.parametrize("name", [
    "type_a", "type_b", "type_c_iso", "type_c_aniso", "type_d_empty", "type_d_nonempty",
])
def test_canonical_strata_are_valid(request, name):
    s = request.getfixturevalue(name)
    assert validate(s) == []
    assert validate_or_raise(s) is s


def test_q_invariants(type_a, type_b, type_c_iso, type_c_aniso, type_d_empty, type_d_nonempty):
    assert q_invariants(type_a).n == 2
    assert q_invariants(type_a).period == 6
    assert q_invariants(type_b).q == (4, 2)
    assert q_invariants(type_b).period == 4
    assert q_invariants(type_c_iso).q == (4, 2)
    assert q_invariants(type_c_aniso).q == (4, 2)
    assert q_invariants(type_d_empty).q == (6, 4, 2)
    assert q_invariants(type_d_nonempty).q == (6, 2, None)
    assert q_invariants(type_d_nonempty).n == 6


def test_isotropy_of_v2(type_b, type_c_iso, type_c_aniso):
    assert type_b.v2_isotropic()
    assert type_c_iso.v2_isotropic()
    assert not type_c_aniso.v2_isotropic()


def test_basis_kind(type_c_iso, type_d_empty):
    assert type_c_iso.basis_kind != "orthogonal"
    assert type_d_empty.basis_kind == "orthogonal"


@pytest.mark.parametrize("name", ["type_a", "type_b", "type_c_iso", "type_d_empty"])
def test_mutations_break_the_named_clause(request, name):
    s = request.getfixturevalue(name)
    for clause in MUTATION_CLAUSES[s.kind]:
        broken = mutate(s, clause)
        assert clause in _clauses(broken), clause


def test_mutate_rejects_unknown_clause(type_c_iso):
    with pytest.raises(ValueError):
        mutate(type_c_iso, "pairwise_distinct")


def test_declared_depth_mismatch(type_d_empty):
    broken = mutate(type_d_empty, "depth")
    assert broken.declared_n == 7
    with pytest.raises(ValidationError) as info:
        validate_or_raise(broken)
    assert info.value.violations[0].clause == "depth"


def test_block_shape_swap(type_a):
    broken = mutate(type_a, "block_shape")
    assert broken.kind == StratumType.B
    assert _clauses(broken) == ["block_shape"]


def _type_b_with(beta2):
    return parse_stratum_text(TYPE_B_TEXT.replace("beta2 = [0, (1*p^-1)*d; d, 0]", f"beta2 = {beta2}"))


def test_type_b_needs_ramified_field_over_unramified_base():
    # F[beta_2] = F(d): no ramificado sobre F
    s = _type_b_with("[0, d; d, 0]")
    assert _clauses(s) == ["ramification"]
    assert "must be ramified" in validate(s)[0].detail


def test_type_b_beta_normalizes_its_lattice_sequence():
    s = _type_b_with("[0, (1*p^-2)*d; (1*p^1)*d, 0]")
    assert _clauses(s) == ["lattice_normalized"]


def test_depth_zero_strata_do_not_validate(type_b):
    s = replace(type_b, kind=StratumType.DEPTH_ZERO)
    assert _clauses(s) == ["block_shape"]
