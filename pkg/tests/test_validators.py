# tests/test_validators.py
import pytest

from config.constants import DEFAULT_FUZZ_NODE_BUDGET
from config.settings import RunConfig, create_app_config, get_config
from utils.validators import (
    validate_depth,
    validate_precision,
    validate_prime,
    validate_seed,
    validate_threads,
    validate_trials,
)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 101])
def test_odd_primes_are_accepted(p):
    assert validate_prime(p)


@pytest.mark.parametrize("p", [2, 4, 9, 1, 0, -3])
def test_bad_primes_are_rejected(p):
    with pytest.raises(ValueError):
        validate_prime(p)


def test_non_integer_arguments():
    with pytest.raises(ValueError, match="integer"):
        validate_depth(6.0)
    with pytest.raises(ValueError, match="integer"):
        validate_trials(True)


def test_lower_bounds():
    assert validate_depth(4)
    with pytest.raises(ValueError):
        validate_depth(3)
    assert validate_precision(8)
    with pytest.raises(ValueError):
        validate_precision(7)
    with pytest.raises(ValueError):
        validate_threads(0)
    with pytest.raises(ValueError):
        validate_seed(-1)


def test_run_config_validates_fields():
    cfg = RunConfig(command="fuzz", trials=5, threads=2)
    assert cfg.output == "text"
    with pytest.raises(ValueError):
        RunConfig(command="fuzz", output="json")
    with pytest.raises(ValueError):
        RunConfig(command="fuzz", depth=2)


def test_app_defaults():
    config = get_config()
    assert config.field.primes == (3, 5, 7)
    assert config.search.depth >= 4
    assert config.search.escalation_depth >= config.search.depth


def test_fuzz_node_budget_from_environment(monkeypatch):
    monkeypatch.delenv("FUZZ_NODE_BUDGET", raising=False)
    assert create_app_config().search.fuzz_node_budget == DEFAULT_FUZZ_NODE_BUDGET
    monkeypatch.setenv("FUZZ_NODE_BUDGET", "900")
    assert create_app_config().search.fuzz_node_budget == 900
