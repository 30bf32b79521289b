# config/settings.py
"""
Configuracion centralizada: precision p-adica, parametros de busqueda y logging.
"""
from dataclasses import dataclass
from typing import Optional, Tuple
import os

from .constants import (
    DEFAULT_ESCALATION_DEPTH,
    DEFAULT_EVENTS_PATH,
    DEFAULT_FUZZ_NODE_BUDGET,
    DEFAULT_MAX_WEIGHT,
    DEFAULT_NODE_BUDGET,
    DEFAULT_PRECISION,
    DEFAULT_PRIMES,
    DEFAULT_SEARCH_DEPTH,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    DEFAULT_TRIALS,
    DEFAULT_WEIGHT_CHUNK,
)


@dataclass(frozen=True)
class FieldDefaults:
    precision: int
    primes: Tuple[int, ...]


@dataclass(frozen=True)
class SearchConfig:
    depth: int
    escalation_depth: int
    node_budget: int
    fuzz_node_budget: int
    weight_chunk: int
    max_weight: int


@dataclass(frozen=True)
class AppConfig:
    log_file: str
    field: FieldDefaults
    search: SearchConfig


@dataclass(frozen=True)
class RunConfig:
    """Argumentos de una invocacion del CLI ya validados."""
    command: str
    input_path: Optional[str] = None
    depth: int = DEFAULT_SEARCH_DEPTH
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    threads: int = DEFAULT_THREADS
    output: str = "text"
    precision: int = DEFAULT_PRECISION
    escalation_depth: int = DEFAULT_ESCALATION_DEPTH
    lattice: Optional[str] = None
    ramified: bool = False
    n_from: int = -12
    n_to: int = 12

    def __post_init__(self):
        from utils.validators import (
            validate_depth,
            validate_precision,
            validate_seed,
            validate_threads,
            validate_trials,
        )
        validate_depth(self.depth)
        validate_seed(self.seed)
        validate_trials(self.trials)
        validate_threads(self.threads)
        validate_precision(self.precision)
        if self.output not in ("text", "csv"):
            raise ValueError(f"Output must be 'text' or 'csv', got {self.output!r}")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")


def _create_field_defaults() -> FieldDefaults:
    return FieldDefaults(
        precision=_env_int("PRECISION", DEFAULT_PRECISION),
        primes=DEFAULT_PRIMES,
    )


def _create_search_config() -> SearchConfig:
    return SearchConfig(
        depth=_env_int("SEARCH_DEPTH", DEFAULT_SEARCH_DEPTH),
        escalation_depth=DEFAULT_ESCALATION_DEPTH,
        node_budget=_env_int("SEARCH_NODE_BUDGET", DEFAULT_NODE_BUDGET),
        fuzz_node_budget=_env_int("FUZZ_NODE_BUDGET", DEFAULT_FUZZ_NODE_BUDGET),
        weight_chunk=DEFAULT_WEIGHT_CHUNK,
        max_weight=DEFAULT_MAX_WEIGHT,
    )


def create_app_config() -> AppConfig:
    return AppConfig(
        log_file=os.getenv("LOG_FILE", DEFAULT_EVENTS_PATH),
        field=_create_field_defaults(),
        search=_create_search_config(),
    )


CONFIG = create_app_config()


def get_config() -> AppConfig:
    return CONFIG


def set_config(config: AppConfig) -> None:
    global CONFIG
    CONFIG = config

