# config/__init__.py
from .settings import (
    AppConfig,
    FieldDefaults,
    SearchConfig,
    RunConfig,
    get_config,
    set_config,
    create_app_config,
    CONFIG,
)

from .constants import (
    DEFAULT_PRECISION,
    MIN_PRECISION,
    DEFAULT_PRIMES,
    DEFAULT_SEARCH_DEPTH,
    MIN_SEARCH_DEPTH,
    DEFAULT_ESCALATION_DEPTH,
    DEFAULT_NODE_BUDGET,
    DEFAULT_WEIGHT_CHUNK,
    DEFAULT_MAX_WEIGHT,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DEFAULT_THREADS,
    DEFAULT_MAX_VALUATION,
    DEFAULT_LEMMA_DRAWS,
    EXIT_OK,
    EXIT_INTERNAL_ERROR,
    EXIT_VALIDATION,
    EXIT_COUNTEREXAMPLE,
    DEFAULT_EVENTS_PATH,
)

__all__ = [
    "AppConfig", "FieldDefaults", "SearchConfig", "RunConfig",
    "get_config", "set_config", "create_app_config", "CONFIG",
    "DEFAULT_PRECISION", "MIN_PRECISION", "DEFAULT_PRIMES",
    "DEFAULT_SEARCH_DEPTH", "MIN_SEARCH_DEPTH", "DEFAULT_ESCALATION_DEPTH",
    "DEFAULT_NODE_BUDGET", "DEFAULT_WEIGHT_CHUNK", "DEFAULT_MAX_WEIGHT",
    "DEFAULT_SEED", "DEFAULT_TRIALS", "DEFAULT_THREADS",
    "DEFAULT_MAX_VALUATION", "DEFAULT_LEMMA_DRAWS",
    "EXIT_OK", "EXIT_INTERNAL_ERROR", "EXIT_VALIDATION", "EXIT_COUNTEREXAMPLE",
    "DEFAULT_EVENTS_PATH",
]
