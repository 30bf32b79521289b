# utils/__init__.py
"""
Modulo de utilidades - Validadores de argumentos.
"""

from .validators import (
    validate_depth,
    validate_precision,
    validate_prime,
    validate_seed,
    validate_threads,
    validate_trials,
)

__all__ = [
    "validate_depth",
    "validate_precision",
    "validate_prime",
    "validate_seed",
    "validate_threads",
    "validate_trials",
]
