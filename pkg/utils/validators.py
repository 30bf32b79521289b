# utils/validators.py
"""
Validadores de argumentos del CLI y de los parametros de aritmetica.
"""
from sympy import isprime

from config.constants import MIN_PRECISION, MIN_SEARCH_DEPTH


def _require_int(value, name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {type(value).__name__}")


def validate_prime(p: int) -> bool:
    """
    Valida el primo residual (impar).

    Raises:
        ValueError: Si p no es un primo impar
    """
    _require_int(p, "Prime")
    if p == 2 or not isprime(p):
        raise ValueError(f"Prime must be an odd prime, got {p}")
    return True


def validate_precision(precision: int, min_precision: int = MIN_PRECISION) -> bool:
    _require_int(precision, "Precision")
    if precision < min_precision:
        raise ValueError(f"Precision {precision} must be >= {min_precision}")
    return True


def validate_depth(depth: int, min_depth: int = MIN_SEARCH_DEPTH) -> bool:
    """
    Valida la profundidad de busqueda (digitos p-adicos por coordenada).

    Raises:
        ValueError: Si la profundidad es menor que min_depth
    """
    _require_int(depth, "Depth")
    if depth < min_depth:
        raise ValueError(f"Depth {depth} must be >= {min_depth}")
    return True


def validate_trials(trials: int) -> bool:
    _require_int(trials, "Trials")
    if trials < 1:
        raise ValueError(f"Trials {trials} must be >= 1")
    return True


def validate_threads(threads: int) -> bool:
    _require_int(threads, "Threads")
    if threads < 1:
        raise ValueError(f"Threads {threads} must be >= 1")
    return True


def validate_seed(seed: int) -> bool:
    _require_int(seed, "Seed")
    if seed < 0:
        raise ValueError(f"Seed {seed} must be >= 0")
    return True
