# config/constants.py
"""
Constantes y valores por defecto usados en todo el proyecto.
Centraliza numeros magicos y strings hardcodeados.
"""

# =========================
# Aritmetica p-adica
# =========================
DEFAULT_PRECISION = 24
MIN_PRECISION = 8
DEFAULT_PRIMES = (3, 5, 7)

# =========================
# Busqueda de puntos
# =========================
DEFAULT_SEARCH_DEPTH = 12
MIN_SEARCH_DEPTH = 4
DEFAULT_ESCALATION_DEPTH = 16
DEFAULT_NODE_BUDGET = 20000
DEFAULT_FUZZ_NODE_BUDGET = 4000
DEFAULT_WEIGHT_CHUNK = 16
DEFAULT_MAX_WEIGHT = 8

# =========================
# Fuzz / verificacion
# =========================
DEFAULT_SEED = 1
DEFAULT_TRIALS = 100
DEFAULT_THREADS = 1
DEFAULT_MAX_VALUATION = 6
DEFAULT_LEMMA_DRAWS = 200

# =========================
# Codigos de salida
# =========================
EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_VALIDATION = 2
EXIT_COUNTEREXAMPLE = 3

# =========================
# Logging
# =========================
DEFAULT_EVENTS_PATH = "strata_events.jsonl"
