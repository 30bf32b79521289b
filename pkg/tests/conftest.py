# tests/conftest.py
"""
Fixtures comunes: configuraciones de primos, estratos canonicos en texto y
un logger de eventos desactivado.
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from core.padic import PrimeConfig  # noqa: E402
from harness.input_file import parse_stratum_text  # noqa: E402
from infrastructure.logging import EventLogger, set_logger  # noqa: E402

# Tipo A: beta e1 = d/p e-1, beta e-1 = e0, beta e0 = -e1; beta^3 = -d/p
TYPE_A_TEXT = """\
[field]
p = 5
ramified = false

[stratum]
type = A
gram1 = [0, 0, 1; 0, 1, 0; 1, 0, 0]
beta1 = [0, -1, 0; 0, 0, 1; (1*p^-1)*d, 0, 0]
"""

# Tipo B no ramificado, V2 hiperbolico, q1 = 4 > q2 = 2
TYPE_B_TEXT = """\
[field]
p = 5
ramified = false

[stratum]
type = B
gram1 = [1]
beta1 = [(1*p^-1)*d]
gram2 = [0, 1; 1, 0]
beta2 = [0, (1*p^-1)*d; d, 0]
"""

# Tipo C no ramificado, V2 hiperbolico (isotropo)
TYPE_C_ISO_TEXT = """\
[field]
p = 5
ramified = false

[stratum]
type = C
shape = oo
gram1 = [1]
beta1 = [(1*p^-2)*d]
gram2 = [0, 1; 1, 0]
beta2 = [(2*p^-1)*d, 0; 0, (2*p^-1)*d]
"""

# Tipo C no ramificado, V2 = diag(1, p) anisotropo
TYPE_C_ANISO_TEXT = """\
[field]
p = 5
ramified = false

[stratum]
type = C
gram1 = [1*p^1]
beta1 = [(1*p^-2)*d]
gram2 = [1, 0; 0, 1*p^1]
beta2 = [(2*p^-1)*d, 0; 0, (2*p^-1)*d]
"""

# Tipo D no ramificado, nu(beta) = (-3, -2, -1): diferencia impar, X_beta vacio
TYPE_D_EMPTY_TEXT = """\
[field]
p = 5
ramified = false

[stratum]
type = D
gram1 = [1]
beta1 = [(1*p^-3)*d]
gram2 = [1]
beta2 = [(1*p^-2)*d]
gram3 = [1]
beta3 = [(1*p^-1)*d]
"""

# Tipo D no ramificado, nu(beta) = (-3, -1), beta_3 = 0: diferencia par, X_beta no vacio
TYPE_D_NONEMPTY_TEXT = """\
[field]
p = 5
ramified = false

[stratum]
type = D
gram1 = [1]
beta1 = [(1*p^-3)*d]
gram2 = [1]
beta2 = [(1*p^-1)*d]
gram3 = [1]
beta3 = [0]
"""


@pytest.fixture(autouse=True)
def silent_events(tmp_path):
    logger = EventLogger(str(tmp_path / "events.jsonl"), enabled=False)
    set_logger(logger)
    yield logger


@pytest.fixture(params=[(3, False), (3, True), (5, False), (5, True), (7, False), (7, True)],
                ids=lambda v: f"p{v[0]}-{'ram' if v[1] else 'unram'}")
def any_cfg(request):
    p, ramified = request.param
    return PrimeConfig.make(p, ramified)


@pytest.fixture
def cfg5():
    return PrimeConfig.make(5, False)


@pytest.fixture
def cfg5_ram():
    return PrimeConfig.make(5, True)


@pytest.fixture
def type_a():
    return parse_stratum_text(TYPE_A_TEXT)


@pytest.fixture
def type_b():
    return parse_stratum_text(TYPE_B_TEXT)


@pytest.fixture
def type_c_iso():
    return parse_stratum_text(TYPE_C_ISO_TEXT)


@pytest.fixture
def type_c_aniso():
    return parse_stratum_text(TYPE_C_ANISO_TEXT)


@pytest.fixture
def type_d_empty():
    return parse_stratum_text(TYPE_D_EMPTY_TEXT)


@pytest.fixture
def type_d_nonempty():
    return parse_stratum_text(TYPE_D_NONEMPTY_TEXT)


@pytest.fixture
def write_text(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
