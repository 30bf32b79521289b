# geometry/hensel.py
"""
Certificados de Hensel para puntos aproximados de Q1 = Q2 = 0.

Si Q(z) = 0 mod p^m y el jacobiano 2x6 tiene un menor 2x2 de valuacion t con
m > 2t, la iteracion de Newton converge a un cero exacto en F0^6.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

from core.padic import BaseElement
from geometry.system import QuadricPairSystem, ScaledSystem, _vp

MINOR_COLUMNS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(6), 2))
SINGULAR_AT_PRECISION = "exact to working precision but m > 2t fails"


# =========================
# Tipos
# =========================
@dataclass(frozen=True)
class Witness:
    """Punto proyectivo con una coordenada unidad y su nivel residual."""
    point: Tuple[BaseElement, ...]
    residual_level: int
    weights: Tuple[int, ...]
    scaled: Tuple[int, ...]
    pin: int

    def to_text(self) -> str:
        coords = ", ".join(x.to_literal() for x in self.point)
        return (
            f"point          : ({coords})\n"
            f"residual level : {self.residual_level}\n"
            f"weights        : {self.weights}"
        )


@dataclass(frozen=True)
class HenselCertificate:
    kind: str
    minor_rows: Tuple[int, int]
    minor_cols: Tuple[int, int]
    minor_valuation: int
    residual_level: int

    def to_text(self) -> str:
        return (
            f"certificate    : {self.kind}\n"
            f"minor          : rows {self.minor_rows} cols {self.minor_cols}\n"
            f"minor valuation: {self.minor_valuation}\n"
            f"residual level : {self.residual_level}"
        )


@dataclass(frozen=True)
class Rejected:
    residual_level: int
    minor_valuation: int
    reason: str

    def to_text(self) -> str:
        return f"rejected       : m={self.residual_level} t={self.minor_valuation} ({self.reason})"


# =========================
# Jacobiano
# =========================
def best_minor(scaled: ScaledSystem, z: Sequence[int]) -> Tuple[Tuple[int, int], int]:
    """Menor 2x2 del jacobiano de menor valuacion: (columnas, t)."""
    g1, g2 = scaled.gradients(z)
    p, cap = scaled.p, scaled.precision
    best_cols, best_t = MINOR_COLUMNS[0], cap
    for a, b in MINOR_COLUMNS:
        t = _vp((g1[a] * g2[b] - g1[b] * g2[a]) % scaled.modulus, p, cap)
        if t < best_t:
            best_cols, best_t = (a, b), t
            if t == 0:
                break
    return best_cols, best_t


def newton_lift(scaled: ScaledSystem, z: Sequence[int], cols: Tuple[int, int], t: int) -> Optional[List[int]]:
    """
    Newton en las dos columnas del menor hasta anular Q modulo p^N.

    Returns:
        El punto levantado, o None si no converge.
    """
    p, n_prec = scaled.p, scaled.precision
    work = p ** (n_prec + 2 * t + 2)
    z = [x % work for x in z]
    a, b = cols
    for _ in range(2 * n_prec + 4):
        f1, f2 = scaled.values(z, work)
        if f1 % scaled.modulus == 0 and f2 % scaled.modulus == 0:
            return [x % scaled.modulus for x in z]
        g1, g2 = scaled.gradients(z, work)
        det = (g1[a] * g2[b] - g1[b] * g2[a]) % work
        tv = _vp(det, p, n_prec)
        if tv >= n_prec:
            return None
        num0 = g2[b] * f1 - g1[b] * f2
        num1 = -g2[a] * f1 + g1[a] * f2
        if num0 % p ** tv or num1 % p ** tv:
            return None
        unit_inv = pow(det // p ** tv, -1, work)
        z[a] = (z[a] - (num0 // p ** tv) * unit_inv) % work
        z[b] = (z[b] - (num1 // p ** tv) * unit_inv) % work
    return None


def certify_scaled(
    scaled: ScaledSystem, z: Sequence[int]
) -> Tuple[Union[HenselCertificate, Rejected], Optional[List[int]]]:
    """Certificado sobre el sistema escalado y el punto levantado si procede."""
    m = scaled.residual(z)
    cols, t = best_minor(scaled, z)
    if m > 2 * t:
        lifted = newton_lift(scaled, z, cols, t)
        if lifted is not None and scaled.residual(lifted) >= scaled.precision:
            return HenselCertificate("hensel", (0, 1), cols, t, m), lifted
        return Rejected(m, t, "newton iteration did not converge"), None
    if m >= scaled.precision:
        # cero a toda la precision pero singular: no hay certificado
        return Rejected(m, t, SINGULAR_AT_PRECISION), None
    return Rejected(m, t, "m > 2t fails"), None


def hensel_check(system: QuadricPairSystem, w: Witness) -> Union[HenselCertificate, Rejected]:
    """
    Acepta el testigo solo si m > 2t. Un punto que anula el sistema a toda la
    precision con jacobiano degenerado se rechaza igualmente.

    Raises:
        ValueError: si el nivel residual del testigo es menor que 1.
    """
    if w.residual_level < 1:
        raise ValueError(f"witness residual level must be >= 1, got {w.residual_level}")
    scaled = system.rescaled(w.weights)
    cert, _ = certify_scaled(scaled, w.scaled)
    return cert
