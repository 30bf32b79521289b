# core/polynomials.py
"""
Raices en F de polinomios de grado <= 3 (irreducibilidad de polinomios caracteristicos).
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from core.errors import IndeterminateValuation, PrecisionExhausted
from core.padic import INF, ExtElement, PrimeConfig, lift_residue_ext


def evaluate(coeffs: Sequence[ExtElement], x: ExtElement) -> ExtElement:
    """Horner; coeficientes de grado creciente."""
    acc = ExtElement.zero(x.cfg)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def derivative(coeffs: Sequence[ExtElement]) -> List[ExtElement]:
    return [c * k for k, c in enumerate(coeffs)][1:]


def residue_representatives(cfg: PrimeConfig) -> List[ExtElement]:
    p = cfg.p
    if cfg.ramified:
        return [lift_residue_ext(cfg, a, 0) for a in range(p)]
    return [lift_residue_ext(cfg, a, b) for a in range(p) for b in range(p)]


def _valuation_or_inf(x: ExtElement):
    """Valuacion de F; un cero aparente cuenta como infinito."""
    try:
        return x.valuation_F()
    except IndeterminateValuation:
        return INF


def _candidate_slopes(coeffs: Sequence[ExtElement]) -> List[int]:
    """Valuaciones enteras posibles de raices no nulas (poligono de Newton)."""
    vals = [(k, _valuation_or_inf(c)) for k, c in enumerate(coeffs)]
    finite = [(k, v) for k, v in vals if v != INF]
    slopes = set()
    for i, (ki, vi) in enumerate(finite):
        for kj, vj in finite[i + 1:]:
            s = Fraction(vi - vj, kj - ki)
            if s.denominator != 1:
                continue
            values = [v + k * s for k, v in finite]
            low = min(values)
            if values.count(low) >= 2:
                slopes.add(int(s))
    return sorted(slopes)


def find_root(coeffs: Sequence[ExtElement], max_levels: Optional[int] = None) -> Optional[ExtElement]:
    """
    Busca una raiz en F refinando digito a digito con parada de Hensel.

    Returns:
        Aproximacion de una raiz (Hensel garantiza una raiz exacta cerca) o None.

    Raises:
        PrecisionExhausted: si un candidato no se decide antes de max_levels digitos.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_exact_zero():
        coeffs.pop()
    if len(coeffs) <= 1:
        return None
    cfg = coeffs[0].cfg
    if coeffs[0].is_zero():
        return ExtElement.zero(cfg)
    limit = max_levels if max_levels is not None else cfg.precision // 2
    pi = ExtElement.uniformizer(cfg)
    digits = residue_representatives(cfg)

    for s in _candidate_slopes(coeffs):
        scaled = [c * pi ** (k * s) for k, c in enumerate(coeffs)]
        mu = min(_valuation_or_inf(c) for c in scaled)
        g = [c / pi ** mu for c in scaled]
        dg = derivative(g)
        stack = [(y0, 1) for y0 in digits[1:] if _valuation_or_inf(evaluate(g, y0)) >= 1]
        while stack:
            y, level = stack.pop(0)
            gy = evaluate(g, y)
            vg = _valuation_or_inf(gy)
            if vg == INF:
                return y * pi ** s
            vd = _valuation_or_inf(evaluate(dg, y))
            if vd != INF and vg > 2 * vd:
                return y * pi ** s
            if level >= limit:
                raise PrecisionExhausted(f"root refinement undecided after {limit} digits")
            step = pi ** level
            for d in digits:
                child = y + d * step
                if _valuation_or_inf(evaluate(g, child)) >= level + 1:
                    stack.append((child, level + 1))
    return None


def has_root(coeffs: Sequence[ExtElement]) -> bool:
    return find_root(coeffs) is not None


def is_square_in_F(x: ExtElement) -> bool:
    cfg = x.cfg
    return has_root([-x, ExtElement.zero(cfg), ExtElement.one(cfg)])


def char_poly(m) -> List[ExtElement]:
    """Polinomio caracteristico monico de una matriz 2x2 o 3x3 (grado creciente)."""
    n = m.shape[0]
    cfg = m[0, 0].cfg
    one = ExtElement.one(cfg)
    if n == 2:
        tr = m[0, 0] + m[1, 1]
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        return [det, -tr, one]
    if n == 3:
        from core.hermitian import det3
        tr = m[0, 0] + m[1, 1] + m[2, 2]
        c2 = (
            m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
            + m[0, 0] * m[2, 2] - m[0, 2] * m[2, 0]
            + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1]
        )
        return [-det3(m), c2, -tr, one]
    raise ValueError(f"characteristic polynomial only for 2x2 or 3x3, got {n}x{n}")


def is_irreducible(coeffs: Sequence[ExtElement]) -> bool:
    """Grado 2 o 3: irreducible sobre F sii no tiene raiz en F."""
    return not has_root(coeffs)
