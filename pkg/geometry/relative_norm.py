# geometry/relative_norm.py
"""
Criterio de tipo B via normas relativas E/D, con E = F[beta_2] y D el cuerpo
fijo de la involucion adjunta sigma_h sobre E.

D = F0 + F0*w con w = d*beta_2 y w^2 = c = d^2 * alpha, alpha = beta_2^2 en F0.
Un y = y0 + y1*w de D es norma de E sii y0^2 - c*y1^2 es norma de F/F0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from core.errors import InconclusiveEnumeration, UnsupportedConfiguration
from core.hermitian import apply, h_eval
from core.padic import BaseElement, ExtElement, is_norm_class
from core.polynomials import residue_representatives
from core.stratum import Stratum, StratumType

DEFAULT_WINDOW = 4


@dataclass(frozen=True)
class RelativeNormResult:
    member: bool
    target: Tuple[BaseElement, BaseElement]
    norm_to_F0: BaseElement
    witness: Optional[Tuple[ExtElement, ExtElement]]
    window: int


def _base(x: ExtElement, what: str) -> BaseElement:
    if not x.in_base():
        raise UnsupportedConfiguration(f"{what} = {x.to_literal()} is not in F0")
    return x.a


def _target(s: Stratum) -> Tuple[BaseElement, BaseElement, BaseElement, ExtElement]:
    """Elemento y de D cuya pertenencia a Nr_{E/D} decide X_beta, y los datos de D."""
    cfg = s.cfg
    delta = ExtElement.delta(cfg)
    b1 = s.blocks[0].scalar
    lam1 = ExtElement.from_base(s.lambda1)
    gram2, beta2 = s.blocks[1].gram, s.blocks[1].beta
    if not (beta2[0, 0] + beta2[1, 1]).is_zero():
        raise UnsupportedConfiguration("beta_2 must have trace zero")
    alpha = -(beta2[0, 0] * beta2[1, 1] - beta2[0, 1] * beta2[1, 0])
    w0 = [ExtElement.one(cfg), ExtElement.zero(cfg)]
    h0 = h_eval(gram2, w0, w0)
    h1 = h_eval(gram2, w0, apply(beta2, w0))
    # h(x w0, y w0) = sigma(l(sigma_h(x) y d')) con d' = A + B beta_2
    a = h0
    b = -(h1 / alpha)
    a2 = alpha * b - b1 * a
    b2 = a - b1 * b
    scale = -(lam1 / (alpha * (a * a - alpha * b * b)))
    y0 = _base(scale * alpha * b2, "y0")
    y1 = _base(-(scale * a2 / delta), "y1")
    c = _base(ExtElement.from_base(cfg.delta_square) * alpha, "d^2 * alpha")
    return y0, y1, c, alpha


def _d_norm(y0: BaseElement, y1: BaseElement, c: BaseElement) -> BaseElement:
    return y0 * y0 - c * (y1 * y1)


def _relative_norm(a: ExtElement, b: ExtElement, alpha: ExtElement) -> Tuple[BaseElement, BaseElement]:
    """(a + b beta_2) sigma_h(a + b beta_2) en coordenadas (1, w) de D."""
    z0 = a.norm() - alpha.a * b.norm()
    z1 = (b * a.conj() - a * b.conj()) / ExtElement.delta(a.cfg)
    return z0, _base(z1, "relative norm coordinate")


def _is_principal(z0: BaseElement, z1: BaseElement, c: BaseElement) -> bool:
    """z0 + z1 w esta en F0^x (1 + p_D): F0^x y las unidades principales son normas."""
    if z0.is_zero():
        return False
    if z1.is_zero():
        return True
    return c.valuation() + 2 * z1.valuation() > 2 * z0.valuation()


def _candidates(s: Stratum, window: int) -> List[Tuple[ExtElement, ExtElement]]:
    cfg = s.cfg
    one, zero = ExtElement.one(cfg), ExtElement.zero(cfg)
    pi = ExtElement.uniformizer(cfg)
    out = [(one, zero), (zero, one)]
    reps = residue_representatives(cfg)[1:]
    for k in range(-window, window + 1):
        step = pi ** k
        for r in reps:
            out.append((one, r * step))
            out.append((r * step, one))
    return out


def relative_norm_test(s: Stratum, window: int = DEFAULT_WINDOW) -> RelativeNormResult:
    """
    Decide -d1/d2 en Nr_{E/D}(E^x) y busca un x en E que lo muestre.

    Raises:
        UnsupportedConfiguration: si el estrato no es de tipo B.
        InconclusiveEnumeration: si la clase es norma pero ningun x de la ventana la realiza.
    """
    if s.kind != StratumType.B:
        raise UnsupportedConfiguration("relative norm test applies to type B strata")
    y0, y1, c, alpha = _target(s)
    n = _d_norm(y0, y1, c)
    member = is_norm_class(n)
    if not member:
        return RelativeNormResult(False, (y0, y1), n, None, window)
    for a, b in _candidates(s, window):
        z0, z1 = _relative_norm(a, b, alpha)
        if z0.is_zero() and z1.is_zero():
            continue
        # y / N(x) en D
        den = _d_norm(z0, z1, c)
        q0 = (y0 * z0 - c * y1 * z1) / den
        q1 = (y1 * z0 - y0 * z1) / den
        if _is_principal(q0, q1, c):
            return RelativeNormResult(True, (y0, y1), n, (a, b), window)
    raise InconclusiveEnumeration(f"no relative norm realises the class within window {window}")

