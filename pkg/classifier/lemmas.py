# classifier/lemmas.py
"""
Comprobaciones numericas de los lemas que sostienen la clasificacion:

  - no trivialidad de psi_beta^g en el radical derivado,
  - separacion de valuaciones de h(v, beta v) en el tipo D con X_beta vacio,
  - poca profundidad d(x, w, x) de los unipotentes inferiores (tipos C y D),
  - desigualdades que comparan ambas cosas,
  - la identidad de conjugacion lbar(x, y) u(0, a) lbar(-x, -y - x sigma(x)).

Cada chequeo devuelve los dos lados evaluados; las hipotesis que no se cumplen
se reportan con HypothesisViolated, nunca como fallo del lema.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from core import hermitian
from core.errors import (
    ConstraintViolated,
    HypothesisViolated,
    NoSolution,
    UnsupportedConfiguration,
)
from core.hermitian import WEYL_ELEMENTS, CharacterCheck, apply, h_eval, unipotent_partner
from core.padic import (
    BaseElement,
    ExtElement,
    PrimeConfig,
    random_base,
    random_ext,
    solve_norm_equation,
)
from core.stratum import Stratum, StratumType
from geometry.criteria import XBeta, criterion_status


# =========================
# Caracter en el radical derivado
# =========================
def character_check(g: np.ndarray, s: Stratum, r: int, side: str = "upper") -> CharacterCheck:
    """
    Nivel de psi_beta^g y las identidades de traza asociadas.

    Raises:
        IndeterminateValuation: si h(ge, beta ge) es un cero aparente.
        ConstraintViolated: si g no es unitario o falla Tr(d h) = 2 d h.
    """
    check = hermitian.char_nontrivial(g, s.gram, s.beta, r, side)
    value = check.pairing
    if not (ExtElement.from_base(value.trace()) == value * 2):
        raise ConstraintViolated("Tr_{F/F0}(d h) != 2 d h")
    return check


def char_nontrivial(g: np.ndarray, s: Stratum, r: int, side: str = "upper") -> bool:
    """True sii nu_F0(d h(g e, beta g e)) <= -r (e = e1 arriba, e-1 abajo)."""
    return character_check(g, s, r, side).nontrivial


# =========================
# Separacion de valuaciones (tipo D)
# =========================
@dataclass(frozen=True)
class SeparationCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def valuation_separation(
    s: Stratum,
    coords: Sequence[ExtElement],
    xbeta: Optional[XBeta] = None,
) -> SeparationCheck:
    """
    nu_F(h(v, beta v)) = min(nu_F(b1 l1 N(a)), nu_F(b2 l2 N(b) + b3 l3 N(c))) para v = (a, b, c).

    Raises:
        HypothesisViolated: tipo distinto de D, v no isotropo, a = 0, cola nula o X_beta no vacio.
    """
    if s.kind != StratumType.D or s.basis_kind != "orthogonal":
        raise HypothesisViolated("valuation separation is stated for type D strata in an orthogonal basis")
    if len(coords) != 3:
        raise HypothesisViolated(f"expected three coordinates, got {len(coords)}")
    a, b, c = coords
    lam = [ExtElement.from_base(l) for l in s.lambdas]
    betas = [blk.scalar for blk in s.blocks]
    norms = [ExtElement.from_base(x.norm()) for x in (a, b, c)]
    if not (lam[0] * norms[0] + lam[1] * norms[1] + lam[2] * norms[2]).is_zero():
        raise HypothesisViolated("v is not isotropic")
    if a.is_zero():
        raise HypothesisViolated("the V1 coordinate a vanishes")
    tail = betas[1] * lam[1] * norms[1] + betas[2] * lam[2] * norms[2]
    if tail.is_zero():
        raise HypothesisViolated("beta_2 l_2 N(b) + beta_3 l_3 N(c) vanishes")
    status = xbeta if xbeta is not None else criterion_status(s).status
    if status != XBeta.EMPTY:
        raise HypothesisViolated("X_beta(F0) is non-empty")
    v = [a, b, c]
    lhs = h_eval(s.gram, v, apply(s.beta, v)).valuation_F()
    head = betas[0] * lam[0] * norms[0]
    rhs = min(head.valuation_F(), tail.valuation_F())
    return SeparationCheck(lhs=lhs, rhs=rhs)


def random_isotropic_coords(
    rng: random.Random, s: Stratum, max_val: int = 2, attempts: int = 200
) -> Tuple[ExtElement, ExtElement, ExtElement]:
    """
    (a, b, c) con l1 N(a) + l2 N(b) + l3 N(c) = 0: b y c al azar, a por ecuacion de norma.

    Raises:
        NoSolution: si ningun intento produce un lado derecho que sea norma.
    """
    cfg = s.cfg
    l1, l2, l3 = s.lambdas
    for _ in range(attempts):
        b = random_ext(rng, cfg, rng.randint(0, max_val))
        c = random_ext(rng, cfg, rng.randint(0, max_val))
        target = -((l2 * b.norm() + l3 * c.norm()) / l1)
        if target.is_zero():
            continue
        try:
            a = solve_norm_equation(target)
        except NoSolution:
            continue
        return a, b, c
    raise NoSolution("no isotropic vector found for the sampled coordinates")


# =========================
# Poca profundidad
# =========================
@dataclass(frozen=True)
class ShallowCase:
    """
    Datos de los que depende d(x, w, x).

    Tipo C: n = 4m + 2r con nu_F(beta_1 - beta_2) = -(2m + r).
    Tipo D: (m, r) y (m2, r2) vienen de beta_1 y beta_2; en el caso no
    ramificado -nu_F(beta_i) = 2m_i + r_i, en el ramificado m_i = -nu_F0(d beta_i).
    shape describe Lambda(0) en el plano isotropo: 'oo' = o e1 + o e-1, 'op' = o e1 + p e-1.
    """
    kind: StratumType
    ramified: bool
    shape: str
    m: int
    r: int
    m2: int = 0
    r2: int = 0

    def __post_init__(self):
        if self.kind not in (StratumType.C, StratumType.D):
            raise UnsupportedConfiguration("shallowness is defined for types C and D")
        if self.shape not in ("oo", "op"):
            raise ValueError(f"shape must be 'oo' or 'op', got {self.shape!r}")


def _formula(case: ShallowCase, w: str) -> Tuple[int, Fraction]:
    """(c, t) con d(x, w, x) = max(c, ceil(t - nu(x)))."""
    if w not in WEYL_ELEMENTS:
        raise ValueError(f"Weyl element must be 'id' or 'w', got {w!r}")
    at_id = w == "id"
    m, r = case.m, case.r
    if case.kind == StratumType.C:
        if not case.ramified:
            if case.shape == "oo":
                return 1, Fraction(m + 1)
            return (0, Fraction(m + r)) if at_id else (2, Fraction(m + r + 1))
        return (0, Fraction(m + r - 1, 2)) if at_id else (1, Fraction(m + r, 2))
    m2 = case.m2
    if not case.ramified:
        if case.shape == "oo":
            return m2 + 1, Fraction(m + 1)
        return (m2, Fraction(m + r)) if at_id else (m2 + 2, Fraction(m + r + 1))
    return math.ceil(Fraction(m2, 2)), Fraction(m, 2)


def shallowness_value(case: ShallowCase, w: str, nu_x: Fraction) -> int:
    """d(x, w, x) para nu(x) dado (nu_F si no ramifica, nu_{F/F0} si ramifica)."""
    c, t = _formula(case, w)
    return max(c, math.ceil(t - Fraction(nu_x)))


def stable_shallowness(case: ShallowCase, w: str) -> int:
    """d(x, w): valor constante para nu(x) grande."""
    return _formula(case, w)[0]


def shallowness_threshold(case: ShallowCase, w: str) -> Fraction:
    """A partir de este nu(x), d(x, w, x) = d(x, w)."""
    c, t = _formula(case, w)
    return t - c


def shallow_case(s: Stratum) -> ShallowCase:
    """
    Raises:
        UnsupportedConfiguration: tipo fuera de C/D, V2 anisotropo en el tipo C o profundidad no positiva.
    """
    cfg = s.cfg
    if s.kind == StratumType.C:
        if not s.v2_isotropic():
            raise UnsupportedConfiguration("shallowness is defined for type C strata with V2 isotropic")
        diff = s.blocks[0].scalar - s.blocks[1].scalar
        k = -diff.valuation_F()
        if k <= 0:
            raise UnsupportedConfiguration(f"nu_F(beta_1 - beta_2) = {-k} must be negative")
        m, r = divmod(k, 2)
        shape = "op" if cfg.ramified else (s.lattice_shape or "oo")
        return ShallowCase(StratumType.C, cfg.ramified, shape, m, r)
    if s.kind == StratumType.D:
        b1, b2 = s.blocks[0].scalar, s.blocks[1].scalar
        if cfg.ramified:
            delta = ExtElement.delta(cfg)
            m = -(delta * b1).a.valuation()
            m2 = -(delta * b2).a.valuation()
            return ShallowCase(StratumType.D, True, "oo", m, 0, m2, 0)
        m, r = divmod(-b1.valuation_F(), 2)
        m2, r2 = divmod(-b2.valuation_F(), 2)
        return ShallowCase(StratumType.D, False, s.shape or "oo", m, r, m2, r2)
    raise UnsupportedConfiguration("shallowness is defined for types C and D")


def shallowness(s: Stratum, w: str, x: ExtElement) -> int:
    return shallowness_value(shallow_case(s), w, x.valuation_rel())


def stable_constant(s: Stratum, w: str) -> int:
    return stable_shallowness(shallow_case(s), w)


# =========================
# Desigualdades
# =========================
@dataclass(frozen=True)
class ClaimCheck:
    lhs: Fraction
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def claim_lhs(case: ShallowCase, w: str, nu_x: Fraction) -> Fraction:
    """
    Lado izquierdo en forma cerrada.

    Tipo C: nu_F0(d (beta_1 - beta_2) x sigma(x)).
    Tipo D: nu_{F/F0}(d h(u e_w, u e_w)) segun la fila de la tabla de casos.
    """
    nu = Fraction(nu_x)
    m, r = case.m, case.r
    if case.kind == StratumType.C:
        e = 2 if case.ramified else 1
        return Fraction(e - 1, 2) + Fraction(-(2 * m + r), e) + 2 * nu
    if case.ramified:
        return min(Fraction(-case.m2), -m + 2 * nu)
    head = -(2 * m + r) + 2 * nu
    tail = -(2 * case.m2 + case.r2)
    if case.shape == "op":
        tail += 1 if w == "id" else -1
    return min(Fraction(tail), head)


def _check_hypotheses(case: ShallowCase, w: str, nu: Fraction) -> None:
    if nu < 0:
        raise HypothesisViolated(f"x must be integral, got nu(x) = {nu}")
    if not case.ramified and nu.denominator != 1:
        raise HypothesisViolated("nu_F(x) is an integer in the unramified case")
    if case.kind == StratumType.C:
        if 2 * case.m + case.r <= 0:
            raise HypothesisViolated("type C needs n > 0")
        if case.ramified and case.r != 1:
            raise HypothesisViolated("ramified type C has nu_F(beta_1 - beta_2) odd")
        if shallowness_value(case, w, nu) <= stable_shallowness(case, w):
            raise HypothesisViolated("d(x, w, x) = d(x, w): the inequality is only claimed above the stable value")
        return
    if case.ramified:
        if case.m2 < 0 or case.m < case.m2:
            raise HypothesisViolated(f"need m1 >= m2 >= 0, got m1={case.m}, m2={case.m2}")
        return
    if case.m2 + case.r2 <= 0:
        raise HypothesisViolated("type D needs m2 + r2 > 0")
    if 2 * case.m + case.r < 2 * case.m2 + case.r2:
        raise HypothesisViolated("q1 >= q2 fails")
    if case.shape == "oo" and (case.r - case.r2) % 2 == 0:
        raise HypothesisViolated("the o + o case needs r1 - r2 odd")
    if case.shape == "op" and case.r != case.r2:
        raise HypothesisViolated("the o + p case needs r1 = r2")


def check_claim(case: ShallowCase, w: str, nu_x: Fraction) -> ClaimCheck:
    nu = Fraction(nu_x)
    _check_hypotheses(case, w, nu)
    return ClaimCheck(lhs=claim_lhs(case, w, nu), rhs=-shallowness_value(case, w, nu))


def claim_inequalities(s: Stratum, w: str, x: ExtElement) -> ClaimCheck:
    """
    Evalua lhs <= -d(x, w, x). En el tipo C el lado izquierdo se calcula con
    los elementos del estrato; en el tipo D con la tabla de casos.

    Raises:
        HypothesisViolated: fuera de las hipotesis de la desigualdad.
    """
    case = shallow_case(s)
    nu = x.valuation_rel()
    _check_hypotheses(case, w, nu)
    if case.kind == StratumType.C:
        cfg = s.cfg
        diff = s.blocks[0].scalar - s.blocks[1].scalar
        value = ExtElement.delta(cfg) * diff * x * x.conj()
        if not value.in_base():
            raise ConstraintViolated("d (beta_1 - beta_2) x sigma(x) is not in F0")
        lhs = Fraction(value.a.valuation())
    else:
        lhs = claim_lhs(case, w, nu)
    return ClaimCheck(lhs=lhs, rhs=-shallowness_value(case, w, nu))


# =========================
# Identidad de conjugacion
# =========================
def conjugation_identity(x: ExtElement, y: ExtElement, a: ExtElement) -> bool:
    """
    Raises:
        ConstraintViolated: si x sigma(x) + y + sigma(y) != 0 o a no esta en d*F0.
    """
    return hermitian.conjugation_identity(x, y, a)


def random_conjugation_triple(
    rng: random.Random, cfg: PrimeConfig, max_val: int = 2
) -> Tuple[ExtElement, ExtElement, ExtElement]:
    x = random_ext(rng, cfg, rng.randint(0, max_val))
    y = unipotent_partner(x, random_base(rng, cfg, rng.randint(-max_val, max_val)))
    a = ExtElement(BaseElement.zero(cfg), random_base(rng, cfg, rng.randint(-max_val, max_val)))
    return x, y, a
