# geometry/criteria.py
"""
Decision de vacuidad de X_beta(F0) por tipo de estrato, con traza de reglas.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from core.errors import InconclusiveEnumeration, UnsupportedConfiguration
from core.padic import BaseElement, is_norm_class
from core.stratum import Stratum, StratumType, q_invariants
from geometry.relative_norm import DEFAULT_WINDOW, relative_norm_test


class XBeta(str, Enum):
    EMPTY = "Empty"
    NONEMPTY = "NonEmpty"


@dataclass(frozen=True)
class LemmaStep:
    lemma: str
    rule: str
    inputs: Dict[str, object]
    outcome: str

    def to_text(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.inputs.items())
        return f"[{self.lemma}] {self.rule} | {args} -> {self.outcome}"


@dataclass(frozen=True)
class CriterionResult:
    status: XBeta
    trace: Tuple[LemmaStep, ...] = field(default_factory=tuple)


def _status(flag: bool) -> XBeta:
    return XBeta.NONEMPTY if flag else XBeta.EMPTY


# =========================
# Tipo D: terna de normas
# =========================
def norm_triple(s: Stratum) -> Tuple[BaseElement, BaseElement, BaseElement]:
    """
    Generador del nucleo de (N1, N2, N3) -> (sum l_i N_i, sum b_i l_i N_i).

    X_beta es no vacio sii las tres entradas tienen la misma clase modulo normas.
    """
    b = s.scalar_parts()
    if any(x is None for x in b):
        raise UnsupportedConfiguration("type D needs scalar blocks beta_i = d*b_i")
    lam = s.lambdas
    return (
        (b[2] - b[1]) / lam[0],
        (b[0] - b[2]) / lam[1],
        (b[1] - b[0]) / lam[2],
    )


def _triple_agrees(triple) -> bool:
    c1, c2, c3 = triple
    return is_norm_class(c1 / c3) and is_norm_class(c2 / c3)


def _type_d(s: Stratum, trace: List[LemmaStep]) -> XBeta:
    cfg = s.cfg
    lam = s.lambdas
    betas = [blk.scalar for blk in s.blocks]
    nu1, nu2 = betas[0].valuation_F(), betas[1].valuation_F()
    triple = norm_triple(s)
    by_triple = _triple_agrees(triple)
    if not cfg.ramified:
        nus = [l.valuation() for l in lam]
        diff = nu1 - nu2
        if nus == [0, 0, 0]:
            flag = diff % 2 == 0
            trace.append(LemmaStep(
                "typeD-unram-isotropic-lines",
                "all W_i isotropic: NonEmpty iff nu(beta_1) - nu(beta_2) even",
                {"nu_beta1": nu1, "nu_beta2": nu2},
                _status(flag).value,
            ))
        else:
            flag = nus[1] == nus[2] == 1 and diff % 2 == 1
            trace.append(LemmaStep(
                "typeD-unram-anisotropic-line",
                "some W_i anisotropic: NonEmpty iff nu(l_2) = nu(l_3) = 1 and nu(beta_1) - nu(beta_2) odd",
                {"nu_lambda": tuple(nus), "nu_beta1": nu1, "nu_beta2": nu2},
                _status(flag).value,
            ))
    else:
        b = s.scalar_parts()
        one = BaseElement.from_int(cfg, 1)
        cond1 = -((one - b[1] / b[0]) / (one - b[2] / b[0])) * (lam[1] / lam[2])
        cond2 = (lam[2] / lam[0]) * (b[1] / b[0]) * (one - b[2] / b[1]) / (one - b[1] / b[0])
        first = is_norm_class(cond1)
        second = is_norm_class(cond2)
        flag = first and second
        trace.append(LemmaStep(
            "typeD-ram-norm-conditions",
            "Empty iff -(1-b2/b1)/(1-b3/b1) l2/l3 not a norm, or it is and "
            "(l3/l1)(b2/b1)(1-b3/b2)/(1-b2/b1) is not",
            {"first_is_norm": first, "second_is_norm": second},
            _status(flag).value,
        ))
    trace.append(LemmaStep(
        "typeD-norm-triple",
        "kernel direction of the two linear forms in (N1, N2, N3) lies in one norm class",
        {"classes_agree": by_triple},
        _status(by_triple).value,
    ))
    if by_triple != flag:
        raise UnsupportedConfiguration(
            "type D lemma rule and norm triple disagree; the forms are outside the catalogued normalisation"
        )
    return _status(flag)


# =========================
# Tipo B
# =========================
def _type_b(s: Stratum, trace: List[LemmaStep]) -> XBeta:
    q = q_invariants(s)
    q1, q2 = q.q
    iso = s.v2_isotropic()
    if iso:
        flag = q1 > q2
        lemma = "typeB-iso-q1-gt-q2" if flag else "typeB-iso-q2-gt-q1"
        rule = "V2 isotropic: NonEmpty iff q1 > q2"
    else:
        flag = q2 > q1
        lemma = "typeB-aniso-q2-gt-q1" if flag else "typeB-aniso-q1-gt-q2"
        rule = "V2 anisotropic: NonEmpty iff q2 > q1"
    trace.append(LemmaStep(lemma, rule, {"q1": q1, "q2": q2, "v2_isotropic": iso}, _status(flag).value))
    window = DEFAULT_WINDOW
    for _ in range(2):
        try:
            rel = relative_norm_test(s, window)
        except InconclusiveEnumeration:
            window *= 2
            continue
        trace.append(LemmaStep(
            "typeB-relative-norm",
            "-d1/d2 is a norm from F[beta_2] to its sigma_h-fixed field",
            {"window": rel.window},
            _status(rel.member).value,
        ))
        if rel.member != flag:
            raise UnsupportedConfiguration("type B q-rule and relative norm criterion disagree")
        break
    else:
        trace.append(LemmaStep(
            "typeB-relative-norm",
            "-d1/d2 is a norm from F[beta_2] to its sigma_h-fixed field",
            {"window": window},
            "inconclusive",
        ))
    return _status(flag)


def criterion_status(s: Stratum) -> CriterionResult:
    """
    Empty / NonEmpty segun la tabla de decision del tipo del estrato.

    Raises:
        UnsupportedConfiguration: fuera de los casos catalogados.
    """
    trace: List[LemmaStep] = []
    if s.kind == StratumType.A:
        q = q_invariants(s)
        trace.append(LemmaStep(
            "typeA-cubic-flag",
            "F[beta] cubic: an isotropic line with h(v, beta v) = 0 always exists",
            {"n": q.n},
            XBeta.NONEMPTY.value,
        ))
        return CriterionResult(XBeta.NONEMPTY, tuple(trace))
    if s.kind == StratumType.B:
        return CriterionResult(_type_b(s, trace), tuple(trace))
    if s.kind == StratumType.C:
        iso = s.v2_isotropic()
        trace.append(LemmaStep(
            "typeC-isotropic" if iso else "typeC-anisotropic",
            "NonEmpty iff (V2, h) isotropic",
            {"v2_isotropic": iso},
            _status(iso).value,
        ))
        return CriterionResult(_status(iso), tuple(trace))
    if s.kind == StratumType.D:
        if s.basis_kind != "orthogonal":
            raise UnsupportedConfiguration("type D strata are given in an orthogonal basis")
        return CriterionResult(_type_d(s, trace), tuple(trace))
    raise UnsupportedConfiguration(f"unknown stratum type {s.kind!r}")
