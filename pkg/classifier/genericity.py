# classifier/genericity.py
"""
Veredicto de genericidad por estrato.

El veredicto es uno solo para todo el conjunto de representaciones asociadas al
estrato: el informe nunca lleva veredictos por representacion.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from config.constants import DEFAULT_NODE_BUDGET
from core.errors import UnsupportedConfiguration
from core.stratum import Stratum, StratumType, q_invariants, validate
from geometry.criteria import LemmaStep, XBeta, criterion_status
from geometry.hensel import HenselCertificate, Witness
from geometry.search import brute_search
from geometry.system import assemble_system


class Verdict(str, Enum):
    GENERIC = "Generic"
    NONGENERIC = "NonGeneric"


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    xbeta: XBeta
    case_path: Tuple[LemmaStep, ...] = field(default_factory=tuple)
    witness: Optional[Witness] = None
    certificate: Optional[HenselCertificate] = None
    kind: Optional[StratumType] = None

    def to_text(self) -> str:
        lines = []
        if self.kind is not None:
            lines.append(f"type           : {self.kind.value}")
        lines.append(f"verdict        : {self.verdict.value}")
        lines.append(f"xbeta          : {self.xbeta.value}")
        lines.append("case path:")
        lines.extend(f"  {step.to_text()}" for step in self.case_path)
        if self.witness is not None:
            lines.append("witness:")
            lines.extend(f"  {line}" for line in self.witness.to_text().splitlines())
            if self.certificate is not None:
                lines.extend(f"  {line}" for line in self.certificate.to_text().splitlines())
        return "\n".join(lines)


def _verdict(flag: bool) -> Verdict:
    return Verdict.GENERIC if flag else Verdict.NONGENERIC


# =========================
# Tabla del teorema
# =========================
def theorem_table(
    kind,
    isotropic: Optional[bool],
    q1: Optional[int],
    q2: Optional[int],
    xbeta: XBeta,
) -> Verdict:
    """
    Veredicto reconstruido solo con (tipo, isotropia de V2, q1 vs q2, X_beta).

    No consulta la cadena de lemas; sirve de oraculo de consistencia.
    """
    kind = StratumType(kind)
    if kind == StratumType.DEPTH_ZERO:
        raise UnsupportedConfiguration("depth-zero strata are decided by depth_zero_rule")
    if kind == StratumType.A:
        return Verdict.GENERIC
    if kind == StratumType.B:
        if q1 is None or q2 is None or q1 == q2 or isotropic is None:
            raise UnsupportedConfiguration("type B needs q1 != q2 and the isotropy of V2")
        return _verdict(isotropic if q1 > q2 else not isotropic)
    if kind == StratumType.C:
        return Verdict.NONGENERIC
    return _verdict(XBeta(xbeta) == XBeta.NONEMPTY)


# =========================
# Clasificacion
# =========================
def classify_genericity(
    s: Stratum,
    search_depth: Optional[int] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> ClassificationReport:
    """
    Clasifica un estrato valido con n > 0.

    Con search_depth se adjunta ademas un testigo de X_beta(F0) cuando el
    criterio lo declara no vacio.

    Raises:
        UnsupportedConfiguration: estrato invalido o fuera de los casos catalogados.
    """
    violations = validate(s)
    if violations:
        raise UnsupportedConfiguration("invalid stratum: " + "; ".join(str(v) for v in violations))
    crit = criterion_status(s)
    path = list(crit.trace)
    nonempty = crit.status == XBeta.NONEMPTY

    if s.kind == StratumType.A:
        verdict = Verdict.GENERIC
        path.append(LemmaStep(
            "typeA-generic",
            "F[beta] cubic: every representation is generic",
            {},
            verdict.value,
        ))
    elif s.kind == StratumType.B:
        q1, q2 = q_invariants(s).q
        iso = s.v2_isotropic()
        verdict = _verdict(nonempty)
        path.append(LemmaStep(
            "typeB-genericity",
            "q1 > q2: Generic iff V2 isotropic; q2 > q1: Generic iff V2 anisotropic; "
            "equivalently Generic iff X_beta(F0) non-empty",
            {"q1": q1, "q2": q2, "v2_isotropic": iso},
            verdict.value,
        ))
    elif s.kind == StratumType.C:
        verdict = Verdict.NONGENERIC
        path.append(LemmaStep(
            "typeC-nongeneric",
            "every representation is non-generic, whether or not X_beta(F0) is empty",
            {"v2_isotropic": s.v2_isotropic()},
            verdict.value,
        ))
    else:
        verdict = _verdict(nonempty)
        path.append(LemmaStep(
            "typeD-genericity",
            "Generic iff X_beta(F0) non-empty",
            {"xbeta": crit.status.value},
            verdict.value,
        ))

    witness, certificate = None, None
    if search_depth is not None and nonempty:
        result = brute_search(assemble_system(s), search_depth, node_budget=node_budget, threads=threads)
        witness, certificate = result.witness, result.certificate
        path.append(LemmaStep(
            "xbeta-search",
            "residue search for a point of X_beta(F0)",
            {"depth": result.depth, "nodes": result.nodes},
            result.status,
        ))
    return ClassificationReport(
        verdict=verdict,
        xbeta=crit.status,
        case_path=tuple(path),
        witness=witness,
        certificate=certificate,
        kind=s.kind,
    )
