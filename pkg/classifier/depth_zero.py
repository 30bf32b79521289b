# classifier/depth_zero.py
"""
Regla de profundidad cero: la genericidad de sigma (dato del grupo finito) se
recibe como entrada.
"""
from __future__ import annotations

from dataclasses import dataclass

from classifier.genericity import ClassificationReport, Verdict
from core.stratum import StratumType
from geometry.criteria import LemmaStep, XBeta

# cociente P0/P1 de cada parahorico maximal
PARAHORIC_QUOTIENTS = {
    (False, "L1"): "U(2,1)(k_F/k_F0)",
    (False, "L2"): "U(1,1)(k_F/k_F0) x U(1)(k_F/k_F0)",
    (True, "L1"): "O(3)(k_F)",
    (True, "L2"): "SL(2)(k_F) x {+-1}",
}


@dataclass(frozen=True)
class DepthZeroInput:
    ramified: bool
    lattice_kind: str
    sigma_is_generic_cuspidal: bool

    def __post_init__(self):
        key = self.lattice_kind.upper().replace("Λ", "L")
        if key not in ("L1", "L2"):
            raise ValueError(f"Depth-zero lattice must be L1 or L2, got {self.lattice_kind!r}")
        object.__setattr__(self, "lattice_kind", key)

    @property
    def quotient(self) -> str:
        return PARAHORIC_QUOTIENTS[(self.ramified, self.lattice_kind)]


def depth_zero_rule(data: DepthZeroInput) -> Verdict:
    """
    Ramificado: generica sii el parahorico es el de L1 y sigma es generica.
    No ramificado: generica sii P0/P1 es U(2,1) del cuerpo residual y sigma es generica.
    """
    if not data.sigma_is_generic_cuspidal:
        return Verdict.NONGENERIC
    if data.ramified:
        ok = data.lattice_kind == "L1"
    else:
        ok = data.quotient == PARAHORIC_QUOTIENTS[(False, "L1")]
    return Verdict.GENERIC if ok else Verdict.NONGENERIC


def classify_depth_zero(data: DepthZeroInput) -> ClassificationReport:
    """
    Informe con la etiqueta de profundidad cero.

    Con beta = 0, X_beta es el cono isotropo de V, que no es vacio en U(2,1).
    """
    verdict = depth_zero_rule(data)
    step = LemmaStep(
        "depth-zero",
        "generic iff sigma is generic and the parahoric is the one of L1",
        {
            "ramified": data.ramified,
            "lattice": data.lattice_kind,
            "quotient": data.quotient,
            "sigma_generic": data.sigma_is_generic_cuspidal,
        },
        verdict.value,
    )
    return ClassificationReport(
        verdict=verdict,
        xbeta=XBeta.NONEMPTY,
        case_path=(step,),
        kind=StratumType.DEPTH_ZERO,
    )
