# geometry/__init__.py
"""
Geometria de X_beta: sistema de dos cuadricas en seis variables sobre F0,
criterios de vacuidad y busqueda de puntos con certificados de Hensel.
"""
from geometry.system import QuadricPairSystem, ScaledSystem, assemble_system, system_from_forms
from geometry.criteria import (
    CriterionResult,
    LemmaStep,
    XBeta,
    criterion_status,
    norm_triple,
)
from geometry.relative_norm import RelativeNormResult, relative_norm_test
from geometry.hensel import HenselCertificate, Rejected, hensel_check
from geometry.search import SearchResult, Witness, brute_search

__all__ = [
    "QuadricPairSystem",
    "ScaledSystem",
    "assemble_system",
    "system_from_forms",
    "CriterionResult",
    "LemmaStep",
    "XBeta",
    "criterion_status",
    "norm_triple",
    "RelativeNormResult",
    "relative_norm_test",
    "HenselCertificate",
    "Rejected",
    "hensel_check",
    "SearchResult",
    "Witness",
    "brute_search",
]
