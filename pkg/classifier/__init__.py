# classifier/__init__.py
"""
Veredicto de genericidad por estrato, regla de profundidad cero y
comprobaciones numericas de los lemas que la sostienen.
"""
from classifier.genericity import ClassificationReport, Verdict, classify_genericity, theorem_table
from classifier.depth_zero import PARAHORIC_QUOTIENTS, DepthZeroInput, classify_depth_zero, depth_zero_rule
from classifier.lemmas import (
    ClaimCheck,
    SeparationCheck,
    ShallowCase,
    char_nontrivial,
    character_check,
    check_claim,
    claim_inequalities,
    conjugation_identity,
    random_conjugation_triple,
    random_isotropic_coords,
    shallow_case,
    shallowness,
    shallowness_threshold,
    shallowness_value,
    stable_constant,
    stable_shallowness,
    valuation_separation,
)
from classifier.sampler import MUTATION_CLAUSES, mutate, sample_stratum

__all__ = [
    "ClassificationReport",
    "Verdict",
    "classify_genericity",
    "theorem_table",
    "PARAHORIC_QUOTIENTS",
    "DepthZeroInput",
    "classify_depth_zero",
    "depth_zero_rule",
    "ClaimCheck",
    "SeparationCheck",
    "ShallowCase",
    "char_nontrivial",
    "character_check",
    "check_claim",
    "claim_inequalities",
    "conjugation_identity",
    "random_conjugation_triple",
    "random_isotropic_coords",
    "shallow_case",
    "shallowness",
    "shallowness_threshold",
    "shallowness_value",
    "stable_constant",
    "stable_shallowness",
    "valuation_separation",
    "MUTATION_CLAUSES",
    "mutate",
    "sample_stratum",
]
