# lattice/__init__.py
from .sequences import (
    LatticeSequence,
    affine,
    catalogue_sequence,
    dual,
)
from .filtrations import (
    FiltrationMatrix,
    contains,
    hom_filtration,
    nu_lambda,
    uder_level,
    uder_level_closed_form,
)

__all__ = [
    "LatticeSequence",
    "affine",
    "catalogue_sequence",
    "dual",
    "FiltrationMatrix",
    "contains",
    "hom_filtration",
    "nu_lambda",
    "uder_level",
    "uder_level_closed_form",
]
