# lattice/sequences.py
"""
Sucesiones de reticulos escindidas por una base fija.

Lambda(n) = sum_i p_F^{c_i(n)} b_i con c_i(n) = ceil((n - w_i) / e): e es el
periodo y w los pesos. El modelo es cerrado bajo dualidad y cambios afines.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from core.errors import UnsupportedConfiguration


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class LatticeSequence:
    """
    Args:
        period: e, con Lambda(n + e) = p_F Lambda(n)
        weights: w_i por vector de la base
        partner: pi(i), unico j con h(b_i, b_j) != 0
        gram_valuations: nu_F(h(b_i, b_pi(i)))
        name: etiqueta del catalogo si la tiene
        witt: True si la base es (e1, e0, e-1)
    """
    period: int
    weights: Tuple[int, ...]
    partner: Tuple[int, ...]
    gram_valuations: Tuple[int, ...]
    name: Optional[str] = None
    witt: bool = False

    def __post_init__(self):
        if self.period <= 0:
            raise ValueError(f"Period must be positive, got {self.period}")
        n = len(self.weights)
        if len(self.partner) != n or len(self.gram_valuations) != n:
            raise ValueError("weights, partner and gram_valuations must have the same length")
        if sorted(self.partner) != list(range(n)):
            raise ValueError(f"partner {self.partner} is not a permutation")

    @property
    def rank(self) -> int:
        return len(self.weights)

    def exponents(self, n: int) -> Tuple[int, ...]:
        """c(n): Lambda(n) = sum p_F^{c_i(n)} b_i."""
        return tuple(ceil_div(n - w, self.period) for w in self.weights)

    @property
    def period_exponents(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.exponents(n) for n in range(self.period))

    def contains(self, n: int, coord_valuations) -> bool:
        """Un vector con nu_F de coordenadas dado pertenece a Lambda(n)."""
        return all(v >= c for v, c in zip(coord_valuations, self.exponents(n)))

    @property
    def duality_shift(self) -> Optional[int]:
        """d con Lambda^#(n) = Lambda(n + d) si existe."""
        dw = dual(self).weights
        shifts = {w - w2 for w, w2 in zip(self.weights, dw)}
        return shifts.pop() if len(shifts) == 1 else None

    def is_self_dual(self) -> bool:
        return self.duality_shift == 1

    def relabel(self, name: Optional[str]) -> "LatticeSequence":
        return LatticeSequence(self.period, self.weights, self.partner, self.gram_valuations, name, self.witt)


def dual(lam: LatticeSequence) -> LatticeSequence:
    """Lambda^#(n) = {v : h(v, Lambda(-n)) en p_F}; sigue en el modelo de pesos."""
    e = lam.period
    weights = tuple(
        e * lam.gram_valuations[i] - lam.weights[lam.partner[i]] - 1
        for i in range(lam.rank)
    )
    return LatticeSequence(e, weights, lam.partner, lam.gram_valuations, None, lam.witt)


def affine(lam: LatticeSequence, a: int, b: int) -> LatticeSequence:
    """(a Lambda + b)(n) = Lambda(ceil((n - b) / a))."""
    if a <= 0:
        raise ValueError(f"affine factor must be positive, got {a}")
    weights = tuple(a * w + b for w in lam.weights)
    return LatticeSequence(a * lam.period, weights, lam.partner, lam.gram_valuations, None, lam.witt)


_WITT_PARTNER = (2, 1, 0)
_WITT_GRAM = (0, 0, 0)

_CATALOGUE = {
    # nombre: (periodo, pesos, solo no ramificado)
    "L1": (2, (0, 0, 0), False),
    "L2": (2, (1, 0, -1), False),
    "L3": (4, (1, 0, -1), True),
}


def catalogue_sequence(name: str, ramified: bool) -> LatticeSequence:
    """
    Sucesiones estandar en la base de Witt (e1, e0, e-1).

    Raises:
        UnsupportedConfiguration: para L4 y para L3 en el caso ramificado.
    """
    key = name.upper().replace("Λ", "L")
    if key == "L4":
        raise UnsupportedConfiguration("the period-6 lattice sequence L4 is not modelled")
    if key not in _CATALOGUE:
        raise ValueError(f"Unknown lattice sequence {name!r}")
    period, weights, unram_only = _CATALOGUE[key]
    if unram_only and ramified:
        raise UnsupportedConfiguration(f"{key} is only catalogued for unramified F")
    return LatticeSequence(period, weights, _WITT_PARTNER, _WITT_GRAM, key, witt=True)
