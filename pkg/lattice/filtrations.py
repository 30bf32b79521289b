# lattice/filtrations.py
"""
Filtracion a_n(Lambda) de End_F(V) y su traza en el radical derivado.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.errors import IndeterminateValuation, UnsupportedConfiguration
from core.hermitian import is_skew
from lattice.sequences import LatticeSequence, ceil_div


@dataclass(frozen=True, eq=False)
class FiltrationMatrix:
    """vals[i, j] = valuacion minima de T_ij para T en a_n(Lambda)."""
    n: int
    vals: np.ndarray

    def rows(self):
        return [[int(v) for v in row] for row in self.vals]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiltrationMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.vals, other.vals)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows()) + "]"


def hom_filtration(lam: LatticeSequence, n: int) -> FiltrationMatrix:
    """T en a_n(Lambda) sii nu_F(T_ij) >= ceil((n - w_i + w_j) / e)."""
    k = lam.rank
    vals = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            vals[i, j] = ceil_div(n - lam.weights[i] + lam.weights[j], lam.period)
    return FiltrationMatrix(n=n, vals=vals)


def nu_lambda(lam: LatticeSequence, t: np.ndarray) -> int:
    """
    nu_Lambda(T) = max{n : T en a_n(Lambda)} = min_ij e*nu_F(T_ij) + w_i - w_j.

    Raises:
        IndeterminateValuation: si T es cero o si un cero aparente puede bajar el minimo.
    """
    e = lam.period
    known = []
    bounds = []
    for i in range(lam.rank):
        for j in range(lam.rank):
            x = t[i, j]
            if x.is_exact_zero():
                continue
            shift = lam.weights[i] - lam.weights[j]
            if x.is_zero():
                bounds.append(e * _apparent_bound(x) + shift)
            else:
                known.append(e * x.valuation_F() + shift)
    if not known:
        raise IndeterminateValuation("nu_Lambda of the zero endomorphism")
    low = min(known)
    if bounds and min(bounds) < low:
        raise IndeterminateValuation("apparent zero entry could lower nu_Lambda")
    return low


def contains(lam: LatticeSequence, t: np.ndarray, n: int, gram: Optional[np.ndarray] = None) -> bool:
    """
    T en a~_n(Lambda); con gram ademas se exige T antisimetrico (parte a_n).

    Los ceros aparentes cuentan como pertenecientes si su precision llega a la cota.
    """
    vals = hom_filtration(lam, n).vals
    for i in range(lam.rank):
        for j in range(lam.rank):
            x = t[i, j]
            if x.is_exact_zero():
                continue
            if x.is_zero():
                if _apparent_bound(x) < vals[i, j]:
                    raise IndeterminateValuation("apparent zero entry below the filtration bound")
                continue
            if x.valuation_F() < vals[i, j]:
                return False
    if gram is not None:
        return is_skew(gram, t)
    return True


def _apparent_bound(x) -> int:
    """Cota inferior de nu_F para un cero aparente de F."""
    e = x.cfg.e
    parts = [p for p in (x.a, x.b) if not p.is_exact_zero()]
    return min(e * p.prec for p in parts)


def uder_level(lam: LatticeSequence, n: int, ramified: bool) -> int:
    """r con U_der intersecado con a_n(Lambda) = U_der(r), leido de la entrada (e1, e-1)."""
    if not lam.witt:
        raise UnsupportedConfiguration("U_der filtration needs a sequence in the Witt basis")
    v13 = int(hom_filtration(lam, n).vals[0, 2])
    if ramified:
        return ceil_div(v13 - 1, 2)
    return v13


def uder_level_closed_form(name: str, ramified: bool, n: int) -> int:
    """Formulas cerradas por sucesion del catalogo."""
    key = name.upper()
    m = ceil_div(n, 2)
    if not ramified:
        if key == "L1":
            return m
        if key == "L2":
            return (n - 1) // 2
        if key == "L3":
            q, r = divmod(n, 4)
            return q + 1 if r == 3 else q
    else:
        if key == "L1":
            return m // 2
        if key == "L2":
            return (m - 1) // 2
    raise UnsupportedConfiguration(f"no closed form for {name} (ramified={ramified})")
