# harness/tables.py
"""
Tablas de filtraciones a_n(Lambda) y niveles U_der para las sucesiones del catalogo.
"""
from __future__ import annotations

import pandas as pd

from core.errors import UnsupportedConfiguration
from lattice.filtrations import hom_filtration, uder_level, uder_level_closed_form
from lattice.sequences import catalogue_sequence

TABLE_COLUMNS = ["lattice", "ramified", "n", "a_n", "uder_level", "closed_form"]


def filtration_table(name: str, ramified: bool, n_from: int = -12, n_to: int = 12) -> pd.DataFrame:
    """
    Una fila por n en [n_from, n_to]; closed_form repite uder_level por la formula cerrada.

    Raises:
        UnsupportedConfiguration: L4 o sucesiones fuera del catalogo para esta ramificacion.
        ValueError: si n_from > n_to.
    """
    if n_from > n_to:
        raise ValueError(f"empty range: from={n_from} > to={n_to}")
    lam = catalogue_sequence(name, ramified)
    rows = []
    for n in range(n_from, n_to + 1):
        level = uder_level(lam, n, ramified)
        closed = uder_level_closed_form(lam.name, ramified, n)
        if closed != level:
            raise UnsupportedConfiguration(
                f"closed form {closed} disagrees with the filtration level {level} at n={n} for {lam.name}"
            )
        rows.append((lam.name, ramified, n, str(hom_filtration(lam, n)), level, closed))
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def format_table(df: pd.DataFrame, output: str = "text") -> str:
    if output == "csv":
        return df.to_csv(index=False)
    return df.to_string(index=False)
