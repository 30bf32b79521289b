# core/errors.py
"""
Jerarquia de excepciones de la libreria.

Todas derivan de StrataError para que el CLI pueda mapearlas a codigos de salida.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence


class StrataError(Exception):
    """Raiz de los errores de dominio."""


class PrecisionExhausted(StrataError):
    """La precision de trabajo no alcanza para decidir un resultado."""


class DivisionByApparentZero(StrataError):
    """Division por un elemento que es cero a la precision conocida."""


class IndeterminateValuation(StrataError):
    """Valuacion pedida de un cero aparente."""


class NoSolution(StrataError):
    """Una ecuacion de norma o de raiz no tiene solucion."""


class ConstraintViolated(StrataError):
    """Parametros que no cumplen la restriccion de un generador del grupo."""


class UnsupportedConfiguration(StrataError):
    """Caso fuera del alcance implementado (p.ej. reticulo L4)."""


class HypothesisViolated(StrataError):
    """Se invoco un chequeo numerico fuera de sus hipotesis."""


class InconclusiveEnumeration(StrataError):
    """La enumeracion acotada no encontro testigo aunque el criterio lo predice."""


class ParseError(StrataError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class Violation:
    """Clausula de validacion incumplida."""
    clause: str
    detail: str

    def __str__(self) -> str:
        return f"{self.clause}: {self.detail}"


class ValidationError(StrataError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations: List[Violation] = list(violations)
        joined = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid stratum ({len(self.violations)} violations): {joined}")
