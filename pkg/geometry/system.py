# geometry/system.py
"""
X_beta como interseccion de dos cuadricas en P^5(F0).

Cada coordenada de F se escribe x + y*d, asi v en F^3 es un punto de F0^6.
Q1(z) = h(v, v) y Q2(z) = h(v, beta v) / d, ambas con valores en F0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

import numpy as np

from core.hermitian import apply, h_eval
from core.padic import BaseElement, ExtElement, PrimeConfig
from core.stratum import Stratum

VARIABLES = ("x0", "y0", "x1", "y1", "x2", "y2")


# =========================
# Coordenadas
# =========================
def split_coordinates(v: Sequence[ExtElement]) -> List[BaseElement]:
    """(a0 + b0 d, ...) -> (a0, b0, ...)."""
    out: List[BaseElement] = []
    for c in v:
        out.extend((c.a, c.b))
    return out


def join_coordinates(z: Sequence[BaseElement]) -> List[ExtElement]:
    if len(z) % 2:
        raise ValueError(f"expected an even number of F0 coordinates, got {len(z)}")
    return [ExtElement(z[k], z[k + 1]) for k in range(0, len(z), 2)]


def _vp(n: int, p: int, cap: int) -> int:
    """Valuacion p-adica de un entero, acotada por cap (0 cuenta como cap)."""
    if n == 0:
        return cap
    v = 0
    while n % p == 0 and v < cap:
        n //= p
        v += 1
    return v


def _quadratic(m: np.ndarray, z: Sequence[BaseElement]) -> BaseElement:
    cfg = z[0].cfg
    acc = BaseElement.zero(cfg)
    n = m.shape[0]
    for k in range(n):
        for l in range(n):
            if not m[k, l].is_exact_zero():
                acc = acc + m[k, l] * z[k] * z[l]
    return acc


def _polarize(cfg: PrimeConfig, n: int, form: Callable[[List[BaseElement]], BaseElement]) -> np.ndarray:
    """Matriz simetrica de una forma cuadratica dada como funcion."""
    half = BaseElement.from_fraction(cfg, Fraction(1, 2))
    zero = BaseElement.zero(cfg)
    one = BaseElement.from_int(cfg, 1)

    def unit_vector(*idx: int) -> List[BaseElement]:
        return [one if k in idx else zero for k in range(n)]

    diag = [form(unit_vector(k)) for k in range(n)]
    m = np.empty((n, n), dtype=object)
    for k in range(n):
        m[k, k] = diag[k]
        for l in range(k + 1, n):
            m[k, l] = (form(unit_vector(k, l)) - diag[k] - diag[l]) * half
            m[l, k] = m[k, l]
    return m


# =========================
# Sistema
# =========================
@dataclass(frozen=True, eq=False)
class QuadricPairSystem:
    cfg: PrimeConfig
    q1: np.ndarray
    q2: np.ndarray

    @property
    def size(self) -> int:
        return self.q1.shape[0]

    def evaluate(self, z: Sequence[BaseElement]) -> Tuple[BaseElement, BaseElement]:
        if len(z) != self.size:
            raise ValueError(f"expected {self.size} coordinates, got {len(z)}")
        return _quadratic(self.q1, z), _quadratic(self.q2, z)

    def is_degenerate(self) -> bool:
        """Q2 identicamente nula (beta = 0)."""
        return all(x.is_zero() for x in self.q2.flat)

    def rescaled(self, weights: Sequence[int]) -> "ScaledSystem":
        """
        Sustituye cada coordenada de F por pi^k veces ella misma y divide cada forma
        por su contenido, dejando matrices enteras primitivas modulo p^N.
        """
        weights = tuple(int(k) for k in weights)
        if len(weights) * 2 != self.size or min(weights) < 0:
            raise ValueError(f"weights must be {self.size // 2} non-negative integers, got {weights}")
        cfg = self.cfg
        p, n = cfg.p, self.size
        extra = 2 * max(weights) + 2
        big = p ** (cfg.precision + extra)
        subst = _substitution(cfg, weights)
        forms, shifts = [], []
        for m in (self.q1, self.q2):
            ints, base_shift = _integral_matrix(m, cfg.precision + extra)
            scaled = [[0] * n for _ in range(n)]
            for k in range(n):
                for l in range(n):
                    acc = 0
                    for a in range(n):
                        if subst[a][k] == 0:
                            continue
                        for b in range(n):
                            if subst[b][l] and ints[a][b]:
                                acc += subst[a][k] * ints[a][b] * subst[b][l]
                    scaled[k][l] = acc % big
            s = min((_vp(x, p, cfg.precision + extra) for row in scaled for x in row if x), default=0)
            mod = p ** cfg.precision
            forms.append(tuple(tuple((x // p ** s) % mod for x in row) for row in scaled))
            shifts.append(base_shift + s)
        return ScaledSystem(
            p=p,
            precision=cfg.precision,
            weights=weights,
            forms=(forms[0], forms[1]),
            shifts=(shifts[0], shifts[1]),
            substitution=tuple(tuple(row) for row in subst),
            cfg=cfg,
        )


def _integral_matrix(m: np.ndarray, digits: int) -> Tuple[List[List[int]], int]:
    """Divide por p^vmin y devuelve enteros modulo p^digits junto con vmin."""
    entries = [x for x in m.flat if not x.is_zero()]
    if not entries:
        n = m.shape[0]
        return [[0] * n for _ in range(n)], 0
    vmin = min(x.val for x in entries)
    cfg = entries[0].cfg
    scale = BaseElement.power_of_p(cfg, -vmin)
    n = m.shape[0]
    out = [[0] * n for _ in range(n)]
    for k in range(n):
        for l in range(n):
            x = m[k, l]
            if not x.is_zero():
                out[k][l] = (x * scale).to_int_mod(digits)
    return out, vmin


def _substitution(cfg: PrimeConfig, weights: Sequence[int]) -> List[List[int]]:
    """Matriz entera de z -> pi^k z por coordenada de F (en coordenadas de F0)."""
    n = 2 * len(weights)
    out = [[0] * n for _ in range(n)]
    for i, k in enumerate(weights):
        if cfg.ramified:
            # d^k = (d^2)^(k//2) * d^(k%2); multiplicar por d manda (x, y) a (d2*y, x)
            c = cfg.d2 ** (k // 2)
            if k % 2:
                block = [[0, c * cfg.d2], [c, 0]]
            else:
                block = [[c, 0], [0, c]]
        else:
            c = cfg.p ** k
            block = [[c, 0], [0, c]]
        for r in range(2):
            for s in range(2):
                out[2 * i + r][2 * i + s] = block[r][s]
    return out


@dataclass(frozen=True)
class ScaledSystem:
    """Sistema con coeficientes enteros modulo p^N tras la sustitucion por pesos."""
    p: int
    precision: int
    weights: Tuple[int, ...]
    forms: Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]
    shifts: Tuple[int, int]
    substitution: Tuple[Tuple[int, ...], ...]
    cfg: PrimeConfig

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    @property
    def size(self) -> int:
        return len(self.forms[0])

    def values(self, z: Sequence[int], modulus: int = None) -> Tuple[int, int]:
        mod = modulus or self.modulus
        out = []
        for m in self.forms:
            acc = 0
            for k, zk in enumerate(z):
                if not zk:
                    continue
                row = m[k]
                for l, zl in enumerate(z):
                    if zl and row[l]:
                        acc += row[l] * zk * zl
            out.append(acc % mod)
        return out[0], out[1]

    def gradients(self, z: Sequence[int], modulus: int = None) -> Tuple[List[int], List[int]]:
        """Filas del jacobiano 2 M z."""
        mod = modulus or self.modulus
        grads = []
        for m in self.forms:
            grads.append([(2 * sum(m[k][l] * z[l] for l in range(len(z)))) % mod for k in range(len(z))])
        return grads[0], grads[1]

    def residual(self, z: Sequence[int]) -> int:
        """Mayor m con Q1(z) = Q2(z) = 0 mod p^m (acotado por N)."""
        v1, v2 = self.values(z)
        return min(_vp(v1, self.p, self.precision), _vp(v2, self.p, self.precision))

    def residue_forms(self) -> Tuple[np.ndarray, np.ndarray]:
        p = self.p
        return tuple(np.array([[x % p for x in row] for row in m], dtype=np.int64) for m in self.forms)

    def primitive_mask(self, z: np.ndarray) -> np.ndarray:
        """Filas de z cuyo punto original tiene alguna coordenada unidad."""
        subst = np.array([[x % self.p for x in row] for row in self.substitution], dtype=np.int64)
        return np.any((z @ subst.T) % self.p != 0, axis=1)

    def to_original(self, z: Sequence[int]) -> Tuple[BaseElement, ...]:
        n = self.size
        coords = []
        for a in range(n):
            coords.append(sum(self.substitution[a][k] * z[k] for k in range(n)))
        return tuple(BaseElement.from_int(self.cfg, c) for c in coords)


# =========================
# Construccion
# =========================
def system_from_forms(gram: np.ndarray, beta: np.ndarray) -> QuadricPairSystem:
    """
    Restriccion de escalares de h(v, v) y h(v, beta v)/d.

    Raises:
        ValueError: si alguna de las formas no toma valores en F0 (beta no antisimetrico).
    """
    cfg = gram[0, 0].cfg
    delta = ExtElement.delta(cfg)
    n = 2 * gram.shape[0]

    def q1(z: List[BaseElement]) -> BaseElement:
        v = join_coordinates(z)
        val = h_eval(gram, v, v)
        if not val.in_base():
            raise ValueError("h(v, v) is not in F0; the form is not hermitian")
        return val.a

    def q2(z: List[BaseElement]) -> BaseElement:
        v = join_coordinates(z)
        val = h_eval(gram, v, apply(beta, v)) / delta
        if not val.in_base():
            raise ValueError("h(v, beta v) is not in d*F0; beta is not skew")
        return val.a

    return QuadricPairSystem(cfg=cfg, q1=_polarize(cfg, n, q1), q2=_polarize(cfg, n, q2))


def system_from_matrices(cfg: PrimeConfig, q1: Sequence[Sequence], q2: Sequence[Sequence]) -> QuadricPairSystem:
    """Sistema dado directamente por matrices simetricas de enteros o fracciones."""

    def to_matrix(rows) -> np.ndarray:
        n = len(rows)
        m = np.empty((n, n), dtype=object)
        for k in range(n):
            for l in range(n):
                x = rows[k][l]
                m[k, l] = x if isinstance(x, BaseElement) else BaseElement.from_fraction(cfg, Fraction(x))
        return m

    a, b = to_matrix(q1), to_matrix(q2)
    if a.shape != b.shape:
        raise ValueError("both forms must have the same number of variables")
    return QuadricPairSystem(cfg=cfg, q1=a, q2=b)


def assemble_system(s: Stratum) -> QuadricPairSystem:
    return system_from_forms(s.gram, s.beta)
