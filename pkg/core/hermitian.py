# core/hermitian.py
"""
Formas hermitianas, matrices sobre F y generadores de U(2,1).

Convencion: h(v, w) = sum_ij v_i sigma(w_j) G_ij = v^T G sigma(w), lineal en el
primer argumento. g es unitario sii g^T G sigma(g) = G. La adjunta respecto de h
es X -> G^{-1} sigma(X)^T G.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from core.errors import (
    ConstraintViolated,
    DivisionByApparentZero,
    NoSolution,
    UnsupportedConfiguration,
)
from core.padic import (
    BaseElement,
    ExtElement,
    PrimeConfig,
    is_norm_class,
    random_base,
    random_ext,
    solve_norm_equation,
)


# =========================
# Matrices sobre F
# =========================
def as_ext(cfg: PrimeConfig, x) -> ExtElement:
    if isinstance(x, ExtElement):
        return x
    if isinstance(x, BaseElement):
        return ExtElement.from_base(x)
    return ExtElement.from_int(cfg, int(x))


def matrix(cfg: PrimeConfig, rows: Sequence[Sequence]) -> np.ndarray:
    n, m = len(rows), len(rows[0])
    out = np.empty((n, m), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = as_ext(cfg, x)
    return out


def zeros(cfg: PrimeConfig, n: int, m: Optional[int] = None) -> np.ndarray:
    m = n if m is None else m
    return matrix(cfg, [[0] * m for _ in range(n)])


def identity(cfg: PrimeConfig, n: int) -> np.ndarray:
    return matrix(cfg, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def diag(cfg: PrimeConfig, values: Iterable) -> np.ndarray:
    values = list(values)
    out = zeros(cfg, len(values))
    for i, x in enumerate(values):
        out[i, i] = as_ext(cfg, x)
    return out


def block_diag(cfg: PrimeConfig, blocks: Sequence[np.ndarray]) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = zeros(cfg, n)
    k = 0
    for b in blocks:
        s = b.shape[0]
        out[k:k + s, k:k + s] = b
        k += s
    return out


def conj_matrix(x: np.ndarray) -> np.ndarray:
    return np.vectorize(lambda z: z.conj(), otypes=[object])(x)


def scale(x: np.ndarray, c: ExtElement) -> np.ndarray:
    return np.vectorize(lambda z: z * c, otypes=[object])(x)


def matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    n, k = x.shape
    k2, m = y.shape
    if k != k2:
        raise ValueError(f"shape mismatch {x.shape} @ {y.shape}")
    out = np.empty((n, m), dtype=object)
    for i in range(n):
        for j in range(m):
            acc = x[i, 0] * y[0, j]
            for t in range(1, k):
                acc = acc + x[i, t] * y[t, j]
            out[i, j] = acc
    return out


def mat_equal(x: np.ndarray, y: np.ndarray) -> bool:
    return x.shape == y.shape and all(a == b for a, b in zip(x.flat, y.flat))


def is_zero_matrix(x: np.ndarray) -> bool:
    return all(z.is_zero() for z in x.flat)


def det2(m: np.ndarray) -> ExtElement:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def det3(m: np.ndarray) -> ExtElement:
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def det(m: np.ndarray) -> ExtElement:
    n = m.shape[0]
    if n == 1:
        return m[0, 0]
    if n == 2:
        return det2(m)
    if n == 3:
        return det3(m)
    raise ValueError(f"determinant only implemented up to 3x3, got {n}x{n}")


def inverse(m: np.ndarray) -> np.ndarray:
    """Inversa por adjunta clasica (n <= 3)."""
    n = m.shape[0]
    d = det(m)
    if d.is_zero():
        raise DivisionByApparentZero("singular matrix")
    dinv = d.inverse()
    cfg = d.cfg
    if n == 1:
        return matrix(cfg, [[dinv]])
    if n == 2:
        return matrix(cfg, [[m[1, 1] * dinv, -m[0, 1] * dinv], [-m[1, 0] * dinv, m[0, 0] * dinv]])
    out = zeros(cfg, 3)
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != j]
            cols = [c for c in range(3) if c != i]
            minor = m[np.ix_(rows, cols)]
            sign = 1 if (i + j) % 2 == 0 else -1
            out[i, j] = det2(minor) * dinv * sign
    return out


# =========================
# Formas hermitianas
# =========================
def h_eval(gram: np.ndarray, v: Sequence[ExtElement], w: Sequence[ExtElement]) -> ExtElement:
    n = gram.shape[0]
    acc = ExtElement.zero(gram[0, 0].cfg)
    for i in range(n):
        for j in range(n):
            if not gram[i, j].is_exact_zero():
                acc = acc + v[i] * w[j].conj() * gram[i, j]
    return acc


def apply(x: np.ndarray, v: Sequence[ExtElement]) -> list:
    n, m = x.shape
    return [sum((x[i, j] * v[j] for j in range(m)), ExtElement.zero(x[0, 0].cfg)) for i in range(n)]


def is_hermitian(gram: np.ndarray) -> bool:
    return mat_equal(gram.T, conj_matrix(gram))


def adjoint(gram: np.ndarray, x: np.ndarray) -> np.ndarray:
    return matmul(matmul(inverse(gram), conj_matrix(x).T), gram)


def is_skew(gram: np.ndarray, x: np.ndarray) -> bool:
    return mat_equal(adjoint(gram, x), -x)


def is_unitary(gram: np.ndarray, g: np.ndarray) -> bool:
    return mat_equal(matmul(matmul(g.T, gram), conj_matrix(g)), gram)


def witt_gram(cfg: PrimeConfig) -> np.ndarray:
    """Base (e1, e0, e-1) con h(e1, e-1) = h(e0, e0) = 1."""
    return matrix(cfg, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def hyperbolic_gram(cfg: PrimeConfig) -> np.ndarray:
    return matrix(cfg, [[0, 1], [1, 0]])


def is_isotropic_binary(l1: BaseElement, l2: BaseElement) -> bool:
    """<v1, v2> con h = diag(l1, l2) es isotropo sii -l1*l2 es norma."""
    return is_norm_class(-(l1 * l2))


def is_isotropic_plane(gram2: np.ndarray) -> bool:
    """Plano hermitiano no degenerado: isotropo sii -det es norma."""
    d = det2(gram2)
    if not d.in_base():
        raise ValueError("determinant of a hermitian form must lie in F0")
    return is_norm_class(-d.a)


# =========================
# Generadores del grupo
# =========================
def _check_unipotent(c: ExtElement, d: ExtElement) -> None:
    if not (c * c.conj() + d + d.conj()).is_zero():
        raise ConstraintViolated(
            f"c*sigma(c) + d + sigma(d) != 0 for c={c.to_literal()}, d={d.to_literal()}"
        )


def make_unipotent(c: ExtElement, d: ExtElement, lower: bool = False) -> np.ndarray:
    """u(c, d) triangular superior o su version inferior, en base de Witt."""
    _check_unipotent(c, d)
    cfg = c.cfg
    if lower:
        return matrix(cfg, [[1, 0, 0], [c, 1, 0], [d, -c.conj(), 1]])
    return matrix(cfg, [[1, c, d], [0, 1, -c.conj()], [0, 0, 1]])


def make_torus(z: ExtElement, z_mid: ExtElement) -> np.ndarray:
    if not (z_mid.norm() - 1).is_zero():
        raise ConstraintViolated(f"middle torus entry {z_mid.to_literal()} must have norm 1")
    return diag(z.cfg, [z, z_mid, z.conj().inverse()])


def unipotent_partner(c: ExtElement, re_part: BaseElement = None) -> ExtElement:
    """Un d con c*sigma(c) + d + sigma(d) = 0 (parte en d*F0 libre)."""
    cfg = c.cfg
    half = BaseElement.from_fraction(cfg, Fraction(-1, 2))
    im = re_part if re_part is not None else BaseElement.zero(cfg)
    return ExtElement(c.norm() * half, im)


def random_unitary(rng: random.Random, cfg: PrimeConfig, steps: int = 3, max_val: int = 2) -> np.ndarray:
    """Producto aleatorio de unipotentes y toros en la base de Witt."""
    g = identity(cfg, 3)
    for _ in range(steps):
        c = random_ext(rng, cfg, rng.randint(-max_val, max_val))
        d = unipotent_partner(c, random_base(rng, cfg, rng.randint(-max_val, max_val)))
        g = matmul(g, make_unipotent(c, d, lower=bool(rng.getrandbits(1))))
        z = random_ext(rng, cfg, rng.randint(-max_val, max_val))
        g = matmul(g, make_torus(z, ExtElement.one(cfg)))
    return g


def conjugation_identity(x: ExtElement, y: ExtElement, a: ExtElement) -> bool:
    """
    Comprueba la formula cerrada de lbar(x, y) u(0, a) lbar(-x, -y - x sigma(x)).

    Raises:
        ConstraintViolated: si (x, y) no define un unipotente o a no esta en d*F0.
    """
    cfg = x.cfg
    if not (a + a.conj()).is_zero():
        raise ConstraintViolated(f"a={a.to_literal()} must satisfy a + sigma(a) = 0")
    zero = ExtElement.zero(cfg)
    nx = x * x.conj()
    left = matmul(
        matmul(make_unipotent(x, y, lower=True), make_unipotent(zero, a)),
        make_unipotent(-x, -y - nx, lower=True),
    )
    sx = x.conj()
    right = matrix(cfg, [
        [1 - a * (nx + y), a * sx, a],
        [a * x * (-y - nx), 1 + a * nx, a * x],
        [-(a * y * (y + nx)), a * sx * y, a * y + 1],
    ])
    return mat_equal(left, right)


# =========================
# Bases de Witt
# =========================
@dataclass(frozen=True)
class WittPair:
    """e1, e-1 en coordenadas (v1, v3) y la forma del reticulo o v1 + o v3 = p^a e1 + p^b e-1."""
    e1: Tuple[ExtElement, ExtElement]
    em1: Tuple[ExtElement, ExtElement]
    shape: Tuple[int, int]


def witt_from_anisotropic_pair(l1: BaseElement, l3: BaseElement) -> WittPair:
    """
    Base de Witt de un plano isotropo <v1, v3> con h = diag(l1, l3).

    Raises:
        NoSolution: si el plano es anisotropo.
        UnsupportedConfiguration: si nu(l1) != nu(l3).
    """
    cfg = l1.cfg
    if l1.valuation() != l3.valuation():
        raise UnsupportedConfiguration("Witt basis needs nu(l1) = nu(l3)")
    eps = solve_norm_equation(-(l3 / l1))
    one = ExtElement.one(cfg)
    half = ExtElement.from_int(cfg, 2).inverse()
    l3e = ExtElement.from_base(l3)
    e1 = (eps * half, half)
    em1 = (-(eps / l3e), one / l3e)
    b = l3e.valuation_F()
    # cambio de base (v1, v3) -> (e1, pi^b e-1): entero con determinante unidad
    pib = ExtElement.uniformizer(cfg) ** b
    coeff = l3e * half / pib
    change = matrix(cfg, [[eps.inverse(), eps.inverse() * -coeff], [one, coeff]])
    d = det2(change)
    if any(x.valuation_F() < 0 for x in change.flat if not x.is_zero()) or d.valuation_F() != 0:
        raise NoSolution("lattice identity failed for the constructed Witt pair")
    return WittPair(e1=e1, em1=em1, shape=(0, b))


# =========================
# Caracter en el radical derivado
# =========================
@dataclass(frozen=True)
class CharacterCheck:
    nontrivial: bool
    pairing: ExtElement
    level: int
    trace_identity: Optional[bool]


def char_nontrivial(g: np.ndarray, gram: np.ndarray, beta: np.ndarray, r: int, side: str = "upper") -> CharacterCheck:
    """
    Decide si psi_beta^g es no trivial en el radical derivado de nivel r.

    El valor relevante es d*h(g e, beta g e) en F0, con e el primer vector de la
    base (lado superior) o el ultimo (lado inferior). Con la forma de Witt se
    compara ademas con la entrada de g^{-1} beta g que da la traza.
    """
    if side not in ("upper", "lower"):
        raise ValueError(f"side must be 'upper' or 'lower', got {side!r}")
    if not is_unitary(gram, g):
        raise ConstraintViolated("g is not unitary for the given form")
    cfg = gram[0, 0].cfg
    n = gram.shape[0]
    idx = 0 if side == "upper" else n - 1
    ge = [g[i, idx] for i in range(n)]
    bge = apply(beta, ge)
    h = h_eval(gram, ge, bge)
    value = ExtElement.delta(cfg) * h
    if not value.in_base():
        raise ConstraintViolated("h(ge, beta ge) is not in d*F0; beta is not skew")
    level = -value.a.valuation()
    trace_ok = None
    if mat_equal(gram, witt_gram(cfg)):
        conj_beta = matmul(matmul(adjoint(gram, g), beta), g)
        entry = conj_beta[n - 1, 0] if side == "upper" else conj_beta[0, n - 1]
        trace_ok = entry == h.conj()
    return CharacterCheck(nontrivial=r <= level, pairing=value, level=level, trace_identity=trace_ok)


# =========================
# Clases de determinante y Weyl
# =========================
def det_class(gram: np.ndarray) -> str:
    """Clase de det(G) en F0^x / Nr(F^x): 'trivial' o 'nontrivial'."""
    d = det(gram)
    if not d.in_base():
        raise ValueError("determinant of a hermitian form must lie in F0")
    return "trivial" if is_norm_class(d.a) else "nontrivial"


def is_isotropic_space(gram: np.ndarray) -> bool:
    """Dimension 1: nunca; 2: -det es norma; 3: siempre."""
    n = gram.shape[0]
    if n == 1:
        return False
    if n == 2:
        return is_isotropic_plane(gram)
    if n == 3:
        return True
    raise ValueError(f"hermitian spaces of dimension {n} are not modelled")


WEYL_ELEMENTS = ("id", "w")


def weyl_matrix(cfg: PrimeConfig, w: str) -> np.ndarray:
    """Representante en la base de Witt; w intercambia e1 y e-1."""
    if w == "id":
        return identity(cfg, 3)
    if w == "w":
        return matrix(cfg, [[0, 0, 1], [0, -1, 0], [1, 0, 0]])
    raise ValueError(f"Weyl element must be 'id' or 'w', got {w!r}")
