# core/stratum.py
"""
Estratos semisimples antisimetricos de U(2,1): descomposicion V = sum V_i,
formas por bloque y beta = sum beta_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.errors import (
    IndeterminateValuation,
    PrecisionExhausted,
    UnsupportedConfiguration,
    ValidationError,
    Violation,
)
from core.hermitian import (
    block_diag,
    det,
    diag,
    hyperbolic_gram,
    is_hermitian,
    is_isotropic_plane,
    is_skew,
    mat_equal,
    witt_gram,
)
from core.padic import BaseElement, ExtElement, PrimeConfig, is_norm_class
from core.polynomials import char_poly, is_irreducible, is_square_in_F
from lattice.filtrations import nu_lambda
from lattice.sequences import LatticeSequence


class StratumType(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    # n = 0: beta nula, solo la regla de profundidad cero decide
    DEPTH_ZERO = "depth-zero"


_BLOCK_SHAPES = {
    StratumType.A: (3,),
    StratumType.B: (1, 2),
    StratumType.C: (1, 2),
    StratumType.D: (1, 1, 1),
}


@dataclass(frozen=True, eq=False)
class Block:
    gram: np.ndarray
    beta: np.ndarray

    @property
    def dim(self) -> int:
        return self.gram.shape[0]

    @property
    def scalar(self) -> ExtElement:
        return self.beta[0, 0]

    def is_witt(self) -> bool:
        if self.dim == 2:
            return mat_equal(self.gram, hyperbolic_gram(self.gram[0, 0].cfg))
        if self.dim == 3:
            return mat_equal(self.gram, witt_gram(self.gram[0, 0].cfg))
        return False

    def is_diagonal(self) -> bool:
        n = self.dim
        return all(self.gram[i, j].is_exact_zero() for i in range(n) for j in range(n) if i != j)


@dataclass(frozen=True, eq=False)
class Stratum:
    cfg: PrimeConfig
    kind: StratumType
    blocks: Tuple[Block, ...]
    shape: Optional[str] = None
    declared_n: Optional[int] = None

    @property
    def gram(self) -> np.ndarray:
        return block_diag(self.cfg, [b.gram for b in self.blocks])

    @property
    def beta(self) -> np.ndarray:
        return block_diag(self.cfg, [b.beta for b in self.blocks])

    @property
    def dim(self) -> int:
        return sum(b.dim for b in self.blocks)

    def block_indices(self, i: int) -> List[int]:
        start = sum(b.dim for b in self.blocks[:i])
        return list(range(start, start + self.blocks[i].dim))

    @property
    def basis_kind(self) -> str:
        return "orthogonal" if all(b.is_diagonal() for b in self.blocks) else "witt"

    @property
    def lambdas(self) -> List[BaseElement]:
        """h(v_i, v_i) de los vectores de una base ortogonal."""
        if self.basis_kind != "orthogonal":
            raise UnsupportedConfiguration("lambdas are defined for orthogonal bases only")
        g = self.gram
        return [g[i, i].a for i in range(self.dim)]

    @property
    def lambda1(self) -> BaseElement:
        return self.blocks[0].gram[0, 0].a

    def v2_isotropic(self) -> bool:
        if self.kind not in (StratumType.B, StratumType.C):
            raise UnsupportedConfiguration("V2 is defined for types B and C")
        return is_isotropic_plane(self.blocks[1].gram)

    @property
    def lattice_shape(self) -> Optional[str]:
        """'oo' u 'op' para V2 isotropo en los tipos C (y D via W1)."""
        if self.kind == StratumType.C and self.blocks[1].is_witt():
            if self.cfg.ramified:
                return "op"
            return self.shape or "oo"
        return self.shape

    def scalar_parts(self) -> List[Optional[BaseElement]]:
        """b_i con beta_i = d * b_i para bloques escalares (None si el bloque no es escalar)."""
        delta = ExtElement.delta(self.cfg)
        out = []
        for blk in self.blocks:
            if blk.dim == 1 or _is_scalar_block(blk.beta):
                q = blk.scalar / delta
                out.append(q.a if q.in_base() else None)
            else:
                out.append(None)
        return out

    def describe(self) -> str:
        return f"type {self.kind.value} over {self.cfg.describe()}"


def _is_scalar_block(x: np.ndarray) -> bool:
    n = x.shape[0]
    off = all(x[i, j].is_zero() for i in range(n) for j in range(n) if i != j)
    return off and all(x[i, i] == x[0, 0] for i in range(n))


def make_stratum(
    cfg: PrimeConfig,
    kind: StratumType,
    grams: Sequence[np.ndarray],
    betas: Sequence[np.ndarray],
    shape: Optional[str] = None,
    declared_n: Optional[int] = None,
) -> Stratum:
    if len(grams) != len(betas):
        raise ValueError("grams and betas must have the same number of blocks")
    blocks = tuple(Block(g, b) for g, b in zip(grams, betas))
    return Stratum(cfg=cfg, kind=StratumType(kind), blocks=blocks, shape=shape, declared_n=declared_n)


# =========================
# Sucesion de reticulos del estrato
# =========================
def attach_lattice_sequence(s: Stratum) -> LatticeSequence:
    """
    Sucesion autodual (periodo, pesos) en la base del estrato.

    Raises:
        UnsupportedConfiguration: tipo A (sucesion de periodo 6) o formas no normalizadas.
    """
    if s.kind == StratumType.A:
        raise UnsupportedConfiguration("type A strata use the period-6 sequence L4")
    cfg = s.cfg
    if s.basis_kind == "orthogonal":
        vals = tuple(ExtElement.from_base(l).valuation_F() for l in s.lambdas)
        n = len(vals)
        return LatticeSequence(2, vals, tuple(range(n)), vals)
    # V1 ortogonal + V2 hiperbolico en base (e1, e-1)
    if not s.blocks[1].is_witt():
        raise UnsupportedConfiguration("V2 must be diagonal or hyperbolic")
    nu1 = ExtElement.from_base(s.lambda1).valuation_F()
    if s.kind == StratumType.B and not cfg.ramified:
        period, w2 = 4, (1, -1)
    elif s.lattice_shape == "oo":
        period, w2 = 2, (0, 0)
    else:
        period, w2 = 2, (1, -1)
    if (period * nu1) % 2:
        raise UnsupportedConfiguration("V1 form has odd valuation for this period")
    w0 = period * nu1 // 2
    return LatticeSequence(period, (w0,) + w2, (0, 2, 1), (nu1, 0, 0))


def restrict(lam: LatticeSequence, indices: Sequence[int]) -> LatticeSequence:
    idx = list(indices)
    pos = {j: k for k, j in enumerate(idx)}
    partner = tuple(pos[lam.partner[j]] for j in idx)
    return LatticeSequence(
        lam.period,
        tuple(lam.weights[j] for j in idx),
        partner,
        tuple(lam.gram_valuations[j] for j in idx),
    )


@dataclass(frozen=True)
class QInvariants:
    n: int
    q: Tuple[Optional[int], ...]
    period: int


def _type_a_invariants(s: Stratum) -> QInvariants:
    v = det(s.beta).valuation_F()
    if v % 3:
        n = -2 * v
        period = 6
    else:
        n = -2 * v // 3
        period = 2
    return QInvariants(n=n, q=(n,), period=period)


def q_invariants(s: Stratum) -> QInvariants:
    """q_i = -nu_{Lambda_i}(beta_i) (None para beta_i = 0) y n = max q_i."""
    if s.kind == StratumType.A:
        return _type_a_invariants(s)
    lam = attach_lattice_sequence(s)
    qs: List[Optional[int]] = []
    for i, blk in enumerate(s.blocks):
        if all(x.is_exact_zero() for x in blk.beta.flat):
            qs.append(None)
            continue
        sub = restrict(lam, s.block_indices(i))
        qs.append(-nu_lambda(sub, blk.beta))
    known = [q for q in qs if q is not None]
    if not known:
        raise IndeterminateValuation("beta is zero")
    return QInvariants(n=max(known), q=tuple(qs), period=lam.period)


# =========================
# Validacion
# =========================
def _lambda_normalized(cfg: PrimeConfig, lam: BaseElement) -> bool:
    if lam.is_zero():
        return False
    if cfg.ramified:
        return lam.valuation() == 0
    return lam.valuation() in (0, 1)


def _check_forms(s: Stratum, out: List[Violation]) -> None:
    cfg = s.cfg
    for i, blk in enumerate(s.blocks):
        if not is_hermitian(blk.gram):
            out.append(Violation("gram_hermitian", f"block {i + 1} form is not hermitian"))
            continue
        if det(blk.gram).is_zero():
            out.append(Violation("nondegenerate", f"block {i + 1} form is degenerate"))
            continue
        if s.kind == StratumType.A:
            if not blk.is_witt():
                out.append(Violation("gram_normalization", "type A needs the Witt form antidiag(1,1,1)"))
        elif blk.is_diagonal():
            for k in range(blk.dim):
                lam = blk.gram[k, k]
                if not lam.in_base() or not _lambda_normalized(cfg, lam.a):
                    out.append(Violation(
                        "gram_normalization",
                        f"block {i + 1} diagonal entry {lam.to_literal()} has unsupported valuation",
                    ))
        elif not blk.is_witt():
            out.append(Violation("gram_normalization", f"block {i + 1} is neither diagonal nor hyperbolic"))
    if out:
        return
    d = det(s.gram)
    if not d.in_base() or not is_norm_class(-d.a):
        out.append(Violation("ambient_det", "-det(G) must be a norm from F"))


def _check_skew(s: Stratum, out: List[Violation]) -> None:
    for i, blk in enumerate(s.blocks):
        if not is_skew(blk.gram, blk.beta):
            out.append(Violation("skewness", f"beta_{i + 1} is not skew for h"))


def _unit_difference(bi: ExtElement, bj: ExtElement) -> bool:
    ratio = ExtElement.one(bi.cfg) - bj / bi
    return not ratio.is_zero() and ratio.valuation_F() == 0


def _check_type_b(s: Stratum, q: QInvariants, out: List[Violation]) -> None:
    b2 = s.blocks[1].beta
    if not (b2[0, 0] + b2[1, 1]).is_zero():
        out.append(Violation("normalization", "beta_2 must have trace zero"))
        return
    alpha = -(b2[0, 0] * b2[1, 1] - b2[0, 1] * b2[1, 0])
    if alpha.is_zero():
        out.append(Violation("irreducible", "beta_2 is nilpotent"))
        return
    # F[beta_2] = F(sqrt(alpha)) ramifica sobre F sii nu_F(alpha) es impar
    try:
        e_ramified = alpha.valuation_F() % 2 == 1
    except IndeterminateValuation as exc:
        out.append(Violation("ramification", f"undecided: {exc}"))
        return
    if e_ramified == s.cfg.ramified:
        base = "ramified" if s.cfg.ramified else "unramified"
        want = "unramified" if s.cfg.ramified else "ramified"
        out.append(Violation("ramification", f"F[beta_2]/F must be {want} when F/F0 is {base}"))
        return
    try:
        if is_square_in_F(alpha):
            out.append(Violation("irreducible", "beta_2 does not generate a quadratic field over F"))
            return
    except PrecisionExhausted as exc:
        out.append(Violation("irreducible", f"undecided: {exc}"))
        return
    q1, q2 = q.q
    sub = restrict(attach_lattice_sequence(s), s.block_indices(1))
    if nu_lambda(sub, diag(s.cfg, [alpha, alpha])) != -2 * q2:
        out.append(Violation(
            "lattice_normalized",
            f"beta_2 does not normalize its lattice sequence: nu(beta_2^2) != 2 nu(beta_2) = {-2 * q2}",
        ))
        return
    if q1 is None or q1 == q2:
        out.append(Violation("q_distinct", f"q1={q1} and q2={q2} must differ"))
        return
    iso = s.v2_isotropic()
    if s.cfg.ramified:
        ok = q2 % 4 == 0 and q1 % 4 == 2
        rule = "q2 = 0 mod 4 and q1 = 2 mod 4"
    elif iso:
        ok = q2 % 4 == 2 and q1 % 4 == 0
        rule = "q2 = 2 mod 4 and q1 = 0 mod 4"
    else:
        ok = q2 % 2 == 1 and q1 % 2 == 0
        rule = "q2 odd and q1 even"
    if not ok:
        out.append(Violation("q_parity", f"expected {rule}, got q1={q1}, q2={q2}"))


def _check_type_c(s: Stratum, q: QInvariants, out: List[Violation]) -> None:
    if not _is_scalar_block(s.blocks[1].beta):
        out.append(Violation("scalar_block", "beta_2 must be a scalar on V2"))
        return
    if s.shape not in (None, "oo", "op"):
        out.append(Violation("shape", f"unknown lattice shape {s.shape!r}"))
    if s.cfg.ramified and s.shape == "oo" and s.blocks[1].is_witt():
        out.append(Violation("shape", "ramified isotropic V2 carries the o + p shape"))
    b1, b2 = s.blocks[0].scalar, s.blocks[1].scalar
    if (b1 - b2).is_zero():
        out.append(Violation("distinct", "beta_1 and beta_2 coincide"))
    elif not b1.is_zero() and not b2.is_zero() and b1.valuation_F() == b2.valuation_F():
        if not _unit_difference(b1, b2):
            out.append(Violation("distinct", "1 - beta_2/beta_1 must be a unit"))
    for i, qi in enumerate(q.q):
        if qi is not None and qi <= 0:
            out.append(Violation("minimality", f"q_{i + 1}={qi} must be positive after twisting"))


def _check_type_d(s: Stratum, q: QInvariants, out: List[Violation]) -> None:
    betas = [blk.scalar for blk in s.blocks]
    zeros = [i for i, b in enumerate(betas) if b.is_zero()]
    if len(zeros) > 1:
        out.append(Violation("at_most_one_zero", f"beta components {[i + 1 for i in zeros]} vanish"))
        return
    if zeros and zeros[0] != 2:
        out.append(Violation("ordering", "only beta_3 may vanish"))
        return
    nus = [-qi if qi is not None else None for qi in q.q]
    known = [v for v in nus if v is not None]
    if known != sorted(known) or known[-1] > 0:
        out.append(Violation("ordering", f"need nu(beta_1) <= nu(beta_2) <= nu(beta_3) <= 0, got {nus}"))
    for i in range(3):
        for j in range(i + 1, 3):
            bi, bj = betas[i], betas[j]
            if (bi - bj).is_zero():
                out.append(Violation("pairwise_distinct", f"beta_{i + 1} = beta_{j + 1}"))
            elif nus[i] is not None and nus[i] == nus[j] and not _unit_difference(bi, bj):
                out.append(Violation("unit_differences", f"1 - beta_{j + 1}/beta_{i + 1} is not a unit"))


def validate(s: Stratum) -> List[Violation]:
    """Lista de clausulas incumplidas (vacia si el estrato es valido)."""
    out: List[Violation] = []
    if s.kind not in _BLOCK_SHAPES:
        return [Violation("block_shape", "depth-zero strata carry no beta; use the depth-zero rule")]
    shapes = tuple(b.dim for b in s.blocks)
    if shapes != _BLOCK_SHAPES[s.kind]:
        return [Violation("block_shape", f"type {s.kind.value} needs blocks {_BLOCK_SHAPES[s.kind]}, got {shapes}")]
    _check_forms(s, out)
    if out:
        return out
    _check_skew(s, out)
    if out:
        return out
    try:
        q = q_invariants(s)
    except (IndeterminateValuation, UnsupportedConfiguration) as exc:
        return [Violation("depth", str(exc))]
    if q.n <= 0:
        out.append(Violation("depth", f"n={q.n} must be positive"))
    if s.declared_n is not None and s.declared_n != q.n:
        out.append(Violation("depth", f"declared n={s.declared_n} but nu_Lambda(beta) = {-q.n}"))
    if s.kind == StratumType.A:
        try:
            if not is_irreducible(char_poly(s.beta)):
                out.append(Violation("irreducible", "characteristic polynomial has a root in F"))
        except PrecisionExhausted as exc:
            out.append(Violation("irreducible", f"undecided: {exc}"))
    elif s.kind == StratumType.B:
        _check_type_b(s, q, out)
    elif s.kind == StratumType.C:
        _check_type_c(s, q, out)
    else:
        _check_type_d(s, q, out)
    return out


def validate_or_raise(s: Stratum) -> Stratum:
    violations = validate(s)
    if violations:
        raise ValidationError(violations)
    return s
