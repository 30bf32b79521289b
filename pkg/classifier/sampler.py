# classifier/sampler.py
"""
Muestreo aleatorio de estratos validos y mutaciones que rompen una clausula.
"""
from __future__ import annotations

import random
from dataclasses import replace
from typing import List, Optional

import numpy as np

from config.constants import DEFAULT_MAX_VALUATION
from core.errors import NoSolution
from core.hermitian import diag, hyperbolic_gram, identity, matmul, matrix, witt_gram
from core.padic import (
    BaseElement,
    ExtElement,
    PrimeConfig,
    is_norm_class,
    random_base,
    random_ext,
    random_norm_unit,
    random_unit,
)
from core.stratum import Block, Stratum, StratumType, make_stratum, q_invariants, validate

MAX_ATTEMPTS = 400

# clausulas que mutate sabe romper, por tipo
MUTATION_CLAUSES = {
    StratumType.A: ("block_shape", "gram_hermitian", "skewness", "depth"),
    StratumType.B: ("block_shape", "gram_hermitian", "skewness", "depth"),
    StratumType.C: ("block_shape", "gram_hermitian", "skewness", "depth", "distinct"),
    StratumType.D: ("block_shape", "gram_hermitian", "skewness", "depth", "pairwise_distinct"),
}


def _delta_times(cfg: PrimeConfig, b: BaseElement) -> ExtElement:
    return ExtElement(BaseElement.zero(cfg), b)


def _lambdas(rng: random.Random, cfg: PrimeConfig, k: int) -> List[BaseElement]:
    """k valores normalizados con -prod(l_i) una norma."""
    out = []
    if cfg.ramified:
        for _ in range(k - 1):
            out.append(random_unit(rng, cfg))
        rest = BaseElement.from_int(cfg, -1)
        for l in out:
            rest = rest * l
        out.append(random_norm_unit(rng, cfg, is_norm_class(rest)))
        return out
    vals = [rng.randint(0, 1) for _ in range(k - 1)]
    vals.append(sum(vals) % 2)
    return [random_base(rng, cfg, v) for v in vals]


def _skew_scalar(rng: random.Random, cfg: PrimeConfig, max_val: int) -> ExtElement:
    return _delta_times(cfg, random_base(rng, cfg, rng.randint(-max_val, 0)))


# =========================
# Constructores por tipo
# =========================
def _type_a(rng: random.Random, cfg: PrimeConfig, max_val: int) -> Stratum:
    # S antihermitiana y beta = G S con G la forma de Witt (G = G^{-1})
    s = [[None] * 3 for _ in range(3)]
    for i in range(3):
        s[i][i] = _skew_scalar(rng, cfg, max_val)
        for j in range(i + 1, 3):
            x = random_ext(rng, cfg, rng.randint(-max_val, max_val))
            s[i][j] = x
            s[j][i] = -x.conj()
    gram = witt_gram(cfg)
    beta = matmul(gram, matrix(cfg, s))
    return make_stratum(cfg, StratumType.A, [gram], [beta])


def _v1(rng: random.Random, cfg: PrimeConfig, lam1: BaseElement, max_val: int):
    return diag(cfg, [lam1]), diag(cfg, [_skew_scalar(rng, cfg, max_val)])


def _type_b(rng: random.Random, cfg: PrimeConfig, max_val: int) -> Stratum:
    zero = BaseElement.zero(cfg)
    if rng.getrandbits(1):
        lam1 = random_norm_unit(rng, cfg, True) if cfg.ramified else random_unit(rng, cfg)
        g2 = hyperbolic_gram(cfg)
        t = ExtElement(random_base(rng, cfg, rng.randint(-max_val, max_val)), zero)
        # nu(s1) = nu(s2) + 1: beta_2 normaliza la sucesion de V2
        v2 = rng.randint(-max_val, -1)
        s1 = _delta_times(cfg, random_base(rng, cfg, v2 + 1))
        s2 = _delta_times(cfg, random_base(rng, cfg, v2))
        b2 = matrix(cfg, [[-t.conj(), s2], [s1, t]])
    else:
        lam1, lam2, lam3 = _lambdas(rng, cfg, 3)
        g2 = diag(cfg, [lam2, lam3])
        l2, l3 = ExtElement.from_base(lam2), ExtElement.from_base(lam3)
        s1 = _skew_scalar(rng, cfg, max_val)
        s2 = -(s1 * l3 / l2)
        t = random_ext(rng, cfg, rng.randint(-max_val, max_val))
        b2 = matrix(cfg, [[s1 / l2, t / l2], [-(t.conj() / l3), s2 / l3]])
    g1, b1 = _v1(rng, cfg, lam1, max_val)
    return make_stratum(cfg, StratumType.B, [g1, g2], [b1, b2])


def _type_c(rng: random.Random, cfg: PrimeConfig, max_val: int) -> Stratum:
    shape = None
    if rng.getrandbits(1):
        lam1 = random_norm_unit(rng, cfg, True) if cfg.ramified else random_unit(rng, cfg)
        g2 = hyperbolic_gram(cfg)
        shape = "op" if cfg.ramified else rng.choice(("oo", "op"))
    else:
        lam1, lam2, lam3 = _lambdas(rng, cfg, 3)
        g2 = diag(cfg, [lam2, lam3])
    g1, b1 = _v1(rng, cfg, lam1, max_val)
    b2 = _skew_scalar(rng, cfg, max_val)
    return make_stratum(cfg, StratumType.C, [g1, g2], [b1, diag(cfg, [b2, b2])], shape=shape)


def _type_d(rng: random.Random, cfg: PrimeConfig, max_val: int) -> Stratum:
    lams = _lambdas(rng, cfg, 3)
    vals = sorted(rng.randint(-max_val, 0) for _ in range(3))
    betas = [_delta_times(cfg, random_base(rng, cfg, v)) for v in vals]
    if rng.random() < 0.2:
        betas[2] = ExtElement.zero(cfg)
    grams = [diag(cfg, [l]) for l in lams]
    return make_stratum(cfg, StratumType.D, grams, [diag(cfg, [b]) for b in betas])


_BUILDERS = {
    StratumType.A: _type_a,
    StratumType.B: _type_b,
    StratumType.C: _type_c,
    StratumType.D: _type_d,
}


def sample_stratum(
    rng: random.Random,
    kind,
    cfg: PrimeConfig,
    max_valuation: int = DEFAULT_MAX_VALUATION,
    attempts: int = MAX_ATTEMPTS,
) -> Stratum:
    """
    Estrato aleatorio valido del tipo pedido (muestreo por rechazo).

    Raises:
        NoSolution: si ningun candidato pasa la validacion.
        ValueError: para tipos sin constructor (profundidad cero).
    """
    kind = StratumType(kind)
    if kind not in _BUILDERS:
        raise ValueError(f"cannot sample type {kind.value} strata")
    build = _BUILDERS[kind]
    for _ in range(attempts):
        s = build(rng, cfg, max_valuation)
        if not validate(s):
            return s
    raise NoSolution(f"no valid type {kind.value} stratum after {attempts} attempts ({cfg.describe()})")


# =========================
# Mutaciones
# =========================
_SWAPPED_KIND = {
    StratumType.A: StratumType.B,
    StratumType.B: StratumType.D,
    StratumType.C: StratumType.D,
    StratumType.D: StratumType.B,
}


def _with_block(s: Stratum, i: int, gram: Optional[np.ndarray] = None, beta: Optional[np.ndarray] = None) -> Stratum:
    blocks = list(s.blocks)
    old = blocks[i]
    blocks[i] = Block(gram if gram is not None else old.gram.copy(), beta if beta is not None else old.beta.copy())
    return replace(s, blocks=tuple(blocks))


def mutate(s: Stratum, clause: str) -> Stratum:
    """
    Copia de s que incumple exactamente la clausula pedida.

    Raises:
        ValueError: si la clausula no se puede romper para el tipo de s.
    """
    allowed = MUTATION_CLAUSES[s.kind]
    if clause not in allowed:
        raise ValueError(f"clause {clause!r} is not mutable for type {s.kind.value}; choose from {allowed}")
    cfg = s.cfg
    delta = ExtElement.delta(cfg)
    if clause == "block_shape":
        return replace(s, kind=_SWAPPED_KIND[s.kind])
    if clause == "depth":
        return replace(s, declared_n=q_invariants(s).n + 1)
    if clause == "gram_hermitian":
        g = s.blocks[0].gram.copy()
        k = g.shape[0]
        if k == 1:
            g[0, 0] = g[0, 0] * (ExtElement.one(cfg) + delta)
        else:
            g[0, k - 1] = g[0, k - 1] + delta
        return _with_block(s, 0, gram=g)
    if clause == "skewness":
        b = s.blocks[0].beta
        return _with_block(s, 0, beta=b + identity(cfg, b.shape[0]))
    if clause == "distinct":
        b1 = s.blocks[0].scalar
        return _with_block(s, 1, beta=diag(cfg, [b1, b1]))
    # pairwise_distinct
    return _with_block(s, 1, beta=s.blocks[0].beta.copy())
