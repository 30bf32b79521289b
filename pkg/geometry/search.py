# geometry/search.py
"""
Busqueda exhaustiva de puntos de X_beta sobre o_F0 / p^k.

Orden determinista:
  1. vectores de pesos por coordenada de F (min 0), ordenados por (max, tupla);
  2. para cada peso, puntos proyectivos modulo p con la primera coordenada
     unidad fijada a 1 (posicion barrida de 0 a 5);
  3. refinamiento digito a digito (mejor primero) de los puntos singulares.

NotFound no demuestra vacuidad: solo dice que no hubo punto certificado.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from config.constants import (
    DEFAULT_MAX_WEIGHT,
    DEFAULT_NODE_BUDGET,
    DEFAULT_WEIGHT_CHUNK,
    MIN_SEARCH_DEPTH,
)
from geometry.hensel import HenselCertificate, Rejected, Witness, certify_scaled
from geometry.system import QuadricPairSystem, ScaledSystem

RESIDUE_LIMIT = 200_000
SEEDS_PER_WEIGHT = 64

__all__ = ["SearchResult", "Witness", "brute_search", "weight_vectors"]


@dataclass(frozen=True)
class SearchResult:
    status: str
    depth: int
    witness: Optional[Witness] = None
    certificate: Optional[HenselCertificate] = None
    nodes: int = 0
    weights_scanned: int = 0
    exhausted: bool = False
    rejected: Tuple[Rejected, ...] = field(default_factory=tuple)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_text(self) -> str:
        lines = [f"status         : {self.status}", f"depth          : {self.depth}"]
        if self.witness is not None:
            lines.append(self.witness.to_text())
        if self.certificate is not None:
            lines.append(self.certificate.to_text())
        lines.append(f"nodes          : {self.nodes}")
        return "\n".join(lines)


def weight_vectors(max_weight: int, coords: int = 3) -> List[Tuple[int, ...]]:
    vecs = [w for w in itertools.product(range(max_weight + 1), repeat=coords) if min(w) == 0]
    return sorted(vecs, key=lambda w: (max(w), w))


# =========================
# Fase 1: puntos modulo p
# =========================
def _residue_block(p: int, pin: int, size: int) -> np.ndarray:
    free = size - pin - 1
    count = min(p ** free, RESIDUE_LIMIT)
    idx = np.arange(count, dtype=np.int64)
    z = np.zeros((count, size), dtype=np.int64)
    z[:, pin] = 1
    for k in range(free):
        z[:, size - 1 - k] = (idx // p ** k) % p
    return z


def _scan_weight(system: QuadricPairSystem, weights: Tuple[int, ...], depth: int):
    """
    Candidatos modulo p de un vector de pesos.

    Returns:
        (primer punto aceptado o None, semillas singulares para el refinamiento)
    """
    scaled = system.rescaled(weights)
    p, size = scaled.p, scaled.size
    r1, r2 = scaled.residue_forms()
    seeds = []
    for pin in range(size):
        z = _residue_block(p, pin, size)
        q1 = np.einsum("ni,ij,nj->n", z, r1, z) % p
        q2 = np.einsum("ni,ij,nj->n", z, r2, z) % p
        hits = z[(q1 == 0) & (q2 == 0)]
        # solo puntos primitivos en las coordenadas originales
        hits = hits[scaled.primitive_mask(hits)]
        if not len(hits):
            continue
        g1 = (2 * hits @ r1) % p
        g2 = (2 * hits @ r2) % p
        smooth = np.zeros(len(hits), dtype=bool)
        for a, b in itertools.combinations(range(size), 2):
            smooth |= (g1[:, a] * g2[:, b] - g1[:, b] * g2[:, a]) % p != 0
        for row, is_smooth in zip(hits, smooth):
            point = [int(x) for x in row]
            m = scaled.residual(point)
            if is_smooth or m >= depth:
                cert, lifted = certify_scaled(scaled, point)
                if isinstance(cert, HenselCertificate):
                    return (pin, lifted, cert), seeds
                if m >= depth:
                    return (pin, point, None), seeds
            if len(seeds) < SEEDS_PER_WEIGHT:
                seeds.append((pin, point, m))
    return None, seeds


# =========================
# Fase 2: refinamiento
# =========================
def _digit_block(p: int, pin: int, size: int) -> np.ndarray:
    """Todos los vectores de digitos con 0 en la coordenada fijada."""
    free = [k for k in range(size) if k != pin]
    count = min(p ** len(free), RESIDUE_LIMIT)
    idx = np.arange(count, dtype=np.int64)
    t = np.zeros((count, size), dtype=np.int64)
    for pos, k in enumerate(reversed(free)):
        t[:, k] = (idx // p ** pos) % p
    return t


def _children(scaled: ScaledSystem, z: List[int], level: int, pin: int, blocks: dict, cap: int) -> List[List[int]]:
    """Hijos z + p^level t con Q = 0 mod p^(level+1); condicion lineal en t."""
    p = scaled.p
    step = p ** level
    v1, v2 = scaled.values(z)
    r = np.array([(v1 // step) % p, (v2 // step) % p], dtype=np.int64)
    g1, g2 = scaled.gradients(z)
    g = np.array([[x % p for x in g1], [x % p for x in g2]], dtype=np.int64)
    key = (p, pin, scaled.size)
    if key not in blocks:
        blocks[key] = _digit_block(p, pin, scaled.size)
    t = blocks[key]
    ok = np.all((t @ g.T + r) % p == 0, axis=1)
    out = []
    for row in t[ok][:cap]:
        out.append([(zk + step * int(tk)) % scaled.modulus for zk, tk in zip(z, row)])
    return out


def brute_search(
    system: QuadricPairSystem,
    depth: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_weight: int = DEFAULT_MAX_WEIGHT,
    threads: int = 1,
    chunk: int = DEFAULT_WEIGHT_CHUNK,
) -> SearchResult:
    """
    Primer punto (en orden determinista) con nivel residual >= depth.

    Raises:
        ValueError: si depth < MIN_SEARCH_DEPTH.
    """
    if depth < MIN_SEARCH_DEPTH:
        raise ValueError(f"Search depth {depth} must be >= {MIN_SEARCH_DEPTH}")
    depth = min(depth, system.cfg.precision)
    weights = weight_vectors(max_weight, system.size // 2)

    all_seeds = []
    scanned = 0
    for start in range(0, len(weights), chunk):
        batch = weights[start:start + chunk]
        results = Parallel(n_jobs=threads)(
            delayed(_scan_weight)(system, w, depth) for w in batch
        )
        for w, (hit, seeds) in zip(batch, results):
            scanned += 1
            if hit is not None:
                pin, lifted, cert = hit
                scaled = system.rescaled(w)
                witness = Witness(
                    point=scaled.to_original(lifted),
                    residual_level=scaled.residual(lifted),
                    weights=w,
                    scaled=tuple(lifted),
                    pin=pin,
                )
                return SearchResult("Witness", depth, witness, cert, nodes=0, weights_scanned=scanned)
            all_seeds.extend((w, pin, point, m) for pin, point, m in seeds)

    # refinamiento mejor primero sobre las semillas singulares
    heap = []
    counter = itertools.count()
    scaled_cache = {}
    for w, pin, point, m in all_seeds:
        heapq.heappush(heap, (-m, next(counter), w, pin, point, 1))
    blocks: dict = {}
    nodes = 0
    rejected = []
    while heap and nodes < node_budget:
        neg_m, _, w, pin, z, level = heapq.heappop(heap)
        nodes += 1
        if w not in scaled_cache:
            scaled_cache[w] = system.rescaled(w)
        scaled = scaled_cache[w]
        cert, lifted = certify_scaled(scaled, z)
        if isinstance(cert, HenselCertificate) or -neg_m >= depth:
            point = lifted if lifted is not None else z
            if not isinstance(cert, HenselCertificate):
                rejected.append(cert)
                cert = None
            witness = Witness(
                point=scaled.to_original(point),
                residual_level=scaled.residual(point),
                weights=w,
                scaled=tuple(point),
                pin=pin,
            )
            return SearchResult("Witness", depth, witness, cert, nodes, scanned, rejected=tuple(rejected))
        if level >= scaled.precision:
            continue
        for child in _children(scaled, z, level, pin, blocks, scaled.p ** 2):
            heapq.heappush(heap, (-scaled.residual(child), next(counter), w, pin, child, level + 1))
    return SearchResult(
        "NotFound", depth, nodes=nodes, weights_scanned=scanned, exhausted=not heap, rejected=tuple(rejected)
    )
