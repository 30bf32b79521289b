# harness/input_file.py
"""
Formato de fichero de estratos.

Secciones por lineas, claves `key = value` y comentarios con '#':

    [field]
    p = 5
    ramified = false
    precision = 24        # opcional
    nonsquare = 2         # opcional (no ramificado)

    [stratum]
    type = C
    shape = op            # opcional
    n = 4                 # opcional, se contrasta con nu_Lambda(beta)
    gram1 = [1*p^0]
    beta1 = [(1*p^-2)*d]
    gram2 = [0, 1; 1, 0]
    beta2 = [(2*p^-1)*d, 0; 0, (2*p^-1)*d]

Las matrices usan ';' entre filas y ',' entre entradas; las entradas son
literales de F (u*p^k, (u1*p^k1) + (u2*p^k2)*d, d, -d, 0).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.constants import DEFAULT_PRECISION
from core.errors import ParseError
from core.hermitian import matrix
from core.padic import PrimeConfig, parse_ext_literal
from core.stratum import Stratum, StratumType, make_stratum

SECTIONS = ("field", "stratum")
_SECTION_RE = re.compile(r"^\[(?P<name>[A-Za-z_]+)\]$")
_KEY_RE = re.compile(r"^(?P<key>[A-Za-z_][A-Za-z0-9_]*)\s*=\s*(?P<value>.*)$")
_BLOCK_KEY_RE = re.compile(r"^(?P<what>gram|beta)(?P<idx>[1-9])$")
_TRUE = ("true", "yes", "1")
_FALSE = ("false", "no", "0")


@dataclass
class _Entry:
    value: str
    line: int
    column: int


@dataclass
class _Sections:
    data: Dict[str, Dict[str, _Entry]] = field(default_factory=dict)

    def get(self, section: str, key: str) -> Optional[_Entry]:
        return self.data.get(section, {}).get(key)


def _strip_comment(raw: str) -> str:
    pos = raw.find("#")
    return raw if pos < 0 else raw[:pos]


def _tokenize(text: str) -> _Sections:
    out = _Sections()
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        stripped = body.strip()
        if not stripped:
            continue
        col = len(body) - len(body.lstrip()) + 1
        m = _SECTION_RE.match(stripped)
        if m:
            name = m.group("name").lower()
            if name not in SECTIONS:
                raise ParseError(lineno, col, f"unknown section [{name}]")
            if name in out.data:
                raise ParseError(lineno, col, f"duplicate section [{name}]")
            out.data[name] = {}
            current = name
            continue
        m = _KEY_RE.match(stripped)
        if not m:
            raise ParseError(lineno, col, f"expected 'key = value' or a [section], got {stripped!r}")
        if current is None:
            raise ParseError(lineno, col, "key outside of a section")
        key = m.group("key").lower()
        if key in out.data[current]:
            raise ParseError(lineno, col, f"duplicate key {key!r} in [{current}]")
        value_col = col + m.start("value")
        out.data[current][key] = _Entry(m.group("value").strip(), lineno, value_col)
    return out


def _require(sections: _Sections, section: str, key: str) -> _Entry:
    entry = sections.get(section, key)
    if entry is None:
        raise ParseError(0, 0, f"missing key {key!r} in [{section}]")
    return entry


def _parse_int(entry: _Entry) -> int:
    try:
        return int(entry.value)
    except ValueError:
        raise ParseError(entry.line, entry.column, f"expected an integer, got {entry.value!r}")


def _parse_bool(entry: _Entry) -> bool:
    v = entry.value.lower()
    if v in _TRUE:
        return True
    if v in _FALSE:
        return False
    raise ParseError(entry.line, entry.column, f"expected true/false, got {entry.value!r}")


def _parse_field(sections: _Sections, default_precision: int) -> PrimeConfig:
    if "field" not in sections.data:
        raise ParseError(0, 0, "missing [field] section")
    p_entry = _require(sections, "field", "p")
    p = _parse_int(p_entry)
    ram_entry = sections.get("field", "ramified")
    ramified = _parse_bool(ram_entry) if ram_entry is not None else False
    prec_entry = sections.get("field", "precision")
    precision = _parse_int(prec_entry) if prec_entry is not None else default_precision
    ns_entry = sections.get("field", "nonsquare")
    nonsquare = _parse_int(ns_entry) if ns_entry is not None else None
    try:
        return PrimeConfig.make(p, ramified, nonsquare, precision)
    except ValueError as exc:
        raise ParseError(p_entry.line, p_entry.column, str(exc))


def parse_matrix(cfg: PrimeConfig, entry: _Entry) -> np.ndarray:
    """'[a, b; c, d]' -> matriz de ExtElement."""
    text = entry.value
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(entry.line, entry.column, f"matrix literal must be bracketed, got {text!r}")
    rows: List[List] = []
    offset = 1
    for row_text in text[1:-1].split(";"):
        row = []
        for cell in row_text.split(","):
            lead = len(cell) - len(cell.lstrip())
            row.append(parse_ext_literal(cfg, cell, entry.line, entry.column + offset + lead))
            offset += len(cell) + 1
        rows.append(row)
    width = len(rows[0])
    if any(len(r) != width for r in rows) or width != len(rows):
        raise ParseError(entry.line, entry.column, f"matrix literal must be square, got {text!r}")
    return matrix(cfg, rows)


def _block_entries(sections: _Sections) -> Tuple[List[_Entry], List[_Entry]]:
    grams: Dict[int, _Entry] = {}
    betas: Dict[int, _Entry] = {}
    for key, entry in sections.data["stratum"].items():
        m = _BLOCK_KEY_RE.match(key)
        if not m:
            if key not in ("type", "shape", "n"):
                raise ParseError(entry.line, entry.column, f"unknown key {key!r} in [stratum]")
            continue
        target = grams if m.group("what") == "gram" else betas
        target[int(m.group("idx"))] = entry
    count = max(list(grams) + list(betas), default=0)
    if count == 0:
        raise ParseError(0, 0, "[stratum] has no gram/beta blocks")
    for i in range(1, count + 1):
        if i not in grams or i not in betas:
            raise ParseError(0, 0, f"block {i} needs both gram{i} and beta{i}")
    return [grams[i] for i in range(1, count + 1)], [betas[i] for i in range(1, count + 1)]


def parse_stratum_text(text: str, default_precision: int = DEFAULT_PRECISION) -> Stratum:
    """
    Raises:
        ParseError: con linea y columna (0 si falta una clave).
    """
    sections = _tokenize(text)
    cfg = _parse_field(sections, default_precision)
    if "stratum" not in sections.data:
        raise ParseError(0, 0, "missing [stratum] section")
    kind_entry = _require(sections, "stratum", "type")
    try:
        kind = StratumType(kind_entry.value.upper())
    except ValueError:
        raise ParseError(kind_entry.line, kind_entry.column, f"type must be A, B, C or D, got {kind_entry.value!r}")
    shape_entry = sections.get("stratum", "shape")
    shape = shape_entry.value.lower() if shape_entry is not None else None
    if shape is not None and shape not in ("oo", "op"):
        raise ParseError(shape_entry.line, shape_entry.column, f"shape must be oo or op, got {shape_entry.value!r}")
    n_entry = sections.get("stratum", "n")
    declared_n = _parse_int(n_entry) if n_entry is not None else None
    gram_entries, beta_entries = _block_entries(sections)
    grams = [parse_matrix(cfg, e) for e in gram_entries]
    betas = [parse_matrix(cfg, e) for e in beta_entries]
    for i, (g, b) in enumerate(zip(grams, betas), start=1):
        if g.shape != b.shape:
            e = beta_entries[i - 1]
            raise ParseError(e.line, e.column, f"beta{i} has shape {b.shape} but gram{i} has {g.shape}")
    return make_stratum(cfg, kind, grams, betas, shape=shape, declared_n=declared_n)


def load_stratum(path: str, default_precision: int = DEFAULT_PRECISION) -> Stratum:
    with open(path, "r", encoding="utf-8") as f:
        return parse_stratum_text(f.read(), default_precision)


# =========================
# Emision
# =========================
def emit_matrix(x: np.ndarray) -> str:
    return "[" + "; ".join(", ".join(z.to_literal() for z in row) for row in x) + "]"


def emit_stratum(s: Stratum) -> str:
    cfg = s.cfg
    lines = [
        "[field]",
        f"p = {cfg.p}",
        f"ramified = {'true' if cfg.ramified else 'false'}",
        f"precision = {cfg.precision}",
    ]
    if not cfg.ramified:
        lines.append(f"nonsquare = {cfg.nonsquare_unit}")
    lines += ["", "[stratum]", f"type = {s.kind.value}"]
    if s.shape is not None:
        lines.append(f"shape = {s.shape}")
    if s.declared_n is not None:
        lines.append(f"n = {s.declared_n}")
    for i, blk in enumerate(s.blocks, start=1):
        lines.append(f"gram{i} = {emit_matrix(blk.gram)}")
        lines.append(f"beta{i} = {emit_matrix(blk.beta)}")
    return "\n".join(lines) + "\n"


def save_stratum(s: Stratum, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(emit_stratum(s))
