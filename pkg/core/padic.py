# core/padic.py
"""
Aritmetica p-adica con precision explicita.

F0 = Q_p (p impar) y F = F0(d) con d^2 = delta_square:
  - no ramificado: delta_square es una unidad no cuadrado,
  - ramificado:    delta_square = -p.

Un BaseElement se guarda como p^val * unit con precision absoluta prec
(el valor se conoce modulo p^prec). Un cero aparente tiene unit = 0 y
val = prec; el cero exacto tiene val = prec = inf.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from sympy import isprime, legendre_symbol
from sympy.ntheory import sqrt_mod

from config.constants import DEFAULT_PRECISION, MIN_PRECISION
from core.errors import (
    DivisionByApparentZero,
    IndeterminateValuation,
    NoSolution,
    ParseError,
)

INF = math.inf


# =========================
# Configuracion del primo
# =========================
@dataclass(frozen=True)
class PrimeConfig:
    p: int
    ramified: bool
    nonsquare_unit: int
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if not isinstance(self.p, int) or not isprime(self.p) or self.p == 2:
            raise ValueError(f"p must be an odd prime, got {self.p!r}")
        if self.precision < MIN_PRECISION:
            raise ValueError(f"Precision {self.precision} must be >= {MIN_PRECISION}")
        if legendre_symbol(self.nonsquare_unit % self.p, self.p) != -1:
            raise ValueError(
                f"{self.nonsquare_unit} is not a non-square unit modulo {self.p}"
            )

    @classmethod
    def make(
        cls,
        p: int,
        ramified: bool = False,
        nonsquare_unit: Optional[int] = None,
        precision: int = DEFAULT_PRECISION,
    ) -> "PrimeConfig":
        """Construye la configuracion eligiendo el menor no residuo si hace falta."""
        if nonsquare_unit is None:
            if not isinstance(p, int) or not isprime(p) or p == 2:
                raise ValueError(f"p must be an odd prime, got {p!r}")
            nonsquare_unit = next(a for a in range(2, p) if legendre_symbol(a, p) == -1)
        return cls(p=p, ramified=ramified, nonsquare_unit=nonsquare_unit, precision=precision)

    @property
    def e(self) -> int:
        """Indice de ramificacion de F/F0."""
        return 2 if self.ramified else 1

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    @property
    def d2(self) -> int:
        return -self.p if self.ramified else self.nonsquare_unit

    @property
    def delta_square(self) -> "BaseElement":
        return BaseElement.from_int(self, self.d2)

    def describe(self) -> str:
        kind = "ramified" if self.ramified else "unramified"
        return f"p={self.p} {kind} d^2={self.d2} N={self.precision}"


def _p_split(n: int, p: int) -> Tuple[int, int]:
    """n = p^v * u con p no divide u (n != 0)."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def legendre(u: int, p: int) -> int:
    return legendre_symbol(u % p, p)


# =========================
# Elementos de F0
# =========================
class BaseElement:
    __slots__ = ("cfg", "val", "unit", "prec")
    __hash__ = None

    def __init__(self, cfg: PrimeConfig, val, unit: int, prec):
        self.cfg = cfg
        self.val = val
        self.unit = unit
        self.prec = prec

    # ----- constructores -----
    @classmethod
    def make(cls, cfg: PrimeConfig, val, unit: int, prec) -> "BaseElement":
        """Normaliza: extrae potencias de p, recorta la precision relativa a N."""
        if prec == INF and unit == 0:
            return cls.zero(cfg)
        p = cfg.p
        if unit != 0:
            k, unit = _p_split(unit, p)
            val += k
        if prec == INF or prec - val > cfg.precision:
            prec = val + cfg.precision
        if unit == 0 or val >= prec:
            return cls(cfg, prec, 0, prec)
        unit %= p ** (prec - val)
        return cls(cfg, val, unit, prec)

    @classmethod
    def zero(cls, cfg: PrimeConfig) -> "BaseElement":
        return cls(cfg, INF, 0, INF)

    @classmethod
    def apparent_zero(cls, cfg: PrimeConfig, prec: int) -> "BaseElement":
        return cls(cfg, prec, 0, prec)

    @classmethod
    def from_int(cls, cfg: PrimeConfig, n: int) -> "BaseElement":
        if n == 0:
            return cls.zero(cfg)
        return cls.make(cfg, 0, n, INF)

    @classmethod
    def from_fraction(cls, cfg: PrimeConfig, q: Union[Fraction, int]) -> "BaseElement":
        q = Fraction(q)
        if q == 0:
            return cls.zero(cfg)
        vn, un = _p_split(q.numerator, cfg.p)
        vd, ud = _p_split(q.denominator, cfg.p)
        mod = cfg.p ** cfg.precision
        unit = (un * pow(ud, -1, mod)) % mod
        return cls.make(cfg, vn - vd, unit, INF)

    @classmethod
    def power_of_p(cls, cfg: PrimeConfig, k: int, unit: int = 1) -> "BaseElement":
        return cls.make(cfg, k, unit, INF)

    def _coerce(self, other) -> "BaseElement":
        if isinstance(other, BaseElement):
            return other
        if isinstance(other, (int, Fraction)):
            return BaseElement.from_fraction(self.cfg, other)
        return NotImplemented

    # ----- predicados -----
    @property
    def rel(self):
        return self.prec - self.val

    def is_exact_zero(self) -> bool:
        return self.prec == INF

    def is_zero(self) -> bool:
        """Cero exacto o aparente."""
        return self.unit == 0

    def is_unit(self) -> bool:
        return not self.is_zero() and self.val == 0

    def is_integral(self) -> bool:
        return self.val >= 0

    def valuation(self):
        if self.is_exact_zero():
            return INF
        if self.is_zero():
            raise IndeterminateValuation(f"valuation of O(p^{self.prec})")
        return self.val

    def residue(self) -> int:
        """Reduccion modulo p de un entero p-adico."""
        if self.is_zero():
            return 0
        if self.val < 0:
            raise ValueError(f"{self.to_literal()} is not integral")
        return self.unit % self.cfg.p if self.val == 0 else 0

    def to_int_mod(self, k: int) -> int:
        """Representante entero en [0, p^k); digitos desconocidos se toman como cero."""
        if self.is_zero():
            return 0
        if self.val < 0:
            raise ValueError(f"{self.to_literal()} is not integral")
        if self.val >= k:
            return 0
        m = self.cfg.p ** k
        return (self.unit * self.cfg.p ** self.val) % m

    def with_precision(self, prec: int) -> "BaseElement":
        if prec >= self.prec:
            return self
        if self.val >= prec:
            return BaseElement.apparent_zero(self.cfg, prec)
        return BaseElement.make(self.cfg, self.val, self.unit, prec)

    # ----- aritmetica -----
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero():
            return other
        if other.is_exact_zero():
            return self
        prec = min(self.prec, other.prec)
        v0 = min(self.val, other.val)
        if v0 >= prec:
            return BaseElement.apparent_zero(self.cfg, prec)
        p = self.cfg.p
        k = prec - v0
        total = 0
        for x in (self, other):
            if x.unit and x.val - v0 < k:
                total += x.unit * p ** (x.val - v0)
        return BaseElement.make(self.cfg, v0, total % p ** k, prec)

    __radd__ = __add__

    def __neg__(self) -> "BaseElement":
        if self.is_zero():
            return self
        return BaseElement(self.cfg, self.val, (-self.unit) % self.cfg.p ** self.rel, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero() or other.is_exact_zero():
            return BaseElement.zero(self.cfg)
        prec = min(self.prec + other.val, other.prec + self.val)
        return BaseElement.make(self.cfg, self.val + other.val, self.unit * other.unit, prec)

    __rmul__ = __mul__

    def inverse(self) -> "BaseElement":
        if self.is_zero():
            raise DivisionByApparentZero(f"inverse of {self.to_literal()}")
        rel = self.rel
        u = pow(self.unit, -1, self.cfg.p ** rel)
        return BaseElement(self.cfg, -self.val, u, -self.val + rel)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "BaseElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = BaseElement.from_int(self.cfg, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    # ----- texto -----
    def signed_unit(self) -> int:
        m = self.cfg.p ** self.rel
        u = self.unit % m
        return u - m if u > m // 2 else u

    def to_literal(self) -> str:
        if self.is_zero():
            return "0"
        return f"{self.signed_unit()}*p^{self.val}"

    def __repr__(self) -> str:
        if self.is_exact_zero():
            return "BaseElement(0)"
        if self.is_zero():
            return f"BaseElement(O(p^{self.prec}))"
        return f"BaseElement({self.to_literal()}, prec={self.prec})"


# =========================
# Elementos de F = F0(d)
# =========================
class ExtElement:
    """a + b*d con a, b en F0."""
    __slots__ = ("a", "b")
    __hash__ = None

    def __init__(self, a: BaseElement, b: BaseElement):
        self.a = a
        self.b = b

    @property
    def cfg(self) -> PrimeConfig:
        return self.a.cfg

    @classmethod
    def from_base(cls, x: BaseElement) -> "ExtElement":
        return cls(x, BaseElement.zero(x.cfg))

    @classmethod
    def from_int(cls, cfg: PrimeConfig, n: int) -> "ExtElement":
        return cls(BaseElement.from_int(cfg, n), BaseElement.zero(cfg))

    @classmethod
    def zero(cls, cfg: PrimeConfig) -> "ExtElement":
        return cls(BaseElement.zero(cfg), BaseElement.zero(cfg))

    @classmethod
    def one(cls, cfg: PrimeConfig) -> "ExtElement":
        return cls.from_int(cfg, 1)

    @classmethod
    def delta(cls, cfg: PrimeConfig) -> "ExtElement":
        return cls(BaseElement.zero(cfg), BaseElement.from_int(cfg, 1))

    @classmethod
    def uniformizer(cls, cfg: PrimeConfig) -> "ExtElement":
        return cls.delta(cfg) if cfg.ramified else cls.from_int(cfg, cfg.p)

    def _coerce(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            return other
        if isinstance(other, BaseElement):
            return ExtElement.from_base(other)
        if isinstance(other, (int, Fraction)):
            return ExtElement.from_base(BaseElement.from_fraction(self.cfg, other))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_exact_zero(self) -> bool:
        return self.a.is_exact_zero() and self.b.is_exact_zero()

    def in_base(self) -> bool:
        return self.b.is_zero()

    def in_delta_base(self) -> bool:
        """Elemento de d*F0 (parte 'imaginaria pura')."""
        return self.a.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtElement(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "ExtElement":
        return ExtElement(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtElement(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d2 = self.cfg.delta_square
        a = self.a * other.a + d2 * (self.b * other.b)
        b = self.a * other.b + self.b * other.a
        return ExtElement(a, b)

    __rmul__ = __mul__

    def conj(self) -> "ExtElement":
        return ExtElement(self.a, -self.b)

    def norm(self) -> BaseElement:
        return self.a * self.a - self.cfg.delta_square * (self.b * self.b)

    def trace(self) -> BaseElement:
        return self.a + self.a

    def inverse(self) -> "ExtElement":
        n = self.norm()
        if n.is_zero():
            raise DivisionByApparentZero(f"inverse of {self.to_literal()}")
        ninv = n.inverse()
        return ExtElement(self.a * ninv, -(self.b * ninv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "ExtElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = ExtElement.one(self.cfg)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def valuation_F(self) -> int:
        """Valuacion normalizada de F (el uniformizante tiene valuacion 1)."""
        if self.is_exact_zero():
            return INF
        e = self.cfg.e
        offsets = (0, 1 if self.cfg.ramified else 0)
        known = []
        bounds = []
        for part, off in zip((self.a, self.b), offsets):
            if part.is_exact_zero():
                continue
            if part.is_zero():
                bounds.append(e * part.prec + off)
            else:
                known.append(e * part.val + off)
        if not known or (bounds and min(known) > min(bounds)):
            raise IndeterminateValuation(f"valuation of {self.to_literal()}")
        return min(known)

    def valuation_rel(self) -> Fraction:
        """nu_{F/F0}: extiende la valuacion de F0 (valores en (1/2)Z si ramifica)."""
        v = self.valuation_F()
        if v == INF:
            return v
        return Fraction(v, self.cfg.e)

    def residue(self) -> Tuple[int, int]:
        """Clase en el cuerpo residual de F como par (a mod p, b mod p)."""
        if self.cfg.ramified:
            return (self.a.residue(), 0)
        return (self.a.residue(), self.b.residue())

    def to_literal(self) -> str:
        if self.b.is_zero():
            return self.a.to_literal()
        if self.a.is_zero():
            return f"({self.b.to_literal()})*d"
        return f"({self.a.to_literal()}) + ({self.b.to_literal()})*d"

    def __repr__(self) -> str:
        return f"ExtElement({self.to_literal()})"


# =========================
# Normas y caracteres
# =========================
def is_norm_class(y: BaseElement) -> bool:
    """True si y pertenece a N_{F/F0}(F^x)."""
    if y.is_zero():
        raise IndeterminateValuation("norm class of zero")
    if y.cfg.ramified:
        return legendre(y.unit, y.cfg.p) == 1
    return y.val % 2 == 0


def char_level(c: BaseElement) -> int:
    """Mayor r tal que x -> psi0(c x) es no trivial en p^r (conductor de psi0 = p)."""
    return -c.valuation()


def ext_valuation(x: ExtElement) -> Fraction:
    return x.valuation_rel()


def ext_valuation_int(x: ExtElement) -> int:
    return x.valuation_F()


def is_square(x: BaseElement) -> bool:
    """Cuadrado en F0: valuacion par y unidad residuo cuadratico."""
    if x.is_exact_zero():
        return True
    if x.is_zero():
        raise IndeterminateValuation("square test of an apparent zero")
    return x.val % 2 == 0 and legendre(x.unit, x.cfg.p) == 1


def square_root(x: BaseElement) -> BaseElement:
    if x.is_exact_zero():
        return x
    if x.is_zero():
        raise IndeterminateValuation("square root of an apparent zero")
    p = x.cfg.p
    if x.val % 2 or legendre(x.unit, p) != 1:
        raise NoSolution(f"{x.to_literal()} is not a square in Q_{p}")
    rel = x.rel
    root = sqrt_mod(x.unit % p ** rel, p ** rel)
    if root is None:
        raise NoSolution(f"{x.to_literal()} is not a square in Q_{p}")
    return BaseElement(x.cfg, x.val // 2, root, x.val // 2 + rel)


def solve_norm_equation(t: BaseElement) -> ExtElement:
    """Devuelve eps en F con eps * sigma(eps) = t, o lanza NoSolution."""
    cfg = t.cfg
    if t.is_zero():
        raise IndeterminateValuation("norm equation with zero right-hand side")
    if not is_norm_class(t):
        raise NoSolution(f"{t.to_literal()} is not a norm from F")
    p = cfg.p
    u = t / BaseElement.power_of_p(cfg, t.val)
    if cfg.ramified:
        root = ExtElement.from_base(square_root(u))
        return ExtElement.delta(cfg) ** t.val * root
    d2 = cfg.delta_square
    for b in range(p):
        bb = BaseElement.from_int(cfg, b)
        target = u + d2 * bb * bb
        if target.is_zero() or target.val != 0:
            continue
        if legendre(target.unit, p) != 1:
            continue
        a = square_root(target)
        scale = BaseElement.power_of_p(cfg, t.val // 2)
        return ExtElement(a * scale, bb * scale)
    raise NoSolution(f"no residue solution for norm {t.to_literal()}")


def lift_residue_ext(cfg: PrimeConfig, a: int, b: int) -> ExtElement:
    return ExtElement(BaseElement.from_int(cfg, a), BaseElement.from_int(cfg, b))


# =========================
# Literales
# =========================
_BASE_RE = re.compile(
    r"^\s*(?P<sign>-)?\s*(?:(?P<unit>\d+)\s*(?:\*\s*p\s*\^\s*(?P<k1>-?\d+))?|p\s*\^\s*(?P<k2>-?\d+)|p)\s*$"
)
_PAIR_RE = re.compile(r"^\s*\((?P<a>[^()]*)\)\s*\+\s*\((?P<b>[^()]*)\)\s*\*\s*d\s*$")
_PAREN_D_RE = re.compile(r"^\s*(?P<sign>-)?\s*\((?P<b>[^()]*)\)\s*\*\s*d\s*$")
_TIMES_D_RE = re.compile(r"^\s*(?P<b>[^()]*?)\s*\*\s*d\s*$")
_BARE_D_RE = re.compile(r"^\s*(?P<sign>-)?\s*d\s*$")


def _exact(cfg: PrimeConfig, sign: bool, unit: int, k: int) -> BaseElement:
    if unit == 0:
        return BaseElement.zero(cfg)
    return BaseElement.make(cfg, k, -unit if sign else unit, INF)


def parse_base_literal(cfg: PrimeConfig, text: str, line: int = 1, column: int = 1) -> BaseElement:
    m = _BASE_RE.match(text)
    if not m:
        raise ParseError(line, column, f"invalid F0 literal {text.strip()!r}")
    sign = m.group("sign") is not None
    if m.group("unit") is not None:
        k = int(m.group("k1")) if m.group("k1") is not None else 0
        return _exact(cfg, sign, int(m.group("unit")), k)
    k = int(m.group("k2")) if m.group("k2") is not None else 1
    return _exact(cfg, sign, 1, k)


def parse_ext_literal(cfg: PrimeConfig, text: str, line: int = 1, column: int = 1) -> ExtElement:
    m = _PAIR_RE.match(text)
    if m:
        return ExtElement(
            parse_base_literal(cfg, m.group("a"), line, column),
            parse_base_literal(cfg, m.group("b"), line, column),
        )
    m = _PAREN_D_RE.match(text)
    if m:
        b = parse_base_literal(cfg, m.group("b"), line, column)
        return ExtElement(BaseElement.zero(cfg), -b if m.group("sign") else b)
    m = _BARE_D_RE.match(text)
    if m:
        d = ExtElement.delta(cfg)
        return -d if m.group("sign") else d
    m = _TIMES_D_RE.match(text)
    if m:
        return ExtElement(BaseElement.zero(cfg), parse_base_literal(cfg, m.group("b"), line, column))
    return ExtElement.from_base(parse_base_literal(cfg, text, line, column))


# =========================
# Muestreo
# =========================
def random_unit(rng: random.Random, cfg: PrimeConfig) -> BaseElement:
    p = cfg.p
    u = rng.randrange(1, p ** cfg.precision)
    while u % p == 0:
        u = rng.randrange(1, p ** cfg.precision)
    return BaseElement.make(cfg, 0, u, INF)


def random_base(rng: random.Random, cfg: PrimeConfig, val: int) -> BaseElement:
    return random_unit(rng, cfg) * BaseElement.power_of_p(cfg, val)


def random_ext(rng: random.Random, cfg: PrimeConfig, val_F: int) -> ExtElement:
    """Elemento de F con valuacion normalizada val_F."""
    p = cfg.p
    if cfg.ramified:
        unit = ExtElement(random_unit(rng, cfg), BaseElement.from_int(cfg, rng.randrange(p ** 3)))
        return ExtElement.delta(cfg) ** val_F * unit
    while True:
        a, b = rng.randrange(p ** 3), rng.randrange(p ** 3)
        if a % p or b % p:
            break
    unit = ExtElement(BaseElement.from_int(cfg, a), BaseElement.from_int(cfg, b))
    return unit * BaseElement.power_of_p(cfg, val_F)


def random_norm_unit(rng: random.Random, cfg: PrimeConfig, want_norm: bool) -> BaseElement:
    """Unidad de F0 cuya clase en F0^x/Nr es la pedida (solo ramificado distingue)."""
    if not cfg.ramified:
        if not want_norm:
            raise NoSolution("every unit is a norm in the unramified case")
        return random_unit(rng, cfg)
    while True:
        u = random_unit(rng, cfg)
        if is_norm_class(u) == want_norm:
            return u
