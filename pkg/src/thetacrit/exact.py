"""Exact values of the form ``s_a sqrt(a) + s_b i sqrt(b)``."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

import sympy as sp

from .arith import squarefree_split


@dataclass(frozen=True, eq=False)
class SurdValue:
    """``s_a*sqrt(a) + s_b*i*sqrt(b)`` with integer radicands ``a, b >= 0``.

    Equality is exact: the sign of a zero radicand is ignored.
    """

    s_a: int
    a: int
    s_b: int
    b: int

    def __post_init__(self):
        if self.s_a not in (1, -1) or self.s_b not in (1, -1):
            raise ValueError("signs must be +1 or -1")
        if self.a < 0 or self.b < 0:
            raise ValueError("radicands must be non-negative")

    @classmethod
    def of(cls, a: int, b: int, sign: int = 1) -> "SurdValue":
        """``sign * (sqrt(a) + i sqrt(b))``."""
        return cls(sign, a, sign, b)

    def _key(self):
        return (self.s_a if self.a else 1, self.a, self.s_b if self.b else 1, self.b)

    def __eq__(self, other):
        if not isinstance(other, SurdValue):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __neg__(self) -> "SurdValue":
        return SurdValue(-self.s_a, self.a, -self.s_b, self.b)

    def conjugate(self) -> "SurdValue":
        return SurdValue(self.s_a, self.a, -self.s_b, self.b)

    def canonical(self) -> "SurdValue":
        s_a, a, s_b, b = self._key()
        return SurdValue(s_a, a, s_b, b)

    def reduced(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Signed ``(coefficient, squarefree radicand)`` for each part."""
        ca, ra = squarefree_split(self.a)
        cb, rb = squarefree_split(self.b)
        return (self._key()[0] * ca, ra), (self._key()[2] * cb, rb)

    def __complex__(self) -> complex:
        return complex(self.s_a * math.sqrt(self.a), self.s_b * math.sqrt(self.b))

    def to_sympy(self) -> sp.Expr:
        return self.s_a * sp.sqrt(self.a) + self.s_b * sp.I * sp.sqrt(self.b)

    def __str__(self) -> str:
        (ca, ra), (cb, rb) = self.reduced()
        re = _fmt_part(ca, ra, "")
        im = _fmt_part(cb, rb, "i")
        if not im:
            return re or "0"
        if not re:
            return im
        return f"{re} - {im[1:]}" if im.startswith("-") else f"{re} + {im}"


def _fmt_part(c: int, r: int, unit: str) -> str:
    if c == 0:
        return ""
    mag = abs(c)
    if r == 1:
        body = f"{mag}{unit}" if (mag != 1 or not unit) else unit
    else:
        body = ("" if mag == 1 else str(mag)) + unit + f"√{r}"
    return ("-" if c < 0 else "") + body


def to_sympy(value) -> sp.Expr:
    if isinstance(value, SurdValue):
        return value.to_sympy()
    return sp.sympify(value)


def exactly_equal(x, y) -> bool:
    """Exact equality of two algebraic expressions (sympy radicals)."""
    diff = sp.expand(to_sympy(x) - to_sympy(y))
    if diff == 0:
        return True
    if abs(complex(sp.N(diff, 30))) > 1e-20:
        return False
    return bool(sp.simplify(diff) == 0)


def numeric(value) -> complex:
    if isinstance(value, SurdValue):
        return complex(value)
    return complex(sp.N(to_sympy(value), 30))


def format_exact(value) -> str:
    if isinstance(value, SurdValue):
        return str(value)
    return sp.sstr(sp.nsimplify(to_sympy(value)))


def as_surd(value) -> Optional[SurdValue]:
    """The value as ``+-sqrt(a) +- i sqrt(b)`` with integers a, b >= 0, if it has that form."""
    re, im = sp.expand(to_sympy(value)).as_real_imag()
    a, b = sp.nsimplify(sp.expand(re ** 2)), sp.nsimplify(sp.expand(im ** 2))
    if not (a.is_Integer and b.is_Integer):
        return None
    s_a = -1 if sp.N(re) < 0 else 1
    s_b = -1 if sp.N(im) < 0 else 1
    return SurdValue(s_a, int(a), s_b, int(b))


def pretty(value) -> str:
    """Compact radical notation, e.g. ``-√5 - 2i`` or ``1 + √5 + i√(5 - 2√5)``."""
    surd = as_surd(value)
    if surd is not None:
        return str(surd)
    s = sp.sstr(to_sympy(value))
    s = re.sub(r"sqrt\((\d+)\)\*I", r"i√\1", s)
    s = re.sub(r"sqrt\((\d+)\)", r"√\1", s)
    s = s.replace("sqrt(", "√(").replace("*I", "i").replace("I*", "i").replace("*", "")
    return s.replace("I", "i")
