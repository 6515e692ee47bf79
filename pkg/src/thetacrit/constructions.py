"""Closed-form critical pairs on Z/dZ and the three induction methods."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import sympy as sp

from .arith import jacobi_symbol
from .cyclic import CyclicFunction, residual
from .exact import numeric, to_sympy

SELF_CHECK_TOL = 1e-9
PROVENANCES = (
    "constant_tail",
    "gaussian",
    "induced_subgroup",
    "induced_quotient",
    "induced_product",
    "theta_family",
    "conjugate",
)


class ConstructionError(ArithmeticError):
    """A constructor produced a pair that fails its own residual check."""


@dataclass(frozen=True)
class CriticalPair:
    """A verified solution ``(f, lam)`` of the convolution-square equation.

    ``lambda_exact`` is a sympy expression (or a :class:`SurdValue`) when the
    value is known in closed form. Construction raises
    :class:`ConstructionError` unless the relative residual is at most 1e-9.
    """

    f: CyclicFunction
    lam: complex
    lambda_exact: Optional[object] = None
    provenance: str = "constant_tail"
    detail: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        lam = complex(self.lam)
        object.__setattr__(self, "lam", lam)
        rel = residual(self.f, lam).relative
        if not rel <= SELF_CHECK_TOL:
            raise ConstructionError(
                f"{self.provenance} on Z/{self.d}Z: residual {rel:.3e} at lambda={lam:.12g}")
        if self.lambda_exact is not None:
            gap = abs(lam - numeric(self.lambda_exact))
            if gap > 1e-12 * (1 + abs(lam)):
                raise ConstructionError(f"numeric lambda {lam} differs from exact value by {gap:.3e}")

    @property
    def d(self) -> int:
        return self.f.d

    @property
    def relative_residual(self) -> float:
        return residual(self.f, self.lam).relative

    def conjugate(self) -> "CriticalPair":
        """Complex conjugation maps lam-critical functions to conj(lam)-critical ones."""
        exact = None if self.lambda_exact is None else sp.conjugate(to_sympy(self.lambda_exact))
        return CriticalPair(self.f.conjugate(), self.lam.conjugate(), exact, "conjugate",
                            {"of": self.provenance, **self.detail})


def _check_order(d: int):
    if d < 3 or d % 2 == 0:
        raise ValueError(f"expected an odd order d >= 3, got {d}")


def constant_tail(d: int, variant: str) -> CriticalPair:
    """``f(0) = 1`` and ``f(k) = alpha`` elsewhere.

    ``variant`` is one of ``zero`` (lam = 1), ``one`` (lam = d), ``plus`` and
    ``minus``; the last two take ``lam = (d - 3 + eps sqrt(D))/2`` with
    ``D = (d-1)(d-9)`` and ``sqrt(D) = i sqrt(-D)`` when ``D < 0``.
    """
    _check_order(d)
    if variant == "zero":
        alpha, lam = sp.Integer(0), sp.Integer(1)
    elif variant == "one":
        alpha, lam = sp.Integer(1), sp.Integer(d)
    elif variant in ("plus", "minus"):
        eps = 1 if variant == "plus" else -1
        root = sp.sqrt((d - 1) * (d - 9))
        alpha = (1 - d - eps * root) / (2 * (d - 1))
        lam = (d - 3 + eps * root) / 2
    else:
        raise ValueError(f"unknown variant {variant!r}")
    a = complex(sp.N(alpha, 30))
    vals = np.full(d, a, dtype=np.complex128)
    vals[0] = 1.0
    return CriticalPair(CyclicFunction(d, vals), complex(sp.N(lam, 30)), sp.nsimplify(lam),
                        "constant_tail", {"variant": variant})


def gauss_sum(d: int, c: int) -> sp.Expr:
    """Exact ``sum_l exp(2 pi i c l^2 / d)`` for odd ``d`` and ``gcd(c, d) = 1``."""
    base = sp.sqrt(d) if d % 4 == 1 else sp.I * sp.sqrt(d)
    return jacobi_symbol(c, d) * base


def quadratic_gaussian(d: int, u: int) -> CriticalPair:
    """``f(k) = exp(2 pi i u k^2 / d)``, critical for the Gauss sum of ``2u``.

    Alternating the sign of the Jacobi symbol ``(2u/d)`` gives the value and
    its opposite whenever ``d`` is not a perfect square.
    """
    _check_order(d)
    if math.gcd(u, d) != 1:
        raise ValueError(f"u={u} must be a unit mod {d}")
    k = np.arange(d)
    vals = np.exp(2j * np.pi * ((u * k * k) % d) / d)
    lam = gauss_sum(d, 2 * u)
    return CriticalPair(CyclicFunction(d, vals), complex(sp.N(lam, 30)), lam, "gaussian", {"u": u % d})


def gaussian_function(d: int) -> CriticalPair:
    """``f(k) = (-1)^k exp(i pi k^2 / d)``: lam = sqrt(d) or i sqrt(d) by d mod 4."""
    return quadratic_gaussian(d, (d + 1) // 2)


def induce_subgroup(inner: CriticalPair, d: int) -> CriticalPair:
    """Extend by zero from the subgroup ``(d/d1) Z/dZ``; lam is unchanged."""
    d1 = inner.d
    if d % d1:
        raise ValueError(f"{d1} does not divide {d}")
    step = d // d1
    vals = np.zeros(d, dtype=np.complex128)
    vals[::step] = inner.f.values
    return CriticalPair(CyclicFunction(d, vals), inner.lam, inner.lambda_exact, "induced_subgroup",
                        {"from_d": d1, "of": inner.provenance})


def induce_quotient(outer: CriticalPair, d: int, d1: int) -> CriticalPair:
    """Pull back from ``Z/(d/d1)Z``; lam is multiplied by ``d1``."""
    if d % d1 or outer.d != d // d1:
        raise ValueError(f"need d1 | d and an outer pair on Z/{d // max(d1, 1)}Z")
    vals = outer.f.values[np.arange(d) % outer.d]
    exact = None if outer.lambda_exact is None else d1 * to_sympy(outer.lambda_exact)
    return CriticalPair(CyclicFunction(d, vals), d1 * outer.lam, exact, "induced_quotient",
                        {"d1": d1, "of": outer.provenance})


def induce_product(p1: CriticalPair, p2: CriticalPair) -> CriticalPair:
    """Tensor product through ``Z/d1 x Z/d2 = Z/(d1 d2)`` (coprime orders)."""
    d1, d2 = p1.d, p2.d
    if math.gcd(d1, d2) != 1:
        raise ValueError(f"orders {d1} and {d2} are not coprime")
    k = np.arange(d1 * d2)
    vals = p1.f.values[k % d1] * p2.f.values[k % d2]
    exact = None
    if p1.lambda_exact is not None and p2.lambda_exact is not None:
        exact = sp.expand(to_sympy(p1.lambda_exact) * to_sympy(p2.lambda_exact))
    return CriticalPair(CyclicFunction(d1 * d2, vals), p1.lam * p2.lam, exact, "induced_product",
                        {"factors": (d1, d2), "of": (p1.provenance, p2.provenance)})

