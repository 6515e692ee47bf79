"""Functions on Z/dZ and the convolution-square equation.

A function ``f`` on Z/dZ (d odd) is *lambda-critical* when

    sum_l f(k + l) f(k - l) = lambda * f(k)**2     for every k,

which is the pointwise form of ``(f * f)(2t) = lambda f(t)^2``.
Everything here uses direct O(d^2) sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

MAX_ORDER = 99
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class CyclicFunction:
    """A complex-valued function on Z/dZ, indexed by residues ``0..d-1``."""

    d: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        d = int(self.d)
        if d < 1 or d % 2 == 0:
            raise ValueError(f"order must be odd and positive, got {self.d}")
        if d > MAX_ORDER:
            raise ValueError(f"order {d} exceeds the desk-scale cap {MAX_ORDER}")
        vals = np.array(self.values, dtype=np.complex128).reshape(-1)
        if vals.shape != (d,):
            raise ValueError(f"expected {d} values, got {vals.shape[0]}")
        vals.flags.writeable = False
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, d: int, fn) -> "CyclicFunction":
        return cls(d, [fn(k) for k in range(d)])

    @classmethod
    def delta(cls, d: int) -> "CyclicFunction":
        v = np.zeros(d, dtype=np.complex128)
        v[0] = 1.0
        return cls(d, v)

    @classmethod
    def constant(cls, d: int, c: complex = 1.0) -> "CyclicFunction":
        return cls(d, np.full(d, c, dtype=np.complex128))

    def __call__(self, k: int) -> complex:
        return complex(self.values[k % self.d])

    def __len__(self) -> int:
        return self.d

    def is_zero(self) -> bool:
        return not np.any(self.values)

    def shift(self, c: int) -> "CyclicFunction":
        """The translate ``t -> f(t + c)``."""
        return CyclicFunction(self.d, np.roll(self.values, -c))

    def scale(self, c: complex) -> "CyclicFunction":
        return CyclicFunction(self.d, c * self.values)

    def conjugate(self) -> "CyclicFunction":
        return CyclicFunction(self.d, np.conj(self.values))

    def normalized(self) -> "CyclicFunction":
        """Rescaled so the largest modulus is 1 (first maximiser made real positive)."""
        k = int(np.argmax(np.abs(self.values)))
        return self.scale(1.0 / self.values[k])


@dataclass(frozen=True)
class ResidualReport:
    max_abs: float
    scale: float
    relative: float
    worst_k: int


def _require_nonzero(f: CyclicFunction):
    if f.is_zero():
        raise ValueError("the zero function is never critical")


def _pair_products(f: CyclicFunction, shifts: np.ndarray) -> np.ndarray:
    """Matrix ``P[k, j] = f(k + l_j) f(k - l_j)``."""
    k = np.arange(f.d)[:, None]
    v = f.values
    return v[(k + shifts[None, :]) % f.d] * v[(k - shifts[None, :]) % f.d]


def _report(diff: np.ndarray, f: CyclicFunction) -> ResidualReport:
    err = np.abs(diff)
    worst = int(np.argmax(err))
    scale = float(np.max(np.abs(f.values)) ** 2)
    max_abs = float(err[worst])
    return ResidualReport(max_abs, scale, max_abs / scale if scale > 0 else np.inf, worst)


def convolve(f: CyclicFunction, g: CyclicFunction) -> CyclicFunction:
    """Cyclic convolution ``(f*g)(t) = sum_l f(l) g(t - l)``."""
    if f.d != g.d:
        raise ValueError(f"dimension mismatch: {f.d} vs {g.d}")
    d = f.d
    t = np.arange(d)[:, None]
    l = np.arange(d)[None, :]
    return CyclicFunction(d, (f.values[l] * g.values[(t - l) % d]).sum(axis=1))


def residual(f: CyclicFunction, lam: complex) -> ResidualReport:
    """Residual of ``sum_l f(k+l) f(k-l) = lam f(k)^2`` in the sup norm.

    ``relative`` divides by ``max|f|^2`` so the result is scale invariant.
    """
    _require_nonzero(f)
    lhs = _pair_products(f, np.arange(f.d)).sum(axis=1)
    return _report(lhs - lam * f.values ** 2, f)


def default_half_system(d: int) -> list[int]:
    return list(range(1, (d - 1) // 2 + 1))


def _check_half_system(d: int, gplus: Iterable[int]) -> np.ndarray:
    g = sorted({int(x) % d for x in gplus})
    if len(g) != (d - 1) // 2 or 0 in g:
        raise ValueError(f"{sorted(gplus)} is not a half-system of Z/{d}Z")
    if any((d - x) % d in g for x in g):
        raise ValueError(f"{sorted(gplus)} contains both l and -l for some l")
    return np.array(g, dtype=np.int64)


def residual_half(f: CyclicFunction, lam: complex, gplus: Iterable[int] | None = None) -> ResidualReport:
    """Residual of the half-system form ``(lam-1)/2 f(k)^2 = sum_{l in G+} f(k+l) f(k-l)``.

    Pointwise this is exactly half of :func:`residual`.
    """
    _require_nonzero(f)
    if gplus is None:
        gplus = default_half_system(f.d)
    g = _check_half_system(f.d, gplus)
    rhs = _pair_products(f, g).sum(axis=1) if g.size else np.zeros(f.d, complex)
    return _report((lam - 1) / 2 * f.values ** 2 - rhs, f)


def is_critical(f: CyclicFunction, lam: complex, tol: float = DEFAULT_TOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return residual(f, lam).relative <= tol


def estimate_lambda(f: CyclicFunction) -> complex:
    """Solve the equation for lambda at the first index of maximal modulus."""
    _require_nonzero(f)
    k = int(np.argmax(np.abs(f.values)))
    l = np.arange(f.d)
    s = (f.values[(k + l) % f.d] * f.values[(k - l) % f.d]).sum()
    return complex(s / f.values[k] ** 2)


def dft(f: CyclicFunction) -> CyclicFunction:
    """``fhat(j) = sum_x f(x) exp(2 pi i j x / d)``, unnormalised."""
    d = f.d
    jx = np.outer(np.arange(d), np.arange(d)) % d
    kernel = np.exp(2j * np.pi * jx / d)
    return CyclicFunction(d, kernel @ f.values)
