"""Jacobi theta series with an explicit truncation policy.

All series here have the shape

    S(A, w) = sum_j exp(i pi A j^2 + 2 pi i j w)

over all integers ``j`` or over one parity class, with ``Im A > 0``:

=================  ==========  =================  ========
function           A           w                  j
=================  ==========  =================  ========
theta(z, tau)      tau         z                  all
theta0(z, tau)     tau/2       z                  even
theta1(z, tau)     tau/2       z                  odd
theta_ab(0, b)     tau         z + b/2            all
theta_ab(1, b)     tau/4       z/2 + b/4          odd
=================  ==========  =================  ========
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Optional, Union

import numpy as np

from .arith import jacobi_symbol
from .cyclic import CyclicFunction
from .modular import UnimodularMatrix


@dataclass(frozen=True)
class UpperHalfPoint:
    re: float
    im: float

    def __post_init__(self):
        if not self.im > 0:
            raise ValueError(f"Im(tau) must be positive, got {self.im}")

    @classmethod
    def from_complex(cls, tau: complex) -> "UpperHalfPoint":
        tau = complex(tau)
        return cls(tau.real, tau.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


TauLike = Union[UpperHalfPoint, complex, float]


@dataclass(frozen=True)
class ThetaConfig:
    """Truncation policy.

    ``tail_bound`` bounds the discarded tail relative to the largest term
    (equal to an absolute bound when ``Im z = 0``). ``widen`` multiplies the
    truncation half-width and exists to test truncation soundness.
    """

    tail_bound: float = 1e-14
    max_terms: int = 10 ** 6
    z_im_cap: float = 1.0
    widen: float = 1.0

    def __post_init__(self):
        if not self.tail_bound > 0:
            raise ValueError("tail_bound must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.widen >= 1:
            raise ValueError("widen must be >= 1")

    def widened(self, factor: float) -> "ThetaConfig":
        return replace(self, widen=self.widen * factor)


DEFAULT_CONFIG = ThetaConfig()


class TruncationError(ValueError):
    """The series would need more than ``max_terms`` terms."""


def _tau(tau: TauLike) -> complex:
    t = complex(tau)
    if not t.imag > 0:
        raise ValueError(f"tau={t} is not in the upper half plane")
    return t


def _check_z(z, cfg: ThetaConfig):
    im = np.max(np.abs(np.imag(z)))
    if im > cfg.z_im_cap:
        raise ValueError(f"|Im z| = {im:g} exceeds the cap {cfg.z_im_cap:g}")


_SPLIT = 134217729.0  # 2**27 + 1
_TWO26 = 67108864.0


def _mod2_product(x: float, n: np.ndarray) -> np.ndarray:
    """``x * n mod 2`` for a float and integers ``|n| < 2**52``.

    Splits ``x`` (Veltkamp) and ``n`` (26-bit halves) so every partial product
    is exact and ``fmod`` is exact; only the final 4-term sum rounds.
    """
    t = _SPLIT * x
    xh = t - (t - x)
    xl = x - xh
    nh = (n >> 26).astype(np.float64)
    nl = (n & ((1 << 26) - 1)).astype(np.float64)
    s = (np.fmod(xh * nh * _TWO26, 2.0) + np.fmod(xl * nh * _TWO26, 2.0)
         + np.fmod(xh * nl, 2.0) + np.fmod(xl * nl, 2.0))
    return np.fmod(s, 2.0)


def _window(y: float, c: float, cfg: ThetaConfig) -> tuple[int, int]:
    # |term_j| = exp(-pi y j^2 - 2 pi v j) = e^S exp(-pi y (j + c)^2),
    # c = v/y, S = pi v^2 / y. Keeping |j + c| <= s, each side's tail is
    #   e^S sum_{i>=0} exp(-pi y (s + i)^2) <= e^S exp(-pi y s^2) / (1 - exp(-2 pi y s)),
    # so both sides together stay below tail_bound * e^S when
    #   s^2 >= ln(2 / (tail_bound (1 - exp(-2 pi y s)))) / (pi y).
    # s0 solves this with the geometric factor dropped; s1 (one fixed-point step
    # from s0) satisfies it because the right side decreases in s.
    tol = cfg.tail_bound
    s0 = math.sqrt(math.log(2.0 / tol) / (math.pi * y))
    s = math.sqrt(math.log(2.0 / (tol * -math.expm1(-2 * math.pi * y * s0))) / (math.pi * y))
    s *= cfg.widen
    lo, hi = math.ceil(-c - s), math.floor(-c + s)
    if hi - lo + 1 > cfg.max_terms:
        raise TruncationError(
            f"Im(A)={y:.3g} needs {hi - lo + 1} terms, more than max_terms={cfg.max_terms}")
    return lo, hi


def _series(A: complex, w: np.ndarray, parity: Optional[int], cfg: ThetaConfig,
            exact_sum: bool) -> tuple[np.ndarray, float]:
    """``S(A, w_r)`` for each row ``w_r``, returned as ``(values * e^-S, S)``.

    All ``w_r`` must share one imaginary part so they share the window and the
    scale ``S``; rows that differ are evaluated separately.
    """
    w = np.atleast_1d(np.asarray(w, dtype=np.complex128))
    v = float(w[0].imag)
    if not np.all(w.imag == v):
        parts = [_series(A, np.array([x]), parity, cfg, exact_sum) for x in w]
        s_max = max(p[1] for p in parts)
        return np.array([p[0][0] * math.exp(p[1] - s_max) for p in parts]), s_max
    y = A.imag
    c = v / y
    lo, hi = _window(y, c, cfg)
    if parity is None:
        j = np.arange(lo, hi + 1, dtype=np.int64)
    else:
        j = np.arange(lo + ((lo - parity) % 2), hi + 1, 2, dtype=np.int64)
    if j.size == 0:
        return np.zeros(w.shape, dtype=np.complex128), 0.0
    quad = _mod2_product(A.real, j * j)
    lin = np.stack([_mod2_product(2.0 * x.real, j) for x in w])
    phase = np.pi * np.fmod(quad[None, :] + lin, 2.0)
    logmod = -math.pi * y * (j + c) ** 2
    terms = np.exp(logmod)[None, :] * np.exp(1j * phase)
    if exact_sum:
        vals = np.array([complex(math.fsum(r.real), math.fsum(r.imag)) for r in terms])
    else:
        vals = terms.sum(axis=1)
    return vals, math.pi * v * v / y


def _unscale(vals: np.ndarray, S: float) -> np.ndarray:
    if S > 700:
        raise OverflowError(f"theta value exceeds float range (log-scale {S:.1f}); rescale instead")
    return vals * math.exp(S)


def _evaluate(A: complex, w, parity, cfg: ThetaConfig) -> complex:
    vals, S = _series(A, np.array([complex(w)]), parity, cfg, exact_sum=True)
    return complex(_unscale(vals, S)[0])


def theta(z: complex, tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """``theta(z, tau) = sum_m exp(i pi tau m^2 + 2 pi i m z)``."""
    _check_z(z, cfg)
    return _evaluate(_tau(tau), z, None, cfg)


def theta0(z: complex, tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Even-``m`` part of ``sum_m exp(i pi (tau/2) m^2 + 2 pi i m z)``."""
    _check_z(z, cfg)
    return _evaluate(_tau(tau) / 2, z, 0, cfg)


def theta1(z: complex, tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Odd-``m`` part of ``sum_m exp(i pi (tau/2) m^2 + 2 pi i m z)``."""
    _check_z(z, cfg)
    return _evaluate(_tau(tau) / 2, z, 1, cfg)


def theta_ab(a: int, b: int, z: complex, tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """Theta with characteristic: ``sum_m exp(i pi tau (m+a/2)^2 + 2 pi i (m+a/2)(z+b/2))``."""
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError("characteristics a, b must be 0 or 1")
    _check_z(z, cfg)
    t = _tau(tau)
    z = complex(z)
    if a == 0:
        return _evaluate(t, z + b / 2, None, cfg)
    return _evaluate(t / 4, z / 2 + b / 4, 1, cfg)


def theta_mass(z: complex, tau: TauLike, kind: str = "theta", cfg: ThetaConfig = DEFAULT_CONFIG) -> float:
    """``sum_j |term_j|`` of the series behind ``kind``.

    The absolute terms of every series here are the terms of the same series
    at ``(i Im z, i Im tau)``, so this is one more series evaluation. It is the
    scale of the rounding error in binary64; when the terms cancel, ``|value|``
    can be many orders of magnitude smaller.
    """
    t = _tau(tau)
    zi, ti = 1j * complex(z).imag, 1j * t.imag
    fns = {"theta": theta, "theta0": theta0, "theta1": theta1,
           "theta_0b": lambda u, s, c: theta_ab(0, 0, u, s, c),
           "theta_1b": lambda u, s, c: theta_ab(1, 0, u, s, c)}
    return fns[kind](zi, ti, cfg).real


def _residual(lhs: complex, rhs: complex, scale: float | None) -> float:
    err = abs(lhs - rhs)
    return err if scale is None else err / max(1.0, scale)


def check_addition(z: complex, w: complex, tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG,
                   relative: bool = False) -> float:
    """``|theta(z+w) theta(z-w) - theta0(w) theta0(z) - theta1(w) theta1(z)|``.

    With ``relative`` the residual is divided by the larger of the products of
    series masses on the two sides (see :func:`theta_mass`).
    """
    lhs = theta(z + w, tau, cfg) * theta(z - w, tau, cfg)
    rhs = theta0(w, tau, cfg) * theta0(z, tau, cfg) + theta1(w, tau, cfg) * theta1(z, tau, cfg)
    scale = None
    if relative:
        m = lambda u, k: theta_mass(u, tau, k, cfg)
        scale = max(m(z + w, "theta") * m(z - w, "theta"),
                    m(w, "theta0") * m(z, "theta0") + m(w, "theta1") * m(z, "theta1"))
    return _residual(lhs, rhs, scale)


def check_isogeny(d: int, tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG,
                  relative: bool = False) -> float:
    """Worse of the even and odd residuals of ``sum_l theta_[j](l/d, tau) = d theta_[j](0, d^2 tau)``.

    With ``relative`` each residual is divided by ``d`` times the series mass at ``z = 0``.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d must be odd and positive, got {d}")
    t = _tau(tau)
    worst = 0.0
    for fn, kind in ((theta0, "theta0"), (theta1, "theta1")):
        lhs = sum(fn(l / d, t, cfg) for l in range(d))
        rhs = d * fn(0, d * d * t, cfg)
        scale = d * theta_mass(0, t, kind, cfg) if relative else None
        worst = max(worst, _residual(lhs, rhs, scale))
    return worst


def hecke_sign(sigma: UnimodularMatrix) -> complex:
    """``i^((delta-1)/2) * (gamma/delta)``."""
    return 1j ** (((sigma.delta - 1) // 2) % 4) * jacobi_symbol(sigma.gamma, sigma.delta)


def hecke_sign_eps(sigma: UnimodularMatrix) -> complex:
    """The same sign written as ``eps_delta * (2 gamma/delta)``."""
    return eps_delta(sigma.delta) * jacobi_symbol(2 * sigma.gamma, sigma.delta)


def eps_delta(delta: int) -> complex:
    if delta % 2 == 0:
        raise ValueError("delta must be odd")
    return 1 if delta % 4 == 1 else -1j


def _check_level2(sigma: UnimodularMatrix):
    if not (sigma.alpha % 2 and sigma.delta % 2 and sigma.beta % 2 == 0 and sigma.gamma % 2 == 0):
        raise ValueError(f"{sigma.rows()} is not = 1 (mod 2)")
    if sigma.gamma <= 0:
        raise ValueError("the transformation law needs gamma > 0")


def transform_theta_constant(sigma: UnimodularMatrix, tau: TauLike,
                             cfg: ThetaConfig = DEFAULT_CONFIG) -> tuple[complex, complex]:
    """Predicted and directly computed ``theta(0, sigma tau)``.

    The prediction is ``hecke_sign(sigma) * (gamma tau + delta)^(1/2) * theta(0, tau)``
    with the square root of non-negative real part.
    """
    _check_level2(sigma)
    t = _tau(tau)
    predicted = hecke_sign(sigma) * cmath.sqrt(sigma.cocycle(t)) * theta(0, t, cfg)
    return predicted, theta(0, sigma.act(t), cfg)


def theta_constants(tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG) -> tuple[complex, complex]:
    """``(theta0(0, tau), theta1(0, tau))``."""
    t = _tau(tau)
    return theta0(0, t, cfg), theta1(0, t, cfg)


def phi(tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG) -> complex:
    """``theta1(0, tau) / theta0(0, tau)``; a level-4 modular function."""
    t0, t1 = theta_constants(tau, cfg)
    if abs(t0) < 1e-300:
        raise ZeroDivisionError(f"theta0(0, tau) underflowed at tau={complex(tau)}")
    return t1 / t0


def psi(tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG) -> tuple[complex, complex, complex]:
    """``(theta_00^2, theta_01^2, theta_10^2)`` at ``z = 0``, a point of the conic x0^2 = x1^2 + x2^2."""
    return tuple(theta_ab(a, b, 0, tau, cfg) ** 2 for a, b in ((0, 0), (0, 1), (1, 0)))


def critical_family(d: int, tau: TauLike, z: complex = 0.0, cfg: ThetaConfig = DEFAULT_CONFIG,
                    rescale: bool = False) -> CyclicFunction:
    """``l -> theta(z + l/d, tau)`` on Z/dZ.

    With ``rescale`` every value is multiplied by one positive constant (the
    inverse of the largest series term), which keeps large ``|Im z|/Im tau``
    within float range and leaves criticality unchanged.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d must be odd, got {d}")
    _check_z(z, cfg)
    w = complex(z) + np.arange(d) / d
    vals, S = _series(_tau(tau), w, None, cfg, exact_sum=False)
    return CyclicFunction(d, vals if rescale else _unscale(vals, S))


def theta_constant_criterion(d: int, tau: TauLike, cfg: ThetaConfig = DEFAULT_CONFIG,
                             tol: float = 1e-9) -> Optional[complex]:
    """The value ``lam`` with ``lam = d theta_[j](0, d^2 tau)/theta_[j](0, tau)`` for j = 0, 1.

    Returns the mean of the two ratios when they agree to ``tol*(1+|ratio|)``,
    otherwise ``None``. ``None`` is a numerical judgement at that tolerance.
    """
    t = _tau(tau)
    a0, a1 = theta_constants(t, cfg)
    b0, b1 = theta_constants(d * d * t, cfg)
    if min(abs(a0), abs(a1)) < 1e-300:
        raise ZeroDivisionError(f"theta constant underflow at tau={t}")
    r0, r1 = d * b0 / a0, d * b1 / a1
    if abs(r0 - r1) <= tol * (1 + abs(r0)):
        return (r0 + r1) / 2
    return None
