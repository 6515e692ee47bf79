"""Integer data of the theta construction at CM points.

For positive ``a + b = d`` with ``a = (d+1)^2/4 (mod 4)`` the fundamental
parameter is ``tau0 = (a - b - d^2 + 2i sqrt(ab)) / (4 d^2)`` and the associated
parameters are ``tau_{k,p} = (k + tau0)/p`` with ``p | N_k = d^2 |k + tau0|^2``.
At ``tau_{k,p}`` the theta family is critical for ``eps (sqrt(a) + i sqrt(b))``
with ``eps = (p / (4k - 1))``. Everything up to the float boundary at ``tau``
is exact integer arithmetic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .arith import divisors, is_square, is_square_mod, jacobi_symbol, squarefree_split
from .constructions import CriticalPair
from .cyclic import estimate_lambda
from .exact import SurdValue
from .modular import UnimodularMatrix
from .theta import DEFAULT_CONFIG, ThetaConfig, UpperHalfPoint, critical_family, eps_delta

DEFAULT_K_RANGE = (-10, 10)
DEFAULT_P_MAX = 100


class GateError(ValueError):
    """``(d, a, b)`` violates the congruence condition or ``p`` is not a divisor of N_k."""


def congruence_gate(d: int, a: int) -> bool:
    """``a = (d+1)^2/4 (mod 4)``."""
    return a % 4 == ((d + 1) ** 2 // 4) % 4


def integrality_gate(a: int, b: int) -> bool:
    """``a - b = 1 (mod 4)`` and ``ab = 0 (mod 4)``.

    This is the condition for ``(lam^2 - 1)/4 = (a-b-1)/4 + i sqrt(ab)/2`` to be
    an algebraic integer, with ``lam = sqrt(a) + i sqrt(b)``.
    """
    return (a - b) % 4 == 1 and (a * b) % 4 == 0


def _require(d: int, a: int, b: int):
    if d % 2 == 0 or a < 1 or b < 1 or a + b != d:
        raise GateError(f"need odd d = a + b with a, b >= 1, got d={d}, a={a}, b={b}")
    if not congruence_gate(d, a):
        raise GateError(f"a={a} fails a = (d+1)^2/4 (mod 4) for d={d}")


def enumerate_pairs(d: int) -> list[tuple[int, int]]:
    if d < 3 or d % 2 == 0:
        raise ValueError(f"d must be odd and >= 3, got {d}")
    return [(a, d - a) for a in range(1, d) if congruence_gate(d, a)]


def m0(d: int, a: int, b: int) -> int:
    _require(d, a, b)
    return (a - b - d * d) // 4


def n0(d: int, a: int, b: int) -> int:
    _require(d, a, b)
    return ((d + 1) ** 2 - 4 * a) // 16


def nk_polynomial(d: int, a: int, b: int) -> tuple[int, int, int]:
    """Coefficients ``(d^2, 2 m0, N0)`` of ``N_k`` as a polynomial in ``k``."""
    return d * d, 2 * m0(d, a, b), n0(d, a, b)


def nk(d: int, a: int, b: int, k: int) -> int:
    c2, c1, c0 = nk_polynomial(d, a, b)
    return c2 * k * k + c1 * k + c0


def nk_from_tau(d: int, a: int, b: int, k: int) -> Fraction:
    """``d^2 |k + tau0|^2`` in exact rational arithmetic (an integer)."""
    re = Fraction(d * d * k + m0(d, a, b), d * d)
    im2 = Fraction(a * b, 4 * d ** 4)
    return d * d * (re * re + im2)


def fundamental_tau(d: int, a: int, b: int) -> UpperHalfPoint:
    return associated_tau(d, a, b, 0, 1)


def associated_tau(d: int, a: int, b: int, k: int, p: int) -> UpperHalfPoint:
    """``tau_{k,p} = (d^2 k + m0 + i sqrt(ab/4)) / (d^2 p)``."""
    _require(d, a, b)
    if p < 1 or nk(d, a, b, k) % p:
        raise GateError(f"p={p} does not divide N_{k} = {nk(d, a, b, k)}")
    den = d * d * p
    return UpperHalfPoint((d * d * k + m0(d, a, b)) / den, math.sqrt(a * b / 4) / den)


def tau_string(d: int, a: int, b: int, k: int, p: int) -> str:
    """Exact ``(numerator + i c sqrt(r)) / denominator`` form of ``tau_{k,p}``."""
    num = d * d * k + m0(d, a, b)
    c, r = squarefree_split(a * b // 4)
    im = f"{'' if c == 1 else c}i{'' if r == 1 else '√' + str(r)}"
    return f"({num} + {im})/{d * d * p}"


def sign_epsilon(k: int, p: int) -> int:
    """``(p / (4k - 1))``."""
    if math.gcd(p, 4 * k - 1) != 1:
        raise ValueError(f"gcd(p={p}, 4k-1={4 * k - 1}) > 1: inconsistent parameters")
    return jacobi_symbol(p, 4 * k - 1)


def sigma_matrix(d: int, a: int, b: int, k: int, p: int) -> UnimodularMatrix:
    """``[[2(a-b) - d^2 (1-4k), -4 N_k/p], [4p, 1-4k]]``, fixing ``d^2 tau_{k,p}``.

    ``alpha delta = 1 - 16 N_k`` is checked exactly before the matrix is built.
    """
    _require(d, a, b)
    n = nk(d, a, b, k)
    if p < 1 or n % p:
        raise GateError(f"p={p} does not divide N_{k} = {n}")
    delta = 1 - 4 * k
    alpha = 2 * (a - b) - d * d * delta
    if alpha * delta != 1 - 16 * n:
        raise ArithmeticError(f"alpha*delta = {alpha * delta} but 1 - 16 N_k = {1 - 16 * n}")
    return UnimodularMatrix(alpha, -4 * n // p, 4 * p, delta)


def mu_from_pair(a: int, b: int) -> complex:
    """``(sqrt(a) - i sqrt(b))^2 = a - b - 2i sqrt(ab)``."""
    return complex(a - b, -2 * math.sqrt(a * b))


def critical_value_from_sigma(sigma: UnimodularMatrix, tau: UpperHalfPoint | complex,
                              fixed_point_tol: float = 1e-9) -> complex:
    """``eps_delta (gamma/delta) conj(mu)^(1/2)`` with ``mu = 1/(gamma tau + delta)``.

    ``d`` is recovered from ``|mu| = d`` and ``sigma tau = d^2 tau`` is verified.
    """
    if sigma.gamma <= 0 or not sigma.is_congruent_to_identity(4):
        raise ValueError(f"{sigma.rows()} needs gamma > 0 and sigma = +-1 (mod 4)")
    t = complex(tau)
    mu = 1 / sigma.cocycle(t)
    d = round(abs(mu))
    if abs(sigma.act(t) - d * d * t) > fixed_point_tol * max(1.0, abs(d * d * t)):
        raise ValueError(f"sigma does not map tau={t} to d^2 tau for d={d}")
    root = cmath.sqrt(mu.conjugate())
    return eps_delta(sigma.delta) * jacobi_symbol(sigma.gamma, sigma.delta) * root


def negative_sign_exists(a: int, b: int) -> bool:
    """Whether ``-sqrt(a) - i sqrt(b)`` occurs at some associated parameter.

    True when ``a`` is not a perfect square, or when ``-b`` is not a square
    modulo ``4 sqrt(a)``.
    """
    if not is_square(a):
        return True
    return not is_square_mod(-b, 4 * math.isqrt(a))


def search_negative_sign(d: int, a: int, b: int, k_min: int = DEFAULT_K_RANGE[0],
                         k_max: int = DEFAULT_K_RANGE[1], p_max: int = DEFAULT_P_MAX
                         ) -> Optional[tuple[int, int]]:
    """First ``(k, p)`` with ``p | N_k``, ``p <= p_max`` and sign -1.

    Order: by ``|k|``, then ``p``, then positive ``k`` before negative.
    """
    _require(d, a, b)
    ks = sorted(range(k_min, k_max + 1), key=lambda k: (abs(k), -k))
    best = None
    for k in ks:
        if best is not None and abs(k) > abs(best[0]):
            break
        n = nk(d, a, b, k)
        for p in range(1, p_max + 1):
            if n % p == 0 and jacobi_symbol(p, 4 * k - 1) == -1:
                if best is None or p < best[1]:
                    best = (k, p)
                break
    return best


def gaussian_integer_value(p: int, q: int) -> tuple[int, SurdValue]:
    """``p + iq`` with p odd, q even, as a value for ``d = p^2 + q^2``."""
    if p < 1 or q < 1 or p % 2 == 0 or q % 2:
        raise ValueError(f"need p odd and q even, both positive; got p={p}, q={q}")
    d = p * p + q * q
    assert congruence_gate(d, p * p)
    return d, SurdValue.of(p * p, q * q)


@dataclass(frozen=True)
class CMDescriptor:
    """All integer data for one associated parameter ``tau_{k,p}``."""

    d: int
    a: int
    b: int
    k: int
    p: int
    n_k: int
    m0: int
    n0: int
    epsilon: int
    sigma: UnimodularMatrix
    lambda0: SurdValue
    tau: UpperHalfPoint

    @classmethod
    def build(cls, d: int, a: int, b: int, k: int = 0, p: int = 1) -> "CMDescriptor":
        tau = associated_tau(d, a, b, k, p)
        return cls(d, a, b, k, p, nk(d, a, b, k), m0(d, a, b), n0(d, a, b), sign_epsilon(k, p),
                   sigma_matrix(d, a, b, k, p), SurdValue.of(a, b), tau)

    @property
    def lam(self) -> SurdValue:
        """The predicted critical value ``epsilon * lambda0``."""
        return SurdValue.of(self.a, self.b, self.epsilon)

    @property
    def mu(self) -> complex:
        return 1 / self.sigma.cocycle(complex(self.tau))

    def tau_string(self) -> str:
        return tau_string(self.d, self.a, self.b, self.k, self.p)


def associated_parameters(d: int, a: int, b: int, k_range=(-2, 2), p_max: int = 50):
    """All ``(k, p)`` with ``k`` in the inclusive range and ``p | N_k``, ``p <= p_max``."""
    out = []
    for k in range(k_range[0], k_range[1] + 1):
        out.extend((k, p) for p in divisors(nk(d, a, b, k)) if p <= p_max)
    return out


def theta_pair(desc: CMDescriptor, z: complex = 0.1 + 0.0j, cfg: ThetaConfig = DEFAULT_CONFIG
               ) -> CriticalPair:
    """The theta family at ``desc.tau`` as a verified :class:`CriticalPair`."""
    f = critical_family(desc.d, desc.tau, z, cfg, rescale=True).normalized()
    return CriticalPair(f, complex(desc.lam), desc.lam.to_sympy(), "theta_family",
                        {"a": desc.a, "b": desc.b, "k": desc.k, "p": desc.p, "z": complex(z),
                         "estimated": estimate_lambda(f)})
