"""Integer 2x2 matrices of determinant 1 and their action on the upper half plane."""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class UnimodularMatrix:
    """``[[alpha, beta], [gamma, delta]]`` in SL(2, Z)."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        if self.alpha * self.delta - self.beta * self.gamma != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")

    def rows(self) -> list[list[int]]:
        return [[self.alpha, self.beta], [self.gamma, self.delta]]

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        a, b, c, d = self.alpha, self.beta, self.gamma, self.delta
        e, f, g, h = other.alpha, other.beta, other.gamma, other.delta
        return UnimodularMatrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self) -> "UnimodularMatrix":
        return UnimodularMatrix(-self.alpha, -self.beta, -self.gamma, -self.delta)

    def act(self, tau: complex) -> complex:
        tau = complex(tau)
        return (self.alpha * tau + self.beta) / (self.gamma * tau + self.delta)

    def cocycle(self, tau: complex) -> complex:
        """``gamma*tau + delta``."""
        return self.gamma * complex(tau) + self.delta

    def is_congruent_to_identity(self, m: int, allow_sign: bool = True) -> bool:
        """``sigma = 1 (mod m)``, or ``+-1 (mod m)`` when ``allow_sign``."""
        def match(s):
            return ((self.alpha - s) % m == 0 and self.beta % m == 0
                    and self.gamma % m == 0 and (self.delta - s) % m == 0)
        return match(1) or (allow_sign and match(-1))


# generators of the principal congruence subgroup of level 2 (modulo -1)
_GAMMA2_GENS = (
    UnimodularMatrix(1, 2, 0, 1),
    UnimodularMatrix(1, -2, 0, 1),
    UnimodularMatrix(1, 0, 2, 1),
    UnimodularMatrix(1, 0, -2, 1),
)


def random_level_matrix(rng: random.Random, level: int = 2, max_len: int = 4,
                        positive_gamma: bool = True) -> UnimodularMatrix:
    """Random word in the elementary generators of level 2 or 4.

    With ``level=4`` the generators are squared, so the result is = 1 (mod 4).
    Words with ``gamma = 0`` are rejected when ``positive_gamma`` is set.
    """
    if level not in (2, 4):
        raise ValueError("level must be 2 or 4")
    gens = _GAMMA2_GENS if level == 2 else tuple(g @ g for g in _GAMMA2_GENS)
    while True:
        m = UnimodularMatrix(1, 0, 0, 1)
        for _ in range(rng.randint(1, max_len)):
            m = m @ rng.choice(gens)
        if rng.random() < 0.5:
            m = -m
        if positive_gamma:
            if m.gamma == 0:
                continue
            if m.gamma < 0:
                m = -m
        return m
