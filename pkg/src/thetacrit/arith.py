"""Exact integer helpers: Jacobi symbols, squares, divisors, CRT."""

from __future__ import annotations

import math


def jacobi_symbol(top: int, bottom: int) -> int:
    """Jacobi symbol ``(top/bottom)`` for odd ``bottom``.

    A negative ``bottom`` is replaced by ``-bottom``, so ``(2/-3) = (2/3)``.
    Raises ``ValueError`` if ``bottom`` is even or the arguments are not coprime.
    """
    if bottom % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd bottom, got {bottom}")
    n, m = top, abs(bottom)
    if math.gcd(n, m) != 1:
        raise ValueError(f"Jacobi symbol ({top}/{bottom}) undefined: gcd > 1")
    acc = 1
    n %= m
    while n:
        while n % 2 == 0:
            n //= 2
            if m % 8 in (3, 5):
                acc = -acc
        n, m = m, n
        if n % 4 == 3 and m % 4 == 3:
            acc = -acc
        n %= m
    return acc


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = c**2 * r`` with ``r`` square-free, returning ``(c, r)``."""
    if n < 0:
        raise ValueError("squarefree_split expects n >= 0")
    if n == 0:
        return 0, 0
    c, r = 1, n
    q = 2
    while q * q <= r:
        while r % (q * q) == 0:
            r //= q * q
            c *= q
        q += 1
    return c, r


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n != 0`` by trial division, ascending."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no finite divisor list")
    small, large = [], []
    q = 1
    while q * q <= n:
        if n % q == 0:
            small.append(q)
            if q * q != n:
                large.append(n // q)
        q += 1
    return small + large[::-1]


def crt_index(r1: int, d1: int, r2: int, d2: int) -> int:
    """The unique ``k`` in ``[0, d1*d2)`` with ``k = r1 mod d1`` and ``k = r2 mod d2``."""
    if math.gcd(d1, d2) != 1:
        raise ValueError(f"orders {d1} and {d2} are not coprime")
    inv = pow(d1, -1, d2)
    return (r1 + d1 * ((r2 - r1) * inv % d2)) % (d1 * d2)


def is_square_mod(x: int, n: int) -> bool:
    """True if ``x`` is congruent to a square modulo ``n`` (residue scan)."""
    x %= n
    return any(y * y % n == x for y in range(n))
