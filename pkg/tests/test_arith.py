import math

import pytest
import sympy
from hypothesis import given, strategies as st

from thetacrit.arith import crt_index, divisors, is_square, is_square_mod, jacobi_symbol, squarefree_split

odd = st.integers(min_value=-301, max_value=301).filter(lambda n: n % 2)


@given(st.integers(-500, 500), odd)
def test_jacobi_matches_sympy(top, bottom):
    if math.gcd(top, bottom) != 1:
        with pytest.raises(ValueError):
            jacobi_symbol(top, bottom)
        return
    assert jacobi_symbol(top, bottom) == sympy.jacobi_symbol(top % abs(bottom), abs(bottom))


def test_jacobi_legendre_by_residue_scan():
    for p in (3, 5, 7, 11, 13, 101):
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert jacobi_symbol(a, p) == (1 if a in squares else -1)


def test_jacobi_examples():
    assert jacobi_symbol(4, 3) == 1
    assert jacobi_symbol(2, 3) == -1
    assert jacobi_symbol(2, -3) == jacobi_symbol(2, 3)
    assert jacobi_symbol(1, 1) == 1
    with pytest.raises(ValueError):
        jacobi_symbol(3, 4)


@given(st.integers(1, 10 ** 6))
def test_squarefree_split(n):
    c, r = squarefree_split(n)
    assert c * c * r == n
    assert all(r % (q * q) for q in range(2, math.isqrt(r) + 1))


@given(st.integers(1, 20000))
def test_divisors_match_sympy(n):
    assert divisors(n) == sympy.divisors(n)
    assert divisors(-n) == divisors(n)


def test_divisors_of_zero():
    with pytest.raises(ValueError):
        divisors(0)


@given(st.integers(0, 10 ** 8))
def test_is_square(n):
    assert is_square(n) == (math.isqrt(n) ** 2 == n)
    assert not is_square(-1)


def test_crt_index():
    for d1, d2 in ((3, 5), (5, 7), (9, 11)):
        seen = {crt_index(r1, d1, r2, d2) for r1 in range(d1) for r2 in range(d2)}
        assert seen == set(range(d1 * d2))
        assert crt_index(2, d1, 4, d2) % d1 == 2 and crt_index(2, d1, 4, d2) % d2 == 4
    with pytest.raises(ValueError):
        crt_index(0, 3, 0, 9)


def test_is_square_mod():
    assert is_square_mod(-4, 4)
    assert not is_square_mod(-5, 12)
    assert is_square_mod(2, 7)
    assert not is_square_mod(3, 7)
