import math

import numpy as np
import pytest
import sympy as sp

from thetacrit.constructions import (ConstructionError, CriticalPair, constant_tail, gauss_sum,
                                     gaussian_function, induce_product, induce_quotient, induce_subgroup,
                                     quadratic_gaussian)
from thetacrit.cyclic import CyclicFunction, dft, is_critical
from thetacrit.exact import exactly_equal

ODD = range(3, 40, 2)


@pytest.mark.parametrize("d", ODD)
@pytest.mark.parametrize("variant", ["zero", "one", "plus", "minus"])
def test_constant_tail(d, variant):
    pair = constant_tail(d, variant)
    assert pair.relative_residual <= 1e-9
    disc = sp.sqrt((d - 1) * (d - 9))
    want = {"zero": 1, "one": d, "plus": (d - 3 + disc) / 2, "minus": (d - 3 - disc) / 2}[variant]
    assert exactly_equal(pair.lambda_exact, want)


def test_constant_tail_known_values():
    assert exactly_equal(constant_tail(11, "plus").lambda_exact, 4 + sp.sqrt(5))
    assert exactly_equal(constant_tail(3, "plus").lambda_exact, sp.I * sp.sqrt(3))
    assert exactly_equal(constant_tail(9, "plus").lambda_exact, 3)
    with pytest.raises(ValueError):
        constant_tail(5, "other")


def brute_gauss(d, c):
    return sum(np.exp(2j * np.pi * c * l * l / d) for l in range(d))


@pytest.mark.parametrize("d", ODD)
def test_gauss_sum_vs_direct(d):
    for c in range(1, d):
        if math.gcd(c, d) == 1:
            assert complex(gauss_sum(d, c)) == pytest.approx(brute_gauss(d, c), abs=1e-9)


@pytest.mark.parametrize("d", ODD)
def test_gaussian_function(d):
    pair = gaussian_function(d)
    want = sp.sqrt(d) if d % 4 == 1 else sp.I * sp.sqrt(d)
    assert exactly_equal(pair.lambda_exact, want)
    k = np.arange(d)
    assert np.allclose(pair.f.values, (-1.0) ** k * np.exp(1j * np.pi * k * k / d))


def test_gaussian_opposite_sign():
    # -sqrt(5) comes from a non-residue multiplier
    lams = {complex(quadratic_gaussian(5, u).lam) for u in range(1, 5)}
    assert any(abs(l + 5 ** 0.5) < 1e-12 for l in lams)
    assert any(abs(l - 5 ** 0.5) < 1e-12 for l in lams)
    # for a square order every unit is a residue, so only one value occurs
    assert {round(quadratic_gaussian(9, u).lam.real, 9) for u in (1, 2, 4, 5, 7, 8)} == {3.0}
    with pytest.raises(ValueError):
        quadratic_gaussian(9, 3)


def test_induction_values():
    inner = gaussian_function(3)
    sub = induce_subgroup(inner, 9)
    assert sub.lam == pytest.approx(1j * 3 ** 0.5)
    quo = induce_quotient(inner, 9, 3)
    assert quo.lam == pytest.approx(3j * 3 ** 0.5)
    prod = induce_product(gaussian_function(3), constant_tail(5, "one"))
    assert prod.d == 15 and prod.lam == pytest.approx(5j * 3 ** 0.5)
    assert exactly_equal(prod.lambda_exact, 5 * sp.I * sp.sqrt(3))
    with pytest.raises(ValueError):
        induce_product(inner, inner)
    with pytest.raises(ValueError):
        induce_subgroup(inner, 10)


def test_self_check_rejects_wrong_lambda():
    with pytest.raises(ConstructionError):
        CriticalPair(CyclicFunction.constant(5), 4.0, provenance="constant_tail")
    with pytest.raises(ConstructionError):
        CriticalPair(CyclicFunction.constant(5), 5.0, sp.Integer(6), "constant_tail")
    with pytest.raises(ValueError):
        CriticalPair(CyclicFunction.constant(5), 5.0, provenance="unknown")


def test_conjugate_pair():
    pair = gaussian_function(7).conjugate()
    assert pair.provenance == "conjugate"
    assert exactly_equal(pair.lambda_exact, -sp.I * sp.sqrt(7))


@pytest.mark.parametrize("d", [3, 5, 7, 9, 15, 21])
def test_bound_and_duality(d):
    pairs = [constant_tail(d, v) for v in ("zero", "one", "plus", "minus")] + [gaussian_function(d)]
    for p in pairs:
        assert abs(p.lam) <= d + 1e-12
        assert is_critical(dft(p.f), d / p.lam, 1e-7)
