import math
from fractions import Fraction

import pytest
import sympy

from thetacrit import cm
from thetacrit.cyclic import estimate_lambda
from thetacrit.modular import UnimodularMatrix
from thetacrit.theta import critical_family

GATE = [(d, a, b) for d in range(5, 26, 2) for a, b in cm.enumerate_pairs(d)]


def test_gates_equivalent_exhaustive():
    for d in range(3, 100, 2):
        for a in range(1, d):
            assert cm.congruence_gate(d, a) == cm.integrality_gate(a, d - a)


def test_integrality_gate_is_algebraic_integrality():
    # (lam^2 - 1)/4 is an algebraic integer iff the gate passes
    x = sympy.Symbol("x")
    for d in range(3, 22, 2):
        for a in range(1, d):
            b = d - a
            lam = sympy.sqrt(a) + sympy.I * sympy.sqrt(b)
            poly = sympy.Poly(sympy.minimal_polynomial((lam ** 2 - 1) / 4, x), x)
            integral = all(sympy.Rational(c, poly.LC()).q == 1 for c in poly.all_coeffs())
            assert integral == cm.integrality_gate(a, b), (a, b)


def test_enumerate_pairs():
    assert cm.enumerate_pairs(9) == [(1, 8), (5, 4)]
    assert cm.enumerate_pairs(5) == [(1, 4)]
    assert cm.enumerate_pairs(3) == []
    with pytest.raises(ValueError):
        cm.enumerate_pairs(8)


def test_example_tables():
    assert cm.m0(5, 1, 4) == -7 and cm.nk_polynomial(5, 1, 4) == (25, -14, 2)
    assert cm.m0(7, 4, 3) == -12 and cm.nk_polynomial(7, 4, 3) == (49, -24, 3)
    assert cm.m0(9, 1, 8) == -22 and cm.nk_polynomial(9, 1, 8) == (81, -44, 6)
    assert cm.m0(9, 5, 4) == -20 and cm.nk_polynomial(9, 5, 4) == (81, -40, 5)
    assert cm.n0(5, 1, 4) == 2


@pytest.mark.parametrize("d,a,b", GATE)
def test_nk_exact_identity(d, a, b):
    for k in range(-5, 6):
        n = cm.nk_from_tau(d, a, b, k)
        assert n.denominator == 1 and n == cm.nk(d, a, b, k)
        tau0 = complex(cm.fundamental_tau(d, a, b))
        assert round(d * d * abs(k + tau0) ** 2) == cm.nk(d, a, b, k)


def test_gate_errors():
    with pytest.raises(cm.GateError):
        cm.m0(5, 2, 3)
    with pytest.raises(cm.GateError):
        cm.associated_tau(5, 1, 4, 0, 3)
    with pytest.raises(cm.GateError):
        cm.sigma_matrix(5, 1, 4, 0, 3)
    with pytest.raises(cm.GateError):
        cm.m0(6, 1, 5)


def test_tau_strings():
    assert cm.tau_string(5, 1, 4, 0, 1) == "(-7 + i)/25"
    assert cm.tau_string(7, 4, 3, 1, 2) == "(37 + i√3)/98"
    assert cm.tau_string(9, 5, 4, 1, 2) == "(61 + i√5)/162"
    assert cm.tau_string(17, 9, 8, 0, 1) == "(-72 + 3i√2)/289"


def test_sigma_example():
    s = cm.sigma_matrix(5, 1, 4, 0, 1)
    assert s.rows() == [[-31, -8], [4, 1]]


@pytest.mark.parametrize("d,a,b", GATE)
def test_sigma_properties(d, a, b):
    for k, p in cm.associated_parameters(d, a, b, (-3, 3), 50):
        s = cm.sigma_matrix(d, a, b, k, p)
        assert s.alpha % 4 == 1 and s.delta % 4 == 1 and s.beta % 4 == 0 and s.gamma % 4 == 0
        assert (s.alpha * s.delta) % 16 == 1
        tau = complex(cm.associated_tau(d, a, b, k, p))
        assert abs(s.act(tau) - d * d * tau) < 1e-9 * d * d * max(1, abs(tau))
        mu = 1 / s.cocycle(tau)
        assert abs(mu - cm.mu_from_pair(a, b)) < 1e-7 * d


@pytest.mark.parametrize("d,a,b", GATE)
def test_value_from_sigma_matches_sign_law(d, a, b):
    for k, p in cm.associated_parameters(d, a, b, (-2, 2), 50):
        desc = cm.CMDescriptor.build(d, a, b, k, p)
        lam = cm.critical_value_from_sigma(desc.sigma, desc.tau)
        assert lam == pytest.approx(complex(desc.lam), abs=1e-7)


def test_value_from_sigma_rejects():
    desc = cm.CMDescriptor.build(5, 1, 4, 0, 1)
    with pytest.raises(ValueError):
        cm.critical_value_from_sigma(desc.sigma, 0.1 + 1j)
    with pytest.raises(ValueError):
        cm.critical_value_from_sigma(UnimodularMatrix(1, 0, -4, 1), desc.tau)


def test_sign_epsilon():
    assert cm.sign_epsilon(0, 1) == 1
    assert cm.sign_epsilon(1, 2) == -1
    assert cm.sign_epsilon(2, 5) == sympy.jacobi_symbol(5, 7)
    with pytest.raises(ValueError):
        cm.sign_epsilon(1, 3)


def test_end_to_end_sign_law():
    zs = (0.1, 0.43, 0.2 + 0.15j)
    for d in range(5, 18, 2):
        for a, b in cm.enumerate_pairs(d):
            for k, p in cm.associated_parameters(d, a, b, (-3, 3), 50):
                desc = cm.CMDescriptor.build(d, a, b, k, p)
                want = cm.sign_epsilon(k, p) * complex(desc.lambda0)
                for z in zs:
                    f = critical_family(d, desc.tau, z, rescale=True)
                    assert abs(estimate_lambda(f) - want) < 1e-7


def test_negative_examples():
    assert cm.search_negative_sign(7, 4, 3) == (1, 2)
    assert cm.search_negative_sign(9, 5, 4) == (1, 2)
    assert cm.search_negative_sign(5, 1, 4) is None
    assert not cm.negative_sign_exists(1, 4)
    assert cm.negative_sign_exists(5, 4)


def test_negative_sign_criterion_vs_residue_scan():
    # a square: criterion is "-b is not a square mod 4 sqrt(a)"; independent scan
    for r in range(1, 8):
        a = r * r
        for b in range(1, 120):
            scan = all((x * x + b) % (4 * r) for x in range(4 * r))
            assert cm.negative_sign_exists(a, b) == scan


def test_search_order_prefers_small_k_then_p():
    for d, a, b in GATE:
        hit = cm.search_negative_sign(d, a, b, -10, 10, 100)
        if hit is None:
            continue
        k, p = hit
        assert cm.nk(d, a, b, k) % p == 0 and cm.sign_epsilon(k, p) == -1
        for k2 in range(-abs(k) + 1, abs(k)):
            n = cm.nk(d, a, b, k2)
            assert not any(n % q == 0 and cm.sign_epsilon(k2, q) == -1 for q in range(1, 101))


def test_false_direction_exhaustive_bound():
    for d, a, b in GATE:
        if not cm.negative_sign_exists(a, b):
            assert cm.search_negative_sign(d, a, b, -25, 25, 500) is None


def test_witness_direction_bounded():
    missing = [(d, a) for d, a, b in GATE
               if cm.negative_sign_exists(a, b) and cm.search_negative_sign(d, a, b, -25, 25, 500) is None]
    assert missing == []


def test_gaussian_integer_value():
    d, v = cm.gaussian_integer_value(1, 2)
    assert d == 5 and str(v) == "1 + 2i"
    with pytest.raises(ValueError):
        cm.gaussian_integer_value(2, 1)


def test_descriptor_and_pair():
    desc = cm.CMDescriptor.build(9, 5, 4, 1, 2)
    assert str(desc.lam) == "-√5 - 2i"
    assert desc.tau_string() == "(61 + i√5)/162"
    pair = cm.theta_pair(desc)
    assert pair.provenance == "theta_family" and pair.relative_residual < 1e-9


def test_associated_parameters_divisors():
    params = cm.associated_parameters(5, 1, 4, (0, 0), 50)
    assert params == [(0, 1), (0, 2)]
