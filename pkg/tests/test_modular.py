import random

import pytest

from thetacrit.modular import UnimodularMatrix, random_level_matrix


def test_determinant_enforced():
    with pytest.raises(ValueError):
        UnimodularMatrix(1, 1, 1, 1)


def test_product_action_compatible():
    rng = random.Random(1)
    tau = 0.3 + 1.1j
    for _ in range(20):
        a = random_level_matrix(rng, 2)
        b = random_level_matrix(rng, 2)
        assert (a @ b).act(tau) == pytest.approx(a.act(b.act(tau)))
        # cocycle relation j(ab, tau) = j(a, b tau) j(b, tau)
        assert (a @ b).cocycle(tau) == pytest.approx(a.cocycle(b.act(tau)) * b.cocycle(tau))


@pytest.mark.parametrize("level", [2, 4])
def test_random_level_matrices(level):
    rng = random.Random(level)
    for _ in range(100):
        m = random_level_matrix(rng, level)
        assert m.gamma > 0
        assert m.is_congruent_to_identity(level)
        assert (-m).is_congruent_to_identity(level)


def test_congruence_signs():
    m = UnimodularMatrix(-1, 4, 0, -1)
    assert m.is_congruent_to_identity(4)
    assert not m.is_congruent_to_identity(4, allow_sign=False)
    with pytest.raises(ValueError):
        random_level_matrix(random.Random(0), 3)
