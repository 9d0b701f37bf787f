from MIntPy.Blaschke import beta
from MIntPy.Blaschke import BPFactor
from MIntPy.Blaschke import BPProduct
from MIntPy.Blaschke import eval_factor
from MIntPy.Blaschke import eval_product
from MIntPy.Blaschke import scalar_blaschke_product
from MIntPy.Blaschke import random_bp_factor
from MIntPy.Blaschke import random_bp_product
from MIntPy.MatCore import random_unitary
from MIntPy.MatCore import spectral_norm
from MIntPy.MatCore import rank_invariance_check
from MIntPy.MatCore import unitary_constant_check
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(5)


def _interior_points(rng, k, max_modulus=0.999):
    return max_modulus * np.sqrt(rng.uniform(size=k)) * np.exp(2j * np.pi * rng.uniform(size=k))


def test_beta_0():
    assert beta(0.3 - 0.1j, 0.3 - 0.1j) == 0
    assert beta(0, 0.25 + 0.5j) == 0.25 + 0.5j
    assert np.isclose(abs(beta(0.5, np.exp(1j * np.pi / 3))), 1)


def test_beta_1(rng):
    """beta is bounded by one on the disk and unimodular on the circle."""
    zs = _interior_points(rng, 200)
    assert np.all(np.abs(beta(0.7j, zs)) <= 1 + 1e-12)
    assert np.allclose(np.abs(beta(0.7j, np.exp(2j * np.pi * rng.uniform(size=50)))), 1)


def test_beta_2():
    with pytest.raises(AssertionError):
        beta(1.0, 0.5)


def test_bp_factor_0(rng):
    """At the zero the factor is I - P, whose kernel is the range of P."""
    b = BPFactor(0.2 + 0.4j, random_unitary(rng, 3), 2)
    p = b.projection
    assert np.allclose(p @ p, p) and np.allclose(p, p.conj().T)
    assert np.allclose(eval_factor(b, b.zero), np.eye(3) - p)
    assert np.isclose(np.linalg.det(eval_factor(b, b.zero)), 0)
    assert np.linalg.matrix_rank(eval_factor(b, b.zero)) == 1


def test_bp_factor_1(rng):
    """The full-rank factor is the scalar Blaschke factor times I."""
    b = BPFactor(-0.5j, random_unitary(rng, 2), 2)
    assert np.allclose(b(0.3), beta(-0.5j, 0.3) * np.eye(2))


def test_bp_factor_2(rng):
    for _ in range(10):
        b = random_bp_factor(rng, 3)
        z = np.exp(2j * np.pi * rng.uniform())
        value = b(z)
        assert spectral_norm(value @ value.conj().T - np.eye(3)) <= 1e-10


def test_bp_factor_3(rng):
    b = random_bp_factor(rng, 3)
    z = 0.1 - 0.3j
    assert np.allclose(b.inverse(z) @ b(z), np.eye(3))
    assert np.isclose(b.det(z), np.linalg.det(b(z)))
    assert np.allclose(b.evaluate_many([z, 0.5])[0], b(z))


def test_bp_factor_4(rng):
    b = random_bp_factor(rng, 3, rank=2)
    rebuilt = BPFactor.from_projection(b.zero, b.projection)
    assert rebuilt.rank == 2
    assert np.allclose(rebuilt(0.4j), b(0.4j))


def test_bp_factor_5(rng):
    with pytest.raises(AssertionError):
        BPFactor(1.2, np.eye(2), 1)
    with pytest.raises(AssertionError):
        BPFactor(0.5, np.eye(2), 0)
    with pytest.raises(AssertionError):
        BPFactor(0.5, 2 * np.eye(2), 1)


def test_bp_product_0(rng):
    """Without factors the product is its unitary tail."""
    tail = random_unitary(rng, 2)
    B = BPProduct([], tail)
    assert np.allclose(eval_product(B, 0.3j), tail)
    assert len(B) == 0 and B.blaschke_sum() == 0
    assert np.allclose(BPProduct(dim=3)(0.5), np.eye(3))


def test_bp_product_1(rng):
    tail = random_unitary(rng, 2)
    B = BPProduct([BPFactor(0.5, np.eye(2), 2)], tail)
    assert np.allclose(B(0.1j), beta(0.5, 0.1j) * tail)


def test_bp_product_2(rng):
    """det B equals the scalar Blaschke product of the zeros with multiplicities r_i times det V."""
    for _ in range(10):
        B = random_bp_product(rng, 3, 4)
        for z in _interior_points(rng, 5):
            expected = scalar_blaschke_product(B.zeros, B.ranks, z) * np.linalg.det(B.tail_unitary)
            assert abs(np.linalg.det(B(z)) - expected) <= 1e-10 * max(abs(expected), 1e-300)
            assert np.isclose(B.det(z), expected, rtol=1e-10, atol=0)


def test_bp_product_3(rng):
    """Finite products take unitary values on the circle."""
    B = random_bp_product(rng, 3, 5)
    for z in np.exp(2j * np.pi * np.arange(64) / 64):
        value = B(z)
        assert spectral_norm(value @ value.conj().T - np.eye(3)) <= 1e-9


def test_bp_product_4(rng):
    """Finite products are contractive on the disk."""
    B = random_bp_product(rng, 3, 5)
    values = B.evaluate_many(_interior_points(rng, 500))
    assert np.all(np.linalg.norm(values, ord=2, axis=(-2, -1)) <= 1 + 1e-9)


def test_bp_product_5(rng):
    B = random_bp_product(rng, 2, 3)
    zs = _interior_points(rng, 10)
    assert np.allclose(B.evaluate_many(zs), [eval_product(B, z) for z in zs])


def test_blaschke_sum_0():
    B = BPProduct([BPFactor(0.5, np.eye(2), 1), BPFactor(-0.75j, np.eye(2), 2)])
    assert np.isclose(B.blaschke_sum(), 0.5 + 2 * 0.25)


def test_tail_bound_0(rng):
    """Dropping the last factors changes B by at most the tail bound on |z| <= r."""
    B = random_bp_product(rng, 2, 6, max_modulus=0.95)
    for r in (0.3, 0.7):
        for start in (2, 4):
            truncated = B.truncated(start)
            zs = _interior_points(rng, 50, max_modulus=r)
            gap = np.max(np.linalg.norm(B.evaluate_many(zs) - truncated.evaluate_many(zs), ord=2, axis=(-2, -1)))
            assert gap <= B.tail_bound(r, start) + 1e-12


def test_save_load_0(rng, tmp_path):
    B = random_bp_product(rng, 2, 3)
    path = str(tmp_path / 'product.joblib')
    B.save(path)
    loaded = BPProduct.load(path)
    assert np.allclose(loaded(0.2 + 0.1j), B(0.2 + 0.1j))
    assert np.allclose(loaded.zeros, B.zeros)


def test_to_mvf_0(rng):
    B = random_bp_product(rng, 2, 2)
    A = B.to_mvf()
    assert A.contractive
    assert np.isclose(A.det(0.3), np.linalg.det(B(0.3)))


def test_rank_invariance_0(rng):
    """I - A A* has the same rank at every point for a block-embedded factor."""
    A = BPFactor(0.3, random_unitary(rng, 3), 1).to_mvf()
    holds, ranks = rank_invariance_check(A, _interior_points(rng, 50, max_modulus=0.95))
    assert holds and ranks[0] == 1


def test_unitary_constant_0(rng):
    """Non-constant products are never unitary inside the disk; constant unitaries are flagged constant."""
    B = random_bp_product(rng, 2, 2)
    holds, touches, _ = unitary_constant_check(B.to_mvf(), _interior_points(rng, 30, max_modulus=0.9))
    assert holds and not touches
    holds, touches, _ = unitary_constant_check(BPProduct([], random_unitary(rng, 2)).to_mvf(), [0, 0.5, -0.2j])
    assert holds and touches
