import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from enhanced_brauer.diagrams import NormalizedDiagram, Permutation
from enhanced_brauer.exact_linalg import SparseOperator
from enhanced_brauer.forms import (
    enhanced_group_element, lift_to_enhanced, make_group, make_orthogonal, make_symplectic, random_group_element,
)
from enhanced_brauer.tensor_ops import (
    TensorSpace, all_components, components_of_size, contraction, difference_vector, dphi, embed_sigma,
    embed_sigma_by_conjugation, expansion, generalized_tau, level_projection, phi, phi_apply, projection, psi,
    rho_single, tau, tau_z, transfer,
)


def dense(op: SparseOperator) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in op.to_dense()])


def test_space_layout():
    sp = TensorSpace(2, 2)
    assert sp.dim == 9 and sp.eta == 2
    assert sp.tuples[sp.index((1, 2))] == (1, 2)
    assert sp.component_of(sp.index((0, 2))) == frozenset({1})
    assert sp.level_of(sp.index((2, 2))) == 0
    assert len(sp.component_indices({1, 2})) == 4
    assert sum(len(sp.component_indices(I)) for I in all_components(2)) == sp.dim
    assert len(components_of_size(3, 2)) == 3


@pytest.mark.parametrize("kind, n", [("orthogonal", 3), ("symplectic", 4)])
def test_phi_matches_kronecker_power(kind, n):
    g = make_group(kind, n)
    x = random_group_element(g, random.Random(0), terms=2)
    sp = TensorSpace(n, 2, False)
    assert np.allclose(dense(phi(x, sp)), oracle.tensor_power(dense(x), 2))


@pytest.mark.parametrize("kind, n, r", [("orthogonal", 3, 2), ("orthogonal", 2, 3), ("symplectic", 4, 2)])
def test_tau_matches_oracle(kind, n, r):
    g = make_group(kind, n)
    for enhanced in (False, True):
        sp = TensorSpace(n, r, enhanced)
        for i in range(1, r + 1):
            for j in range(i + 1, r + 1):
                assert np.allclose(dense(tau(i, j, g.form, sp)), oracle.tau(kind, n, r, i, j, enhanced))


@pytest.mark.parametrize("kind, n", [("orthogonal", 3), ("symplectic", 4)])
def test_tau_is_expansion_after_contraction(kind, n):
    g = make_group(kind, n)
    sp = TensorSpace(n, 3, False)
    for i, j in [(1, 2), (1, 3), (2, 3)]:
        assert tau(i, j, g.form, sp) == generalized_tau(i, j, g.form, 3)
        t = tau(i, j, g.form, sp)
        assert t @ t == t * n


@pytest.mark.parametrize("kind, n", [("orthogonal", 3), ("symplectic", 4)])
def test_contraction_of_expansion_is_n(kind, n):
    f = make_group(kind, n).form
    c, d = contraction(1, 2, f, 2), expansion(1, 2, f, 2)
    assert (c @ d).to_dense() == [[n]]


def test_symplectic_swap_negates_tau():
    f = make_symplectic(4).form
    sp = TensorSpace(4, 2, False)
    t = tau(1, 2, f, sp)
    assert psi(Permutation((2, 1)), sp) @ t == -t
    assert t @ psi(Permutation((2, 1)), sp) == -t


def test_orthogonal_swap_fixes_tau():
    f = make_orthogonal(3).form
    sp = TensorSpace(3, 2, False)
    t = tau(1, 2, f, sp)
    assert psi(Permutation((2, 1)), sp) @ t == t


def test_place_permutation_convention():
    sp = TensorSpace(3, 3, False)
    s = Permutation((2, 3, 1))  # slot 1 -> 2, 2 -> 3, 3 -> 1
    img = psi(s, sp).apply(sp.basis_vector((0, 1, 2)))
    assert img == sp.basis_vector((2, 0, 1))
    assert np.allclose(dense(psi(s, sp)), oracle.place_permutation(s.images, 3))


perms3 = st.sampled_from(Permutation.all(3))


@given(perms3, perms3)
def test_psi_is_a_homomorphism(a, b):
    sp = TensorSpace(2, 3)
    assert psi(a * b, sp) == psi(a, sp) @ psi(b, sp)


@given(st.integers(0, 1000))
def test_phi_is_multiplicative_and_commutes_with_psi(seed):
    g = make_symplectic(2)
    rng = random.Random(seed)
    x = lift_to_enhanced(random_group_element(g, rng, terms=2))
    y = enhanced_group_element([rng.randint(-2, 2), rng.randint(-2, 2)])
    sp = TensorSpace(2, 2)
    assert phi(x @ y, sp) == phi(x, sp) @ phi(y, sp)
    assert phi(x, sp) @ psi(Permutation((2, 1)), sp) == psi(Permutation((2, 1)), sp) @ phi(x, sp)


@given(st.integers(0, 1000))
def test_dphi_is_a_lie_homomorphism(seed):
    rng = random.Random(seed)
    n = 3
    a = SparseOperator.from_dense([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
    b = SparseOperator.from_dense([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
    sp = TensorSpace(n - 1, 2)  # letters 0..n-1
    assert dphi(a.commutator(b), sp) == dphi(a, sp).commutator(dphi(b, sp))


def test_projections_sum_to_identity():
    sp = TensorSpace(2, 3)
    total = SparseOperator.zero(sp.dim)
    for I in all_components(3):
        total = total + projection(I, sp)
    assert total == SparseOperator.identity(sp.dim)
    levels = SparseOperator.zero(sp.dim)
    for l in range(4):
        levels = levels + level_projection(l, sp)
    assert levels == total


@pytest.mark.parametrize("kind, n", [("orthogonal", 2), ("symplectic", 2)])
def test_embedding_by_conjugation(kind, n):
    f = make_group(kind, n).form
    sp = TensorSpace(n, 3)
    small = TensorSpace(n, 2, False)
    sigma = psi(Permutation((2, 1)), small) + tau(1, 2, f, small)
    for I in components_of_size(3, 2):
        assert embed_sigma(sigma, I, sp) == embed_sigma_by_conjugation(sigma, I, sp)


def test_transfer_moves_components():
    sp = TensorSpace(2, 3)
    e = transfer({2, 3}, {1, 2}, sp)
    v = sp.basis_vector((0, 1, 2))
    assert e.apply(v) == sp.basis_vector((2, 0, 1))
    assert transfer({1, 2}, {2, 3}, sp) @ e == projection({1, 2}, sp)


def test_rho_of_permutation_is_place_permutation():
    f = make_orthogonal(2).form
    sp = TensorSpace(2, 2)
    s = Permutation((2, 1))
    assert rho_single(s, NormalizedDiagram.empty(2), f, sp) == psi(s, sp)
    z = NormalizedDiagram(2, ((1, 2),))
    assert rho_single(Permutation.identity(2), z, f, sp) == tau_z(z, f, sp)


def test_difference_vector():
    sp = TensorSpace(2, 2)
    v = sp.basis_vector((0, 2))  # f_1 (x) eta
    d = difference_vector(v, [Fraction(3), Fraction(0)], sp)
    assert d == {sp.index((0, 0)): 3}
    g = enhanced_group_element([1, 1])
    assert phi_apply(g, sp, v) == phi(g, sp).apply(v)
