import numpy as np
import pytest

import oracle
from enhanced_brauer.duality import (
    axis_probes, build_constraints, commutant, filtration_violations, grid_probes, hom_space, is_block_diagonal,
    parabolic_hypothesis, proper_subsets, sanity_gl, verify_annihilation, verify_brauer, verify_filtration,
    verify_levi, verify_parabolic, verify_restricted,
)
from enhanced_brauer.exact_linalg import SparseOperator
from enhanced_brauer.forms import make_group, make_orthogonal
from enhanced_brauer.tensor_ops import TensorSpace

R2 = [("orthogonal", 4), ("symplectic", 6)]


def as_arrays(sub, d):
    out = []
    for b in sub.basis:
        v = np.zeros(d * d)
        for k, x in b.items():
            v[k] = float(x)
        out.append(v)
    return out


@pytest.mark.parametrize("levi, unipotent, oracle_kwargs", [
    (False, False, {}),
    (True, False, {"gm": True}),
    (False, True, {"unipotent": True}),
    (True, True, {"gm": True, "unipotent": True}),
])
def test_solver_matches_dense_oracle(levi, unipotent, oracle_kwargs):
    g = make_orthogonal(4)
    sp = TensorSpace(4, 2)
    mine = commutant(build_constraints(g, sp, levi=levi, unipotent=unipotent))
    ref = oracle.commutant(oracle.group_constraints("orthogonal", 4, 2, enhanced=True, **oracle_kwargs))
    assert mine.dim == len(ref)
    assert oracle.same_span(as_arrays(mine, 25), ref)


@pytest.mark.parametrize("kind, n", R2)
def test_reduced_and_plain_solvers_agree(kind, n):
    g = make_group(kind, n)
    sp = TensorSpace(n, 2)
    for kw in ({}, {"levi": True}, {"unipotent": True}):
        cs = build_constraints(g, sp, **kw)
        assert commutant(cs, reduce=True) == commutant(cs, reduce=False)
    plain = build_constraints(g, sp, monomial_helpers=False)
    assert commutant(plain) == commutant(build_constraints(g, sp))


@pytest.mark.parametrize("kind, n", R2)
def test_commutant_dimensions(kind, n):
    # frozen from the dense oracle
    g = make_group(kind, n)
    sp = TensorSpace(n, 2)
    dims = {
        "G": commutant(build_constraints(g, sp)).dim,
        "GxGm": commutant(build_constraints(g, sp, levi=True)).dim,
        "Gbar": commutant(build_constraints(g, sp, unipotent=True)).dim,
        "GbarxGm": commutant(build_constraints(g, sp, levi=True, unipotent=True)).dim,
    }
    assert dims == {"G": 10, "GxGm": 8, "Gbar": 3, "GbarxGm": 2}


def test_gm_modes_agree():
    g = make_orthogonal(4)
    sp = TensorSpace(4, 2)
    a = commutant(build_constraints(g, sp, levi=True, gm="grading"))
    b = commutant(build_constraints(g, sp, levi=True, gm="lie"))
    assert a == b and is_block_diagonal(b, sp)
    with pytest.raises(ValueError):
        build_constraints(g, sp, levi=True, gm="other")


def test_hom_space_between_components():
    g = make_orthogonal(4)
    sp = TensorSpace(4, 2)
    cs = build_constraints(g, sp)
    assert hom_space({1}, {2}, cs).dim == 1
    assert hom_space({1, 2}, set(), cs).dim == 1
    assert hom_space({1}, set(), cs).dim == 0


@pytest.mark.parametrize("kind, n", R2)
def test_scenario_checks_r2(kind, n):
    g = make_group(kind, n)
    assert verify_brauer(g, 2).passed
    rest = verify_restricted(g, 2)
    assert rest.passed and rest.sides[0]["dim"] == 10
    assert verify_levi(g, 2).passed
    filt = verify_filtration(g, 2)
    assert filt.passed and filt.details["negative_control_detected"]


@pytest.mark.parametrize("n", [2, 3])
def test_gl_sanity(n):
    rep = sanity_gl(n, 2)
    assert rep.passed and rep.sides[0]["dim"] == 2


@pytest.mark.parametrize("kind, n", R2)
def test_parabolic_dimensions(kind, n):
    # The three spaces are computed honestly: the commutant and B^V are
    # 2-dimensional while rho(B_2) is 3-dimensional and not invariant.
    rep = verify_parabolic(make_group(kind, n), 2)
    dims = {s["name"]: s["dim"] for s in rep.sides}
    assert list(dims.values()) == [2, 2, 3]
    assert rep.passed is False


def test_rho_tau_is_not_invariant_under_translations():
    # independent dense check of the obstruction
    n = 4
    t = oracle.tau("orthogonal", n, 2, 1, 2, enhanced=True)
    N = np.zeros((n + 1, n + 1))
    N[0, n] = 1
    d = oracle.derivation(N, 2)
    assert not np.allclose(t @ d, d @ t)


def test_filtration_control():
    sp = TensorSpace(2, 2)
    top, low = sp.level_indices(2)[0], sp.level_indices(1)[0]
    assert filtration_violations([SparseOperator.from_entries(sp.dim, sp.dim, [(low, top, 1)])], sp)
    assert not filtration_violations([SparseOperator.from_entries(sp.dim, sp.dim, [(top, low, 1)])], sp)


def test_probe_families():
    assert len(grid_probes(2, 2)) == 6
    assert all(sum(w) <= 2 for w in grid_probes(3, 2))
    assert len(axis_probes(4, 2)) == 12
    assert proper_subsets(2) == [frozenset(), frozenset({1}), frozenset({2})]


@pytest.mark.parametrize("kind, n", R2)
def test_annihilation(kind, n):
    g = make_group(kind, n)
    assert parabolic_hypothesis(g, 2)
    for J in proper_subsets(2):
        rep = verify_annihilation(g, 2, J)
        assert rep.passed
    with pytest.raises(ValueError):
        verify_annihilation(g, 2, {1, 2})


def test_parabolic_hypothesis():
    assert parabolic_hypothesis(make_group("orthogonal", 4), 2)
    assert not parabolic_hypothesis(make_group("symplectic", 4), 2)


@pytest.mark.slow
def test_brauer_commutant_r3():
    rep = verify_brauer(make_group("orthogonal", 6), 3)
    assert rep.passed and rep.sides[0]["dim"] == 15
