import numpy as np
import pytest

import oracle
from enhanced_brauer.algebra import (
    basis_regime, brauer_dim, check_closure, check_dimensions, dimension_table, enhanced_dim, level_dim,
    rho_image, rho_image_closure, span_B_IJ, span_B_st, span_enhanced, span_plain_brauer, verify_level_identity,
    verify_multiplication_formula, verify_rho_decomposition,
)
from enhanced_brauer.forms import make_group, make_orthogonal

R2 = [("orthogonal", 4), ("symplectic", 6)]


def as_arrays(sub, d):
    out = []
    for b in sub.basis:
        v = np.zeros(d * d)
        for k, x in b.items():
            v[k] = float(x)
        out.append(v)
    return out


def test_formulas():
    assert [brauer_dim(r) for r in (1, 2, 3, 4)] == [1, 3, 15, 105]
    assert [level_dim(2, l) for l in range(3)] == [1, 4, 3]
    assert [level_dim(3, l) for l in range(4)] == [1, 9, 27, 15]
    assert enhanced_dim(2) == 8 and enhanced_dim(3) == 52
    assert basis_regime(4, 2) and not basis_regime(3, 2)


@pytest.mark.parametrize("kind, n", R2)
def test_plain_brauer_span(kind, n):
    b = span_plain_brauer(make_group(kind, n), 2)
    assert b.dim == 3
    assert len(b.elements) == 2 * 2  # S_2 x Z_2
    assert oracle.same_span(as_arrays(b.span, n * n), oracle.brauer_span(kind, n, 2))


@pytest.mark.parametrize("kind, n", R2)
def test_enhanced_dimensions_r2(kind, n):
    enh = span_enhanced(make_group(kind, n), 2)
    assert [h.dim for h in enh.meta["levels"]] == [1, 4, 3]
    assert enh.dim == 8 and enh.meta["direct"]


def test_enhanced_algebra_matches_oracle_levi_commutant():
    g = make_orthogonal(4)
    enh = span_enhanced(g, 2)
    ref = oracle.commutant(oracle.group_constraints("orthogonal", 4, 2, enhanced=True, gm=True))
    assert oracle.same_span(as_arrays(enh.span, 25), ref)


@pytest.mark.parametrize("kind, n", R2)
def test_block_dimensions_r2(kind, n):
    g = make_group(kind, n)
    dims = [[span_B_st(g, 2, s, t).dim for t in range(3)] for s in range(3)]
    # oracle: End_G blocks between levels, frozen
    assert dims == [[1, 0, 1], [0, 4, 0], [1, 0, 3]]


def test_single_blocks():
    g = make_orthogonal(4)
    assert span_B_IJ(g, 2, {1}, {2}).dim == 1
    assert span_B_IJ(g, 2, {1, 2}, set()).dim == 1
    assert span_B_IJ(g, 2, {1}, set()).dim == 0


@pytest.mark.slow
def test_enhanced_dimensions_r3():
    g = make_group("orthogonal", 6)
    table = dimension_table(g, 3)
    assert [row["dim"] for row in table["levels"]] == [1, 9, 27, 15]
    assert table["total"] == 52 and table["direct_sum"]
    assert span_plain_brauer(g, 3).dim == 15


def test_small_n_is_not_asserted():
    rep = check_dimensions(make_group("orthogonal", 2), 2)
    assert rep.passed is None
    assert any("not applicable" in note for note in rep.notes)


@pytest.mark.parametrize("kind, n", R2)
def test_structure_checks_r2(kind, n):
    g = make_group(kind, n)
    assert check_dimensions(g, 2).passed
    assert verify_level_identity(g, 2).passed
    mul = verify_multiplication_formula(g, 2)
    assert mul.passed and mul.details["pairs_checked"] == 32
    assert verify_rho_decomposition(g, 2).passed
    assert check_closure(g, 2).passed


@pytest.mark.parametrize("kind, n", R2)
def test_rho_image(kind, n):
    g = make_group(kind, n)
    assert rho_image(g, 2).dim == 3
    assert rho_image_closure(g, 2)["closed"]
    assert rho_image(g, 2, I={1, 2}).dim == 3
    assert rho_image(g, 2, I={1}).dim == 2
