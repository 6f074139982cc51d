import random

import pytest

from enhanced_brauer.forms import make_group
from enhanced_brauer.identities import (
    check_bar_commutation, check_embedding, check_expansion_contraction, check_rho_basics, check_tau_square,
    check_transfer, verify_identities,
)

R2 = [("orthogonal", 4), ("symplectic", 6)]


@pytest.mark.parametrize("kind", ["orthogonal", "symplectic"])
def test_order_independence_needs_degree_four(kind):
    g = make_group(kind, 2)
    assert check_bar_commutation(g, 3)[0] == 0
    checked, bad = check_bar_commutation(g, 4)
    assert checked > 0 and bad == 0
    checked, bad = check_expansion_contraction(g, 4)
    assert checked > 0 and bad == 0


@pytest.mark.parametrize("kind, n", R2)
def test_individual_checks_r2(kind, n):
    g = make_group(kind, n)
    rng = random.Random(0)
    for checked, bad in [check_tau_square(g, 2), check_transfer(g, 2, rng, True), check_embedding(g, 2, rng, True),
                         check_expansion_contraction(g, 2), check_rho_basics(g, 2)]:
        assert checked > 0 and bad == 0


@pytest.mark.parametrize("kind, n", R2)
def test_verify_identities_r2(kind, n):
    rep = verify_identities(make_group(kind, n), 2)
    assert rep.passed
    assert rep.details["mode"] == "exhaustive"
    assert rep.details["multiplication_formula"] == {"checked": 32, "failures": 0}
    assert any("vacuous" in note for note in rep.notes)


def test_seeded_sampling_is_reproducible():
    g = make_group("orthogonal", 4)
    a = verify_identities(g, 2, seed=3, exhaustive=False).to_json()
    b = verify_identities(g, 2, seed=3, exhaustive=False).to_json()
    assert a == b
