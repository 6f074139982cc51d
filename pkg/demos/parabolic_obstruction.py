"""Why rho(B_2) is not inside the commutant of the parabolic group.

Computes the three spaces for O(4) and Sp(6) at degree 2, then evaluates
both sides of rho(tau) Phi(e^w) = Phi(e^w) rho(tau) on f_1 (x) eta.
"""

from enhanced_brauer.diagrams import NormalizedDiagram, Permutation
from enhanced_brauer.duality import verify_parabolic
from enhanced_brauer.forms import enhanced_group_element, make_group
from enhanced_brauer.tensor_ops import TensorSpace, phi, rho_single

def fmt(vec, space):
    return {space.tuples[k]: str(c) for k, c in sorted(vec.items())}


for kind, n in [("orthogonal", 4), ("symplectic", 6)]:
    g = make_group(kind, n)
    rep = verify_parabolic(g, 2)
    print(g.name, {s["name"]: s["dim"] for s in rep.sides})

    space = TensorSpace(n, 2)
    t = rho_single(Permutation.identity(2), NormalizedDiagram(2, ((1, 2),)), g.form, space)
    w = [0] * n
    w[n // 2 if kind == "symplectic" else 0] = 1  # a vector pairing non-trivially with f_1
    e = phi(enhanced_group_element(w), space)
    v = space.basis_vector((0, n))  # f_1 (x) eta
    lhs = t.apply(e.apply(v))
    rhs = e.apply(t.apply(v))
    print("  rho(tau) Phi(e^w) v =", fmt(lhs, space))
    print("  Phi(e^w) rho(tau) v =", fmt(rhs, space))
