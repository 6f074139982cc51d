"""Compose a few Brauer diagrams and check the product against the operators."""

from enhanced_brauer.diagrams import bar_diagram, compose, factorize, parse, render
from enhanced_brauer.forms import make_orthogonal
from enhanced_brauer.tensor_ops import TensorSpace, brauer_element

n, r = 3, 3
group = make_orthogonal(n)
space = TensorSpace(n, r, False)


def op(d):
    return brauer_element(*factorize(d), group.form, space)


pairs = [
    (bar_diagram(3, 1, 2), bar_diagram(3, 1, 2)),
    (bar_diagram(3, 1, 2), bar_diagram(3, 2, 3)),
    (parse("T1-B2 T2-B1 T3-B3"), bar_diagram(3, 1, 3)),
]
for a, b in pairs:
    c, factor = compose(a, b, delta=n)
    ok = op(a) @ op(b) == op(c) * factor
    print(f"[{render(a)}] o [{render(b)}] = {factor} * [{render(c)}]   operators agree: {ok}")
