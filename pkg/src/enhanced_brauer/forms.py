"""Bilinear forms, classical Lie algebra generators and enhanced-group elements.

Basis vectors of V are f_1..f_n (matrix indices 0..n-1).  On the enhanced
space the extra vector eta has matrix index n.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_linalg import SparseOperator, as_rational, inverse

ORTHOGONAL = "orthogonal"
SYMPLECTIC = "symplectic"


class InvalidDimensionError(ValueError):
    pass


@dataclass(frozen=True)
class FormSpec:
    """Gram matrix ``gram[p][q] = omega(f_p, f_q)`` and its dual basis.

    ``dual`` is the matrix whose column q holds the coordinates of f^q, so
    that ``gram @ dual`` is the identity.
    """

    kind: str
    n: int
    gram: SparseOperator
    dual: SparseOperator

    @property
    def epsilon(self) -> int:
        return 1 if self.kind == ORTHOGONAL else -1

    def omega(self, p: int, q: int) -> Fraction:
        return self.gram[p, q]

    def dual_vector(self, q: int) -> dict[int, Fraction]:
        """Coordinates of f^q as ``{p: coefficient}``."""
        return {p: x for p, x in self.dual.columns().get(q, {}).items()}

    def pairing(self, u: dict[int, Fraction], v: dict[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for p, a in u.items():
            row = self.gram.row(p)
            for q, b in v.items():
                if q in row:
                    total += a * row[q] * b
        return total


@dataclass(frozen=True)
class GroupSpec:
    """Generators describing G = O(V) or Sp(V).

    ``lie_basis`` spans Lie(G).  ``component_reps`` are group elements that
    together with the identity component generate G.  ``weyl_reps`` are
    additional monomial group elements; they are redundant as constraints
    but let the commutant solver merge unknowns into orbits.
    """

    form: FormSpec
    lie_basis: tuple[SparseOperator, ...]
    component_reps: tuple[SparseOperator, ...] = ()
    weyl_reps: tuple[SparseOperator, ...] = field(default=())

    @property
    def kind(self) -> str:
        return self.form.kind

    @property
    def n(self) -> int:
        return self.form.n

    @property
    def epsilon(self) -> int:
        return self.form.epsilon

    @property
    def name(self) -> str:
        return ("O" if self.kind == ORTHOGONAL else "Sp") + f"({self.n})"


def _permutation_matrix(images: Sequence[int]) -> SparseOperator:
    """Matrix sending basis vector k to basis vector images[k] (0-based)."""
    n = len(images)
    return SparseOperator.from_entries(n, n, ((images[k], k, 1) for k in range(n)))


def make_orthogonal(n: int) -> GroupSpec:
    if n < 1:
        raise InvalidDimensionError("n must be positive")
    gram = SparseOperator.identity(n)
    form = FormSpec(ORTHOGONAL, n, gram, gram)
    lie = tuple(
        SparseOperator.from_entries(n, n, [(p, q, 1), (q, p, -1)])
        for p in range(n) for q in range(p + 1, n)
    )
    reflection = SparseOperator.diagonal([-1] + [1] * (n - 1))
    weyl = [reflection]
    for k in range(n - 1):
        images = list(range(n))
        images[k], images[k + 1] = k + 1, k
        weyl.append(_permutation_matrix(images))
    return GroupSpec(form, lie, (reflection,), tuple(weyl))


def make_symplectic(n: int) -> GroupSpec:
    if n < 2 or n % 2:
        raise InvalidDimensionError(f"symplectic forms need even n >= 2, got {n}")
    m = n // 2
    gram = SparseOperator.from_entries(n, n, [(i, i + m, 1) for i in range(m)] + [(i + m, i, -1) for i in range(m)])
    form = FormSpec(SYMPLECTIC, n, gram, inverse(gram))
    lie = []
    for i in range(m):
        for j in range(m):
            lie.append(SparseOperator.from_entries(n, n, [(i, j, 1), (j + m, i + m, -1)]))
    for i in range(m):
        for j in range(i, m):
            if i == j:
                lie.append(SparseOperator.from_entries(n, n, [(i, i + m, 1)]))
                lie.append(SparseOperator.from_entries(n, n, [(i + m, i, 1)]))
            else:
                lie.append(SparseOperator.from_entries(n, n, [(i, j + m, 1), (j, i + m, 1)]))
                lie.append(SparseOperator.from_entries(n, n, [(i + m, j, 1), (j + m, i, 1)]))
    weyl = []
    # f_1 -> f_{1+m}, f_{1+m} -> -f_1
    weyl.append(SparseOperator.from_entries(n, n, [(m, 0, 1), (0, m, -1)] + [(k, k, 1) for k in range(n) if k not in (0, m)]))
    for k in range(m - 1):
        images = list(range(n))
        images[k], images[k + 1] = k + 1, k
        images[k + m], images[k + m + 1] = k + m + 1, k + m
        weyl.append(_permutation_matrix(images))
    return GroupSpec(form, tuple(lie), (), tuple(weyl))


def make_group(kind: str, n: int) -> GroupSpec:
    if kind in (ORTHOGONAL, "O", "o", "+1", "1"):
        return make_orthogonal(n)
    if kind in (SYMPLECTIC, "Sp", "sp", "-1"):
        return make_symplectic(n)
    raise ValueError(f"unknown form kind {kind!r}")


def gl_basis(n: int) -> list[SparseOperator]:
    return [SparseOperator.from_entries(n, n, [(i, j, 1)]) for i in range(n) for j in range(n)]


def preserves_form_infinitesimally(x: SparseOperator, form: FormSpec) -> bool:
    return (x.transpose() @ form.gram + form.gram @ x).is_zero()


def preserves_form(g: SparseOperator, form: FormSpec) -> bool:
    return g.transpose() @ form.gram @ g == form.gram


# ---------------------------------------------------------------------------
# enhanced group
# ---------------------------------------------------------------------------

def lift_to_enhanced(x: SparseOperator) -> SparseOperator:
    """Block-diagonal extension diag(x, 1)."""
    n = x.nrows
    if x.ncols != n:
        raise ValueError("square matrix expected")
    return SparseOperator.from_entries(n + 1, n + 1, list(x.entries()) + [(n, n, 1)])


def lift_lie_to_enhanced(x: SparseOperator) -> SparseOperator:
    """Block-diagonal extension diag(x, 0) of a Lie algebra element."""
    n = x.nrows
    return SparseOperator(n + 1, n + 1, {i: row for i, row in x.rows()})


def nilpotent(n: int, i: int) -> SparseOperator:
    """N_i: the (n+1)x(n+1) matrix sending eta to f_i (i is 0-based)."""
    return SparseOperator.from_entries(n + 1, n + 1, [(i, n, 1)])


def nilpotents(n: int) -> list[SparseOperator]:
    return [nilpotent(n, i) for i in range(n)]


def torus_generator(n: int) -> SparseOperator:
    """Derivative at c = 1 of diag(1, .., 1, c)."""
    return SparseOperator.from_entries(n + 1, n + 1, [(n, n, 1)])


def torus_element(n: int, c) -> SparseOperator:
    return SparseOperator.diagonal([1] * n + [c])


def enhanced_group_element(v: Sequence) -> SparseOperator:
    """Matrix of e^v: identity on V and eta -> v + eta."""
    n = len(v)
    entries = [(i, i, 1) for i in range(n + 1)]
    entries += [(i, n, as_rational(x)) for i, x in enumerate(v) if x]
    return SparseOperator.from_entries(n + 1, n + 1, entries)


# ---------------------------------------------------------------------------
# random exact group elements (for spot checks)
# ---------------------------------------------------------------------------

def _random_lie_element(group: GroupSpec, rng: random.Random, size: int = 2, terms: int | None = None) -> SparseOperator:
    n = group.n
    basis = list(group.lie_basis)
    if terms is not None and terms < len(basis):
        basis = rng.sample(basis, terms)
    x = SparseOperator.zero(n)
    for b in basis:
        c = Fraction(rng.randint(-size, size), rng.randint(1, size + 1))
        x = x + b * c
    return x


def random_group_element(group: GroupSpec, rng: random.Random, terms: int | None = None) -> SparseOperator:
    """A rational element of G via the Cayley transform.

    ``terms`` limits how many Lie basis elements enter, which keeps the
    result sparse.  For orthogonal groups the result is multiplied by a
    component representative half of the time.
    """
    n = group.n
    one = SparseOperator.identity(n)
    while True:
        x = _random_lie_element(group, rng, terms=terms)
        try:
            g = (one - x) @ inverse(one + x)
        except ZeroDivisionError:
            continue
        break
    if group.component_reps and rng.random() < 0.5:
        g = g @ group.component_reps[0]
    return g


def random_vector(n: int, rng: random.Random, size: int = 3) -> list[Fraction]:
    return [Fraction(rng.randint(-size, size)) for _ in range(n)]


def conjugate_group(group: GroupSpec, p: SparseOperator) -> GroupSpec:
    """The same group written in the basis changed by ``p``.

    Generators become ``p x p^-1``; the form becomes ``p^-T gram p^-1``.
    Monomial helpers are dropped since they need not stay monomial.
    """
    pinv = inverse(p)
    gram = pinv.transpose() @ group.form.gram @ pinv
    form = FormSpec(group.kind, group.n, gram, inverse(gram))
    lie = tuple(p @ x @ pinv for x in group.lie_basis)
    comps = tuple(p @ g @ pinv for g in group.component_reps)
    return GroupSpec(form, lie, comps, ())
