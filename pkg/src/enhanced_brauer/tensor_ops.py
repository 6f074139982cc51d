"""Operators on V^{(x)r} and on the enhanced tensor space.

Basis tensors are tuples of letters; letters 0..n-1 are f_1..f_n and, on the
enhanced space, letter n is eta.  Flat indices are lexicographic in the
tuple.  Tensor positions, component sets I and bars are 1-based.

Every operator here is square on its space unless stated otherwise, and is
built column by column from the images of basis tensors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable, Mapping, Sequence

from .diagrams import NormalizedDiagram, Permutation, perfect_matchings
from .exact_linalg import DimensionMismatchError, SparseOperator, as_rational
from .forms import FormSpec, enhanced_group_element


def component(*positions: int) -> frozenset[int]:
    return frozenset(positions)


def all_components(r: int) -> list[frozenset[int]]:
    """Subsets of {1..r} ordered by size, then lexicographically."""
    out = []
    for l in range(r + 1):
        out.extend(frozenset(c) for c in combinations(range(1, r + 1), l))
    return out


def components_of_size(r: int, l: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in combinations(range(1, r + 1), l)]


def fmt_component(I: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(I))) + "}"


class TensorSpace:
    """V^{(x)r} (``enhanced=False``) or the enhanced r-th tensor power."""

    def __init__(self, n: int, r: int, enhanced: bool = True):
        if n < 1 or r < 0:
            raise ValueError("need n >= 1 and r >= 0")
        self.n = n
        self.r = r
        self.enhanced = enhanced
        self.letters = n + 1 if enhanced else n
        self.eta = n if enhanced else None
        self.dim = self.letters ** r
        self.tuples: tuple[tuple[int, ...], ...] = tuple(product(range(self.letters), repeat=r))
        self._index = {t: k for k, t in enumerate(self.tuples)}
        self._component = tuple(frozenset(p + 1 for p, a in enumerate(t) if a < n) for t in self.tuples)
        buckets: dict[frozenset[int], list[int]] = {}
        for k, c in enumerate(self._component):
            buckets.setdefault(c, []).append(k)
        self._by_component = {c: tuple(v) for c, v in buckets.items()}
        self.cache: dict = {}

    def __repr__(self) -> str:
        kind = "enhanced" if self.enhanced else "plain"
        return f"TensorSpace(n={self.n}, r={self.r}, {kind}, dim={self.dim})"

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorSpace) and (self.n, self.r, self.enhanced) == (other.n, other.r, other.enhanced)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.enhanced))

    def index(self, t: Sequence[int]) -> int:
        return self._index[tuple(t)]

    def tuple_of(self, k: int) -> tuple[int, ...]:
        return self.tuples[k]

    def component_of(self, k: int) -> frozenset[int]:
        return self._component[k]

    def level_of(self, k: int) -> int:
        return len(self._component[k])

    def component_indices(self, I: Iterable[int]) -> tuple[int, ...]:
        return self._by_component.get(frozenset(I), ())

    def level_indices(self, l: int) -> tuple[int, ...]:
        return tuple(k for k in range(self.dim) if len(self._component[k]) == l)

    def plain(self, r: int | None = None) -> TensorSpace:
        return TensorSpace(self.n, self.r if r is None else r, enhanced=False)

    def basis_vector(self, t: Sequence[int]) -> dict[int, Fraction]:
        return {self.index(t): Fraction(1)}

    def vector_from_tuples(self, coeffs: Mapping[tuple[int, ...], object]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for t, c in coeffs.items():
            k = self.index(t)
            out[k] = out.get(k, 0) + as_rational(c)
        return {k: v for k, v in out.items() if v}


@dataclass
class LabeledOperator:
    """An operator together with where it lives and how it was built.

    ``source``/``target`` optionally restrict the operator to columns in one
    component and rows in another.
    """

    op: SparseOperator
    label: str
    domain: TensorSpace
    codomain: TensorSpace
    source: frozenset[int] | None = None
    target: frozenset[int] | None = None
    meta: dict = field(default_factory=dict)

    def respects_support(self) -> bool:
        if self.op.shape != (self.codomain.dim, self.domain.dim):
            return False
        for i, j, _ in self.op.entries():
            if self.source is not None and self.domain.component_of(j) != self.source:
                return False
            if self.target is not None and self.codomain.component_of(i) != self.target:
                return False
        return True


def _from_images(codomain: TensorSpace, domain: TensorSpace, image: Callable[[tuple[int, ...]], Mapping[tuple[int, ...], Fraction]],
                 columns: Iterable[int] | None = None) -> SparseOperator:
    cols = range(domain.dim) if columns is None else columns
    entries: dict[int, dict[int, Fraction]] = {}
    for j in cols:
        img = image(domain.tuples[j])
        for t, c in img.items():
            if c:
                row = entries.setdefault(codomain.index(t), {})
                row[j] = row.get(j, 0) + c
    return SparseOperator(codomain.dim, domain.dim, entries)


def _letter_matrix_check(g: SparseOperator, space: TensorSpace):
    if g.shape != (space.letters, space.letters):
        raise DimensionMismatchError(f"matrix of shape {g.shape} does not act on {space.letters} letters")


# ---------------------------------------------------------------------------
# group, Lie algebra and symmetric group actions
# ---------------------------------------------------------------------------

def phi(g: SparseOperator, space: TensorSpace) -> SparseOperator:
    """The diagonal action g (x) g (x) ... (x) g."""
    _letter_matrix_check(g, space)
    gcols = g.columns()

    def image(t):
        out = {(): Fraction(1)}
        for a in t:
            col = gcols.get(a, {})
            out = {prefix + (b,): c * x for prefix, c in out.items() for b, x in col.items()}
        return out

    return _from_images(space, space, image)


def dphi(x: SparseOperator, space: TensorSpace) -> SparseOperator:
    """The derivation action sum_k 1 (x) .. (x) x (x) .. (x) 1."""
    _letter_matrix_check(x, space)
    xcols = x.columns()

    def image(t):
        out: dict[tuple[int, ...], Fraction] = {}
        for k, a in enumerate(t):
            for b, c in xcols.get(a, {}).items():
                u = t[:k] + (b,) + t[k + 1:]
                out[u] = out.get(u, 0) + c
        return out

    return _from_images(space, space, image)


def permute_tuple(s: Permutation, t: Sequence[int]) -> tuple[int, ...]:
    """Slot i of the input goes to slot s(i) of the output."""
    out = [0] * len(t)
    for i, a in enumerate(t, start=1):
        out[s(i) - 1] = a
    return tuple(out)


def psi(s: Permutation, space: TensorSpace) -> SparseOperator:
    """Place permutation: v_1 (x) .. (x) v_r -> v_{s^-1(1)} (x) .. (x) v_{s^-1(r)}."""
    if s.r != space.r:
        raise DimensionMismatchError(f"permutation of degree {s.r} on tensor degree {space.r}")
    key = ("psi", s)
    if key not in space.cache:
        space.cache[key] = _from_images(space, space, lambda t: {permute_tuple(s, t): Fraction(1)})
    return space.cache[key]


def projection(I: Iterable[int], space: TensorSpace) -> SparseOperator:
    """Pr_I: identity on the component V_I, zero on the others."""
    I = frozenset(I)
    key = ("proj", I)
    if key not in space.cache:
        one = Fraction(1)
        space.cache[key] = SparseOperator._trusted(space.dim, space.dim, {k: {k: one} for k in space.component_indices(I)})
    return space.cache[key]


def level_projection(l: int, space: TensorSpace) -> SparseOperator:
    one = Fraction(1)
    return SparseOperator._trusted(space.dim, space.dim, {k: {k: one} for k in space.level_indices(l)})


# ---------------------------------------------------------------------------
# contractions and expansions
# ---------------------------------------------------------------------------

def _check_pair(i: int, j: int, r: int):
    if not (1 <= i < j <= r):
        raise ValueError(f"need 1 <= i < j <= {r}, got ({i}, {j})")


def _dual_columns(form: FormSpec) -> dict[int, dict[int, Fraction]]:
    return form.dual.columns()


def _insert_pairs(form: FormSpec) -> list[tuple[int, int, Fraction]]:
    """Terms (p, q, c) of sum_p f_p (x) f^p = sum c f_p (x) f_q."""
    dual = _dual_columns(form)
    return [(p, q, c) for p in range(form.n) for q, c in sorted(dual.get(p, {}).items())]


def contraction(i: int, j: int, form: FormSpec, r: int) -> SparseOperator:
    """C_ij : V^{(x)r} -> V^{(x)(r-2)}, contracting slots i and j with omega."""
    _check_pair(i, j, r)
    src, dst = TensorSpace(form.n, r, False), TensorSpace(form.n, r - 2, False)

    def image(t):
        c = form.omega(t[i - 1], t[j - 1])
        if not c:
            return {}
        rest = tuple(a for k, a in enumerate(t, start=1) if k not in (i, j))
        return {rest: c}

    return _from_images(dst, src, image)


def expansion(i: int, j: int, form: FormSpec, r: int) -> SparseOperator:
    """D_ij : V^{(x)(r-2)} -> V^{(x)r}, inserting sum_p f_p at i and f^p at j."""
    _check_pair(i, j, r)
    src, dst = TensorSpace(form.n, r - 2, False), TensorSpace(form.n, r, False)
    pairs = _insert_pairs(form)

    def image(t):
        out = {}
        for p, q, c in pairs:
            u = list(t)
            # insert in increasing position order so the indices stay valid
            u.insert(i - 1, p)
            u.insert(j - 1, q)
            out[tuple(u)] = out.get(tuple(u), 0) + c
        return out

    return _from_images(dst, src, image)


def _tau_image(i: int, j: int, form: FormSpec, n: int):
    pairs = _insert_pairs(form)

    def image(t):
        a, b = t[i - 1], t[j - 1]
        if a >= n or b >= n:
            return {}
        c = form.omega(a, b)
        if not c:
            return {}
        out = {}
        for p, q, d in pairs:
            u = list(t)
            u[i - 1], u[j - 1] = p, q
            out[tuple(u)] = out.get(tuple(u), 0) + c * d
        return out

    return image


def tau(i: int, j: int, form: FormSpec, space: TensorSpace) -> SparseOperator:
    """tau_ij on the space.

    On V^{(x)r} this equals D_ij C_ij.  On the enhanced space it acts the same
    way on tensors whose slots i and j both hold vectors of V, and kills
    tensors with eta in slot i or j.
    """
    _check_pair(i, j, space.r)
    key = ("tau", i, j, id(form))
    if key not in space.cache:
        space.cache[key] = (_from_images(space, space, _tau_image(i, j, form, space.n)), form)
    return space.cache[key][0]


def tau_z(z: NormalizedDiagram, form: FormSpec, space: TensorSpace, order: Sequence[int] | None = None) -> SparseOperator:
    """Product of tau over the bars of z (``order`` permutes the factors)."""
    if z.r != space.r:
        raise DimensionMismatchError("bar diagram and space have different degrees")
    bars = list(z.bars)
    if order is not None:
        bars = [bars[k] for k in order]
    key = ("tau_z", z, id(form)) if order is None else None
    if key is not None and key in space.cache:
        return space.cache[key][0]
    out = SparseOperator.identity(space.dim)
    for i, j in bars:
        out = tau(i, j, form, space) @ out
    if key is not None:
        space.cache[key] = (out, form)
    return out


def brauer_element(s: Permutation, z: NormalizedDiagram, form: FormSpec, space: TensorSpace) -> SparseOperator:
    """Psi(s) tau_z."""
    return psi(s, space) @ tau_z(z, form, space)


def generalized_tau(i: int, j: int, form: FormSpec, r: int) -> SparseOperator:
    """D_ij C_ij as an explicit composite (used to cross-check ``tau``)."""
    return expansion(i, j, form, r) @ contraction(i, j, form, r)


# ---------------------------------------------------------------------------
# embeddings into the enhanced space
# ---------------------------------------------------------------------------

def _sorted(I: Iterable[int]) -> list[int]:
    return sorted(I)


def embed_sigma(sigma: SparseOperator, I: Iterable[int], space: TensorSpace) -> SparseOperator:
    """sigma^I: sigma acting on the V slots listed in I (in increasing order).

    Annihilates every component other than V_I.
    """
    I = _sorted(I)
    l = len(I)
    small = TensorSpace(space.n, l, False)
    if sigma.shape != (small.dim, small.dim):
        raise DimensionMismatchError(f"operator of shape {sigma.shape} is not an endomorphism of V^(x){l}")
    cols = sigma.columns()
    eta = space.eta
    base = [eta] * space.r

    def image(t):
        sub = tuple(t[p - 1] for p in I)
        out = {}
        for row, c in cols.get(small.index(sub), {}).items():
            u = list(base)
            for p, a in zip(I, small.tuples[row]):
                u[p - 1] = a
            out[tuple(u)] = c
        return out

    return _from_images(space, space, image, columns=space.component_indices(I))


def shuffle_to(I: Iterable[int], r: int) -> Permutation:
    """The permutation sending 1..l to I and l+1..r to the complement, both in order."""
    I = _sorted(I)
    rest = [p for p in range(1, r + 1) if p not in I]
    return Permutation(tuple(I + rest))


def embed_sigma_by_conjugation(sigma: SparseOperator, I: Iterable[int], space: TensorSpace) -> SparseOperator:
    """sigma^I computed as Psi(t) sigma^{1..l} Psi(t)^-1 with t = shuffle_to(I)."""
    I = _sorted(I)
    l = len(I)
    first = embed_sigma(sigma, range(1, l + 1), space)
    t = shuffle_to(I, space.r)
    return psi(t, space) @ first @ psi(t.inverse(), space)


def small_brauer_element(s: Permutation, z: NormalizedDiagram, form: FormSpec) -> SparseOperator:
    """Psi_l(s) tau_z on V^{(x)l}."""
    return brauer_element(s, z, form, TensorSpace(form.n, s.r, False))


def restrict(sigma: SparseOperator, I: Iterable[int], space: TensorSpace) -> SparseOperator:
    """sigma^[I]: sigma on the component V_I and zero on the others."""
    return sigma @ projection(I, space)


def epsilon_representative(J: Iterable[int], I: Iterable[int], r: int) -> Permutation:
    """The bijection with i_t -> j_t, complement matched in order."""
    I, J = _sorted(I), _sorted(J)
    if len(I) != len(J):
        raise DimensionMismatchError("components of different sizes")
    ci = [p for p in range(1, r + 1) if p not in I]
    cj = [p for p in range(1, r + 1) if p not in J]
    images = [0] * r
    for a, b in zip(I + ci, J + cj):
        images[a - 1] = b
    return Permutation(tuple(images))


def epsilon_representatives(J: Iterable[int], I: Iterable[int], r: int) -> list[Permutation]:
    """Every permutation with i_t -> j_t for t = 1..l."""
    I, J = _sorted(I), _sorted(J)
    return [s for s in Permutation.all(r) if all(s(a) == b for a, b in zip(I, J))]


def transfer(J: Iterable[int], I: Iterable[int], space: TensorSpace, rep: Permutation | None = None) -> SparseOperator:
    """E_{J,I} = Psi(eps_{J,I})^[I], carrying V_I onto V_J in order."""
    I, J = frozenset(I), frozenset(J)
    if rep is None:
        key = ("E", J, I)
        if key not in space.cache:
            space.cache[key] = restrict(psi(epsilon_representative(J, I, space.r), space), I, space)
        return space.cache[key]
    return restrict(psi(rep, space), I, space)


# ---------------------------------------------------------------------------
# the maps rho_I
# ---------------------------------------------------------------------------

BrauerCoefficients = Mapping[tuple[Permutation, NormalizedDiagram], object]


def rho_I_single(s: Permutation, z: NormalizedDiagram, I: Iterable[int], form: FormSpec, space: TensorSpace) -> SparseOperator:
    """rho_I(Psi|_r(s) tau_z) = Psi(s) rho_I(tau_z)."""
    I = frozenset(I)
    if not z.support() <= I:
        return SparseOperator.zero(space.dim)
    return psi(s, space) @ tau_z(z, form, space) @ projection(I, space)


def rho_I(x: BrauerCoefficients, I: Iterable[int], form: FormSpec, space: TensorSpace) -> SparseOperator:
    out = SparseOperator.zero(space.dim)
    for (s, z), c in x.items():
        c = as_rational(c)
        if c:
            out = out + rho_I_single(s, z, I, form, space) * c
    return out


def rho(x: BrauerCoefficients, form: FormSpec, space: TensorSpace) -> SparseOperator:
    """rho(x) = sum over all components I of rho_I(x)."""
    out = SparseOperator.zero(space.dim)
    for I in all_components(space.r):
        out = out + rho_I(x, I, form, space)
    return out


def rho_single(s: Permutation, z: NormalizedDiagram, form: FormSpec, space: TensorSpace) -> SparseOperator:
    # the components containing e(z) are exactly where tau_z does not vanish
    out = SparseOperator.zero(space.dim)
    for I in all_components(space.r):
        out = out + rho_I_single(s, z, I, form, space)
    return out


# ---------------------------------------------------------------------------
# expansion / contraction between components
# ---------------------------------------------------------------------------

def _check_step(i: int, j: int, I: frozenset, J: frozenset, r: int):
    _check_pair(i, j, r)
    if not I < J or J - I != {i, j}:
        raise ValueError(f"need I < J with J - I = {{{i},{j}}}, got I={fmt_component(I)}, J={fmt_component(J)}")


def expand(i: int, j: int, I: Iterable[int], J: Iterable[int], form: FormSpec, space: TensorSpace) -> SparseOperator:
    """The map V_I -> V_J replacing eta (x) eta in slots i, j by sum_p f_p (x) f^p."""
    I, J = frozenset(I), frozenset(J)
    _check_step(i, j, I, J, space.r)
    pairs = _insert_pairs(form)

    def image(t):
        out = {}
        for p, q, c in pairs:
            u = list(t)
            u[i - 1], u[j - 1] = p, q
            out[tuple(u)] = out.get(tuple(u), 0) + c
        return out

    return _from_images(space, space, image, columns=space.component_indices(I))


def contract(i: int, j: int, I: Iterable[int], J: Iterable[int], form: FormSpec, space: TensorSpace) -> SparseOperator:
    """The map V_J -> V_I contracting slots i, j with omega and putting eta there."""
    I, J = frozenset(I), frozenset(J)
    _check_step(i, j, I, J, space.r)
    eta = space.eta

    def image(t):
        c = form.omega(t[i - 1], t[j - 1])
        if not c:
            return {}
        u = list(t)
        u[i - 1] = u[j - 1] = eta
        return {tuple(u): c}

    return _from_images(space, space, image, columns=space.component_indices(J))


def pairings(K: Iterable[int], L: Iterable[int]) -> list[tuple[tuple[int, int], ...]]:
    """P(K, L): the ways to split L - K into pairs (each pair increasing)."""
    K, L = frozenset(K), frozenset(L)
    if not K <= L or len(L - K) % 2:
        return []
    return [tuple(m) for m in perfect_matchings(tuple(sorted(L - K)))]


def _chain(I: frozenset, pairing: Sequence[tuple[int, int]]) -> list[frozenset]:
    chain = [I]
    for a, b in pairing:
        chain.append(chain[-1] | {a, b})
    return chain


def expand_pairing(pairing: Sequence[tuple[int, int]], I: Iterable[int], J: Iterable[int], form: FormSpec,
                   space: TensorSpace, order: Sequence[int] | None = None) -> SparseOperator:
    """D_Pi^{IJ}: the composite of single expansions along the pairs of Pi.

    The empty pairing gives Pr_I.  ``order`` reorders the pairs.
    """
    I, J = frozenset(I), frozenset(J)
    pairs = list(pairing)
    if order is not None:
        pairs = [pairs[k] for k in order]
    if I | {c for p in pairs for c in p} != J or len({c for p in pairs for c in p}) != 2 * len(pairs) or I & {c for p in pairs for c in p}:
        raise ValueError("pairing does not partition J - I")
    chain = _chain(I, pairs)
    out = projection(I, space)
    for (a, b), lo, hi in zip(pairs, chain, chain[1:]):
        out = expand(a, b, lo, hi, form, space) @ out
    return out


def contract_pairing(pairing: Sequence[tuple[int, int]], I: Iterable[int], J: Iterable[int], form: FormSpec,
                     space: TensorSpace, order: Sequence[int] | None = None) -> SparseOperator:
    """C_Pi^{IJ}: V_J -> V_I, the composite of single contractions."""
    I, J = frozenset(I), frozenset(J)
    pairs = list(pairing)
    if order is not None:
        pairs = [pairs[k] for k in order]
    if I | {c for p in pairs for c in p} != J or len({c for p in pairs for c in p}) != 2 * len(pairs) or I & {c for p in pairs for c in p}:
        raise ValueError("pairing does not partition J - I")
    chain = _chain(I, pairs)
    out = projection(J, space)
    # the outermost contraction (from J) is applied first
    for (a, b), lo, hi in reversed(list(zip(pairs, chain, chain[1:]))):
        out = contract(a, b, lo, hi, form, space) @ out
    return out


# ---------------------------------------------------------------------------
# difference vectors
# ---------------------------------------------------------------------------

def difference_vector(v: Mapping[int, object], w: Sequence, space: TensorSpace) -> dict[int, Fraction]:
    """D_v^w = Phi(e^w) v - v for a vector v of the enhanced space."""
    if not space.enhanced:
        raise ValueError("difference vectors live on the enhanced space")
    if len(w) != space.n:
        raise DimensionMismatchError("w must be a vector of V")
    vec = {k: as_rational(c) for k, c in v.items()}
    img = phi_apply(enhanced_group_element(w), space, vec)
    for k, c in vec.items():
        img[k] = img.get(k, 0) - c
    return {k: c for k, c in img.items() if c}


def phi_apply(g: SparseOperator, space: TensorSpace, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Phi(g) applied to a sparse vector without building Phi(g)."""
    gcols = g.columns()
    out: dict[int, Fraction] = {}
    for k, x in vec.items():
        terms = {(): x}
        for a in space.tuples[k]:
            col = gcols.get(a, {})
            terms = {prefix + (b,): c * y for prefix, c in terms.items() for b, y in col.items()}
        for t, c in terms.items():
            idx = space.index(t)
            out[idx] = out.get(idx, 0) + c
    return {k: c for k, c in out.items() if c}


def levels_of_vector(vec: Mapping[int, object], space: TensorSpace) -> set[int]:
    return {space.level_of(k) for k, c in vec.items() if c}
