"""Brauer and enhanced Brauer operator algebras as explicit subspaces.

Each constructor returns an :class:`AlgebraHandle` holding the spanning
operators (with a record of how each was built) and their echelonized span.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .diagrams import NormalizedDiagram, Permutation, canonical_pairs, double_factorial, enumerate_normalized
from .exact_linalg import OperatorSubspace, SparseOperator, echelonize, span_of_operators, zero_subspace
from .forms import GroupSpec
from .reports import Report, scenario_name
from .tensor_ops import (
    TensorSpace, all_components, components_of_size, contract_pairing, embed_sigma, expand_pairing,
    fmt_component, pairings, projection, psi, rho_I_single, rho_single, small_brauer_element, tau_z, transfer,
)


@dataclass
class AlgebraHandle:
    name: str
    epsilon: int
    n: int
    r: int
    space: TensorSpace
    elements: list[SparseOperator]
    provenance: list[dict]
    span: OperatorSubspace
    meta: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.span.dim


def brauer_dim(r: int) -> int:
    return double_factorial(2 * r - 1)


def level_dim(r: int, l: int) -> int:
    """C(r, l)^2 (2l-1)!!, the expected dimension of level l (1 at l = 0)."""
    return comb(r, l) ** 2 * double_factorial(2 * l - 1)


def enhanced_dim(r: int) -> int:
    return sum(level_dim(r, l) for l in range(r + 1))


def basis_regime(n: int, r: int) -> bool:
    """Whether the dimension formulas are expected to hold (n >= 2r)."""
    return n >= 2 * r


def all_pairs(r: int) -> list[tuple[Permutation, NormalizedDiagram]]:
    """Every (s, z) in S_r x Z_r."""
    return [(s, z) for z in enumerate_normalized(r) for s in Permutation.all(r)]


def _span(elements: list[SparseOperator], space: TensorSpace) -> OperatorSubspace:
    return span_of_operators(elements, space.dim, space.dim)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def span_plain_brauer(group: GroupSpec, r: int) -> AlgebraHandle:
    """span{Psi|_r(s) tau_z : s in S_r, z in Z_r} on V^{(x)r}."""
    space = TensorSpace(group.n, r, enhanced=False)
    elements, prov = [], []
    for s, z in all_pairs(r):
        elements.append(psi(s, space) @ tau_z(z, group.form, space))
        prov.append({"s": str(s), "z": str(z)})
    return AlgebraHandle("B_r", group.epsilon, group.n, r, space, elements, prov, _span(elements, space))


def level_elements(group: GroupSpec, space: TensorSpace, l: int) -> tuple[list[SparseOperator], list[dict]]:
    """E_{IJ} (Psi_l(s) tau_z)^J over #I = #J = l, s in S_l, z in Z_l."""
    if l == 0:
        return [projection(frozenset(), space)], [{"I": "{}", "J": "{}", "s": "e", "z": "x0"}]
    elements, prov = [], []
    sigmas = [(s, z, small_brauer_element(s, z, group.form)) for s, z in all_pairs(l)]
    comps = components_of_size(space.r, l)
    for J in comps:
        embedded = [(s, z, embed_sigma(sig, J, space)) for s, z, sig in sigmas]
        for I in comps:
            e = transfer(I, J, space)
            for s, z, op in embedded:
                elements.append(e @ op)
                prov.append({"I": fmt_component(I), "J": fmt_component(J), "s": str(s), "z": str(z)})
    return elements, prov


def span_enhanced_level(group: GroupSpec, r: int, l: int, space: TensorSpace | None = None) -> AlgebraHandle:
    if not 0 <= l <= r:
        raise ValueError(f"level {l} outside 0..{r}")
    space = space or TensorSpace(group.n, r)
    elements, prov = level_elements(group, space, l)
    return AlgebraHandle(f"B_level{l}", group.epsilon, group.n, r, space, elements, prov, _span(elements, space), {"l": l})


def span_enhanced(group: GroupSpec, r: int, space: TensorSpace | None = None) -> AlgebraHandle:
    """The full enhanced algebra as the sum of its levels.

    ``meta['levels']`` keeps the per-level handles and ``meta['direct']``
    records whether the level dimensions add up to the total.
    """
    space = space or TensorSpace(group.n, r)
    levels = [span_enhanced_level(group, r, l, space) for l in range(r + 1)]
    elements = [op for h in levels for op in h.elements]
    prov = [dict(p, l=h.meta["l"]) for h in levels for p in h.provenance]
    total = echelonize([v for h in levels for v in h.span.basis], length=space.dim ** 2)
    direct = sum(h.dim for h in levels) == total.dim
    return AlgebraHandle("B", group.epsilon, group.n, r, space, elements, prov, total, {"levels": levels, "direct": direct})


def _embed_small(op: SparseOperator, I, space: TensorSpace) -> SparseOperator:
    return embed_sigma(op, I, space)


def B_IJ_elements(group: GroupSpec, space: TensorSpace, I, J) -> tuple[list[SparseOperator], list[dict]]:
    """Spanning operators of the block from V_I to V_J (zero elsewhere)."""
    I, J = frozenset(I), frozenset(J)
    s_, t_ = len(I), len(J)
    form = group.form
    elements, prov = [], []
    if (s_ + t_) % 2:
        return elements, prov
    if s_ == t_:
        e = transfer(J, I, space)
        for s, z in all_pairs(s_):
            elements.append(e @ _embed_small(small_brauer_element(s, z, form), I, space))
            prov.append({"case": "equal", "s": str(s), "z": str(z)})
    elif s_ < t_:
        taus = [(z, _embed_small(small_brauer_element(Permutation.identity(s_), z, form), I, space)) for z in enumerate_normalized(s_)]
        for Jp in components_of_size(space.r, t_):
            if not I <= Jp:
                continue
            e = transfer(J, Jp, space)
            perms = [(s, e @ _embed_small(small_brauer_element(s, NormalizedDiagram.empty(t_), form), Jp, space)) for s in Permutation.all(t_)]
            for U in pairings(I, Jp):
                d = expand_pairing(U, I, Jp, form, space)
                for z, tz in taus:
                    dt = d @ tz
                    for s, ep in perms:
                        elements.append(ep @ dt)
                        prov.append({"case": "up", "Jp": fmt_component(Jp), "U": str(U), "s": str(s), "z": str(z)})
    else:
        for Jp in components_of_size(space.r, t_):
            if not Jp <= I:
                continue
            e = transfer(J, Jp, space)
            sigmas = [(s, z, e @ _embed_small(small_brauer_element(s, z, form), Jp, space)) for s, z in all_pairs(t_)]
            for U in pairings(Jp, I):
                c = contract_pairing(U, Jp, I, form, space)
                for s, z, es in sigmas:
                    elements.append(es @ c)
                    prov.append({"case": "down", "Jp": fmt_component(Jp), "U": str(U), "s": str(s), "z": str(z)})
    return elements, prov


def span_B_IJ(group: GroupSpec, r: int, I, J, space: TensorSpace | None = None) -> OperatorSubspace:
    space = space or TensorSpace(group.n, r)
    elements, _ = B_IJ_elements(group, space, I, J)
    return _span(elements, space)


def span_B_st(group: GroupSpec, r: int, s: int, t: int, space: TensorSpace | None = None) -> OperatorSubspace:
    """Sum of the blocks B_IJ over #I = s, #J = t."""
    space = space or TensorSpace(group.n, r)
    if (s + t) % 2:
        return zero_subspace(space.dim ** 2)
    elements = []
    for I in components_of_size(r, s):
        for J in components_of_size(r, t):
            elements.extend(B_IJ_elements(group, space, I, J)[0])
    return _span(elements, space)


def rho_image(group: GroupSpec, r: int, space: TensorSpace | None = None, I=None) -> OperatorSubspace:
    """span{rho(Psi|_r(s) tau_z)} (or rho_I when a component is given)."""
    space = space or TensorSpace(group.n, r)
    if I is None:
        ops = [rho_single(s, z, group.form, space) for s, z in canonical_pairs(r)]
    else:
        ops = [rho_I_single(s, z, I, group.form, space) for s, z in canonical_pairs(r)]
    return _span(ops, space)


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def _report(check: str, group: GroupSpec, r: int) -> Report:
    return Report(check, scenario_name(group.kind, group.n, r), group.epsilon, group.n, r)


def dimension_table(group: GroupSpec, r: int, algebra: AlgebraHandle | None = None) -> dict:
    """Level dimensions of the enhanced algebra with the expected values."""
    algebra = algebra or span_enhanced(group, r)
    applicable = basis_regime(group.n, r)
    levels = []
    for h in algebra.meta["levels"]:
        l = h.meta["l"]
        exp = level_dim(r, l) if applicable else None
        levels.append({"l": l, "dim": h.dim, "expected": exp, "match": (h.dim == exp) if applicable else None})
    return {
        "epsilon": group.epsilon,
        "n": group.n,
        "r": r,
        "levels": levels,
        "total": algebra.dim,
        "expected_total": enhanced_dim(r) if applicable else None,
        "direct_sum": algebra.meta["direct"],
    }


def check_dimensions(group: GroupSpec, r: int) -> Report:
    """Plain Brauer dimension, level dimensions and directness of the level sum."""
    rep = _report("dims", group, r)
    plain = span_plain_brauer(group, r)
    enh = span_enhanced(group, r)
    table = dimension_table(group, r, enh)
    rep.add_side("B_r(eps n)", plain.dim)
    rep.add_side("enhanced", enh.dim)
    rep.per_level = table["levels"]
    rep.details = {"table": table, "plain_expected": brauer_dim(r) if basis_regime(group.n, r) else None}
    ok = table["direct_sum"]
    if not ok:
        rep.notes.append("level spans are not independent")
    if basis_regime(group.n, r):
        ok = ok and plain.dim == brauer_dim(r) and table["total"] == table["expected_total"]
        ok = ok and all(row["match"] for row in table["levels"])
        rep.passed = ok
    else:
        rep.notes.append("n < 2r: dimension formulas not applicable")
        rep.passed = None if ok else False
    return rep


def verify_level_identity(group: GroupSpec, r: int, space: TensorSpace | None = None) -> Report:
    """B_ss equals the level-s part of the enhanced algebra for every s."""
    space = space or TensorSpace(group.n, r)
    rep = _report("level-identity", group, r)
    ok = True
    for s in range(r + 1):
        a = span_B_st(group, r, s, s, space)
        b = span_enhanced_level(group, r, s, space).span
        same = a == b
        ok &= same
        rep.per_level.append({"l": s, "B_ss": a.dim, "level": b.dim, "equal": same})
    rep.passed = ok
    return rep


def verify_multiplication_formula(group: GroupSpec, r: int, samples: int | None = None, seed: int = 0,
                                  space: TensorSpace | None = None) -> Report:
    """(E_IJ s^J)(E_KL l^L) = delta_JK E_IL (s l)^L on spanning elements.

    All same-level pairs are checked when ``samples`` is None, otherwise a
    seeded random selection of that many pairs.
    """
    space = space or TensorSpace(group.n, r)
    rep = _report("mulformula", group, r)
    form = group.form
    small_cache: dict = {}

    def small(l, s, z):
        key = (s, z)
        if key not in small_cache:
            small_cache[key] = small_brauer_element(s, z, form)
        return small_cache[key]

    pool = []
    for l in range(1, r + 1):
        comps = components_of_size(r, l)
        for I in comps:
            for J in comps:
                for s, z in all_pairs(l):
                    pool.append((l, I, J, s, z))
    pairs = [(a, b) for a in pool for b in pool if a[0] == b[0]]
    if samples is not None and samples < len(pairs):
        rng = random.Random(seed)
        pairs = rng.sample(pairs, samples)
    checked = violations = 0
    for (l, I, J, s1, z1), (_, K, L, s2, z2) in pairs:
        sig, lam = small(l, s1, z1), small(l, s2, z2)
        lhs = (transfer(I, J, space) @ embed_sigma(sig, J, space)) @ (transfer(K, L, space) @ embed_sigma(lam, L, space))
        if J == K:
            rhs = transfer(I, L, space) @ embed_sigma(sig @ lam, L, space)
        else:
            rhs = SparseOperator.zero(space.dim)
        checked += 1
        if lhs != rhs:
            violations += 1
            if len(rep.notes) < 5:
                rep.notes.append(f"mismatch for I={fmt_component(I)} J={fmt_component(J)} K={fmt_component(K)} L={fmt_component(L)}")
    rep.details = {"pairs_checked": checked, "violations": violations, "exhaustive": samples is None or samples >= len(pool) ** 2}
    rep.passed = violations == 0
    return rep


def verify_rho_decomposition(group: GroupSpec, r: int, space: TensorSpace | None = None) -> Report:
    """Each level equals the direct sum of rho_I(B_r) over #I = l."""
    rep = _report("rho-decomposition", group, r)
    if not basis_regime(group.n, r):
        rep.notes.append("requires n >= 2r; not checked")
        return rep
    space = space or TensorSpace(group.n, r)
    ok = True
    all_vectors = []
    for l in range(r + 1):
        images = [rho_image(group, r, space, I) for I in components_of_size(r, l)]
        joined = echelonize([v for im in images for v in im.basis], length=space.dim ** 2)
        all_vectors.extend(joined.basis)
        level = span_enhanced_level(group, r, l, space).span
        direct = sum(im.dim for im in images) == joined.dim
        same = joined == level
        ok &= direct and same
        rep.per_level.append({"l": l, "rho_sum": joined.dim, "level": level.dim, "direct": direct, "equal": same})
    total = echelonize(all_vectors, length=space.dim ** 2)
    enh = span_enhanced(group, r, space)
    rep.add_side("sum_I rho_I(B_r)", total.dim)
    rep.add_side("enhanced", enh.dim)
    rep.equal = total == enh.span
    rep.passed = ok and rep.equal
    return rep


def closure_defect(span: OperatorSubspace, elements: list[SparseOperator], pairs: list[tuple[int, int]]) -> int:
    """How many of the products elements[a] @ elements[b] leave the span."""
    return sum(not span.contains((elements[a] @ elements[b]).vectorize()) for a, b in pairs)


def check_closure(group: GroupSpec, r: int, samples: int | None = None, seed: int = 0) -> Report:
    """Products of spanning elements of the enhanced algebra stay in it."""
    rep = _report("closure", group, r)
    enh = span_enhanced(group, r)
    k = len(enh.elements)
    pairs = [(a, b) for a in range(k) for b in range(k)]
    if samples is not None and samples < len(pairs):
        pairs = random.Random(seed).sample(pairs, samples)
    bad = closure_defect(enh.span, enh.elements, pairs)
    rep.details = {"products_checked": len(pairs), "outside": bad}
    rep.passed = bad == 0
    return rep


def rho_image_closure(group: GroupSpec, r: int) -> dict:
    """Empirical record: is span rho(B_r) closed under composition?"""
    space = TensorSpace(group.n, r)
    ops = [rho_single(s, z, group.form, space) for s, z in canonical_pairs(r)]
    span = _span(ops, space)
    pairs = [(a, b) for a in range(len(ops)) for b in range(len(ops))]
    bad = closure_defect(span, ops, pairs)
    return {"dim": span.dim, "products_checked": len(pairs), "outside": bad, "closed": bad == 0}
