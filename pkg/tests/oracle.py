"""Independent dense floating-point reference computations.

Nothing here imports the package.  Matrices are built from Kronecker
products and explicit index loops, and ranks come from singular values.
The quantities involved have small integer entries, so float ranks with a
relative tolerance are reliable at these sizes.
"""

from __future__ import annotations

from functools import reduce
from itertools import permutations, product

import numpy as np


def gram(kind: str, n: int) -> np.ndarray:
    if kind == "orthogonal":
        return np.eye(n)
    m = n // 2
    g = np.zeros((n, n))
    g[:m, m:] = np.eye(m)
    g[m:, :m] = -np.eye(m)
    return g


def lie_basis(kind: str, n: int) -> list[np.ndarray]:
    """A spanning set of Lie(G): all X with X^T G + G X = 0, via a nullspace."""
    G = gram(kind, n)
    rows = []
    for a, b in product(range(n), repeat=2):
        E = np.zeros((n, n))
        E[a, b] = 1
        rows.append((E.T @ G + G @ E).ravel())
    M = np.array(rows).T
    return [v.reshape(n, n) for v in null_basis(M)]


def null_basis(M: np.ndarray, tol: float = 1e-9) -> list[np.ndarray]:
    _, s, vt = np.linalg.svd(M)
    r = int((s > tol * max(1.0, s[0] if len(s) else 1.0)).sum())
    return list(vt[r:])


def rank(vectors) -> int:
    M = np.array([np.ravel(v) for v in vectors], dtype=float)
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    return int((s > 1e-9 * max(1.0, s[0])).sum())


def same_span(a, b) -> bool:
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(list(a) + list(b))


def tensor_power(g: np.ndarray, r: int) -> np.ndarray:
    return reduce(np.kron, [g] * r)


def derivation(x: np.ndarray, r: int) -> np.ndarray:
    d = x.shape[0]
    one = np.eye(d)
    return sum(reduce(np.kron, [x if k == p else one for k in range(r)]) for p in range(r))


def place_permutation(images: tuple[int, ...], d: int) -> np.ndarray:
    """Input slot i moves to output slot images[i-1]."""
    r = len(images)
    P = np.zeros((d ** r, d ** r))
    for t in product(range(d), repeat=r):
        u = [0] * r
        for i, a in enumerate(t):
            u[images[i] - 1] = a
        P[np.ravel_multi_index(u, (d,) * r), np.ravel_multi_index(t, (d,) * r)] = 1
    return P


def tau(kind: str, n: int, r: int, i: int, j: int, enhanced: bool = False) -> np.ndarray:
    """omega-contraction of slots i, j followed by inserting sum_p f_p (x) f^p there.

    With ``enhanced`` the letters are f_1..f_n, eta and tensors with eta in
    slot i or j are killed.
    """
    G = gram(kind, n)
    D = np.linalg.inv(G)  # column p = f^p
    d = n + 1 if enhanced else n
    T = np.zeros((d ** r, d ** r))
    for t in product(range(d), repeat=r):
        a, b = t[i - 1], t[j - 1]
        if a >= n or b >= n or G[a, b] == 0:
            continue
        for p in range(n):
            for q in range(n):
                if D[q, p] == 0:
                    continue
                u = list(t)
                u[i - 1], u[j - 1] = p, q
                T[np.ravel_multi_index(u, (d,) * r), np.ravel_multi_index(t, (d,) * r)] += G[a, b] * D[q, p]
    return T


def brauer_span(kind: str, n: int, r: int, enhanced: bool = False) -> list[np.ndarray]:
    """All products of place permutations and tau's; spans the Brauer image."""
    d = n + 1 if enhanced else n
    perms = [place_permutation(p, d) for p in permutations(range(1, r + 1))]
    taus = [tau(kind, n, r, i, j, enhanced) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
    gens = perms + taus
    out = list(perms)
    frontier = list(perms)
    # close under right multiplication by generators until the rank stabilises
    while True:
        new = [x @ g for x in frontier for g in gens]
        before = rank(out)
        out = out + new
        if rank(out) == before:
            return out[: len(out) - len(new)]
        frontier = new


def commutant(constraints: list[np.ndarray], mask: np.ndarray | None = None) -> list[np.ndarray]:
    """Basis of {X : XA = AX for all A}, optionally with X supported on ``mask``."""
    d = constraints[0].shape[0]
    one = np.eye(d)
    # row-major vec: vec(XA - AX) = (I (x) A^T - A (x) I) vec(X)
    N = d * d
    gram_m = np.zeros((N, N))
    for A in constraints:
        M = np.kron(one, A.T) - np.kron(A, one)
        gram_m += M.T @ M
    if mask is not None:
        keep = np.flatnonzero(mask.ravel())
        gram_m = gram_m[np.ix_(keep, keep)]
    w, v = np.linalg.eigh(gram_m)
    scale = max(1.0, abs(w).max())
    null = v[:, w < 1e-8 * scale].T
    if mask is None:
        return [x.reshape(d, d) for x in null]
    out = []
    for x in null:
        full = np.zeros(N)
        full[keep] = x
        out.append(full.reshape(d, d))
    return out


def lift(x: np.ndarray, corner: float) -> np.ndarray:
    n = x.shape[0]
    y = np.zeros((n + 1, n + 1))
    y[:n, :n] = x
    y[n, n] = corner
    return y


def reflection(kind: str, n: int) -> np.ndarray | None:
    if kind != "orthogonal":
        return None
    g = np.eye(n)
    g[0, 0] = -1
    return g


def group_constraints(kind: str, n: int, r: int, *, enhanced: bool, gm: bool = False,
                      unipotent: bool = False) -> list[np.ndarray]:
    lie = lie_basis(kind, n)
    out = [derivation(lift(x, 0) if enhanced else x, r) for x in lie]
    ref = reflection(kind, n)
    if ref is not None:
        out.append(tensor_power(lift(ref, 1) if enhanced else ref, r))
    if gm:
        t = np.zeros((n + 1, n + 1))
        t[n, n] = 1
        out.append(derivation(t, r))
    if unipotent:
        for i in range(n):
            N = np.zeros((n + 1, n + 1))
            N[i, n] = 1
            out.append(derivation(N, r))
    return out


def levels(n: int, r: int) -> np.ndarray:
    """Level (number of V letters) of each enhanced basis tensor."""
    return np.array([sum(a < n for a in t) for t in product(range(n + 1), repeat=r)])


def block_mask(n: int, r: int, src: int, dst: int) -> np.ndarray:
    lv = levels(n, r)
    return np.outer(lv == dst, lv == src)
