"""Brauer diagrams, normalized bar diagrams and their composition.

Columns are numbered 1..r.  A dot is a pair ``(row, col)`` with row 0 the top
(output) row and row 1 the bottom (input) row.  When a diagram is read as an
operator, a bottom-bottom edge contracts two inputs, a top-top edge inserts a
dual-basis pair and a through edge moves an input column to an output column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Iterable, Iterator

TOP, BOTTOM = 0, 1

Dot = tuple[int, int]
Edge = tuple[Dot, Dot]


def double_factorial(k: int) -> int:
    """k!! with the convention (-1)!! = 0!! = 1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def count_normalized(r: int, t: int) -> int:
    return comb(r, 2 * t) * double_factorial(2 * t - 1)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..r}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @property
    def r(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, r: int) -> Permutation:
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def from_cycles(cls, r: int, *cycles: Iterable[int]) -> Permutation:
        imgs = list(range(1, r + 1))
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            if seen & set(cyc):
                raise ValueError("cycles must be disjoint")
            seen |= set(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def all(cls, r: int) -> list[Permutation]:
        return [cls(p) for p in permutations(range(1, r + 1))]

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self * other)(k) = self(other(k))``."""
        if self.r != other.r:
            raise ValueError("permutations of different degrees")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.r
        for k, img in enumerate(self.images, start=1):
            inv[img - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.r + 1))

    def sign(self) -> int:
        sgn, seen = 1, set()
        for start in range(1, self.r + 1):
            if start in seen:
                continue
            k, length = start, 0
            while k not in seen:
                seen.add(k)
                k = self(k)
                length += 1
            if length % 2 == 0:
                sgn = -sgn
        return sgn

    def cycles(self) -> list[tuple[int, ...]]:
        out, seen = [], set()
        for start in range(1, self.r + 1):
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "e"


# ---------------------------------------------------------------------------
# normalized diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class NormalizedDiagram:
    """A set of disjoint bars on columns 1..r, stored sorted."""

    r: int
    bars: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        bars = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in self.bars))
        used = [c for bar in bars for c in bar]
        if len(set(used)) != len(used):
            raise ValueError(f"bars {bars} are not disjoint")
        if any(a == b for a, b in bars):
            raise ValueError("a bar joins two distinct columns")
        if used and not (1 <= min(used) and max(used) <= self.r):
            raise ValueError(f"bars {bars} out of range for r={self.r}")
        object.__setattr__(self, "bars", bars)

    @classmethod
    def empty(cls, r: int) -> NormalizedDiagram:
        return cls(r, ())

    @property
    def t(self) -> int:
        return len(self.bars)

    def support(self) -> frozenset[int]:
        """The set e(z) of columns touched by a bar."""
        return frozenset(c for bar in self.bars for c in bar)

    def __str__(self) -> str:
        if not self.bars:
            return "x0"
        return " ".join("{%d,%d}" % bar for bar in self.bars)


def _partial_matchings(cols: tuple[int, ...], t: int) -> Iterator[tuple[tuple[int, int], ...]]:
    if t == 0:
        yield ()
        return
    if len(cols) < 2 * t:
        return
    first, rest = cols[0], cols[1:]
    # bars avoiding the first column
    yield from _partial_matchings(rest, t)
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for m in _partial_matchings(remaining, t - 1):
            yield ((first, partner),) + m


def perfect_matchings(items: tuple) -> Iterator[tuple[tuple, ...]]:
    """All perfect matchings of ``items``; each pair keeps the input order."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield ((first, partner),) + m


def enumerate_normalized(r: int, t: int | None = None) -> list[NormalizedDiagram]:
    """Z_r grouped by bar count (or only Z_{r,t} when ``t`` is given)."""
    ts = range(r // 2 + 1) if t is None else [t]
    out = []
    for tt in ts:
        group = sorted(NormalizedDiagram(r, m) for m in _partial_matchings(tuple(range(1, r + 1)), tt))
        out.extend(group)
    return out


# ---------------------------------------------------------------------------
# Brauer diagrams
# ---------------------------------------------------------------------------

def _edge(a: Dot, b: Dot) -> Edge:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    """A perfect matching on the 2r dots, stored as a sorted edge tuple."""

    r: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(_edge(tuple(a), tuple(b)) for a, b in self.edges))
        dots = [d for e in edges for d in e]
        expected = {(row, c) for row in (TOP, BOTTOM) for c in range(1, self.r + 1)}
        if len(dots) != len(set(dots)) or set(dots) != expected:
            raise ValueError("edges must form a perfect matching of the 2r dots")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def identity(cls, r: int) -> BrauerDiagram:
        return cls(r, tuple(((TOP, c), (BOTTOM, c)) for c in range(1, r + 1)))

    @classmethod
    def from_permutation(cls, s: Permutation) -> BrauerDiagram:
        return build(s, NormalizedDiagram.empty(s.r))

    def partner_map(self) -> dict[Dot, Dot]:
        out = {}
        for a, b in self.edges:
            out[a] = b
            out[b] = a
        return out

    def bottom_bars(self) -> list[tuple[int, int]]:
        return sorted((a[1], b[1]) for a, b in self.edges if a[0] == b[0] == BOTTOM)

    def top_bars(self) -> list[tuple[int, int]]:
        return sorted((a[1], b[1]) for a, b in self.edges if a[0] == b[0] == TOP)

    def is_permutation(self) -> bool:
        return not self.top_bars()

    def __str__(self) -> str:
        return render(self)


def enumerate_all(r: int) -> list[BrauerDiagram]:
    """All (2r-1)!! Brauer diagrams on 2r dots in canonical order."""
    dots = tuple((row, c) for row in (TOP, BOTTOM) for c in range(1, r + 1))
    return sorted(BrauerDiagram(r, m) for m in perfect_matchings(dots))


def build(s: Permutation, z: NormalizedDiagram) -> BrauerDiagram:
    """Diagram of the operator Psi(s) tau_z (s stacked on top of z)."""
    if s.r != z.r:
        raise ValueError("permutation and bar diagram have different sizes")
    edges = []
    for i, j in z.bars:
        edges.append(((BOTTOM, i), (BOTTOM, j)))
        edges.append(((TOP, s(i)), (TOP, s(j))))
    support = z.support()
    for c in range(1, z.r + 1):
        if c not in support:
            edges.append(((TOP, s(c)), (BOTTOM, c)))
    return BrauerDiagram(z.r, tuple(edges))


def factorize(d: BrauerDiagram) -> tuple[Permutation, NormalizedDiagram]:
    """A pair (s, z) with build(s, z) = d.

    Columns outside the bars of z go to their through-edge partners; the bars
    of z (sorted) are sent to the top bars (sorted) preserving order within
    each bar.  This choice is the canonical representative; other pairs may
    build the same diagram.
    """
    z = NormalizedDiagram(d.r, tuple(d.bottom_bars()))
    images = [0] * d.r
    partner = d.partner_map()
    for (i, j), (a, b) in zip(z.bars, d.top_bars()):
        images[i - 1], images[j - 1] = a, b
    for c in range(1, d.r + 1):
        row, col = partner[(BOTTOM, c)]
        if row == TOP:
            images[c - 1] = col
    return Permutation(tuple(images)), z


def canonical_pairs(r: int) -> list[tuple[Permutation, NormalizedDiagram]]:
    """One (s, z) per Brauer diagram, in canonical diagram order."""
    return [factorize(d) for d in enumerate_all(r)]


def compose(d1: BrauerDiagram, d2: BrauerDiagram, delta=1) -> tuple[BrauerDiagram, Fraction]:
    """Stack ``d1`` on top of ``d2`` (operator ``d1 o d2``).

    Returns the resulting diagram and ``delta ** loops`` where ``loops`` counts
    the closed loops formed in the middle row.
    """
    if d1.r != d2.r:
        raise ValueError("diagrams of different sizes")
    r = d1.r
    # Nodes: ("T", c) top of d1, ("M", c) the glued middle row, ("B", c)
    # bottom of d2.  Middle nodes have two neighbours, outer nodes one.
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for a, b in d1.edges:
        link(("T" if a[0] == TOP else "M", a[1]), ("T" if b[0] == TOP else "M", b[1]))
    for a, b in d2.edges:
        link(("M" if a[0] == TOP else "B", a[1]), ("M" if b[0] == TOP else "B", b[1]))

    seen = set()

    def walk(start):
        prev, cur = None, start
        seen.add(start)
        while True:
            nbrs = adj[cur]
            nxt = nbrs[0] if nbrs[0] != prev or len(nbrs) == 1 else nbrs[1]
            if len(nbrs) == 2 and nbrs[0] == nbrs[1]:
                nxt = nbrs[0]
            prev, cur = cur, nxt
            seen.add(cur)
            if cur[0] != "M" or cur == start:
                return cur

    edges = []
    for start in [("T", c) for c in range(1, r + 1)] + [("B", c) for c in range(1, r + 1)]:
        if start in seen:
            continue
        end = walk(start)
        edges.append(((TOP if start[0] == "T" else BOTTOM, start[1]), (TOP if end[0] == "T" else BOTTOM, end[1])))
    loops = 0
    for c in range(1, r + 1):
        if ("M", c) not in seen:
            loops += 1
            walk(("M", c))
    return BrauerDiagram(r, tuple(edges)), Fraction(delta) ** loops


def bar_diagram(r: int, i: int, j: int) -> BrauerDiagram:
    """The diagram of tau_ij."""
    return build(Permutation.identity(r), NormalizedDiagram(r, ((i, j),)))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _dot_label(dot: Dot) -> str:
    return ("T" if dot[0] == TOP else "B") + str(dot[1])


def render(d: BrauerDiagram) -> str:
    """Edge list such as ``T1-B1 T2-T3 B2-B3``."""
    return " ".join(f"{_dot_label(a)}-{_dot_label(b)}" for a, b in d.edges)


def render_numbered(d: BrauerDiagram) -> str:
    """Edge list using odd labels for the top row and even for the bottom."""
    def lab(dot):
        return str(2 * dot[1] - 1 if dot[0] == TOP else 2 * dot[1])
    return " ".join(f"{lab(a)}-{lab(b)}" for a, b in d.edges)


def _parse_dot(token: str) -> Dot:
    token = token.strip()
    if len(token) < 2 or token[0] not in "TtBb" or not token[1:].isdigit():
        raise ValueError(f"bad dot label {token!r}")
    return (TOP if token[0] in "Tt" else BOTTOM, int(token[1:]))


def parse(text: str, r: int | None = None) -> BrauerDiagram:
    edges = []
    for item in text.split():
        parts = item.split("-")
        if len(parts) != 2:
            raise ValueError(f"bad edge {item!r}")
        edges.append((_parse_dot(parts[0]), _parse_dot(parts[1])))
    if r is None:
        r = len(edges)
    return BrauerDiagram(r, tuple(edges))
