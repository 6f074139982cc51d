"""Exact rational linear algebra on sparse data.

Scalars are :class:`fractions.Fraction`.  Vectors are plain ``dict`` objects
mapping index -> nonzero Fraction; matrices are :class:`SparseOperator`.
Operators are vectorized row-major: entry ``(i, j)`` of an ``R x C`` operator
lands at index ``i * C + j``.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Rational = Fraction


class DimensionMismatchError(ValueError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class SparseOperator:
    """Immutable sparse matrix over Q stored as ``{row: {col: value}}``."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, object]] | None = None):
        self.nrows = int(nrows)
        self.ncols = int(ncols)
        clean = {}
        for i, row in (rows or {}).items():
            if not 0 <= i < self.nrows:
                raise IndexError(f"row {i} out of range for {self.nrows} rows")
            r = {}
            for j, v in row.items():
                if not 0 <= j < self.ncols:
                    raise IndexError(f"column {j} out of range for {self.ncols} columns")
                q = as_rational(v)
                if q:
                    r[j] = q
            if r:
                clean[i] = r
        self._rows = clean

    @classmethod
    def _trusted(cls, nrows, ncols, rows):
        # rows already hold nonzero Fractions with in-range indices
        op = cls.__new__(cls)
        op.nrows, op.ncols, op._rows = nrows, ncols, rows
        return op

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_entries(cls, nrows, ncols, entries: Iterable[tuple[int, int, object]]):
        acc: dict[int, dict[int, Fraction]] = {}
        for i, j, v in entries:
            row = acc.setdefault(i, {})
            row[j] = row.get(j, 0) + as_rational(v)
        return cls(nrows, ncols, acc)

    @classmethod
    def from_columns(cls, nrows, ncols, columns: Mapping[int, Mapping[int, object]]):
        """Build from ``{col: {row: value}}``."""
        return cls.from_entries(nrows, ncols, ((i, j, v) for j, col in columns.items() for i, v in col.items()))

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[object]]):
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged dense matrix")
        return cls(nrows, ncols, {i: {j: v for j, v in enumerate(r)} for i, r in enumerate(rows)})

    @classmethod
    def identity(cls, n: int):
        one = Fraction(1)
        return cls._trusted(n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def zero(cls, nrows: int, ncols: int | None = None):
        return cls._trusted(nrows, nrows if ncols is None else ncols, {})

    @classmethod
    def diagonal(cls, values: Sequence[object]):
        n = len(values)
        return cls(n, n, {i: {i: v} for i, v in enumerate(values)})

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def row(self, i: int) -> dict[int, Fraction]:
        return dict(self._rows.get(i, {}))

    def rows(self) -> Iterator[tuple[int, dict[int, Fraction]]]:
        for i in sorted(self._rows):
            yield i, self._rows[i]

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows.get(i, {}).get(j, Fraction(0))

    def columns(self) -> dict[int, dict[int, Fraction]]:
        cols: dict[int, dict[int, Fraction]] = {}
        for i, row in self._rows.items():
            for j, v in row.items():
                cols.setdefault(j, {})[i] = v
        return cols

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def is_diagonal(self) -> bool:
        return all(set(row) <= {i} for i, row in self._rows.items())

    def monomial_map(self) -> dict[int, tuple[int, Fraction]] | None:
        """If every column holds exactly one nonzero and the row indices are
        distinct, return ``{col: (row, value)}``; otherwise ``None``."""
        if self.nrows != self.ncols:
            return None
        out: dict[int, tuple[int, Fraction]] = {}
        for i, row in self._rows.items():
            if len(row) != 1:
                return None
            (j, v), = row.items()
            if j in out:
                return None
            out[j] = (i, v)
        return out if len(out) == self.ncols else None

    # -- arithmetic -------------------------------------------------------
    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: SparseOperator) -> SparseOperator:
        self._check_same_shape(other)
        rows = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            acc = rows.setdefault(i, {})
            for j, v in r.items():
                s = acc.get(j, 0) + v
                if s:
                    acc[j] = s
                else:
                    acc.pop(j, None)
        return SparseOperator._trusted(self.nrows, self.ncols, {i: r for i, r in rows.items() if r})

    def __neg__(self) -> SparseOperator:
        return SparseOperator._trusted(self.nrows, self.ncols, {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other: SparseOperator) -> SparseOperator:
        return self + (-other)

    def __mul__(self, c) -> SparseOperator:
        c = as_rational(c)
        if not c:
            return SparseOperator.zero(self.nrows, self.ncols)
        return SparseOperator._trusted(self.nrows, self.ncols, {i: {j: c * v for j, v in r.items()} for i, r in self._rows.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: SparseOperator) -> SparseOperator:
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"cannot compose {self.shape} with {other.shape}")
        orows = other._rows
        out = {}
        for i, row in self._rows.items():
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                brow = orows.get(k)
                if brow is None:
                    continue
                for j, b in brow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = _clean(acc)
            if acc:
                out[i] = acc
        return SparseOperator._trusted(self.nrows, other.ncols, out)

    def commutator(self, other: SparseOperator) -> SparseOperator:
        return self @ other - other @ self

    def transpose(self) -> SparseOperator:
        return SparseOperator._trusted(self.ncols, self.nrows, self.columns())

    def apply(self, vec: Mapping[int, object]) -> dict[int, Fraction]:
        """Matrix-vector product on a sparse vector."""
        cols = None
        acc: dict[int, Fraction] = {}
        if len(vec) * 4 < self.ncols:
            cols = self.columns()
            for j, x in vec.items():
                for i, a in cols.get(j, {}).items():
                    acc[i] = acc.get(i, 0) + a * x
        else:
            for i, row in self._rows.items():
                s = sum((a * vec[j] for j, a in row.items() if j in vec), Fraction(0))
                if s:
                    acc[i] = s
        return _clean(acc)

    def restrict_columns(self, keep) -> SparseOperator:
        """Zero every column ``j`` with ``not keep(j)``."""
        out = {}
        for i, row in self._rows.items():
            r = {j: v for j, v in row.items() if keep(j)}
            if r:
                out[i] = r
        return SparseOperator._trusted(self.nrows, self.ncols, out)

    def restrict_rows(self, keep) -> SparseOperator:
        return SparseOperator._trusted(self.nrows, self.ncols, {i: r for i, r in self._rows.items() if keep(i)})

    # -- comparison / vectorization --------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    __hash__ = None  # mutable-looking container semantics; compare by value only

    def __repr__(self) -> str:
        return f"SparseOperator({self.nrows}x{self.ncols}, nnz={self.nnz})"

    def vectorize(self) -> dict[int, Fraction]:
        c = self.ncols
        return {i * c + j: v for i, row in self._rows.items() for j, v in row.items()}

    @classmethod
    def from_vector(cls, vec: Mapping[int, object], nrows: int, ncols: int) -> SparseOperator:
        rows: dict[int, dict[int, Fraction]] = {}
        for k, v in vec.items():
            i, j = divmod(k, ncols)
            rows.setdefault(i, {})[j] = as_rational(v)
        return cls(nrows, ncols, rows)

    # -- text triplet format ---------------------------------------------
    def to_triplets(self) -> str:
        lines = [f"dims {self.nrows} {self.ncols}"]
        for i, j, v in self.entries():
            lines.append(f"{i} {j} {v.numerator}/{v.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplets(cls, text: str) -> SparseOperator:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines or not lines[0].startswith("dims "):
            raise ValueError("missing 'dims R C' header")
        _, nr, nc = lines[0].split()
        entries = []
        for ln in lines[1:]:
            i, j, q = ln.split()
            entries.append((int(i), int(j), Fraction(q)))
        return cls.from_entries(int(nr), int(nc), entries)


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def _to_sparse(v, length: int | None) -> tuple[dict[int, Fraction], int]:
    if isinstance(v, Mapping):
        if length is None:
            raise DimensionMismatchError("sparse vectors need an explicit length")
        out = {}
        for k, x in v.items():
            if not 0 <= k < length:
                raise DimensionMismatchError(f"index {k} outside vector length {length}")
            q = as_rational(x)
            if q:
                out[k] = q
        return out, length
    seq = list(v)
    if length is not None and len(seq) != length:
        raise DimensionMismatchError(f"vector of length {len(seq)} where {length} expected")
    return {k: as_rational(x) for k, x in enumerate(seq) if x}, len(seq)


def _reduce(vec: dict[int, Fraction], pivots: Mapping[int, Mapping[int, Fraction]]) -> dict[int, Fraction]:
    """Eliminate every pivot column from ``vec`` in place.

    Each pivot row has a 1 at its pivot column and nothing to the left of it.
    """
    heap = [c for c in vec if c in pivots]
    heapq.heapify(heap)
    while heap:
        c = heapq.heappop(heap)
        a = vec.get(c)
        if not a:
            continue
        for k, x in pivots[c].items():
            nv = vec.get(k, 0) - a * x
            if nv:
                if k not in vec and k in pivots:
                    heapq.heappush(heap, k)
                vec[k] = nv
            else:
                vec.pop(k, None)
    return vec


class _Echelon:
    """Incremental semi-echelon form, finalized to RREF on demand."""

    def __init__(self, length: int):
        self.length = length
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def add(self, vec: dict[int, Fraction]) -> bool:
        vec = _reduce(dict(vec), self.pivots)
        if not vec:
            return False
        p = min(vec)
        inv = 1 / vec[p]
        self.pivots[p] = {k: x * inv for k, x in vec.items()}
        return True

    def rref(self) -> tuple[tuple[int, ...], tuple[dict[int, Fraction], ...]]:
        order = sorted(self.pivots)
        done: dict[int, dict[int, Fraction]] = {}
        for p in reversed(order):
            row = dict(self.pivots[p])
            del row[p]
            row = _reduce(row, done)
            row[p] = Fraction(1)
            done[p] = row
        return tuple(order), tuple(done[p] for p in order)


class OperatorSubspace:
    """A subspace of Q^ambient_dim held as a reduced row-echelon basis."""

    __slots__ = ("ambient_dim", "pivot_cols", "basis", "_pivot_rows")

    def __init__(self, ambient_dim: int, pivot_cols: Sequence[int], basis: Sequence[Mapping[int, Fraction]]):
        self.ambient_dim = ambient_dim
        self.pivot_cols = tuple(pivot_cols)
        self.basis = tuple(dict(b) for b in basis)
        self._pivot_rows = dict(zip(self.pivot_cols, self.basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"OperatorSubspace(dim={self.dim}, ambient={self.ambient_dim})"

    def reduce(self, v) -> dict[int, Fraction]:
        vec, _ = _to_sparse(v, self.ambient_dim)
        return _reduce(vec, self._pivot_rows)

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def contains_space(self, other: OperatorSubspace) -> bool:
        _check_ambient(self, other)
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorSubspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivot_cols == other.pivot_cols
                and self.basis == other.basis)

    __hash__ = None

    def __add__(self, other: OperatorSubspace) -> OperatorSubspace:
        _check_ambient(self, other)
        return echelonize(list(self.basis) + list(other.basis), length=self.ambient_dim)

    def operators(self, nrows: int, ncols: int) -> list[SparseOperator]:
        if nrows * ncols != self.ambient_dim:
            raise DimensionMismatchError("operator shape does not match ambient dimension")
        return [SparseOperator.from_vector(b, nrows, ncols) for b in self.basis]

    def project(self, keep) -> OperatorSubspace:
        """Span of the basis vectors with coordinates outside ``keep`` zeroed."""
        return echelonize([{k: x for k, x in b.items() if keep(k)} for b in self.basis], length=self.ambient_dim)


def _check_ambient(a: OperatorSubspace, b: OperatorSubspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")


def echelonize(vectors: Iterable, length: int | None = None) -> OperatorSubspace:
    """Reduced row-echelon basis of the span of ``vectors``.

    Vectors may be dense sequences or ``{index: value}`` mappings (the latter
    require ``length``).  Output is deterministic for a fixed input order.
    """
    ech = None
    for v in vectors:
        vec, n = _to_sparse(v, length)
        if length is None:
            length = n
        if ech is None:
            ech = _Echelon(length)
        ech.add(vec)
    if ech is None:
        if length is None:
            raise DimensionMismatchError("cannot infer ambient dimension of an empty family")
        return OperatorSubspace(length, (), ())
    pivots, basis = ech.rref()
    return OperatorSubspace(length, pivots, basis)


def span_of_operators(ops: Iterable[SparseOperator], nrows: int | None = None, ncols: int | None = None) -> OperatorSubspace:
    ops = list(ops)
    if ops:
        nrows, ncols = ops[0].shape
        for op in ops:
            if op.shape != (nrows, ncols):
                raise DimensionMismatchError("operators of different shapes")
    if nrows is None or ncols is None:
        raise DimensionMismatchError("shape needed for an empty family")
    return echelonize((op.vectorize() for op in ops), length=nrows * ncols)


def contains(space: OperatorSubspace, v) -> bool:
    return space.contains(v)


def equal(a: OperatorSubspace, b: OperatorSubspace) -> bool:
    _check_ambient(a, b)
    return a == b


def zero_subspace(ambient_dim: int) -> OperatorSubspace:
    return OperatorSubspace(ambient_dim, (), ())


def rank(a: SparseOperator) -> int:
    ech = _Echelon(a.ncols)
    for _, row in a.rows():
        ech.add(row)
    return len(ech.pivots)


def nullspace(a: SparseOperator) -> OperatorSubspace:
    """Basis of ``{x : a x = 0}`` as an echelonized subspace of Q^ncols."""
    ech = _Echelon(a.ncols)
    for _, row in a.rows():
        ech.add(row)
    pivots, rows = ech.rref()
    pivset = set(pivots)
    by_col: dict[int, list[tuple[int, Fraction]]] = {}
    for p, row in zip(pivots, rows):
        for k, x in row.items():
            if k != p:
                by_col.setdefault(k, []).append((p, x))
    vectors = []
    for f in range(a.ncols):
        if f in pivset:
            continue
        v = {f: Fraction(1)}
        for p, x in by_col.get(f, ()):
            v[p] = -x
        vectors.append(v)
    return echelonize(vectors, length=a.ncols)


def nullspace_of_columns(columns: Sequence[Mapping[int, Fraction]]) -> list[dict[int, Fraction]]:
    """Coefficient vectors ``c`` with ``sum_k c_k columns[k] = 0``.

    Rows of the implied matrix are the keys appearing in the columns.
    Returns an echelonized basis as sparse dicts over column positions.
    """
    keys: dict[object, int] = {}
    rows: dict[int, dict[int, Fraction]] = {}
    for k, col in enumerate(columns):
        for key, x in col.items():
            if not x:
                continue
            i = keys.setdefault(key, len(keys))
            rows.setdefault(i, {})[k] = as_rational(x)
    mat = SparseOperator._trusted(len(keys), len(columns), rows)
    return list(nullspace(mat).basis)


def inverse(a: SparseOperator) -> SparseOperator:
    """Exact inverse of a small square matrix by Gauss-Jordan."""
    n = a.nrows
    if a.ncols != n:
        raise DimensionMismatchError("inverse of a non-square matrix")
    m = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a.to_dense())]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return SparseOperator.from_dense([row[n:] for row in m])


def determinant(a: SparseOperator) -> Fraction:
    n = a.nrows
    m = a.to_dense()
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det
