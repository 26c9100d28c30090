"""Sparse exact linear algebra over Q(sqrt(d)).

Everything is built on Gaussian elimination with exact scalars; the pivot
within a column is chosen to keep operand bit-sizes small.  Target sizes
are modest (dimensions up to ~1000), correctness over speed.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalars import Scalar, sc

Vector = List[Scalar]


def _zero_vec(n: int) -> Vector:
    return [Scalar(0)] * n


class Matrix:
    """Immutable sparse matrix: entries maps (row, col) -> nonzero Scalar."""

    def __init__(self, rows: int, cols: int, entries: Dict[Tuple[int, int], Scalar]):
        self.rows = rows
        self.cols = cols
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        entries = {}
        ncols = max((len(r) for r in rows), default=0)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                x = sc(x)
                if not x.is_zero():
                    entries[(i, j)] = x
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        entries = {}
        if nrows is None:
            nrows = max((len(c) for c in cols), default=0)
        for j, col in enumerate(cols):
            for i, x in enumerate(col):
                x = sc(x)
                if not x.is_zero():
                    entries[(i, j)] = x
        return cls(nrows, len(cols), entries)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): Scalar(1) for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, {})

    def row(self, i: int) -> Vector:
        return [self.entries.get((i, j), Scalar(0)) for j in range(self.cols)]

    def column(self, j: int) -> Vector:
        return [self.entries.get((i, j), Scalar(0)) for i in range(self.rows)]

    def to_rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def mul_vec(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        out = _zero_vec(self.rows)
        for (i, j), x in self.entries.items():
            if not v[j].is_zero():
                out[i] = out[i] + x * v[j]
        return out

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(self.rows, self.cols, {k: c * v for k, v in self.entries.items()})

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        entries = dict(self.entries)
        for (i, j), v in other.entries.items():
            entries[(i, j + self.cols)] = v
        return Matrix(self.rows, self.cols + other.cols, entries)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    # -- elimination -------------------------------------------------------

    def _sparse_rows(self) -> List[Dict[int, Scalar]]:
        rows: List[Dict[int, Scalar]] = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def rref(self) -> Tuple[List[Dict[int, Scalar]], List[int]]:
        """Reduced row echelon form; returns (rows, pivot column list)."""
        return _rref(self._sparse_rows(), self.cols)

    def rank(self) -> int:
        _, pivots = self.rref()
        return len(pivots)

    def kernel_basis(self) -> List[Vector]:
        """Exact basis of the null space; length == cols - rank."""
        rows, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            v = _zero_vec(self.cols)
            v[f] = Scalar(1)
            for r, p in enumerate(pivots):
                x = rows[r].get(f)
                if x is not None:
                    v[p] = -x
            basis.append(v)
        return basis

    def solve(self, rhs: Sequence[Scalar]) -> Optional[Vector]:
        """One exact solution of m*x = rhs, or None if inconsistent."""
        if len(rhs) != self.rows:
            raise ValueError(f"rhs length {len(rhs)} != rows {self.rows}")
        rows = self._sparse_rows()
        for i, x in enumerate(rhs):
            x = sc(x)
            if not x.is_zero():
                rows[i][self.cols] = x
        red, pivots = _rref(rows, self.cols + 1)
        if self.cols in pivots:
            return None
        x = _zero_vec(self.cols)
        for r, p in enumerate(pivots):
            x[p] = red[r].get(self.cols, Scalar(0))
        return x

    def column_space_basis(self) -> List[Vector]:
        """Basis of the column span, as columns of the original matrix."""
        _, piv_cols = self.rref()
        return [self.column(j) for j in piv_cols]


def _rref(rows: List[Dict[int, Scalar]], ncols: int) -> Tuple[List[Dict[int, Scalar]], List[int]]:
    """In-place RREF of sparse rows (dict col -> Scalar). Deterministic:
    columns are processed left to right; the pivot row is the candidate of
    least scalar complexity (ties by row order)."""
    pivots: List[int] = []
    done: List[Dict[int, Scalar]] = []
    active = [r for r in rows if r]
    for col in range(ncols):
        candidates = [(r[col].complexity(), idx) for idx, r in enumerate(active) if col in r]
        if not candidates:
            continue
        _, best = min(candidates)
        piv_row = active.pop(best)
        piv_val = piv_row[col]
        if piv_val != 1:
            inv = piv_val.inverse()
            piv_row = {j: v * inv for j, v in piv_row.items()}
        # eliminate below
        for r in active:
            x = r.get(col)
            if x is not None:
                for j, v in piv_row.items():
                    nv = r.get(j, Scalar(0)) - x * v
                    if nv.is_zero():
                        r.pop(j, None)
                    else:
                        r[j] = nv
        active = [r for r in active if r]
        # eliminate above
        for r in done:
            x = r.get(col)
            if x is not None:
                for j, v in piv_row.items():
                    nv = r.get(j, Scalar(0)) - x * v
                    if nv.is_zero():
                        r.pop(j, None)
                    else:
                        r[j] = nv
        done.append(piv_row)
        pivots.append(col)
    return done, pivots


# -- subspace utilities ----------------------------------------------------


def row_space_basis(vectors: Iterable[Sequence[Scalar]], dim: int) -> List[Vector]:
    """Reduced basis of the span of the given coordinate vectors."""
    rows = []
    for v in vectors:
        row = {j: sc(x) for j, x in enumerate(v) if not sc(x).is_zero()}
        if row:
            rows.append(row)
    red, _ = _rref(rows, dim)
    out = []
    for r in red:
        v = _zero_vec(dim)
        for j, x in r.items():
            v[j] = x
        out.append(v)
    return out


def in_span(basis: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> bool:
    dim = len(v)
    before = len(row_space_basis(basis, dim))
    after = len(row_space_basis(list(basis) + [list(v)], dim))
    return before == after


def extend_basis(
    base: Sequence[Sequence[Scalar]], candidates: Sequence[Sequence[Scalar]], dim: int
) -> List[Vector]:
    """Greedily pick candidates extending span(base); returns the picks."""
    current = [list(v) for v in base]
    rank = len(row_space_basis(current, dim))
    chosen = []
    for c in candidates:
        trial = current + [list(c)]
        r = len(row_space_basis(trial, dim))
        if r > rank:
            current, rank = trial, r
            chosen.append(list(c))
    return chosen
