"""Exact linear algebra over the rationals.

Dense matrices with ``fractions.Fraction`` entries, reduced row echelon
form, kernels, spans, and orthogonal complements with respect to a bilinear
form. A subspace is stored by its RREF basis, which is a canonical
representative: two subspaces are equal exactly when their stored bases are
equal entrywise.

Row reduction picks the first nonzero entry in column order as the pivot;
no pivoting heuristics are needed because the arithmetic is exact. The
elimination itself runs on integer-scaled rows, which keeps the inner loop
in machine integers for all the matrices this package produces.

No floating point is used anywhere; every result is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

__all__ = [
    "Scalar",
    "DimensionError",
    "Matrix",
    "Subspace",
    "rref",
    "kernel",
    "span",
    "complement_under_form",
    "subspace_contains",
    "subspace_equal",
]


class DimensionError(ValueError):
    """Raised when operand shapes do not line up."""


def _scalar(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {value!r}")


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        """Build a matrix from rows of ints or Fractions.

        Args:
            rows: row sequences, all of the same length.
            cols: column count, required when ``rows`` is empty.
        """
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        entries: list[Fraction] = []
        for r in rows:
            if len(r) != cols:
                raise DimensionError("rows have inconsistent lengths")
            entries.extend(_scalar(x) for x in r)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence) -> Matrix:
        d = [_scalar(x) for x in diag]
        n = len(d)
        return cls(n, n, tuple(d[i] if i == j else _ZERO for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        ents = tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.cols, self.rows, ents)

    def matmul(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out: list[Fraction] = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = _ZERO
                for k in range(self.cols):
                    x = row[k]
                    if x:
                        acc += x * other.at(k, j)
                out.append(acc)
        return Matrix(self.rows, other.cols, tuple(out))


def _leading_index(row: Sequence) -> int | None:
    for idx, x in enumerate(row):
        if x:
            return idx
    return None


def _primitive(row: list[int]) -> None:
    """Divide an integer row by the gcd of its entries, in place."""
    g = 0
    for x in row:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for i, x in enumerate(row):
            row[i] = x // g


def _int_row(values: Iterable[Fraction | int]) -> list[int]:
    """Scale a rational row to a primitive integer row (content divided out)."""
    vals = [_scalar(x) for x in values]
    den = 1
    for x in vals:
        den = den * x.denominator // math.gcd(den, x.denominator)
    row = [int(x * den) for x in vals]
    _primitive(row)
    return row


def _echelon(work: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """Forward elimination on integer rows, in place.

    Returns the nonzero echelon rows (primitive, positive leading entry) and
    their pivot columns. The pivot for each column is the first row, in the
    current order, with a nonzero entry there.
    """
    npiv = 0
    pivot_cols: list[int] = []
    nrows = len(work)
    for c in range(cols):
        piv = None
        for i in range(npiv, nrows):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[npiv], work[piv] = work[piv], work[npiv]
        prow = work[npiv]
        if prow[c] < 0:
            for j in range(c, cols):
                prow[j] = -prow[j]
        lead = prow[c]
        ptail = prow[c:]
        for i in range(npiv + 1, nrows):
            wrow = work[i]
            a = wrow[c]
            if a:
                wrow[c:] = [x * lead - y * a for x, y in zip(wrow[c:], ptail)]
                _primitive(wrow)
        pivot_cols.append(c)
        npiv += 1
        if npiv == nrows:
            break
    return work[:npiv], pivot_cols


def _back_eliminate(rows: list[list[int]], pivot_cols: list[int]) -> None:
    """Clear entries above each pivot, keeping rows integral."""
    for k in range(len(pivot_cols) - 1, 0, -1):
        prow = rows[k]
        c = pivot_cols[k]
        lead = prow[c]
        for i in range(k):
            wrow = rows[i]
            a = wrow[c]
            if a:
                rows[i] = wrow = [x * lead - y * a for x, y in zip(wrow, prow)]
                _primitive(wrow)


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form of a matrix.

    Returns:
        A pair ``(r, rank)``. ``r`` has the same shape as ``m``; its first
        ``rank`` rows are the canonical RREF rows (each leading with 1,
        pivot columns elsewhere zero, pivots strictly increasing) and the
        remaining rows are zero.
    """
    work = [_int_row(m.row(i)) for i in range(m.rows)]
    ech, pivot_cols = _echelon(work, m.cols)
    _back_eliminate(ech, pivot_cols)
    entries: list[Fraction] = []
    for k, c in enumerate(pivot_cols):
        lead = ech[k][c]
        entries.extend(Fraction(x, lead) for x in ech[k])
    entries.extend([_ZERO] * ((m.rows - len(pivot_cols)) * m.cols))
    return Matrix(m.rows, m.cols, tuple(entries)), len(pivot_cols)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of QQ^n held by its RREF basis with no zero rows.

    Because the basis is canonical, dataclass equality coincides with
    equality of subspaces.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self) -> None:
        if self.ambient_dim < 0:
            raise DimensionError("ambient dimension must be nonnegative")
        if self.basis.cols != self.ambient_dim:
            raise DimensionError("basis width does not match the ambient dimension")
        last = -1
        for i in range(self.basis.rows):
            row = self.basis.row(i)
            c = _leading_index(row)
            if c is None:
                raise ValueError("zero row in subspace basis")
            if row[c] != 1:
                raise ValueError("subspace basis row must lead with 1")
            if c <= last:
                raise ValueError("subspace basis rows out of echelon order")
            last = c

    @property
    def dimension(self) -> int:
        return self.basis.rows

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.zero(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    def pivot_columns(self) -> tuple[int, ...]:
        cols = []
        for i in range(self.basis.rows):
            c = _leading_index(self.basis.row(i))
            assert c is not None
            cols.append(c)
        return tuple(cols)

    def contains_vector(self, vector: Sequence) -> bool:
        if len(vector) != self.ambient_dim:
            raise DimensionError("vector length does not match the ambient dimension")
        return _IntBasis(self).contains(vector)


class _IntBasis:
    """Integer-scaled copy of a subspace basis for fast exact membership tests.

    Build once, then test many candidate vectors; reduction runs entirely in
    machine integers.
    """

    __slots__ = ("cols", "pivots", "rows", "leads")

    def __init__(self, s: Subspace) -> None:
        self.cols = s.ambient_dim
        self.pivots: list[int] = []
        self.rows: list[list[int]] = []
        self.leads: list[int] = []
        for i in range(s.basis.rows):
            row = _int_row(s.basis.row(i))
            c = _leading_index(row)
            assert c is not None
            self.pivots.append(c)
            self.rows.append(row)
            self.leads.append(row[c])

    def residue(self, vector: Sequence) -> list[int]:
        """Reduce a vector against the basis; all zero means membership."""
        vec = _int_row(vector)
        if len(vec) != self.cols:
            raise DimensionError("vector length does not match the ambient dimension")
        for c, row, lead in zip(self.pivots, self.rows, self.leads):
            a = vec[c]
            if a:
                vec[c:] = [x * lead - y * a for x, y in zip(vec[c:], row[c:])]
        return vec

    def contains(self, vector: Sequence) -> bool:
        return not any(self.residue(vector))


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    """Subspace spanned by the given coordinate vectors."""
    vecs = [list(v) for v in vectors]
    for v in vecs:
        if len(v) != ambient_dim:
            raise DimensionError("vector length does not match the ambient dimension")
    m = Matrix.from_rows(vecs, ambient_dim)
    r, rank = rref(m)
    basis = Matrix(rank, ambient_dim, r.entries[: rank * ambient_dim])
    return Subspace(ambient_dim, basis)


def kernel(m: Matrix) -> Subspace:
    """Right kernel {v : m v = 0} as a canonical subspace."""
    r, rank = rref(m)
    pivots: list[int] = []
    for i in range(rank):
        c = _leading_index(r.row(i))
        assert c is not None
        pivots.append(c)
    pivot_set = set(pivots)
    vecs = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -r.at(i, f)
        vecs.append(v)
    return span(vecs, m.cols)


def complement_under_form(s: Subspace, form: Matrix) -> Subspace:
    """Orthogonal complement of ``s`` for the pairing (v, w) -> v^T F w.

    Args:
        s: the subspace to complement.
        form: the matrix F of a nondegenerate bilinear form on the ambient
            space.

    Raises:
        DimensionError: if the form shape does not match the ambient space.
        ValueError: if the form is degenerate.
    """
    n = s.ambient_dim
    if form.rows != n or form.cols != n:
        raise DimensionError("form shape does not match the ambient dimension")
    _, rank = rref(form)
    if rank != n:
        raise ValueError("bilinear form is degenerate")
    # v is orthogonal to basis row w exactly when (w^T F^T) v = 0.
    m = s.basis.matmul(form.transpose())
    return kernel(m)


def subspace_contains(outer: Subspace, inner: Subspace) -> bool:
    """Whether every vector of ``inner`` lies in ``outer``."""
    if outer.ambient_dim != inner.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
    if inner.dimension > outer.dimension:
        return False
    ib = _IntBasis(outer)
    return all(ib.contains(inner.basis.row(i)) for i in range(inner.basis.rows))


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    """Exact subspace equality via the canonical bases."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
    return a.basis == b.basis
