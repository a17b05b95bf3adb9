"""Exact rational matrices and elimination helpers.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere in the package.  Vectors are row vectors and matrices act on
the right, which matches the left-to-right path convention used by the
module code.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = tuple[Fraction, ...]


def _frac_row(row: Iterable) -> Row:
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in row)


class Matrix:
    """Immutable dense matrix with explicit shape (zero-sized shapes allowed)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(_frac_row(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append([sum((x * c[k] for k, x in nz), Fraction(0)) for c in cols])
        return Matrix(out, other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix([[c * x for x in r] for r in self.rows], self.ncols)

    def transpose(self) -> "Matrix":
        if not self.nrows:
            return Matrix([[] for _ in range(self.ncols)], 0)
        return Matrix([list(c) for c in zip(*self.rows)], self.nrows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[1])

    def row_vector(self, v: Sequence) -> Row:
        """Return ``v @ self`` for a row vector ``v``."""
        if len(v) != self.nrows:
            raise ValueError("vector length mismatch")
        acc = [Fraction(0)] * self.ncols
        for x, r in zip(v, self.rows):
            if x:
                for j, y in enumerate(r):
                    if y:
                        acc[j] += x * y
        return tuple(acc)


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    m = [list(_frac_row(r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def row_space(rows: Sequence[Sequence], ncols: int) -> list[Row]:
    """A basis (in reduced echelon form) of the span of ``rows``."""
    red, _ = rref(rows, ncols)
    return [tuple(r) for r in red]


def left_kernel(mat: Matrix) -> list[Row]:
    """Basis of ``{v : v @ mat = 0}``."""
    return nullspace(mat.transpose())


def nullspace(mat: Matrix) -> list[Row]:
    """Basis of ``{x : mat @ x = 0}`` (x as a column), one row per basis vector."""
    red, pivots = rref(mat.rows, mat.ncols)
    free = [c for c in range(mat.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * mat.ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def complement_basis(sub: Sequence[Sequence], ncols: int) -> list[Row]:
    """Standard basis vectors that extend a basis of ``span(sub)`` to the whole space."""
    _, pivots = rref(sub, ncols)
    taken = set(pivots)
    return [tuple(Fraction(int(j == c)) for j in range(ncols)) for c in range(ncols) if c not in taken]


def extend_within(sub: Sequence[Sequence], ambient: Sequence[Sequence], ncols: int) -> list[Row]:
    """Greedily pick vectors of ``ambient`` completing ``span(sub)`` to ``span(sub + ambient)``."""
    chosen: list[Row] = []
    current = [tuple(_frac_row(r)) for r in sub]
    rk = len(rref(current, ncols)[1])
    for v in ambient:
        trial = current + [tuple(_frac_row(v))]
        r2 = len(rref(trial, ncols)[1])
        if r2 > rk:
            current, rk = trial, r2
            chosen.append(tuple(_frac_row(v)))
    return chosen


def coordinates(vec: Sequence, basis: Sequence[Sequence]) -> Row:
    """Coordinates of ``vec`` in terms of the (independent) rows ``basis``."""
    k = len(basis)
    n = len(vec)
    # solve c @ B = vec  <=>  B^T c^T = vec^T
    aug = [[Fraction(basis[i][j]) for i in range(k)] + [Fraction(vec[j])] for j in range(n)]
    red, pivots = rref(aug, k + 1)
    if k in pivots:
        raise ValueError("vector is not in the span of the basis")
    c = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        c[p] = row[k]
    return tuple(c)


def sparse_nullspace(equations: Sequence[dict[int, Fraction]], nvars: int) -> list[Row]:
    """Solution basis of a homogeneous system given as sparse rows ``{var: coeff}``."""
    pivot_rows: dict[int, dict[int, Fraction]] = {}
    for eq in equations:
        row = {k: Fraction(v) for k, v in eq.items() if v}
        # pivot rows are kept fully reduced, so one pass clears every pivot column
        for p in [k for k in row if k in pivot_rows]:
            f = row.get(p)
            if not f:
                continue
            for k, v in pivot_rows[p].items():
                nv = row.get(k, Fraction(0)) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {k: v * inv for k, v in row.items()}
        # keep pivot rows fully reduced w.r.t. the new pivot
        for q, prow in pivot_rows.items():
            if p in prow:
                f = prow[p]
                for k, v in row.items():
                    nv = prow.get(k, Fraction(0)) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivot_rows[p] = row
    free = [v for v in range(nvars) if v not in pivot_rows]
    basis = []
    for f in free:
        vec = [Fraction(0)] * nvars
        vec[f] = Fraction(1)
        for p, prow in pivot_rows.items():
            c = prow.get(f)
            if c:
                vec[p] = -c
        basis.append(tuple(vec))
    return basis
