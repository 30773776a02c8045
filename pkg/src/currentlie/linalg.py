"""Dense exact linear algebra over the rationals.

Every entry is a fractions.Fraction, so ranks, nullspaces and subspace
operations are exact certificates rather than floating-point estimates.
Matrices are immutable once built; row reduction works on throwaway
list-of-list copies.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction

_ZERO = Q(0)
_ONE = Q(1)


def rat(value) -> Q:
    """Coerce an int, Fraction or "p/q" string to an exact rational.

    Floats are refused on purpose: binary floats smuggle rounding error
    into what is supposed to be certified arithmetic.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        return Q(value)
    raise TypeError(f"refusing inexact scalar {value!r}")


def rat_str(value) -> str:
    """Serialize a rational as "p/q", or just "p" for integers."""
    return str(rat(value))


class ExactMatrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(rat(x) for x in row) for row in rows)
        if not rows:
            raise ValueError("cannot infer width of an empty matrix; use ExactMatrix.zero")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def _trusted(cls, rows: tuple, nrows: int, ncols: int) -> "ExactMatrix":
        # internal: rows already a tuple of width-ncols tuples of Fractions
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = nrows
        m.ncols = ncols
        return m

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls._trusted(tuple((_ZERO,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        rows = tuple(
            tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
        )
        return cls._trusted(rows, n, n)

    @classmethod
    def from_flat(cls, nrows: int, ncols: int, flat: Sequence) -> "ExactMatrix":
        """Rebuild a matrix from its row-major flattening."""
        if len(flat) != nrows * ncols:
            raise ValueError("flat length does not match shape")
        rows = tuple(
            tuple(rat(x) for x in flat[i * ncols : (i + 1) * ncols])
            for i in range(nrows)
        )
        return cls._trusted(rows, nrows, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        rows = tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        )
        return ExactMatrix._trusted(rows, self.nrows, self.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        rows = tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        )
        return ExactMatrix._trusted(rows, self.nrows, self.ncols)

    def __neg__(self) -> "ExactMatrix":
        rows = tuple(tuple(-a for a in row) for row in self.rows)
        return ExactMatrix._trusted(rows, self.nrows, self.ncols)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self.matmul(other)
        c = rat(other)
        rows = tuple(tuple(a * c for a in row) for row in self.rows)
        return ExactMatrix._trusted(rows, self.nrows, self.ncols)

    def __rmul__(self, other):
        return self.__mul__(other)

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimension mismatch")
        bcols = list(zip(*other.rows))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col) if a and b) or _ZERO for col in bcols)
            for row in self.rows
        )
        return ExactMatrix._trusted(rows, self.nrows, other.ncols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector, returned as a tuple."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v) if a and b) or _ZERO for row in self.rows)

    def transpose(self) -> "ExactMatrix":
        rows = tuple(zip(*self.rows)) if self.nrows else ()
        if not rows:
            return ExactMatrix.zero(self.ncols, 0)
        return ExactMatrix._trusted(rows, self.ncols, self.nrows)

    def trace(self) -> Q:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), _ZERO)

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def flat(self) -> tuple:
        """Row-major flattening; inverse of from_flat."""
        return tuple(x for row in self.rows for x in row)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        """Submatrix with half-open row range [r0,r1) and column range [c0,c1)."""
        rows = tuple(row[c0:c1] for row in self.rows[r0:r1])
        return ExactMatrix._trusted(rows, r1 - r0, c1 - c0)


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a.matmul(b) - b.matmul(a)


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; (i1*p+i2, j1*q+j2) entry is a[i1,j1]*b[i2,j2]."""
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    return ExactMatrix._trusted(tuple(rows), a.nrows * b.nrows, a.ncols * b.ncols)


def hstack(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    if not mats:
        raise ValueError("hstack of nothing")
    n = mats[0].nrows
    if any(m.nrows != n for m in mats):
        raise ValueError("row count mismatch")
    rows = tuple(
        tuple(x for m in mats for x in m.rows[i]) for i in range(n)
    )
    return ExactMatrix._trusted(rows, n, sum(m.ncols for m in mats))


def vstack(mats: Sequence[ExactMatrix]) -> ExactMatrix:
    if not mats:
        raise ValueError("vstack of nothing")
    w = mats[0].ncols
    if any(m.ncols != w for m in mats):
        raise ValueError("column count mismatch")
    rows = tuple(row for m in mats for row in m.rows)
    return ExactMatrix._trusted(rows, len(rows), w)


def _rref_rows(rows: list[list[Q]], ncols: int) -> list[int]:
    """Gauss-Jordan on a list of mutable rows, in place.

    Deterministic: pivots are chosen leftmost column first, first nonzero
    row from the top.  Returns the pivot column list; reduced rows end up
    sorted with zero rows at the bottom, which is exactly RREF order.
    """
    nrows = len(rows)
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != _ONE:
            inv = _ONE / pv
            for idx in range(c, ncols):
                if prow[idx]:
                    prow[idx] *= inv
        # nonzero tail of the pivot row, reused against every other row
        pnz = [(idx, prow[idx]) for idx in range(c + 1, ncols) if prow[idx]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                row[c] = _ZERO
                if f == _ONE:
                    for idx, v in pnz:
                        row[idx] -= v
                else:
                    for idx, v in pnz:
                        row[idx] -= f * v
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Reduced row echelon form, same shape as the input, plus pivot columns."""
    rows = [list(row) for row in m.rows]
    pivots = _rref_rows(rows, m.ncols)
    out = ExactMatrix._trusted(tuple(tuple(r) for r in rows), m.nrows, m.ncols)
    return out, tuple(pivots)


def rank(m: ExactMatrix) -> int:
    rows = [list(row) for row in m.rows]
    return len(_rref_rows(rows, m.ncols))


def _dedup_rows(rows: Iterable[Sequence[Q]], ncols: int) -> list[list[Q]]:
    # speed only: normalize leading entry to 1, then drop duplicate rows.
    # Leibniz-style systems repeat rows (and negations) heavily.
    seen: dict[tuple, None] = {}
    for row in rows:
        lead = None
        for idx in range(ncols):
            if row[idx]:
                lead = idx
                break
        if lead is None:
            continue
        lv = row[lead]
        key = tuple(row) if lv == _ONE else tuple(x / lv for x in row)
        seen[key] = None
    return [list(k) for k in seen]


def _nullspace_from_system(rows: Iterable[Sequence[Q]], ncols: int) -> "Subspace":
    """Solution space of (rows) * x = 0; rows may repeat, dedup is safe here."""
    work = _dedup_rows(rows, ncols)
    pivots = _rref_rows(work, ncols)
    rank_ = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -work[i][f]
        basis.append(v)
    assert len(basis) == ncols - rank_
    return Subspace.from_vectors(basis, ncols)


def nullspace(m: ExactMatrix) -> "Subspace":
    """Kernel {v : m v = 0} as a canonical Subspace of Q^ncols."""
    return _nullspace_from_system(m.rows, m.ncols)


class Subspace:
    """A subspace of Q^n held as its unique RREF basis (zero rows dropped).

    Because the RREF basis is unique, equality of Subspace objects is
    equality of subspaces.
    """

    __slots__ = ("ambient", "basis", "pivots", "_nnz")

    def __init__(self, ambient: int, basis: ExactMatrix, pivots: tuple[int, ...]):
        # trusted constructor; use from_vectors for arbitrary spanning sets
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots
        self._nnz = None

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        rows = [[rat(x) for x in v] for v in vectors]
        for row in rows:
            if len(row) != ambient:
                raise ValueError("vector length does not match ambient dimension")
        pivots = _rref_rows(rows, ambient)
        kept = tuple(tuple(r) for r in rows[: len(pivots)])
        basis = (
            ExactMatrix._trusted(kept, len(kept), ambient)
            if kept
            else ExactMatrix.zero(0, ambient)
        )
        return cls(ambient, basis, tuple(pivots))

    @classmethod
    def zero_space(cls, ambient: int) -> "Subspace":
        return cls(ambient, ExactMatrix.zero(0, ambient), ())

    @classmethod
    def full_space(cls, ambient: int) -> "Subspace":
        return cls(ambient, ExactMatrix.identity(ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def basis_rows(self) -> tuple:
        return self.basis.rows

    def _nonzeros(self):
        if self._nnz is None:
            self._nnz = [
                [(j, x) for j, x in enumerate(row) if x] for row in self.basis.rows
            ]
        return self._nnz

    def reduce(self, v: Sequence) -> list:
        """Canonical representative of v modulo this subspace."""
        w = [rat(x) for x in v]
        if len(w) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        for nz, p in zip(self._nonzeros(), self.pivots):
            f = w[p]
            if f:
                for j, x in nz:
                    w[j] -= f * x
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        return all(other.contains(row) for row in self.basis.rows)

    def coordinates(self, v: Sequence):
        """Coefficients of v in the RREF basis, or None if v is outside."""
        w = [rat(x) for x in v]
        coeffs = []
        for nz, p in zip(self._nonzeros(), self.pivots):
            f = w[p]
            coeffs.append(f)
            if f:
                for j, x in nz:
                    w[j] -= f * x
        if any(w):
            return None
        return tuple(coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    return Subspace.from_vectors(list(a.basis.rows) + list(b.basis.rows), a.ambient)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the left kernel of the stacked bases.

    A row (alpha, beta) with alpha*A + beta*B = 0 corresponds to the common
    vector alpha*A = -beta*B, and every common vector arises that way.
    """
    if a.ambient != b.ambient:
        raise ValueError("ambient mismatch")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero_space(a.ambient)
    stacked = vstack([a.basis, b.basis])
    left_kernel = nullspace(stacked.transpose())
    vectors = []
    p = a.dim
    for row in left_kernel.basis.rows:
        alpha = row[:p]
        vec = [_ZERO] * a.ambient
        for coeff, brow in zip(alpha, a.basis.rows):
            if coeff:
                for j, x in enumerate(brow):
                    if x:
                        vec[j] += coeff * x
        vectors.append(vec)
    return Subspace.from_vectors(vectors, a.ambient)


def subspace_contains(space: Subspace, v: Sequence) -> bool:
    return space.contains(v)


class EndoSubspace:
    """A subspace of the n x n matrices, held flat inside Q^(n*n).

    Matrices flatten row-major (ExactMatrix.flat), so this is just a
    Subspace with a matrix-shaped view on top.
    """

    __slots__ = ("n", "space")

    def __init__(self, n: int, space: Subspace):
        if space.ambient != n * n:
            raise ValueError("ambient dimension is not n*n")
        self.n = n
        self.space = space

    @classmethod
    def from_matrices(cls, mats: Iterable[ExactMatrix], n: int) -> "EndoSubspace":
        vecs = []
        for m in mats:
            if m.shape != (n, n):
                raise ValueError("matrix shape mismatch")
            vecs.append(m.flat())
        return cls(n, Subspace.from_vectors(vecs, n * n))

    @property
    def dim(self) -> int:
        return self.space.dim

    def contains(self, m: ExactMatrix) -> bool:
        if m.shape != (self.n, self.n):
            raise ValueError("matrix shape mismatch")
        return self.space.contains(m.flat())

    def basis_matrices(self) -> tuple[ExactMatrix, ...]:
        return tuple(
            ExactMatrix.from_flat(self.n, self.n, row) for row in self.space.basis.rows
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EndoSubspace)
            and self.n == other.n
            and self.space == other.space
        )

    def __hash__(self):
        return hash((self.n, self.space))

    def __repr__(self):
        return f"EndoSubspace(n={self.n}, dim={self.dim})"


class SpanSolver:
    """Writes vectors as combinations of a fixed, possibly dependent, list.

    Row-reducing [V | I] yields [R | T] with T*V = R, so coefficients read
    off R translate back through T to coefficients over the original list.
    """

    def __init__(self, vectors: Sequence[Sequence], ambient: int):
        vecs = [[rat(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError("vector length does not match ambient dimension")
        self.ambient = ambient
        self.count = len(vecs)
        work = [
            v + [_ONE if j == i else _ZERO for j in range(self.count)]
            for i, v in enumerate(vecs)
        ]
        pivots = _rref_rows(work, ambient + self.count)
        self._rows = []
        for p, row in zip(pivots, work):
            if p >= ambient:
                break  # dependency rows; no use for solving
            self._rows.append((p, row))

    def coefficients(self, v: Sequence):
        """Coefficients c with sum(c_i * vectors_i) = v, or None if unsolvable."""
        w = [rat(x) for x in v]
        if len(w) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        alphas = []
        for p, row in self._rows:
            f = w[p]
            alphas.append(f)
            if f:
                for j in range(self.ambient):
                    if row[j]:
                        w[j] -= f * row[j]
        if any(w):
            return None
        coeffs = [_ZERO] * self.count
        for f, (_, row) in zip(alphas, self._rows):
            if f:
                for j in range(self.count):
                    t = row[self.ambient + j]
                    if t:
                        coeffs[j] += f * t
        return tuple(coeffs)
