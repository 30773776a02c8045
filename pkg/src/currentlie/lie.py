"""Finite-dimensional Lie algebras over Q given by structure constants.

Carries the structure theory needed for derivation algebras of current
Lie algebras: center, derived and lower central series, derivations,
centroid, the maps g/[g,g] -> z(g), Killing form and solvable radical,
plus the two concrete families used throughout (Heisenberg algebras and
symplectic algebras with their matrix realization).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from currentlie.linalg import (
    EndoSubspace,
    ExactMatrix,
    Q,
    SpanSolver,
    Subspace,
    _nullspace_from_system,
    nullspace,
    rank,
    rat,
)

_ZERO = Q(0)
_ONE = Q(1)


class LieAlgebra:
    """Structure-constant presentation of a Lie algebra.

    structure[i][j] is the coordinate vector of [basis_i, basis_j]; the
    full antisymmetric table is stored.  matrix_basis optionally records a
    faithful matrix realization (used by the symplectic constructor).
    """

    def __init__(self, labels: Sequence[str], structure, matrix_basis=None):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        n = self.dim
        self.structure = tuple(
            tuple(tuple(rat(x) for x in structure[i][j]) for j in range(n))
            for i in range(n)
        )
        self.matrix_basis = tuple(matrix_basis) if matrix_basis is not None else None
        self._memo: dict = {}

    @classmethod
    def from_bracket_entries(cls, labels, entries, matrix_basis=None) -> "LieAlgebra":
        """Build from sparse entries (i, j, k, coeff) with i < j.

        The j > i half of the table is filled in by antisymmetry.
        """
        n = len(labels)
        table = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, coeff in entries:
            if not 0 <= i < j < n:
                raise ValueError(f"bracket entry ({i},{j}) is not upper triangular")
            if not 0 <= k < n:
                raise ValueError("bracket target index out of range")
            v = rat(coeff)
            table[i][j][k] += v
            table[j][i][k] -= v
        return cls(labels, table, matrix_basis=matrix_basis)

    def basis_vector(self, i: int) -> tuple:
        return tuple(_ONE if t == i else _ZERO for t in range(self.dim))

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        x = [rat(v) for v in x]
        y = [rat(v) for v in y]
        out = [_ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.structure[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in enumerate(row[j]):
                    if s:
                        out[k] += c * s
        return tuple(out)

    def ad(self, x: Sequence) -> ExactMatrix:
        """Matrix of ad_x = [x, -] in the chosen basis."""
        x = [rat(v) for v in x]
        n = self.dim
        rows = [[_ZERO] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if not xi:
                continue
            for q in range(n):
                vec = self.structure[i][q]
                for p in range(n):
                    if vec[p]:
                        rows[p][q] += xi * vec[p]
        return ExactMatrix(rows)

    def check_lie_axioms(self) -> bool:
        """Antisymmetry (including [x,x] = 0) and Jacobi on all basis triples."""
        n = self.dim
        c = self.structure
        for i in range(n):
            if any(c[i][i]):
                return False
            for j in range(i + 1, n):
                if any(a + b for a, b in zip(c[i][j], c[j][i])):
                    return False
        basis = [self.basis_vector(i) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total = [_ZERO] * n
                    for a, b, cc in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = c[b][cc]
                        term = self.bracket(basis[a], inner)
                        for p in range(n):
                            total[p] += term[p]
                    if any(total):
                        return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.labels == other.labels
            and self.structure == other.structure
        )

    def __hash__(self):
        return hash((self.labels, self.structure))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, labels={self.labels})"


def _memoized(g: LieAlgebra, key: str, compute):
    if key not in g._memo:
        g._memo[key] = compute()
    return g._memo[key]


def center(g: LieAlgebra) -> Subspace:
    """{x : [x, g] = 0}, the kernel of x -> ad_x."""

    def compute():
        n = g.dim
        rows = []
        for j in range(n):
            for p in range(n):
                row = [g.structure[i][j][p] for i in range(n)]
                if any(row):
                    rows.append(row)
        return _nullspace_from_system(rows, n)

    return _memoized(g, "center", compute)


def _bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [g.bracket(u, v) for u in a.basis.rows for v in b.basis.rows]
    return Subspace.from_vectors(vecs, g.dim)


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    def compute():
        full = Subspace.full_space(g.dim)
        return _bracket_span(g, full, full)

    return _memoized(g, "derived", compute)


def derived_series(g: LieAlgebra) -> list[Subspace]:
    """Strictly decreasing chain g, [g,g], [[g,g],[g,g]], ..."""
    series = [Subspace.full_space(g.dim)]
    while True:
        nxt = _bracket_span(g, series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            return series
        series.append(nxt)


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    """Strictly decreasing chain g, [g,g], [g,[g,g]], ..."""
    full = Subspace.full_space(g.dim)
    series = [full]
    while True:
        nxt = _bracket_span(g, full, series[-1])
        if nxt.dim == series[-1].dim:
            return series
        series.append(nxt)


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def derivations(g: LieAlgebra) -> EndoSubspace:
    """All D with D[x,y] = [Dx,y] + [x,Dy], as the exact Leibniz nullspace."""

    def compute():
        n = g.dim
        c = g.structure
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                cij = c[i][j]
                for p in range(n):
                    row = [_ZERO] * (n * n)
                    nz = False
                    for k in range(n):
                        v = cij[k]
                        if v:
                            row[p * n + k] += v
                            nz = True
                    for q in range(n):
                        v = c[q][j][p]
                        if v:
                            row[q * n + i] -= v
                            nz = True
                        w = c[i][q][p]
                        if w:
                            row[q * n + j] -= w
                            nz = True
                    if nz:
                        rows.append(row)
        return EndoSubspace(n, _nullspace_from_system(rows, n * n))

    return _memoized(g, "derivations", compute)


def centroid(g: LieAlgebra) -> EndoSubspace:
    """All T commuting with every adjoint operator: T[x,y] = [Tx,y]."""

    def compute():
        n = g.dim
        c = g.structure
        rows = []
        for i in range(n):
            # T * ad_i - ad_i * T = 0, entry (p, q)
            for p in range(n):
                for q in range(n):
                    row = [_ZERO] * (n * n)
                    nz = False
                    for k in range(n):
                        v = c[i][q][k]  # (ad_i)_{k q}
                        if v:
                            row[p * n + k] += v
                            nz = True
                        w = c[i][k][p]  # (ad_i)_{p k}
                        if w:
                            row[k * n + q] -= w
                            nz = True
                    if nz:
                        rows.append(row)
        return EndoSubspace(n, _nullspace_from_system(rows, n * n))

    return _memoized(g, "centroid", compute)


def hom_quotient_to_center(g: LieAlgebra) -> EndoSubspace:
    """Maps vanishing on [g,g] with image inside z(g).

    Both conditions are linear: T*d = 0 for d spanning [g,g], and
    N*(T e_j) = 0 where the rows of N cut out the center.
    """

    def compute():
        n = g.dim
        z = center(g)
        derived = derived_subalgebra(g)
        # rows of N vanish exactly on z: over Q the dot form is anisotropic,
        # so the double orthogonal complement recovers the span exactly
        normal_rows = nullspace(z.basis).basis.rows
        rows = []
        for d in derived.basis.rows:
            for p in range(n):
                row = [_ZERO] * (n * n)
                nz = False
                for k in range(n):
                    if d[k]:
                        row[p * n + k] += d[k]
                        nz = True
                if nz:
                    rows.append(row)
        for nu in normal_rows:
            for j in range(n):
                row = [_ZERO] * (n * n)
                nz = False
                for p in range(n):
                    if nu[p]:
                        row[p * n + j] += nu[p]
                        nz = True
                if nz:
                    rows.append(row)
        return EndoSubspace(n, _nullspace_from_system(rows, n * n))

    return _memoized(g, "hom0", compute)


def killing_form(g: LieAlgebra) -> ExactMatrix:
    """Gram matrix K[i][j] = tr(ad_i ad_j)."""

    def compute():
        n = g.dim
        c = g.structure
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                # tr(ad_i ad_j) = sum_{p,k} c[i][k][p] c[j][p][k]
                acc = _ZERO
                for p in range(n):
                    for k in range(n):
                        v = c[i][k][p]
                        if v:
                            w = c[j][p][k]
                            if w:
                                acc += v * w
                row.append(acc)
            rows.append(row)
        return ExactMatrix(rows)

    return _memoized(g, "killing", compute)


def solvable_radical(g: LieAlgebra) -> Subspace:
    """Cartan's criterion: x is radical iff K(x, [g,g]) = 0."""
    kil = killing_form(g)
    derived = derived_subalgebra(g)
    rows = [kil.apply(d) for d in derived.basis.rows]
    return _nullspace_from_system(rows, g.dim)


def is_semisimple(g: LieAlgebra) -> bool:
    if g.dim == 0:
        return True
    return rank(killing_form(g)) == g.dim


def is_subalgebra_closed(g: LieAlgebra, space: Subspace) -> bool:
    basis = space.basis.rows
    return all(
        space.contains(g.bracket(u, v))
        for i, u in enumerate(basis)
        for v in basis[i + 1 :]
    )


def is_ideal(g: LieAlgebra, space: Subspace) -> bool:
    return all(
        space.contains(g.bracket(g.basis_vector(i), v))
        for i in range(g.dim)
        for v in space.basis.rows
    )


def subalgebra(g: LieAlgebra, space: Subspace, labels=None) -> LieAlgebra:
    """Induced Lie algebra on the RREF basis of a bracket-closed subspace."""
    basis = space.basis.rows
    d = len(basis)
    if labels is None:
        labels = [f"u{i}" for i in range(d)]
    table = [[[_ZERO] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            coords = space.coordinates(g.bracket(basis[i], basis[j]))
            if coords is None:
                raise ValueError("subspace is not closed under the bracket")
            table[i][j] = list(coords)
            table[j][i] = [-x for x in coords]
    return LieAlgebra(labels, table)


def lie_from_endo_span(endo: EndoSubspace, labels=None) -> LieAlgebra:
    """Lie algebra structure on a commutator-closed space of matrices."""
    mats = endo.basis_matrices()
    d = len(mats)
    if labels is None:
        labels = [f"m{i}" for i in range(d)]
    table = [[[_ZERO] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            comm = mats[i] * mats[j] - mats[j] * mats[i]
            coords = endo.space.coordinates(comm.flat())
            if coords is None:
                raise ValueError("matrix space is not closed under the commutator")
            table[i][j] = list(coords)
            table[j][i] = [-x for x in coords]
    return LieAlgebra(labels, table, matrix_basis=mats)


def heisenberg(m: int) -> LieAlgebra:
    """The Heisenberg algebra h_m: [e_i, f_i] = z, all else zero."""
    if m < 1:
        raise ValueError("m must be >= 1")
    labels = (
        [f"e{i + 1}" for i in range(m)]
        + [f"f{i + 1}" for i in range(m)]
        + ["z"]
    )
    entries = [(i, m + i, 2 * m, _ONE) for i in range(m)]
    return LieAlgebra.from_bracket_entries(labels, entries)


def sp(m: int) -> LieAlgebra:
    """The symplectic algebra sp_2m of the form [[0, I], [-I, 0]].

    Basis matrices are the blocks [[X1, X2], [X3, -X1^T]] with X2 and X3
    symmetric; structure constants come from the matrix commutators, and
    the realization is kept on the result.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 2 * m
    mats = []
    labels = []

    def unit(i, j):
        return [[_ONE if (r, c) == (i, j) else _ZERO for c in range(n)] for r in range(n)]

    def add(mat_rows, label):
        mats.append(ExactMatrix(mat_rows))
        labels.append(label)

    for i in range(m):
        for j in range(m):
            rows = unit(i, j)
            rows[m + j][m + i] -= _ONE
            add(rows, f"a{i + 1}{j + 1}")
    for i in range(m):
        for j in range(i, m):
            rows = unit(i, m + j)
            if i != j:
                for r, c in ((j, m + i),):
                    rows[r][c] += _ONE
            add(rows, f"b{i + 1}{j + 1}")
    for i in range(m):
        for j in range(i, m):
            rows = unit(m + i, j)
            if i != j:
                rows[m + j][i] += _ONE
            add(rows, f"c{i + 1}{j + 1}")

    flat = [mat.flat() for mat in mats]
    solver = SpanSolver(flat, n * n)
    d = len(mats)
    table = [[[_ZERO] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            comm = mats[i] * mats[j] - mats[j] * mats[i]
            coords = solver.coefficients(comm.flat())
            if coords is None:
                raise RuntimeError("symplectic basis is not commutator closed")
            table[i][j] = list(coords)
            table[j][i] = [-x for x in coords]
    return LieAlgebra(labels, table, matrix_basis=mats)
