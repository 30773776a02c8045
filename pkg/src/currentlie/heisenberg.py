"""Truncated Heisenberg current algebras h_m (x) Q[t]/(t^(k+1)).

This family admits a completely explicit description of its derivation
algebra: in the basis (e-block, f-block, z-block, powers of t innermost)
every derivation is a block matrix built from lower triangular Toeplitz
blocks, a free bottom strip, and a corner tied to the diagonal.  The
template here reproduces that matrix shape, matches arbitrary matrices
against it, and certifies the sp (x) 1 Levi factor of the derivation
algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from currentlie.assoc import jacobson_radical, truncated_polynomial, wedderburn_complement
from currentlie.current import (
    CurrentAlgebra,
    DecompositionReport,
    certify_decomposition,
    current_algebra,
)
from currentlie.lie import heisenberg, sp
from currentlie.linalg import EndoSubspace, ExactMatrix, Q, Subspace, kron, rat

_ZERO = Q(0)
_ONE = Q(1)


def truncated_heisenberg(m: int, k: int) -> CurrentAlgebra:
    """h_m (x) Q[t]/(t^(k+1)), dimension (2m+1)(k+1)."""
    return current_algebra(heisenberg(m), truncated_polynomial(k))


def der_dimension_formula(m: int, k: int) -> int:
    """dim der(h_m (x) A_k) = m(2m+1)(k+1) + 2m(k+1)^2 + 2k + 1."""
    return m * (2 * m + 1) * (k + 1) + 2 * m * (k + 1) ** 2 + 2 * k + 1


def _toeplitz(width: int, params) -> ExactMatrix:
    # lower triangular Toeplitz: entry (r, c) = params[r - c]
    return ExactMatrix(
        [[params[r - c] if r >= c else _ZERO for c in range(width)] for r in range(width)]
    )


def _rbar_block(width: int, qparams) -> ExactMatrix:
    # qparams[r] for r in 1..width-1; entry (r, c) = c * q_(r-c+1), column 0 zero
    rows = []
    for r in range(width):
        row = []
        for c in range(width):
            if 1 <= c <= r:
                row.append(c * qparams[r - c + 1])
            else:
                row.append(_ZERO)
        rows.append(row)
    return ExactMatrix(rows)


@dataclass
class TemplateMatch:
    """Successful fit; params maps structured keys to rationals."""

    params: dict
    ok: bool = True


@dataclass
class TemplateMismatch:
    """First violated constraint of the template."""

    block: str
    relation: str
    ok: bool = False


class DerivationTemplate:
    """The block-matrix shape of der(h_m (x) A_k).

    Parameter keys:
      ("A1", i, j, r)   m x m grid of Toeplitz blocks coupling e to e
      ("A2", i, j, r)   symmetric grid coupling f to e (i <= j)
      ("A4", i, j, r)   symmetric grid coupling e to f (i <= j)
      ("p", r)          r in 0..k: scaling series (weight 1 on e/f, 2 on z)
      ("q", r)          r in 1..k: coefficient derivation series
      ("strip", r, c)   free bottom strip, r in 0..k, c over both top blocks
    """

    def __init__(self, m: int, k: int):
        if m < 1 or k < 0:
            raise ValueError("need m >= 1 and k >= 0")
        self.m = m
        self.k = k
        self.width = k + 1
        self.block_dim = m * self.width
        self.dim = (2 * m + 1) * self.width

    def parameter_keys(self) -> list:
        m, kk = self.m, self.k
        keys = []
        for i in range(m):
            for j in range(m):
                for r in range(kk + 1):
                    keys.append(("A1", i, j, r))
        for name in ("A2", "A4"):
            for i in range(m):
                for j in range(i, m):
                    for r in range(kk + 1):
                        keys.append((name, i, j, r))
        for r in range(kk + 1):
            keys.append(("p", r))
        for r in range(1, kk + 1):
            keys.append(("q", r))
        for r in range(kk + 1):
            for c in range(2 * m * (kk + 1)):
                keys.append(("strip", r, c))
        return keys

    def parameter_count(self) -> int:
        return len(self.parameter_keys())

    def matrix(self, assignment) -> ExactMatrix:
        """Build the template matrix for a {key: value} assignment."""
        m, kk, w = self.m, self.k, self.width
        n = self.dim
        bd = self.block_dim

        def get(key):
            return rat(assignment.get(key, 0))

        rows = [[_ZERO] * n for _ in range(n)]

        def put(mat, r0, c0, sign=1):
            for r in range(mat.nrows):
                mrow = mat.rows[r]
                for c in range(mat.ncols):
                    if mrow[c]:
                        rows[r0 + r][c0 + c] += sign * mrow[c]

        p = [get(("p", r)) for r in range(kk + 1)]
        q = [_ZERO] + [get(("q", r)) for r in range(1, kk + 1)]
        rp = _toeplitz(w, p)
        rq = _rbar_block(w, q)
        diag = rp + rq

        for i in range(m):
            for j in range(m):
                a1 = _toeplitz(w, [get(("A1", i, j, r)) for r in range(kk + 1)])
                put(a1, i * w, j * w)
                # f-f grid is minus the transposed e-e grid
                put(_toeplitz(w, [get(("A1", j, i, r)) for r in range(kk + 1)]),
                    bd + i * w, bd + j * w, sign=-1)
            put(diag, i * w, i * w)
            put(diag, bd + i * w, bd + i * w)
        for i in range(m):
            for j in range(i, m):
                a2 = _toeplitz(w, [get(("A2", i, j, r)) for r in range(kk + 1)])
                put(a2, i * w, bd + j * w)
                if i != j:
                    put(a2, j * w, bd + i * w)
                a4 = _toeplitz(w, [get(("A4", i, j, r)) for r in range(kk + 1)])
                put(a4, bd + i * w, j * w)
                if i != j:
                    put(a4, bd + j * w, i * w)
        corner = 2 * rp + rq
        put(corner, 2 * bd, 2 * bd)
        for r in range(kk + 1):
            for c in range(2 * bd):
                v = get(("strip", r, c))
                if v:
                    rows[2 * bd + r][c] += v
        return ExactMatrix(rows)

    def basis(self) -> list:
        """(key, matrix) pairs, one independent generator per parameter."""
        return [(key, self.matrix({key: 1})) for key in self.parameter_keys()]

    def span(self) -> EndoSubspace:
        return EndoSubspace.from_matrices([mat for _, mat in self.basis()], self.dim)

    def match(self, mat: ExactMatrix):
        """Extract parameters from a matrix, or name the first bad block.

        Returns TemplateMatch on success and TemplateMismatch otherwise;
        a successful match satisfies self.matrix(result.params) == mat.
        """
        m, kk, w = self.m, self.k, self.width
        n = self.dim
        bd = self.block_dim
        if mat.shape != (n, n):
            return TemplateMismatch("shape", f"expected {n} x {n}")

        # (a) the z column must vanish above the strip
        for r in range(2 * bd):
            for c in range(2 * bd, n):
                if mat[r, c]:
                    return TemplateMismatch(
                        "z-column", "entries above the bottom strip must vanish"
                    )

        params: dict = {}

        # (b) corner = 2 R(p) + Rbar(q); Rbar has zero first column
        corner = mat.block(2 * bd, n, 2 * bd, n)
        p = [corner[r, 0] / 2 for r in range(w)]
        rp = _toeplitz(w, p)
        residue = corner - 2 * rp
        q = [_ZERO] + [residue[r, 1] for r in range(1, w)]
        if residue != _rbar_block(w, q):
            return TemplateMismatch("z-corner", "corner is not 2 R(p) + Rbar(q)")
        for r in range(w):
            params[("p", r)] = p[r]
        for r in range(1, w):
            params[("q", r)] = q[r]
        diag = rp + _rbar_block(w, q)

        def toeplitz_params(block, name):
            first = [block[r, 0] for r in range(w)]
            if block != _toeplitz(w, first):
                return None
            return first

        # (c) e-e grid: A1 blocks after removing the diagonal contribution
        for i in range(m):
            for j in range(m):
                block = mat.block(i * w, (i + 1) * w, j * w, (j + 1) * w)
                if i == j:
                    block = block - diag
                first = toeplitz_params(block, "A1")
                if first is None:
                    return TemplateMismatch(
                        f"e-e block ({i},{j})", "not lower triangular Toeplitz"
                    )
                for r in range(w):
                    params[("A1", i, j, r)] = first[r]

        # (d) f-f grid must mirror the e-e grid
        for i in range(m):
            for j in range(m):
                block = mat.block(bd + i * w, bd + (i + 1) * w, bd + j * w, bd + (j + 1) * w)
                expected = -_toeplitz(w, [params[("A1", j, i, r)] for r in range(w)])
                if i == j:
                    expected = expected + diag
                if block != expected:
                    return TemplateMismatch(
                        f"f-f block ({i},{j})", "does not equal diag - transposed e-e grid"
                    )

        # (e) the two off-diagonal grids: Toeplitz and grid-symmetric
        for name, r0, c0 in (("A2", 0, bd), ("A4", bd, 0)):
            for i in range(m):
                for j in range(m):
                    block = mat.block(
                        r0 + i * w, r0 + (i + 1) * w, c0 + j * w, c0 + (j + 1) * w
                    )
                    first = toeplitz_params(block, name)
                    if first is None:
                        return TemplateMismatch(
                            f"{'e-f' if name == 'A2' else 'f-e'} block ({i},{j})",
                            "not lower triangular Toeplitz",
                        )
                    if j < i:
                        prior = [params[(name, j, i, r)] for r in range(w)]
                        if first != prior:
                            return TemplateMismatch(
                                f"{'e-f' if name == 'A2' else 'f-e'} grid",
                                f"block ({i},{j}) is not symmetric to ({j},{i})",
                            )
                    else:
                        for r in range(w):
                            params[(name, i, j, r)] = first[r]

        # (f) bottom strip is free
        for r in range(w):
            for c in range(2 * bd):
                params[("strip", r, c)] = mat[2 * bd + r, c]
        return TemplateMatch(params=params)


def match_template(m: int, k: int, mat: ExactMatrix):
    """Fit a matrix against the derivation template of h_m (x) A_k."""
    return DerivationTemplate(m, k).match(mat)


def _extend_to_heisenberg(d: ExactMatrix, m: int) -> ExactMatrix:
    # pad a 2m x 2m block to act on h_m with zero z row and column
    n = 2 * m + 1
    rows = [[_ZERO] * n for _ in range(n)]
    for r in range(2 * m):
        for c in range(2 * m):
            rows[r][c] = d[r, c]
    return ExactMatrix(rows)


def heisenberg_der_blocks(m: int) -> tuple[EndoSubspace, EndoSubspace]:
    """Levi/radical split of der(h_m): symplectic block and aI + strip."""
    n = 2 * m + 1
    s_mats = [_extend_to_heisenberg(d, m) for d in sp(m).matrix_basis]
    scaling = [[_ZERO] * n for _ in range(n)]
    for i in range(2 * m):
        scaling[i][i] = _ONE
    scaling[2 * m][2 * m] = Q(2)
    r_mats = [ExactMatrix(scaling)]
    for c in range(2 * m):
        strip = [[_ZERO] * n for _ in range(n)]
        strip[2 * m][c] = _ONE
        r_mats.append(ExactMatrix(strip))
    return (
        EndoSubspace.from_matrices(s_mats, n),
        EndoSubspace.from_matrices(r_mats, n),
    )


def sp_block_embedding(m: int, k: int) -> list[ExactMatrix]:
    """Images of the sp_2m basis inside End(h_m (x) A_k).

    Each basis matrix D goes to (D padded with a zero z row/column)
    tensored with the identity of A_k; the list is indexed like the
    basis of sp(m).
    """
    ident = ExactMatrix.identity(k + 1)
    return [
        kron(_extend_to_heisenberg(d, m), ident) for d in sp(m).matrix_basis
    ]


def levi_report(m: int, k: int, ca: CurrentAlgebra | None = None) -> DecompositionReport:
    """Run the full decomposition certificate for h_m (x) A_k."""
    if ca is None:
        ca = truncated_heisenberg(m, k)
    s, r = heisenberg_der_blocks(m)
    a = ca.a
    big_j = jacobson_radical(a)
    big_s = wedderburn_complement(a)
    return certify_decomposition(ca, s, r, big_s, big_j)


def levi_factor(m: int, k: int, ca: CurrentAlgebra | None = None) -> EndoSubspace:
    """The certified Levi factor sp (x) 1 of der(h_m (x) A_k)."""
    report = levi_report(m, k, ca=ca)
    if not report.all_flags_true:
        bad = [name for name, val in report.flags.items() if not val]
        raise RuntimeError(f"Levi certification failed: {', '.join(bad)}")
    return report.levi_candidate
