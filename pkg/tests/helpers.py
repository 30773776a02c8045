"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from currentlie.linalg import ExactMatrix


def rand_frac(rng: random.Random, num: int = 9, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_matrix(rng: random.Random, nrows: int, ncols: int) -> ExactMatrix:
    return ExactMatrix(
        [[rand_frac(rng) for _ in range(ncols)] for _ in range(nrows)]
    )


def rand_vector(rng: random.Random, n: int) -> list[Fraction]:
    return [rand_frac(rng) for _ in range(n)]


def ideal_power_chain_nilpotent(alg, space) -> bool:
    """True iff the subspace is an ideal whose power chain reaches 0.

    Brute-force oracle, independent of any trace criterion: multiplies
    spanning sets directly and watches the chain I, I*I, (I*I)*I, ...
    """
    from currentlie.linalg import Subspace, subspace_sum

    n = alg.dim
    basis_vectors = [
        tuple(1 if t == i else 0 for t in range(n)) for i in range(n)
    ]
    for row in space.basis.rows:
        for b in basis_vectors:
            if not space.contains(alg.multiply(row, b)):
                return False
    current = space
    while current.dim > 0:
        products = [
            alg.multiply(u, v)
            for u in current.basis.rows
            for v in space.basis.rows
        ]
        nxt = Subspace.from_vectors(products, n)
        if nxt.dim == current.dim:
            return False
        current = nxt
    return True


def ideal_generated_by(alg, vectors):
    """Smallest ideal containing the vectors, by closing under products."""
    from currentlie.linalg import Subspace

    n = alg.dim
    basis_vectors = [
        tuple(1 if t == i else 0 for t in range(n)) for i in range(n)
    ]
    span = Subspace.from_vectors(vectors, n)
    while True:
        extra = [
            alg.multiply(u, b) for u in span.basis.rows for b in basis_vectors
        ]
        grown = Subspace.from_vectors(list(span.basis.rows) + extra, n)
        if grown.dim == span.dim:
            return span
        span = grown


def assert_is_largest_nilpotent_ideal(alg, j) -> None:
    """Certify j = largest nilpotent ideal of the commutative algebra alg.

    Every basis element must be nilpotent, the power chain must die, and
    adjoining any complement coordinate must break nilpotency.
    """
    for row in j.basis.rows:
        assert alg.is_nilpotent_element(row)
    assert ideal_power_chain_nilpotent(alg, j)
    pivot_set = set(j.pivots)
    for col in range(alg.dim):
        if col in pivot_set:
            continue
        w = tuple(1 if t == col else 0 for t in range(alg.dim))
        bigger = ideal_generated_by(alg, list(j.basis.rows) + [w])
        assert not ideal_power_chain_nilpotent(alg, bigger)


def reference_rref(m: ExactMatrix) -> ExactMatrix:
    """Textbook two-pass Gauss elimination with a different pivot choice.

    Picks the *last* available nonzero row for each pivot and back
    substitutes afterwards, so it exercises a different arithmetic path
    than the library's single-pass Gauss-Jordan.  RREF is unique, so both
    must agree exactly.
    """
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    r = 0
    pivots = []
    for c in range(ncols):
        piv = None
        for i in range(nrows - 1, r - 1, -1):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    # back substitution
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        for i in range(idx):
            f = rows[i][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[idx])]
    return ExactMatrix(rows) if rows else m
