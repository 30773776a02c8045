from __future__ import annotations

import random
from fractions import Fraction

import pytest

from currentlie.assoc import (
    AssocAlgebra,
    NonSplitError,
    derivations,
    direct_sum,
    jacobson_radical,
    rbar,
    regular_rep,
    truncated_polynomial,
    wedderburn_complement,
)
from currentlie.linalg import (
    EndoSubspace,
    ExactMatrix,
    Subspace,
    subspace_intersection,
    subspace_sum,
)
from helpers import assert_is_largest_nilpotent_ideal, rand_frac


def _basis(n, i):
    return tuple(1 if t == i else 0 for t in range(n))


def test_truncated_polynomial_products():
    a1 = truncated_polynomial(1)
    t = _basis(2, 1)
    assert a1.multiply(t, t) == (0, 0)
    a2 = truncated_polynomial(2)
    t, t2 = _basis(3, 1), _basis(3, 2)
    assert a2.multiply(t, t) == (0, 0, 1)
    assert a2.multiply(t, t2) == (0, 0, 0)
    assert a2.multiply(a2.unit, t2) == t2
    assert a2.labels == ("1", "t", "t^2")


def test_truncated_polynomial_axioms():
    for k in range(4):
        assert truncated_polynomial(k).check_axioms()


def test_direct_sum_structure():
    s = direct_sum(truncated_polynomial(1), truncated_polynomial(2))
    assert s.dim == 5
    assert s.check_axioms()
    # cross terms vanish
    assert s.multiply(_basis(5, 1), _basis(5, 3)) == (0,) * 5
    assert s.unit == (1, 0, 1, 0, 0)


def test_check_axioms_rejects_bad_tables():
    # non-commutative table
    bad = AssocAlgebra(
        ["1", "x"],
        [[[1, 0], [0, 1]], [[1, 1], [0, 0]]],
        [1, 0],
    )
    assert not bad.check_axioms()
    # broken unit
    bad2 = AssocAlgebra(
        ["1", "x"],
        [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
        [1, 0],
    )
    assert not bad2.check_axioms()


def test_left_mult_matrix_is_multiplicative():
    rng = random.Random(37)
    a = truncated_polynomial(3)
    for _ in range(25):
        x = [rand_frac(rng) for _ in range(4)]
        y = [rand_frac(rng) for _ in range(4)]
        lx, ly = a.left_mult_matrix(x), a.left_mult_matrix(y)
        assert a.left_mult_matrix(a.multiply(x, y)) == lx * ly
        assert lx.apply(y) == a.multiply(x, y)
    assert a.left_mult_matrix(a.unit) == ExactMatrix.identity(4)


def test_nilpotent_elements():
    a = truncated_polynomial(2)
    assert a.is_nilpotent_element(_basis(3, 1))
    assert a.is_nilpotent_element((0, 3, Fraction(1, 2)))
    assert not a.is_nilpotent_element((1, 1, 0))
    assert a.power(_basis(3, 1), 2) == (0, 0, 1)
    assert a.power(_basis(3, 1), 3) == (0, 0, 0)


def test_derivation_dimension_of_truncated_rings():
    # der(Q[t]/(t^(k+1))) has dimension k: a derivation is fixed by its
    # value on t, which must have zero constant term
    for k in range(0, 5):
        a = truncated_polynomial(k)
        der = derivations(a)
        assert der.dim == k
        for m in der.basis_matrices():
            assert m.apply(a.unit) == (0,) * (k + 1)


def test_derivations_satisfy_leibniz():
    a = direct_sum(truncated_polynomial(1), truncated_polynomial(2))
    der = derivations(a)
    assert der.dim == 3
    n = a.dim
    for m in der.basis_matrices():
        for i in range(n):
            for j in range(n):
                lhs = m.apply(a.multiply(_basis(n, i), _basis(n, j)))
                rhs = tuple(
                    x + y
                    for x, y in zip(
                        a.multiply(m.apply(_basis(n, i)), _basis(n, j)),
                        a.multiply(_basis(n, i), m.apply(_basis(n, j))),
                    )
                )
                assert lhs == rhs


def test_derivations_of_truncated_ring_are_spanned_by_rbar():
    for k in (1, 2, 3):
        a = truncated_polynomial(k)
        mats = [rbar(a, _basis(k + 1, i)) for i in range(1, k + 1)]
        assert EndoSubspace.from_matrices(mats, k + 1) == derivations(a)


def test_jacobson_radical_of_truncated_ring():
    for k in (0, 1, 2, 3):
        a = truncated_polynomial(k)
        j = jacobson_radical(a)
        expected = Subspace.from_vectors(
            [_basis(k + 1, i) for i in range(1, k + 1)], k + 1
        )
        assert j == expected
        assert_is_largest_nilpotent_ideal(a, j)


def test_jacobson_radical_of_direct_sum():
    a = direct_sum(truncated_polynomial(1), truncated_polynomial(2))
    j = jacobson_radical(a)
    assert j.dim == 3
    expected = Subspace.from_vectors(
        [_basis(5, 1), _basis(5, 3), _basis(5, 4)], 5
    )
    assert j == expected
    assert_is_largest_nilpotent_ideal(a, j)


def test_wedderburn_complement_of_truncated_ring():
    for k in (1, 2, 3):
        a = truncated_polynomial(k)
        s = wedderburn_complement(a)
        assert s == Subspace.from_vectors([a.unit], k + 1)


def test_wedderburn_complement_of_direct_sum():
    a = direct_sum(truncated_polynomial(1), truncated_polynomial(2))
    s = wedderburn_complement(a)
    j = jacobson_radical(a)
    assert s.dim == 2
    assert subspace_sum(s, j) == Subspace.full_space(5)
    assert subspace_intersection(s, j).dim == 0
    # the complement is spanned by the two block identities
    assert s == Subspace.from_vectors([(1, 0, 0, 0, 0), (0, 0, 1, 0, 0)], 5)
    # closed under multiplication
    for u in s.basis.rows:
        for v in s.basis.rows:
            assert s.contains(a.multiply(u, v))


def test_wedderburn_complement_three_blocks():
    a = direct_sum(
        direct_sum(truncated_polynomial(1), truncated_polynomial(0)),
        truncated_polynomial(2),
    )
    s = wedderburn_complement(a)
    j = jacobson_radical(a)
    assert s.dim == 3 and j.dim == 3
    assert subspace_sum(s, j).dim == a.dim
    for u in s.basis.rows:
        assert s.contains(a.multiply(u, u))


def test_wedderburn_complement_refuses_nonsplit_quotient():
    # Q[x]/(x^2+1) is a field bigger than Q
    gauss = AssocAlgebra(
        ["1", "x"],
        [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]],
        [1, 0],
    )
    assert gauss.check_axioms()
    assert jacobson_radical(gauss).dim == 0
    with pytest.raises(NonSplitError, match="non-split semisimple quotient"):
        wedderburn_complement(gauss)


def test_regular_rep_toeplitz():
    a1 = truncated_polynomial(1)
    assert regular_rep(a1, (1, 2)) == ExactMatrix([[1, 0], [2, 1]])
    rng = random.Random(41)
    a3 = truncated_polynomial(3)
    for _ in range(20):
        p = [rand_frac(rng) for _ in range(4)]
        q = [rand_frac(rng) for _ in range(4)]
        rp = regular_rep(a3, p)
        for i in range(4):
            for j in range(4):
                assert rp[i, j] == (p[i - j] if i >= j else 0)
        assert regular_rep(a3, a3.multiply(p, q)) == rp * regular_rep(a3, q)
    assert regular_rep(a3, a3.unit) == ExactMatrix.identity(4)


def test_rbar_fixed_matrices():
    a1 = truncated_polynomial(1)
    assert rbar(a1, (0, 1)) == ExactMatrix([[0, 0], [0, 1]])
    a2 = truncated_polynomial(2)
    assert rbar(a2, (0, 1, 0)) == ExactMatrix([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert rbar(a2, (0, 0, 1)) == ExactMatrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]])


def test_rbar_ignores_constant_term():
    a2 = truncated_polynomial(2)
    assert rbar(a2, (5, 1, 2)) == rbar(a2, (0, 1, 2))
    # column 0 is always zero: derivations kill 1
    m = rbar(a2, (0, "1/3", 7))
    assert m.column(0) == (0, 0, 0)


def test_rbar_rejects_non_monomial_algebras():
    s = direct_sum(truncated_polynomial(1), truncated_polynomial(1))
    with pytest.raises(ValueError, match="not a derivation"):
        rbar(s, (0, 1, 0, 0))
