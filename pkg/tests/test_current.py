from __future__ import annotations

import pytest

from currentlie.assoc import (
    AssocAlgebra,
    jacobson_radical,
    truncated_polynomial,
    wedderburn_complement,
)
from currentlie.current import (
    CurrentAlgebra,
    PreconditionError,
    certify_decomposition,
    current_algebra,
    embed_h,
    embed_k,
    embed_w,
    radical_subspace,
    summand_h,
    summand_k,
    summand_w,
    verify_bracket_table,
    verify_levi_decomposition,
    zusmanovich_span,
)
from currentlie.heisenberg import heisenberg_der_blocks
from currentlie.lie import LieAlgebra, heisenberg, sp
from currentlie.linalg import (
    EndoSubspace,
    ExactMatrix,
    Subspace,
    subspace_intersection,
    subspace_sum,
)


@pytest.fixture(scope="module")
def h1a1():
    return current_algebra(heisenberg(1), truncated_polynomial(1))


@pytest.fixture(scope="module")
def sp1a1():
    return current_algebra(sp(1), truncated_polynomial(1))


def test_current_algebra_basics(h1a1):
    ca = h1a1
    assert ca.dim == 6
    assert ca.product.labels[0] == "e1*1"
    assert ca.index(1, 1) == 3
    assert ca.unindex(5) == (2, 1)
    e_t = ca.product.basis_vector(ca.index(0, 1))
    f_1 = ca.product.basis_vector(ca.index(1, 0))
    f_t = ca.product.basis_vector(ca.index(1, 1))
    z_t = ca.product.basis_vector(ca.index(2, 1))
    assert ca.product.bracket(e_t, f_1) == z_t
    # t * t = 0 in A_1, so [e (x) t, f (x) t] dies
    assert ca.product.bracket(e_t, f_t) == (0,) * 6
    assert ca.product.check_lie_axioms()


def test_current_algebra_truncation_degree_two():
    ca = current_algebra(heisenberg(1), truncated_polynomial(2))
    e_t = ca.product.basis_vector(ca.index(0, 1))
    f_t = ca.product.basis_vector(ca.index(1, 1))
    z_t2 = ca.product.basis_vector(ca.index(2, 2))
    assert ca.product.bracket(e_t, f_t) == z_t2


def test_current_algebra_rejects_invalid_inputs():
    bad_lie = LieAlgebra.from_bracket_entries(
        ["x", "y", "z"], [(0, 1, 2, 1), (0, 2, 0, 1), (1, 2, 1, 1)]
    )
    with pytest.raises(ValueError, match="Lie axioms"):
        current_algebra(bad_lie, truncated_polynomial(1))
    bad_assoc = AssocAlgebra(
        ["1", "x"], [[[1, 0], [0, 1]], [[1, 1], [0, 0]]], [1, 0]
    )
    with pytest.raises(ValueError, match="associative"):
        current_algebra(heisenberg(1), bad_assoc)


def test_embeddings_are_derivations(h1a1):
    ca = h1a1
    der = ca.derivations()
    for d in ca.der_g().basis_matrices():
        for j in range(2):
            a_elem = [0, 0]
            a_elem[j] = 1
            assert der.contains(embed_h(ca, d, a_elem))
    for t in ca.centroid_g().basis_matrices():
        for rho in ca.der_a().basis_matrices():
            assert der.contains(embed_w(ca, t, rho))
    f = ExactMatrix([[1, 2], [3, 4]])
    for t in ca.hom0_g().basis_matrices():
        assert der.contains(embed_k(ca, t, f))


def test_embed_rejects_wrong_components(h1a1):
    ca = h1a1
    # sends z to e, violating D(z) = D[e,f] = [De,f] + [e,Df] = 0
    not_der = ExactMatrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(ValueError, match="derivation of g"):
        embed_h(ca, not_der, [1, 0])
    with pytest.raises(ValueError, match="centroid"):
        embed_w(ca, not_der, ca.der_a().basis_matrices()[0])
    ident = ExactMatrix.identity(3)
    with pytest.raises(ValueError, match="derivation of A"):
        embed_w(ca, ident, ExactMatrix.identity(2))
    with pytest.raises(ValueError, match="z"):
        embed_k(ca, ident, ExactMatrix.identity(2))
    t0 = ca.hom0_g().basis_matrices()[0]
    with pytest.raises(ValueError, match="shape"):
        embed_k(ca, t0, ExactMatrix.identity(3))


def test_embed_h_is_kron(h1a1):
    ca = h1a1
    d = ca.der_g().basis_matrices()[0]
    la = ca.a.left_mult_matrix([1, 2])
    m = embed_h(ca, d, [1, 2])
    for i in range(3):
        for j in range(3):
            for p in range(2):
                for q in range(2):
                    assert m[2 * i + p, 2 * j + q] == d[i, j] * la[p, q]


def test_summand_dimensions_and_overlaps(h1a1):
    ca = h1a1
    h, w, k = summand_h(ca), summand_w(ca), summand_k(ca)
    assert h.dim == 6 * 2  # der(h_1) x basis of A
    assert w.dim == 3 * 1  # centroid x der(A_1)
    assert k.dim == 2 * 4  # hom0 x End(A_1)
    assert subspace_intersection(h.space, w.space).dim == 0
    assert subspace_intersection(h.space, k.space).dim == 4  # strip (x) L(A)
    assert subspace_intersection(w.space, k.space).dim == 2  # strip (x) der(A)
    total = subspace_sum(subspace_sum(h.space, w.space), k.space)
    assert total.dim == 17


def test_zusmanovich_span_flags(h1a1, sp1a1):
    for ca, expected_dim in ((h1a1, 17), (sp1a1, 7)):
        report = zusmanovich_span(ca)
        assert report.der_dim == expected_dim
        assert report.flags["span_equals_der"]
        assert report.flags["k_is_ideal"]
    # for semisimple g the k family is empty
    assert summand_k(sp1a1).dim == 0


def test_bracket_table_exhaustive_on_small_product(h1a1):
    report = verify_bracket_table(h1a1)
    assert report.mode == "exhaustive"
    assert report.checked["h*h"] == 144
    assert report.checked["k*k"] == 64
    assert report.dot_action_reading_matches
    assert not report.plain_reading_matches


def test_bracket_table_sampled_and_deterministic():
    ca = current_algebra(heisenberg(1), truncated_polynomial(2))
    r1 = verify_bracket_table(ca, sample_count=12, seed=5)
    r2 = verify_bracket_table(ca, sample_count=12, seed=5)
    assert r1.mode == "sampled"
    assert r1 == r2
    r3 = verify_bracket_table(ca, sample_count=12, seed=6)
    assert r3.checked == r1.checked  # same shape of work, different draws
    assert r1.dot_action_reading_matches


def test_bracket_table_on_semisimple_g(sp1a1):
    report = verify_bracket_table(sp1a1)
    assert report.mode == "exhaustive"
    assert report.checked["h*k"] == 0  # no k family at all
    assert report.checked["h*h"] == 36


def test_radical_subspace_happy_path(h1a1):
    ca = h1a1
    s, r = heisenberg_der_blocks(1)
    big_j = jacobson_radical(ca.a)
    big_s = wedderburn_complement(ca.a)
    rad = radical_subspace(ca, s, r, big_s, big_j)
    # 17 = radical 14 + levi 3
    assert rad.dim == 14
    for m in rad.basis_matrices():
        assert ca.derivations().contains(m)


def test_radical_subspace_named_preconditions(h1a1):
    ca = h1a1
    s, r = heisenberg_der_blocks(1)
    big_j = jacobson_radical(ca.a)
    big_s = wedderburn_complement(ca.a)
    with pytest.raises(PreconditionError, match="does not decompose der"):
        radical_subspace(ca, s, s, big_s, big_j)
    with pytest.raises(PreconditionError, match="solvable radical of der"):
        radical_subspace(ca, r, s, big_s, big_j)
    with pytest.raises(PreconditionError, match="does not decompose A"):
        radical_subspace(ca, s, r, big_j, big_j)
    # S (+) J fine but J is not the radical: swap the factors
    with pytest.raises(PreconditionError, match="Jacobson radical"):
        radical_subspace(ca, s, r, big_j, big_s)


def test_radical_subspace_rejects_central_leak():
    # 1-dimensional abelian g: z(g) = g but [g,g] = 0
    g = LieAlgebra(["x"], [[[0]]])
    ca = current_algebra(g, truncated_polynomial(1))
    der_g = ca.der_g()
    assert der_g.dim == 1
    s = EndoSubspace(1, Subspace.zero_space(1))
    with pytest.raises(PreconditionError, match="not contained in"):
        radical_subspace(ca, s, der_g, wedderburn_complement(ca.a), jacobson_radical(ca.a))


def test_radical_subspace_rejects_wild_coefficient_derivations():
    # A = Q + (x, y) with all products of x, y equal to zero has
    # der(A) isomorphic to gl_2, which is not solvable
    zero2 = [0, 0, 0]
    a = AssocAlgebra(
        ["1", "x", "y"],
        [
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 0], zero2, zero2],
            [[0, 0, 1], zero2, zero2],
        ],
        [1, 0, 0],
    )
    assert a.check_axioms()
    ca = current_algebra(heisenberg(1), a)
    assert ca.der_a().dim == 4
    s, r = heisenberg_der_blocks(1)
    with pytest.raises(PreconditionError, match=r"der\(A\) is not solvable"):
        radical_subspace(ca, s, r, wedderburn_complement(a), jacobson_radical(a))


def test_verify_levi_decomposition_flags(h1a1):
    ca = h1a1
    s, r = heisenberg_der_blocks(1)
    big_j = jacobson_radical(ca.a)
    big_s = wedderburn_complement(ca.a)
    report = certify_decomposition(ca, s, r, big_s, big_j)
    assert report.all_flags_true
    assert set(report.flags) == {
        "span_equals_der",
        "k_is_ideal",
        "radical_is_ideal",
        "radical_solvable",
        "levi_semisimple",
        "direct_complement",
    }
    assert report.radical_candidate.dim + report.levi_candidate.dim == 17

    # swapping the candidates must break solvability of the "radical"
    swapped = verify_levi_decomposition(
        ca, report.levi_candidate, report.radical_candidate
    )
    assert not swapped.flags["radical_solvable"]
    assert not swapped.flags["levi_semisimple"]
    assert swapped.flags["direct_complement"]


def test_verify_levi_rejects_outside_candidates(h1a1):
    ca = h1a1
    report = zusmanovich_span(ca)
    not_der = EndoSubspace.from_matrices([ExactMatrix.identity(6)], 6)
    with pytest.raises(ValueError, match="not inside der"):
        verify_levi_decomposition(ca, not_der, report.der_full)


def test_certify_semisimple_coefficient_case(sp1a1):
    ca = sp1a1
    s = ca.der_g()
    r = EndoSubspace(3, Subspace.zero_space(9))
    report = certify_decomposition(
        ca, s, r, wedderburn_complement(ca.a), jacobson_radical(ca.a)
    )
    assert report.all_flags_true
    assert report.levi_candidate.dim == 3
    assert report.radical_candidate.dim == 4
