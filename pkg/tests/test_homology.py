import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from momentangle.complex import SimplicialComplex, full_subcomplex, join, link, simplex, simplex_boundary, void_complex
from momentangle.homology import (
    HomologyProfile,
    IntegerMatrix,
    chain_boundary_matrices,
    determinant_divisors,
    homology,
    invariant_factors,
    is_homology_iso_inclusion,
    is_homology_point,
    is_homology_sphere,
    reduced_homology,
    relative_homology,
    smith_normal_decomposition,
    smith_normal_form,
)

from strategies import complexes, int_matrices

Z = (1, ())


def groups(prof):
    return {n: prof.groups[n] for n in prof.nonzero_degrees()}


def sympy_rank(M):
    return sympy.Matrix(M).rank() if M and M[0] else 0


def quotient_factors(dd):
    """Invariant factors from determinant divisors: d_k = D_k / D_{k-1}."""
    out, prev = [], 1
    for D in dd:
        out.append(D // prev)
        prev = D
    return out


# --- Smith normal form --------------------------------------------------------


def test_snf_small():
    A = [[2, 4], [6, 8]]
    assert quotient_factors(determinant_divisors(A)) == [2, 4]
    assert smith_normal_form(A) == ([2, 4], 2)


def test_snf_identity_and_zero():
    assert smith_normal_form([[int(i == j) for j in range(4)] for i in range(4)]) == ([1] * 4, 4)
    assert smith_normal_form([[0, 0], [0, 0]]) == ([], 0)
    assert smith_normal_form(IntegerMatrix.zeros(0, 3)) == ([], 0)


def test_snf_torsion_example():
    # ℤ² / <(2, 0), (0, 3)> has invariant factors (1, 6)
    assert smith_normal_form([[2, 0], [0, 3]]) == ([1, 6], 2)


@given(int_matrices())
def test_snf_matches_determinant_divisors(A):
    factors, rank = smith_normal_form(A)
    assert factors == quotient_factors(determinant_divisors(A))
    assert rank == sympy_rank(A)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@given(int_matrices(max_rows=5, max_cols=5, bound=20))
def test_snf_decomposition_is_unimodular(A):
    D, U, V = smith_normal_decomposition(A)
    M = IntegerMatrix.from_rows(A)
    assert U @ M @ V == D
    assert abs(sympy.Matrix(U.tolist()).det()) == 1
    assert abs(sympy.Matrix(V.tolist()).det()) == 1
    diag = [D.entries[i][i] for i in range(min(D.rows, D.cols))]
    off = [D.entries[i][j] for i in range(D.rows) for j in range(D.cols) if i != j]
    assert not any(off)
    nz = [d for d in diag if d]
    assert nz == diag[: len(nz)]
    assert nz == invariant_factors(A)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_snf_product_is_det(A):
    det = int(sympy.Matrix(A).det())
    factors, rank = smith_normal_form(A)
    if det:
        assert rank == len(A)
        prod = 1
        for f in factors:
            prod *= f
        assert prod == abs(det)
    else:
        assert rank < len(A)


# --- chain complexes ------------------------------------------------------------


def test_boundary_matrices_small():
    (d0,) = chain_boundary_matrices(simplex([1]))
    assert d0.tolist() == [[1]]
    (d0,) = chain_boundary_matrices(SimplicialComplex([[1], [2]]))
    assert d0.tolist() == [[1, 1]]
    d0, d1 = chain_boundary_matrices(simplex_boundary(2, [1, 2, 3]))
    # rows 1,2,3; columns 12,13,23
    assert d1.tolist() == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    assert (d0 @ d1).is_zero()


@given(complexes(max_vertices=7))
def test_boundary_squared_zero(K):
    mats = chain_boundary_matrices(K)
    for a, b in zip(mats, mats[1:]):
        assert (a @ b).is_zero()


# --- homology ------------------------------------------------------------------


def test_reduced_homology_examples(K):
    assert groups(reduced_homology(full_subcomplex(K, [5, 6]))) == {0: Z}
    assert groups(reduced_homology(simplex_boundary(2, [1, 2, 3]))) == {1: Z}
    assert groups(reduced_homology(void_complex())) == {-1: Z}
    assert groups(reduced_homology(simplex([1, 2, 3, 4]))) == {}


def rational_betti(K):
    ranks = [sympy_rank(m.tolist()) for m in chain_boundary_matrices(K)] + [0]
    counts = [1] + list(K.f_vector)
    out = {}
    for n in range(-1, K.dim + 1):
        b = counts[n + 1] - (ranks[n] if n >= 0 else 0) - ranks[n + 1]
        if b:
            out[n] = b
    return out


def test_homology_of_2358_by_rational_rank(K):
    K_I = full_subcomplex(K, [2, 3, 5, 8])
    assert rational_betti(K_I) == {1: 1}
    assert groups(reduced_homology(K_I)) == {1: Z}


def test_unreduced_mode():
    two = SimplicialComplex([[1], [2]])
    assert groups(homology(two, reduced=False)) == {0: (2, ())}
    assert groups(homology(simplex([1]), reduced=False)) == {0: Z}


def test_torsion_projective_plane():
    # 6-vertex RP²
    rp2 = SimplicialComplex(
        [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6], [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]
    )
    prof = reduced_homology(rp2)
    assert groups(prof) == {1: (0, (2,))}
    assert prof.has_torsion


def test_relative_homology_examples(K, link2):
    tri = simplex([1, 2, 3])
    assert relative_homology(tri, simplex([1])).is_zero()
    assert groups(relative_homology(tri, simplex_boundary(2, [1, 2, 3]))) == {2: Z}
    I = [4, 6, 7, 8]
    assert relative_homology(full_subcomplex(K, I), full_subcomplex(link2, I)).is_zero()
    with pytest.raises(ValueError):
        relative_homology(simplex([1, 2]), simplex([1, 3]))


def test_inclusion_predicate(K, link2):
    tri = simplex([1, 2, 3])
    assert is_homology_iso_inclusion(tri, simplex([1]))
    assert not is_homology_iso_inclusion(tri, simplex_boundary(2, [1, 2, 3]))
    # 3568 is a factor label with 1 ∉ I, yet K_3568 is acyclic while the link
    # restriction is a triangle plus an isolated vertex
    I = [3, 5, 6, 8]
    assert groups(reduced_homology(full_subcomplex(link2, I))) == {0: Z}
    assert reduced_homology(full_subcomplex(K, I)).is_zero()
    assert not is_homology_iso_inclusion(full_subcomplex(K, I), full_subcomplex(link2, I))


def test_point_and_sphere_predicates(K):
    assert is_homology_point(simplex([1, 2, 3, 4]))
    assert is_homology_sphere(SimplicialComplex([[1, 3], [1, 4], [2, 3], [2, 4]]), 1)
    assert is_homology_sphere(K, 3)
    assert not is_homology_sphere(K, 2)


def test_profile_json_round_trip(K):
    prof = reduced_homology(K)
    data = prof.to_json()
    assert data["3"] == {"betti": 1, "torsion": []}
    assert HomologyProfile.from_json(data) == prof


# --- properties --------------------------------------------------------------------


@given(complexes(max_vertices=6))
def test_cone_is_acyclic(K):
    apex = max(K.vertices) + 1
    assert reduced_homology(join(K, simplex([apex]))).is_zero()


@given(complexes(max_vertices=7))
def test_euler_consistency(K):
    prof = reduced_homology(K)
    chi_chains = -1 + K.euler_characteristic()
    assert chi_chains == sum((-1) ** n * prof.betti(n) for n in prof.groups)


def test_join_of_zero_spheres():
    sq = join(SimplicialComplex([[1], [2]]), SimplicialComplex([[3], [4]]))
    assert groups(reduced_homology(sq)) == {1: Z}


@given(complexes(max_vertices=6), st.data())
def test_long_exact_sequence_euler(K, data):
    I = data.draw(st.sets(st.sampled_from(K.vertices), min_size=1))
    L = full_subcomplex(K, I)
    chi = lambda p: sum((-1) ** n * p.betti(n) for n in p.groups)
    assert chi(reduced_homology(K)) == chi(reduced_homology(L)) + chi(relative_homology(K, L))


@given(complexes(max_vertices=6))
def test_homology_agrees_with_rational_ranks(K):
    prof = reduced_homology(K)
    assert {n: prof.betti(n) for n in prof.groups if prof.betti(n)} == rational_betti(K)
