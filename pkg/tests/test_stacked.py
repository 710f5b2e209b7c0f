import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from momentangle.complex import SimplicialComplex, join, relabel, simplex_boundary
from momentangle.hochster import za_poincare
from momentangle.spheres import SphereCase, connected_sum_poincare, sphere_poincare, stacked_connected_sum
from momentangle.stacked import (
    StackedCertificate,
    random_stacked_sphere,
    recognize_stacked,
    replay_certificate,
    stack_move,
)


def formula_prediction(k, ell):
    try:
        return connected_sum_poincare(stacked_connected_sum(k, ell))
    except SphereCase as sc:
        return sphere_poincare(sc.dimension)


def test_link2_is_stacked(link2):
    cert = recognize_stacked(link2)
    assert (cert.k, cert.ell) == (3, 3)
    assert len(link2.vertices) == cert.k + 1 + cert.ell
    assert replay_certificate(link2, cert)
    assert za_poincare(link2) == formula_prediction(3, 3)


def test_simplex_boundary_and_square():
    cert = recognize_stacked(simplex_boundary(3, [1, 2, 3, 4]))
    assert cert == StackedCertificate(3, 0, ())
    sq = SimplicialComplex([[1, 3], [1, 4], [2, 3], [2, 4]])
    cert = recognize_stacked(sq)
    assert (cert.k, cert.ell) == (2, 1)
    assert replay_certificate(sq, cert)
    assert cert.to_json() == {"k": 2, "ell": 1, "peel": [1]}


def test_stack_move():
    K = stack_move(simplex_boundary(2, [1, 2, 3]), (1, 2), 4)
    assert set(K.facets) == {(1, 4), (2, 4), (1, 3), (2, 3)}
    K = stack_move(simplex_boundary(3, [1, 2, 3, 4]), (1, 2, 3), 5)
    assert len(K.vertices) == 5 and len(K.facets) == 6
    with pytest.raises(ValueError):
        stack_move(K, (1, 2, 3), 6)
    with pytest.raises(ValueError):
        stack_move(K, (1, 2, 5), 4)


def test_non_stacked_sphere_rejected():
    # octahedron: a 2-sphere on 6 vertices with every vertex of degree 4
    octa = join(join(simplex_boundary(1, [1, 2]), simplex_boundary(1, [3, 4])), simplex_boundary(1, [5, 6]))
    assert recognize_stacked(octa) is None


def test_preconditions():
    with pytest.raises(ValueError):
        recognize_stacked(SimplicialComplex([[1, 2, 3]]))
    with pytest.raises(ValueError):
        recognize_stacked(SimplicialComplex([[1], [2]]))
    # a pseudomanifold that is not a homology sphere: two disjoint triangles
    with pytest.raises(ValueError):
        recognize_stacked(SimplicialComplex([[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]]))


@pytest.mark.parametrize("seed", range(24))
def test_round_trip(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 5)
    ell = rng.randint(0, 4)
    K = random_stacked_sphere(k, ell, rng)
    cert = recognize_stacked(K)
    assert (cert.k, cert.ell) == (k, ell)
    assert replay_certificate(K, cert)
    z = za_poincare(K)
    assert z == formula_prediction(k, ell)
    assert z.is_palindromic(2 * k + ell + 1)


@given(st.integers(2, 5), st.integers(0, 4), st.randoms(use_true_random=False))
def test_round_trip_relabelled(k, ell, rnd):
    K = random_stacked_sphere(k, ell, rnd)
    targets = rnd.sample(range(1, 40), len(K.vertices))
    L = relabel(K, dict(zip(K.vertices, targets)))
    cert = recognize_stacked(L)
    assert (cert.k, cert.ell) == (k, ell)
    assert replay_certificate(L, cert)
