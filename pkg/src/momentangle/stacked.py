"""Recognition of stacked spheres (boundaries of stacked polytopes).

A stacked (k-1)-sphere comes from ∂Δᵏ by repeated stellar subdivision of
facets.  Recognition runs the moves backwards: a vertex whose link is the
boundary of a simplex and whose star can be replaced by that simplex is
peeled off, until ∂Δᵏ remains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .complex import Simplex, SimplicialComplex, as_simplex, simplex_boundary
from .homology import is_homology_sphere


@dataclass(frozen=True)
class StackedCertificate:
    k: int
    ell: int
    peel: tuple[int, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {"k": self.k, "ell": self.ell, "peel": list(self.peel)}


def stack_move(K: SimplicialComplex, facet, new_vertex: int) -> SimplicialComplex:
    """Stellar subdivision of *facet* by the fresh vertex *new_vertex*."""
    facet = as_simplex(facet)
    if facet not in K.facets:
        raise ValueError(f"{list(facet)} is not a facet")
    if new_vertex in K.vertices:
        raise ValueError(f"vertex {new_vertex} already present")
    cone = [tuple(sorted(ridge + (new_vertex,))) for ridge in combinations(facet, len(facet) - 1)]
    return SimplicialComplex([f for f in K.facets if f != facet] + cone)


def _peelable(facets: frozenset[Simplex], v: int, d: int) -> Simplex | None:
    star = [f for f in facets if v in f]
    if len(star) != d + 1:
        return None
    rim = tuple(sorted({u for f in star for u in f if u != v}))
    if len(rim) != d + 1 or rim in facets:
        return None
    return rim


def _peel(facets: frozenset[Simplex], v: int, rim: Simplex) -> frozenset[Simplex]:
    return frozenset(f for f in facets if v not in f) | {rim}


def _peel_sequence(K: SimplicialComplex, d: int, node_budget: int) -> list[tuple[int, Simplex]] | None:
    target = d + 2
    dead: set[frozenset[Simplex]] = set()
    nodes = 0

    def search(facets: frozenset[Simplex]) -> list[tuple[int, Simplex]] | None:
        nonlocal nodes
        verts = sorted({v for f in facets for v in f})
        if len(verts) == target:
            return [] if len(facets) == target else None
        if facets in dead:
            return None
        nodes += 1
        if nodes > node_budget:
            raise RuntimeError("stacked recognition exceeded its search budget")
        for v in verts:
            rim = _peelable(facets, v, d)
            if rim is None:
                continue
            rest = search(_peel(facets, v, rim))
            if rest is not None:
                return [(v, rim)] + rest
        dead.add(facets)
        return None

    return search(frozenset(K.facets))


def recognize_stacked(K: SimplicialComplex, node_budget: int = 100_000) -> StackedCertificate | None:
    """Certificate (k, ℓ, peel order) if *K* is a stacked sphere, else ``None``.

    Raises ``ValueError`` when *K* is not a pseudomanifold homology sphere of
    dimension at least 1, since then the question is not meaningful.
    """
    d = K.dim
    if d < 1 or not K.is_pseudomanifold() or not is_homology_sphere(K, d):
        raise ValueError("input must be a pseudomanifold homology d-sphere with d >= 1")
    n = len(K.vertices)
    if d == 1:
        # every polygon is stacked: each vertex of an n-gon (n > 3) is peelable
        return StackedCertificate(2, n - 3, tuple(K.vertices[: n - 3]))
    steps = _peel_sequence(K, d, node_budget)
    if steps is None:
        return None
    return StackedCertificate(d + 1, len(steps), tuple(v for v, _ in steps))


def replay_certificate(K: SimplicialComplex, cert: StackedCertificate) -> bool:
    """Peel in certificate order, then rebuild *K* from ∂Δᵏ by stacking in reverse."""
    d = cert.k - 1
    if len(K.vertices) != cert.k + 1 + cert.ell or len(cert.peel) != cert.ell or K.dim != d:
        return False
    facets = frozenset(K.facets)
    undo = []
    for v in cert.peel:
        rim = _peelable(facets, v, d)
        if rim is None:
            return False
        facets = _peel(facets, v, rim)
        undo.append((v, rim))
    base_verts = sorted({v for f in facets for v in f})
    if len(base_verts) != cert.k + 1 or len(facets) != cert.k + 1:
        return False
    rebuilt = simplex_boundary(d + 1, base_verts)
    for v, rim in reversed(undo):
        rebuilt = stack_move(rebuilt, rim, v)
    return rebuilt == K


def random_stacked_sphere(k: int, ell: int, rng: random.Random) -> SimplicialComplex:
    """∂Δᵏ on 1..k+1 followed by *ell* stellar subdivisions of random facets."""
    K = simplex_boundary(k, range(1, k + 2))
    for i in range(ell):
        K = stack_move(K, rng.choice(K.facets), k + 2 + i)
    return K
