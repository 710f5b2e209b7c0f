"""Full-subcomplex enumeration and the additive invariants of Z_K.

H̃^*(Z_K) splits over vertex subsets I as the reduced cohomology of the full
subcomplex K_I shifted up by |I| + 1.  The table of all H̃(K_I) therefore
determines the Betti numbers of Z_K, and (when every attaching map in the
fat wedge filtration is trivial) the sphere census of a wedge decomposition.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterable, Iterator

from .complex import Simplex, SimplicialComplex, full_subcomplex
from .homology import HomologyProfile, reduced_homology
from .polynomial import PoincarePolynomial

MAX_VERTICES = 24


class TorsionWarning(UserWarning):
    pass


class TorsionError(ValueError):
    pass


def _check_budget(K: SimplicialComplex) -> None:
    if len(K.vertices) > MAX_VERTICES:
        raise ValueError(f"{len(K.vertices)} vertices exceeds the 2^{MAX_VERTICES} enumeration budget")
    if K.allow_ghosts and set(K.vertices) != {v for f in K.facets for v in f}:
        raise ValueError("ghost vertices are not supported here")


def _subset_order(vertices: Simplex) -> list[Simplex]:
    return [I for c in range(len(vertices) + 1) for I in combinations(vertices, c)]


def _profiles(K: SimplicialComplex, subsets: list[Simplex]) -> list[HomologyProfile]:
    return [reduced_homology(full_subcomplex(K, I)) for I in subsets]


def _map_subsets(K: SimplicialComplex, subsets: list[Simplex], jobs: int) -> list[HomologyProfile]:
    if jobs <= 1 or len(subsets) < 2 * jobs:
        return _profiles(K, subsets)
    step = -(-len(subsets) // (4 * jobs))
    chunks = [subsets[i : i + step] for i in range(0, len(subsets), step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_profiles, [K] * len(chunks), chunks)
        return [p for part in parts for p in part]


class BigradedTable:
    """Reduced homology of every full subcomplex, keyed by vertex subset.

    Iteration order is (|I|, lex), independent of how the table was built.
    """

    def __init__(self, entries: Iterable[tuple[Simplex, HomologyProfile]]):
        self._entries = dict(sorted(entries, key=lambda kv: (len(kv[0]), kv[0])))

    def __getitem__(self, I: Iterable[int]) -> HomologyProfile:
        return self._entries[tuple(sorted(I))]

    def __len__(self):
        return len(self._entries)

    def __iter__(self) -> Iterator[tuple[Simplex, HomologyProfile]]:
        return iter(self._entries.items())

    def nonzero(self) -> list[tuple[Simplex, HomologyProfile]]:
        return [(I, p) for I, p in self._entries.items() if not p.is_zero()]

    @property
    def has_torsion(self) -> bool:
        return any(p.has_torsion for p in self._entries.values())

    def poincare(self) -> PoincarePolynomial:
        """Σ_I Σ_j rank H̃_j(K_I) · t^{j+|I|+1}; I = ∅ supplies the constant 1."""
        out: dict[int, int] = {}
        for I, prof in self._entries.items():
            for j in prof.nonzero_degrees():
                b = prof.betti(j)
                if b:
                    deg = j + len(I) + 1
                    out[deg] = out.get(deg, 0) + b
        return PoincarePolynomial(out)

    def to_json(self) -> list[dict]:
        return [{"I": list(I), "homology": p.to_json()} for I, p in self._entries.items()]


def bigraded_table(K: SimplicialComplex, jobs: int = 1) -> BigradedTable:
    _check_budget(K)
    subsets = _subset_order(K.vertices)
    return BigradedTable(zip(subsets, _map_subsets(K, subsets, jobs)))


def za_poincare(K: SimplicialComplex, jobs: int = 1) -> PoincarePolynomial:
    """Poincaré polynomial of the moment-angle complex Z_K.

    Betti numbers are ranks, so torsion does not change the answer; it is
    still reported through :class:`TorsionWarning` because no fixture here
    should ever produce it.
    """
    table = bigraded_table(K, jobs)
    if table.has_torsion:
        warnings.warn("torsion in the full-subcomplex homology of K", TorsionWarning, stacklevel=2)
    return table.poincare()


def predicted_wedge(K: SimplicialComplex, jobs: int = 1) -> PoincarePolynomial:
    """Poincaré polynomial of the wedge of spheres S^{j+|I|+1}, one per ℤ in H̃_j(K_I).

    This is what Z_K would be if every attaching map of the fat wedge
    filtration were null.  Additively it coincides with :func:`za_poincare`;
    the difference is that torsion makes the prediction meaningless, so it
    raises instead of warning.
    """
    table = bigraded_table(K, jobs)
    if table.has_torsion:
        raise TorsionError("torsion in H̃(K_I); no wedge-of-spheres prediction")
    return table.poincare()


def noncontractible_scan(
    K: SimplicialComplex, card: int, jobs: int = 1
) -> list[tuple[Simplex, HomologyProfile]]:
    """Subsets I with |I| = card whose full subcomplex has nonzero H̃, in lex order."""
    if not 0 <= card <= len(K.vertices):
        raise ValueError(f"cardinality {card} outside 0..{len(K.vertices)}")
    subsets = list(combinations(K.vertices, card))
    profiles = _map_subsets(K, subsets, jobs)
    return [(I, p) for I, p in zip(subsets, profiles) if not p.is_zero()]
