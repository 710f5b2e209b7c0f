"""Finite abstract simplicial complexes over positive integer vertex labels.

A complex is stored by its facets (maximal faces).  Simplices are plain
sorted tuples of ints; the empty tuple is the empty simplex.
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

Simplex = tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Sort *vertices* into a simplex, rejecting repeats and bad labels."""
    s = tuple(sorted(vertices))
    for a, b in zip(s, s[1:]):
        if a == b:
            raise ValueError(f"duplicate vertex {a} in {list(vertices)}")
    for v in s:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"vertex labels must be positive integers, got {v!r}")
    return s


def parse_simplex(text: str) -> Simplex:
    """Parse ``"1,3"`` or the compact notation ``"13"`` (one digit per vertex)."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return as_simplex(int(x) for x in text.split(",") if x.strip())
    return as_simplex(int(c) for c in text)


def format_simplex(s: Iterable[int]) -> str:
    s = tuple(s)
    if all(v < 10 for v in s):
        return "".join(map(str, s)) or "∅"
    return ",".join(map(str, s))


def _maximal(simplices: Iterable[Simplex]) -> tuple[Simplex, ...]:
    uniq = sorted(set(simplices), key=lambda s: (-len(s), s))
    kept: list[Simplex] = []
    kept_sets: list[frozenset[int]] = []
    for s in uniq:
        fs = frozenset(s)
        if not any(fs <= k for k in kept_sets):
            kept.append(s)
            kept_sets.append(fs)
    return tuple(sorted(kept))


class SimplicialComplex:
    """An immutable simplicial complex given by its facets.

    The complex with no facets is the void-like complex ``{∅}``: it has no
    vertices, its only face is the empty simplex, and its reduced homology is
    ℤ in degree -1.
    """

    def __init__(
        self,
        facets: Iterable[Iterable[int]],
        vertices: Iterable[int] | None = None,
        *,
        allow_ghosts: bool = False,
    ):
        fs = tuple(f for f in _maximal(as_simplex(f) for f in facets) if f)
        support = sorted({v for f in fs for v in f})
        if vertices is None:
            verts = tuple(support)
        else:
            verts = as_simplex(vertices)
            missing = set(support) - set(verts)
            if missing:
                raise ValueError(f"facet vertices {sorted(missing)} not in vertex set")
            ghosts = set(verts) - set(support)
            if ghosts and not allow_ghosts:
                raise ValueError(f"ghost vertices {sorted(ghosts)} (pass allow_ghosts=True)")
        self.vertices: Simplex = verts
        self.facets: tuple[Simplex, ...] = fs
        self.allow_ghosts = allow_ghosts

    def __repr__(self):
        body = " ".join(format_simplex(f) for f in self.facets)
        return f"SimplicialComplex([{body}])"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    def __hash__(self):
        return hash((self.vertices, self.facets))

    def __contains__(self, simplex: Iterable[int]) -> bool:
        s = frozenset(simplex)
        return any(s <= f for f in self._facet_sets)

    @cached_property
    def _facet_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(f) for f in self.facets)

    @cached_property
    def face_set(self) -> frozenset[Simplex]:
        out: set[Simplex] = {()}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return frozenset(out)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for s in self.face_set:
            if s:
                counts[len(s) - 1] += 1
        return tuple(counts)

    def faces(self, dim: int | None = None) -> list[Simplex]:
        """All faces (sorted by size then lex), or those of dimension *dim*."""
        if dim is None:
            return sorted(self.face_set, key=lambda s: (len(s), s))
        return sorted(s for s in self.face_set if len(s) == dim + 1)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * n for i, n in enumerate(self.f_vector))

    def is_pseudomanifold(self) -> bool:
        """Pure, and every codimension-one face lies in exactly two facets."""
        if not self.facets or not self.is_pure:
            return False
        counts: dict[Simplex, int] = {}
        for f in self.facets:
            for ridge in combinations(f, len(f) - 1):
                counts[ridge] = counts.get(ridge, 0) + 1
        return all(c == 2 for c in counts.values())

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return all(f in other for f in self.facets)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}


def build_complex(
    facet_list: Iterable[Iterable[int]],
    universe: Iterable[int] | None = None,
    *,
    allow_ghosts: bool = False,
) -> SimplicialComplex:
    """Build a complex from a nonempty list of nonempty facets.

    Contained facets are dropped.  With *universe* given, the vertex set is
    that universe; labels of the universe not covered by a facet are ghost
    vertices and are rejected unless ``allow_ghosts`` is set.
    """
    facets = [list(f) for f in facet_list]
    if not facets:
        raise ValueError("facet list is empty")
    if any(not f for f in facets):
        raise ValueError("facets must be nonempty")
    return SimplicialComplex(facets, universe, allow_ghosts=allow_ghosts)


def void_complex() -> SimplicialComplex:
    """The complex on no vertices whose only face is ∅."""
    return SimplicialComplex([])


def faces(K: SimplicialComplex, dim: int | None = None) -> set[Simplex]:
    if dim is None:
        return set(K.face_set)
    return {s for s in K.face_set if len(s) == dim + 1}


def missing_faces(K: SimplicialComplex) -> list[Simplex]:
    """Minimal non-faces of *K*, sorted by size then lex.

    Candidates are grown by cardinality up to ``dim K + 2``; a candidate is a
    missing face iff it is not a face and every codimension-one subset is.
    """
    face_set = K.face_set
    found: list[Simplex] = []
    for size in range(1, min(K.dim + 2, len(K.vertices)) + 1):
        for cand in combinations(K.vertices, size):
            if cand in face_set:
                continue
            if all(sub in face_set for sub in combinations(cand, size - 1)):
                found.append(cand)
    return found


def stanley_reisner_faces(vertices: Iterable[int], minimal_nonfaces: Iterable[Simplex]) -> SimplicialComplex:
    """The complex of subsets of *vertices* containing no listed non-face."""
    verts = as_simplex(vertices)
    bad = [frozenset(m) for m in minimal_nonfaces]
    good = []
    for size in range(1, len(verts) + 1):
        for cand in combinations(verts, size):
            cs = frozenset(cand)
            if not any(b <= cs for b in bad):
                good.append(cand)
    return SimplicialComplex(good, verts, allow_ghosts=True)


def full_subcomplex(K: SimplicialComplex, I: Iterable[int]) -> SimplicialComplex:
    """K_I: all faces of K contained in I.  Labels of I outside K are ignored."""
    keep = frozenset(I)
    facets = {tuple(v for v in f if v in keep) for f in K.facets}
    facets.discard(())
    if K.allow_ghosts:
        verts = [v for v in K.vertices if v in keep]
        return SimplicialComplex(facets, verts, allow_ghosts=True)
    return SimplicialComplex(facets)


def vertex_delete(K: SimplicialComplex, v: int) -> SimplicialComplex:
    if v not in K.vertices:
        raise ValueError(f"{v} is not a vertex of the complex")
    return full_subcomplex(K, [u for u in K.vertices if u != v])


def link(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """link_K(s) = {τ disjoint from s : τ ∪ s ∈ K}."""
    s = frozenset(s)
    if s not in K:
        raise ValueError(f"{format_simplex(sorted(s))} is not a face of the complex")
    facets = [tuple(v for v in f if v not in s) for f in K.facets if s <= frozenset(f)]
    return SimplicialComplex(f for f in facets if f)


def star(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    s = frozenset(s)
    return SimplicialComplex(f for f in K.facets if s <= frozenset(f))


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """K * L on label-disjoint complexes.  ∅ is implicitly a face of both."""
    overlap = set(K.vertices) & set(L.vertices)
    if overlap:
        raise ValueError(f"join of complexes sharing vertices {sorted(overlap)}")
    kf = K.facets or ((),)
    lf = L.facets or ((),)
    return SimplicialComplex(
        [a + b for a in kf for b in lf if a or b],
        vertices=set(K.vertices) | set(L.vertices),
        allow_ghosts=K.allow_ghosts or L.allow_ghosts,
    )


def relabel(K: SimplicialComplex, perm: Mapping[int, int]) -> SimplicialComplex:
    """Apply a vertex bijection; labels absent from *perm* are fixed."""
    image = {v: perm.get(v, v) for v in K.vertices}
    if len(set(image.values())) != len(image):
        raise ValueError("relabeling is not injective on the vertex set")
    return SimplicialComplex(
        [[image[v] for v in f] for f in K.facets],
        vertices=image.values(),
        allow_ghosts=K.allow_ghosts,
    )


def parse_cycles(text: str) -> dict[int, int]:
    """Parse cycle notation such as ``"(2 4)(5 6)(7 8)"`` into a mapping."""
    perm: dict[int, int] = {}
    for chunk in text.replace(")", "").split("("):
        cycle = [int(x) for x in chunk.replace(",", " ").split()]
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if a in perm:
                raise ValueError(f"vertex {a} appears twice in {text!r}")
            perm[a] = b
    return perm


def simplex(labels: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex([as_simplex(labels)])


def simplex_boundary(n: int, labels: Iterable[int]) -> SimplicialComplex:
    """∂Δⁿ on the given n+1 labels."""
    labels = as_simplex(labels)
    if n < 0 or len(labels) != n + 1:
        raise ValueError(f"∂Δ^{n} needs {n + 1} labels, got {len(labels)}")
    if n == 0:
        return void_complex()
    return SimplicialComplex(combinations(labels, n))


def load_complex(path: str | Path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return complex_from_json(data)


def complex_from_json(data: dict) -> SimplicialComplex:
    if "facets" not in data:
        raise ValueError("complex JSON needs a 'facets' key")
    facets = [parse_simplex(f) if isinstance(f, str) else f for f in data["facets"]]
    return build_complex(facets, data.get("vertices"))
