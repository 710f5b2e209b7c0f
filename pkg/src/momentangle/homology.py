"""Exact integral simplicial homology via Smith normal form.

Everything is computed over ℤ with Python integers, so there is no overflow
and no tolerance anywhere.  Reduced (augmented) homology is the default.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .complex import Simplex, SimplicialComplex


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntegerMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in ot) for r in self.entries),
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


# --------------------------------------------------------------------------
# Smith normal form


def _min_abs_position(M: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    best_val = 0
    for i in range(t, len(M)):
        row = M[i]
        for j in range(t, len(row)):
            v = row[j]
            if v and (best is None or abs(v) < best_val):
                best, best_val = (i, j), abs(v)
                if best_val == 1:
                    return best
    return best


def smith_normal_decomposition(A: Sequence[Sequence[int]] | IntegerMatrix):
    """Dense SNF with transforms: returns ``(D, U, V)`` with ``U A V = D``.

    ``U`` and ``V`` are unimodular; ``D`` is diagonal with each nonzero
    entry dividing the next.  Pivots are chosen by minimum absolute value.
    """
    rows = A.tolist() if isinstance(A, IntegerMatrix) else [list(r) for r in A]
    m = len(rows)
    n = len(rows[0]) if m else (A.cols if isinstance(A, IntegerMatrix) else 0)
    M = [list(map(int, r)) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        M[i], M[k] = M[k], M[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for R in (M, V):
            for r in R:
                r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for R in (M, U):
            a, b = R[dst], R[src]
            for j in range(len(a)):
                if b[j]:
                    a[j] += q * b[j]

    def add_col(dst, src, q):
        for R in (M, V):
            for r in R:
                if r[src]:
                    r[dst] += q * r[src]

    t = 0
    while t < min(m, n):
        pos = _min_abs_position(M, t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // p))
                    dirty = dirty or M[i][t] != 0
            for j in range(t + 1, n):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // p))
                    dirty = dirty or M[t][j] != 0
            if dirty:
                # a smaller remainder now sits in row/column t; move it to the pivot
                cand = [(abs(M[i][t]), i, t) for i in range(t + 1, m) if M[i][t]]
                cand += [(abs(M[t][j]), t, j) for j in range(t + 1, n) if M[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    def pack(R, c):
        return IntegerMatrix(len(R), c, tuple(tuple(r) for r in R))

    return pack(M, n), pack(U, m), pack(V, n)


def _sparse_unit_eliminate(rows: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Peel off ±1 pivots by row operations alone.

    Once column j has a unit pivot in row i and is cleared elsewhere, row i
    can be cleared by column operations that touch no other row, so the pivot
    contributes an invariant factor 1 and both row and column drop out.
    """
    ones = 0
    live = [r for r in rows if r]
    while True:
        pick = None
        for idx, r in enumerate(live):
            for j, v in r.items():
                if v == 1 or v == -1:
                    if pick is None or len(r) < len(live[pick[0]]):
                        pick = (idx, j)
                    break
        if pick is None:
            return ones, live
        idx, j = pick
        prow = live.pop(idx)
        p = prow[j]
        ones += 1
        nxt = []
        for r in live:
            c = r.get(j)
            if c:
                q = c * p  # p = ±1 so p⁻¹ = p
                for k, v in prow.items():
                    nv = r.get(k, 0) - q * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            if r:
                nxt.append(r)
        live = nxt


def invariant_factors(A: Sequence[Sequence[int]] | IntegerMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, in divisibility order."""
    rows = A.entries if isinstance(A, IntegerMatrix) else A
    sparse = [{j: int(v) for j, v in enumerate(r) if v} for r in rows]
    return _factors_from_sparse(sparse)


def _factors_from_sparse(sparse: list[dict[int, int]]) -> list[int]:
    ones, rest = _sparse_unit_eliminate(sparse)
    if not rest:
        return [1] * ones
    cols = sorted({j for r in rest for j in r})
    where = {j: k for k, j in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rest]
    for i, r in enumerate(rest):
        for j, v in r.items():
            dense[i][where[j]] = v
    D, _, _ = smith_normal_decomposition(dense)
    tail = [D.entries[i][i] for i in range(min(D.rows, D.cols)) if D.entries[i][i]]
    return [1] * ones + tail


def smith_normal_form(A: Sequence[Sequence[int]] | IntegerMatrix) -> tuple[list[int], int]:
    """Return ``(invariant_factors, rank)``."""
    factors = invariant_factors(A)
    return factors, len(factors)


# --------------------------------------------------------------------------
# Chain complexes


def _cells_by_dim(faces: Iterable[Simplex], top: int) -> dict[int, list[Simplex]]:
    cells: dict[int, list[Simplex]] = {d: [] for d in range(-1, top + 1)}
    for s in faces:
        cells[len(s) - 1].append(s)
    for d in cells:
        cells[d].sort()
    return cells


def _sparse_boundary(cols: list[Simplex], rows: list[Simplex]) -> list[dict[int, int]]:
    """∂ restricted to the given cells, as sparse rows indexed by *rows*."""
    index = {s: i for i, s in enumerate(rows)}
    out: list[dict[int, int]] = [{} for _ in rows]
    for j, s in enumerate(cols):
        for i in range(len(s)):
            face = s[:i] + s[i + 1 :]
            r = index.get(face)
            if r is not None:
                out[r][j] = -1 if i % 2 else 1
    return out


def chain_boundary_matrices(K: SimplicialComplex, reduced: bool = True) -> list[IntegerMatrix]:
    """Boundary matrices ∂_0 … ∂_{dim K} on sorted-vertex oriented simplices.

    ∂_n has rows indexed by (n-1)-faces and columns by n-faces (both in lex
    order).  In reduced mode ∂_0 is the augmentation onto the empty simplex.
    """
    cells = _cells_by_dim(K.face_set, K.dim)
    if not reduced:
        cells[-1] = []
    mats = []
    for n in range(0, K.dim + 1):
        sp = _sparse_boundary(cells[n], cells[n - 1])
        ncols = len(cells[n])
        mats.append(
            IntegerMatrix(
                len(sp), ncols, tuple(tuple(r.get(j, 0) for j in range(ncols)) for r in sp)
            )
        )
    return mats


@dataclass(frozen=True)
class HomologyProfile:
    """Homology per degree as ``degree -> (betti, torsion invariant factors)``."""

    groups: dict[int, tuple[int, tuple[int, ...]]] = field(default_factory=dict)

    def betti(self, n: int) -> int:
        return self.groups.get(n, (0, ()))[0]

    def torsion(self, n: int) -> tuple[int, ...]:
        return self.groups.get(n, (0, ()))[1]

    @property
    def has_torsion(self) -> bool:
        return any(t for _, t in self.groups.values())

    def is_zero(self) -> bool:
        return all(b == 0 and not t for b, t in self.groups.values())

    def nonzero_degrees(self) -> list[int]:
        return sorted(n for n, (b, t) in self.groups.items() if b or t)

    def to_json(self) -> dict:
        return {
            str(n): {"betti": b, "torsion": list(t)} for n, (b, t) in sorted(self.groups.items())
        }

    @classmethod
    def from_json(cls, data: dict) -> HomologyProfile:
        return cls({int(k): (v["betti"], tuple(v["torsion"])) for k, v in data.items()})

    def __str__(self):
        parts = []
        for n in self.nonzero_degrees():
            b, t = self.groups[n]
            terms = (["ℤ" if b == 1 else f"ℤ^{b}"] if b else []) + [f"ℤ/{d}" for d in t]
            parts.append(f"H{n}={'⊕'.join(terms)}")
        return ", ".join(parts) or "0"

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        degs = set(self.groups) | set(other.groups)
        return all(
            (self.betti(n), self.torsion(n)) == (other.betti(n), other.torsion(n)) for n in degs
        )

    def __hash__(self):
        return hash(tuple((n, self.groups[n]) for n in self.nonzero_degrees()))


def _homology(cells: dict[int, list[Simplex]], top: int) -> HomologyProfile:
    factors: dict[int, list[int]] = {}
    for n in range(0, top + 1):
        if cells[n] and cells[n - 1]:
            factors[n] = _factors_from_sparse(_sparse_boundary(cells[n], cells[n - 1]))
        else:
            factors[n] = []
    groups = {}
    for n in range(-1, top + 1):
        rank_out = len(factors.get(n, []))
        into = factors.get(n + 1, [])
        b = len(cells[n]) - rank_out - len(into)
        groups[n] = (b, tuple(d for d in into if d > 1))
    return HomologyProfile(groups)


def reduced_homology(K: SimplicialComplex) -> HomologyProfile:
    """H̃_n(K; ℤ) for -1 ≤ n ≤ dim K.  The complex {∅} has H̃_{-1} = ℤ."""
    return _homology(_cells_by_dim(K.face_set, K.dim), K.dim)


def homology(K: SimplicialComplex, reduced: bool = True) -> HomologyProfile:
    if reduced:
        return reduced_homology(K)
    cells = _cells_by_dim(K.face_set, K.dim)
    cells[-1] = []
    prof = _homology(cells, K.dim)
    return HomologyProfile({n: g for n, g in prof.groups.items() if n >= 0})


def relative_homology(K: SimplicialComplex, L: SimplicialComplex) -> HomologyProfile:
    """H_n(K, L; ℤ) from the quotient chain complex C(K)/C(L)."""
    if not L.is_subcomplex_of(K):
        raise ValueError("second complex is not a subcomplex of the first")
    rel = K.face_set - L.face_set
    return _homology(_cells_by_dim(rel, K.dim), K.dim)


def is_homology_iso_inclusion(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    """True iff the inclusion L ⊆ K induces isomorphisms on all ℤ-homology."""
    return relative_homology(K, L).is_zero()


def is_homology_point(K: SimplicialComplex) -> bool:
    return reduced_homology(K).is_zero()


def is_homology_sphere(K: SimplicialComplex, n: int) -> bool:
    """True iff H̃(K) is exactly ℤ in degree *n* and zero elsewhere."""
    prof = reduced_homology(K)
    return prof.nonzero_degrees() == [n] and prof.groups[n] == (1, ())


def determinant_divisors(A: Sequence[Sequence[int]]) -> list[int]:
    """gcd of all k×k minors, k = 1, 2, …, as long as it is nonzero.

    Brute force; an independent check on Smith normal form for small inputs.
    """
    from itertools import combinations

    def det(M):
        if len(M) == 1:
            return M[0][0]
        return sum(
            (-1) ** j * M[0][j] * det([r[:j] + r[j + 1 :] for r in M[1:]])
            for j in range(len(M))
            if M[0][j]
        )

    m = len(A)
    n = len(A[0]) if m else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, det([[A[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        out.append(g)
    return out
