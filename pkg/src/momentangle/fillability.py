"""Collapsibility search and fillings by missing faces.

Contractibility is certified only through collapsibility, which is
sufficient but not necessary.  Searches are deterministic and budgeted;
running out of budget is reported, never guessed around.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .complex import Simplex, SimplicialComplex, missing_faces
from .homology import reduced_homology

DEFAULT_BUDGET = 10**6

FILLABLE = "fillable"
NOT_SHOWN = "not_shown"
TRIVIALLY_CONTRACTIBLE = "trivially_contractible"


class _BudgetExhausted(Exception):
    pass


@dataclass
class CollapseResult:
    collapsible: Optional[bool]  # None: budget ran out before a decision
    log: list[tuple[Simplex, Simplex]] = field(default_factory=list)
    nodes: int = 0

    def __bool__(self):
        return self.collapsible is True


def _free_pairs(state: frozenset[Simplex]) -> list[tuple[Simplex, Simplex]]:
    """(σ, τ) with τ the unique proper coface of σ, ordered by (dim σ desc, lex)."""
    up: dict[Simplex, list[Simplex]] = {}
    for t in state:
        if len(t) < 2:
            continue
        for i in range(len(t)):
            up.setdefault(t[:i] + t[i + 1 :], []).append(t)
    pairs = []
    for s, cof in up.items():
        if len(cof) == 1 and cof[0] not in up:
            pairs.append((s, cof[0]))
    pairs.sort(key=lambda p: (-len(p[0]), p[0]))
    return pairs


def collapse(K: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> CollapseResult:
    """Try to collapse *K* to a single vertex by elementary collapses.

    Depth-first over free-face choices with memoised dead ends.  ``budget``
    caps the number of expanded search states.
    """
    start = frozenset(s for s in K.face_set if s)
    if not start:
        return CollapseResult(False)
    dead: set[frozenset[Simplex]] = set()
    nodes = 0

    def search(state):
        nonlocal nodes
        if len(state) == 1:
            return []
        if state in dead:
            return None
        if nodes >= budget:
            raise _BudgetExhausted
        nodes += 1
        for s, t in _free_pairs(state):
            rest = search(state - {s, t})
            if rest is not None:
                return [(s, t)] + rest
        dead.add(state)
        return None

    try:
        log = search(start)
    except (_BudgetExhausted, RecursionError):
        return CollapseResult(None, [], nodes)
    if log is None:
        return CollapseResult(False, [], nodes)
    return CollapseResult(True, log, nodes)


@dataclass
class FillWitness:
    added: list[Simplex]
    outcome: str
    budget_exhausted: bool = False
    nodes: int = 0

    def to_json(self) -> dict:
        return {"added": [list(a) for a in self.added], "outcome": self.outcome}


def add_faces(K: SimplicialComplex, new: list[Simplex]) -> SimplicialComplex:
    return SimplicialComplex(list(K.facets) + list(new), allow_ghosts=K.allow_ghosts)


def is_fillable(K: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> FillWitness:
    """Search for missing faces whose addition makes *K* collapsible.

    Candidate sets are tried by (size, lex).  Sets whose augmented complex has
    nonzero reduced homology are skipped without a collapse search, since a
    collapsible complex is acyclic.
    """
    remaining = budget
    hit = False

    def attempt(L: SimplicialComplex) -> bool:
        nonlocal remaining, hit
        if not reduced_homology(L).is_zero() or not L.facets:
            return False
        res = collapse(L, remaining)
        remaining -= res.nodes
        if res.collapsible is None:
            hit = True
        return res.collapsible is True

    if attempt(K):
        return FillWitness([], TRIVIALLY_CONTRACTIBLE, nodes=budget - remaining)
    mf = missing_faces(K)
    for r in range(1, len(mf) + 1):
        for chosen in combinations(mf, r):
            if attempt(add_faces(K, list(chosen))):
                return FillWitness(list(chosen), FILLABLE, nodes=budget - remaining)
            if remaining <= 0 and hit:
                return FillWitness([], NOT_SHOWN, budget_exhausted=True, nodes=budget)
    return FillWitness([], NOT_SHOWN, budget_exhausted=hit, nodes=budget - remaining)
