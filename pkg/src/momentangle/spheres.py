"""Additive topology of sphere products, wedges and connected sums.

This module knows nothing about simplicial complexes.  It is the symbolic
side that Hochster-type computations are compared against.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .polynomial import ONE, PoincarePolynomial


@dataclass(frozen=True, order=True)
class SphereProduct:
    """S^{d_1} × … × S^{d_r}; dims kept sorted."""

    dims: tuple[int, ...]

    def __init__(self, dims: Iterable[int]):
        dims = tuple(sorted(int(d) for d in dims))
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"sphere dimensions must be positive, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def __str__(self):
        return "×".join(f"S^{d}" for d in self.dims)


@dataclass(frozen=True)
class ConnectedSumSpec:
    """A connected sum of sphere products of one common dimension."""

    summands: tuple[tuple[SphereProduct, int], ...]

    def __init__(self, summands: Iterable[tuple[SphereProduct | Iterable[int], int]]):
        norm = []
        for p, mult in summands:
            p = p if isinstance(p, SphereProduct) else SphereProduct(p)
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            norm.append((p, int(mult)))
        if not norm:
            raise ValueError("a connected sum needs at least one summand")
        dims = {p.dimension for p, _ in norm}
        if len(dims) != 1:
            raise ValueError(f"summands have different dimensions {sorted(dims)}")
        object.__setattr__(self, "summands", tuple(norm))

    @property
    def dimension(self) -> int:
        return self.summands[0][0].dimension

    @property
    def count(self) -> int:
        return sum(m for _, m in self.summands)

    def to_json(self) -> list[dict]:
        return [{"dims": list(p.dims), "mult": m} for p, m in self.summands]

    @classmethod
    def from_json(cls, data: list[dict]) -> ConnectedSumSpec:
        return cls((d["dims"], d["mult"]) for d in data)

    def __str__(self):
        return " # ".join(f"({p})^#{m}" if m > 1 else f"({p})" for p, m in self.summands)


class SphereCase(Exception):
    """Raised when the stacked formula degenerates to a sphere (no summands)."""

    def __init__(self, dimension: int):
        super().__init__(f"Z_K is the sphere S^{dimension}; no connected-sum decomposition")
        self.dimension = dimension


def sphere_poincare(d: int) -> PoincarePolynomial:
    return PoincarePolynomial({0: 1, d: 1})


def product_poincare(p: SphereProduct) -> PoincarePolynomial:
    out = ONE
    for d in p.dims:
        out = out * sphere_poincare(d)
    return out


def connected_sum_poincare(spec: ConnectedSumSpec) -> PoincarePolynomial:
    """Betti numbers of a connected sum of closed simply-connected manifolds.

    Middle-degree Betti numbers add; b_0 = b_d = 1 survive once.  Products
    involving S¹ are rejected since the rule needs simple connectivity.
    """
    for p, _ in spec.summands:
        if 1 in p.dims:
            raise ValueError(f"{p} is not simply connected")
    d = spec.dimension
    total = PoincarePolynomial()
    for p, mult in spec.summands:
        total = total + product_poincare(p).scale(mult)
    return total - sphere_poincare(d).scale(spec.count - 1)


def stacked_connected_sum(k: int, ell: int) -> ConnectedSumSpec:
    """Z_K for the boundary of a stacked k-polytope with k+1+ell vertices.

    Z_K ≅ #_{j=1}^{ell} (S^{j+2} × S^{2k+ell-j-1})^{# j·C(ell+1, j+1)}.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if ell == 0:
        raise SphereCase(2 * k + 1)
    return ConnectedSumSpec(
        ((j + 2, 2 * k + ell - j - 1), j * comb(ell + 1, j + 1)) for j in range(1, ell + 1)
    )


def wedge_poincare(summands: Iterable[tuple[PoincarePolynomial, int]]) -> PoincarePolynomial:
    """Reduced Betti numbers of a wedge add: 1 + Σ mult·(P − 1)."""
    out = ONE
    for poly, mult in summands:
        if poly[0] != 1:
            raise ValueError(f"wedge summand {poly} does not have constant term 1")
        out = out + (poly - ONE).scale(mult)
    return out
