from __future__ import annotations

from typing import Iterable, Mapping


class PoincarePolynomial:
    """Integer polynomial in t, indexed by degree.  Immutable."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        clean = {}
        for d, c in items:
            if d < 0:
                raise ValueError(f"negative degree {d}")
            if c:
                clean[int(d)] = clean.get(int(d), 0) + int(c)
        self._coeffs = {d: c for d, c in sorted(clean.items()) if c}

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> PoincarePolynomial:
        return cls({degree: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def __getitem__(self, d: int) -> int:
        return self._coeffs.get(d, 0)

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=-1)

    def __add__(self, other: PoincarePolynomial) -> PoincarePolynomial:
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return PoincarePolynomial(out)

    def __sub__(self, other: PoincarePolynomial) -> PoincarePolynomial:
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[int, int] = {}
        for a, x in self._coeffs.items():
            for b, y in other._coeffs.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return PoincarePolynomial(out)

    __rmul__ = __mul__

    def scale(self, k: int) -> PoincarePolynomial:
        return PoincarePolynomial({d: k * c for d, c in self._coeffs.items()})

    def __call__(self, t: int) -> int:
        return sum(c * t**d for d, c in self._coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def is_palindromic(self, degree: int | None = None) -> bool:
        n = self.degree if degree is None else degree
        return all(self[d] == self[n - d] for d in range(n + 1)) and self.degree <= n

    def to_json(self) -> dict[str, int]:
        return {str(d): c for d, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> PoincarePolynomial:
        return cls({int(d): c for d, c in data.items()})

    def __repr__(self):
        return f"PoincarePolynomial({self._coeffs})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for d, c in self._coeffs.items():
            mag = abs(c)
            body = str(mag) if d == 0 else ("" if mag == 1 else str(mag)) + ("t" if d == 1 else f"t^{d}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ONE = PoincarePolynomial({0: 1})
