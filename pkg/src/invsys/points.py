"""Finite reduced point sets in P^n, their ideals and Hilbert functions.

Everything is per-degree linear algebra: (I_Z)_d is the kernel of the
evaluation map R_d -> Q^m, and HF(R/I_Z, d) is that map's rank.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .linalg import RationalMatrix, nullspace, rank, to_rational
from .polyring import R_SIDE, GradedPoly, monomial_basis


def normalize(coords: Sequence) -> tuple[Fraction, ...]:
    """Scale homogeneous coordinates so the first nonzero entry is 1."""
    c = [to_rational(x) for x in coords]
    for x in c:
        if x:
            return tuple(v / x for v in c)
    raise InputError("a projective point cannot have all coordinates zero")


@dataclass(frozen=True)
class PointConfiguration:
    n: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.points:
            raise InputError("a point configuration needs at least one point")
        for p in self.points:
            if len(p) != self.n + 1:
                raise InputError(f"point {p} does not have {self.n + 1} coordinates")
        if len(set(self.points)) != len(self.points):
            raise InputError("points not distinct")

    @classmethod
    def from_coords(cls, coords: Sequence[Sequence], n: int | None = None) -> "PointConfiguration":
        coords = list(coords)
        if not coords:
            raise InputError("a point configuration needs at least one point")
        if n is None:
            n = len(coords[0]) - 1
        return cls(n, tuple(normalize(p) for p in coords))

    @property
    def m(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def without(self, i: int) -> "PointConfiguration":
        return PointConfiguration(self.n, self.points[:i] + self.points[i + 1:])


def evaluation_matrix(Z: PointConfiguration, d: int) -> RationalMatrix:
    """m x C(n+d, n) matrix of degree-d monomials evaluated at the points."""
    basis = monomial_basis(Z.n, d)
    rows = []
    for p in Z.points:
        row = []
        for mono in basis:
            v = Fraction(1)
            for x, e in zip(p, mono):
                if e:
                    v *= x ** e
            row.append(v)
        rows.append(row)
    return RationalMatrix.from_rows(rows, cols=len(basis))


def vanishing_ideal_piece(Z: PointConfiguration, d: int) -> list[GradedPoly]:
    """Basis of the degree-d forms vanishing on Z."""
    return [GradedPoly(R_SIDE, Z.n, d, v) for v in nullspace(evaluation_matrix(Z, d))]


def hilbert_function(Z: PointConfiguration, j: int) -> int:
    if j < 0:
        return 0
    return rank(evaluation_matrix(Z, j))


@dataclass(frozen=True)
class HilbertData:
    hf: tuple[int, ...]
    regularity: int
    h_vector: tuple[int, ...]
    socle_degree: int
    degenerate: bool

    def as_dict(self) -> dict:
        return {
            "hf": list(self.hf),
            "regularity": self.regularity,
            "h_vector": list(self.h_vector),
            "socle_degree": self.socle_degree,
            "degenerate": self.degenerate,
        }


def hilbert_data(Z: PointConfiguration) -> HilbertData:
    hf = []
    j = 0
    while True:
        hf.append(hilbert_function(Z, j))
        if hf[-1] == Z.m:
            break
        j += 1
    r = j
    h = tuple(hf[k] - (hf[k - 1] if k else 0) for k in range(r + 1))
    hf1 = hf[1] if r >= 1 else hilbert_function(Z, 1)
    return HilbertData(
        hf=tuple(hf),
        regularity=r,
        h_vector=h,
        socle_degree=max(k for k, v in enumerate(h) if v),
        degenerate=hf1 < Z.n + 1,
    )
