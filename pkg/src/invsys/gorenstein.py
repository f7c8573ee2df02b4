"""Arithmetically Gorenstein test for reduced point sets.

A reduced finite set is arithmetically Gorenstein iff its h-vector is
symmetric and it has the Cayley-Bacharach property.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .linalg import rank
from .points import HilbertData, PointConfiguration, evaluation_matrix, hilbert_data


def is_symmetric(h: Sequence[int]) -> bool:
    if not h or h[-1] == 0:
        raise ValueError("h-vector must be nonempty and end in a nonzero entry")
    return list(h) == list(reversed(h))


def cayley_bacharach(Z: PointConfiguration, socle_degree: int | None = None) -> tuple[bool, Optional[int]]:
    """Compare HF(Y, s-1) with HF(Z, s-1) for every Y = Z minus one point.

    Returns ``(True, None)`` or ``(False, i)`` with i the first point whose
    removal changes the value.
    """
    if Z.m < 2:
        return True, None
    if socle_degree is None:
        socle_degree = hilbert_data(Z).socle_degree
    M = evaluation_matrix(Z, socle_degree - 1)
    full = rank(M)
    for i in range(Z.m):
        if rank(M.delete_row(i)) != full:
            return False, i
    return True, None


@dataclass(frozen=True)
class GorensteinReport:
    symmetric: bool
    cayley_bacharach: bool
    arithmetically_gorenstein: bool
    failing_subset: Optional[int]
    hilbert: HilbertData

    @property
    def reason(self) -> str:
        if self.arithmetically_gorenstein:
            return "symmetric h-vector and Cayley-Bacharach"
        if not self.symmetric:
            return "h-vector not symmetric"
        return f"Cayley-Bacharach fails when point {self.failing_subset} is removed"

    def as_dict(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "cayley_bacharach": self.cayley_bacharach,
            "arithmetically_gorenstein": self.arithmetically_gorenstein,
            "failing_subset": self.failing_subset,
            "reason": self.reason,
        }


def gorenstein_report(Z: PointConfiguration) -> GorensteinReport:
    hd = hilbert_data(Z)
    sym = is_symmetric(hd.h_vector)
    cb, witness = cayley_bacharach(Z, hd.socle_degree)
    return GorensteinReport(sym, cb, sym and cb, witness, hd)
