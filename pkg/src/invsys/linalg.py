"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`, which already keeps numerator and
denominator in lowest terms with a positive denominator.  Matrices are small
(a few hundred rows at most), so everything is dense and row-major.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: a binary float is almost never the number the user
    meant, and silently accepting one defeats exact arithmetic.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        entries = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            entries.extend(to_rational(x) for x in r)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RationalMatrix":
        if rows is None:
            if not columns:
                raise ValueError("rows must be given for a matrix with no columns")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        cols = [[to_rational(x) for x in c] for c in columns]
        return cls(rows, len(cols), tuple(cols[j][i] for i in range(rows) for j in range(len(cols))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        cols = [self.entries[j::self.cols] for j in range(self.cols)] if self.rows else []
        return RationalMatrix(self.cols, self.rows,
                              tuple(x for c in cols for x in c))

    def delete_row(self, i: int) -> "RationalMatrix":
        kept = [self.row(k) for k in range(self.rows) if k != i]
        return RationalMatrix(self.rows - 1, self.cols, tuple(x for r in kept for x in r))

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product ``A v``."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        v = [to_rational(x) for x in v]
        return tuple(sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
                     for i in range(self.rows))


def _rref_lists(a: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan elimination; returns pivot columns."""
    pivots = []
    prow = 0
    nrows = len(a)
    for c in range(ncols):
        if prow == nrows:
            break
        for i in range(prow, nrows):
            if a[i][c] != 0:
                break
        else:
            continue
        a[prow], a[i] = a[i], a[prow]
        pr = a[prow]
        inv = 1 / pr[c]
        if inv != 1:
            for k in range(c, ncols):
                pr[k] *= inv
        for i in range(nrows):
            if i == prow:
                continue
            f = a[i][c]
            if f:
                ri = a[i]
                for k in range(c, ncols):
                    if pr[k]:
                        ri[k] -= f * pr[k]
        pivots.append(c)
        prow += 1
    return pivots


def rref(A: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    a = A.to_lists()
    pivots = _rref_lists(a, A.cols)
    return RationalMatrix(A.rows, A.cols, tuple(x for r in a for x in r)), pivots


def rank(A: RationalMatrix) -> int:
    return len(rref(A)[1])


def nullspace(A: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel ``{v : A v = 0}``.

    One vector per free column of the RREF, with that free variable set to 1
    and the other free variables set to 0.
    """
    R, pivots = rref(A)
    pivot_set = set(pivots)
    basis = []
    for f in range(A.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * A.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i, f]
        basis.append(tuple(v))
    return basis


def row_space_basis(vectors: Iterable[Sequence], dim: int) -> list[tuple[Fraction, ...]]:
    """Nonzero rows of the RREF of the stacked vectors (a canonical span basis)."""
    rows = [list(map(to_rational, v)) for v in vectors]
    if not rows:
        return []
    piv = _rref_lists(rows, dim)
    return [tuple(rows[i]) for i in range(len(piv))]


def span_rank(vectors: Sequence[Sequence], dim: int) -> int:
    if not vectors:
        return 0
    return rank(RationalMatrix.from_rows(vectors, cols=dim))


def spans_equal(U: Sequence[Sequence], V: Sequence[Sequence], dim: int) -> bool:
    """Mutual containment of two spans, decided by ranks."""
    ru, rv = span_rank(U, dim), span_rank(V, dim)
    if ru != rv:
        return False
    return span_rank(list(U) + list(V), dim) == ru


def span_contains(U: Sequence[Sequence], v: Sequence, dim: int) -> bool:
    return span_rank(list(U) + [v], dim) == span_rank(U, dim)
