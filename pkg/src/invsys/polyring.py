"""Homogeneous polynomials in R = Q[x0..xn] and S = Q[y0..yn].

A form of degree d is a dense coefficient vector over the degree-d monomials
in graded-lex order (x0^2, x0*x1, x0*x2, x1^2, ...).  R acts on S by
differentiation: x^a o y^b = d^|a| / dy^a (y^b).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .linalg import to_rational

R_SIDE = "R"
S_SIDE = "S"
_VAR = {R_SIDE: "x", S_SIDE: "y"}

Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> tuple[Monomial, ...]:
    """All degree-d exponent vectors in n+1 variables, graded-lex order."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be nonnegative")
    out = []
    for combo in itertools.combinations_with_replacement(range(n + 1), d):
        e = [0] * (n + 1)
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomial_basis(n, d))}


def basis_size(n: int, d: int) -> int:
    return comb(n + d, n) if d >= 0 else 0


@dataclass(frozen=True)
class GradedPoly:
    side: str
    n: int
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.side not in (R_SIDE, S_SIDE):
            raise ValueError(f"unknown ring side {self.side!r}")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != basis_size(self.n, self.degree):
            raise ValueError(
                f"degree {self.degree} form in {self.n + 1} variables needs "
                f"{basis_size(self.n, self.degree)} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, side: str, n: int, degree: int) -> "GradedPoly":
        return cls(side, n, degree, (Fraction(0),) * basis_size(n, degree))

    @classmethod
    def from_coeffs(cls, side: str, n: int, degree: int, coeffs: Sequence) -> "GradedPoly":
        return cls(side, n, degree, tuple(to_rational(c) for c in coeffs))

    @classmethod
    def from_terms(cls, side: str, n: int, degree: int, terms: dict) -> "GradedPoly":
        idx = monomial_index(n, degree)
        c = [Fraction(0)] * len(idx)
        for mono, coef in terms.items():
            c[idx[tuple(mono)]] += to_rational(coef)
        return cls(side, n, degree, tuple(c))

    @classmethod
    def monomial(cls, side: str, exponents: Sequence[int], coeff=1) -> "GradedPoly":
        e = tuple(exponents)
        return cls.from_terms(side, len(e) - 1, sum(e), {e: coeff})

    @classmethod
    def linear(cls, side: str, coeffs: Sequence) -> "GradedPoly":
        """A linear form; rejects the zero form."""
        p = cls.from_coeffs(side, len(coeffs) - 1, 1, coeffs)
        if p.is_zero():
            raise ValueError("a linear form must have a nonzero coefficient")
        return p

    def terms(self) -> dict[Monomial, Fraction]:
        return {m: c for m, c in zip(monomial_basis(self.n, self.degree), self.coeffs) if c}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check_compatible(self, other: "GradedPoly"):
        if (self.side, self.n) != (other.side, other.n):
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_compatible(other)
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        return GradedPoly(self.side, self.n, self.degree,
                          tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GradedPoly":
        return self.scale(-1)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def scale(self, s) -> "GradedPoly":
        s = to_rational(s)
        return GradedPoly(self.side, self.n, self.degree, tuple(s * c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, GradedPoly):
            return self.scale(other)
        self._check_compatible(other)
        deg = self.degree + other.degree
        idx = monomial_index(self.n, deg)
        out = [Fraction(0)] * len(idx)
        for ma, ca in self.terms().items():
            for mb, cb in other.terms().items():
                out[idx[tuple(a + b for a, b in zip(ma, mb))]] += ca * cb
        return GradedPoly(self.side, self.n, deg, tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return pretty(self)


def linear_power(L: GradedPoly, k: int) -> GradedPoly:
    """Expand L^k by repeated multiplication."""
    if L.degree != 1:
        raise ValueError("linear_power expects a linear form")
    if k < 0:
        raise ValueError("power must be nonnegative")
    result = GradedPoly.from_coeffs(L.side, L.n, 0, [1])
    base, e = L, k
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def _falling(b: int, a: int) -> int:
    return factorial(b) // factorial(b - a)


def contract(f: GradedPoly, G: GradedPoly) -> GradedPoly:
    """Differentiation action f o G of R on S.

    If deg f > deg G the result is the zero form of degree 0.
    """
    if f.side != R_SIDE or G.side != S_SIDE:
        raise ValueError("contract expects f in R and G in S")
    if f.n != G.n:
        raise ValueError("f and G have different numbers of variables")
    e = G.degree - f.degree
    if e < 0:
        return GradedPoly.zero(S_SIDE, G.n, 0)
    idx = monomial_index(G.n, e)
    out = [Fraction(0)] * len(idx)
    g_terms = G.terms()
    for a, ca in f.terms().items():
        for b, cb in g_terms.items():
            if any(bi < ai for ai, bi in zip(a, b)):
                continue
            w = 1
            for ai, bi in zip(a, b):
                w *= _falling(bi, ai)
            out[idx[tuple(bi - ai for ai, bi in zip(a, b))]] += ca * cb * w
    return GradedPoly(S_SIDE, G.n, e, tuple(out))


def evaluate(f: GradedPoly, point: Sequence) -> Fraction:
    if len(point) != f.n + 1:
        raise ValueError(f"point needs {f.n + 1} coordinates")
    p = [to_rational(x) for x in point]
    total = Fraction(0)
    for m, c in f.terms().items():
        v = c
        for pi, ei in zip(p, m):
            if ei:
                v *= pi ** ei
        total += v
    return total


def pretty(f: GradedPoly) -> str:
    """Human-readable form, e.g. ``x0^2 - 1/2*x0*x2``."""
    var = _VAR[f.side]
    pieces = []
    for m, c in f.terms().items():
        factors = [f"{var}{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_VAR_RE = re.compile(r"\b([xy])(\d+)\b")


def parse_poly(text: str, n: int | None = None) -> GradedPoly:
    """Parse a homogeneous polynomial such as ``y2^2 + (y0+y1+y2)^2 - 2*y0*y1``.

    The ring is inferred from the variable letter; ``n`` defaults to the
    largest variable index that appears.
    """
    import sympy

    text = text.translate(_SUBSCRIPTS).replace("^", "**")
    found = _VAR_RE.findall(text)
    letters = {v for v, _ in found}
    if len(letters) > 1:
        raise ValueError("polynomial mixes x and y variables")
    if not letters:
        raise ValueError("cannot infer ring of a constant; give it as a coefficient list")
    letter = letters.pop()
    top = max(int(i) for _, i in found)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"variable {letter}{top} out of range for n={n}")
    gens = sympy.symbols([f"{letter}{i}" for i in range(n + 1)])
    local = {str(g): g for g in gens}
    try:
        expr = sympy.parse_expr(text, local_dict=local, evaluate=True,
                                transformations=sympy.parsing.sympy_parser.standard_transformations)
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc}") from exc
    poly = sympy.Poly(expr, *gens, domain="QQ")
    terms = poly.terms()
    degrees = {sum(m) for m, c in terms if c != 0}
    if len(degrees) > 1:
        raise ValueError("polynomial is not homogeneous")
    degree = degrees.pop() if degrees else 0
    side = R_SIDE if letter == "x" else S_SIDE
    return GradedPoly.from_terms(
        side, n, degree,
        {m: Fraction(int(c.p), int(c.q)) for m, c in terms if c != 0},
    )
