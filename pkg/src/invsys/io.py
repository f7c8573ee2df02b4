"""JSON input documents and report serialization.

Rationals travel as strings (``"-3/2"``) or JSON integers, never floats.
Polynomials are emitted as ``{"ring", "degree", "coeffs", "pretty"}`` with
coefficients in graded-lex order; on input either that object (``ring`` is
optional) or a human-readable string is accepted.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .errors import InputError
from .linalg import RationalMatrix, format_rational, to_rational
from .polyring import R_SIDE, S_SIDE, GradedPoly, parse_poly, pretty


@dataclass
class InputDocument:
    n: int
    points: Optional[list[list[Fraction]]] = None
    ell: Optional[GradedPoly] = None
    terms: Optional[list[tuple[Fraction, GradedPoly]]] = None
    r: Optional[int] = None
    F: Optional[GradedPoly] = None


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, float):
        raise InputError(f"{where}: floating-point numbers are not accepted; use \"p/q\" strings")
    try:
        return to_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: not a rational number: {value!r}") from exc


def _vector(value: Any, length: int, where: str) -> list[Fraction]:
    if not isinstance(value, list):
        raise InputError(f"{where}: expected a list of {length} rationals")
    if len(value) != length:
        raise InputError(f"{where}: expected {length} entries, got {len(value)}")
    return [_rational(x, f"{where}[{i}]") for i, x in enumerate(value)]


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InputError(f"{where}: expected a nonnegative integer")
    return value


def parse_poly_field(value: Any, n: int, side: str, where: str) -> GradedPoly:
    if isinstance(value, str):
        try:
            p = parse_poly(value, n)
        except ValueError as exc:
            raise InputError(f"{where}: {exc}") from exc
        if p.side != side:
            raise InputError(f"{where}: expected a polynomial in the {side} ring")
        return p
    if isinstance(value, dict):
        ring = value.get("ring", side)
        if ring != side:
            raise InputError(f"{where}.ring: expected {side!r}")
        degree = _int(value.get("degree"), f"{where}.degree")
        coeffs = value.get("coeffs")
        if not isinstance(coeffs, list):
            raise InputError(f"{where}.coeffs: expected a list")
        cs = [_rational(x, f"{where}.coeffs[{i}]") for i, x in enumerate(coeffs)]
        try:
            return GradedPoly(side, n, degree, tuple(cs))
        except ValueError as exc:
            raise InputError(f"{where}: {exc}") from exc
    raise InputError(f"{where}: expected a polynomial string or object")


def parse_document(text: str) -> InputDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise InputError("top level: expected a JSON object")
    if "n" not in raw:
        raise InputError("n: missing ambient dimension")
    n = _int(raw["n"], "n")
    doc = InputDocument(n=n)
    if "points" in raw:
        pts = raw["points"]
        if not isinstance(pts, list) or not pts:
            raise InputError("points: expected a nonempty list")
        doc.points = [_vector(p, n + 1, f"points[{i}]") for i, p in enumerate(pts)]
    if raw.get("ell") is not None:
        ell = raw["ell"]
        if isinstance(ell, list):
            coeffs = _vector(ell, n + 1, "ell")
            if not any(coeffs):
                raise InputError("ell: the zero form is not a linear form")
            doc.ell = GradedPoly.linear(R_SIDE, coeffs)
        else:
            doc.ell = parse_poly_field(ell, n, R_SIDE, "ell")
            if doc.ell.degree != 1 or doc.ell.is_zero():
                raise InputError("ell: expected a nonzero linear form")
    if "terms" in raw:
        terms = raw["terms"]
        if not isinstance(terms, list) or not terms:
            raise InputError("terms: expected a nonempty list")
        doc.terms = []
        for i, t in enumerate(terms):
            if not isinstance(t, dict) or "c" not in t or "L" not in t:
                raise InputError(f"terms[{i}]: expected an object with fields c and L")
            L = _vector(t["L"], n + 1, f"terms[{i}].L")
            if not any(L):
                raise InputError(f"terms[{i}].L: the zero form is not a linear form")
            doc.terms.append((_rational(t["c"], f"terms[{i}].c"), GradedPoly.linear(S_SIDE, L)))
    if raw.get("r") is not None:
        doc.r = _int(raw["r"], "r")
    if raw.get("F") is not None:
        doc.F = parse_poly_field(raw["F"], n, S_SIDE, "F")
    return doc


def rat(q: Fraction) -> str:
    return format_rational(q)


def poly_to_json(f: GradedPoly) -> dict:
    return {
        "ring": f.side,
        "degree": f.degree,
        "coeffs": [rat(c) for c in f.coeffs],
        "pretty": pretty(f),
    }


def matrix_to_json(name: str, M: RationalMatrix) -> dict:
    return {
        "name": name,
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[rat(x) for x in M.row(i)] for i in range(M.rows)],
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
