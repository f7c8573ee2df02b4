"""Command-line front end.

    invsys check          --input points.json
    invsys inverse-system --input points.json [--allow-non-gorenstein]
    invsys recover        --input terms.json
    invsys annihilator    --input form.json [--max-degree K]

Exit status: 0 success / verified, 1 negative mathematical verdict,
2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional

from .apolarity import (
    annihilator_piece,
    inverse_system_generator,
    recover_linear_form,
)
from .errors import InputError, MathematicalError
from .gorenstein import gorenstein_report
from .io import InputDocument, dumps, matrix_to_json, parse_document, poly_to_json, rat
from .points import PointConfiguration, evaluation_matrix
from .polyring import S_SIDE, GradedPoly, linear_power

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


def _require(doc: InputDocument, *fields: str):
    missing = [f for f in fields if getattr(doc, f) is None]
    if missing:
        raise InputError(f"missing required field(s): {', '.join(missing)}")


def _config(doc: InputDocument) -> PointConfiguration:
    return PointConfiguration.from_coords(doc.points, n=doc.n)


def _gorenstein_json(report) -> tuple[dict, dict]:
    return report.hilbert.as_dict(), report.as_dict()


def _trace_json(trace: Optional[list]) -> list:
    return [matrix_to_json(name, M) for name, M in trace or []]


def cmd_check(doc: InputDocument, args) -> tuple[dict, int]:
    _require(doc, "points")
    Z = _config(doc)
    report = gorenstein_report(Z)
    hilbert, gor = _gorenstein_json(report)
    out = {"hilbert": hilbert, "gorenstein": gor, "verdict": report.arithmetically_gorenstein}
    if args.trace:
        out["trace"] = _trace_json(
            [(f"evaluation matrix in degree {j}", evaluation_matrix(Z, j))
             for j in range(report.hilbert.regularity + 1)])
    return out, EXIT_OK if report.arithmetically_gorenstein else EXIT_NEGATIVE


def cmd_inverse_system(doc: InputDocument, args) -> tuple[dict, int]:
    _require(doc, "points", "ell")
    Z = _config(doc)
    trace = [] if args.trace else None
    if trace is not None:
        trace.append(("evaluation matrix in degree 1", evaluation_matrix(Z, 1)))
    res = inverse_system_generator(Z, doc.ell, allow_non_gorenstein=args.allow_non_gorenstein,
                                   trace=trace)
    hilbert, gor = _gorenstein_json(res.report)
    out = {
        "hilbert": hilbert,
        "gorenstein": gor,
        "apolarity": {
            "ell": poly_to_json(res.ell),
            "regularity": res.regularity,
            "c": [rat(x) for x in res.c],
            "d": [rat(x) for x in res.d],
            "F": poly_to_json(res.F),
            "terms": [{"c": rat(c), "L": [rat(a) for a in L.coeffs]} for c, L in res.terms],
        },
        "verification": [row.as_dict() for row in res.per_degree],
        "verdict": res.verified,
    }
    if trace is not None:
        out["trace"] = _trace_json(trace)
    return out, EXIT_OK if res.verified else EXIT_NEGATIVE


def cmd_recover(doc: InputDocument, args) -> tuple[dict, int]:
    _require(doc, "terms", "r")
    trace = [] if args.trace else None
    rec = recover_linear_form(doc.terms, doc.r, trace=trace)
    hilbert, gor = _gorenstein_json(rec.report)
    out = {
        "conditions": {
            "power_span_full": True,
            "unique_nonzero_relation": True,
            "symmetric_h_vector": True,
            "nondegenerate": True,
        },
        "hilbert": hilbert,
        "gorenstein": gor,
        "recovery": {
            "ell": poly_to_json(rec.ell),
            "matrix_rank": rec.matrix_rank,
            "consistent": rec.consistent,
            "d": [rat(x) for x in rec.d],
        },
        "verdict": rec.consistent,
    }
    if trace is not None:
        out["trace"] = _trace_json(trace)
    return out, EXIT_OK if rec.consistent else EXIT_NEGATIVE


def _form_from_doc(doc: InputDocument) -> GradedPoly:
    if doc.F is not None:
        return doc.F
    if doc.terms is not None and doc.r is not None:
        F = GradedPoly.zero(S_SIDE, doc.n, doc.r)
        for c, L in doc.terms:
            F = F + linear_power(L, doc.r).scale(c)
        return F
    raise InputError("missing required field(s): F, or terms together with r")


def cmd_annihilator(doc: InputDocument, args) -> tuple[dict, int]:
    F = _form_from_doc(doc)
    top = args.max_degree if args.max_degree is not None else F.degree + 1
    pieces = []
    for deg in range(top + 1):
        basis = annihilator_piece(F, deg)
        pieces.append({"degree": deg, "dim": len(basis), "basis": [poly_to_json(f) for f in basis]})
    return {"F": poly_to_json(F), "annihilator": pieces}, EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "inverse-system": cmd_inverse_system,
    "recover": cmd_recover,
    "annihilator": cmd_annihilator,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invsys", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="JSON input document ('-' for stdin)")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--trace", action="store_true", help="include intermediate matrices")
        if name == "annihilator":
            p.add_argument("--max-degree", type=int, default=None)
        if name == "inverse-system":
            p.add_argument("--allow-non-gorenstein", action="store_true")
    return parser


def run(argv: Optional[list[str]] = None) -> tuple[dict, int, Optional[str]]:
    args = build_parser().parse_args(argv)
    report: dict = {"command": args.command}
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        doc = parse_document(text)
        body, status = COMMANDS[args.command](doc, args)
        report.update(body)
    except OSError as exc:
        report.update(error={"code": "input_error", "message": str(exc)}, verdict=False)
        status = EXIT_INPUT
    except InputError as exc:
        report.update(error={"code": exc.code, "message": str(exc)}, verdict=False)
        status = EXIT_INPUT
    except MathematicalError as exc:
        report.update(error={"code": exc.code, "message": str(exc)}, verdict=False)
        status = EXIT_NEGATIVE
    report["exit_status"] = status
    return report, status, args.output


def main(argv: Optional[list[str]] = None) -> int:
    report, status, output = run(argv)
    text = dumps(report)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
