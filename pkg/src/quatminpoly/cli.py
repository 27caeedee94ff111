"""Command-line front end.

    quatminpoly analyze --input m.json [--family auto] [--jordan] [--cayley] [--report json]
    quatminpoly analyze --svd3 --input y.csv
    quatminpoly analyze --clifford06 --input x.json
    quatminpoly analyze --octonion "1,0,0,0,0,0,0,0 times 0,1,0,0,0,0,0,0"

Exit codes: 0 success, 1 parse or validation error, 2 no family detected
(the oracle-only report is still printed).
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from .analysis import analyze_clifford06, analyze_matrix, analyze_octonion, analyze_svd3
from .clifford import Octonion
from .errors import QuatMinpolyError
from .families import FAMILY_ORDER

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_FAMILY = 2


class InputError(ValueError):
    pass


# ----------------------------------------------------------------- input


def _parse_rows(rows, where: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise InputError(f"{where}: expected a non-empty list of rows")
    out = []
    width = None
    for i, row in enumerate(rows, start=1):
        if not isinstance(row, list):
            raise InputError(f"{where}: row {i} is not a list")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise InputError(f"{where}: row {i} has {len(row)} columns, expected {width}")
        vals = []
        for j, cell in enumerate(row, start=1):
            if isinstance(cell, bool):
                raise InputError(f"{where}: row {i}, column {j}: boolean {cell!r} is not a number")
            try:
                v = float(cell.strip() if isinstance(cell, str) else cell)
            except (TypeError, ValueError):
                raise InputError(f"{where}: row {i}, column {j}: cannot parse {cell!r} as a number") from None
            if not math.isfinite(v):
                raise InputError(f"{where}: row {i}, column {j}: non-finite value {cell!r}")
            vals.append(v)
        out.append(vals)
    return np.array(out, dtype=float)


def read_matrix(path: str, fmt: str | None = None) -> np.ndarray:
    """Load a matrix from JSON ``{"matrix": [[...], ...]}`` or headerless CSV."""
    p = Path(path)
    if fmt is None:
        fmt = "csv" if p.suffix.lower() == ".csv" else "json"
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        if isinstance(doc, dict):
            if "matrix" not in doc:
                raise InputError(f'{path}: JSON object has no "matrix" key')
            doc = doc["matrix"]
        return _parse_rows(doc, path)
    rows = [row for row in csv.reader(text.splitlines()) if any(c.strip() for c in row)]
    return _parse_rows(rows, path)


def _expect_shape(m: np.ndarray, n: int, source: str, what: str):
    if m.shape != (n, n):
        raise InputError(f"{source}: {what} needs a {n}x{n} matrix, got {m.shape[0]}x{m.shape[1]}")


def parse_octonions(text: str) -> tuple[Octonion, Octonion | None]:
    """"a1w,...,a2z" or "a... times b..." with eight components each."""
    parts = [s.strip() for s in text.split("times")]
    if len(parts) not in (1, 2):
        raise InputError("--octonion: expected one octonion or two separated by 'times'")
    octs = []
    for n, part in enumerate(parts, start=1):
        items = [t for t in part.replace(" ", ",").split(",") if t]
        if len(items) != 8:
            raise InputError(f"--octonion: operand {n} has {len(items)} components, expected 8")
        vals = []
        for j, t in enumerate(items, start=1):
            try:
                vals.append(float(t))
            except ValueError:
                raise InputError(f"--octonion: operand {n}, component {j}: cannot parse {t!r}") from None
        octs.append(Octonion.from_array(vals))
    return octs[0], (octs[1] if len(octs) == 2 else None)


# ---------------------------------------------------------------- output


def _fmt_float(x: float) -> str:
    if x == 0.0:
        return "0"
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} in report")
    return format(x, ".17g")


def dump_json(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with floats at 17 significant digits and insertion-ordered keys."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {dump_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dump_json(v) for v in obj) + "]"
        items = [pad + dump_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _poly_text(coeffs) -> str:
    if coeffs is None:
        return "(none)"
    from .polynomial import format_polynomial

    return f"{format_polynomial(coeffs)}   coefficients {dump_json(list(coeffs))}"


def render_text(rep: dict) -> str:
    lines = [
        f"input: {rep['input']['source']} ({rep['input']['dimension']}x{rep['input']['dimension']}, mode {rep['mode']})",
        "tolerances: " + ", ".join(f"{k}={_fmt_float(v)}" for k, v in rep["tolerances"].items()),
        "families: " + (", ".join(rep["families"]) if rep["families"] else "(none detected)"),
    ]
    for e in rep["closed_forms"]:
        lines.append(f"[{e['family']}]")
        if e["error"]:
            lines.append(f"  error: {e['error']}")
            continue
        lines.append("  params: " + ", ".join(f"{k}={dump_json(v)}" for k, v in e["params"].items()))
        lines.append(f"  branch: {e['branch']}")
        lines.append(f"  minimal polynomial: {_poly_text(e['minimal_polynomial'])}")
        lines.append(f"  oracle agreement: {e['agreement']}")
        if e["agreement"] != "match":
            for name, margin in e["margins"].items():
                lines.append(f"    margin {name}: {_fmt_float(margin)}")
    o = rep["oracle"]
    if o["error"]:
        lines.append(f"oracle: error: {o['error']}")
    else:
        lines.append(f"oracle: {_poly_text(o['minimal_polynomial'])} (residual {_fmt_float(o['residual'])})")
    lines.append(f"minimal polynomial: {_poly_text(rep['minimal_polynomial'])}")
    lines.append(f"verdict: {rep['verdict']}")
    for section in ("jordan", "cayley", "svd", "clifford06", "octonion"):
        if section in rep:
            lines.append(f"{section}:")
            for k, v in rep[section].items():
                lines.append(f"  {k}: {dump_json(v) if not isinstance(v, str) else v}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ main


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; exit 2 is reserved for "no family detected"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="quatminpoly", description="Minimal polynomials of structured matrices.")
    sub = ap.add_subparsers(dest="command", required=True)
    an = sub.add_parser("analyze", help="analyse one matrix and print a report")
    an.add_argument("--input", help="matrix file (.json or .csv)")
    an.add_argument("--format", choices=["json", "csv"], help="input format; inferred from the extension by default")
    an.add_argument("--family", default="auto", choices=["auto"] + [t.value for t in FAMILY_ORDER])
    an.add_argument("--tol", type=float, default=1e-9, help="family membership tolerance")
    an.add_argument("--branch-tol", type=float, default=1e-9, help="closed-form branch decision tolerance")
    an.add_argument("--jordan", action="store_true", help="Jordan structure of a skew-Hamiltonian input")
    an.add_argument("--cayley", action="store_true", help="Cayley transform of a skew-Hamiltonian input")
    mode = an.add_mutually_exclusive_group()
    mode.add_argument("--svd3", action="store_true", help="3x3 singular values via the symmetric 4x4 route")
    mode.add_argument("--clifford06", action="store_true", help="8x8 antisymmetric matrix as a Cl(0,6) element")
    mode.add_argument("--octonion", metavar="SPEC", help='"a1w,a1x,...,a2z [times b1w,...,b2z]"')
    an.add_argument("--report", choices=["json", "text"], default="text")
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.octonion is not None:
            a, b = parse_octonions(args.octonion)
            rep = analyze_octonion(a, b, source="--octonion")
        else:
            if not args.input:
                raise InputError("--input is required")
            m = read_matrix(args.input, args.format)
            if args.svd3:
                _expect_shape(m, 3, args.input, "--svd3")
                rep = analyze_svd3(m, args.input, args.tol, args.branch_tol)
            elif args.clifford06:
                _expect_shape(m, 8, args.input, "--clifford06")
                rep = analyze_clifford06(m, args.input, args.tol)
            else:
                _expect_shape(m, 4, args.input, "analysis")
                rep = analyze_matrix(m, args.input, args.family, args.tol, args.branch_tol, args.jordan, args.cayley)
    except (InputError, QuatMinpolyError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    out.write(dump_json(rep) + "\n" if args.report == "json" else render_text(rep))
    if not rep["families"] and args.family == "auto":
        return EXIT_NO_FAMILY
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
