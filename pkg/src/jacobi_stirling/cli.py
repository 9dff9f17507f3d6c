"""Command-line front end: ``table``, ``enumerate`` and ``verify``.

Exit status is 0 on success, 1 when a verification check fails and 2 on a
usage error (bad arguments or an enumeration bound exceeded).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import models
from .checks import SCOPES, run_suite
from .exactmath import IntPoly
from .models import BoundError
from .triangles import TRIANGLE_KINDS, IntTriangle, PolyTriangle, build_triangle

FAMILIES = ("signed", "quasipair", "triple", "firstkind", "riordan", "oddpart")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- triangle serialisation ---------------------------------------------------------

def _cell_json(value):
    if isinstance(value, IntPoly):
        return [str(c) for c in value.coeffs]
    return str(value)


def triangle_to_json(tri, z: Fraction | None = None) -> str:
    """One JSON document; polynomial cells are lists of decimal strings, lowest degree first."""
    rows = []
    for row in tri.rows:
        if z is not None and isinstance(tri, PolyTriangle):
            rows.append([str(p(z)) for p in row])
        else:
            rows.append([_cell_json(v) for v in row])
    doc = {"kind": tri.name, "nmax": tri.nmax, "rows": rows}
    if z is not None:
        doc["z"] = str(z)
    return json.dumps(doc, separators=(",", ":")) + "\n"


def triangle_from_json(text: str):
    """Inverse of :func:`triangle_to_json` for unevaluated triangles."""
    doc = json.loads(text)
    if "z" in doc:
        raise ValueError("evaluated tables do not carry polynomials")
    rows = doc["rows"]
    if rows and isinstance(rows[0][0], list):
        cells = tuple(tuple(IntPoly(int(c) for c in cell) for cell in row) for row in rows)
        return PolyTriangle(doc["kind"], doc["nmax"], cells)
    return IntTriangle(doc["kind"], doc["nmax"], tuple(tuple(int(c) for c in row) for row in rows))


def triangle_to_csv(tri, z: Fraction | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "k", "value"])
    for n, k, value in tri.cells():
        if isinstance(value, IntPoly):
            cell = str(value(z)) if z is not None else ";".join(str(c) for c in value.coeffs)
        else:
            cell = str(value)
        writer.writerow([n, k, cell])
    return buf.getvalue()


def triangle_to_text(tri, z: Fraction | None = None) -> str:
    lines = []
    for n, k, value in tri.cells():
        if isinstance(value, IntPoly) and z is not None:
            value = value(z)
        lines.append(f"{tri.name}({n},{k}) = {value}")
    return "\n".join(lines) + "\n"


def cmd_table(kind: str, nmax: int, fmt: str = "json", z: Fraction | None = None) -> str:
    if kind not in TRIANGLE_KINDS:
        raise UsageError(f"unknown kind {kind!r}; choose from {', '.join(TRIANGLE_KINDS)}")
    if nmax < 0:
        raise UsageError("nmax must be >= 0")
    tri = build_triangle(kind, nmax)
    if z is not None and isinstance(tri, IntTriangle):
        raise UsageError(f"--z only applies to polynomial triangles, not {kind}")
    writers = {"json": triangle_to_json, "csv": triangle_to_csv, "text": triangle_to_text}
    return writers[fmt](tri, z)


# -- enumeration ---------------------------------------------------------------------

def _family_objects(family: str, n: int, k: int, i: int | None):
    """Yield ``(i_value, object)`` in canonical order."""
    per_i = range(n - k + 1) if i is None else [i]
    if family == "signed":
        for p in models.enum_signed_partitions(n, k):
            if i is None or p.i == i:
                yield p.i, p
    elif family == "quasipair":
        for ii in per_i:
            for q1, q2 in models.enum_quasiperm_pairs(n, k, ii):
                yield ii, (q1, q2)
    elif family == "triple":
        for ii in per_i:
            for t in models.enum_partition_triples(n, k, ii):
                yield ii, t
    elif family == "firstkind":
        for ii in per_i:
            for pair in models.enum_first_kind_pairs(n, k, ii):
                yield ii, pair
    elif family == "riordan":
        for c in models.enum_riordan_complexes(n, k):
            yield None, c
    elif family == "oddpart":
        for p in models.list_odd_partitions(n, k):
            yield None, p


def _serialize(obj):
    if isinstance(obj, tuple) and len(obj) == 2 and isinstance(obj[0], models.QuasiPerm):
        return [obj[0].serialize(), obj[1].serialize()]
    if hasattr(obj, "serialize"):
        return obj.serialize()
    return [list(b) for b in obj]


def cmd_enumerate(family: str, n: int, k: int, i: int | None = None, fmt: str = "json"):
    """Yield output lines: one object per line, then a count record."""
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if fmt not in ("json", "text"):
        raise UsageError("enumerate supports --format json or text")
    if i is not None and family in ("riordan", "oddpart"):
        raise UsageError(f"--i does not apply to family {family}")
    low = 0 if family in ("riordan", "oddpart") else 1
    if not low <= k <= n:
        raise UsageError(f"need {low} <= k <= n")
    if i is not None and not 0 <= i <= n - k:
        raise UsageError("need 0 <= i <= n - k")
    count = 0
    for ii, obj in _family_objects(family, n, k, i):
        count += 1
        data = _serialize(obj)
        if fmt == "json":
            yield json.dumps(data, separators=(",", ":"))
        else:
            prefix = "" if ii is None else f"i={ii} "
            text = str(obj) if isinstance(obj, (models.SignedPartition, models.RiordanComplex)) \
                else json.dumps(data, separators=(",", ":"))
            yield prefix + text
    record = {"family": family, "n": n, "k": k, "i": i, "count": count}
    yield json.dumps(record, separators=(",", ":")) if fmt == "json" else f"count={count}"


def cmd_verify(scope: str, nmax: int, jobs: int = 1) -> tuple[bool, str]:
    reports = run_suite(scope, nmax, jobs)
    lines = [r.line() for r in reports]
    passed = all(r.ok for r in reports)
    n_ok = sum(r.ok for r in reports)
    lines.append(f"{'OK' if passed else 'FAILED'}: {n_ok}/{len(reports)} checks passed "
                 f"(scope={scope}, nmax={nmax})")
    return passed, "\n".join(lines) + "\n"


# -- argument parsing ------------------------------------------------------------------

def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="jacobi-stirling",
        description="Jacobi-Stirling triangles, their combinatorial models, and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="print a number triangle")
    p.add_argument("--kind", required=True, choices=TRIANGLE_KINDS)
    p.add_argument("--nmax", type=int, default=30)
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
    p.add_argument("--z", type=_rational, default=None,
                   help="evaluate polynomial entries at this rational z")

    p = sub.add_parser("enumerate", parents=[common], help="list a combinatorial family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    p = sub.add_parser("verify", parents=[common], help="run the identity and model checks")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for independent checks")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "table":
            _emit(cmd_table(args.kind, args.nmax, args.fmt, args.z), args.out)
            return EXIT_OK
        if args.command == "enumerate":
            lines = list(cmd_enumerate(args.family, args.n, args.k, args.i, args.fmt))
            _emit("\n".join(lines) + "\n", args.out)
            return EXIT_OK
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        if args.nmax < 0:
            raise UsageError("--nmax must be >= 0")
        passed, text = cmd_verify(args.scope, args.nmax, args.jobs)
        _emit(text, args.out)
        return EXIT_OK if passed else EXIT_FAIL
    except (UsageError, BoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
