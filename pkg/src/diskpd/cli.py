"""Command-line interface.

Subcommands:
  check   read a disk collection from JSON, report admissibility, overlap,
          the positivity verdict with its certificate, and optionally the
          maximal uniform radius scale
  rho     tabulate the maximal radius, its bounds and overlap coefficient
          over a range of n, as text or CSV
  verify  run the built-in verification suites

Exit codes: 0 success, 1 verification failure, 2 usage/schema error,
3 admissibility rejection under --strict-admissible.  All output is
deterministic for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import radius, verify
from .core import (
    DiskCollection,
    Verdict,
    build_q_matrix,
    is_admissible,
    is_positive_definite,
    max_uniform_scale,
    overlap_measure,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INADMISSIBLE = 3


class SchemaError(Exception):
    """Field-targeted error in a collection document."""


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _parse_component(value, where: str):
    """A JSON number, or a string like "3/4" for exact rational input."""
    if isinstance(value, bool):
        raise SchemaError(f"{where}: must be a number or rational string")
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{where}: invalid rational literal {value!r}") from exc
    raise SchemaError(f"{where}: must be a number or rational string")


def parse_collection_document(text: str) -> tuple[DiskCollection, dict]:
    """Parse the JSON collection document; raises SchemaError with the
    offending field path on any violation."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("document: must be a JSON object")
    disks = doc.get("disks")
    if not isinstance(disks, list) or not disks:
        raise SchemaError("disks: must be a non-empty list")
    metadata = doc.get("metadata", {})
    if metadata and not isinstance(metadata, dict):
        raise SchemaError("metadata: must be an object")

    centers = []
    radii = []
    for idx, disk in enumerate(disks):
        where = f"disks[{idx}]"
        if not isinstance(disk, dict):
            raise SchemaError(f"{where}: must be an object")
        center = disk.get("center")
        if not isinstance(center, list) or len(center) != 2:
            raise SchemaError(f"{where}.center: must be a [re, im] pair")
        re = _parse_component(center[0], f"{where}.center[0]")
        im = _parse_component(center[1], f"{where}.center[1]")
        if "radius" not in disk:
            raise SchemaError(f"{where}.radius: missing")
        rad = _parse_component(disk["radius"], f"{where}.radius")
        if not float(rad) > 0:
            raise SchemaError(f"{where}.radius: must be positive")
        centers.append((re, im))
        radii.append(rad)
    try:
        collection = DiskCollection(centers, radii)
    except ValueError as exc:
        raise SchemaError(f"disks: {exc}") from exc
    return collection, metadata


def _certificate_payload(report) -> dict:
    payload: dict = {"tolerance": report.tolerance_used}
    if report.pivots is not None:
        payload["pivots"] = list(report.pivots)
    if report.minors is not None:
        payload["leading_minors"] = [str(m) for m in report.minors]
    if report.failing_index is not None:
        payload["failing_index"] = report.failing_index
    return payload


def cmd_check(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        collection, _ = parse_collection_document(text)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    admissible = is_admissible(collection)
    if args.strict_admissible and not admissible:
        print("error: collection is not admissible (--strict-admissible)", file=sys.stderr)
        return EXIT_INADMISSIBLE

    mode = args.mode
    if mode == "auto":
        mode = "exact" if collection.is_exact else "floating"
    if mode == "exact" and not collection.is_exact:
        print("error: exact mode needs rational centers and radii", file=sys.stderr)
        return EXIT_USAGE

    matrix = build_q_matrix(collection)
    report = is_positive_definite(matrix, mode=mode, tol=args.tol)
    beta = overlap_measure(collection) if collection.n >= 2 else None
    scale = max_uniform_scale(collection) if args.scale else None

    if args.format == "json":
        payload = {
            "n": collection.n,
            "exact_input": collection.is_exact,
            "admissible": admissible,
            "beta": None if beta is None else float(_fmt(beta)),
            "mode": mode,
            "verdict": report.verdict.value,
            "certificate": _certificate_payload(report),
        }
        if scale is not None:
            payload["max_uniform_scale"] = float(_fmt(scale))
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"disks:       {collection.n} (exact input: {'yes' if collection.is_exact else 'no'})")
        print(f"admissible:  {'yes' if admissible else 'no'}")
        if beta is not None:
            print(f"beta:        {_fmt(beta)}")
        print(f"verdict:     {report.verdict.value} (mode={mode})")
        if report.pivots is not None:
            print(f"pivots:      {' '.join(_fmt(p) for p in report.pivots)}")
        if report.minors is not None:
            print(f"minors:      {' '.join(str(m) for m in report.minors)}")
        if report.failing_index is not None:
            print(f"failing idx: {report.failing_index}")
        if scale is not None:
            print(f"max scale:   {_fmt(scale)}")
    return EXIT_OK


_RHO_COLUMNS = ("n", "rho", "mu", "lower_bound", "upper_bound", "beta", "n_rho")


def _rho_rows(ns, precision):
    rows = []
    for n in ns:
        res = radius.maximal_radius(n, precision)
        rows.append(
            (
                str(n),
                _fmt(res.rho),
                _fmt(res.mu),
                _fmt(res.lower_bound),
                _fmt(res.upper_bound),
                _fmt(res.beta),
                _fmt(n * res.rho),
            )
        )
    return rows


def cmd_rho(args) -> int:
    if args.n is not None:
        ns = [args.n]
    else:
        try:
            lo_text, hi_text = args.n_range.split(":", 1)
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            print(f"error: invalid range {args.n_range!r}, expected LO:HI", file=sys.stderr)
            return EXIT_USAGE
        if lo > hi:
            print(f"error: empty range {args.n_range!r}", file=sys.stderr)
            return EXIT_USAGE
        ns = list(range(lo, hi + 1))
    if any(n < 2 for n in ns):
        print("error: n must be at least 2", file=sys.stderr)
        return EXIT_USAGE

    rows = _rho_rows(ns, args.precision)
    if args.limits:
        j11 = radius.bessel_j1_first_zero()
        rows.append(("limit", "", "", "", "", _fmt(j11 / math.pi), _fmt(j11)))

    if args.csv:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(_RHO_COLUMNS)
        writer.writerows(rows)
        sys.stdout.write(buffer.getvalue())
    else:
        widths = [
            max(len(col), max(len(row[i]) for row in rows))
            for i, col in enumerate(_RHO_COLUMNS)
        ]
        print("  ".join(col.rjust(widths[i]) for i, col in enumerate(_RHO_COLUMNS)))
        for row in rows:
            print("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    for name in names:
        suite = verify.SUITES[name]
        kwargs = {}
        if name in ("core", "orthopoly", "symmetric", "triangle"):
            kwargs["seed"] = args.seed
        if args.nmax is not None and name in ("symmetric", "orthopoly", "radius"):
            kwargs["nmax"] = max(2, args.nmax)
        if args.nmax is not None and name == "core":
            kwargs["nmax"] = max(2, min(args.nmax, 8))
        for result in suite(**kwargs):
            if result.informational:
                tag = "INFO"
            elif result.passed:
                tag = "PASS"
            else:
                tag = "FAIL"
                failures += 1
            line = f"{tag} {result.name}"
            if result.detail:
                line += f": {result.detail}"
            print(line)
    total = "ok" if failures == 0 else f"{failures} failure(s)"
    print(f"verify: {total}")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskpd",
        description="Positive definiteness of disk collections and maximal n-gon radii",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check a JSON disk collection")
    p_check.add_argument("input", help="path to a JSON document, or - for stdin")
    p_check.add_argument(
        "--mode",
        choices=("auto", "floating", "exact"),
        default="auto",
        help="decision arithmetic (auto: exact when the input is rational)",
    )
    p_check.add_argument("--tol", type=float, default=1e-10, help="floating pivot tolerance")
    p_check.add_argument(
        "--scale", action="store_true", help="also compute the maximal uniform radius scale"
    )
    p_check.add_argument(
        "--strict-admissible",
        action="store_true",
        help="reject non-admissible collections with exit code 3",
    )
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=cmd_check)

    p_rho = sub.add_parser("rho", help="maximal radius table")
    group = p_rho.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="single n")
    group.add_argument("--n-range", help="inclusive range LO:HI")
    p_rho.add_argument("--precision", type=float, default=1e-13)
    p_rho.add_argument("--csv", action="store_true", help="emit CSV instead of a table")
    p_rho.add_argument(
        "--limits", action="store_true", help="append the Bessel-zero limit row"
    )
    p_rho.set_defaults(func=cmd_rho)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument(
        "--suite",
        choices=tuple(verify.SUITES) + ("all",),
        default="all",
    )
    p_verify.add_argument("--nmax", type=int, default=None, help="cap the symmetric/orthopoly/radius ranges")
    p_verify.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; normalize for callers
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
