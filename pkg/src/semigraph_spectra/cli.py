"""Command-line interface: ``semispec <command> ...``.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 I/O
error, 2 invalid input (including bounds on a disconnected semigraph),
3 eigensolver non-convergence.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .bounds import BoundsError, bounds_report
from .core import (
    Semigraph,
    SemigraphError,
    VertexClass,
    edge_census,
    emit_semigraph,
    is_connected,
    parse_semigraph,
)
from .families import ClosedFormSpectrum, gen_star, gen_tree3, star_spectrum_closed, tree3_spectrum_closed
from .matrix import SymmetricQMatrix, degrees, laplacian
from .spectra import (
    CLUSTER_GAP,
    CONNECTIVITY_TOL,
    DEFAULT_TOL,
    ConvergenceError,
    Spectrum,
    charpoly_exact,
    eigenvalues_sym,
)

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_NUMERIC = 0, 1, 2, 3
SIG_DIGITS = 12


def fmt_float(x: float, zero: float = 0.0) -> float:
    """Round to 12 significant digits; magnitudes at or below ``zero`` print as 0."""
    if abs(x) <= zero:
        return 0.0
    return float(f"{x:.{SIG_DIGITS}g}")


def fmt_rational(x: Fraction) -> str:
    return str(Fraction(x))


def matrix_json(m: SymmetricQMatrix) -> list[list[str]]:
    """Exact entries as ``"p/4"`` strings."""
    return [[f"{int(q)}/4" for q in row] for row in m.quarters]


def matrix_csv(m: SymmetricQMatrix, labels: Sequence[str], precision: int = SIG_DIGITS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(labels))
    for label, row in zip(labels, m.real):
        writer.writerow([label] + [f"{x:.{precision}g}" for x in row])
    return buf.getvalue()


def spectrum_json(spec: Spectrum) -> dict[str, Any]:
    zero = spec.tol * max(1.0, abs(spec.largest)) * len(spec)
    return {
        "values": [fmt_float(v, zero) for v in spec.values],
        "tol": spec.tol,
        "multiplicity_clusters": [[fmt_float(v, zero), k] for v, k in spec.clusters(CLUSTER_GAP)],
    }


def bounds_json(g: Semigraph, variant: str = "proof", tol: float = CONNECTIVITY_TOL) -> dict[str, Any]:
    r = bounds_report(g, variant, tol)
    return {
        "delta": fmt_rational(r.delta),
        "lower": fmt_rational(r.lower),
        "upper_literal": fmt_rational(r.upper_literal),
        "upper_proof": fmt_rational(r.upper_proof),
        "lambda_n": fmt_float(r.lambda_n),
        "lower_ok": r.lower_ok,
        "upper_ok": r.upper_ok,
        "argmax_pair": [g.labels[r.argmax_pair[0]], g.labels[r.argmax_pair[1]]],
    }


def charpoly_json(m: SymmetricQMatrix) -> dict[str, Any]:
    """Coefficients of ``det(lambda I - M)`` in ascending powers."""
    return {"coefficients": [fmt_rational(c) for c in charpoly_exact(m).coefficients]}


def closed_json(c: ClosedFormSpectrum) -> dict[str, Any]:
    return {
        "fixed": [
            {"value": str(v), "approx": fmt_float(float(v)), "multiplicity": k} for v, k in c.fixed
        ],
        "residual": [fmt_rational(x) for x in c.residual],
        "values": [fmt_float(v) for v in c.values()],
    }


def build_report(g: Semigraph, tol: float = DEFAULT_TOL) -> dict[str, Any]:
    lap = laplacian(g)
    spec = eigenvalues_sym(lap, tol)
    lam2 = spec.values[1]
    spectral = lam2 > CONNECTIVITY_TOL * max(1.0, spec.largest)
    classes = Counter(c.value for c in g.vertex_classes)
    m1, m2, m3, m4 = edge_census(g)
    connected = is_connected(g)
    report: dict[str, Any] = {
        "n": g.n,
        "m": g.m,
        "census": {"m1": m1, "m2": m2, "m3": m3, "m4": m4},
        "vertex_classes": {c.value: classes.get(c.value, 0) for c in VertexClass},
        "vertices": list(g.labels),
        "degrees": [fmt_rational(d) for d in degrees(g)],
        "trace": fmt_rational(lap.trace()),
        "laplacian": matrix_json(lap),
        "spectrum": spectrum_json(spec),
        "connectivity": {
            "combinatorial": connected,
            "spectral": spectral,
            "lambda2": fmt_float(lam2, spec.tol * max(1.0, spec.largest) * g.n),
        },
        "bounds": bounds_json(g) if connected and g.m else None,
    }
    return report


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> Semigraph:
    return parse_semigraph(_read(path))


def cmd_validate(args) -> int:
    g = _load(args.path)
    m1, m2, m3, m4 = edge_census(g)
    sys.stdout.write(f"valid semigraph: n={g.n} m={g.m} census=({m1},{m2},{m3},{m4})\n")
    return EXIT_OK


def cmd_report(args) -> int:
    g = _load(args.path)
    if args.csv:
        sys.stdout.write(matrix_csv(laplacian(g), g.labels, args.precision))
    else:
        sys.stdout.write(_dump(build_report(g, args.tol)))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    g = _load(args.path)
    sys.stdout.write(_dump(spectrum_json(eigenvalues_sym(laplacian(g), args.tol))))
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load(args.path)
    sys.stdout.write(_dump(bounds_json(g, args.variant)))
    return EXIT_OK


def cmd_charpoly(args) -> int:
    g = _load(args.path)
    sys.stdout.write(_dump(charpoly_json(laplacian(g))))
    return EXIT_OK


GENERATORS = {
    "star": (gen_star, star_spectrum_closed),
    "tree3": (gen_tree3, tree3_spectrum_closed),
}


def cmd_gen(args) -> int:
    make, closed = GENERATORS[args.family]
    g = make(args.n)
    if args.spectrum is None:
        sys.stdout.write(emit_semigraph(g))
        return EXIT_OK
    out: dict[str, Any] = {}
    if args.spectrum in ("closed", "both"):
        out["closed"] = closed_json(closed(args.n))
    if args.spectrum in ("numeric", "both"):
        out["numeric"] = spectrum_json(eigenvalues_sym(laplacian(g), args.tol))
    if args.spectrum == "both":
        exact = closed(args.n).values()
        numeric = eigenvalues_sym(laplacian(g), args.tol).values
        out["max_deviation"] = float(f"{max(abs(a - b) for a, b in zip(exact, numeric)):.3e}")
    sys.stdout.write(_dump(out if args.spectrum == "both" else out[next(iter(out))]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semispec", description="Laplacian spectra of semigraphs.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check a semigraph file")
    p.add_argument("path", help="semigraph file, or - for stdin")

    p = add("report", cmd_report, "full analysis as JSON (or the Laplacian as CSV)")
    p.add_argument("path")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true", help="Laplacian as CSV")
    p.add_argument("--precision", type=int, default=SIG_DIGITS, help="CSV significant digits")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigensolver tolerance")

    p = add("spectrum", cmd_spectrum, "Laplacian eigenvalues as JSON")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = add("bounds", cmd_bounds, "largest-eigenvalue bounds as JSON")
    p.add_argument("path")
    p.add_argument("--variant", choices=("literal", "proof"), default="proof")

    p = add("charpoly", cmd_charpoly, "exact characteristic polynomial of L")
    p.add_argument("path")

    p = add("gen", cmd_gen, "generate a star or 3-uniform tree semigraph")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--spectrum", choices=("closed", "numeric", "both"))
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    source = getattr(args, "path", None) or "<stdin>"
    if source == "-":
        source = "<stdin>"
    try:
        return args.func(args)
    except OSError as exc:
        print(f"{source}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SemigraphError as exc:
        where = f":{exc.line}" if exc.line is not None else ""
        where += f":{exc.column}" if exc.column is not None else ""
        print(f"{source}{where}: error: {exc.message}", file=sys.stderr)
        return EXIT_INVALID
    except BoundsError as exc:
        print(f"{source}: error: {exc} (the bounds assume a connected semigraph with at least one edge)",
              file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"{source}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConvergenceError as exc:
        print(f"{source}: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
