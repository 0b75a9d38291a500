"""Command-line surface: reproducible experiment runs with JSON/CSV reports.

Exit codes: 0 pass, 1 property failure, 2 input error, 3 precondition
violation, 4 characterization-negative.  Identical configuration and seed
produce byte-identical reports; files are written atomically.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
import tempfile
from fractions import Fraction

from . import characterization as chz
from . import geometry, hilbert_cube, simplex_measures, witness
from .lp import LpInputError
from .rationals import parse_vector

EXIT_PASS = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_NEGATIVE = 4

_INPUT_ERRORS = (
    geometry.GeometryInputError,
    witness.MeasureInputError,
    simplex_measures.SimplexInputError,
    hilbert_cube.CubeInputError,
    LpInputError,
    json.JSONDecodeError,
    ValueError,
    OSError,
)


def _thread_cap() -> int | None:
    raw = os.environ.get("BARYLAB_THREADS")
    if not raw:
        return None
    cap = int(raw)
    if cap < 1:
        raise ValueError("BARYLAB_THREADS must be >= 1")
    return cap


def _emit(report: dict | str, out_path: str | None) -> None:
    text = (
        report
        if isinstance(report, str)
        else json.dumps(report, sort_keys=True, indent=2) + "\n"
    )
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".barylab-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_polytope(path: str) -> geometry.Polytope:
    with open(path) as handle:
        return geometry.polytope_from_json(json.load(handle))


def _parse_sweep(text: str) -> list[int]:
    text = text.strip()
    if ":" in text:
        lo, hi = text.split(":", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(p) for p in text.split(",") if p.strip()]
    if not values or any(v < 1 for v in values):
        raise ValueError(f"invalid sweep spec: {text!r}")
    return values


def _csv_table(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def cmd_characterize(args: argparse.Namespace) -> int:
    poly = _load_polytope(args.input)
    a = parse_vector(args.point)
    report = chz.characterize(poly, a, max_workers=_thread_cap())
    _emit(chz.report_to_json(report), args.out)
    return EXIT_PASS


def cmd_witness(args: argparse.Namespace) -> int:
    poly = _load_polytope(args.input)
    a = parse_vector(args.point)
    resolution = args.grid_resolution

    def run(pairs: int) -> tuple[dict, witness.DiscreteMeasure]:
        mu = witness.construct_witness(poly, a, pairs)
        radius = geometry.covering_radius(mu.atoms, poly, resolution)
        summary = {
            "pairs": pairs,
            "barycenter_exact_match": witness.barycenter(mu) == a,
            "atoms_in_M": all(geometry.contains(poly, atom) for atom in mu.atoms),
            "covering_radius": radius,
        }
        return summary, mu

    if args.sweep:
        counts = _parse_sweep(args.sweep)
        results = [run(n)[0] for n in counts]
        if args.format == "csv":
            rows = [[str(r["pairs"]), repr(r["covering_radius"])] for r in results]
            _emit(_csv_table(["pairs", "covering_radius"], rows), args.out)
        else:
            _emit({"point": args.point, "sweep": results}, args.out)
        ok = all(r["barycenter_exact_match"] and r["atoms_in_M"] for r in results)
        return EXIT_PASS if ok else EXIT_PROPERTY_FAILURE

    if args.format == "csv":
        raise ValueError("csv output is only available for --sweep tables")
    summary, mu = run(args.pairs)
    report = dict(summary)
    report["measure"] = witness.measure_to_json(mu)
    _emit(report, args.out)
    ok = summary["barycenter_exact_match"] and summary["atoms_in_M"]
    return EXIT_PASS if ok else EXIT_PROPERTY_FAILURE


def cmd_hilbert(args: argparse.Namespace) -> int:
    if args.sweep:
        dims = _parse_sweep(args.sweep)
        rows = [(d, hilbert_cube.cube_alpha_max(d)) for d in dims]
        if args.format == "csv":
            table = [[str(d), str(alpha)] for d, alpha in rows]
            _emit(_csv_table(["d", "alpha_max"], table), args.out)
        else:
            _emit(
                {"sweep": [{"d": d, "alpha_max": [alpha.numerator, alpha.denominator]} for d, alpha in rows]},
                args.out,
            )
        return EXIT_PASS
    if args.format == "csv":
        raise ValueError("csv output is only available for --sweep tables")
    report = hilbert_cube.cube_report(args.dim, args.seed, args.samples)
    allowed = math.ceil(0.01 * args.dim)
    report["pass"] = report["coordinates_outside_tolerance"] <= allowed
    _emit(report, args.out)
    return EXIT_PASS if report["pass"] else EXIT_PROPERTY_FAILURE


def cmd_simplex(args: argparse.Namespace) -> int:
    mu = parse_vector(args.mu)
    if args.m is not None and args.m != len(mu):
        raise ValueError("--m disagrees with the length of --mu")
    report = simplex_measures.simplex_report(
        mu,
        depth=args.depth,
        lambda_atoms=args.lambda_atoms,
        seed=args.seed,
        count=args.samples,
        grid_resolution=args.grid_resolution,
    )
    _emit(report, args.out)
    if not report["full_support_target"]:
        return EXIT_NEGATIVE
    if not report["barycenter_within_tolerance"]:
        return EXIT_PROPERTY_FAILURE
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barylab",
        description="Decide and construct full-support barycenter witnesses on polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("characterize", help="relative-interior and vertex-prolongation verdicts for a point")
    p_char.add_argument("--input", required=True, help="polytope JSON path")
    p_char.add_argument("--point", required=True, help="query point, rationals like 1/2,0,-3/4")
    p_char.add_argument("--out", default=None)
    p_char.set_defaults(func=cmd_characterize)

    p_wit = sub.add_parser("witness", help="construct and verify a witness measure")
    p_wit.add_argument("--input", required=True, help="polytope JSON path")
    p_wit.add_argument("--point", required=True)
    p_wit.add_argument("--pairs", type=int, default=16)
    p_wit.add_argument("--sweep", default=None, help="pair counts, e.g. 16,64,256")
    p_wit.add_argument("--grid-resolution", type=int, default=16)
    p_wit.add_argument("--format", choices=("json", "csv"), default="json")
    p_wit.add_argument("--out", default=None)
    p_wit.set_defaults(func=cmd_witness)

    p_hil = sub.add_parser("hilbert", help="shrinking-box truncation report")
    p_hil.add_argument("--dim", type=int, default=10)
    p_hil.add_argument("--seed", type=int, default=0)
    p_hil.add_argument("--samples", type=int, default=100_000)
    p_hil.add_argument("--sweep", default=None, help="dimensions, e.g. 1:200")
    p_hil.add_argument("--format", choices=("json", "csv"), default="json")
    p_hil.add_argument("--out", default=None)
    p_hil.set_defaults(func=cmd_hilbert)

    p_sim = sub.add_parser("simplex", help="pushforward sampling report on the probability simplex")
    p_sim.add_argument("--m", type=int, default=None)
    p_sim.add_argument("--mu", required=True, help="target distribution, e.g. 1/2,1/3,1/6")
    p_sim.add_argument("--depth", type=int, default=32)
    p_sim.add_argument("--lambda-atoms", type=int, default=64)
    p_sim.add_argument("--samples", type=int, default=100_000)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--grid-resolution", type=int, default=20)
    p_sim.add_argument("--out", default=None)
    p_sim.set_defaults(func=cmd_simplex)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except chz.PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except witness.NoWitnessError as exc:
        print(f"no witness exists: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except _INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
