"""Command-line front end.

Subcommands: ``dist`` (scalar dissimilarities between matrix/simplex files),
``geodesic`` (sampled constant-speed paths as JSON lines), ``verify`` (the
inequality/invariant report), ``gen`` (random instance files) and ``bicone``
(Cartesian chart coordinates of 2x2 bicone elements as CSV).

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 domain error. Scalars print with 17 significant digits.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .airm import airm_distance, airm_geodesic, airm_pushed
from .barrier import bregman_bilogdet, bregman_logdet
from .bounds import VerifyConfig, bounds_report, sample_simplex, sample_spd, sample_vpm
from .domain import SimplexPoint, SpdMatrix, VpmMatrix, bicone_coords
from .errors import GeometryError, ParseError
from .hilbert import (
    GeodesicSpec,
    hilbert_distance,
    hilbert_geodesic,
    projective_distance,
    simplex_distance,
    simplex_geodesic,
)
from .serialize import (
    canonical_json,
    format_float,
    load_matrix,
    load_simplex,
    matrix_to_obj,
    parse_matrix_obj,
    save_matrix,
    save_simplex,
    simplex_to_obj,
)

_MATRIX_METRICS = {
    "hilbert": ("vpm", lambda a, b: hilbert_distance(a, b)),
    "airm": ("spd", lambda a, b: airm_distance(a, b)),
    "airm_pushed": ("vpm", lambda a, b: airm_pushed(a, b)),
    "bilogdet": ("vpm", lambda a, b: bregman_bilogdet(a, b)),
    "logdet": ("spd", lambda a, b: bregman_logdet(a, b)),
    "projective": ("spd", lambda a, b: projective_distance(a, b)),
}


def _load_typed(path: str, kind: str):
    if kind == "simplex":
        return SimplexPoint(load_simplex(path))
    mat = load_matrix(path)
    return VpmMatrix(mat) if kind == "vpm" else SpdMatrix(mat)


def _cmd_dist(args) -> int:
    if args.metric == "simplex":
        a = _load_typed(args.file_a, "simplex")
        b = _load_typed(args.file_b, "simplex")
        value = simplex_distance(a, b)
    else:
        kind, fn = _MATRIX_METRICS[args.metric]
        value = fn(_load_typed(args.file_a, kind), _load_typed(args.file_b, kind))
    if args.format == "csv":
        print("metric,value")
        print(f"{args.metric},{format_float(value)}")
    else:
        print(format_float(value))
    return 0


def _cmd_geodesic(args) -> int:
    if args.samples < 2:
        print("error: --samples must be at least 2", file=sys.stderr)
        return 2
    svals = [k / (args.samples - 1) for k in range(args.samples)]
    lines: list[str] = []
    if args.space == "hilbert_simplex":
        p = _load_typed(args.file_a, "simplex")
        q = _load_typed(args.file_b, "simplex")
        for s in svals:
            lines.append(canonical_json(simplex_to_obj(simplex_geodesic(p, q, s))))
    elif args.space == "hilbert_vpm":
        a = _load_typed(args.file_a, "vpm")
        b = _load_typed(args.file_b, "vpm")
        spec = GeodesicSpec(a, b)
        for s in svals:
            lines.append(
                canonical_json(matrix_to_obj(hilbert_geodesic(spec, s).mat))
            )
    else:
        a = _load_typed(args.file_a, "spd")
        b = _load_typed(args.file_b, "spd")
        for s in svals:
            lines.append(canonical_json(matrix_to_obj(airm_geodesic(a, b, s).mat)))
    print("\n".join(lines))
    return 0


def _parse_ns(text: str) -> tuple[int, ...]:
    try:
        ns = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse dimension list {text!r}: {exc}") from exc
    if not ns or any(n < 1 for n in ns):
        raise ParseError(f"dimension list must contain positive integers: {text!r}")
    return ns


def _cmd_verify(args) -> int:
    config = VerifyConfig(
        suite=args.suite,
        ns=_parse_ns(args.n),
        trials=args.trials,
        seed=args.seed,
    )
    report = bounds_report(config)
    payload = canonical_json(report.to_dict()) + "\n"
    sys.stdout.write(payload)
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    if args.figures is not None:
        from . import plots

        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        stem = Path(args.out).stem if args.out else "verify_report"
        written = [
            plots.plot_report_margins(report, fig_dir / f"{stem}_margins.png"),
            plots.plot_report_sequences(report, fig_dir / f"{stem}_sequences.png"),
        ]
        for path in written:
            print(f"figure: {path}", file=sys.stderr)
    return 0 if report.all_pass else 1


def _cmd_gen(args) -> int:
    if args.n < 1 or (args.kind == "simplex" and args.n < 2):
        print(f"error: invalid dimension {args.n} for kind {args.kind}", file=sys.stderr)
        return 2
    if args.count < 1:
        print("error: --count must be positive", file=sys.stderr)
        return 2
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        rng = np.random.default_rng((args.seed, i))
        path = out_dir / f"{args.kind}_n{args.n}_{i:03d}.json"
        if args.kind == "spd":
            save_matrix(path, sample_spd(args.n, rng))
        elif args.kind == "vpm":
            save_matrix(path, sample_vpm(args.n, rng, near_boundary=args.near_boundary))
        else:
            save_simplex(path, sample_simplex(args.n, rng))
        print(path)
    return 0


def _read_bicone_stream(source: str) -> list[np.ndarray]:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc
    text = text.strip()
    if not text:
        raise ParseError("empty bicone input")
    import json as _json

    try:
        return [parse_matrix_obj(_json.loads(text))]
    except (ParseError, _json.JSONDecodeError):
        pass
    mats = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            mats.append(parse_matrix_obj(_json.loads(line)))
        except _json.JSONDecodeError as exc:
            raise ParseError(f"line {line_no} is not valid JSON: {exc}") from exc
    return mats


def _cmd_bicone(args) -> int:
    mats = _read_bicone_stream(args.file)
    rows = []
    for mat in mats:
        coords = bicone_coords(VpmMatrix(mat))
        rows.append(coords.cartesian())
    lines = ["x,y,z"]
    lines += [",".join(format_float(c) for c in row) for row in rows]
    payload = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    if args.figures is not None:
        from . import plots

        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        stem = Path(args.out).stem if args.out else "bicone"
        path = plots.plot_bicone_points(np.array(rows), fig_dir / f"{stem}.png")
        print(f"figure: {path}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spdbicone",
        description="Distances, divergences, geodesics and verification "
        "suites on the SPD cone and the open bicone 0 < X < I.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="scalar dissimilarity between two files")
    p.add_argument(
        "--metric",
        required=True,
        choices=[*_MATRIX_METRICS, "simplex"],
    )
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("geodesic", help="sample a constant-speed geodesic")
    p.add_argument(
        "--space", required=True, choices=["hilbert_vpm", "hilbert_simplex", "airm"]
    )
    p.add_argument("--samples", type=int, default=11)
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(fn=_cmd_geodesic)

    p = sub.add_parser("verify", help="run verification suites, emit JSON report")
    p.add_argument(
        "--suite",
        choices=["all", "hilbert", "barrier", "bounds", "lemmas"],
        default="all",
    )
    p.add_argument("--n", default="1,2,3,4,8", help="comma-separated dimensions")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="also write the report here")
    p.add_argument("--figures", default=None, help="directory for PNG figures")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gen", help="generate random instance files")
    p.add_argument("--kind", required=True, choices=["spd", "vpm", "simplex"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--near-boundary", action="store_true")
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser(
        "bicone", help="Cartesian bicone coordinates of 2x2 elements as CSV"
    )
    p.add_argument("file", help="matrix file, JSON-lines stream, or - for stdin")
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.add_argument("--figures", default=None, help="directory for a PNG figure")
    p.set_defaults(fn=_cmd_bicone)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
