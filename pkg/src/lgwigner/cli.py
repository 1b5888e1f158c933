"""Command-line surface.

Subcommands: ``modes`` and ``beam`` evaluate fields on rectangular grids
and write CSV (optionally a grayscale magnitude image for modes),
``wigner`` evaluates closed forms on grids, slices, or point lists, and
``verify`` runs the identity suites with exit-code semantics.

Exit codes: 0 success (verification passed), 1 verification failure,
2 usage error, 3 I/O failure. All configuration is via flags; the tool
reads no environment variables or config files, so identical invocations
produce identical outputs.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .beam import BeamIndex, BeamParams, beam_field
from .modes import ModeIndex, hg_mode, lg_mode
from .verify import run_suite
from .wigner import PhasePoint4, wigner_hermite_closed, wigner_hg_closed, wigner_lg_closed, wigner_lg_diag

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(ValueError):
    """Invalid arguments or malformed input files."""


def _fmt(value: float) -> str:
    # repr of a Python float is the shortest decimal that round-trips
    return repr(float(value))


def _grid_axes(args) -> tuple[np.ndarray, np.ndarray]:
    if not (args.xmin < args.xmax and args.ymin < args.ymax):
        raise UsageError("grid bounds must satisfy xmin < xmax and ymin < ymax")
    for n in (args.nx, args.ny):
        if not 2 <= n <= 4096:
            raise UsageError("grid counts must lie in [2, 4096]")
    return np.linspace(args.xmin, args.xmax, args.nx), np.linspace(args.ymin, args.ymax, args.ny)


def _write_grid_csv(path: str, xs, ys, values) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("x,y,re,im\n")
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                v = complex(values[i, j])
                fh.write(f"{_fmt(x)},{_fmt(y)},{_fmt(v.real)},{_fmt(v.imag)}\n")


def _write_points_csv(path: str, points, values) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("x1,x2,xi1,xi2,re,im\n")
        for pt, v in zip(points, values):
            v = complex(v)
            coords = ",".join(_fmt(c) for c in pt)
            fh.write(f"{coords},{_fmt(v.real)},{_fmt(v.imag)}\n")


def _write_pgm(path: str, values) -> None:
    """8-bit binary grayscale of |values|, linear from [0, max] to [0, 255].

    Rows scan y from max to min, columns x from min to max.
    """
    mag = np.abs(np.asarray(values))
    peak = mag.max()
    scaled = np.zeros_like(mag) if peak == 0 else mag * (255.0 / peak)
    img = np.rint(scaled).clip(0, 255).astype(np.uint8)
    img = img.T[::-1]  # values[i, j] = f(x_i, y_j); image row 0 is y max
    header = f"P5\n{img.shape[1]} {img.shape[0]}\n255\n"
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        fh.write(img.tobytes())


def _read_points_file(path: str) -> list[tuple[float, float, float, float]]:
    points = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split(",")
            if lineno == 1 and any(not _is_float(p) for p in parts):
                continue  # tolerate a header line
            if len(parts) != 4 or any(not _is_float(p) for p in parts):
                raise UsageError(f"points file line {lineno}: expected 'x1,x2,xi1,xi2', got {line!r}")
            points.append(tuple(float(p) for p in parts))
    if not points:
        raise UsageError("points file contains no points")
    return points


def _is_float(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return np.isfinite(float(token))


def _add_grid_flags(parser, default_half: float = 4.0, default_n: int = 128) -> None:
    parser.add_argument("--xmin", type=float, default=-default_half)
    parser.add_argument("--xmax", type=float, default=default_half)
    parser.add_argument("--nx", type=int, default=default_n)
    parser.add_argument("--ymin", type=float, default=-default_half)
    parser.add_argument("--ymax", type=float, default=default_half)
    parser.add_argument("--ny", type=int, default=default_n)


def cmd_modes(args) -> int:
    xs, ys = _grid_axes(args)
    j, k = args.index
    if args.kind == "hg":
        values = hg_mode(ModeIndex.hg(j, k), xs[:, None], ys[None, :]).astype(complex)
    else:
        values = lg_mode(ModeIndex.lg(j, k), xs[:, None], ys[None, :])
    _write_grid_csv(args.out, xs, ys, values)
    if args.image:
        _write_pgm(args.image, values)
    print(f"modes {args.kind} ({j},{k}): wrote {values.size} samples to {args.out}")
    return EXIT_OK


def cmd_wigner(args) -> int:
    if args.kind in ("hermite", "lg_diag"):
        if len(args.indices) != 2:
            raise UsageError(f"kind {args.kind} takes two indices, got {len(args.indices)}")
        j, k = args.indices
        xs, ys = _grid_axes(args)
        if args.kind == "hermite":
            values = wigner_hermite_closed(j, k, xs[:, None], ys[None, :])
            values = np.asarray(values, dtype=complex)
        else:
            values = np.empty((xs.size, ys.size), dtype=complex)
            for a, x1 in enumerate(xs):
                for b, x2 in enumerate(ys):
                    values[a, b] = wigner_lg_diag(j, k, PhasePoint4(x1, x2, args.xi1, args.xi2))
        _write_grid_csv(args.out, xs, ys, values)
        print(f"wigner {args.kind} ({j},{k}): wrote {values.size} samples to {args.out}")
        return EXIT_OK

    if len(args.indices) != 4:
        raise UsageError(f"kind {args.kind} takes four indices, got {len(args.indices)}")
    if not args.points:
        raise UsageError(f"kind {args.kind} requires --points FILE")
    j, k, m, n = args.indices
    points = _read_points_file(args.points)
    closed = wigner_lg_closed if args.kind == "lg_general" else wigner_hg_closed
    values = [closed(j, k, m, n, PhasePoint4(*pt)) for pt in points]
    _write_points_csv(args.out, points, values)
    print(f"wigner {args.kind} ({j},{k},{m},{n}): wrote {len(values)} samples to {args.out}")
    return EXIT_OK


def cmd_beam(args) -> int:
    xs, ys = _grid_axes(args)
    params = BeamParams(w0=args.w0, k=args.k)
    index = BeamIndex(args.index[0], args.index[1])
    r = np.hypot(xs[:, None], ys[None, :])
    phi = np.arctan2(ys[None, :], xs[:, None])
    values = beam_field(index, params, r, phi, args.z)
    _write_grid_csv(args.out, xs, ys, values)
    print(
        f"beam (p={index.p}, ell={index.ell}) at z={args.z}: "
        f"wrote {values.size} samples to {args.out}"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed, budget=args.budget)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    worst = max((c.max_abs_err for c in report.checks), default=0.0)
    status = "PASS" if report.passed else "FAIL"
    print(
        f"suite {report.suite}: {status} "
        f"({len(report.checks)} checks, worst error {worst:.3e}, seed {report.seed})"
    )
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgwigner",
        description="Evaluate oscillator modes, Wigner transforms, and beam fields; "
        "run identity verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_modes = sub.add_parser("modes", help="evaluate an HG or LG mode on a grid")
    p_modes.add_argument("kind", choices=("hg", "lg"))
    p_modes.add_argument("--index", type=int, nargs=2, required=True, metavar=("J", "K"))
    _add_grid_flags(p_modes)
    p_modes.add_argument("--out", required=True, help="output CSV path")
    p_modes.add_argument("--image", help="optional PGM magnitude image path")
    p_modes.set_defaults(func=cmd_modes)

    p_wig = sub.add_parser("wigner", help="evaluate Wigner closed forms")
    p_wig.add_argument("kind", choices=("hermite", "lg_diag", "lg_general", "hg_general"))
    p_wig.add_argument(
        "--indices", type=int, nargs="+", required=True,
        help="two degrees for hermite/lg_diag, four for the general kinds",
    )
    _add_grid_flags(p_wig)
    p_wig.add_argument("--xi1", type=float, default=0.0, help="fixed xi1 for lg_diag slices")
    p_wig.add_argument("--xi2", type=float, default=0.0, help="fixed xi2 for lg_diag slices")
    p_wig.add_argument("--points", help="CSV of x1,x2,xi1,xi2 rows for the general kinds")
    p_wig.add_argument("--out", required=True)
    p_wig.set_defaults(func=cmd_wigner)

    p_beam = sub.add_parser("beam", help="evaluate a transverse beam slice")
    p_beam.add_argument("--index", type=int, nargs=2, required=True, metavar=("P", "ELL"))
    p_beam.add_argument("--w0", type=float, required=True, help="waist radius")
    p_beam.add_argument("--k", type=float, required=True, help="wavenumber")
    p_beam.add_argument("--z", type=float, default=0.0, help="height along the beam axis")
    _add_grid_flags(p_beam)
    p_beam.add_argument("--out", required=True)
    p_beam.set_defaults(func=cmd_beam)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite")
    p_ver.add_argument("--seed", type=int, default=7)
    p_ver.add_argument("--budget", choices=("quick", "full"), default="quick")
    p_ver.add_argument("--out", help="write the JSON report here")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
