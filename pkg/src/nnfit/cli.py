"""Command-line frontend.

Subcommands: critvals, test, power, sample, plot, tables.

Exit codes: 0 success, 2 configuration error (bad flags or parameters),
3 data error (malformed or off-manifold input files).

Flags override values read from an optional ``--config`` file with one
``key = value`` pair per line, keys named after the long flags.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import classical, mc, sampling, scores, svgplot
from .geometry import SampleSet, space_by_name
from .mc import ConfigurationError, NNStatistic, TestSpec
from .sampling import RngStream

CLASSICAL_CLI_IDS = {
    "db": "DB",
    "ms": "MS",
    "rayleigh-circle": "RA_CIRCLE",
    "rayleigh-sphere": "RA_SPHERE",
    "kuiper": "KUIPER",
    "watson": "WATSON",
    "jupp": "JUPP",
}

ALT_CHOICES = ("uniform", "con", "clu", "vmf", "bimodal-vmf", "kent")


class DataError(Exception):
    """Malformed or off-manifold input data."""


def _read_points_csv(path: str, header: bool, dim: int | None = None) -> np.ndarray:
    rows: list[list[float]] = []
    try:
        fh = open(path)
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from None
    with fh:
        for lineno, line in enumerate(fh, start=1):
            if header and lineno == 1:
                continue
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            try:
                vals = [float(p) for p in parts]
            except ValueError:
                raise DataError(f"{path}:{lineno}: non-numeric value") from None
            if rows and len(vals) != len(rows[0]):
                raise DataError(f"{path}:{lineno}: expected {len(rows[0])} "
                                f"columns, got {len(vals)}")
            if dim is not None and len(vals) != dim:
                raise DataError(f"{path}:{lineno}: expected {dim} columns, "
                                f"got {len(vals)}")
            rows.append(vals)
    if not rows:
        raise DataError(f"{path}: no data rows")
    return np.asarray(rows, dtype=float)


def _write_points_csv(path, pts: np.ndarray, header: bool) -> None:
    cols = pts.shape[1]
    out = sys.stdout if path in (None, "-") else open(path, "w")
    try:
        if header:
            out.write(",".join(f"x{i}" for i in range(cols)) + "\n")
        for row in pts:
            out.write(",".join(format(v, ".15g") for v in row) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _alternative_from_args(args, space) -> sampling.AlternativeSpec:
    alt = args.alt
    if alt == "uniform":
        return sampling.UniformNull()
    if alt == "con":
        return sampling.Contamination()
    if alt == "clu":
        return sampling.Clustering()
    if alt == "vmf":
        kappa = 0.5 if args.kappa is None else args.kappa
        mu = (1.0, 0.0) if space.ambient_dim == 2 else (1.0, 0.0, 0.0)
        return sampling.VonMisesFisher(mu=mu, kappa=kappa)
    if alt == "bimodal-vmf":
        kappa = 1.0 if args.kappa is None else args.kappa
        return sampling.BimodalVonMisesFisher(kappa=kappa)
    if alt == "kent":
        kappa = 0.25 if args.kappa is None else args.kappa
        beta = 2.0 if args.beta is None else args.beta
        return sampling.Kent(kappa=kappa, beta=beta)
    raise ConfigurationError(f"unknown alternative {alt!r}")


def _spec_from_args(args, space) -> TestSpec:
    if args.test == "NN" or args.test is None:
        if args.alpha is None or args.J is None:
            raise ConfigurationError("the NN test needs --alpha and --J")
        if args.alpha == 1.0:
            raise ConfigurationError(
                "alpha = 1 is not a valid test parameter: the statistic is "
                "distribution-free there; pick any alpha != 1")
        stat = NNStatistic(alpha=args.alpha, J=args.J)
    else:
        stat = CLASSICAL_CLI_IDS[args.test]
    return TestSpec(stat, space, args.n, level=args.level)


# ---------------------------------------------------------------------------
# subcommands

def cmd_critvals(args) -> int:
    space = space_by_name(args.space)
    spec = _spec_from_args(args, space)
    row = mc.simulate_critical_values(spec, args.reps, args.seed,
                                      threads=mc.resolve_threads(args.threads))
    table = mc.CriticalValueTable([row])
    if args.out:
        table.to_csv(args.out)
        print(f"wrote {args.out}")
    else:
        table.to_csv(sys.stdout)
    return 0


def cmd_test(args) -> int:
    space = space_by_name(args.space)
    args.n = 0  # placeholder; replaced by the data size below
    pts = _read_points_csv(args.data, args.header, dim=space.ambient_dim)
    try:
        sample = SampleSet(space, pts)
    except ValueError as exc:
        raise DataError(f"{args.data}: {exc}") from None
    args.n = sample.n
    spec = _spec_from_args(args, space)

    if isinstance(spec.statistic, NNStatistic):
        params = scores.ScoreParams(spec.statistic.alpha, spec.statistic.J)
        result = scores.statistic(sample, params)
        value, normalized = result.T, result.T_over_n
    else:
        fn = {
            "DB": classical.db_statistic, "MS": classical.ms_statistic,
            "RA_CIRCLE": classical.rayleigh_circle,
            "RA_SPHERE": classical.rayleigh_sphere,
            "KUIPER": classical.kuiper, "WATSON": classical.watson,
            "JUPP": classical.jupp,
        }[spec.statistic]
        value = fn(sample.points).value
        normalized = value

    if args.asymptotic:
        if isinstance(spec.statistic, NNStatistic):
            raise ConfigurationError("asymptotic calibration is only available "
                                     "for DB, MS, the Rayleigh tests and Jupp")
        critical = classical.asymptotic_critical_value(spec.statistic,
                                                       spec.level, n=spec.n)
        source = "asymptotic"
    elif args.critvals:
        critical = mc.CriticalValueTable.from_csv(args.critvals).lookup(spec).quantile
        source = args.critvals
    else:
        critical = mc.simulate_critical_values(
            spec, args.reps, args.seed,
            threads=mc.resolve_threads(args.threads)).quantile
        source = f"simulated ({args.reps} reps, seed {args.seed})"

    reject = normalized < critical if spec.direction == "lower" else normalized > critical
    tail = "lower" if spec.direction == "lower" else "upper"
    print(f"test: {spec.label} on {space.kind}, n = {sample.n}")
    if isinstance(spec.statistic, NNStatistic):
        print(f"parameters: alpha = {spec.statistic.alpha:g}, J = {spec.statistic.J}")
        print(f"statistic T = {value:.6g}")
        print(f"normalized T/n = {normalized:.6g}")
    else:
        print(f"statistic = {value:.6g}")
        print(f"normalized = {normalized:.6g}")
    print(f"critical value ({tail} tail, level {spec.level:g}, {source}) = "
          f"{critical:.6g}")
    print("decision: " + ("REJECT" if reject else "ACCEPT"))
    if args.json:
        record = {
            "space": space.kind, "test": spec.label,
            "alpha": getattr(spec.statistic, "alpha", None),
            "J": getattr(spec.statistic, "J", None),
            "n": sample.n, "level": spec.level, "direction": spec.direction,
            "statistic": value, "normalized": normalized,
            "critical": critical, "reject": bool(reject),
        }
        with open(args.json, "a") as fh:
            fh.write(json.dumps(record) + "\n")
    return 0


def cmd_power(args) -> int:
    space = space_by_name(args.space)
    spec = _spec_from_args(args, space)
    alt = _alternative_from_args(args, space)
    threads = mc.resolve_threads(args.threads)
    if args.critvals:
        table = mc.CriticalValueTable.from_csv(args.critvals)
        row = table.lookup(spec)
    else:
        row = mc.simulate_critical_values(spec, args.reps_critical, args.seed,
                                          threads=threads)
    result = mc.estimate_power(alt, spec, row, args.reps_power, args.seed,
                               threads=threads)
    print(f"power of {spec.label} on {space.kind} against "
          f"{sampling.alternative_label(alt)}: "
          f"{result.rejection_rate:.4f} +/- {result.ci_half_width:.4f} "
          f"({result.reps} reps)")
    if args.out:
        mc.write_power_csv(args.out, [result])
        print(f"wrote {args.out}")
    return 0


def cmd_sample(args) -> int:
    space = space_by_name(args.space)
    alt = _alternative_from_args(args, space)
    sample = sampling.sample(space, alt, args.n, RngStream(args.seed, args.stream))
    _write_points_csv(args.out, sample.points, args.header)
    return 0


def cmd_plot(args) -> int:
    pts = _read_points_csv(args.infile, args.header)
    if pts.shape[1] not in (2, 3):
        raise DataError(f"{args.infile}: expected 2 or 3 coordinate columns, "
                        f"got {pts.shape[1]}")
    svgplot.scatter_svg(pts, args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_tables(args) -> int:
    if args.which.strip().lower() == "all":
        which = list(mc.TABLE_IDS)
    else:
        which = [t for t in (s.strip() for s in args.which.split(",")) if t]
    written = mc.reproduce_tables(
        which, reps_critical=args.reps_critical, reps_power=args.reps_power,
        master_seed=args.seed, output_dir=args.outdir,
        threads=mc.resolve_threads(args.threads),
        quantile_rtol=args.quantile_rtol, power_tol=args.power_tol)
    for path in written:
        print(f"wrote {path}")
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_common(p, *, seed=True, threads=True):
    p.add_argument("--config", help="key = value file; flags take precedence")
    if seed:
        p.add_argument("--seed", type=int, default=0, help="master seed")
    if threads:
        p.add_argument("--threads", type=int, default=None,
                       help="worker processes (default: NNFIT_THREADS or 1); "
                            "never changes results")


def _add_test_selection(p):
    p.add_argument("--test", choices=["NN"] + sorted(CLASSICAL_CLI_IDS),
                   default="NN", help="statistic (default: NN)")
    p.add_argument("--alpha", type=float, help="NN power parameter (alpha != 1)")
    p.add_argument("--J", type=int, help="NN neighbor count")
    p.add_argument("--level", type=float, default=0.05)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nnfit",
        description="Nearest-neighbor goodness-of-fit testing on the "
                    "torus-square, circle, and sphere.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("critvals", help="simulate critical values")
    p.add_argument("--space", required=True)
    _add_test_selection(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reps", type=int, default=10_000)
    p.add_argument("--out", help="output CSV (default: stdout)")
    _add_common(p)
    p.set_defaults(func=cmd_critvals)

    p = sub.add_parser("test", help="test a data file for goodness-of-fit")
    p.add_argument("--data", required=True, help="CSV of coordinates, one point per row")
    p.add_argument("--header", action="store_true", help="skip a header line")
    p.add_argument("--space", required=True)
    _add_test_selection(p)
    p.add_argument("--critvals", help="critical-value CSV from 'critvals'")
    p.add_argument("--asymptotic", action="store_true",
                   help="use the asymptotic threshold instead of simulation")
    p.add_argument("--reps", type=int, default=10_000,
                   help="replications for on-the-fly calibration")
    p.add_argument("--json", help="append a JSON-lines record to this file")
    _add_common(p)
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("power", help="estimate power against an alternative")
    p.add_argument("--space", required=True)
    _add_test_selection(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alt", choices=ALT_CHOICES, required=True)
    p.add_argument("--kappa", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--critvals", help="reuse critical values from this CSV")
    p.add_argument("--reps-critical", type=int, default=10_000)
    p.add_argument("--reps-power", type=int, default=10_000)
    p.add_argument("--out", help="write a power CSV here")
    _add_common(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("sample", help="generate a sample CSV")
    p.add_argument("--space", required=True)
    p.add_argument("--alt", choices=ALT_CHOICES, default="uniform")
    p.add_argument("--kappa", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stream", type=int, default=0, help="stream id")
    p.add_argument("--header", action="store_true", help="write a header line")
    p.add_argument("--out", help="output CSV (default: stdout)")
    _add_common(p, threads=False)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("plot", help="scatterplot a points CSV as SVG")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--header", action="store_true")
    p.add_argument("--out", required=True)
    _add_common(p, seed=False, threads=False)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("tables", help="reproduce the reference tables")
    p.add_argument("--which", required=True,
                   help=f"comma list or 'all'; ids: {', '.join(mc.TABLE_IDS)}")
    p.add_argument("--reps-critical", type=int, default=10_000)
    p.add_argument("--reps-power", type=int, default=10_000)
    p.add_argument("--outdir", default="tables-out")
    p.add_argument("--quantile-rtol", type=float, default=0.05)
    p.add_argument("--power-tol", type=float, default=3.0)
    _add_common(p)
    p.set_defaults(func=cmd_tables)

    return parser


def _apply_config(args, argv: list[str]) -> None:
    if not getattr(args, "config", None):
        return
    overrides = {}
    with open(args.config) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigurationError(
                    f"{args.config}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            overrides[key.replace("-", "_")] = value
    for key, value in overrides.items():
        if not hasattr(args, key):
            raise ConfigurationError(f"{args.config}: unknown key {key!r}")
        if any(a == "--" + key.replace("_", "-") for a in argv):
            continue  # explicit flag wins
        current = getattr(args, key)
        if isinstance(current, bool):
            setattr(args, key, value.lower() in ("1", "true", "yes"))
        elif isinstance(current, int):
            setattr(args, key, int(value))
        elif isinstance(current, float):
            setattr(args, key, float(value))
        else:
            setattr(args, key, value)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        return args.func(args)
    except (ConfigurationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
