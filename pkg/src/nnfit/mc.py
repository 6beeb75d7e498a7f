"""Deterministic Monte Carlo engine.

Simulates null critical values, estimates power against alternatives, and
regenerates the reference quantile and rejection-rate tables with a diff
report against the embedded values.

Determinism contract: replication r of a run draws from the Philox stream
(master_seed, stream_offset + r). Calibration runs use stream offset 0 and
power runs an offset of 2^32, so the two are independent by construction.
Replications are evaluated in fixed-size blocks and reduced in block
order, which makes every result bit-identical regardless of the number of
worker processes.
"""
from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np
from scipy.stats import kurtosis as _kurtosis
from scipy.stats import norm, skew as _skew

from . import classical, geometry, sampling, scores
from .geometry import CIRCLE, SPHERE, TORUS_SQUARE, Space
from .sampling import AlternativeSpec, RngStream, UniformNull
from . import reference_tables as ref

POWER_STREAM_OFFSET = 1 << 32
BLOCK_SIZE = 512  # replications per task; fixed so worker count cannot matter

_CLASSICAL_SPACE = {
    "DB": "torus-square",
    "MS": "torus-square",
    "RA_CIRCLE": "circle",
    "KUIPER": "circle",
    "WATSON": "circle",
    "RA_SPHERE": "sphere",
    "JUPP": "sphere",
}


class ConfigurationError(ValueError):
    """Invalid run configuration (bad spec, missing critical value, ...)."""


def resolve_threads(threads: Optional[int] = None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("NNFIT_THREADS", "")
    return max(1, int(env)) if env.strip() else 1


@dataclass(frozen=True)
class NNStatistic:
    """The nearest-neighbor volume statistic with parameters (alpha, J)."""

    alpha: float
    J: int

    def __post_init__(self):
        if not self.alpha > 0:
            raise ConfigurationError(f"alpha must be positive, got {self.alpha}")
        if self.alpha == 1.0:
            raise ConfigurationError(
                "alpha must differ from 1; the statistic is distribution-free there "
                "and carries no power")
        if self.J < 1:
            raise ConfigurationError(f"J must be a positive integer, got {self.J}")


@dataclass(frozen=True)
class TestSpec:
    """A fully specified test: statistic, space, sample size, level.

    The rejection direction is a function of the statistic: the NN
    statistic rejects in the lower tail for alpha < 1 and in the upper
    tail for alpha > 1; every classical statistic rejects for large
    values.
    """

    statistic: Union[NNStatistic, str]
    space: Space
    n: int
    level: float = 0.05
    calibration: str = "simulated"

    def __post_init__(self):
        if not 0.0 < self.level < 1.0:
            raise ConfigurationError(f"level must be in (0, 1), got {self.level}")
        if self.calibration not in ("simulated", "asymptotic"):
            raise ConfigurationError(f"unknown calibration {self.calibration!r}")
        if isinstance(self.statistic, NNStatistic):
            if self.n <= self.statistic.J:
                raise ConfigurationError(
                    f"need n > J, got n={self.n}, J={self.statistic.J}")
        elif isinstance(self.statistic, str):
            want = _CLASSICAL_SPACE.get(self.statistic)
            if want is None:
                raise ConfigurationError(f"unknown test id {self.statistic!r}")
            if want != self.space.kind:
                raise ConfigurationError(
                    f"{self.statistic} is defined on {want}, not {self.space.kind}")
            if self.n < 2:
                raise ConfigurationError("need n >= 2")
        else:
            raise ConfigurationError(f"bad statistic {self.statistic!r}")

    @property
    def label(self) -> str:
        return "NN" if isinstance(self.statistic, NNStatistic) else self.statistic

    @property
    def direction(self) -> str:
        if isinstance(self.statistic, NNStatistic):
            return "lower" if self.statistic.alpha < 1.0 else "upper"
        return "upper"

    @property
    def key(self) -> tuple:
        alpha = self.statistic.alpha if isinstance(self.statistic, NNStatistic) else None
        j = self.statistic.J if isinstance(self.statistic, NNStatistic) else None
        return (self.space.kind, self.label, alpha, j, self.n, self.level,
                self.direction)


@dataclass(frozen=True)
class CriticalValueRow:
    space: str
    test: str
    alpha: Optional[float]
    J: Optional[int]
    n: int
    level: float
    direction: str
    quantile: float
    reps: int
    seed: int

    @property
    def key(self) -> tuple:
        return (self.space, self.test, self.alpha, self.J, self.n, self.level,
                self.direction)


CRITVAL_HEADER = ("space", "test", "alpha", "J", "n", "level", "direction",
                  "quantile", "reps", "seed")
POWER_HEADER = ("space", "test", "alpha", "J", "n", "alternative", "reps",
                "rate", "ci")


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


class CriticalValueTable:
    """Simulated quantiles keyed by (space, test, alpha, J, n, level, direction)."""

    def __init__(self, rows=()):
        self._rows: dict[tuple, CriticalValueRow] = {}
        for row in rows:
            self.add(row)

    def add(self, row: CriticalValueRow) -> None:
        self._rows[row.key] = row

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> list[CriticalValueRow]:
        return list(self._rows.values())

    def lookup(self, spec: TestSpec) -> CriticalValueRow:
        try:
            return self._rows[spec.key]
        except KeyError:
            raise ConfigurationError(
                f"no critical value for {spec.key}; simulate one first"
            ) from None

    def to_csv(self, path_or_file) -> None:
        fh = path_or_file if hasattr(path_or_file, "write") else open(
            path_or_file, "w", newline="")
        try:
            w = csv.writer(fh)
            w.writerow(CRITVAL_HEADER)
            for row in sorted(self._rows.values(), key=lambda r: str(r.key)):
                w.writerow([
                    row.space, row.test,
                    "" if row.alpha is None else _fmt(row.alpha),
                    "" if row.J is None else row.J,
                    row.n, _fmt(row.level), row.direction,
                    _fmt(row.quantile), row.reps, row.seed,
                ])
        finally:
            if fh is not path_or_file:
                fh.close()

    @classmethod
    def from_csv(cls, path) -> "CriticalValueTable":
        table = cls()
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            for rec in reader:
                table.add(CriticalValueRow(
                    space=rec["space"], test=rec["test"],
                    alpha=float(rec["alpha"]) if rec["alpha"] else None,
                    J=int(rec["J"]) if rec["J"] else None,
                    n=int(rec["n"]), level=float(rec["level"]),
                    direction=rec["direction"], quantile=float(rec["quantile"]),
                    reps=int(rec["reps"]), seed=int(rec["seed"]),
                ))
        return table


@dataclass(frozen=True)
class PowerResult:
    alternative: AlternativeSpec
    spec: TestSpec
    reps: int
    rejection_rate: float
    ci_half_width: float


@dataclass(frozen=True)
class NormalityReport:
    spec: TestSpec
    reps: int
    mean: float
    sd: float
    skewness: float
    excess_kurtosis: float
    ad_statistic: float
    ad_pvalue: float


# ---------------------------------------------------------------------------
# block evaluation

@dataclass(frozen=True)
class _Job:
    kind: str                       # "nn-profile" | "classical"
    space: Space
    n: int
    alt: AlternativeSpec
    master_seed: int
    offset: int
    alphas: tuple = ()
    js: tuple = ()
    test_id: str = ""


def _points_block(job: _Job, start: int, count: int) -> np.ndarray:
    out = np.empty((count, job.n, job.space.ambient_dim))
    for i in range(count):
        stream = RngStream(job.master_seed, job.offset + start + i)
        out[i] = sampling.sample(job.space, job.alt, job.n, stream).points
    return out


def _knn_dists_batch(space: Space, pts: np.ndarray, j: int) -> np.ndarray:
    """Neighbor distances for a (reps, n, d) batch; same floats as knn_fast."""
    n = pts.shape[1]
    if n < geometry.GRID_MIN_N:
        chunk = max(1, 6_000_000 // max(n * n, 1))
        return np.concatenate(
            [geometry.knn_brute_batch(space, pts[s:s + chunk], j)
             for s in range(0, pts.shape[0], chunk)])
    if space.kind == "circle":
        fn = geometry._knn_sweep_circle
    elif space.kind == "torus-square":
        fn = geometry._knn_grid_torus
    else:
        fn = geometry._knn_grid_sphere
    return np.stack([fn(p, j) for p in pts])


def _eval_block(args) -> np.ndarray:
    job, start, count = args
    pts = _points_block(job, start, count)
    if job.kind == "nn-profile":
        dists = _knn_dists_batch(job.space, pts, max(job.js))
        out = np.empty((count, len(job.alphas), len(job.js)))
        for a_i, alpha in enumerate(job.alphas):
            weights = np.full(job.n, job.space.null_density ** alpha)
            for j_i, j in enumerate(job.js):
                xi = scores.score_profile(dists, job.n, job.space, alpha, j)
                t = (xi * weights).sum(axis=-1)
                out[:, a_i, j_i] = t / job.n
        return out
    if job.kind == "classical":
        return _classical_values(job.test_id, pts)
    raise ValueError(f"unknown job kind {job.kind!r}")  # pragma: no cover


def _classical_values(test_id: str, pts: np.ndarray) -> np.ndarray:
    if test_id == "DB":
        return classical.db_batch(pts)
    if test_id == "MS":
        return classical.ms_values_batch(pts)
    if test_id == "RA_CIRCLE":
        return classical.rayleigh_batch(pts, sphere=False)
    if test_id == "RA_SPHERE":
        return classical.rayleigh_batch(pts, sphere=True)
    if test_id == "KUIPER":
        return classical.kuiper_batch(pts)
    if test_id == "WATSON":
        return classical.watson_batch(pts)
    if test_id == "JUPP":
        return classical.jupp_values_batch(pts)
    raise ValueError(f"unknown test id {test_id!r}")


def _run_job(job: _Job, reps: int, threads: int) -> np.ndarray:
    tasks = [(job, start, min(BLOCK_SIZE, reps - start))
             for start in range(0, reps, BLOCK_SIZE)]
    threads = resolve_threads(threads)
    if threads <= 1 or len(tasks) == 1:
        parts = [_eval_block(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_eval_block, tasks))
    return np.concatenate(parts, axis=0)


def nn_profile_values(space: Space, n: int, alphas, js,
                      alt: AlternativeSpec, reps: int, master_seed: int,
                      stream_offset: int = 0, threads: int = 1) -> np.ndarray:
    """T/n values for a grid of (alpha, J) cells sharing replications.

    Returns an array of shape (reps, len(alphas), len(js)). One neighbor
    search at max(js) serves every cell of a replication.
    """
    alphas = tuple(float(a) for a in alphas)
    js = tuple(int(j) for j in js)
    if min(js) < 1 or n <= max(js):
        raise ConfigurationError(f"need 1 <= J < n for all J, got {js} at n={n}")
    job = _Job("nn-profile", space, n, alt, master_seed, stream_offset,
               alphas=alphas, js=js)
    return _run_job(job, reps, threads)


def statistic_values(spec: TestSpec, alt: AlternativeSpec, reps: int,
                     master_seed: int, stream_offset: int = 0,
                     threads: int = 1) -> np.ndarray:
    """Normalized statistic values (T/n for NN, raw for classical tests)
    over ``reps`` independent replications of ``alt`` on spec.space."""
    if isinstance(spec.statistic, NNStatistic):
        vals = nn_profile_values(spec.space, spec.n, (spec.statistic.alpha,),
                                 (spec.statistic.J,), alt, reps, master_seed,
                                 stream_offset, threads)
        return vals[:, 0, 0]
    job = _Job("classical", spec.space, spec.n, alt, master_seed, stream_offset,
               test_id=spec.statistic)
    return _run_job(job, reps, threads)


# ---------------------------------------------------------------------------
# calibration, power, normality

def simulate_critical_values(spec: TestSpec, reps: int, master_seed: int,
                             threads: int = 1) -> CriticalValueRow:
    """Empirical critical value of the normalized statistic under the null.

    Lower-tail tests use the level quantile, upper-tail tests the
    (1 - level) quantile; quantiles are the usual order-statistic linear
    interpolation.
    """
    if reps < 100:
        raise ConfigurationError(f"need at least 100 replications, got {reps}")
    values = statistic_values(spec, UniformNull(), reps, master_seed,
                              stream_offset=0, threads=threads)
    q = spec.level if spec.direction == "lower" else 1.0 - spec.level
    quantile = float(np.quantile(values, q))
    alpha = spec.statistic.alpha if isinstance(spec.statistic, NNStatistic) else None
    j = spec.statistic.J if isinstance(spec.statistic, NNStatistic) else None
    return CriticalValueRow(space=spec.space.kind, test=spec.label, alpha=alpha,
                            J=j, n=spec.n, level=spec.level,
                            direction=spec.direction, quantile=quantile,
                            reps=reps, seed=master_seed)


def _rejects(values: np.ndarray, direction: str, critical: float) -> np.ndarray:
    return values < critical if direction == "lower" else values > critical


def estimate_power(alt: AlternativeSpec, spec: TestSpec,
                   critvals: Union[CriticalValueTable, CriticalValueRow, float],
                   reps: int, master_seed: int, threads: int = 1) -> PowerResult:
    """Rejection rate of the calibrated test under ``alt``.

    Power replications draw from streams offset by 2^32 so they never
    overlap the calibration streams of the same master seed.
    """
    if reps < 1:
        raise ConfigurationError("need at least one replication")
    if isinstance(critvals, CriticalValueTable):
        critical = critvals.lookup(spec).quantile
    elif isinstance(critvals, CriticalValueRow):
        if critvals.key != spec.key:
            raise ConfigurationError(
                f"critical value row {critvals.key} does not match {spec.key}")
        critical = critvals.quantile
    else:
        critical = float(critvals)
    values = statistic_values(spec, alt, reps, master_seed,
                              stream_offset=POWER_STREAM_OFFSET, threads=threads)
    rate = float(_rejects(values, spec.direction, critical).mean())
    ci = 1.96 * math.sqrt(rate * (1.0 - rate) / reps)
    return PowerResult(alternative=alt, spec=spec, reps=reps,
                       rejection_rate=rate, ci_half_width=ci)


def anderson_darling_normal(values: np.ndarray) -> tuple[float, float]:
    """Anderson-Darling statistic and approximate p-value for normality with
    estimated mean and variance (the usual small-sample corrected form)."""
    x = np.asarray(values, dtype=float)
    n = x.shape[0]
    if n < 8:
        raise ValueError("need at least 8 values")
    z = np.sort((x - x.mean()) / x.std(ddof=1))
    cdf = np.clip(norm.cdf(z), 1e-300, 1.0 - 1e-16)
    i = np.arange(1, n + 1, dtype=float)
    a2 = -n - ((2.0 * i - 1.0) * (np.log(cdf) + np.log1p(-cdf[::-1]))).sum() / n
    a2s = a2 * (1.0 + 0.75 / n + 2.25 / n ** 2)
    if a2s >= 0.6:
        p = math.exp(1.2937 - 5.709 * a2s + 0.0186 * a2s ** 2)
    elif a2s > 0.34:
        p = math.exp(0.9177 - 4.279 * a2s - 1.38 * a2s ** 2)
    elif a2s > 0.2:
        p = 1.0 - math.exp(-8.318 + 42.796 * a2s - 59.938 * a2s ** 2)
    else:
        p = 1.0 - math.exp(-13.436 + 101.14 * a2s - 223.73 * a2s ** 2)
    return float(a2s), float(min(max(p, 0.0), 1.0))


def clt_diagnostic(spec: TestSpec, reps: int, master_seed: int,
                   threads: int = 1) -> NormalityReport:
    """Normality diagnostics of the simulated null statistic values."""
    if reps < 1000:
        raise ConfigurationError("need at least 1000 replications")
    values = statistic_values(spec, UniformNull(), reps, master_seed,
                              stream_offset=0, threads=threads)
    mean = float(values.mean())
    sd = float(values.std(ddof=1))
    ad, p = anderson_darling_normal(values)
    return NormalityReport(spec=spec, reps=reps, mean=mean, sd=sd,
                           skewness=float(_skew(values)),
                           excess_kurtosis=float(_kurtosis(values)),
                           ad_statistic=ad, ad_pvalue=p)


# ---------------------------------------------------------------------------
# table reproduction

TABLE_IDS = (
    "appendix-square", "appendix-circle", "appendix-sphere",
    "power-square-nn", "power-circle-nn", "power-sphere-nn",
    "power-square-classical", "power-circle-classical", "power-sphere-classical",
)

_SHORT_SPACE = {"square": TORUS_SQUARE, "circle": CIRCLE, "sphere": SPHERE}

_POWER_ALTS: dict[str, tuple[tuple[str, AlternativeSpec], ...]] = {
    "torus-square": (("con", sampling.Contamination()),
                     ("clu", sampling.Clustering())),
    "circle": (("vmf", sampling.VonMisesFisher(mu=(1.0, 0.0), kappa=0.5)),
               ("bimodal-vmf", sampling.BimodalVonMisesFisher(kappa=1.0))),
    "sphere": (("vmf", sampling.VonMisesFisher(mu=(1.0, 0.0, 0.0), kappa=0.5)),
               ("kent", sampling.Kent())),
}

_CLASSICAL_TESTS = {
    "torus-square": ("DB", "MS"),
    "circle": ("RA_CIRCLE", "KUIPER", "WATSON"),
    "sphere": ("RA_SPHERE", "JUPP"),
}

_TABLE_LEVEL = 0.05


@dataclass
class _DiffSink:
    rows: list = field(default_factory=list)

    def add(self, table: str, row: str, column: str, ours: float,
            reference: float, within: bool) -> None:
        self.rows.append((table, row, column, ours, reference,
                          abs(ours - reference), within))

    def write(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(("table", "row", "column", "ours", "reference",
                        "abs_diff", "within_tol"))
            for rec in self.rows:
                w.writerow([rec[0], rec[1], rec[2], _fmt(rec[3]), _fmt(rec[4]),
                            _fmt(rec[5]), str(rec[6]).lower()])


def _quantile_for(values_2d: np.ndarray, alpha: float, level: float) -> np.ndarray:
    q = level if alpha < 1.0 else 1.0 - level
    return np.quantile(values_2d, q, axis=0)


def _write_table(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow(row)


def _appendix_table(short: str, reps: int, master_seed: int, threads: int,
                    rtol: float, outdir: Path, diff: _DiffSink) -> Path:
    space = _SHORT_SPACE[short]
    table_id = f"appendix-{short}"
    quantiles: dict[tuple[float, int], np.ndarray] = {}
    for n in ref.QUANTILE_NS:
        prof = nn_profile_values(space, n, ref.QUANTILE_ALPHAS, ref.QUANTILE_JS,
                                 UniformNull(), reps, master_seed,
                                 stream_offset=0, threads=threads)
        for a_i, alpha in enumerate(ref.QUANTILE_ALPHAS):
            quantiles[(alpha, n)] = _quantile_for(prof[:, a_i, :], alpha,
                                                  _TABLE_LEVEL)
    rows = []
    for alpha in ref.QUANTILE_ALPHAS:
        for n in ref.QUANTILE_NS:
            ours = quantiles[(alpha, n)]
            rows.append([_fmt(alpha), n] + [_fmt(v) for v in ours])
            reference = ref.QUANTILES[space.kind].get((alpha, n))
            if reference is None:
                continue
            for j, o, r in zip(ref.QUANTILE_JS, ours, reference):
                within = abs(o - r) <= rtol * abs(r)
                diff.add(table_id, f"alpha={_fmt(alpha)},n={n}", f"J={j}",
                         float(o), float(r), bool(within))
    path = outdir / f"{table_id}.csv"
    _write_table(path, ["alpha", "n"] + [f"J{j}" for j in ref.QUANTILE_JS], rows)
    return path


def _power_nn_table(short: str, reps_critical: int, reps_power: int,
                    master_seed: int, threads: int, tol: float,
                    outdir: Path, diff: _DiffSink) -> Path:
    space = _SHORT_SPACE[short]
    table_id = f"power-{short}-nn"
    crit: dict[int, np.ndarray] = {}
    for n in ref.POWER_NS:
        prof = nn_profile_values(space, n, ref.POWER_ALPHAS, ref.POWER_JS,
                                 UniformNull(), reps_critical, master_seed,
                                 stream_offset=0, threads=threads)
        cells = np.empty((len(ref.POWER_ALPHAS), len(ref.POWER_JS)))
        for a_i, alpha in enumerate(ref.POWER_ALPHAS):
            cells[a_i] = _quantile_for(prof[:, a_i, :], alpha, _TABLE_LEVEL)
        crit[n] = cells
    profiles: dict[tuple[str, int], np.ndarray] = {}
    for alt_label, alt in _POWER_ALTS[space.kind]:
        for n in ref.POWER_NS:
            profiles[(alt_label, n)] = nn_profile_values(
                space, n, ref.POWER_ALPHAS, ref.POWER_JS, alt, reps_power,
                master_seed, stream_offset=POWER_STREAM_OFFSET, threads=threads)
    rows = []
    for a_i, alpha in enumerate(ref.POWER_ALPHAS):
        for alt_label, _ in _POWER_ALTS[space.kind]:
            for n in ref.POWER_NS:
                direction = "lower" if alpha < 1.0 else "upper"
                rej = _rejects(profiles[(alt_label, n)][:, a_i, :], direction,
                               crit[n][a_i])
                rates = 100.0 * rej.mean(axis=0)
                rows.append([alt_label, _fmt(alpha), n] + [_fmt(v) for v in rates])
                reference = ref.POWER_NN[space.kind].get((alt_label, alpha, n))
                if reference is None:
                    continue
                for j, o, r in zip(ref.POWER_JS, rates, reference):
                    diff.add(table_id, f"{alt_label},alpha={_fmt(alpha)},n={n}",
                             f"J={j}", float(o), float(r),
                             bool(abs(o - r) <= tol))
    path = outdir / f"{table_id}.csv"
    _write_table(path, ["alternative", "alpha", "n"]
                 + [f"J{j}" for j in ref.POWER_JS], rows)
    return path


def _power_classical_table(short: str, reps_critical: int, reps_power: int,
                           master_seed: int, threads: int, tol: float,
                           outdir: Path, diff: _DiffSink) -> Path:
    space = _SHORT_SPACE[short]
    table_id = f"power-{short}-classical"
    tests = _CLASSICAL_TESTS[space.kind]
    crit: dict[tuple[str, int], float] = {}
    for test_id in tests:
        for n in ref.POWER_NS:
            spec = TestSpec(test_id, space, n, level=_TABLE_LEVEL)
            crit[(test_id, n)] = simulate_critical_values(
                spec, reps_critical, master_seed, threads=threads).quantile
    rows = []
    for alt_label, alt in _POWER_ALTS[space.kind]:
        for n in ref.POWER_NS:
            rates = []
            for test_id in tests:
                spec = TestSpec(test_id, space, n, level=_TABLE_LEVEL)
                values = statistic_values(spec, alt, reps_power, master_seed,
                                          stream_offset=POWER_STREAM_OFFSET,
                                          threads=threads)
                rates.append(100.0 * float(
                    _rejects(values, "upper", crit[(test_id, n)]).mean()))
            rows.append([alt_label, n] + [_fmt(v) for v in rates])
            reference = ref.POWER_CLASSICAL[space.kind].get((alt_label, n))
            if reference is None:
                continue
            for test_id, o in zip(tests, rates):
                r = reference[test_id]
                diff.add(table_id, f"{alt_label},n={n}", test_id,
                         float(o), float(r), bool(abs(o - r) <= tol))
    path = outdir / f"{table_id}.csv"
    _write_table(path, ["alternative", "n"] + list(tests), rows)
    return path


def reproduce_tables(which, reps_critical: int = 10_000, reps_power: int = 10_000,
                     master_seed: int = 0, output_dir=".", threads: int = 1,
                     quantile_rtol: float = 0.05,
                     power_tol: float = 3.0) -> list[Path]:
    """Regenerate the reference tables named in ``which``.

    Writes one CSV per table plus ``diff_report.csv`` comparing every cell
    against the embedded reference values. Power cells reuse one set of
    replications per (alternative, n) across the (alpha, J) grid; each cell
    remains a full reps_power-replication estimate.
    """
    which = list(which)
    if not which:
        return []
    unknown = [t for t in which if t not in TABLE_IDS]
    if unknown:
        raise ConfigurationError(
            f"unknown table ids {unknown}; available: {list(TABLE_IDS)}")
    outdir = Path(output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    diff = _DiffSink()
    written = []
    for table_id in which:
        kind, short = table_id.split("-", 1)
        if kind == "appendix":
            written.append(_appendix_table(short, reps_critical, master_seed,
                                           threads, quantile_rtol, outdir, diff))
        else:
            short, flavor = short.rsplit("-", 1)
            if flavor == "nn":
                written.append(_power_nn_table(short, reps_critical, reps_power,
                                               master_seed, threads, power_tol,
                                               outdir, diff))
            else:
                written.append(_power_classical_table(
                    short, reps_critical, reps_power, master_seed, threads,
                    power_tol, outdir, diff))
    report = outdir / "diff_report.csv"
    diff.write(report)
    written.append(report)
    return written


def write_power_csv(path, results: list[PowerResult]) -> None:
    """Power results in the standard CSV layout (rates as fractions)."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(POWER_HEADER)
        for res in results:
            spec = res.spec
            alpha = spec.statistic.alpha if isinstance(spec.statistic, NNStatistic) else ""
            j = spec.statistic.J if isinstance(spec.statistic, NNStatistic) else ""
            w.writerow([
                spec.space.kind, spec.label,
                _fmt(alpha) if alpha != "" else "", j, spec.n,
                sampling.alternative_label(res.alternative), res.reps,
                _fmt(res.rejection_rate), _fmt(res.ci_half_width),
            ])


def write_critval_csv(path, rows: list[CriticalValueRow]) -> None:
    table = CriticalValueTable(rows)
    table.to_csv(path)
