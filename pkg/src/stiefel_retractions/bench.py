"""Benchmark harness: geodesic-deviation curves, convergence order, timing.

The accuracy experiment generates a triple (U0, xi, U1) with
Exp_{U0}(xi) = U1 under the Euclidean metric and a prescribed distance,
pulls U1 back through each inverse retraction to get xi_R, and records
the Frobenius deviation between the geodesic t -> Exp(t xi) and the
retraction curve t -> R(t xi_R) on an equidistant grid in [0, 1].
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import (
    BETA_EUCLIDEAN,
    StiefelPoint,
    TangentVector,
    exp_beta,
    rand_point,
    rand_tangent,
)
from .matfun import ValidationError
from .retractions import RETRACTION_PAIRS

DEFAULT_DISTANCE = np.pi / 2
DEFAULT_STEPS = 51
DEFAULT_REPEATS = 100
WARMUP_RUNS = 3


@dataclass
class ExperimentConfig:
    n: int
    p: int
    distance: float = DEFAULT_DISTANCE
    steps: int = DEFAULT_STEPS
    seed: int = 0
    kinds: tuple[str, ...] = ("pf", "pl")
    repeats: int = DEFAULT_REPEATS

    def __post_init__(self):
        if self.p > self.n:
            raise ValidationError(f"need p <= n, got n={self.n}, p={self.p}")
        if self.steps < 2:
            raise ValidationError("steps must be >= 2")
        if self.distance < 0:
            raise ValidationError("distance must be nonnegative")
        unknown = [k for k in self.kinds if k not in RETRACTION_PAIRS]
        if unknown:
            raise ValidationError(f"unknown retraction kinds: {unknown}")


@dataclass
class ErrorCurveRecord:
    t: float
    errors: dict[str, float] = field(default_factory=dict)


@dataclass
class TimingRecord:
    kind: str
    mean_seconds: float
    roundtrip_norm_mean: float


def gen_triple(cfg: ExperimentConfig) -> tuple[StiefelPoint, TangentVector, StiefelPoint]:
    """Seeded triple (U0, xi, U1) with U1 = Exp_{U0}(xi) and ||xi||_F = distance."""
    rng = np.random.default_rng(cfg.seed)
    U0 = rand_point(cfg.n, cfg.p, rng)
    xi = rand_tangent(U0, cfg.distance, rng)
    return U0, xi, exp_beta(xi, BETA_EUCLIDEAN)


def error_curve(
    triple: tuple[StiefelPoint, TangentVector, StiefelPoint],
    kinds: tuple[str, ...],
    steps: int = DEFAULT_STEPS,
) -> list[ErrorCurveRecord]:
    """Per-step deviations between the geodesic and each retraction curve.

    The geodesic point at each t is computed once and shared by all kinds.
    """
    U0, xi, U1 = triple
    xi_r = {k: RETRACTION_PAIRS[k][1](U0, U1) for k in kinds}
    records = []
    for k in range(steps):
        t = k / (steps - 1)
        geo = exp_beta(xi.scaled(t), BETA_EUCLIDEAN).U
        rec = ErrorCurveRecord(t)
        for kind in kinds:
            curve = RETRACTION_PAIRS[kind][0](xi_r[kind].scaled(t)).U
            rec.errors[kind] = float(np.linalg.norm(geo - curve))
        records.append(rec)
    return records


def max_errors(records: list[ErrorCurveRecord]) -> dict[str, float]:
    out: dict[str, float] = {}
    for rec in records:
        for kind, err in rec.errors.items():
            out[kind] = max(out.get(kind, 0.0), err)
    return out


def convergence_slope(
    xi: TangentVector,
    kind: str,
    beta: float,
    t_grid: np.ndarray | None = None,
) -> float:
    """Least-squares slope of log error vs log t against Exp under the beta metric."""
    if t_grid is None:
        t_grid = np.logspace(-3, -1, 12)
    ret = RETRACTION_PAIRS[kind][0]
    errs = [
        np.linalg.norm(ret(xi.scaled(t)).U - exp_beta(xi.scaled(t), beta).U)
        for t in t_grid
    ]
    return float(np.polyfit(np.log(t_grid), np.log(errs), 1)[0])


def timing_run(cfg: ExperimentConfig, kind: str) -> TimingRecord:
    """Mean wall-clock time of the inverse retraction over fresh random pairs.

    Each repeat generates a fresh (U0, xi) at the configured distance,
    forms U1 = R(xi), and times only the inverse evaluation. The mean of
    ||R^{-1}(R(xi)) - xi||_F is recorded alongside. Warmup runs are
    excluded from the statistics.
    """
    ret, inv = RETRACTION_PAIRS[kind]
    rng = np.random.default_rng(cfg.seed)

    def fresh_pair():
        U0 = rand_point(cfg.n, cfg.p, rng)
        xi = rand_tangent(U0, cfg.distance, rng)
        return U0, xi, ret(xi)

    for _ in range(WARMUP_RUNS):
        U0, xi, U1 = fresh_pair()
        inv(U0, U1)

    times = []
    roundtrips = []
    for _ in range(cfg.repeats):
        U0, xi, U1 = fresh_pair()
        t0 = time.perf_counter()
        xi_back = inv(U0, U1)
        times.append(time.perf_counter() - t0)
        roundtrips.append(np.linalg.norm(xi_back.Xi - xi.Xi))
    return TimingRecord(kind, float(np.mean(times)), float(np.mean(roundtrips)))


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_curve_csv(path: Path, cfg: ExperimentConfig, records: list[ErrorCurveRecord]):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["n", "p", "seed", "kind", "t", "error"])
        for rec in records:
            for kind, err in rec.errors.items():
                w.writerow([cfg.n, cfg.p, cfg.seed, kind, _fmt(rec.t), _fmt(err)])


def write_maxerr_csv(path: Path, cfg: ExperimentConfig, maxima: dict[str, float]):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["n", "p", "seed", "kind", "max_error"])
        for kind, err in maxima.items():
            w.writerow([cfg.n, cfg.p, cfg.seed, kind, _fmt(err)])


def write_timing_csv(path: Path, cfg: ExperimentConfig, timings: list[TimingRecord]):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["n", "p", "seed", "kind", "mean_seconds", "roundtrip_norm"])
        for rec in timings:
            w.writerow(
                [cfg.n, cfg.p, cfg.seed, rec.kind,
                 _fmt(rec.mean_seconds), _fmt(rec.roundtrip_norm_mean)]
            )


def write_order_csv(path: Path, cfg: ExperimentConfig, slopes: dict[tuple[str, float], float]):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["n", "p", "seed", "kind", "beta", "slope"])
        for (kind, beta), slope in slopes.items():
            w.writerow([cfg.n, cfg.p, cfg.seed, kind, _fmt(beta), _fmt(slope)])


def emit_report(
    outdir: Path,
    cfg: ExperimentConfig,
    curve_records: list[ErrorCurveRecord] | None = None,
    timings: list[TimingRecord] | None = None,
    slopes: dict[tuple[str, float], float] | None = None,
) -> str:
    """Write CSV files for whatever results are present; return a text summary."""
    outdir = Path(outdir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create output directory {outdir}: {exc}") from exc

    lines = [f"experiment: n={cfg.n} p={cfg.p} dist={cfg.distance:.6g} seed={cfg.seed}"]
    if curve_records is not None:
        write_curve_csv(outdir / "curve.csv", cfg, curve_records)
        maxima = max_errors(curve_records)
        write_maxerr_csv(outdir / "maxerr.csv", cfg, maxima)
        lines.append("")
        lines.append("max geodesic deviation over the curve:")
        for kind, err in maxima.items():
            lines.append(f"  {kind:10s} {err:.4e}")
    if slopes is not None:
        write_order_csv(outdir / "order.csv", cfg, slopes)
        lines.append("")
        lines.append("convergence-order slopes vs Exp:")
        for (kind, beta), slope in slopes.items():
            lines.append(f"  {kind:10s} beta={beta:<4g} slope={slope:.3f}")
    if timings is not None:
        write_timing_csv(outdir / "timing.csv", cfg, timings)
        lines.append("")
        lines.append(f"inverse-retraction timing (mean over {cfg.repeats} runs,")
        lines.append("pairs generated at the configured distance):")
        for rec in timings:
            lines.append(
                f"  inv. {rec.kind:10s} {rec.mean_seconds:.4f}s  "
                f"roundtrip {rec.roundtrip_norm_mean:.4e}"
            )
    summary = "\n".join(lines) + "\n"
    (outdir / "summary.txt").write_text(summary)
    return summary
