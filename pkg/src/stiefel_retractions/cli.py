"""Command-line benchmark harness.

Subcommands:
  curve    geodesic-deviation curves, writes curve.csv + maxerr.csv
  order    convergence-order slopes vs the Riemannian exponential
  timing   inverse-retraction timing, writes timing.csv
  all      all of the above into one output directory
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .bench import (
    DEFAULT_REPEATS,
    DEFAULT_STEPS,
    ExperimentConfig,
    convergence_slope,
    emit_report,
    error_curve,
    gen_triple,
    max_errors,
    timing_run,
)
from .core import BETA_CANONICAL, BETA_EUCLIDEAN
from .matfun import DomainError, ValidationError


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, default=1000, help="ambient dimension")
    p.add_argument("--p", type=int, default=400, help="frame size")
    p.add_argument("--dist", type=float, default=np.pi / 2,
                   help="Frobenius norm of the generating tangent")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS,
                   help="curve discretization steps")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kinds", type=str, default="pf,pl",
                   help="comma-separated: pf, pl, pl_cayley")
    p.add_argument("--repeats", type=int, default=DEFAULT_REPEATS,
                   help="timing repetitions")
    p.add_argument("--out", type=Path, default=Path("bench_out"),
                   help="output directory")


def _config(args) -> ExperimentConfig:
    kinds = tuple(k.strip() for k in args.kinds.split(",") if k.strip())
    return ExperimentConfig(
        n=args.n, p=args.p, distance=args.dist, steps=args.steps,
        seed=args.seed, kinds=kinds, repeats=args.repeats,
    )


def _run_curve(cfg: ExperimentConfig):
    records = error_curve(gen_triple(cfg), cfg.kinds, cfg.steps)
    maxima = max_errors(records)
    ok = True
    if "pf" in maxima and "pl" in maxima and not maxima["pl"] < maxima["pf"]:
        print("INVARIANT FAILED: max error PL is not below max error PF",
              file=sys.stderr)
        ok = False
    return records, ok


def _run_order(cfg: ExperimentConfig):
    _, xi, _ = gen_triple(cfg)
    slopes = {}
    for kind in cfg.kinds:
        slopes[(kind, BETA_EUCLIDEAN)] = convergence_slope(xi, kind, BETA_EUCLIDEAN)
    if "pl" in cfg.kinds:
        slopes[("pl", BETA_CANONICAL)] = convergence_slope(xi, "pl", BETA_CANONICAL)
    return slopes


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="stiefel-bench",
        description="Stiefel retraction accuracy, order, and timing experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("curve", "order", "timing", "all"):
        _add_common(sub.add_parser(name))
    args = parser.parse_args(argv)

    try:
        cfg = _config(args)
        records = timings = slopes = None
        ok = True
        if args.command in ("curve", "all"):
            records, ok = _run_curve(cfg)
        if args.command in ("order", "all"):
            slopes = _run_order(cfg)
        if args.command in ("timing", "all"):
            timings = [timing_run(cfg, kind) for kind in cfg.kinds]
        summary = emit_report(args.out, cfg, records, timings, slopes)
    except (DomainError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(summary, end="")
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
