"""Command-line front end.

Exit codes: 0 success, 1 a verification or cross-check failed, 2 bad usage or input.
Settings resolve as flags, then the JSON file named by ``STAIRCASE_TABLEAUX_CONFIG``,
then :data:`DEFAULTS`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__, _kernels
from .bijections import ShapeError, phi_map, psi
from .counting import MAX_ORACLE_CELLS, count_linear_extensions, eta_shape, skew_staircase_count
from .sampling import (
    benchmark_scaling,
    fitted_exponent,
    make_rng,
    read_csv,
    sample_shifted_syt,
    sample_skew_staircase,
    split_streams,
    to_grid,
    write_benchmark_csv,
    write_csv,
)
from .shapes import SkewShape, staircase
from .tableaux import Letter, Tableau, enumerate_standard
from .verify import SUITES, run_suite

CONFIG_ENV = "STAIRCASE_TABLEAUX_CONFIG"

DEFAULTS = {
    "max_n": 5,
    "threads": 1,
    "seed": 0,
    "oracle_bound": MAX_ORACLE_CELLS,
    "enumerate_limit": 100_000,
    "levels": [0.1, 0.25, 0.5, 0.75, 0.9],
    "bench_k": [50, 100, 200, 300, 400],
    "bench_reps": 3,
}

METHODS = ("formula", "feit", "oracle", "shifted")
FEIT_MAX_ROWS = 12


class UsageError(Exception):
    pass


def load_config(env=None) -> dict:
    env = os.environ if env is None else env
    config = dict(DEFAULTS)
    path = env.get(CONFIG_ENV)
    if path:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError(f"config {path} must hold a JSON object")
        unknown = set(data) - set(DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        config.update(data)
    return config


def resolve(args, config: dict, key: str):
    value = getattr(args, key, None)
    return config[key] if value is None else value


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _shape_args(args) -> tuple[int, int, int]:
    k = args.staircase
    a, b = args.rect if args.rect else (0, 0)
    if k < 2:
        raise UsageError("--staircase must be at least 2")
    if a < 0 or b < 0:
        raise UsageError("--rect sides must be nonnegative")
    if a * b == 0:
        a = b = 0
    elif a + b >= k:
        raise UsageError(f"need a + b < k, got {a} + {b} >= {k}")
    return k, a, b


def _applicable_methods(k: int, a: int, b: int, oracle_bound: int) -> list[str]:
    out = []
    if (k - a - b) % 2 == 0 and k >= 2:
        out.append("formula")
    if k - 1 <= FEIT_MAX_ROWS:
        out.append("feit")
    if SkewShape(staircase(k), [b] * a).size <= oracle_bound:
        out.append("oracle")
    out.append("shifted")
    return out


# -- commands -------------------------------------------------------------------------

def cmd_count(args, config) -> int:
    k, a, b = _shape_args(args)
    bound = resolve(args, config, "oracle_bound")
    methods = [args.method] if args.method else _applicable_methods(k, a, b, bound)
    values = {}
    for m in methods:
        try:
            if m == "oracle":
                values[m] = _oracle_count(k, a, b, bound)
            else:
                values[m] = skew_staircase_count(k, a, b, m)
        except ValueError as exc:
            raise UsageError(f"method {m}: {exc}") from None
    agree = len(set(values.values())) == 1
    value = next(iter(values.values()))
    payload = {"staircase": k, "rect": [a, b], "count": str(value),
               "methods": {m: str(v) for m, v in values.items()}, "agree": agree}
    if agree:
        text = str(value)
    else:
        text = "methods disagree: " + ", ".join(f"{m}={v}" for m, v in values.items())
    _emit(args, payload, text)
    return 0 if agree else 1


def _oracle_count(k, a, b, bound):
    return count_linear_extensions(SkewShape(staircase(k), [b] * a), bound=bound)


def cmd_verify(args, config) -> int:
    max_n = resolve(args, config, "max_n")
    threads = resolve(args, config, "threads")
    results = run_suite(args.suite, max_n=max_n, threads=threads)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({"suite": args.suite, "max_n": max_n, "ok": ok,
                          "checks": [r.to_json() for r in results]}, sort_keys=True))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.suite}.{r.name} ({r.seconds:.2f}s): {r.detail}")
        passed = sum(r.ok for r in results)
        print(f"{passed}/{len(results)} checks passed")
    return 0 if ok else 1


def _numbered(path: Path, i: int, count: int) -> Path:
    if count == 1:
        return path
    return path.with_name(f"{path.stem}-{i + 1}{path.suffix}")


def cmd_sample(args, config) -> int:
    k, a, b = _shape_args(args)
    seed = resolve(args, config, "seed")
    threads = resolve(args, config, "threads")
    count = args.count
    if count < 1:
        raise UsageError("--count must be positive")
    out = Path(args.out)

    def draw(rng):
        if args.shifted:
            return sample_shifted_syt(eta_shape(k, a, b), rng)
        return sample_skew_staircase(k, a, b, rng)

    # one stream keeps single samples bit-reproducible; batches get independent streams
    rngs = [make_rng(seed)] if count == 1 else split_streams(seed, count)
    paths = [_numbered(out, i, count) for i in range(count)]

    def task(i):
        write_csv(draw(rngs[i]), paths[i])
        return str(paths[i])

    if threads > 1 and count > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            written = list(pool.map(task, range(count)))
    else:
        written = [task(i) for i in range(count)]
    shape = "eta" if args.shifted else "skew staircase"
    _emit(args, {"staircase": k, "rect": [a, b], "seed": seed, "shifted": args.shifted,
                 "files": written},
          f"wrote {count} {shape} sample(s): {', '.join(written)}")
    return 0


def _parse_levels(text: str) -> list[float]:
    try:
        levels = sorted(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad --levels {text!r}") from None
    if not levels or not all(0 < t < 1 for t in levels):
        raise UsageError("levels must lie strictly between 0 and 1")
    return levels


def render_plot(t: Tableau, out, levels) -> None:
    """Level curves of ``entry / size`` over the diagram, saved as SVG."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    grid = to_grid(t)
    fig, ax = plt.subplots(figsize=(5, 5))
    ys, xs = np.mgrid[1:grid.shape[0] + 1, 1:grid.shape[1] + 1]
    masked = np.ma.masked_invalid(grid)
    if min(grid.shape) >= 2:
        ax.contour(xs, ys, masked, levels=levels, colors="black", linewidths=0.8)
    ax.imshow(masked, extent=(0.5, grid.shape[1] + 0.5, grid.shape[0] + 0.5, 0.5),
              cmap="Greys", alpha=0.15)
    ax.set_xlim(0.5, grid.shape[1] + 0.5)
    ax.set_ylim(grid.shape[0] + 0.5, 0.5)
    ax.set_aspect("equal")
    ax.set_axis_off()
    fig.savefig(out, format="svg", bbox_inches="tight")
    plt.close(fig)


def cmd_plot(args, config) -> int:
    levels = _parse_levels(args.levels) if args.levels else list(config["levels"])
    try:
        t = read_csv(args.input)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    render_plot(t, args.out, levels)
    _emit(args, {"in": args.input, "out": args.out, "levels": levels, "cells": len(t)},
          f"wrote {args.out}")
    return 0


def cmd_enumerate(args, config) -> int:
    k, a, b = _shape_args(args)
    limit = resolve(args, config, "enumerate_limit")
    total = skew_staircase_count(k, a, b, "shifted")
    if total > limit:
        raise UsageError(f"{total} tableaux exceed the enumeration limit {limit}")
    shape = SkewShape(staircase(k), [b] * a)
    with open(args.out, "w") as fh:
        for t in enumerate_standard(shape):
            fh.write(t.dumps() + "\n")
    _emit(args, {"staircase": k, "rect": [a, b], "count": total, "out": args.out},
          f"wrote {total} tableaux to {args.out}")
    return 0


def cmd_apply(args, config) -> int:
    try:
        with open(args.input) as fh:
            t = Tableau.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    try:
        if args.map == "phi":
            out = phi_map(t)
        else:
            # eta is symmetric in the rectangle sides, so they must be given
            if args.staircase is None:
                raise UsageError("psi needs --staircase (and --rect for a nonempty rectangle)")
            k, a, b = _shape_args(args)
            # JSON writes unmarked letters as plain integers
            t = t.map(lambda v: v if isinstance(v, Letter) else Letter(v, False))
            out = psi(t, rows=a, cols=b, n=k)
    except (ShapeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    print(out.dumps())
    return 0


def cmd_benchmark(args, config) -> int:
    ks = [int(x) for x in args.k.split(",")] if args.k else list(config["bench_k"])
    reps = resolve(args, config, "bench_reps")
    table = benchmark_scaling(ks, reps, seed=resolve(args, config, "seed"))
    if args.out:
        write_benchmark_csv(table, args.out)
    slope = fitted_exponent(table) if len(table) >= 2 else None
    lines = [f"k={k}: {t:.3f}s" for k, t in table]
    lines.append(f"backend {_kernels.BACKEND}; fitted exponent "
                 + ("n/a" if slope is None else f"{slope:.2f}"))
    _emit(args, {"backend": _kernels.BACKEND, "table": table, "exponent": slope}, "\n".join(lines))
    return 0


# -- parser ---------------------------------------------------------------------------

def _add_shape(p, required=True):
    p.add_argument("--staircase", type=int, required=required, metavar="K",
                   help="staircase delta_K = (K-1, ..., 1)")
    p.add_argument("--rect", type=int, nargs=2, metavar=("A", "B"),
                   help="remove the rectangle with A rows of length B (needs A + B < K)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="staircase-tableaux",
                                     description="Staircase-minus-rectangle tableaux: count, verify, sample, plot.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="machine-readable summary on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of standard tableaux of delta_K / (B^A)")
    _add_shape(p)
    p.add_argument("--method", choices=METHODS, help="one method; default cross-checks every applicable one")
    p.add_argument("--oracle-bound", dest="oracle_bound", type=int, help="largest shape for the brute-force oracle")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run exhaustive small-case checks")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--max-n", dest="max_n", type=int, help="largest staircase visited")
    p.add_argument("--threads", type=int, help="worker threads")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="uniform random tableau written as CSV")
    _add_shape(p)
    p.add_argument("--seed", type=int, help="random seed")
    p.add_argument("--count", type=int, default=1, help="number of samples, one file each")
    p.add_argument("--out", default="sample.csv", help="output CSV (numbered when --count > 1)")
    p.add_argument("--shifted", action="store_true",
                   help="sample the unmarked shifted tableau of eta instead")
    p.add_argument("--threads", type=int, help="worker threads for batches")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("plot", help="level curves of a sampled tableau as SVG")
    p.add_argument("--in", dest="input", required=True, help="CSV from the sample command")
    p.add_argument("--out", required=True, help="output SVG")
    p.add_argument("--levels", help="comma-separated fractions of the largest entry")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("enumerate", help="all standard tableaux as JSON lines")
    _add_shape(p)
    p.add_argument("--out", required=True)
    p.add_argument("--limit", dest="enumerate_limit", type=int, help="refuse larger enumerations")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("apply", help="apply phi or psi to a JSON tableau")
    p.add_argument("--map", choices=("phi", "psi"), required=True)
    p.add_argument("--in", dest="input", required=True)
    _add_shape(p, required=False)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("benchmark", help="time the sampler across staircase sizes")
    p.add_argument("--k", help="comma-separated staircase sizes")
    p.add_argument("--reps", dest="bench_reps", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="CSV table")
    p.set_defaults(func=cmd_benchmark)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config()
        return args.func(args, config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
