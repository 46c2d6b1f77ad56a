"""Command-line front end.

Subcommands: ``simulate``, ``equilibria``, ``stability``, ``chaos``, ``sweep``.
Exit codes: 0 success (an unstable verdict is still success), 2 usage or
configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import logging
import math
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import chaos01, config, cournot, stability, sweep
from .fraccore import integrate

log = logging.getLogger("fraccournot")

EXIT_OK, EXIT_USAGE, EXIT_IO = 0, 2, 3


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, np.bool_)):
        return str(int(x))
    if isinstance(x, (int, np.integer)):
        return str(x)
    if x is None:
        return "nan"
    return f"{float(x):.17g}"


def write_csv(path: Path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])


def _outdir(cfg: config.ExperimentConfig) -> Path:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_simulate(cfg: config.ExperimentConfig, args) -> int:
    if cfg.steps < 1:
        raise config.ConfigError(f"run.steps must be positive, got {cfg.steps}")
    p = cfg.params()
    traj = integrate(cournot.duopoly_map(p), cfg.nu, cfg.x0, cfg.steps, cfg.guard, compensated=cfg.compensated)
    q = traj.states
    path = _outdir(cfg) / "trajectory.csv"
    write_csv(
        path,
        ["n", "q1", "q2", "price", "profit1", "profit2"],
        (
            (n, q1, q2, cournot.price(q1, q2, p), cournot.profit(q1, q2, 1, p), cournot.profit(q1, q2, 2, p))
            for n, (q1, q2) in enumerate(q)
        ),
    )
    print(f"nu = {cfg.nu}  steps = {len(q) - 1}  final (q1, q2) = ({q[-1, 0]:.6f}, {q[-1, 1]:.6f})")
    if traj.diverged:
        print(f"diverged at n = {traj.diverged_at} (guard {cfg.guard:g})")
    if not cournot.admissibility(q, p):
        print("note: trajectory leaves the economic region (negative output or price)")
    print(f"wrote {path}")
    return EXIT_OK


def cmd_equilibria(cfg: config.ExperimentConfig, args) -> int:
    p = cfg.params()
    eq = cournot.equilibria(p)
    tr, det = cournot.tr_det_at_e4(p)
    disc = tr * tr - 4 * det
    rows = [(name, q1, q2, cournot.residual((q1, q2), p)) for name, (q1, q2) in eq.points().items()]
    for name, q1, q2, res in rows:
        print(f"{name} = ({q1:.6f}, {q2:.6f})  residual {res:.2e}")
    print(f"m = {eq.m:.6f}")
    print(f"trJ(E4) = {tr:.6f}  detJ(E4) = {det:.6f}")
    print(f"(trJ)^2 - 4 detJ = {disc:.6f}")
    print(f"-trJ/2 - sqrt(detJ) = {-tr / 2 - math.sqrt(det):.6f}")
    try:
        print(f"nu threshold = {stability.nu_threshold_e4(p):.6f}")
    except stability.ComplexEigenvaluesError as exc:
        print(f"nu threshold: n/a ({exc})")
    path = _outdir(cfg) / "equilibria.csv"
    write_csv(path, ["point", "q1", "q2", "residual"], rows)
    print(f"wrote {path}")
    return EXIT_OK


def cmd_stability(cfg: config.ExperimentConfig, args) -> int:
    if args.tr is not None or args.det is not None:
        if args.tr is None or args.det is None:
            raise config.ConfigError("--tr and --det must be given together")
        tr, det = args.tr, args.det
        print(f"(trJ, detJ) = ({tr:.6f}, {det:.6f}) as given")
    else:
        p = cfg.params()
        tr, det = cournot.tr_det_at_e4(p)
        e4 = cournot.equilibria(p).e4
        print(f"E4 = ({e4[0]:.6f}, {e4[1]:.6f})")
        print(f"(trJ, detJ) = ({tr:.6f}, {det:.6f})")
    if cfg.nu >= 1.0:
        eigs = cournot.characteristic_roots(tr, det)
        stable = all(stability.classical_unit_disk(lam) for lam in eigs)
        print(f"nu = {cfg.nu}: classical map, test |1 + lambda| < 1")
        print(f"eigenvalues: {', '.join(f'{lam:.6g}' for lam in eigs)}")
        print("verdict: " + ("stable" if stable else "unstable"))
        return EXIT_OK
    try:
        v = stability.classify_2d(tr, det, cfg.nu)
    except stability.HypothesisViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"nu = {cfg.nu}  branch = {v.branch.value}")
    if v.nu_threshold is not None:
        print(f"nu threshold = {v.nu_threshold:.6f}")
    for d in v.details:
        flags = "".join([" (boundary)" if d.boundary else "", " (zero eigenvalue)" if d.degenerate else ""])
        print(f"eigenvalue {d.eigenvalue:.6g}: {'inside' if d.inside else 'outside'}{flags}")
    print("verdict: " + ("stable" if v.stable else "unstable"))
    return EXIT_OK


def _read_series(path: str, column: str) -> np.ndarray:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or column not in reader.fieldnames:
            raise config.ConfigError(f"column {column!r} not found in {path}")
        return np.array([float(row[column]) for row in reader])


def cmd_chaos(cfg: config.ExperimentConfig, args) -> int:
    ccfg = cfg.chaos_config()
    if args.series_csv:
        series = _read_series(args.series_csv, args.column or cfg.observable)
        print(f"series: {len(series)} points from {args.series_csv}")
    else:
        scfg = cfg.sweep_config()
        traj = integrate(cournot.duopoly_map(scfg.params), cfg.nu, cfg.x0, scfg.total_steps, cfg.guard)
        if traj.diverged:
            print(f"trajectory diverged at n = {traj.diverged_at}; no K computed")
            return EXIT_OK
        series = sweep.post_transient(traj, cfg.transient, cfg.k_points, sweep.OBSERVABLES[cfg.observable])
        print(f"nu = {cfg.nu}  x0 = {cfg.x0}  {len(series)} post-transient {cfg.observable} points")
    res = chaos01.k_statistic(series, ccfg)
    out = _outdir(cfg)
    write_csv(out / "kc.csv", ["c", "Kc"], ((r.c, r.k) for r in res.k_per_c))
    p, s = res.sample_ps
    write_csv(out / "ps.csv", ["n", "p", "s"], ((n, pn, sn) for n, (pn, sn) in enumerate(zip(p, s), 1)))
    print(f"K = {res.k_median:.4f}  (median over {len(res.k_per_c)} frequencies, seed {ccfg.rng_seed})")
    if res.n_degenerate:
        print(f"degenerate: {res.n_degenerate} of {len(res.k_per_c)} frequencies had constant displacement (K_c = 0)")
    print(f"wrote {out / 'kc.csv'} and {out / 'ps.csv'} (c = {res.sample_c:.6f})")
    return EXIT_OK


def cmd_sweep(cfg: config.ExperimentConfig, args) -> int:
    if cfg.nu_start > cfg.nu_end:
        raise config.ConfigError(f"empty order range [{cfg.nu_start}, {cfg.nu_end}]")
    scfg = cfg.sweep_config()
    rows = sweep.run_sweep(scfg, workers=cfg.workers)
    out = _outdir(cfg)
    write_csv(out / "bifurcation.csv", ["nu", cfg.observable], ((r.nu, v) for r in rows for v in r.bif_values))
    write_csv(out / "k.csv", ["nu", "K", "diverged"], ((r.nu, r.k, r.diverged) for r in rows))
    print(f"{len(rows)} orders, {sum(r.diverged for r in rows)} diverged")
    print(f"wrote {out / 'bifurcation.csv'} and {out / 'k.csv'}")
    if cfg.svg:
        from .plot import sweep_svg

        sweep_svg(rows, out / "sweep.svg", cfg.observable)
        print(f"wrote {out / 'sweep.svg'}")
    return EXIT_OK


COMMANDS = {
    "simulate": (cmd_simulate, "integrate the fractional duopoly and write the trajectory"),
    "equilibria": (cmd_equilibria, "report the four equilibria and the Jacobian at E4"),
    "stability": (cmd_stability, "stability verdict at E4 (or for a given trace/determinant)"),
    "chaos": (cmd_chaos, "0-1 test for chaos on a simulated or supplied series"),
    "sweep": (cmd_sweep, "bifurcation samples and K over a grid of orders"),
}


def _flag(key: str) -> str:
    name = config.KEYS[key]
    return "--" + name.replace("_", "-")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value configuration file")
    common.add_argument("--set", action="append", default=[], metavar="KEY=VALUE", help="override a dotted config key")
    over = common.add_argument_group("overrides (win over the config file)")
    for key, name in config.KEYS.items():
        over.add_argument(_flag(key), dest=f"opt_{name}", metavar=name.upper(), help=key)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="fraccournot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        if name == "stability":
            sp.add_argument("--tr", type=float, help="Jacobian trace (instead of E4)")
            sp.add_argument("--det", type=float, help="Jacobian determinant (instead of E4)")
        if name == "chaos":
            sp.add_argument("--series-csv", help="read the observable from this CSV instead of simulating")
            sp.add_argument("--column", help="CSV column to use (default: chaos.observable)")
    return parser


def resolve_config(args) -> config.ExperimentConfig:
    cfg = config.load(args.config) if args.config else config.ExperimentConfig()
    updates = {}
    for item in args.set:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in config.KEYS:
            raise config.ConfigError(f"--set expects KEY=VALUE with a known key, got {item!r}")
        updates[config.KEYS[key]] = config.coerce(config.KEYS[key], value)
    for name in config.KEYS.values():
        value = getattr(args, f"opt_{name}")
        if value is not None:
            updates[name] = config.coerce(name, value)
    cfg = replace(cfg, **updates)
    # fail early on invalid model/chaos/sweep settings
    cfg.params()
    cfg.chaos_config()
    if args.command == "sweep":
        cfg.sweep_config()
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    handler = COMMANDS[args.command][0]
    try:
        cfg = resolve_config(args)
        return handler(cfg, args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
