"""Order sweeps of the fractional duopoly: bifurcation samples and K per order."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .chaos01 import ChaosConfig, ChaosResult, k_statistic
from .cournot import DuopolyParams, duopoly_map
from .fraccore import DEFAULT_GUARD, Trajectory, check_order, integrate

OBSERVABLES = {"q1": 0, "q2": 1}


@dataclass(frozen=True)
class SweepConfig:
    nu_start: float = 0.002
    nu_end: float = 0.998
    nu_step: float = 0.002
    transient: int = 500
    bif_keep: int = 100
    k_points: int = 3000
    params: DuopolyParams = field(default_factory=DuopolyParams)
    x0: tuple[float, float] = (0.3, 0.3)
    chaos_cfg: ChaosConfig = field(default_factory=ChaosConfig)
    guard: float = DEFAULT_GUARD
    observable: str = "q1"

    def __post_init__(self):
        if not (0 < self.nu_start <= self.nu_end < 1):
            raise ValueError(f"need 0 < nu_start <= nu_end < 1, got [{self.nu_start}, {self.nu_end}]")
        if not self.nu_step > 0:
            raise ValueError(f"nu_step must be positive, got {self.nu_step}")
        if self.transient < 0 or self.bif_keep < 0 or self.k_points < 1:
            raise ValueError("transient and bif_keep must be >= 0, k_points >= 1")
        if self.observable not in OBSERVABLES:
            raise ValueError(f"observable must be one of {sorted(OBSERVABLES)}, got {self.observable!r}")

    @property
    def total_steps(self) -> int:
        return self.transient + max(self.bif_keep, self.k_points)


@dataclass(frozen=True)
class SweepRow:
    nu: float
    bif_values: np.ndarray
    k: float | None
    diverged: bool
    index: int = 0


def nu_grid(cfg: SweepConfig) -> np.ndarray:
    """Orders ``nu_start + i * nu_step`` up to ``nu_end``, computed from the integer index."""
    n_rows = math.floor((cfg.nu_end - cfg.nu_start) / cfg.nu_step + 1e-9) + 1
    return np.round(cfg.nu_start + np.arange(n_rows) * cfg.nu_step, 12)


def row_seed(base_seed: int, index: int) -> int:
    """Per-row RNG seed, stable across runs and independent of execution order."""
    return int(np.random.SeedSequence([int(base_seed), int(index)]).generate_state(1)[0])


def post_transient(traj: Trajectory, transient: int, count: int, column: int = 0) -> np.ndarray:
    """Up to ``count`` iterates after discarding ``x(1..transient)``; ``x(0)`` is never used."""
    start = transient + 1
    seg = traj.states[start : start + count, column]
    return seg[np.isfinite(seg)] if traj.diverged else seg


def run_single(
    nu: float, cfg: SweepConfig, x0=None, chaos_cfg: ChaosConfig | None = None
) -> tuple[Trajectory, ChaosResult | None]:
    """Integrate ``cfg.total_steps`` iterates at order ``nu`` and run the 0-1 test on the tail.

    The chaos result is ``None`` when the trajectory diverged before the
    test window was complete.
    """
    nu = check_order(nu)
    x0 = cfg.x0 if x0 is None else x0
    traj = integrate(duopoly_map(cfg.params), nu, x0, cfg.total_steps, cfg.guard)
    if traj.diverged:
        return traj, None
    series = post_transient(traj, cfg.transient, cfg.k_points, OBSERVABLES[cfg.observable])
    return traj, k_statistic(series, chaos_cfg or cfg.chaos_cfg)


def _run_row(args) -> SweepRow:
    index, nu, cfg = args
    chaos_cfg = replace(cfg.chaos_cfg, rng_seed=row_seed(cfg.chaos_cfg.rng_seed, index))
    traj, result = run_single(nu, cfg, chaos_cfg=chaos_cfg)
    bif = post_transient(traj, cfg.transient, cfg.bif_keep, OBSERVABLES[cfg.observable])
    return SweepRow(
        nu=float(nu),
        bif_values=bif,
        k=None if result is None else result.k_median,
        diverged=traj.diverged,
        index=index,
    )


def run_sweep(cfg: SweepConfig, workers: int = 1) -> list[SweepRow]:
    """One row per grid order; divergent trajectories become rows with ``diverged=True``."""
    jobs = [(i, nu, cfg) for i, nu in enumerate(nu_grid(cfg))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_row, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        rows = [_run_row(job) for job in jobs]
    return sorted(rows, key=lambda r: r.nu)
