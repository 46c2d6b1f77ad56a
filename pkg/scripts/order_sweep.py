"""Bifurcation samples of q1 and the 0-1 statistic K over nu in (0, 1).

    python3 scripts/order_sweep.py [--step 0.002] [--workers 4] [--out out/sweep]
"""

import argparse
import time
from pathlib import Path

import numpy as np

from fraccournot import ChaosConfig, SweepConfig, run_sweep
from fraccournot.plot import sweep_svg

parser = argparse.ArgumentParser()
parser.add_argument("--step", type=float, default=0.002)
parser.add_argument("--workers", type=int, default=1)
parser.add_argument("--seed", type=int, default=1)
parser.add_argument("--out", default="out/sweep")
args = parser.parse_args()

cfg = SweepConfig(nu_start=args.step, nu_end=1 - args.step, nu_step=args.step, chaos_cfg=ChaosConfig(rng_seed=args.seed))
t0 = time.perf_counter()
rows = run_sweep(cfg, workers=args.workers)
print(f"{len(rows)} orders in {time.perf_counter() - t0:.1f} s")

ks = np.array([np.nan if r.k is None else r.k for r in rows])
nus = np.array([r.nu for r in rows])
for lo, hi in [(0, 0.2), (0.2, 0.4), (0.4, 0.6), (0.6, 0.8), (0.8, 0.9765), (0.9765, 1)]:
    sel = (nus >= lo) & (nus < hi) & np.isfinite(ks)
    if not sel.any():
        continue
    print(f"nu in [{lo:.4f}, {hi:.4f}): median K {np.median(ks[sel]):+.3f}, max K {np.max(ks[sel]):+.3f}")

out = Path(args.out)
out.mkdir(parents=True, exist_ok=True)
sweep_svg(rows, out / "sweep.svg")
print(f"wrote {out / 'sweep.svg'}")
