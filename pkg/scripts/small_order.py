"""Small-order run: 3500 iterates at nu = 0.2 from (0.1, 0.3), time series,
phase portrait, (p, s) plane, and K on the last 3000 iterates of q1.

    python3 scripts/small_order.py [--nu 0.2] [--seeds 10] [--out out/small_order]
"""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from fraccournot import ChaosConfig, SweepConfig, run_single  # noqa: E402

parser = argparse.ArgumentParser()
parser.add_argument("--nu", type=float, default=0.2)
parser.add_argument("--seeds", type=int, default=10)
parser.add_argument("--out", default="out/small_order")
args = parser.parse_args()

cfg = SweepConfig()
results = [run_single(args.nu, cfg, x0=(0.1, 0.3), chaos_cfg=ChaosConfig(rng_seed=s)) for s in range(1, args.seeds + 1)]
traj, res = results[0]
ks = [r.k_median for _, r in results]
print(f"nu = {args.nu}: K per seed " + " ".join(f"{k:+.4f}" for k in ks))
print("last iterates of q1:", np.round(traj.states[-6:, 0], 5))

out = Path(args.out)
out.mkdir(parents=True, exist_ok=True)
fig, axes = plt.subplots(2, 2, figsize=(10, 8))
n = np.arange(300)
axes[0, 0].plot(n, traj.states[:300, 0], ".", ms=2)
axes[0, 0].set_title("q1, first 300 iterates")
axes[0, 1].plot(n, traj.states[:300, 1], ".", ms=2)
axes[0, 1].set_title("q2, first 300 iterates")
axes[1, 0].plot(traj.states[501:, 0], traj.states[501:, 1], ".", ms=1)
axes[1, 0].set_title("phase portrait (post-transient)")
p, s = res.sample_ps
axes[1, 1].plot(p, s, lw=0.5)
axes[1, 1].set_title(f"(p, s) at c = {res.sample_c:.3f}, K = {res.k_median:.3f}")
fig.tight_layout()
fig.savefig(out / "small_order.png", dpi=120)
print(f"wrote {out / 'small_order.png'}")
