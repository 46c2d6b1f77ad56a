"""Outputs settling at the interior equilibrium for nu = 0.99 from (0.3, 0.3).

    python3 scripts/stabilization.py [--steps 1000] [--out out/stabilization]
"""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from fraccournot import DuopolyParams, duopoly_map, equilibria, integrate, nu_threshold_e4  # noqa: E402

parser = argparse.ArgumentParser()
parser.add_argument("--nu", type=float, default=0.99)
parser.add_argument("--steps", type=int, default=1000)
parser.add_argument("--out", default="out/stabilization")
args = parser.parse_args()

p = DuopolyParams()
e4 = equilibria(p).e4
traj = integrate(duopoly_map(p), args.nu, (0.3, 0.3), args.steps)
print(f"threshold {nu_threshold_e4(p):.4f}, nu = {args.nu}")
print(f"E4 = ({e4[0]:.4f}, {e4[1]:.4f}), final state = ({traj.states[-1, 0]:.4f}, {traj.states[-1, 1]:.4f})")

out = Path(args.out)
out.mkdir(parents=True, exist_ok=True)
fig, axes = plt.subplots(1, 2, figsize=(10, 4))
for k, ax in enumerate(axes):
    ax.plot(np.arange(len(traj.states)), traj.states[:, k], ".", ms=2)
    ax.axhline(e4[k], color="k", lw=0.5)
    ax.set_xlabel("n")
    ax.set_ylabel(f"q{k + 1}")
fig.tight_layout()
fig.savefig(out / "stabilization.png", dpi=120)
print(f"wrote {out / 'stabilization.png'}")
