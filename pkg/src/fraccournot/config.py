"""Experiment configuration: a flat ``dotted.key = value`` text format.

Example::

    # stable regime
    model.alpha1 = 0.45
    run.nu = 0.99
    seed = 7

Lines starting with ``#`` are comments. Unknown keys are rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .chaos01 import ChaosConfig
from .cournot import DuopolyParams
from .sweep import SweepConfig


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    alpha1: float = 0.45
    alpha2: float = 0.12
    b: float = 6.0
    d: float = 4.1
    c1: float = 0.2
    c2: float = 0.3
    nu: float = 0.99
    q1_0: float = 0.3
    q2_0: float = 0.3
    steps: int = 3500
    transient: int = 500
    guard: float = 1.0e6
    compensated: bool = False
    n_c: int = 100
    c_min: float = math.pi / 5
    c_max: float = 4 * math.pi / 5
    msd_cutoff_fraction: float = 0.1
    k_points: int = 3000
    observable: str = "q1"
    nu_start: float = 0.002
    nu_end: float = 0.998
    nu_step: float = 0.002
    bif_keep: int = 100
    workers: int = 1
    svg: bool = True
    out: str = "out"
    seed: int = 0

    def params(self) -> DuopolyParams:
        return DuopolyParams(self.alpha1, self.alpha2, self.b, self.d, self.c1, self.c2)

    @property
    def x0(self) -> tuple[float, float]:
        return (self.q1_0, self.q2_0)

    def chaos_config(self) -> ChaosConfig:
        return ChaosConfig(self.n_c, self.c_min, self.c_max, self.msd_cutoff_fraction, self.seed)

    def sweep_config(self) -> SweepConfig:
        return SweepConfig(
            nu_start=self.nu_start,
            nu_end=self.nu_end,
            nu_step=self.nu_step,
            transient=self.transient,
            bif_keep=self.bif_keep,
            k_points=self.k_points,
            params=self.params(),
            x0=self.x0,
            chaos_cfg=self.chaos_config(),
            guard=self.guard,
            observable=self.observable,
        )


# dotted key -> field name, in rendering order
KEYS = {
    "model.alpha1": "alpha1",
    "model.alpha2": "alpha2",
    "model.b": "b",
    "model.d": "d",
    "model.c1": "c1",
    "model.c2": "c2",
    "run.nu": "nu",
    "run.q1_0": "q1_0",
    "run.q2_0": "q2_0",
    "run.steps": "steps",
    "run.transient": "transient",
    "run.guard": "guard",
    "run.compensated": "compensated",
    "chaos.n_c": "n_c",
    "chaos.c_min": "c_min",
    "chaos.c_max": "c_max",
    "chaos.msd_cutoff_fraction": "msd_cutoff_fraction",
    "chaos.k_points": "k_points",
    "chaos.observable": "observable",
    "sweep.nu_start": "nu_start",
    "sweep.nu_end": "nu_end",
    "sweep.nu_step": "nu_step",
    "sweep.bif_keep": "bif_keep",
    "sweep.workers": "workers",
    "sweep.svg": "svg",
    "output.dir": "out",
    "seed": "seed",
}

_TYPES = {f.name: f.type for f in fields(ExperimentConfig)}


def coerce(name: str, text: str):
    """Convert a textual value for field ``name`` to its declared type."""
    kind = _TYPES[name]
    text = text.strip()
    try:
        if kind == "bool":
            low = text.lower()
            if low in ("true", "yes", "1", "on"):
                return True
            if low in ("false", "no", "0", "off"):
                return False
            raise ValueError(text)
        if kind == "int":
            return int(text)
        if kind == "float":
            return float(text)
    except ValueError:
        raise ConfigError(f"{name}: cannot parse {text!r} as {kind}") from None
    return text


def _render_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def render(cfg: ExperimentConfig) -> str:
    lines = [f"{key} = {_render_value(getattr(cfg, name))}" for key, name in KEYS.items()]
    return "\n".join(lines) + "\n"


def parse(text: str, base: ExperimentConfig | None = None) -> ExperimentConfig:
    updates = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        if key not in KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        updates[KEYS[key]] = coerce(KEYS[key], value)
    return replace(base or ExperimentConfig(), **updates)


def load(path: str | Path, base: ExperimentConfig | None = None) -> ExperimentConfig:
    return parse(Path(path).read_text(), base)
