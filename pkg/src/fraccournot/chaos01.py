"""The 0-1 test for chaos (Gottwald & Melbourne), correlation method.

For a scalar observable ``φ(1..N)`` and a frequency ``c`` the series is
driven along the plane via the translation variables

    p(n) = Σ_{j<=n} φ(j) cos(jc),    s(n) = Σ_{j<=n} φ(j) sin(jc).

Their mean-square displacement grows linearly for chaotic input and stays
bounded for regular input. ``K_c`` is the correlation between the lag ``n``
and the modified displacement ``D(n) = M(n) - V_osc(n)``; the reported
statistic is the median of ``K_c`` over random frequencies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# spread of D relative to the oscillation scale below which D counts as constant
DEGENERATE_RTOL = 1e-10


@dataclass(frozen=True)
class ChaosConfig:
    n_c: int = 100
    c_min: float = math.pi / 5
    c_max: float = 4 * math.pi / 5
    msd_cutoff_fraction: float = 0.1
    rng_seed: int = 0

    def __post_init__(self):
        if not (0 < self.c_min < self.c_max < math.pi):
            raise ValueError(f"need 0 < c_min < c_max < pi, got ({self.c_min}, {self.c_max})")
        if not (0 < self.msd_cutoff_fraction <= 0.5):
            raise ValueError(f"msd_cutoff_fraction must lie in (0, 0.5], got {self.msd_cutoff_fraction}")
        if self.n_c < 1:
            raise ValueError(f"n_c must be at least 1, got {self.n_c}")

    def cutoff(self, length: int) -> int:
        return max(1, int(length * self.msd_cutoff_fraction))


@dataclass(frozen=True)
class KcRecord:
    c: float
    k: float
    degenerate: bool = False


@dataclass(frozen=True)
class ChaosResult:
    k_median: float
    k_per_c: tuple[KcRecord, ...]
    sample_c: float
    sample_ps: tuple[np.ndarray, np.ndarray] = field(repr=False)

    @property
    def degenerate(self) -> bool:
        return all(r.degenerate for r in self.k_per_c)

    @property
    def n_degenerate(self) -> int:
        return sum(r.degenerate for r in self.k_per_c)


def _as_series(series) -> np.ndarray:
    phi = np.asarray(series, dtype=float).reshape(-1)
    if phi.size == 0:
        raise ValueError("series is empty")
    if not np.all(np.isfinite(phi)):
        raise ValueError("series contains non-finite values")
    return phi


def translation_components(series, c: float) -> tuple[np.ndarray, np.ndarray]:
    phi = _as_series(series)
    jc = np.arange(1, phi.size + 1) * c
    return np.cumsum(phi * np.cos(jc)), np.cumsum(phi * np.sin(jc))


def _msd_fft(z: np.ndarray, cutoff: int) -> np.ndarray:
    """Mean of ``|z[k+n] - z[k]|^2`` over ``k`` for ``n = 1..cutoff``, along the last axis."""
    N = z.shape[-1]
    size = 1 << (2 * N - 1).bit_length()
    Z = np.fft.fft(z, size, axis=-1)
    # lagged autocorrelation Σ_k z[k+n] conj(z[k])
    acf = np.fft.ifft(Z * np.conj(Z), axis=-1)[..., 1 : cutoff + 1].real
    sq = np.abs(z) ** 2
    csum = np.cumsum(sq, axis=-1)
    total = csum[..., -1:]
    lags = np.arange(1, cutoff + 1)
    head = csum[..., N - lags - 1]  # Σ_{k < N-n} |z_k|^2
    tail = total - csum[..., lags - 1]  # Σ_{k >= n} |z_k|^2
    return (head + tail - 2.0 * acf) / (N - lags)


def _oscillation_term(mean: float, c, cutoff: int) -> np.ndarray:
    c = np.atleast_1d(np.asarray(c, dtype=float))[:, None]
    n = np.arange(1, cutoff + 1)
    return mean**2 * (1.0 - np.cos(n * c)) / (1.0 - np.cos(c))


def mean_square_displacement(p, s, series, cutoff: int, c: float) -> np.ndarray:
    """Modified mean-square displacement ``D(1..cutoff)``.

    The bounded oscillatory part ``(mean φ)^2 (1 - cos nc) / (1 - cos c)`` is
    subtracted from the finite-sample displacement ``M(n)``.
    """
    p = np.asarray(p, dtype=float)
    s = np.asarray(s, dtype=float)
    phi = _as_series(series)
    if not (p.shape == s.shape == phi.shape):
        raise ValueError("p, s and series must have equal length")
    cutoff = int(cutoff)
    if cutoff >= phi.size:
        raise ValueError(f"cutoff {cutoff} must be smaller than the series length {phi.size}")
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    M = _msd_fft(p + 1j * s, cutoff)
    return M - _oscillation_term(phi.mean(), c, cutoff)[0]


def _k_from_displacement(D: np.ndarray, scale: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = np.arange(1, D.shape[-1] + 1, dtype=float)
    spread = np.max(np.abs(D - D.mean(axis=-1, keepdims=True)), axis=-1)
    degenerate = spread <= DEGENERATE_RTOL * scale
    dn = n - n.mean()
    dD = D - D.mean(axis=-1, keepdims=True)
    with np.errstate(invalid="ignore", divide="ignore"):
        r = (dD @ dn) / np.sqrt((dD * dD).sum(axis=-1) * (dn @ dn))
    r = np.where(degenerate | ~np.isfinite(r), 0.0, r)
    return np.clip(r, -1.0, 1.0), degenerate


def _k_batch(phi: np.ndarray, cs: np.ndarray, cutoff: int):
    if cutoff >= phi.size:
        raise ValueError(f"cutoff {cutoff} must be smaller than the series length {phi.size}")
    jc = np.outer(cs, np.arange(1, phi.size + 1))
    p = np.cumsum(phi * np.cos(jc), axis=-1)
    s = np.cumsum(phi * np.sin(jc), axis=-1)
    mean = phi.mean()
    D = _msd_fft(p + 1j * s, cutoff) - _oscillation_term(mean, cs, cutoff)
    scale = np.mean(phi * phi) / (1.0 - np.cos(cs))
    k, degenerate = _k_from_displacement(D, scale)
    return k, degenerate, p, s


def k_for_c(series, c: float, cfg: ChaosConfig | None = None) -> tuple[float, bool]:
    """Correlation ``K_c`` for one frequency, with a flag set when ``D`` is constant.

    A degenerate (constant) displacement yields ``K_c = 0``.
    """
    cfg = cfg or ChaosConfig()
    phi = _as_series(series)
    k, degenerate, _, _ = _k_batch(phi, np.array([float(c)]), cfg.cutoff(phi.size))
    return float(k[0]), bool(degenerate[0])


def draw_frequencies(cfg: ChaosConfig) -> np.ndarray:
    rng = np.random.default_rng(cfg.rng_seed)
    return rng.uniform(cfg.c_min, cfg.c_max, cfg.n_c)


def k_statistic(series, cfg: ChaosConfig | None = None) -> ChaosResult:
    """Median ``K`` over ``cfg.n_c`` seeded random frequencies: ≈0 regular, ≈1 chaotic."""
    cfg = cfg or ChaosConfig()
    phi = _as_series(series)
    cs = draw_frequencies(cfg)
    k, degenerate, p, s = _k_batch(phi, cs, cfg.cutoff(phi.size))
    records = tuple(KcRecord(float(c), float(kc), bool(dg)) for c, kc, dg in zip(cs, k, degenerate))
    return ChaosResult(
        k_median=float(np.median(k)),
        k_per_c=records,
        sample_c=float(cs[0]),
        sample_ps=(p[0].copy(), s[0].copy()),
    )
