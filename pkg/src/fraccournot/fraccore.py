"""Caputo-like fractional difference integrator for autonomous maps.

A system ``Δ^ν x(t) = f(x(t + ν - 1))`` started at ``a = 0`` with order
``0 < ν <= 1`` is equivalent to the discrete sum

.. math::

    x(n) = x(0) + \\sum_{i=1}^{n} w_{n-i} f(x(i-1)),
    \\qquad w_j = \\frac{\\Gamma(j + \\nu)}{\\Gamma(\\nu)\\Gamma(j + 1)},

which is what :func:`integrate` evaluates, using the full history.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numba
import numpy as np

DEFAULT_GUARD = 1.0e6


def check_order(nu: float) -> float:
    """Validate a fractional order, returning it as a float."""
    nu = float(nu)
    if not (0.0 < nu <= 1.0) or math.isnan(nu):
        raise ValueError(f"fractional order must lie in (0, 1], got {nu!r}")
    return nu


@dataclass(frozen=True)
class MemoryWeights:
    """Memory-kernel coefficients ``coeffs[j] = Γ(j+ν) / (Γ(ν) Γ(j+1))``.

    The array is marked read-only so one instance can be shared between
    threads and integrations.
    """

    nu: float
    coeffs: np.ndarray = field(repr=False)

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1


def memory_weights(nu: float, n_max: int) -> MemoryWeights:
    """Kernel weights for lags ``0..n_max``.

    Built from the ratio recurrence ``w_j = w_{j-1} (j - 1 + ν) / j`` so no
    Gamma function is ever evaluated; this stays finite for any ``n_max``.
    """
    nu = check_order(nu)
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    coeffs = _weight_recurrence(nu, int(n_max))
    coeffs.setflags(write=False)
    return MemoryWeights(nu, coeffs)


@numba.njit(cache=True)
def _weight_recurrence(nu, n_max):
    w = np.empty(n_max + 1)
    w[0] = 1.0
    for j in range(1, n_max + 1):
        w[j] = w[j - 1] * ((j - 1 + nu) / j)
    return w


@dataclass(frozen=True)
class MapFn:
    """Right-hand side ``f`` of a fractional difference system."""

    dim: int
    eval: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.eval(x)


@dataclass(frozen=True)
class Trajectory:
    """States ``x(0..N)`` of one integration.

    If the divergence guard tripped, ``diverged_at`` is the index of the
    offending state; it is the last row of ``states`` and may be non-finite.
    """

    states: np.ndarray
    nu: float
    diverged_at: int | None = None

    @property
    def diverged(self) -> bool:
        return self.diverged_at is not None

    def __len__(self) -> int:
        return len(self.states)


@numba.njit(cache=True)
def _memory_sum(w, F, x0, n, out):
    # oldest term first, starting from x(0); at ν = 1 this reproduces
    # x(n) = x(n-1) + f(x(n-1)) bit for bit
    for k in range(x0.shape[0]):
        acc = x0[k]
        for i in range(1, n + 1):
            acc += w[n - i] * F[i - 1, k]
        out[k] = acc


@numba.njit(cache=True)
def _memory_sum_compensated(w, F, x0, n, out):
    # Neumaier summation
    for k in range(x0.shape[0]):
        acc = x0[k]
        comp = 0.0
        for i in range(1, n + 1):
            term = w[n - i] * F[i - 1, k]
            t = acc + term
            if abs(acc) >= abs(term):
                comp += (acc - t) + term
            else:
                comp += (term - t) + acc
            acc = t
        out[k] = acc + comp


def integrate(
    f: MapFn | Callable[[np.ndarray], np.ndarray],
    nu: float,
    x0,
    n_steps: int,
    guard: float = DEFAULT_GUARD,
    *,
    weights: MemoryWeights | None = None,
    compensated: bool = False,
) -> Trajectory:
    """Integrate ``x(n) = x(0) + Σ_{i=1}^{n} w_{n-i} f(x(i-1))`` for ``n <= n_steps``.

    Integration stops at the first state with a component whose magnitude
    exceeds ``guard`` (or is not finite); that index is reported as
    ``diverged_at``. Precomputed ``weights`` for the same order may be passed
    to share them between runs.
    """
    nu = check_order(nu)
    n_steps = int(n_steps)
    if n_steps < 1:
        raise ValueError(f"n_steps must be positive, got {n_steps}")
    if not guard > 0:
        raise ValueError(f"guard must be positive, got {guard}")
    x0 = np.array(x0, dtype=float).reshape(-1)
    if isinstance(f, MapFn) and f.dim != x0.size:
        raise ValueError(f"initial state has dimension {x0.size}, map expects {f.dim}")
    if weights is None:
        weights = memory_weights(nu, n_steps - 1)
    elif weights.nu != nu or weights.n_max < n_steps - 1:
        raise ValueError("weights do not match the requested order/length")
    w = weights.coeffs
    kernel = _memory_sum_compensated if compensated else _memory_sum

    dim = x0.size
    states = np.empty((n_steps + 1, dim))
    rhs = np.empty((n_steps, dim))
    states[0] = x0
    diverged_at = None
    for n in range(1, n_steps + 1):
        rhs[n - 1] = f(states[n - 1])
        kernel(w, rhs, x0, n, states[n])
        x = states[n]
        if not np.all(np.abs(x) <= guard):
            diverged_at = n
            break
    if diverged_at is not None:
        states = states[: diverged_at + 1]
    return Trajectory(states=states, nu=nu, diverged_at=diverged_at)
