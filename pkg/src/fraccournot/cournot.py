"""Cournot duopoly with gradient output adjustment and long memory.

Linear inverse demand ``p = b - d (q1 + q2)``, quadratic costs
``C_i = c_i q_i^2 / 2``, and each firm moving its output in proportion to
``alpha_i q_i`` times its marginal profit.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .fraccore import MapFn


@dataclass(frozen=True)
class DuopolyParams:
    alpha1: float = 0.45
    alpha2: float = 0.12
    b: float = 6.0
    d: float = 4.1
    c1: float = 0.2
    c2: float = 0.3

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (np.isfinite(v) and v > 0):
                raise ValueError(f"{f.name} must be a positive finite number, got {v!r}")

    def alpha(self, i: int) -> float:
        return _pick(i, self.alpha1, self.alpha2)

    def c(self, i: int) -> float:
        return _pick(i, self.c1, self.c2)


def _pick(i, first, second):
    if i == 1:
        return first
    if i == 2:
        return second
    raise ValueError(f"firm index must be 1 or 2, got {i!r}")


def price(q1, q2, p: DuopolyParams):
    """Market-clearing price; not clamped at zero."""
    return p.b - p.d * (q1 + q2)


def profit(q1, q2, i: int, p: DuopolyParams):
    qi = _pick(i, q1, q2)
    return price(q1, q2, p) * qi - 0.5 * p.c(i) * qi * qi


def marginal_profit(q1, q2, i: int, p: DuopolyParams):
    """``∂Π_i/∂q_i = b - (c_i + 2d) q_i - d q_j``."""
    qi, qj = (q1, q2) if i == 1 else (q2, q1)
    return p.b - (p.c(i) + 2.0 * p.d) * qi - p.d * qj


def rhs(q, p: DuopolyParams) -> np.ndarray:
    """Adjustment vector field ``(α1 q1 Φ1, α2 q2 Φ2)``."""
    q1, q2 = q[0], q[1]
    return np.array(
        [
            p.alpha1 * q1 * (p.b - (p.c1 + 2.0 * p.d) * q1 - p.d * q2),
            p.alpha2 * q2 * (p.b - (p.c2 + 2.0 * p.d) * q2 - p.d * q1),
        ]
    )


def duopoly_map(p: DuopolyParams) -> MapFn:
    return MapFn(dim=2, eval=lambda q: rhs(q, p))


def admissibility(states, p: DuopolyParams) -> bool:
    """True when no state has a negative output or a negative price.

    Purely informational: the dynamics are never clamped.
    """
    states = np.asarray(states)
    if states.size == 0:
        return True
    finite = states[np.all(np.isfinite(states), axis=1)]
    prices = price(finite[:, 0], finite[:, 1], p)
    return bool(np.all(finite >= 0) and np.all(prices >= 0))


@dataclass(frozen=True)
class EquilibriumSet:
    e1: tuple[float, float]
    e2: tuple[float, float]
    e3: tuple[float, float]
    e4: tuple[float, float]
    m: float

    def points(self) -> dict[str, tuple[float, float]]:
        return {"E1": self.e1, "E2": self.e2, "E3": self.e3, "E4": self.e4}


def equilibria(p: DuopolyParams) -> EquilibriumSet:
    """The four fixed points, in the order boundary-origin, firm-2-only, firm-1-only, interior."""
    m = p.b / (p.c1 * p.c2 + 2 * p.c1 * p.d + 2 * p.c2 * p.d + 3 * p.d**2)
    return EquilibriumSet(
        e1=(0.0, 0.0),
        e2=(0.0, p.b / (p.c2 + 2 * p.d)),
        e3=(p.b / (p.c1 + 2 * p.d), 0.0),
        e4=(m * (p.c2 + p.d), m * (p.c1 + p.d)),
        m=m,
    )


def residual(q, p: DuopolyParams) -> float:
    return float(np.max(np.abs(rhs(q, p))))


@dataclass(frozen=True)
class JacobianSummary:
    matrix: np.ndarray
    tr: float
    det: float
    eigenvalues: tuple[complex, complex]

    @property
    def discriminant(self) -> float:
        return self.tr**2 - 4.0 * self.det


def characteristic_roots(tr: float, det: float) -> tuple[complex, complex]:
    """Roots of ``λ² - tr λ + det``, larger real part (or positive imaginary part) first."""
    disc = tr * tr - 4.0 * det
    if disc >= 0:
        sq = np.sqrt(disc)
        # avoid cancellation in the smaller-magnitude root
        big = 0.5 * (tr + np.copysign(sq, tr)) if tr != 0 else 0.5 * sq
        small = det / big if big != 0 else 0.5 * (tr - sq)
        lo, hi = sorted((big, small))
        return complex(hi), complex(lo)
    half = np.sqrt(-disc) / 2.0
    return complex(tr / 2.0, half), complex(tr / 2.0, -half)


def jacobian_at(q, p: DuopolyParams) -> JacobianSummary:
    q1, q2 = float(q[0]), float(q[1])
    a1, a2, b, d = p.alpha1, p.alpha2, p.b, p.d
    J = np.array(
        [
            [a1 * (b - 2 * (p.c1 + 2 * d) * q1 - d * q2), -a1 * d * q1],
            [-a2 * d * q2, a2 * (b - 2 * (p.c2 + 2 * d) * q2 - d * q1)],
        ]
    )
    tr = J[0, 0] + J[1, 1]
    det = J[0, 0] * J[1, 1] - J[0, 1] * J[1, 0]
    return JacobianSummary(J, float(tr), float(det), characteristic_roots(tr, det))


def tr_det_at_e4(p: DuopolyParams) -> tuple[float, float]:
    """Closed-form trace and determinant of the Jacobian at the interior equilibrium."""
    a1, a2, b, d, c1, c2 = p.alpha1, p.alpha2, p.b, p.d, p.c1, p.c2
    denom = 3 * d**2 + 2 * d * (c1 + c2) + c1 * c2
    tr = -b * (
        2 * d**2 * (a1 + a2)
        + d * (c1 * (a1 + 2 * a2) + c2 * (2 * a1 + a2))
        + c1 * c2 * (a1 + a2)
    ) / denom
    det = a1 * a2 * b**2 * (c1 + d) * (c2 + d) / denom
    return tr, det
