"""Local stability of fixed points of fractional difference systems.

For ``0 < ν < 1`` a fixed point is locally asymptotically stable when every
eigenvalue ``λ`` of the Jacobian of ``f`` lies in

    ``|λ| < (2 cos((|arg λ| - π) / (2 - ν)))^ν``  and  ``|arg λ| > νπ/2``.

For two-dimensional systems with ``det J > 0`` and two real negative
eigenvalues this reduces to a threshold on the order,
``ν > log2((sqrt(tr² - 4 det) - tr) / 2)``. A complex pair is decided by the
eigenvalue test directly.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .cournot import DuopolyParams, characteristic_roots, tr_det_at_e4

_BOUNDARY_RTOL = 1e-12


class ClassicalOrderError(ValueError):
    """Raised for ``ν >= 1``: use the classical test ``|1 + λ| < 1`` instead."""


class HypothesisViolation(ValueError):
    """Raised when ``det J <= 0``, outside the 2-D criterion's hypothesis."""


class ComplexEigenvaluesError(ValueError):
    """The order threshold formula needs a non-negative discriminant."""


class Branch(enum.Enum):
    RealNegativeBranch = "real-negative"
    ComplexBranch = "complex"
    GeneralEigenvalueTest = "general"
    Inconclusive = "inconclusive"


@dataclass(frozen=True)
class EigenCheck:
    eigenvalue: complex
    inside: bool
    modulus_bound: float
    boundary: bool = False
    degenerate: bool = False


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    branch: Branch
    nu: float
    nu_threshold: float | None = None
    details: tuple[EigenCheck, ...] = field(default_factory=tuple)

    @property
    def eigenvalues(self) -> tuple[complex, ...]:
        return tuple(d.eigenvalue for d in self.details)


def _check_fractional(nu: float) -> float:
    nu = float(nu)
    if nu >= 1.0:
        raise ClassicalOrderError(
            f"order {nu} >= 1: the fractional region is undefined, use the classical unit-disk test |1 + λ| < 1"
        )
    if not nu > 0.0:
        raise ValueError(f"fractional order must lie in (0, 1), got {nu!r}")
    return nu


def abs_arg(lam: complex) -> float:
    """``|arg λ|`` with the principal branch; 0 counts as π (negative real axis)."""
    lam = complex(lam)
    if lam == 0:
        return math.pi
    return abs(cmath.phase(lam))


def modulus_bound(theta: float, nu: float) -> float:
    """Largest stable modulus along the ray ``|arg z| = theta`` (valid for ``theta > νπ/2``)."""
    return (2.0 * math.cos((theta - math.pi) / (2.0 - nu))) ** nu


def region_check(lam: complex, nu: float) -> EigenCheck:
    nu = _check_fractional(nu)
    lam = complex(lam)
    if not cmath.isfinite(lam):
        raise ValueError(f"eigenvalue must be finite, got {lam!r}")
    if lam == 0:
        return EigenCheck(lam, True, modulus_bound(math.pi, nu), degenerate=True)
    theta = abs_arg(lam)
    arg_limit = nu * math.pi / 2.0
    if theta <= arg_limit:
        on_edge = math.isclose(theta, arg_limit, rel_tol=_BOUNDARY_RTOL)
        return EigenCheck(lam, False, 0.0, boundary=on_edge)
    bound = modulus_bound(theta, nu)
    r = abs(lam)
    on_edge = math.isclose(r, bound, rel_tol=_BOUNDARY_RTOL) or math.isclose(
        theta, arg_limit, rel_tol=_BOUNDARY_RTOL
    )
    return EigenCheck(lam, (r < bound) and not on_edge, bound, boundary=on_edge)


def in_stability_region(lam: complex, nu: float) -> bool:
    """Whether a single eigenvalue lies strictly inside the stability region of order ``nu``."""
    return region_check(lam, nu).inside


def classical_unit_disk(lam: complex) -> bool:
    """Stability test for ``ν = 1``, i.e. the map ``x -> x + f(x)``."""
    return abs(1.0 + complex(lam)) < 1.0


def classify_eigenvalues(eigenvalues, nu: float) -> StabilityVerdict:
    """Apply the eigenvalue region test to any number of eigenvalues."""
    details = tuple(region_check(lam, nu) for lam in eigenvalues)
    return StabilityVerdict(
        stable=all(d.inside for d in details),
        branch=Branch.GeneralEigenvalueTest,
        nu=float(nu),
        details=details,
    )


def classify_matrix(J, nu: float) -> StabilityVerdict:
    return classify_eigenvalues(np.linalg.eigvals(np.asarray(J, dtype=float)), nu)


def classify_2d(tr: float, det: float, nu: float) -> StabilityVerdict:
    """Stability verdict for a 2-D system from the trace and determinant of its Jacobian."""
    nu = _check_fractional(nu)
    if not det > 0:
        raise HypothesisViolation(f"det J = {det!r} <= 0 is outside the criterion's hypothesis det J > 0")
    eigs = characteristic_roots(tr, det)
    details = tuple(region_check(lam, nu) for lam in eigs)
    root_det = math.sqrt(det)
    if -tr / 2.0 >= root_det:
        varpi = abs(tr * tr - 4.0 * det)
        threshold = math.log2((math.sqrt(varpi) - tr) / 2.0)
        return StabilityVerdict(nu > threshold, Branch.RealNegativeBranch, nu, threshold, details)
    if abs(tr) / 2.0 < root_det:
        return StabilityVerdict(all(d.inside for d in details), Branch.ComplexBranch, nu, None, details)
    # two positive real eigenvalues: the region test rejects them, the criterion is silent
    return StabilityVerdict(all(d.inside for d in details), Branch.Inconclusive, nu, None, details)


def nu_threshold_e4(p: DuopolyParams) -> float:
    """Smallest order above which the interior equilibrium is stable (real-eigenvalue case)."""
    tr, det = tr_det_at_e4(p)
    disc = tr * tr - 4.0 * det
    if disc < 0:
        raise ComplexEigenvaluesError(
            f"(tr J)^2 - 4 det J = {disc:.6g} < 0 at E4: complex eigenvalues, use classify_2d"
        )
    return math.log2((math.sqrt(disc) - tr) / 2.0)


def e4_verdict(p: DuopolyParams, nu: float) -> StabilityVerdict:
    tr, det = tr_det_at_e4(p)
    return classify_2d(tr, det, nu)
