"""Long-memory fractional difference maps and the fractional Cournot duopoly."""

from .chaos01 import ChaosConfig, ChaosResult, k_for_c, k_statistic, mean_square_displacement, translation_components
from .cournot import (
    DuopolyParams,
    EquilibriumSet,
    JacobianSummary,
    duopoly_map,
    equilibria,
    jacobian_at,
    marginal_profit,
    price,
    profit,
    rhs,
    tr_det_at_e4,
)
from .fraccore import MapFn, MemoryWeights, Trajectory, integrate, memory_weights
from .stability import Branch, StabilityVerdict, classify_2d, in_stability_region, nu_threshold_e4
from .sweep import SweepConfig, SweepRow, run_single, run_sweep

__version__ = "0.1.0"
