"""Lackadaisical quantum walk search on 2D periodic grids.

State-vector simulation of discrete-time coined quantum walk search on
triangular, honeycomb and rectangular lattices with a weighted self-loop
at every vertex, plus the experiment layer (probability curves, loop
weight sweeps, sqrt(N log N) runtime fits) and a dense-matrix verifier.
"""

from .dense import build_dense_step, evolve_dense
from .engine import (
    WalkParams,
    apply_coin,
    apply_oracle,
    apply_shift,
    coin_vector,
    initial_state,
    overlap_initial,
    state_norm,
    step,
    success_probability,
)
from .experiments import (
    FitResult,
    LoopSweepRecord,
    NoPeakError,
    PeakResult,
    ScalingRecord,
    TimeSeries,
    default_horizon,
    default_loop_weights,
    default_marked,
    find_first_peak,
    fit_runtime,
    run_curve,
    scaling_study,
    sweep_loop_weight,
)
from .grids import GridSpec, Topology, resolve_shift, shift_permutation, vertex_type

__all__ = [
    "GridSpec",
    "Topology",
    "WalkParams",
    "TimeSeries",
    "PeakResult",
    "LoopSweepRecord",
    "ScalingRecord",
    "FitResult",
    "NoPeakError",
    "resolve_shift",
    "shift_permutation",
    "vertex_type",
    "coin_vector",
    "initial_state",
    "apply_oracle",
    "apply_coin",
    "apply_shift",
    "step",
    "success_probability",
    "overlap_initial",
    "state_norm",
    "build_dense_step",
    "evolve_dense",
    "run_curve",
    "find_first_peak",
    "sweep_loop_weight",
    "scaling_study",
    "fit_runtime",
    "default_horizon",
    "default_loop_weights",
    "default_marked",
]

__version__ = "0.1.0"
