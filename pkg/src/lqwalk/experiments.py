"""Search-performance numerics: probability curves, self-loop weight
sweeps, grid-size scaling studies and sqrt(N log N) runtime fits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .engine import WalkParams, initial_state, step, success_probability
from .grids import Coord, GridSpec, Topology

LOG_BASES = ("natural", "base2", "base10")


def default_marked(spec: GridSpec) -> Coord:
    """Grid centre: arbitrary by lattice symmetry, fixed for reproducibility."""
    return (spec.width // 2, spec.height // 2)


def default_horizon(spec: GridSpec) -> int:
    """Simulation horizon: ceil(3 * sqrt(N ln N)), a generous multiple
    of the expected first-peak time."""
    n = spec.vertex_count
    return math.ceil(3.0 * math.sqrt(n * math.log(n)))


def default_loop_weights(spec: GridSpec, points: int = 25) -> np.ndarray:
    """Geometric sweep grid spanning [degree/(10N), 10*degree/N]."""
    centre = spec.degree / spec.vertex_count
    return np.geomspace(centre / 10.0, centre * 10.0, points)


@dataclass(frozen=True)
class TimeSeries:
    """Per-step success probability and |overlap with psi(0)|, t = 0..t_max."""

    steps: np.ndarray
    probability: np.ndarray
    overlap_abs: np.ndarray

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class PeakResult:
    t_peak: int
    p_peak: float


@dataclass(frozen=True)
class LoopSweepRecord:
    loop_weight: float
    t_peak: int
    p_peak: float


@dataclass(frozen=True)
class ScalingRecord:
    vertex_count: int
    t_peak: int
    p_peak: float


@dataclass(frozen=True)
class FitResult:
    """Least-squares constant for T = c * sqrt(N log N), through origin."""

    c: float
    r2: float
    log_base: str


class NoPeakError(Exception):
    """Raised when a probability series has no qualifying first peak."""


def run_curve(params: WalkParams, t_max: int) -> TimeSeries:
    """Evolve t_max steps recording probability and overlap after each."""
    if t_max < 0:
        raise ValueError(f"t_max must be >= 0, got {t_max}")
    spec = params.spec
    psi0 = initial_state(params)
    state = psi0
    prob = np.empty(t_max + 1)
    ov = np.empty(t_max + 1)
    prob[0] = success_probability(state, spec, params.marked)
    ov[0] = abs(complex(np.vdot(psi0, state)))
    for t in range(1, t_max + 1):
        state = step(state, params)
        prob[t] = success_probability(state, spec, params.marked)
        ov[t] = abs(complex(np.vdot(psi0, state)))
    return TimeSeries(np.arange(t_max + 1), prob, ov)


def find_first_peak(series: TimeSeries) -> PeakResult:
    """Earliest success-probability maximum above 10x the initial value.

    A step qualifies if its probability is the maximum within a +/-2
    step window and exceeds 10 * p(0).  The window is two steps wide
    because the flip-flop walk carries an intrinsic period-2 parity
    ripple; a +/-1 window would latch onto a ripple during the initial
    climb.  The two steps after t must exist (a truncated lookahead
    cannot tell a peak from a climb).  Ties break toward smaller t.
    Raises NoPeakError if no step qualifies.
    """
    p = series.probability
    threshold = 10.0 * p[0]
    for t in range(1, len(p) - 2):
        if p[t] <= threshold:
            continue
        if p[t] >= p[max(t - 2, 0) : t + 3].max():
            return PeakResult(int(series.steps[t]), float(p[t]))
    raise NoPeakError("no peak found within horizon")


def peak_or_horizon(series: TimeSeries) -> PeakResult:
    """find_first_peak, falling back to (horizon, max observed p)."""
    try:
        return find_first_peak(series)
    except NoPeakError:
        return PeakResult(int(series.steps[-1]), float(series.probability.max()))


def sweep_loop_weight(
    spec: GridSpec,
    marked: Iterable[Coord],
    l_values: Sequence[float] | None = None,
) -> list[LoopSweepRecord]:
    """One (l, t_peak, p_peak) record per loop weight, l ascending.

    Every run uses the default horizon.  Weights with no qualifying peak
    are recorded in-band with t_peak = horizon and the max observed p.
    """
    if l_values is None:
        l_values = default_loop_weights(spec)
    weights = np.unique(np.asarray(l_values, dtype=float))
    marked = frozenset(marked)
    horizon = default_horizon(spec)
    records = []
    for l in weights:
        series = run_curve(WalkParams(spec, float(l), marked), horizon)
        peak = peak_or_horizon(series)
        records.append(LoopSweepRecord(float(l), peak.t_peak, peak.p_peak))
    return records


def scaling_study(
    topology: Topology,
    side_lengths: Iterable[int],
    l_rule: str = "degree/N",
) -> list[ScalingRecord]:
    """First-peak time and probability on s x s grids, l = degree/N.

    The marked vertex sits at the grid centre.  Sizes with no qualifying
    peak are recorded with t_peak = horizon, as in sweep_loop_weight.
    """
    if l_rule != "degree/N":
        raise ValueError(f"unknown loop weight rule {l_rule!r}")
    records = []
    for side in sorted(set(side_lengths)):
        spec = GridSpec(topology, side, side)
        params = WalkParams(
            spec, topology.degree / spec.vertex_count, {default_marked(spec)}
        )
        series = run_curve(params, default_horizon(spec))
        peak = peak_or_horizon(series)
        records.append(ScalingRecord(spec.vertex_count, peak.t_peak, peak.p_peak))
    return records


def _log(n: np.ndarray, base: str) -> np.ndarray:
    if base == "natural":
        return np.log(n)
    if base == "base2":
        return np.log2(n)
    if base == "base10":
        return np.log10(n)
    raise ValueError(f"log base must be one of {LOG_BASES}, got {base!r}")


def fit_runtime(records: Sequence[ScalingRecord], log_base: str = "natural") -> FitResult:
    """Least-squares fit of T = c * sqrt(N log N) through the origin.

    c = sum(T_i x_i) / sum(x_i^2) with x_i = sqrt(N_i log N_i); r2 is
    the coefficient of determination of the through-origin model.
    Requires at least 3 records.
    """
    if len(records) < 3:
        raise ValueError(f"runtime fit needs at least 3 records, got {len(records)}")
    n = np.array([r.vertex_count for r in records], dtype=float)
    t = np.array([r.t_peak for r in records], dtype=float)
    x = np.sqrt(n * _log(n, log_base))
    c = float(np.sum(t * x) / np.sum(x * x))
    ss_res = float(np.sum((t - c * x) ** 2))
    ss_tot = float(np.sum((t - t.mean()) ** 2))
    return FitResult(c, 1.0 - ss_res / ss_tot, log_base)
