"""Self-checks comparing the fast engine against first-principles oracles.

Four suites, each exercised on small grids of every topology:

* dense equivalence -- trajectories of the fast step vs. repeated
  multiplication by the explicitly assembled step matrix,
* involutions -- oracle, coin and shift each square to the identity,
* unitarity -- norm drift over many steps,
* loopless embedding -- with zero loop weight the loop column stays
  exactly zero and the direction slots reproduce a reference engine
  that has no loop column at all.

``run_all_checks`` returns one record per (suite, topology) pair; the
CLI ``verify`` subcommand renders them as a table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import engine
from .dense import build_dense_step, evolve_dense
from .engine import WalkParams, initial_state, state_norm
from .grids import GridSpec, Topology, resolve_shift

StepFn = Callable[[np.ndarray, WalkParams], np.ndarray]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, worst: float, tol: float) -> CheckResult:
    return CheckResult(name, worst <= tol, f"max deviation {worst:.3e} (tol {tol:.0e})")


def check_dense_equivalence(
    topology: Topology, steps: int = 25, step_fn: StepFn = engine.step
) -> CheckResult:
    """Fast trajectory vs. dense matrix powers on a 4x4 grid, l in
    {0, degree/N}, elementwise tolerance 1e-10."""
    spec = GridSpec(topology, 4, 4)
    worst = 0.0
    for loop_weight in (0.0, topology.degree / spec.vertex_count):
        params = WalkParams(spec, loop_weight, {(1, 2)})
        op = build_dense_step(params)
        fast = initial_state(params)
        slow = fast
        for _ in range(steps):
            fast = step_fn(fast, params)
            slow = evolve_dense(op, slow, 1)
            worst = max(worst, float(np.abs(fast - slow).max()))
    return _result(f"dense-equivalence/{topology}", worst, 1e-10)


def check_involutions(topology: Topology) -> CheckResult:
    """oracle^2 = coin^2 = shift^2 = identity on a random unit state."""
    spec = GridSpec(topology, 6, 6)
    params = WalkParams(spec, topology.degree / spec.vertex_count, {(2, 3), (0, 0)})
    rng = np.random.default_rng(7)
    state = rng.normal(size=(spec.vertex_count, spec.coin_dim, 2)) @ np.array([1, 1j])
    state /= state_norm(state)
    worst = 0.0
    for apply_twice in (
        lambda s: engine.apply_oracle(
            engine.apply_oracle(s, spec, params.marked), spec, params.marked
        ),
        lambda s: engine.apply_coin(
            engine.apply_coin(s, spec.degree, params.loop_weight),
            spec.degree,
            params.loop_weight,
        ),
        lambda s: engine.apply_shift(engine.apply_shift(s, spec), spec),
    ):
        worst = max(worst, float(np.abs(apply_twice(state) - state).max()))
    return _result(f"involutions/{topology}", worst, 1e-12)


def check_unitarity(topology: Topology, steps: int = 500) -> CheckResult:
    """Norm stays 1 along the search evolution on a 6x6 grid."""
    spec = GridSpec(topology, 6, 6)
    params = WalkParams(spec, topology.degree / spec.vertex_count, {(3, 1)})
    state = initial_state(params)
    worst = 0.0
    for _ in range(steps):
        state = engine.step(state, params)
        worst = max(worst, abs(state_norm(state) - 1.0))
    return _result(f"unitarity/{topology}", worst, 1e-10)


def _loopfree_shift_permutation(spec: GridSpec) -> np.ndarray:
    d = spec.degree
    perm = np.empty(spec.vertex_count * d, dtype=np.intp)
    for y in range(spec.height):
        for x in range(spec.width):
            base = spec.vertex_index((x, y)) * d
            for slot in range(d):
                tv, ts = resolve_shift(spec, (x, y), slot)
                perm[base + slot] = spec.vertex_index(tv) * d + ts
    return perm


def loopfree_reference_trajectory(
    spec: GridSpec, marked: frozenset, steps: int
) -> list[np.ndarray]:
    """Search walk in the plain d-slot layout with no loop column.

    Independent reference for the embedding claim: a zero-weight walk in
    the (d+1)-slot layout must reproduce this one on the direction slots.
    Returns the state after every step, initial state first.
    """
    d = spec.degree
    rows = [spec.vertex_index(v) for v in marked]
    perm = _loopfree_shift_permutation(spec)
    state = np.full(
        (spec.vertex_count, d), 1.0 / math.sqrt(spec.vertex_count * d), dtype=complex
    )
    out = [state]
    for _ in range(steps):
        state = state.copy()
        state[rows] = -state[rows]
        w = state.sum(axis=1) * (2.0 / d)
        state = w[:, None] - state
        state = state.reshape(-1)[perm].reshape(state.shape)
        out.append(state)
    return out


def check_loopless_embedding(topology: Topology, steps: int = 100) -> CheckResult:
    """l = 0: loop column exactly zero, direction slots match the
    loop-free reference within 1e-12."""
    spec = GridSpec(topology, 6, 6)
    params = WalkParams(spec, 0.0, {(4, 2)})
    reference = loopfree_reference_trajectory(spec, params.marked, steps)
    state = initial_state(params)
    worst = 0.0
    for t in range(steps + 1):
        if np.any(state[:, spec.degree] != 0):
            return CheckResult(
                f"loopless-embedding/{topology}", False, f"nonzero loop amplitude at step {t}"
            )
        worst = max(worst, float(np.abs(state[:, : spec.degree] - reference[t]).max()))
        if t < steps:
            state = engine.step(state, params)
    return _result(f"loopless-embedding/{topology}", worst, 1e-12)


def run_all_checks(step_fn: StepFn = engine.step) -> list[CheckResult]:
    results = []
    for topology in Topology:
        results.append(check_dense_equivalence(topology, step_fn=step_fn))
        results.append(check_involutions(topology))
        results.append(check_unitarity(topology))
        results.append(check_loopless_embedding(topology))
    return results
