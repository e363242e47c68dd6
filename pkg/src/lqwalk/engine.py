"""State-vector engine for lackadaisical quantum walk search.

A walk state is a dense complex array of shape ``(N, degree + 1)``:
row ``y * width + x`` holds the coin amplitudes of vertex (x, y), the
last column is the self-loop slot.  One search step applies, in order,

    oracle (sign flip at marked vertices)
    -> Grover coin about the weighted uniform coin state
    -> flip-flop shift

Each operation costs O(N * degree); the coin is applied through the
weighted-sum identity for the reflection rather than a matrix product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .grids import Coord, GridSpec, shift_permutation


@dataclass(frozen=True)
class WalkParams:
    """Everything that determines the evolution: grid, loop weight, target.

    ``marked`` may be any iterable of (x, y) pairs; it is stored as a
    frozenset.  An empty set is allowed (the step is then the plain walk
    with no query), but search experiments require exactly one target.
    """

    spec: GridSpec
    loop_weight: float = 0.0
    marked: frozenset[Coord] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "marked", frozenset(self.marked))
        if self.loop_weight < 0:
            raise ValueError(f"loop weight must be >= 0, got {self.loop_weight}")
        for v in self.marked:
            if not self.spec.contains(v):
                raise ValueError(f"marked vertex {v} outside {self.spec.width}x{self.spec.height} grid")

    @property
    def marked_rows(self) -> tuple[int, ...]:
        return tuple(sorted(self.spec.vertex_index(v) for v in self.marked))


@lru_cache(maxsize=64)
def _cached_shift_permutation(spec: GridSpec) -> np.ndarray:
    perm = shift_permutation(spec)
    perm.flags.writeable = False
    return perm


def coin_vector(degree: int, loop_weight: float) -> np.ndarray:
    """Weighted uniform coin state: 1 on each direction, sqrt(l) on the
    loop, normalised by sqrt(degree + l)."""
    vec = np.ones(degree + 1)
    vec[degree] = math.sqrt(loop_weight)
    return vec / math.sqrt(degree + loop_weight)


def initial_state(params: WalkParams) -> np.ndarray:
    """Uniform superposition over vertices, coin state at every vertex."""
    spec = params.spec
    vec = coin_vector(spec.degree, params.loop_weight) / math.sqrt(spec.vertex_count)
    state = np.empty((spec.vertex_count, spec.coin_dim), dtype=complex)
    state[:] = vec
    return state


def apply_oracle(state: np.ndarray, spec: GridSpec, marked: frozenset[Coord]) -> np.ndarray:
    """Negate all coin amplitudes at the marked vertices."""
    out = state.copy()
    if marked:
        rows = [spec.vertex_index(v) for v in marked]
        out[rows] = -out[rows]
    return out


def apply_coin(state: np.ndarray, degree: int, loop_weight: float) -> np.ndarray:
    """Grover coin 2|s><s| - I at every vertex.

    Uses the rank-one structure: with w = sum(directions) + sqrt(l)*loop,
    each direction becomes 2w/(d+l) - a and the loop becomes
    2*sqrt(l)*w/(d+l) - a_loop.
    """
    root_l = math.sqrt(loop_weight)
    w = state[:, :degree].sum(axis=1)
    w += root_l * state[:, degree]
    w *= 2.0 / (degree + loop_weight)
    out = np.empty_like(state)
    np.subtract(w[:, None], state[:, :degree], out=out[:, :degree])
    np.subtract(root_l * w, state[:, degree], out=out[:, degree])
    return out


def apply_shift(state: np.ndarray, spec: GridSpec) -> np.ndarray:
    """Flip-flop shift; the self-loop column is left in place."""
    perm = _cached_shift_permutation(spec)
    flat = np.ascontiguousarray(state).reshape(-1)
    return flat[perm].reshape(state.shape)


def step(state: np.ndarray, params: WalkParams) -> np.ndarray:
    """One search step: oracle, then coin, then shift.

    The oracle is a per-vertex sign and the coin acts vertex by vertex,
    so the first two factors commute into "coin, then negate the marked
    rows" (bitwise identical: IEEE negation distributes exactly); that
    form saves one full copy per step.
    """
    spec = params.spec
    out = apply_coin(state, spec.degree, params.loop_weight)
    rows = list(params.marked_rows)
    if rows:
        out[rows] = -out[rows]
    return apply_shift(out, spec)


def success_probability(state: np.ndarray, spec: GridSpec, marked: frozenset[Coord]) -> float:
    """Probability of a position measurement landing on a marked vertex
    (all coin slots, self-loop included)."""
    if not marked:
        return 0.0
    rows = [spec.vertex_index(v) for v in marked]
    return float(np.sum(np.abs(state[rows]) ** 2))


def overlap_initial(state: np.ndarray, params: WalkParams) -> complex:
    """Inner product <psi(0)|state>."""
    return complex(np.vdot(initial_state(params), state))


def state_norm(state: np.ndarray) -> float:
    return float(np.linalg.norm(state))
