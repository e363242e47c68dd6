"""Explicit step matrix for small grids: the brute-force oracle.

Builds the full (N*(d+1)) x (N*(d+1)) search-step unitary from first
principles -- shift as the permutation matrix of ``resolve_shift``, coin
as an explicit 2|s><s| - I block per vertex, query as a diagonal sign
flip -- and multiplies the three.  Intended purely as a verification
path; a size guard rejects anything large.
"""

from __future__ import annotations

import numpy as np

from .engine import WalkParams, coin_vector
from .grids import shift_permutation

MAX_DENSE_DIM = 4096


def build_dense_step(params: WalkParams) -> np.ndarray:
    """Assemble S . (I_N x C) . (Q x I) as one dense matrix.

    Raises ValueError if N * (degree + 1) exceeds MAX_DENSE_DIM.
    """
    spec = params.spec
    k = spec.coin_dim
    dim = spec.vertex_count * k
    if dim > MAX_DENSE_DIM:
        raise ValueError(f"dense step dimension {dim} exceeds guard {MAX_DENSE_DIM}")

    s = coin_vector(spec.degree, params.loop_weight)
    coin_block = 2.0 * np.outer(s, s) - np.eye(k)
    coin_full = np.kron(np.eye(spec.vertex_count), coin_block)

    # Q x I: -1 on every slot of a marked vertex.
    query_diag = np.ones(dim)
    for v in params.marked:
        base = spec.vertex_index(v) * k
        query_diag[base : base + k] = -1.0

    perm = shift_permutation(spec)
    shift_full = np.zeros((dim, dim))
    shift_full[perm, np.arange(dim)] = 1.0

    return (shift_full @ (coin_full * query_diag[None, :])).astype(complex)


def evolve_dense(op: np.ndarray, state: np.ndarray, t: int) -> np.ndarray:
    """Apply the dense step matrix t times to a walk state."""
    flat = state.reshape(-1)
    if op.shape != (flat.size, flat.size):
        raise ValueError(f"operator shape {op.shape} does not match state size {flat.size}")
    for _ in range(t):
        flat = op @ flat
    return flat.reshape(state.shape)
