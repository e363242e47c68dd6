"""Grid topologies for coined quantum walks on 2D periodic lattices.

Three lattice types are supported, each mapped onto integer coordinates
(x, y) on a ``width x height`` torus:

* ``rectangular`` -- degree 4, coin slots 0..3 = N, S, W, E.
* ``triangular``  -- degree 6, coin slots 0..5 = NW, NE, W, E, SW, SE.
* ``honeycomb``   -- degree 3.  The lattice is bipartite: vertices with
  even x+y are type A and carry the concrete directions {E, NW, SW},
  vertices with odd x+y are type B and carry {W, SE, NE}.  Amplitudes
  live in a 3-slot abstract basis shared by both types:

      slot 0 = horizontal       (E at A, W at B)
      slot 1 = NE/SW diagonal   (SW at A, NE at B)
      slot 2 = NW/SE diagonal   (NW at A, SE at B)

Every layout reserves one extra trailing slot (index = degree) for the
self-loop, present even when the loop weight is zero.

The flip-flop shift moves an amplitude to the adjacent vertex and
reverses its direction register, so applying it twice is the identity.
In the abstract honeycomb basis the slot index is preserved, because the
reversed concrete direction is exactly the one owned by the opposite
vertex type.  The self-loop slot is a fixed point at every vertex.

Vertices are enumerated in raster order: ``vertex_index = y * width + x``.
Flat state indices are ``vertex_index * (degree + 1) + slot``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

Coord = tuple[int, int]


class Topology(enum.Enum):
    """Lattice type; the value is the wire-format name."""

    RECTANGULAR = "rectangular"
    TRIANGULAR = "triangular"
    HONEYCOMB = "honeycomb"

    @property
    def degree(self) -> int:
        return _DEGREE[self]

    def __str__(self) -> str:
        return self.value


_DEGREE = {
    Topology.RECTANGULAR: 4,
    Topology.TRIANGULAR: 6,
    Topology.HONEYCOMB: 3,
}

# (dx, dy, partner slot) per coin slot.  Flip-flop: moving along slot i
# lands on the neighbour carrying the reversed direction.
_RECT_MOVES = (
    (0, 1, 1),   # N -> S
    (0, -1, 0),  # S -> N
    (-1, 0, 3),  # W -> E
    (1, 0, 2),   # E -> W
)
_TRI_MOVES = (
    (-1, 1, 5),  # NW -> SE
    (0, 1, 4),   # NE -> SW
    (-1, 0, 3),  # W  -> E
    (1, 0, 2),   # E  -> W
    (0, -1, 1),  # SW -> NE
    (1, -1, 0),  # SE -> NW
)
# Honeycomb: displacement by vertex type, abstract slot preserved.
_HEX_MOVES_A = ((1, 0), (0, -1), (0, 1))
_HEX_MOVES_B = ((-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class GridSpec:
    """A periodic lattice: topology plus torus dimensions.

    Raises ValueError on construction if the dimensions are invalid:
    both must be >= 2, and the honeycomb lattice additionally needs even
    width and height so that the A/B vertex parity is consistent under
    wraparound.
    """

    topology: Topology
    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width < 2 or self.height < 2:
            raise ValueError(
                f"grid dimensions must be at least 2x2, got "
                f"{self.width}x{self.height}"
            )
        if self.topology is Topology.HONEYCOMB and (
            self.width % 2 or self.height % 2
        ):
            raise ValueError(
                f"honeycomb requires even dimensions, got "
                f"{self.width}x{self.height}"
            )

    @property
    def degree(self) -> int:
        return self.topology.degree

    @property
    def coin_dim(self) -> int:
        """Slots per vertex including the self-loop."""
        return self.degree + 1

    @property
    def vertex_count(self) -> int:
        return self.width * self.height

    def wrap(self, x: int, y: int) -> Coord:
        return x % self.width, y % self.height

    def vertex_index(self, v: Coord) -> int:
        x, y = self.wrap(*v)
        return y * self.width + x

    def contains(self, v: Coord) -> bool:
        x, y = v
        return 0 <= x < self.width and 0 <= y < self.height


def vertex_type(spec: GridSpec, v: Coord) -> str:
    """Bipartite class of a vertex: "A" (even x+y) or "B".

    Only the honeycomb lattice distinguishes the two; rectangular and
    triangular lattices report "A" everywhere.
    """
    if spec.topology is not Topology.HONEYCOMB:
        return "A"
    x, y = v
    return "A" if (x + y) % 2 == 0 else "B"


def resolve_shift(spec: GridSpec, v: Coord, slot: int) -> tuple[Coord, int]:
    """Target (vertex, slot) of the flip-flop shift for one amplitude.

    The self-loop slot (index = degree) maps to itself.  Coordinates are
    reduced modulo the torus dimensions.
    """
    d = spec.degree
    if not 0 <= slot <= d:
        raise ValueError(f"coin slot {slot} out of range 0..{d}")
    x, y = spec.wrap(*v)
    if slot == d:
        return (x, y), slot
    if spec.topology is Topology.HONEYCOMB:
        moves = _HEX_MOVES_A if (x + y) % 2 == 0 else _HEX_MOVES_B
        dx, dy = moves[slot]
        return spec.wrap(x + dx, y + dy), slot
    moves = _TRI_MOVES if spec.topology is Topology.TRIANGULAR else _RECT_MOVES
    dx, dy, out_slot = moves[slot]
    return spec.wrap(x + dx, y + dy), out_slot


def shift_permutation(spec: GridSpec) -> np.ndarray:
    """Flip-flop shift as a flat-index permutation.

    ``perm[i]`` is the flat index of ``resolve_shift`` applied to flat
    index ``i``.  Because the shift is an involution the array is its
    own inverse, so both gather and scatter semantics coincide:
    ``out = state_flat[perm]`` applies the shift.
    """
    k = spec.coin_dim
    perm = np.empty(spec.vertex_count * k, dtype=np.intp)
    for y in range(spec.height):
        for x in range(spec.width):
            base = spec.vertex_index((x, y)) * k
            for slot in range(k):
                tv, ts = resolve_shift(spec, (x, y), slot)
                perm[base + slot] = spec.vertex_index(tv) * k + ts
    return perm
