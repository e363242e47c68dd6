import numpy as np
import pytest

from lqwalk.grids import GridSpec, Topology, resolve_shift, shift_permutation, vertex_type

# Slot indices, matching the documented layout.
T_NW, T_NE, T_W, T_E, T_SW, T_SE, T_LOOP = range(7)
H_H, H_NESW, H_NWSE, H_LOOP = range(4)
R_N, R_S, R_W, R_E, R_LOOP = range(5)

ALL_TOPOLOGIES = list(Topology)


def test_degrees():
    assert Topology.TRIANGULAR.degree == 6
    assert Topology.HONEYCOMB.degree == 3
    assert Topology.RECTANGULAR.degree == 4


def test_vertex_type_parity():
    hexa = GridSpec(Topology.HONEYCOMB, 8, 8)
    assert vertex_type(hexa, (0, 0)) == "A"
    assert vertex_type(hexa, (2, 3)) == "B"
    assert vertex_type(GridSpec(Topology.TRIANGULAR, 8, 8), (5, 5)) == "A"
    assert vertex_type(GridSpec(Topology.RECTANGULAR, 8, 8), (1, 2)) == "A"


def test_triangular_shift_table():
    spec = GridSpec(Topology.TRIANGULAR, 16, 16)
    # All six moves at an interior vertex.
    assert resolve_shift(spec, (2, 3), T_NW) == ((1, 4), T_SE)
    assert resolve_shift(spec, (2, 3), T_SE) == ((3, 2), T_NW)
    assert resolve_shift(spec, (2, 3), T_W) == ((1, 3), T_E)
    assert resolve_shift(spec, (2, 3), T_E) == ((3, 3), T_W)
    assert resolve_shift(spec, (2, 3), T_SW) == ((2, 2), T_NE)
    assert resolve_shift(spec, (2, 3), T_NE) == ((2, 4), T_SW)


def test_triangular_wraparound():
    spec = GridSpec(Topology.TRIANGULAR, 4, 4)
    assert resolve_shift(spec, (0, 0), T_W) == ((3, 0), T_E)
    assert resolve_shift(spec, (0, 0), T_NW) == ((3, 1), T_SE)
    assert resolve_shift(spec, (3, 3), T_NE) == ((3, 0), T_SW)


def test_honeycomb_shift_table():
    spec = GridSpec(Topology.HONEYCOMB, 4, 4)
    # Type A vertex (0,0): E, SW, NW in abstract slots.
    assert resolve_shift(spec, (0, 0), H_H) == ((1, 0), H_H)
    assert resolve_shift(spec, (0, 0), H_NESW) == ((0, 3), H_NESW)
    assert resolve_shift(spec, (0, 0), H_NWSE) == ((0, 1), H_NWSE)
    # Type B vertex (1,0): mirrored displacements, same slots.
    assert resolve_shift(spec, (1, 0), H_H) == ((0, 0), H_H)
    assert resolve_shift(spec, (1, 0), H_NESW) == ((1, 1), H_NESW)
    assert resolve_shift(spec, (1, 0), H_NWSE) == ((1, 3), H_NWSE)


def test_rectangular_shift_table():
    spec = GridSpec(Topology.RECTANGULAR, 8, 8)
    assert resolve_shift(spec, (4, 4), R_N) == ((4, 5), R_S)
    assert resolve_shift(spec, (4, 4), R_S) == ((4, 3), R_N)
    assert resolve_shift(spec, (4, 4), R_W) == ((3, 4), R_E)
    assert resolve_shift(spec, (4, 4), R_E) == ((5, 4), R_W)


@pytest.mark.parametrize("topology", ALL_TOPOLOGIES)
def test_loop_slot_is_fixed_point(topology):
    spec = GridSpec(topology, 6, 6)
    loop = spec.degree
    for v in [(0, 0), (3, 2), (5, 5)]:
        assert resolve_shift(spec, v, loop) == (v, loop)


def test_invalid_slot_rejected():
    spec = GridSpec(Topology.HONEYCOMB, 4, 4)
    with pytest.raises(ValueError, match="slot"):
        resolve_shift(spec, (0, 0), 4)
    with pytest.raises(ValueError, match="slot"):
        resolve_shift(spec, (0, 0), -1)


def test_grid_validation():
    with pytest.raises(ValueError, match="even"):
        GridSpec(Topology.HONEYCOMB, 5, 4)
    with pytest.raises(ValueError, match="even"):
        GridSpec(Topology.HONEYCOMB, 4, 7)
    with pytest.raises(ValueError, match="at least 2"):
        GridSpec(Topology.RECTANGULAR, 1, 8)
    with pytest.raises(ValueError, match="at least 2"):
        GridSpec(Topology.TRIANGULAR, 8, 0)
    GridSpec(Topology.TRIANGULAR, 16, 16)
    GridSpec(Topology.HONEYCOMB, 4, 6)


@pytest.mark.parametrize("topology", ALL_TOPOLOGIES)
@pytest.mark.parametrize("width,height", [(2, 2), (4, 6), (8, 8)])
def test_shift_involution_exhaustive(topology, width, height):
    spec = GridSpec(topology, width, height)
    for y in range(height):
        for x in range(width):
            for slot in range(spec.coin_dim):
                target, tslot = resolve_shift(spec, (x, y), slot)
                assert resolve_shift(spec, target, tslot) == ((x, y), slot)


@pytest.mark.parametrize("topology", ALL_TOPOLOGIES)
def test_shift_is_permutation_of_nonloop_slots(topology):
    spec = GridSpec(topology, 6, 4)
    images = {
        resolve_shift(spec, (x, y), slot)
        for y in range(4)
        for x in range(6)
        for slot in range(spec.degree)
    }
    assert len(images) == spec.vertex_count * spec.degree
    assert all(slot < spec.degree for _, slot in images)


def test_honeycomb_parity_alternation():
    spec = GridSpec(Topology.HONEYCOMB, 6, 6)
    for y in range(6):
        for x in range(6):
            for slot in range(3):
                target, _ = resolve_shift(spec, (x, y), slot)
                assert vertex_type(spec, target) != vertex_type(spec, (x, y))


@pytest.mark.parametrize("topology", ALL_TOPOLOGIES)
def test_shift_permutation_matches_resolve_shift(topology):
    spec = GridSpec(topology, 4, 6)
    perm = shift_permutation(spec)
    k = spec.coin_dim
    assert np.array_equal(perm[perm], np.arange(perm.size))
    for y in range(6):
        for x in range(4):
            for slot in range(k):
                target, tslot = resolve_shift(spec, (x, y), slot)
                src = spec.vertex_index((x, y)) * k + slot
                assert perm[src] == spec.vertex_index(target) * k + tslot


def test_vertex_index_raster_order():
    spec = GridSpec(Topology.RECTANGULAR, 5, 3)
    assert spec.vertex_index((0, 0)) == 0
    assert spec.vertex_index((4, 0)) == 4
    assert spec.vertex_index((0, 1)) == 5
    assert spec.vertex_index((2, 2)) == 12
    assert spec.vertex_index((-1, -1)) == spec.vertex_index((4, 2))
