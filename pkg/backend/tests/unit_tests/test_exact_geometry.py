from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from src.geometry.exact_geometry import (
    Halfspace,
    Polytope,
    contains,
    extreme_rays,
    hrep_to_vrep,
    lattice_points,
    matrix_rank,
    minkowski_sum_points,
    simplex_volume,
    triangulate,
    volume,
    vrep_to_hrep,
)
from src.utilities.messages.exceptions.errors import (
    DegenerateHullError,
    DimensionMismatchError,
    EmptyPolyhedronError,
    GeometryError,
    UnboundedPolyhedronError,
)

planar_points = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=7, unique=True
)
spatial_points = st.lists(st.tuples(*[st.integers(-4, 4)] * 3), min_size=4, max_size=8, unique=True)
four_dimensional_points = st.lists(st.tuples(*[st.integers(-3, 3)] * 4), min_size=5, max_size=8, unique=True)
shifts = st.tuples(st.integers(-7, 7), st.integers(-7, 7))
factors = st.sampled_from([Fraction(1, 2), 2, 3, Fraction(5, 3)])


def _spans(points, dimension: int = 2) -> bool:
    base = points[0]
    return matrix_rank([[a - b for a, b in zip(p, base)] for p in points[1:]]) == dimension


def test_halfspace_is_canonical() -> None:
    assert Halfspace.from_inequality([2, 4], 6) == Halfspace((1, 2), Fraction(3))
    assert Halfspace.from_inequality([Fraction(1, 2), 1], 1) == Halfspace((1, 2), Fraction(2))


def test_halfspace_rejects_bad_normals() -> None:
    with pytest.raises(GeometryError):
        Halfspace((0, 0), Fraction(0))
    with pytest.raises(GeometryError):
        Halfspace((2, 4), Fraction(0))


def test_contains_checks_dimension() -> None:
    with pytest.raises(DimensionMismatchError):
        contains([Halfspace((1, 0), Fraction(0))], (1, 2, 3))


def test_extreme_rays_of_quadrant_dual() -> None:
    assert sorted(extreme_rays([(1, 0), (1, 2)])) == [(0, 1), (2, -1)]


def test_hrep_to_vrep_of_triangle() -> None:
    halfspaces = [
        Halfspace((1, 0), Fraction(0)),
        Halfspace((0, 1), Fraction(0)),
        Halfspace((-1, -1), Fraction(-2)),
    ]
    assert hrep_to_vrep(halfspaces, 2) == [(0, 0), (0, 2), (2, 0)]


def test_hrep_to_vrep_detects_unbounded() -> None:
    with pytest.raises(UnboundedPolyhedronError) as info:
        hrep_to_vrep([Halfspace((1, 0), Fraction(0)), Halfspace((0, 1), Fraction(0))], 2)
    assert info.value.direction in {(1, 0), (0, 1)}


def test_hrep_to_vrep_detects_line() -> None:
    with pytest.raises(UnboundedPolyhedronError):
        hrep_to_vrep([Halfspace((1, 0), Fraction(0)), Halfspace((-1, 0), Fraction(-1))], 2)


def test_hrep_to_vrep_detects_empty() -> None:
    halfspaces = [
        Halfspace((1, 0), Fraction(1)),
        Halfspace((-1, 0), Fraction(0)),
        Halfspace((0, 1), Fraction(0)),
        Halfspace((0, -1), Fraction(-1)),
    ]
    with pytest.raises(EmptyPolyhedronError):
        hrep_to_vrep(halfspaces, 2)


def test_vrep_to_hrep_drops_interior_points() -> None:
    facets = vrep_to_hrep([(0, 0), (2, 0), (0, 2), (1, 1), (0, 1)])
    assert facets == sorted(
        [Halfspace((1, 0), Fraction(0)), Halfspace((0, 1), Fraction(0)), Halfspace((-1, -1), Fraction(-2))]
    )


def test_vrep_to_hrep_with_rays() -> None:
    facets = vrep_to_hrep([(2, 0), (0, 1)], [(1, 0), (0, 1)])
    assert facets == [
        Halfspace((0, 1), Fraction(0)),
        Halfspace((1, 0), Fraction(0)),
        Halfspace((1, 2), Fraction(2)),
    ]


def test_vrep_to_hrep_rejects_degenerate_hull() -> None:
    with pytest.raises(DegenerateHullError):
        vrep_to_hrep([(0, 0), (1, 1), (2, 2)])


def test_polygon_volume() -> None:
    polygon = Polytope.from_points([(0, 0), (3, 0), (1, 1), (0, 2)])
    assert volume(polygon) == Fraction(5, 2)


def test_cube_volume_and_triangulation() -> None:
    cube = Polytope.from_points(list(product([0, 1], repeat=3)))
    simplices = triangulate(cube)
    assert all(len(simplex) == 4 for simplex in simplices)
    assert sum(simplex_volume(s) for s in simplices) == 1
    assert volume(cube, apex=7) == 1


def test_simplex_volume_is_determinant_over_factorial() -> None:
    assert simplex_volume([(0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 4)]) == 4
    with pytest.raises(DimensionMismatchError):
        simplex_volume([(0, 0), (1, 0)])


def test_degenerate_polytope_has_no_volume() -> None:
    halfspaces = [
        Halfspace((1, 0), Fraction(0)),
        Halfspace((0, 1), Fraction(0)),
        Halfspace((1, 1), Fraction(1)),
        Halfspace((-1, -1), Fraction(-1)),
    ]
    segment = Polytope.from_halfspaces(halfspaces, 2)
    assert not segment.is_full_dimensional
    assert volume(segment) == 0
    assert triangulate(segment) == []


def test_lattice_points_of_triangle() -> None:
    triangle = Polytope.from_points([(0, 0), (2, 0), (0, 2)])
    assert lattice_points(triangle) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


def test_minkowski_sum_points() -> None:
    assert minkowski_sum_points([(0, 0), (1, 0)], [(0, 1)]) == [(0, 1), (1, 1)]
    assert minkowski_sum_points([], [(0, 1)]) == []


@settings(max_examples=40, deadline=None)
@given(planar_points)
def test_hrep_vrep_round_trip(points) -> None:
    assume(_spans(points))
    polytope = Polytope.from_points(points)
    again = Polytope.from_halfspaces(polytope.halfspaces, 2)
    assert set(again.vertices) == set(polytope.vertices)
    assert all(contains(polytope.halfspaces, p) for p in points)


@settings(max_examples=40, deadline=None)
@given(planar_points)
def test_volume_does_not_depend_on_apex(points) -> None:
    assume(_spans(points))
    polytope = Polytope.from_points(points)
    volumes = {volume(polytope, apex) for apex in range(len(polytope.vertices))}
    assert len(volumes) == 1
    assert volumes.pop() > 0


@settings(max_examples=25, deadline=None)
@given(spatial_points)
def test_three_dimensional_round_trip(points) -> None:
    assume(_spans(points, 3))
    polytope = Polytope.from_points(points)
    again = Polytope.from_halfspaces(polytope.halfspaces, 3)
    assert set(again.vertices) == set(polytope.vertices)
    assert vrep_to_hrep(again.vertices) == list(polytope.halfspaces)


@settings(max_examples=15, deadline=None)
@given(four_dimensional_points)
def test_four_dimensional_round_trip(points) -> None:
    assume(_spans(points, 4))
    polytope = Polytope.from_points(points)
    again = Polytope.from_halfspaces(polytope.halfspaces, 4)
    assert set(again.vertices) == set(polytope.vertices)
    assert all(contains(polytope.halfspaces, p) for p in points)


@settings(max_examples=40, deadline=None)
@given(planar_points, shifts)
def test_volume_is_translation_invariant(points, shift) -> None:
    assume(_spans(points))
    moved = [tuple(a + b for a, b in zip(p, shift)) for p in points]
    assert volume(Polytope.from_points(moved)) == volume(Polytope.from_points(points))


@settings(max_examples=40, deadline=None)
@given(planar_points, factors)
def test_volume_scales_with_square_of_factor(points, factor) -> None:
    assume(_spans(points))
    scaled = [tuple(factor * v for v in p) for p in points]
    assert volume(Polytope.from_points(scaled)) == factor**2 * volume(Polytope.from_points(points))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(*[st.integers(-4, 4)] * 3), min_size=4, max_size=4))
def test_random_simplex_volume(simplex) -> None:
    edges = sympy.Matrix([[a - b for a, b in zip(p, simplex[0])] for p in simplex[1:]])
    det = abs(int(edges.det()))
    assume(det != 0)
    assert simplex_volume(simplex) == Fraction(det, 6)
    assert volume(Polytope.from_points(simplex)) == Fraction(det, 6)
