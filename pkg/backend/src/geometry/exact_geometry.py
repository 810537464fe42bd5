"""
Exact rational polyhedral geometry.

Scalars are ``fractions.Fraction`` and points are tuples of them; matrix work (rank,
determinants, adjugates) is delegated to sympy. Conversion between halfspace and vertex
descriptions uses the incremental double-description method on homogenized cones, so
nothing here ever touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, factorial, floor, gcd, lcm
from typing import Iterable, NoReturn, Sequence

import sympy

from src.config.settings.logger_config import logger
from src.utilities.constants import ErrorMessages
from src.utilities.messages.exceptions.errors import (
    DegenerateHullError,
    DimensionMismatchError,
    EmptyPolyhedronError,
    GeometryError,
    UnboundedPolyhedronError,
)

Point = tuple[Fraction, ...]
IntVector = tuple[int, ...]


def as_point(coordinates: Iterable) -> Point:
    return tuple(Fraction(c) for c in coordinates)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), 0)


def add_points(a: Sequence, b: Sequence) -> Point:
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(a, b))


def scale_point(factor, a: Sequence) -> Point:
    return tuple(Fraction(factor) * Fraction(x) for x in a)


def primitive(vector: Sequence[int]) -> IntVector:
    """
    Divide an integer vector by the gcd of its entries (zero vectors are returned as is).
    """
    divisor = gcd(*vector)
    if divisor == 0:
        return tuple(vector)
    return tuple(v // divisor for v in vector)


def integer_row(values: Sequence) -> IntVector:
    """
    Scale a rational vector by the positive lcm of its denominators and make it primitive.

    The result spans the same ray as the input, so it can replace it in any homogeneous
    inequality or cone generator list.
    """
    fractions = [Fraction(v) for v in values]
    scale = lcm(*(v.denominator for v in fractions))
    return primitive([int(v * scale) for v in fractions])


def check_dimension(expected: int, vector: Sequence) -> None:
    if len(vector) != expected:
        raise DimensionMismatchError(
            ErrorMessages.DIMENSION_MISMATCH.value.format(expected=expected, actual=len(vector))
        )


def _sympy_matrix(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in rows]
    )


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def matrix_rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return _sympy_matrix(rows).rank()


def determinant(rows: Sequence[Sequence]) -> Fraction:
    return _to_fraction(_sympy_matrix(rows).det(method="bareiss"))


@dataclass(frozen=True, order=True)
class Halfspace:
    """
    The closed halfspace ``{x : <normal, x> >= offset}``.

    Normals are stored as primitive integer vectors, so two halfspaces describe the same
    set exactly when they compare equal.
    """

    normal: IntVector
    offset: Fraction

    def __post_init__(self):
        if not any(self.normal):
            raise GeometryError("A halfspace needs a nonzero normal")
        if gcd(*self.normal) != 1:
            raise GeometryError(f"Halfspace normal {self.normal} is not primitive")

    @classmethod
    def from_inequality(cls, normal: Sequence, offset) -> "Halfspace":
        """
        Build the canonical halfspace for ``<normal, x> >= offset`` with a rational normal.

        Args:
            normal (Sequence): Rational or integer coefficients, not all zero.
            offset: Rational right-hand side.

        Returns:
            Halfspace: The same set with a primitive integer normal.
        """
        coefficients = [Fraction(v) for v in normal]
        scale = lcm(*(v.denominator for v in coefficients))
        integers = [int(v * scale) for v in coefficients]
        divisor = gcd(*integers)
        if divisor == 0:
            raise GeometryError("A halfspace needs a nonzero normal")
        return cls(tuple(v // divisor for v in integers), Fraction(offset) * scale / divisor)

    @property
    def dimension(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence) -> Fraction:
        return Fraction(dot(self.normal, x))

    def satisfied_by(self, x: Sequence) -> bool:
        return self.value(x) >= self.offset

    def is_tight(self, x: Sequence) -> bool:
        return self.value(x) == self.offset


def contains(halfspaces: Sequence[Halfspace], x: Sequence) -> bool:
    """
    Check whether a point satisfies every inequality of a (closed) halfspace system.

    Args:
        halfspaces (Sequence[Halfspace]): The system.
        x (Sequence): The point.

    Returns:
        bool: True iff x lies in the intersection.

    Raises:
        DimensionMismatchError: If x and a normal have different lengths.
    """
    for halfspace in halfspaces:
        check_dimension(halfspace.dimension, x)
        if not halfspace.satisfied_by(x):
            return False
    return True


def extreme_rays(rows: Sequence[IntVector]) -> list[IntVector]:
    """
    Extreme rays of the pointed cone ``{z : <row, z> >= 0 for every row}``.

    Incremental double description: start from the simplicial cone cut out by a row
    basis, then add the remaining rows one at a time, keeping rays on the feasible side
    and combining adjacent pairs across the new hyperplane. Adjacency is decided
    combinatorially from the active constraint sets, which is exact.
    """
    width = len(rows[0])
    basis: list[int] = []
    for index, row in enumerate(rows):
        if matrix_rank([rows[i] for i in basis] + [row]) > len(basis):
            basis.append(index)
        if len(basis) == width:
            break
    if len(basis) < width:
        raise GeometryError("Constraint rows of a pointed cone must have full column rank")

    square = sympy.Matrix([rows[i] for i in basis])
    sign = 1 if square.det() > 0 else -1
    adjugate = square.adjugate()
    # B * adj(B) = det(B) * I, so each signed adjugate column is tight on all basis rows but one
    rays = [primitive([sign * int(adjugate[i, j]) for i in range(width)]) for j in range(width)]
    incidence = [frozenset(basis[i] for i in range(width) if i != j) for j in range(width)]

    in_basis = set(basis)
    for index, row in enumerate(rows):
        if index in in_basis:
            continue
        values = [dot(row, ray) for ray in rays]
        tightened = [inc | {index} if value == 0 else inc for inc, value in zip(incidence, values)]
        if all(value >= 0 for value in values):
            incidence = tightened
            continue
        kept = [(ray, inc) for ray, inc, value in zip(rays, tightened, values) if value >= 0]
        positives = [i for i, value in enumerate(values) if value > 0]
        negatives = [i for i, value in enumerate(values) if value < 0]
        for p in positives:
            for q in negatives:
                common = incidence[p] & incidence[q]
                if len(common) < width - 2:
                    continue
                if any(k != p and k != q and common <= incidence[k] for k in range(len(rays))):
                    continue
                ray = primitive([values[p] * b - values[q] * a for a, b in zip(rays[p], rays[q])])
                kept.append((ray, common | {index}))
        rays = [ray for ray, _ in kept]
        incidence = [inc for _, inc in kept]
    return list(dict.fromkeys(rays))


def _raise_for_lineality(halfspaces: Sequence[Halfspace], dimension: int) -> NoReturn:
    # Normals do not span: the set is either empty or contains a whole line.
    if not halfspaces:
        direction = (1,) + (0,) * (dimension - 1)
        raise UnboundedPolyhedronError(
            ErrorMessages.UNBOUNDED_POLYHEDRON.value.format(direction=direction), direction=direction
        )
    normals = _sympy_matrix([h.normal for h in halfspaces])
    row_basis = [[_to_fraction(v) for v in row] for row in normals.rowspace()]
    direction = primitive(integer_row([_to_fraction(v) for v in normals.nullspace()[0]]))
    reduced = [
        Halfspace.from_inequality([dot(h.normal, basis_row) for basis_row in row_basis], h.offset) for h in halfspaces
    ]
    try:
        hrep_to_vrep(reduced, len(row_basis))
    except UnboundedPolyhedronError:
        pass
    raise UnboundedPolyhedronError(
        ErrorMessages.UNBOUNDED_POLYHEDRON.value.format(direction=direction), direction=direction
    )


def hrep_to_vrep(halfspaces: Sequence[Halfspace], dimension: int) -> list[Point]:
    """
    Convert a bounded halfspace system into its extreme points.

    Args:
        halfspaces (Sequence[Halfspace]): Inequalities ``<a, x> >= b``.
        dimension (int): Ambient dimension n.

    Returns:
        list[Point]: The vertices, each once, sorted lexicographically.

    Raises:
        EmptyPolyhedronError: If the system is infeasible.
        UnboundedPolyhedronError: If the feasible set has a recession direction.
    """
    for halfspace in halfspaces:
        check_dimension(dimension, halfspace.normal)
    if matrix_rank([h.normal for h in halfspaces]) < dimension:
        _raise_for_lineality(halfspaces, dimension)

    # (x, t) with <a, x> - b t >= 0 and t >= 0; rays with t > 0 are vertices, t = 0 recession
    rows = [integer_row(list(h.normal) + [-h.offset]) for h in halfspaces]
    rows.append((0,) * dimension + (1,))
    rays = extreme_rays(rows)
    vertices = sorted({tuple(Fraction(c, ray[-1]) for c in ray[:-1]) for ray in rays if ray[-1] > 0})
    if not vertices:
        raise EmptyPolyhedronError(ErrorMessages.EMPTY_POLYHEDRON.value)
    directions = [ray[:-1] for ray in rays if ray[-1] == 0]
    if directions:
        raise UnboundedPolyhedronError(
            ErrorMessages.UNBOUNDED_POLYHEDRON.value.format(direction=directions[0]), direction=directions[0]
        )
    logger.debug(f"hrep_to_vrep: {len(halfspaces)} halfspaces -> {len(vertices)} vertices in dimension {dimension}")
    return vertices


def vrep_to_hrep(points: Sequence[Sequence], rays: Sequence[Sequence[int]] = ()) -> list[Halfspace]:
    """
    Minimal halfspace description of ``conv(points) + cone(rays)``.

    Facets are the extreme rays of the dual of the homogenized cone generated by the
    lifted points ``(p, 1)`` and rays ``(r, 0)``.

    Args:
        points (Sequence[Sequence]): At least one point.
        rays (Sequence[Sequence[int]]): Optional recession directions.

    Returns:
        list[Halfspace]: The facet inequalities, sorted.

    Raises:
        DegenerateHullError: If the set is not full-dimensional.
        DimensionMismatchError: If the inputs disagree on the dimension.
    """
    if not points:
        raise DegenerateHullError(ErrorMessages.DEGENERATE_HULL.value.format(dimension=0))
    dimension = len(points[0])
    for vector in list(points) + list(rays):
        check_dimension(dimension, vector)
    rows = [integer_row(list(p) + [1]) for p in points] + [integer_row(list(r) + [0]) for r in rays]
    if matrix_rank(rows) < dimension + 1:
        raise DegenerateHullError(ErrorMessages.DEGENERATE_HULL.value.format(dimension=dimension))
    facets = {Halfspace.from_inequality(ray[:-1], -ray[-1]) for ray in extreme_rays(rows) if any(ray[:-1])}
    logger.debug(f"vrep_to_hrep: {len(points)} points, {len(rays)} rays -> {len(facets)} facets")
    return sorted(facets)


def minkowski_sum_points(first: Sequence[Sequence], second: Sequence[Sequence]) -> list[Point]:
    """
    All pairwise sums ``p + q``, duplicates removed, in first-seen order.

    Raises:
        DimensionMismatchError: If any two points differ in length.
    """
    if not first or not second:
        return []
    dimension = len(first[0])
    for vector in list(first) + list(second):
        check_dimension(dimension, vector)
    return list(dict.fromkeys(add_points(p, q) for p in first for q in second))


@dataclass(frozen=True)
class Polytope:
    """
    A bounded convex body carried in both vertex and halfspace form.

    Attributes:
        vertices (tuple[Point, ...]): The extreme points.
        halfspaces (tuple[Halfspace, ...]): Inequalities whose intersection is the body; may
            include redundant ones when built from a halfspace system.
    """

    vertices: tuple[Point, ...]
    halfspaces: tuple[Halfspace, ...]

    def __post_init__(self):
        if not self.vertices:
            raise EmptyPolyhedronError(ErrorMessages.EMPTY_POLYHEDRON.value)
        dimension = len(self.vertices[0])
        for vertex in self.vertices:
            check_dimension(dimension, vertex)
            if not contains(self.halfspaces, vertex):
                raise GeometryError(f"Vertex {vertex} violates the halfspace description")
        if len(set(self.vertices)) != len(self.vertices):
            raise GeometryError("Polytope vertices must be distinct")

    @classmethod
    def from_halfspaces(cls, halfspaces: Sequence[Halfspace], dimension: int) -> "Polytope":
        vertices = hrep_to_vrep(halfspaces, dimension)
        return cls(tuple(vertices), tuple(sorted(set(halfspaces))))

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "Polytope":
        """
        Build a full-dimensional polytope from points; non-extreme points are dropped and
        the surviving vertices keep their input order.

        Raises:
            DegenerateHullError: If the points do not affinely span the space.
        """
        points = [as_point(p) for p in points]
        halfspaces = vrep_to_hrep(points)
        extreme = set(hrep_to_vrep(halfspaces, len(points[0])))
        if not extreme <= set(points):
            raise GeometryError("Halfspace and vertex descriptions disagree")
        return cls(tuple(dict.fromkeys(p for p in points if p in extreme)), tuple(halfspaces))

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])

    @property
    def is_full_dimensional(self) -> bool:
        base = self.vertices[0]
        return matrix_rank([[a - b for a, b in zip(v, base)] for v in self.vertices[1:]]) == self.dimension


def _maximal_proper_faces(face: frozenset, facets: Sequence[frozenset]) -> list[frozenset]:
    # every face of a face is an intersection with facets; the maximal proper ones are its facets
    candidates = {face & facet for facet in facets if not face <= facet and face & facet}
    return sorted((c for c in candidates if not any(c < other for other in candidates)), key=sorted)


def _fan(face: frozenset, apex: int, facets: Sequence[frozenset]) -> list[tuple[int, ...]]:
    if len(face) == 1:
        return [tuple(face)]
    simplices = []
    for sub in _maximal_proper_faces(face, facets):
        if apex in sub:
            continue
        simplices.extend((apex,) + simplex for simplex in _fan(sub, min(sub), facets))
    return simplices


def triangulate(polytope: Polytope, apex: int = 0) -> list[tuple[Point, ...]]:
    """
    Pulling triangulation: cone from ``vertices[apex]`` over recursively triangulated
    facets that miss the apex. Lower-dimensional polytopes have no full simplices.

    Args:
        polytope (Polytope): The body to split.
        apex (int): Index of the vertex to pull first.

    Returns:
        list[tuple[Point, ...]]: Simplices with n + 1 vertices each.
    """
    if not 0 <= apex < len(polytope.vertices):
        raise IndexError(f"Apex index {apex} out of range")
    if not polytope.is_full_dimensional:
        return []
    facets = [
        frozenset(i for i, vertex in enumerate(polytope.vertices) if halfspace.is_tight(vertex))
        for halfspace in polytope.halfspaces
    ]
    simplices = _fan(frozenset(range(len(polytope.vertices))), apex, facets)
    return [tuple(polytope.vertices[i] for i in simplex) for simplex in simplices]


def simplex_volume(vertices: Sequence[Sequence]) -> Fraction:
    """
    Volume ``|det(v1 - v0, ..., vn - v0)| / n!`` of an n-simplex.
    """
    dimension = len(vertices[0])
    if len(vertices) != dimension + 1:
        raise DimensionMismatchError(
            ErrorMessages.DIMENSION_MISMATCH.value.format(expected=dimension + 1, actual=len(vertices))
        )
    base = as_point(vertices[0])
    edges = [[Fraction(a) - b for a, b in zip(vertex, base)] for vertex in vertices[1:]]
    return abs(determinant(edges)) / factorial(dimension)


def volume(polytope: Polytope, apex: int = 0) -> Fraction:
    """
    Exact Euclidean volume as the sum of the simplices of ``triangulate``.

    Degenerate (lower-dimensional) polytopes have volume 0.
    """
    return sum((simplex_volume(simplex) for simplex in triangulate(polytope, apex)), Fraction(0))


def lattice_points(polytope: Polytope) -> list[IntVector]:
    """
    Integer points of a polytope by bounding-box enumeration.

    Args:
        polytope (Polytope): The body; its vertex description gives the box.

    Returns:
        list[IntVector]: The lattice points in lexicographic order.
    """
    ranges = []
    for axis in range(polytope.dimension):
        coordinates = [vertex[axis] for vertex in polytope.vertices]
        ranges.append(range(ceil(min(coordinates)), floor(max(coordinates)) + 1))
    return [point for point in product(*ranges) if contains(polytope.halfspaces, point)]
