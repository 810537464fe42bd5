"""
Strictly convex rational cones and the C-convex regions that live inside them.

A region is ``Gamma = conv(generators) + C``. It is stored with both its generators (pruned
to the vertices of Gamma) and its minimal halfspace description, plus the coboundedness
certificate ``T`` when ``C \\ Gamma`` is bounded: past the level ``xi = T`` the cone is
entirely inside Gamma, which makes the covolume a difference of two polytope volumes.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Optional, Sequence

from src.config.settings.logger_config import logger
from src.geometry.exact_geometry import (
    Halfspace,
    IntVector,
    Point,
    Polytope,
    as_point,
    check_dimension,
    contains,
    dot,
    extreme_rays,
    matrix_rank,
    minkowski_sum_points,
    primitive,
    scale_point,
    volume,
    vrep_to_hrep,
)
from src.utilities.constants import ErrorMessages
from src.utilities.messages.exceptions.errors import (
    ConeError,
    ConeMismatchError,
    EmptyGeneratorSetError,
    GeneratorOutsideConeError,
    NotCoboundedError,
    NotFullDimensionalError,
    NotStrictlyConvexError,
    RegionError,
)


@dataclass(frozen=True)
class Cone:
    """
    A closed, strictly convex, full-dimensional rational cone with apex at the origin.

    Attributes:
        dimension (int): Ambient dimension n.
        rays (tuple[IntVector, ...]): Primitive extreme rays, sorted.
        facets (tuple[Halfspace, ...]): Facet inequalities ``<a, x> >= 0``, sorted.
        xi (IntVector): Sum of the facet normals; strictly positive on every nonzero point of the cone.
    """

    dimension: int
    rays: tuple[IntVector, ...]
    facets: tuple[Halfspace, ...]
    xi: IntVector

    def __post_init__(self):
        if matrix_rank(self.rays) < self.dimension:
            raise NotFullDimensionalError(
                ErrorMessages.NOT_FULL_DIMENSIONAL.value.format(
                    rank=matrix_rank(self.rays), dimension=self.dimension
                )
            )
        for ray in self.rays:
            if dot(self.xi, ray) <= 0:
                raise NotStrictlyConvexError(ErrorMessages.NOT_STRICTLY_CONVEX.value.format(ray=ray), ray=ray)
            if not contains(self.facets, ray):
                raise ConeError(f"Ray {ray} violates the facet description")
        if any(facet.offset != 0 for facet in self.facets):
            raise ConeError("Cone facets must pass through the origin")

    @property
    def origin(self) -> Point:
        return (Fraction(0),) * self.dimension

    def contains(self, x: Sequence) -> bool:
        return contains(self.facets, x)

    def xi_value(self, x: Sequence) -> Fraction:
        return Fraction(dot(self.xi, x))

    def section_vertices(self, level) -> list[Point]:
        """
        Vertices of the section ``C ∩ {xi = level}``: one point on each extreme ray.
        """
        return [scale_point(Fraction(level) / dot(self.xi, ray), ray) for ray in self.rays]

    def level_cut(self, level) -> Halfspace:
        return Halfspace.from_inequality([-v for v in self.xi], -Fraction(level))

    def truncation(self, level) -> Polytope:
        return Polytope.from_halfspaces(list(self.facets) + [self.level_cut(level)], self.dimension)

    def ray_parameter(self, x: Sequence, ray: IntVector) -> Optional[Fraction]:
        """
        Return t >= 0 with ``x = t * ray``, or None when x is not on the ray.
        """
        pivot = next(i for i, value in enumerate(ray) if value != 0)
        t = Fraction(x[pivot]) / ray[pivot]
        if t < 0 or any(Fraction(x[i]) != t * ray[i] for i in range(self.dimension)):
            return None
        return t


def cone_from_rays(rays: Sequence[Sequence[int]]) -> Cone:
    """
    Build a cone from integer generators, keeping only the primitive extreme rays.

    The facets are the extreme rays of the dual cone; ``xi`` is their sum and is checked
    to be positive on every generator, which certifies that the cone holds no line.

    Args:
        rays (Sequence[Sequence[int]]): At least n integer vectors in dimension n.

    Returns:
        Cone: The validated cone.

    Raises:
        NotFullDimensionalError: If the rays do not span the space.
        NotStrictlyConvexError: If the cone contains a line.
    """
    if not rays:
        raise NotFullDimensionalError(ErrorMessages.NOT_FULL_DIMENSIONAL.value.format(rank=0, dimension=0))
    dimension = len(rays[0])
    for ray in rays:
        check_dimension(dimension, ray)
    generators = list(dict.fromkeys(primitive([int(v) for v in ray]) for ray in rays if any(ray)))
    rank = matrix_rank(generators)
    if rank < dimension:
        logger.warning(f"Rejected cone generators {generators}: rank {rank} < {dimension}")
        raise NotFullDimensionalError(ErrorMessages.NOT_FULL_DIMENSIONAL.value.format(rank=rank, dimension=dimension))

    normals = extreme_rays(generators)
    xi = tuple(sum(column) for column in zip(*normals)) if normals else (0,) * dimension
    for ray in generators:
        if dot(xi, ray) <= 0:
            logger.warning(f"Rejected cone generators {generators}: {ray} lies on a line of the cone")
            raise NotStrictlyConvexError(ErrorMessages.NOT_STRICTLY_CONVEX.value.format(ray=ray), ray=ray)

    facets = sorted(Halfspace(normal, Fraction(0)) for normal in normals)
    extreme = sorted(set(extreme_rays([facet.normal for facet in facets])))
    if not set(extreme) <= set(generators):
        raise ConeError("Facet and ray descriptions of the cone disagree")
    logger.debug(f"Cone with {len(extreme)} extreme rays and {len(facets)} facets, xi = {xi}")
    return Cone(dimension, tuple(extreme), tuple(facets), xi)


@dataclass(frozen=True)
class ConvexRegion:
    """
    A polyhedral C-convex region ``conv(generators) + C``.

    Attributes:
        cone (Cone): The ambient cone C.
        generators (tuple[Point, ...]): The vertices of the region, sorted.
        halfspaces (tuple[Halfspace, ...]): Minimal halfspace description, sorted.
        cobounded_T (Optional[Fraction]): Level beyond which C lies in the region, if any.
    """

    cone: Cone
    generators: tuple[Point, ...]
    halfspaces: tuple[Halfspace, ...]
    cobounded_T: Optional[Fraction]

    @property
    def dimension(self) -> int:
        return self.cone.dimension

    def contains(self, x: Sequence) -> bool:
        return contains(self.halfspaces, x)


def _vertices_among(points: Sequence[Point], halfspaces: Sequence[Halfspace], dimension: int) -> list[Point]:
    vertices = []
    for point in dict.fromkeys(points):
        tight = [halfspace.normal for halfspace in halfspaces if halfspace.is_tight(point)]
        if len(tight) >= dimension and matrix_rank(tight) == dimension:
            vertices.append(point)
    return sorted(vertices)


def _certify(
    cone: Cone, generators: Sequence[Point], halfspaces: Sequence[Halfspace]
) -> tuple[Optional[Fraction], Optional[IntVector]]:
    """
    Return ``(T, None)`` for a cobounded region, or ``(None, ray)`` with a witness ray.

    A region generated by finitely many points is cobounded iff every extreme ray of C
    carries a generator; T is the largest xi-level among the lowest such generators.
    """
    levels = []
    for ray in cone.rays:
        on_ray = [cone.xi_value(p) for p in generators if cone.ray_parameter(p, ray) is not None]
        if not on_ray:
            return None, ray
        levels.append(min(on_ray))
    level = max(levels)
    for vertex in cone.section_vertices(level):
        if not contains(halfspaces, vertex):
            logger.error(f"Section vertex {vertex} at level {level} is outside the region")
            raise RegionError(f"Coboundedness certificate {level} failed at {vertex}")
    return level, None


def _build_region(cone: Cone, points: Sequence[Point]) -> ConvexRegion:
    halfspaces = _region_halfspaces(cone, points)
    vertices = _vertices_among(points, halfspaces, cone.dimension)
    certificate, _ = _certify(cone, vertices, halfspaces)
    return ConvexRegion(cone, tuple(vertices), tuple(halfspaces), certificate)


def _region_halfspaces(cone: Cone, points: Sequence[Point]) -> list[Halfspace]:
    halfspaces = vrep_to_hrep(points, cone.rays)
    for halfspace in halfspaces:
        if any(dot(halfspace.normal, ray) < 0 for ray in cone.rays):
            raise RegionError(f"Facet {halfspace} does not recede along the cone")
    return halfspaces


def region_from_generators(c: Cone, points: Sequence[Sequence]) -> ConvexRegion:
    """
    Build ``Gamma = conv(points) + C``.

    Args:
        c (Cone): The ambient cone.
        points (Sequence[Sequence]): Rational points of C, at least one.

    Returns:
        ConvexRegion: The region with its minimal description and certificate.

    Raises:
        EmptyGeneratorSetError: If no point is given.
        GeneratorOutsideConeError: If some point is not in C.
    """
    if not points:
        raise EmptyGeneratorSetError(ErrorMessages.EMPTY_GENERATOR_SET.value)
    generators = [as_point(p) for p in points]
    for point in generators:
        check_dimension(c.dimension, point)
        if not c.contains(point):
            logger.warning(f"Generator {point} rejected: outside the cone")
            raise GeneratorOutsideConeError(
                ErrorMessages.GENERATOR_OUTSIDE_CONE.value.format(point=tuple(str(v) for v in point)), point=point
            )
    return _build_region(c, generators)


def cone_region(c: Cone) -> ConvexRegion:
    """
    The region ``Gamma = C``, neutral for ``region_sum``.
    """
    return _build_region(c, [c.origin])


def same_cone(regions: Sequence[ConvexRegion]) -> Cone:
    cone = regions[0].cone
    if any(region.cone != cone for region in regions[1:]):
        raise ConeMismatchError(ErrorMessages.CONE_MISMATCH.value)
    return cone


def _undominated(cone: Cone, points: Sequence[Point]) -> list[Point]:
    # p is no vertex when p - q lies in C for another point q, and then xi(q) < xi(p)
    ordered = sorted(dict.fromkeys(points), key=lambda p: (cone.xi_value(p), p))
    kept: list[Point] = []
    levels: list[tuple] = []
    for point in ordered:
        values = tuple(dot(facet.normal, point) for facet in cone.facets)
        if any(all(v >= w for v, w in zip(values, level)) for level in levels):
            continue
        kept.append(point)
        levels.append(values)
    return kept


@lru_cache(maxsize=1024)
def region_sum(a: ConvexRegion, b: ConvexRegion) -> ConvexRegion:
    """
    Minkowski sum of two regions of the same cone.

    Sums lying in another sum plus C are dropped before the hull is built, and results
    are memoized so the partial sums shared by polarization subsets are reused.

    Raises:
        ConeMismatchError: If the regions live in different cones.
    """
    cone = same_cone([a, b])
    return _build_region(cone, _undominated(cone, minkowski_sum_points(a.generators, b.generators)))


def region_scale(factor, a: ConvexRegion) -> ConvexRegion:
    """
    Dilate a region by a nonnegative rational; the factor 0 gives C itself.
    """
    factor = Fraction(factor)
    if factor < 0:
        raise ValueError(f"Scale factor must be nonnegative, got {factor}")
    if factor == 0:
        return cone_region(a.cone)
    return ConvexRegion(
        a.cone,
        tuple(scale_point(factor, p) for p in a.generators),
        tuple(Halfspace(h.normal, h.offset * factor) for h in a.halfspaces),
        None if a.cobounded_T is None else a.cobounded_T * factor,
    )


def region_combination(factors: Sequence, regions: Sequence[ConvexRegion]) -> ConvexRegion:
    """
    The region ``factors[0] * regions[0] + ... + factors[m-1] * regions[m-1]``.
    """
    if not regions or len(factors) != len(regions):
        raise ValueError("Need one nonnegative factor per region")
    same_cone(regions)
    return reduce(region_sum, (region_scale(f, r) for f, r in zip(factors, regions)))


def region_contains(g: ConvexRegion, x: Sequence) -> bool:
    return g.contains(x)


def region_includes(outer: ConvexRegion, inner: ConvexRegion) -> bool:
    """
    True iff ``inner ⊆ outer``; since outer is C-convex it is enough to check inner's vertices.
    """
    same_cone([outer, inner])
    return all(outer.contains(p) for p in inner.generators)


def cobounded_certificate(g: ConvexRegion) -> Fraction:
    """
    Return the level T with ``C ∩ {xi >= T} ⊆ Gamma``.

    Args:
        g (ConvexRegion): The region.

    Returns:
        Fraction: The certificate, the largest xi-value among the lowest generators on
        the extreme rays of C.

    Raises:
        NotCoboundedError: If some extreme ray of C carries no generator; the ray is attached.
    """
    if g.cobounded_T is not None:
        return g.cobounded_T
    _, ray = _certify(g.cone, g.generators, g.halfspaces)
    raise NotCoboundedError(ErrorMessages.NOT_COBOUNDED.value.format(ray=ray), ray=ray)


def covolume(g: ConvexRegion, truncation=None) -> Fraction:
    """
    Volume of ``C \\ Gamma``, computed as ``vol(C ∩ {xi <= T}) - vol(Gamma ∩ {xi <= T})``.

    Args:
        g (ConvexRegion): A cobounded region.
        truncation: Optional level T' used instead of the certificate; must not be below it.

    Returns:
        Fraction: The exact covolume, independent of the truncation level.

    Raises:
        NotCoboundedError: If the complement is unbounded.
        RegionError: If the truncation is below the certificate.
    """
    certificate = cobounded_certificate(g)
    level = certificate if truncation is None else Fraction(truncation)
    if level < certificate:
        raise RegionError(
            ErrorMessages.TRUNCATION_TOO_SMALL.value.format(truncation=level, certificate=certificate)
        )
    cut = g.cone.level_cut(level)
    inner = Polytope.from_halfspaces(list(g.halfspaces) + [cut], g.dimension)
    result = volume(g.cone.truncation(level)) - volume(inner)
    logger.debug(f"covolume at level {level}: {result}")
    return result

