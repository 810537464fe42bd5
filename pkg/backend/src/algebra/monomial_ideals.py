"""
Monomial ideals of the toric semigroup ring ``k[S]``, ``S = C ∩ Z^n``.

An ideal is handled through its exponent set, which is closed under adding elements of
S. Its minimal generators determine the Newton region ``Gamma_I = conv(generators) + C``;
the ideal is m-primary exactly when every extreme ray of C carries a generator, which is
when that region is cobounded. Colengths are counted on the staircase ``S minus E(I)``,
and multiplicities come from finite differences of the Hilbert-Samuel function
``k -> colength(I^k)``.
"""

import heapq
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from itertools import accumulate
from math import comb, factorial, floor
from typing import Optional, Sequence

import numpy as np
import sympy

from src.config.settings.base import config_env
from src.config.settings.logger_config import logger
from src.geometry.cones_regions import Cone, ConvexRegion, cobounded_certificate, region_from_generators
from src.geometry.exact_geometry import (
    IntVector,
    Polytope,
    check_dimension,
    determinant,
    dot,
    lattice_points,
    triangulate,
)
from src.geometry.mixed_covolume import (
    InequalityCheck,
    PolynomialFit,
    canonical_subsets,
    fit_homogeneous_polynomial,
    polarize,
)
from src.utilities.constants import ErrorMessages
from src.utilities.messages.exceptions.errors import (
    AlphaOutsideSemigroupError,
    ArityError,
    ConeMismatchError,
    IdealError,
    NoStabilizationError,
    NonIntegerResultError,
    NonPositiveResultError,
    NotMPrimaryError,
    SemigroupMismatchError,
    StaircaseCapExceededError,
)

COMPLETENESS_SHELL = 10
KEY_BITS = 62
DOMINANCE_BLOCK = 4_000_000


def _as_lattice_point(alpha: Sequence) -> IntVector:
    values = [Fraction(v) for v in alpha]
    if any(v.denominator != 1 for v in values):
        raise AlphaOutsideSemigroupError(ErrorMessages.ALPHA_OUTSIDE_SEMIGROUP.value.format(alpha=tuple(alpha)))
    return tuple(int(v) for v in values)


def _subtract(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x + y for x, y in zip(a, b))


def _parallelepiped_points(rays: Sequence[IntVector]) -> set[IntVector]:
    """
    Lattice points of ``{sum t_i r_i : 0 <= t_i < 1}`` for linearly independent integer rays.

    Each class of ``Z^n`` modulo the ray lattice has one representative in the
    parallelepiped; the classes are reached from 0 by unit steps.
    """
    dimension = len(rays)
    det = int(determinant(rays))
    adjugate = sympy.Matrix(rays).adjugate()

    def reduce_point(x: IntVector) -> IntVector:
        # x = t R with t = x adj(R) / det(R); keep the fractional part of t
        t = [Fraction(sum(x[i] * int(adjugate[i, j]) for i in range(dimension)), det) for j in range(dimension)]
        fractional = [v - floor(v) for v in t]
        return tuple(int(sum(fractional[j] * rays[j][k] for j in range(dimension))) for k in range(dimension))

    origin = (0,) * dimension
    found = {origin}
    queue = deque([origin])
    while queue:
        x = queue.popleft()
        for axis in range(dimension):
            step = tuple(v + (1 if k == axis else 0) for k, v in enumerate(x))
            y = reduce_point(step)
            if y not in found:
                found.add(y)
                queue.append(y)
    if len(found) != abs(det):
        raise IdealError(f"Parallelepiped of {rays} has {len(found)} lattice points, expected {abs(det)}")
    return found


def hilbert_basis(c: Cone) -> list[IntVector]:
    """
    The unique minimal generating set of the semigroup ``C ∩ Z^n``.

    The cone is split into simplicial cones by a pulling triangulation of
    ``conv(0, rays)`` from the origin. Every irreducible element of S is a ray or a
    lattice point of the fundamental parallelepiped of one of these cones, so it is
    enough to drop the reducible candidates.

    Args:
        c (Cone): The cone.

    Returns:
        list[IntVector]: The irreducible elements of S, sorted.
    """
    origin = (0,) * c.dimension
    polytope = Polytope.from_points([origin] + list(c.rays))
    candidates = set(c.rays)
    simplices = triangulate(polytope, apex=0)
    for simplex in simplices:
        rays = [tuple(int(v) for v in vertex) for vertex in simplex[1:]]
        candidates |= _parallelepiped_points(rays)
    candidates.discard(origin)

    basis = []
    for x in candidates:
        if not any(y != x and c.contains(_subtract(x, y)) for y in candidates):
            basis.append(x)
    logger.debug(f"Hilbert basis from {len(simplices)} simplicial cones: {len(basis)} elements")
    return sorted(basis)


@dataclass(frozen=True)
class ToricSemigroup:
    """
    The semigroup ``S = C ∩ Z^n`` with its Hilbert basis.

    Attributes:
        cone (Cone): The cone C.
        hilbert_basis (tuple[IntVector, ...]): The irreducible elements of S, sorted.
    """

    cone: Cone
    hilbert_basis: tuple[IntVector, ...]

    @property
    def dimension(self) -> int:
        return self.cone.dimension

    @property
    def origin(self) -> IntVector:
        return (0,) * self.dimension

    def contains(self, alpha: Sequence) -> bool:
        check_dimension(self.dimension, alpha)
        return all(Fraction(v).denominator == 1 for v in alpha) and self.cone.contains(alpha)

    def facet_values(self, alpha: Sequence[int]) -> tuple[int, ...]:
        return tuple(dot(facet.normal, alpha) for facet in self.cone.facets)

    def shell(self, bound) -> set[IntVector]:
        """
        Points of S with ``xi <= bound`` reachable from 0 by Hilbert basis steps.
        """
        bound = Fraction(bound)
        reached = {self.origin}
        queue = deque([self.origin])
        while queue:
            x = queue.popleft()
            for h in self.hilbert_basis:
                y = _add(x, h)
                if y not in reached and dot(self.cone.xi, y) <= bound:
                    reached.add(y)
                    queue.append(y)
        return reached

    def check_completeness(self, shell=COMPLETENESS_SHELL) -> bool:
        """
        Compare the Hilbert basis span with a direct lattice point count on ``C ∩ {xi <= shell}``.
        """
        expected = set(lattice_points(self.cone.truncation(shell)))
        return self.shell(shell) == expected


def toric_semigroup(c: Cone) -> ToricSemigroup:
    return ToricSemigroup(c, tuple(hilbert_basis(c)))


@lru_cache(maxsize=64)
def _facet_matrix(c: Cone) -> np.ndarray:
    return np.array([facet.normal for facet in c.facets], dtype=np.int64)


def _minimal(semigroup: ToricSemigroup, points: Sequence[IntVector]) -> tuple[IntVector, ...]:
    """
    Drop every point that lies in ``q + C`` for another point q.

    Facet values separate lattice points, so after removing duplicates a point is
    redundant iff some other point has componentwise smaller or equal facet values.
    """
    unique = sorted(set(points))
    if len(unique) < 2:
        return tuple(unique)
    values = np.array(unique, dtype=np.int64) @ _facet_matrix(semigroup.cone).T
    keep = np.ones(len(unique), dtype=bool)
    block = max(1, DOMINANCE_BLOCK // values.size)
    for start in range(0, len(unique), block):
        rows = values[start : start + block]
        below = np.all(values[None, :, :] <= rows[:, None, :], axis=2)
        below[np.arange(len(rows)), np.arange(start, start + len(rows))] = False
        keep[start : start + len(rows)] = ~below.any(axis=1)
    return tuple(point for point, kept in zip(unique, keep) if kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """
    A monomial ideal of ``k[S]`` given by its minimal exponent generators.

    Attributes:
        semigroup (ToricSemigroup): The ambient semigroup S.
        generators (tuple[IntVector, ...]): Minimal generators, sorted.
    """

    semigroup: ToricSemigroup
    generators: tuple[IntVector, ...]

    @cached_property
    def newton(self) -> ConvexRegion:
        return region_from_generators(self.semigroup.cone, self.generators)

    @cached_property
    def uncovered_ray(self) -> Optional[IntVector]:
        """
        An extreme ray of C carrying no generator, or None when the ideal is m-primary.
        """
        cone = self.semigroup.cone
        for ray in cone.rays:
            if all(cone.ray_parameter(g, ray) is None for g in self.generators):
                return ray
        return None

    @property
    def m_primary(self) -> bool:
        return self.uncovered_ray is None

    @cached_property
    def _generator_levels(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.semigroup.facet_values(g) for g in self.generators)

    @property
    def dimension(self) -> int:
        return self.semigroup.dimension

    @property
    def is_unit(self) -> bool:
        return self.generators == (self.semigroup.origin,)

    def contains(self, alpha: Sequence[int]) -> bool:
        # alpha - g lies in C iff every facet value of alpha dominates that of g
        values = self.semigroup.facet_values(alpha)
        return any(all(v >= w for v, w in zip(values, level)) for level in self._generator_levels)


def monomial_ideal(semigroup: ToricSemigroup, exponents: Sequence[Sequence]) -> MonomialIdeal:
    """
    Build the ideal generated by the monomials ``x^alpha``, pruned to its minimal generators.

    Args:
        semigroup (ToricSemigroup): The ambient semigroup.
        exponents (Sequence[Sequence]): Exponent vectors in S, at least one.

    Returns:
        MonomialIdeal: The ideal.

    Raises:
        IdealError: If no exponent is given.
        AlphaOutsideSemigroupError: If an exponent is not a lattice point of C.
    """
    if not exponents:
        raise IdealError(ErrorMessages.EMPTY_IDEAL.value)
    points = []
    for alpha in exponents:
        check_dimension(semigroup.dimension, alpha)
        point = _as_lattice_point(alpha)
        if not semigroup.cone.contains(point):
            logger.warning(f"Exponent {point} rejected: outside the semigroup")
            raise AlphaOutsideSemigroupError(ErrorMessages.ALPHA_OUTSIDE_SEMIGROUP.value.format(alpha=point))
        points.append(point)
    return MonomialIdeal(semigroup, _minimal(semigroup, points))


def unit_ideal(semigroup: ToricSemigroup) -> MonomialIdeal:
    """
    The whole ring, generated by ``x^0``.
    """
    return MonomialIdeal(semigroup, (semigroup.origin,))


def membership(alpha: Sequence, ideal: MonomialIdeal) -> bool:
    """
    Decide whether ``x^alpha`` lies in the ideal.

    Args:
        alpha (Sequence): An exponent vector of S.
        ideal (MonomialIdeal): The ideal.

    Returns:
        bool: True iff ``alpha - g`` lies in C for some generator g.

    Raises:
        AlphaOutsideSemigroupError: If alpha is not in S.
    """
    check_dimension(ideal.dimension, alpha)
    point = _as_lattice_point(alpha)
    if not ideal.semigroup.cone.contains(point):
        raise AlphaOutsideSemigroupError(ErrorMessages.ALPHA_OUTSIDE_SEMIGROUP.value.format(alpha=point))
    return ideal.contains(point)


def _require_m_primary(ideal: MonomialIdeal) -> None:
    ray = ideal.uncovered_ray
    if ray is not None:
        logger.warning(f"Ideal {ideal.generators} is not m-primary along {ray}")
        raise NotMPrimaryError(ErrorMessages.NOT_M_PRIMARY.value.format(ray=ray), ray=ray)


def _same_semigroup(ideals: Sequence[MonomialIdeal]) -> ToricSemigroup:
    semigroup = ideals[0].semigroup
    if any(ideal.semigroup != semigroup for ideal in ideals[1:]):
        raise SemigroupMismatchError(ErrorMessages.SEMIGROUP_MISMATCH.value)
    return semigroup


@dataclass
class _Level:
    keys: np.ndarray
    points: np.ndarray
    orders: np.ndarray


def _lookup(keys: np.ndarray, values: np.ndarray, queries: np.ndarray, missing: int) -> np.ndarray:
    # keys sorted and unique
    if len(keys) == 0:
        return np.full(len(queries), missing, dtype=np.int64)
    index = np.minimum(np.searchsorted(keys, queries), len(keys) - 1)
    return np.where(keys[index] == queries, values[index], missing)


def _strongest_pushes(pushes: list[tuple[np.ndarray, np.ndarray]], queries: np.ndarray) -> np.ndarray:
    if not pushes:
        return np.zeros(len(queries), dtype=np.int64)
    keys = np.concatenate([k for k, _ in pushes])
    values = np.concatenate([v for _, v in pushes])
    order = np.lexsort((values, keys))
    keys, values = keys[order], values[order]
    last = np.append(np.flatnonzero(keys[1:] != keys[:-1]), len(keys) - 1)
    return _lookup(keys[last], values[last], queries, 0)


def _explore_orders(
    ideal: MonomialIdeal, depth: int, cap: int, collect: bool = False
) -> tuple[list[int], list[IntVector]]:
    """
    Count the points of S by their order ``ord(alpha) = max {k : alpha in I^k}``, up to ``depth``.

    The points of order below ``depth`` form the staircase of ``I^depth``. They are
    reached from 0 by Hilbert basis steps through points of no larger order, and are
    processed level by level in xi, so every point is settled after the points it
    depends on. Some Hilbert basis step lowers the order by at most one, so a
    point has either the largest order among its predecessors ``alpha - h`` or one
    more. The latter happens exactly when ``alpha = beta + g`` for a generator
    g and a point beta of higher order than all its own predecessors. Those points
    push their order forward along the generators, so no power of the ideal is formed.

    Points are keyed by a signed mixed-radix integer, exact while every coordinate
    stays below half the radix; the level bound checks that for the whole section.

    Args:
        ideal (MonomialIdeal): An m-primary ideal other than the unit ideal.
        depth (int): Orders from 0 to ``depth - 1`` are counted.
        cap (int): Largest number of points kept.
        collect (bool): Also return the points themselves.

    Returns:
        tuple[list[int], list[IntVector]]: ``counts[o]`` for each order o, and the points when collected.

    Raises:
        StaircaseCapExceededError: If more than ``cap`` points have order below ``depth``.
        IdealError: If the exploration outgrows the key range.
    """
    semigroup = ideal.semigroup
    cone = semigroup.cone
    n = ideal.dimension
    bits = KEY_BITS // n
    weights = np.array([1 << (bits * i) for i in range(n)], dtype=np.int64)
    half = 1 << (bits - 1)
    reach = max(Fraction(abs(v), dot(cone.xi, ray)) for ray in cone.rays for v in ray)

    normals = _facet_matrix(cone)
    xi = np.array(cone.xi, dtype=np.int64)
    basis = np.array(semigroup.hilbert_basis, dtype=np.int64)
    basis_steps = [int(v) for v in basis @ xi]
    basis_keys = basis @ weights
    basis_values = basis @ normals.T
    generators = np.array(ideal.generators, dtype=np.int64)
    generator_levels = generators @ xi
    generator_keys = [
        (int(level), generators[generator_levels == level] @ weights) for level in np.unique(generator_levels)
    ]
    window = max(basis_steps)

    levels: dict[int, _Level] = {}
    pushes: dict[int, list[tuple[np.ndarray, np.ndarray]]] = defaultdict(list)
    counts = np.zeros(depth, dtype=np.int64)
    collected: list[np.ndarray] = []
    queue, scheduled = [0], {0}
    while queue:
        level = heapq.heappop(queue)
        if level * reach >= half:
            logger.error(f"Order exploration of {ideal.generators} reached level {level}")
            raise IdealError(ErrorMessages.ENCODING_RANGE.value.format(level=level))
        if level == 0:
            points = np.zeros((1, n), dtype=np.int64)
        else:
            parts = [levels[level - s].points + basis[i] for i, s in enumerate(basis_steps) if level - s in levels]
            if not parts:
                continue
            points = np.concatenate(parts)
        keys, first = np.unique(points @ weights, return_index=True)
        points = points[first]
        values = points @ normals.T

        # an absent predecessor inside C has order depth or more
        base = np.full(len(keys), -1, dtype=np.int64)
        for i, s in enumerate(basis_steps):
            inside = np.all(values >= basis_values[i], axis=1)
            below = levels.get(level - s)
            known = depth if below is None else _lookup(below.keys, below.orders, keys - basis_keys[i], depth)
            base = np.maximum(base, np.where(inside, known, -1))
        orders = np.maximum(base, _strongest_pushes(pushes.pop(level, []), keys))

        keep = orders < depth
        if not keep.any():
            continue
        jumps = (orders > base)[keep]
        keys, points, orders = keys[keep], points[keep], orders[keep]
        levels[level] = _Level(keys, points, orders)
        counts += np.bincount(orders, minlength=depth)
        if counts.sum() > cap:
            logger.error(f"Order exploration of {ideal.generators} passed {cap} points")
            raise StaircaseCapExceededError(ErrorMessages.STAIRCASE_CAP.value.format(cap=cap))
        if collect:
            collected.append(points)

        raised = np.minimum(orders[jumps] + 1, depth)
        for step, keys_g in generator_keys:
            targets = (keys[jumps][:, None] + keys_g[None, :]).ravel()
            pushes[level + step].append((targets, np.repeat(raised, len(keys_g))))
        for s in set(basis_steps):
            if level + s not in scheduled:
                scheduled.add(level + s)
                heapq.heappush(queue, level + s)
        for old in [old for old in levels if old <= level - window]:
            del levels[old]

    points_found = [tuple(int(v) for v in row) for block in collected for row in block]
    logger.debug(f"Order exploration of {ideal.generators} to depth {depth}: {int(counts.sum())} points")
    return [int(c) for c in counts], points_found


def staircase(ideal: MonomialIdeal) -> list[IntVector]:
    """
    The exponents of S outside the ideal, explored from 0 along Hilbert basis steps.

    The complement is closed under removing a Hilbert basis element, so every staircase
    point is reached through staircase points and the search can stop at members.

    Args:
        ideal (MonomialIdeal): An m-primary ideal.

    Returns:
        list[IntVector]: The staircase, sorted.

    Raises:
        NotMPrimaryError: If the staircase is infinite.
        StaircaseCapExceededError: If more than ``COCONE_BFS_CAP`` points are found.
    """
    _require_m_primary(ideal)
    if ideal.is_unit:
        return []
    _, points = _explore_orders(ideal, 1, config_env.BFS_CAP, collect=True)
    return sorted(points)


def colength(ideal: MonomialIdeal) -> int:
    """
    ``dim_k k[S] / I``, the number of staircase points.
    """
    _require_m_primary(ideal)
    if ideal.is_unit:
        return 0
    counts, _ = _explore_orders(ideal, 1, config_env.BFS_CAP)
    return counts[0]


def brute_force_colength(ideal: MonomialIdeal) -> int:
    """
    Count non-members among all lattice points of ``C ∩ {xi <= n * T}``, T the Newton certificate.

    Every point of S beyond that level dominates the lowest generator on one of the
    rays of a simplicial cone containing it, so nothing outside the box is missed.
    """
    _require_m_primary(ideal)
    bound = ideal.dimension * ideal.newton.cobounded_T
    points = lattice_points(ideal.semigroup.cone.truncation(bound))
    return sum(1 for point in points if not ideal.contains(point))


@lru_cache(maxsize=1024)
def ideal_product(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """
    The product ideal, generated by all sums of a generator of each factor.

    Products are memoized, so powers and the products shared between polarization
    subsets are built once per process.

    Raises:
        SemigroupMismatchError: If the ideals live in different semigroups.
    """
    semigroup = _same_semigroup([first, second])
    sums = [_add(a, b) for a in first.generators for b in second.generators]
    return MonomialIdeal(semigroup, _minimal(semigroup, sums))


def ideal_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """
    ``I^k`` for ``k >= 0``; ``I^0`` is the unit ideal.

    Raises:
        IdealError: If k is negative.
    """
    if k < 0:
        raise IdealError(ErrorMessages.NEGATIVE_POWER.value.format(exponent=k))
    result = unit_ideal(ideal.semigroup)
    for _ in range(k):
        result = ideal_product(result, ideal)
    return result


def product_of(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ArityError(ErrorMessages.ARITY.value.format(expected="at least 1", actual=0))
    return reduce(ideal_product, ideals)


@dataclass(frozen=True)
class HilbertSamuelTable:
    """
    Values ``(k, colength(I^k))`` of the Hilbert-Samuel function for ``k = 1, 2, ...``.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for (k, h), (next_k, next_h) in zip(self.entries, self.entries[1:]):
            if next_k != k + 1:
                raise ValueError(f"Hilbert-Samuel entries must be consecutive, got {k} then {next_k}")
            if next_h < h:
                raise ValueError(f"Hilbert-Samuel function decreased from {h} to {next_h} at k = {next_k}")

    def values(self) -> list[int]:
        return [h for _, h in self.entries]

    def finite_difference(self, order: int) -> list[int]:
        values = self.values()
        for _ in range(order):
            values = [b - a for a, b in zip(values, values[1:])]
        return values


def _hilbert_samuel_values(ideal: MonomialIdeal, k_max: int, cap: int) -> list[int]:
    # [H(0), ..., H(k_max)]: I^k misses exactly the points of order below k
    if ideal.is_unit:
        return [0] * (k_max + 1)
    counts, _ = _explore_orders(ideal, k_max, cap)
    return [0, *accumulate(counts)]


def _forward_difference(values: Sequence[int], k: int, order: int) -> int:
    return sum((-1) ** (order - j) * comb(order, j) * values[k + j] for j in range(order + 1))


def hilbert_samuel(ideal: MonomialIdeal, k_max: int) -> HilbertSamuelTable:
    """
    Tabulate ``H_I(k) = colength(I^k)`` for ``k = 1, ..., k_max``.

    All values come from one exploration of the staircase of ``I^k_max``.

    Raises:
        ValueError: If ``k_max < 1``.
        NotMPrimaryError: If the ideal is not m-primary.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    _require_m_primary(ideal)
    values = _hilbert_samuel_values(ideal, k_max, config_env.BFS_CAP)
    return HilbertSamuelTable(tuple((k, values[k]) for k in range(1, k_max + 1)))


@lru_cache(maxsize=512)
def _stable_difference(ideal: MonomialIdeal, stabilization_cap: int, bfs_cap: int) -> int:
    n = ideal.dimension
    k = n + 1
    while k <= stabilization_cap:
        values = _hilbert_samuel_values(ideal, k + n + 1, bfs_cap)
        current = _forward_difference(values, k, n)
        if current == _forward_difference(values, k + 1, n):
            logger.debug(f"e({ideal.generators}) = {current}, stable at k = {k}")
            return current
        k *= 2
    logger.error(f"Hilbert-Samuel differences of {ideal.generators} did not stabilize below {stabilization_cap}")
    raise NoStabilizationError(ErrorMessages.NO_STABILIZATION.value.format(order=n, cap=stabilization_cap))


def samuel_multiplicity(ideal: MonomialIdeal) -> int:
    """
    Samuel multiplicity ``e(I) = n! * lim H_I(k) / k^n``.

    The n-th forward difference of ``H_I`` is evaluated at ``k = n + 1`` and ``k + 1``;
    when the two disagree k is doubled, up to ``COCONE_STABILIZATION_CAP``. The unit
    ideal has multiplicity 0. Results are memoized per ideal and cap settings, so the
    products shared between polarizations are counted once.

    Args:
        ideal (MonomialIdeal): An m-primary ideal.

    Returns:
        int: The stabilized difference.

    Raises:
        NotMPrimaryError: If the ideal is not m-primary.
        NoStabilizationError: If no two consecutive differences agree below the cap.
    """
    _require_m_primary(ideal)
    if ideal.is_unit:
        return 0
    return _stable_difference(ideal, config_env.STABILIZATION_CAP, config_env.BFS_CAP)


def _positive_integer_result(value: Fraction) -> int:
    if value.denominator != 1:
        logger.error(f"Mixed multiplicity is not an integer: {value}")
        raise NonIntegerResultError(ErrorMessages.NON_INTEGER_RESULT.value.format(value=value))
    if value <= 0:
        logger.error(f"Mixed multiplicity is not positive: {value}")
        raise NonPositiveResultError(ErrorMessages.NON_POSITIVE_RESULT.value.format(value=value))
    return int(value)


def _check_ideals(ideals: Sequence[MonomialIdeal]) -> int:
    if not ideals:
        raise ArityError(ErrorMessages.ARITY.value.format(expected="n", actual=0))
    dimension = ideals[0].dimension
    if len(ideals) != dimension:
        raise ArityError(ErrorMessages.ARITY.value.format(expected=dimension, actual=len(ideals)))
    _same_semigroup(ideals)
    for ideal in ideals:
        _require_m_primary(ideal)
        if ideal.is_unit:
            raise IdealError(ErrorMessages.UNIT_IDEAL_MIXED.value)
    return dimension


def mixed_multiplicity(ideals: Sequence[MonomialIdeal]) -> int:
    """
    Mixed multiplicity ``e(I1, ..., In)`` by polarization of the Samuel multiplicity.

    Args:
        ideals (Sequence[MonomialIdeal]): Exactly n proper m-primary ideals of one semigroup.

    Returns:
        int: ``(1/n!) * sum over nonempty S of (-1)^(n-|S|) e(product of Ii, i in S)``.

    Raises:
        ArityError: If the number of ideals differs from n.
        SemigroupMismatchError: If the ideals live in different semigroups.
        NotMPrimaryError: If an ideal is not m-primary.
        IdealError: If an ideal is the unit ideal.
        NonIntegerResultError: If the polarization is not an integer.
        NonPositiveResultError: If the polarization is not positive.
    """
    dimension = _check_ideals(ideals)
    canonical = canonical_subsets(ideals)
    cache: dict[tuple[int, ...], int] = {}

    def term(subset: tuple[int, ...]) -> int:
        key = canonical(subset)
        if key not in cache:
            cache[key] = samuel_multiplicity(product_of([ideals[i] for i in key]))
        return cache[key]

    return _positive_integer_result(polarize(term, dimension) / factorial(dimension))


def multiplicity_polynomial_fit(ideals: Sequence[MonomialIdeal], grid_radius: int) -> PolynomialFit:
    """
    Fit ``(k1, ..., km) -> e(I1^k1 * ... * Im^km)`` as a homogeneous polynomial of degree n.

    Raises:
        ValueError: If ``grid_radius`` is below n.
        FitMismatchError: If a held-out multiplicity disagrees with the fit.
    """
    if not ideals:
        raise ArityError(ErrorMessages.ARITY.value.format(expected="at least 1", actual=0))
    semigroup = _same_semigroup(ideals)
    for ideal in ideals:
        _require_m_primary(ideal)
    dimension = semigroup.dimension
    if grid_radius < dimension:
        raise ValueError(f"Grid radius {grid_radius} must be at least the dimension {dimension}")
    def sampler(point: tuple[int, ...]) -> Fraction:
        return Fraction(samuel_multiplicity(product_of([ideal_power(ideal, k) for ideal, k in zip(ideals, point)])))

    return fit_homogeneous_polynomial(sampler, len(ideals), dimension, grid_radius)


def mixed_multiplicity_by_fit(ideals: Sequence[MonomialIdeal]) -> int:
    """
    The coefficient of ``k1 * ... * kn`` in ``e(I1^k1 * ... * In^kn)``, divided by n!.
    """
    dimension = _check_ideals(ideals)
    fit = multiplicity_polynomial_fit(ideals, dimension)
    return _positive_integer_result(fit.coefficient((1,) * dimension) / factorial(dimension))


def check_af_multiplicity(ideals: Sequence[MonomialIdeal]) -> InequalityCheck:
    """
    Evaluate ``e(I1, I1, I3, ...) * e(I2, I2, I3, ...) >= e(I1, I2, I3, ...)^2``.

    Raises:
        ArityError: If n < 2 or the number of ideals differs from n.
    """
    dimension = _check_ideals(ideals)
    if dimension < 2:
        raise ArityError(ErrorMessages.ARITY.value.format(expected="at least 2", actual=dimension))
    first, second, *rest = ideals
    lhs = mixed_multiplicity([first, first, *rest]) * mixed_multiplicity([second, second, *rest])
    rhs = mixed_multiplicity(ideals) ** 2
    return InequalityCheck(Fraction(lhs), Fraction(rhs), lhs >= rhs)


def _minimal_lattice_points(semigroup: ToricSemigroup, region: ConvexRegion, extra_level=0) -> tuple[IntVector, ...]:
    """
    Minimal elements of ``S ∩ region`` for a cobounded region.

    Past ``T + max xi(h)`` over the Hilbert basis every lattice point of the region
    is ``h`` plus another lattice point of the region beyond T, so the search stops there.
    """
    certificate = cobounded_certificate(region)
    basis_level = max(dot(semigroup.cone.xi, h) for h in semigroup.hilbert_basis)
    bound = certificate + max(basis_level, extra_level)
    inside = [point for point in semigroup.shell(bound) if region.contains(point)]
    return _minimal(semigroup, inside)


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """
    The integral closure, whose exponents are the lattice points of the Newton region.

    Args:
        ideal (MonomialIdeal): An m-primary ideal.

    Returns:
        MonomialIdeal: The closure; it contains the ideal and has the same Newton region.

    Raises:
        NotMPrimaryError: If the ideal is not m-primary.
    """
    _require_m_primary(ideal)
    semigroup = ideal.semigroup
    generator_level = max(dot(semigroup.cone.xi, g) for g in ideal.generators)
    generators = _minimal_lattice_points(semigroup, ideal.newton, generator_level)
    logger.debug(f"Integral closure of {ideal.generators}: {generators}")
    return MonomialIdeal(semigroup, generators)


def is_integrally_closed(ideal: MonomialIdeal) -> bool:
    return integral_closure(ideal).generators == ideal.generators


def ideal_of_region(semigroup: ToricSemigroup, region: ConvexRegion) -> MonomialIdeal:
    """
    The ideal ``I(Gamma)`` generated by the monomials with exponents in a cobounded region.

    Raises:
        ConeMismatchError: If the region lives in another cone.
        NotCoboundedError: If the region is not cobounded.
    """
    if region.cone != semigroup.cone:
        raise ConeMismatchError(ErrorMessages.CONE_MISMATCH.value)
    return MonomialIdeal(semigroup, _minimal_lattice_points(semigroup, region))


def closed_product(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """
    The integral closure of ``I * J``.
    """
    return integral_closure(ideal_product(first, second))


def ideals_equivalent(first: MonomialIdeal, second: MonomialIdeal) -> bool:
    """
    Decide ``I ~ J``, i.e. ``I M = J M`` for some ideal M.

    In the domain ``k[S]`` two m-primary ideals are equivalent iff they have the same
    integral closure, that is the same Newton region.

    Raises:
        SemigroupMismatchError: If the ideals live in different semigroups.
        NotMPrimaryError: If either ideal is not m-primary.
    """
    _same_semigroup([first, second])
    _require_m_primary(first)
    _require_m_primary(second)
    return first.newton.halfspaces == second.newton.halfspaces
