"""
Mixed covolumes of C-convex regions.

``covol(l1 * G1 + ... + lm * Gm)`` is a homogeneous polynomial of degree n in the
nonnegative coefficients ``li``. Its polarization is the mixed covolume
``V(G1, ..., Gn)``, normalized so that ``V(G, ..., G) = covol(G)`` and the coefficient of
``l1 * ... * ln`` in the polynomial is ``n! * V``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import factorial, prod
from typing import Callable, Sequence

import sympy

from src.config.settings.base import config_env
from src.config.settings.logger_config import logger
from src.geometry.cones_regions import ConvexRegion, covolume, region_combination, same_cone
from src.geometry.exact_geometry import matrix_rank
from src.utilities.constants import ErrorMessages
from src.utilities.messages.exceptions.errors import ArityError, FitMismatchError

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class PolynomialFit:
    """
    A homogeneous polynomial with exact rational coefficients.

    Attributes:
        variables (int): Number of variables m.
        degree (int): Total degree of every monomial.
        coefficients (dict[Exponent, Fraction]): Nonzero coefficients keyed by exponent vector.
    """

    variables: int
    degree: int
    coefficients: dict[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for exponent in self.coefficients:
            if len(exponent) != self.variables or sum(exponent) != self.degree:
                raise ValueError(f"Monomial {exponent} is not of degree {self.degree} in {self.variables} variables")

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.coefficients.get(tuple(exponent), Fraction(0))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.variables:
            raise ArityError(ErrorMessages.ARITY.value.format(expected=self.variables, actual=len(point)))
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for exponent, c in self.coefficients.items():
            total += c * prod((v**e for v, e in zip(values, exponent)), start=Fraction(1))
        return total


@dataclass(frozen=True)
class InequalityCheck:
    """
    Both sides of an inequality ``lhs >= rhs`` evaluated exactly.
    """

    lhs: Fraction
    rhs: Fraction
    holds: bool


def homogeneous_exponents(variables: int, degree: int) -> list[Exponent]:
    """
    All exponent vectors with ``variables`` entries summing to ``degree``, in lexicographic order.
    """
    exponents = []
    for chosen in combinations_with_replacement(range(variables), degree):
        exponents.append(tuple(chosen.count(i) for i in range(variables)))
    return sorted(exponents)


def _monomial_row(point: Exponent, exponents: Sequence[Exponent]) -> list[int]:
    return [prod((v**e for v, e in zip(point, exponent)), start=1) for exponent in exponents]


def fit_homogeneous_polynomial(
    sampler: Callable[[Exponent], Fraction], variables: int, degree: int, grid_radius: int
) -> PolynomialFit:
    """
    Interpolate a function known to be a homogeneous polynomial on a nonnegative integer grid.

    Grid points of ``{0, ..., grid_radius}^m`` are taken in order of increasing total
    degree and kept whenever their monomial row raises the rank, until the system is
    square and invertible. The exact solution is then checked against the sampler on
    ``COCONE_FIT_HOLDOUT`` unused grid points, the farthest ones first.

    Args:
        sampler (Callable[[Exponent], Fraction]): The function to fit, evaluated on integer tuples.
        variables (int): Number of arguments m.
        degree (int): Expected total degree.
        grid_radius (int): Largest coordinate used; must be at least ``degree``.

    Returns:
        PolynomialFit: The unique interpolating polynomial.

    Raises:
        ValueError: If the grid is too small to determine the polynomial.
        FitMismatchError: If a held-out sample disagrees with the fit.
    """
    if grid_radius < degree:
        raise ValueError(f"Grid radius {grid_radius} is below the degree {degree}")
    exponents = homogeneous_exponents(variables, degree)
    grid = sorted(product(range(grid_radius + 1), repeat=variables), key=lambda p: (sum(p), p))

    chosen: list[Exponent] = []
    rows: list[list[int]] = []
    for point in grid:
        row = _monomial_row(point, exponents)
        if not any(row):
            continue
        if matrix_rank(rows + [row]) > len(rows):
            chosen.append(point)
            rows.append(row)
        if len(rows) == len(exponents):
            break

    samples = [Fraction(sampler(point)) for point in chosen]
    rhs = sympy.Matrix([sympy.Rational(s.numerator, s.denominator) for s in samples])
    solution = sympy.Matrix(rows).LUsolve(rhs)
    coefficients = {}
    for exponent, value in zip(exponents, solution):
        value = sympy.Rational(value)
        if value != 0:
            coefficients[exponent] = Fraction(int(value.p), int(value.q))
    fit = PolynomialFit(variables, degree, coefficients)

    used = set(chosen)
    held_out = [point for point in reversed(grid) if point not in used][: config_env.FIT_HOLDOUT]
    for point in held_out:
        sampled = Fraction(sampler(point))
        fitted = fit.evaluate(point)
        if fitted != sampled:
            logger.error(f"Polynomial fit failed at {point}: fitted {fitted}, sampled {sampled}")
            raise FitMismatchError(
                ErrorMessages.FIT_MISMATCH.value.format(fitted=fitted, point=point, sampled=sampled)
            )
    logger.debug(f"Fitted degree {degree} polynomial in {variables} variables, {len(held_out)} held-out checks")
    return fit


def _check_arity(regions: Sequence[ConvexRegion]) -> int:
    if not regions:
        raise ArityError(ErrorMessages.ARITY.value.format(expected="n", actual=0))
    dimension = regions[0].dimension
    if len(regions) != dimension:
        raise ArityError(ErrorMessages.ARITY.value.format(expected=dimension, actual=len(regions)))
    same_cone(regions)
    return dimension


def polarize(terms: Callable[[tuple[int, ...]], Fraction], count: int) -> Fraction:
    """
    The polarization sum ``sum over nonempty S of (-1)^(count - |S|) * terms(S)``.

    ``terms`` receives the sorted index tuple of S; the caller decides what the subset
    stands for (a Minkowski sum of regions, a product of ideals).
    """
    total = Fraction(0)
    for size in range(1, count + 1):
        sign = -1 if (count - size) % 2 else 1
        for subset in combinations(range(count), size):
            total += sign * Fraction(terms(subset))
    return total


def canonical_subsets(items: Sequence) -> Callable[[tuple[int, ...]], tuple[int, ...]]:
    # repeated arguments map to their first position, so equal multisets share one evaluation
    first = {}
    labels = [first.setdefault(item, index) for index, item in enumerate(items)]
    return lambda subset: tuple(sorted(labels[i] for i in subset))


def mixed_covolume(regions: Sequence[ConvexRegion]) -> Fraction:
    """
    Mixed covolume ``V(G1, ..., Gn)`` by polarization of the covolume.

    Args:
        regions (Sequence[ConvexRegion]): Exactly n cobounded regions of one cone.

    Returns:
        Fraction: ``(1/n!) * sum over nonempty S of (-1)^(n-|S|) covol(sum of Gi, i in S)``.

    Raises:
        ArityError: If the number of regions differs from the dimension.
        ConeMismatchError: If the regions live in different cones.
        NotCoboundedError: If some region is not cobounded.
    """
    dimension = _check_arity(regions)
    canonical = canonical_subsets(regions)
    cache: dict[tuple[int, ...], Fraction] = {}

    def term(subset: tuple[int, ...]) -> Fraction:
        key = canonical(subset)
        if key not in cache:
            cache[key] = covolume(region_combination([1] * len(key), [regions[i] for i in key]))
        return cache[key]

    result = polarize(term, dimension) / factorial(dimension)
    logger.debug(f"Mixed covolume from {len(cache)} distinct covolumes: {result}")
    return result


def covol_polynomial_fit(regions: Sequence[ConvexRegion], grid_radius: int) -> PolynomialFit:
    """
    Fit ``(l1, ..., lm) -> covol(l1 * G1 + ... + lm * Gm)`` as a homogeneous polynomial of degree n.

    Raises:
        ValueError: If ``grid_radius`` is below n.
        FitMismatchError: If the covolume disagrees with the fit on a held-out point.
    """
    if not regions:
        raise ArityError(ErrorMessages.ARITY.value.format(expected="at least 1", actual=0))
    same_cone(regions)
    dimension = regions[0].dimension
    if grid_radius < dimension:
        raise ValueError(f"Grid radius {grid_radius} must be at least the dimension {dimension}")

    def sampler(point: Exponent) -> Fraction:
        return covolume(region_combination(point, regions))

    return fit_homogeneous_polynomial(sampler, len(regions), dimension, grid_radius)


def check_af_covolume(regions: Sequence[ConvexRegion]) -> InequalityCheck:
    """
    Evaluate ``V(G1, G1, G3, ...) * V(G2, G2, G3, ...) >= V(G1, G2, G3, ...)^2``.

    Args:
        regions (Sequence[ConvexRegion]): Exactly n >= 2 cobounded regions of one cone.

    Returns:
        InequalityCheck: Exact sides and whether the inequality holds.

    Raises:
        ArityError: If n < 2 or the number of regions differs from n.
    """
    dimension = _check_arity(regions)
    if dimension < 2:
        raise ArityError(ErrorMessages.ARITY.value.format(expected="at least 2", actual=dimension))
    first, second, *rest = regions
    lhs = mixed_covolume([first, first, *rest]) * mixed_covolume([second, second, *rest])
    rhs = mixed_covolume(regions) ** 2
    return InequalityCheck(lhs, rhs, lhs >= rhs)
