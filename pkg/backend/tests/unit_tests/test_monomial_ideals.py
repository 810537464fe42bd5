from fractions import Fraction

import pytest

from src.algebra import monomial_ideals
from src.algebra.monomial_ideals import (
    HilbertSamuelTable,
    brute_force_colength,
    check_af_multiplicity,
    closed_product,
    colength,
    hilbert_basis,
    hilbert_samuel,
    ideal_of_region,
    ideal_power,
    ideal_product,
    ideals_equivalent,
    integral_closure,
    is_integrally_closed,
    membership,
    mixed_multiplicity,
    mixed_multiplicity_by_fit,
    monomial_ideal,
    multiplicity_polynomial_fit,
    samuel_multiplicity,
    staircase,
    toric_semigroup,
    unit_ideal,
)
from src.config.settings.base import config_env
from src.geometry.cones_regions import cone_from_rays, covolume, region_from_generators, region_sum
from src.geometry.exact_geometry import lattice_points
from src.geometry.mixed_covolume import mixed_covolume
from src.utilities.messages.exceptions.errors import (
    AlphaOutsideSemigroupError,
    ArityError,
    IdealError,
    NonPositiveResultError,
    NotMPrimaryError,
    SemigroupMismatchError,
    StaircaseCapExceededError,
)


def test_hilbert_basis_of_quadrant(quadrant) -> None:
    assert hilbert_basis(quadrant) == [(0, 1), (1, 0)]


def test_hilbert_basis_of_non_unimodular_cone() -> None:
    assert hilbert_basis(cone_from_rays([[1, 0], [1, 2]])) == [(1, 0), (1, 1), (1, 2)]
    assert hilbert_basis(cone_from_rays([[0, 1], [3, -1]])) == [(0, 1), (1, 0), (3, -1)]


def test_hilbert_basis_of_octant() -> None:
    octant = cone_from_rays([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert hilbert_basis(octant) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_semigroup_completeness() -> None:
    semigroup = toric_semigroup(cone_from_rays([[1, 0], [1, 3], [1, 1]]))
    assert semigroup.check_completeness()
    three_dimensional = toric_semigroup(cone_from_rays([[1, 0, 0], [0, 1, 0], [1, 1, 2]]))
    assert (1, 1, 1) in three_dimensional.hilbert_basis
    assert three_dimensional.check_completeness(4)


def test_monomial_ideal_is_minimal(quadrant_semigroup) -> None:
    ideal = monomial_ideal(quadrant_semigroup, [(2, 0), (0, 1), (3, 1), (2, 0)])
    assert ideal.generators == ((0, 1), (2, 0))


def test_monomial_ideal_validation(quadrant_semigroup) -> None:
    with pytest.raises(IdealError):
        monomial_ideal(quadrant_semigroup, [])
    with pytest.raises(AlphaOutsideSemigroupError):
        monomial_ideal(quadrant_semigroup, [(-1, 2)])
    with pytest.raises(AlphaOutsideSemigroupError):
        monomial_ideal(quadrant_semigroup, [(Fraction(1, 2), 1)])


def test_membership(maximal_ideal, x_squared_y) -> None:
    assert membership((3, 0), maximal_ideal)
    assert not membership((1, 0), x_squared_y)
    assert all(membership(g, x_squared_y) for g in x_squared_y.generators)
    with pytest.raises(AlphaOutsideSemigroupError):
        membership((-1, 0), maximal_ideal)


def test_golden_colengths(maximal_ideal, x_squared_y) -> None:
    assert colength(maximal_ideal) == 1
    assert staircase(x_squared_y) == [(0, 0), (1, 0)]
    assert colength(x_squared_y) == 2
    assert brute_force_colength(x_squared_y) == 2


def test_not_m_primary(quadrant_semigroup) -> None:
    ideal = monomial_ideal(quadrant_semigroup, [(1, 0)])
    assert not ideal.m_primary
    with pytest.raises(NotMPrimaryError) as info:
        colength(ideal)
    assert info.value.ray == (0, 1)


def test_products_and_powers(quadrant_semigroup, maximal_ideal, x_squared_y) -> None:
    assert ideal_power(maximal_ideal, 2).generators == ((0, 2), (1, 1), (2, 0))
    assert ideal_power(maximal_ideal, 0) == unit_ideal(quadrant_semigroup)
    assert ideal_product(maximal_ideal, unit_ideal(quadrant_semigroup)) == maximal_ideal
    product = ideal_product(maximal_ideal, x_squared_y)
    assert product.newton == region_sum(maximal_ideal.newton, x_squared_y.newton)
    with pytest.raises(IdealError):
        ideal_power(maximal_ideal, -1)


def test_semigroup_mismatch(maximal_ideal) -> None:
    other = toric_semigroup(cone_from_rays([[1, 0], [1, 2]]))
    with pytest.raises(SemigroupMismatchError):
        ideal_product(maximal_ideal, monomial_ideal(other, [(1, 0), (1, 2)]))


def test_hilbert_samuel_function(maximal_ideal, x_squared_y) -> None:
    table = hilbert_samuel(maximal_ideal, 4)
    assert table.values() == [1, 3, 6, 10]
    assert table.finite_difference(2) == [1, 1]
    assert hilbert_samuel(x_squared_y, 4).values() == [2, 6, 12, 20]
    with pytest.raises(ValueError):
        hilbert_samuel(maximal_ideal, 0)
    with pytest.raises(ValueError):
        HilbertSamuelTable(((1, 3), (2, 1)))


def test_golden_multiplicities(quadrant_semigroup, maximal_ideal, x_squared_y) -> None:
    assert samuel_multiplicity(maximal_ideal) == 1
    assert samuel_multiplicity(x_squared_y) == 2
    assert samuel_multiplicity(ideal_power(x_squared_y, 2)) == 8
    assert samuel_multiplicity(unit_ideal(quadrant_semigroup)) == 0
    assert mixed_multiplicity([maximal_ideal, x_squared_y]) == 1
    assert mixed_multiplicity([x_squared_y, maximal_ideal]) == 1
    assert mixed_multiplicity([x_squared_y, x_squared_y]) == 2


def test_mixed_multiplicity_arity(maximal_ideal) -> None:
    with pytest.raises(ArityError):
        mixed_multiplicity([maximal_ideal])


def test_local_bernstein_kushnirenko(maximal_ideal, x_squared_y) -> None:
    ideals = [maximal_ideal, x_squared_y]
    regions = [ideal.newton for ideal in ideals]
    assert mixed_multiplicity(ideals) == 2 * mixed_covolume(regions)
    assert samuel_multiplicity(x_squared_y) == 2 * covolume(x_squared_y.newton)


def test_multiplicity_polynomial(maximal_ideal, x_squared_y) -> None:
    fit = multiplicity_polynomial_fit([maximal_ideal, x_squared_y], 2)
    assert fit.coefficients == {(2, 0): 1, (1, 1): 2, (0, 2): 2}
    assert mixed_multiplicity_by_fit([maximal_ideal, x_squared_y]) == 1


def test_af_multiplicity(maximal_ideal, x_squared_y) -> None:
    check = check_af_multiplicity([maximal_ideal, x_squared_y])
    assert (check.lhs, check.rhs, check.holds) == (2, 1, True)


def test_integral_closure(quadrant_semigroup, maximal_ideal) -> None:
    ideal = monomial_ideal(quadrant_semigroup, [(2, 0), (0, 2)])
    closure = integral_closure(ideal)
    assert closure.generators == ((0, 2), (1, 1), (2, 0))
    assert integral_closure(closure) == closure
    assert is_integrally_closed(maximal_ideal)
    assert not is_integrally_closed(ideal)
    assert samuel_multiplicity(closure) == samuel_multiplicity(ideal) == 4


def test_integral_closure_in_non_unimodular_cone() -> None:
    semigroup = toric_semigroup(cone_from_rays([[1, 0], [1, 2]]))
    ideal = monomial_ideal(semigroup, [(2, 0), (2, 4)])
    closure = integral_closure(ideal)
    assert closure.generators == ((2, 0), (2, 1), (2, 2), (2, 3), (2, 4))
    assert ideals_equivalent(ideal, closure)


def test_equivalence(quadrant_semigroup, maximal_ideal, x_squared_y) -> None:
    square = monomial_ideal(quadrant_semigroup, [(2, 0), (0, 2)])
    full_square = monomial_ideal(quadrant_semigroup, [(2, 0), (1, 1), (0, 2)])
    assert ideals_equivalent(square, full_square)
    assert ideals_equivalent(square, integral_closure(square))
    assert not ideals_equivalent(maximal_ideal, x_squared_y)


def test_ideal_of_region(quadrant, quadrant_semigroup) -> None:
    region = region_from_generators(quadrant, [(2, 0), (0, 2)])
    assert ideal_of_region(quadrant_semigroup, region).generators == ((0, 2), (1, 1), (2, 0))
    half = region_from_generators(quadrant, [(Fraction(3, 2), 0), (0, Fraction(3, 2))])
    assert ideal_of_region(quadrant_semigroup, half).generators == ((0, 2), (1, 1), (2, 0))


def test_closed_product(quadrant_semigroup) -> None:
    square = monomial_ideal(quadrant_semigroup, [(2, 0), (0, 2)])
    result = closed_product(square, square)
    assert result.generators == ((0, 4), (1, 3), (2, 2), (3, 1), (4, 0))
    assert is_integrally_closed(result)


@pytest.fixture
def skew_semigroup():
    return toric_semigroup(cone_from_rays([[1, 0, 0], [0, 1, 0], [1, 1, 2]]))


def test_m_primary_matches_newton_region(quadrant_semigroup, skew_semigroup) -> None:
    ideals = [
        monomial_ideal(quadrant_semigroup, [(1, 0)]),
        monomial_ideal(quadrant_semigroup, [(3, 0), (1, 1), (0, 2)]),
        monomial_ideal(skew_semigroup, [(2, 0, 0), (0, 1, 0), (1, 1, 1)]),
        monomial_ideal(skew_semigroup, [(2, 0, 0), (0, 1, 0), (2, 2, 4), (1, 1, 1)]),
    ]
    assert [ideal.m_primary for ideal in ideals] == [False, True, False, True]
    assert all(ideal.m_primary == (ideal.newton.cobounded_T is not None) for ideal in ideals)
    assert ideals[2].uncovered_ray == (1, 1, 2)


def test_staircase_agrees_with_generator_scan(skew_semigroup) -> None:
    ideal = monomial_ideal(skew_semigroup, [(2, 0, 0), (0, 3, 0), (2, 2, 4), (1, 1, 1), (1, 2, 0)])
    cone = skew_semigroup.cone
    box = lattice_points(cone.truncation(ideal.dimension * ideal.newton.cobounded_T))
    assert staircase(ideal) == sorted(point for point in box if not ideal.contains(point))
    assert colength(ideal) == brute_force_colength(ideal)


def test_hilbert_samuel_values_match_power_colengths() -> None:
    semigroup = toric_semigroup(cone_from_rays([[1, 0], [1, 2]]))
    ideal = monomial_ideal(semigroup, [(2, 0), (1, 1), (2, 4)])
    expected = [brute_force_colength(ideal_power(ideal, k)) for k in range(1, 5)]
    assert hilbert_samuel(ideal, 4).values() == expected
    assert [colength(ideal_power(ideal, k)) for k in range(1, 5)] == expected


def test_three_dimensional_mixed_multiplicity(skew_semigroup) -> None:
    ideals = [
        monomial_ideal(skew_semigroup, [(1, 0, 0), (0, 1, 0), (1, 1, 2)]),
        monomial_ideal(skew_semigroup, [(2, 0, 0), (0, 1, 0), (1, 1, 2), (1, 1, 1)]),
        monomial_ideal(skew_semigroup, [(1, 0, 0), (0, 2, 0), (2, 2, 4)]),
    ]
    assert samuel_multiplicity(ideals[0]) == 6 * covolume(ideals[0].newton)
    assert mixed_multiplicity(ideals) == 6 * mixed_covolume([ideal.newton for ideal in ideals])


def test_multiplicities_are_memoized(mocker, skew_semigroup) -> None:
    ideal = monomial_ideal(skew_semigroup, [(3, 0, 0), (0, 1, 0), (1, 1, 2), (1, 1, 1)])
    monomial_ideals._stable_difference.cache_clear()
    spy = mocker.spy(monomial_ideals, "_explore_orders")
    first = samuel_multiplicity(ideal)
    explorations = spy.call_count
    assert samuel_multiplicity(ideal) == first
    assert explorations >= 1
    assert spy.call_count == explorations


def test_staircase_cap(mocker, quadrant_semigroup) -> None:
    mocker.patch.object(config_env, "BFS_CAP", 3)
    with pytest.raises(StaircaseCapExceededError):
        colength(monomial_ideal(quadrant_semigroup, [(3, 0), (0, 3)]))


def test_mixed_multiplicity_rejects_unit_ideal(quadrant_semigroup, maximal_ideal) -> None:
    with pytest.raises(IdealError):
        mixed_multiplicity([maximal_ideal, unit_ideal(quadrant_semigroup)])
    with pytest.raises(IdealError):
        check_af_multiplicity([unit_ideal(quadrant_semigroup), maximal_ideal])


def test_mixed_multiplicity_must_be_positive(mocker, maximal_ideal, x_squared_y) -> None:
    mocker.patch("src.algebra.monomial_ideals.samuel_multiplicity", return_value=0)
    with pytest.raises(NonPositiveResultError):
        mixed_multiplicity([maximal_ideal, x_squared_y])
