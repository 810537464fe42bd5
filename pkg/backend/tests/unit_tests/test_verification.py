from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.geometry import mixed_covolume as mixed_covolume_module
from src.models.schemas.verification import InstanceSpec, Relation, VerificationReport
from src.repository.problem_files import ProblemInstance
from src.utilities.messages.exceptions.errors import ConeError, GenerationFailedError
from src.verification import checks
from src.verification.checks import (
    run_batch,
    run_check,
    verify_additivity,
    verify_af,
    verify_bk,
    verify_closure,
    verify_polynomiality,
    verify_staircase,
)
from src.verification.instances import instance_problem_file, random_instance


def small_spec(seed: int, dimension: int = 2, **options) -> InstanceSpec:
    options.setdefault("coordinate_bound", 2)
    return InstanceSpec(seed=seed, dimension=dimension, **options)


def test_instance_spec_defaults() -> None:
    spec = InstanceSpec(seed=42, dimension=3)
    assert (spec.ray_count, spec.ideal_count, spec.coordinate_bound) == (4, 4, 6)
    with pytest.raises(ValidationError):
        InstanceSpec(seed=1, dimension=5)
    with pytest.raises(ValidationError):
        InstanceSpec(seed=-1, dimension=2)
    with pytest.raises(ValidationError):
        InstanceSpec(seed=1, dimension=3, ray_count=2)


def test_random_instance_is_deterministic() -> None:
    spec = InstanceSpec(seed=42, dimension=2)
    cone, ideals = random_instance(spec)
    again_cone, again_ideals = random_instance(spec)
    assert cone == again_cone
    assert [ideal.generators for ideal in ideals] == [ideal.generators for ideal in again_ideals]
    assert len(ideals) == 3


@pytest.mark.parametrize("dimension", [2, 3, 4])
def test_random_ideals_are_m_primary(dimension: int) -> None:
    cone, ideals = random_instance(small_spec(7, dimension, coordinate_bound=1, generator_count=1))
    assert all(cone.xi_value(ray) > 0 for ray in cone.rays)
    assert all(ideal.m_primary for ideal in ideals)
    assert all(ideal.semigroup.cone == cone for ideal in ideals)


def test_generation_failure_reports_seed(mocker) -> None:
    mocker.patch("src.verification.instances.cone_from_rays", side_effect=ConeError("degenerate"))
    with pytest.raises(GenerationFailedError) as info:
        random_instance(small_spec(11))
    assert info.value.seed == 11


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_bk_holds(seed: int) -> None:
    report = verify_bk(small_spec(seed))
    assert report.holds
    values = report.values()
    assert values["e_mixed"] == values["n!_V_mixed"]
    assert values["e_mixed"].denominator == 1


@pytest.mark.parametrize(
    "spec",
    [small_spec(1, 3, coordinate_bound=2), small_spec(0, 4, coordinate_bound=1, generator_count=3)],
)
def test_bk_holds_in_higher_dimensions(spec: InstanceSpec) -> None:
    report = verify_bk(spec)
    assert report.holds
    values = report.values()
    assert values["e_mixed"] == values["n!_V_mixed"] > 0
    assert values["e_diagonal"] == values["n!_covol_diagonal"]


@pytest.mark.parametrize("seed", [0, 1])
def test_af_holds(seed: int) -> None:
    report = verify_af(small_spec(seed))
    assert report.holds
    values = report.values()
    assert values["equal_case_lhs"] == values["equal_case_rhs"]
    assert values["mult_equal_case_lhs"] == values["mult_equal_case_rhs"]
    assert values["mult_lhs"] >= values["mult_rhs"] > 0


@pytest.mark.parametrize(
    "spec",
    [
        small_spec(3),
        small_spec(8),
        small_spec(13, coordinate_bound=3),
        small_spec(4, 3, coordinate_bound=1, generator_count=2),
    ],
)
def test_additivity_holds(spec: InstanceSpec) -> None:
    report = verify_additivity(spec)
    assert report.holds
    values = report.values()
    assert values["e_product"] == values["e_sum"]
    assert values["V_region_sum"] == values["V_sum"]


def test_additivity_needs_extra_ideal() -> None:
    report = run_check("additivity", small_spec(3, ideal_count=2))
    assert not report.holds
    assert report.error.startswith("ArityError")


def test_polynomiality_holds() -> None:
    report = verify_polynomiality(small_spec(5))
    assert report.holds
    assert "covol_fit[1,1]" in report.quantities


def test_polynomial_fits_use_grid_past_degree(mocker) -> None:
    covol_fit = mocker.spy(checks, "covol_polynomial_fit")
    mult_fit = mocker.spy(checks, "multiplicity_polynomial_fit")
    interpolation = mocker.spy(mixed_covolume_module, "fit_homogeneous_polynomial")
    assert verify_polynomiality(small_spec(6)).holds
    assert covol_fit.call_args.args[1] == 3
    assert mult_fit.call_args.args[1] == 3
    assert interpolation.call_args.args[3] == 3


@pytest.mark.parametrize("seed", [0, 4])
def test_closure_laws_hold(seed: int) -> None:
    assert verify_closure(small_spec(seed)).holds


@pytest.mark.parametrize(
    "spec", [small_spec(0), small_spec(1), small_spec(2, 3, coordinate_bound=1, generator_count=1)]
)
def test_staircase_matches_box_count(spec: InstanceSpec) -> None:
    report = verify_staircase(spec)
    assert report.holds
    assert len(report.relations) == spec.ideal_count


def test_report_holds_is_recomputable() -> None:
    report = verify_bk(small_spec(0))
    restored = VerificationReport.model_validate_json(report.model_dump_json())
    assert restored.recompute_holds() == report.holds
    tampered = restored.model_copy(update={"quantities": {**restored.quantities, "e_mixed": "1/3"}})
    assert not tampered.recompute_holds()


def test_relation_evaluate() -> None:
    values = {"a": Fraction(1, 2), "b": Fraction(1, 4)}
    assert Relation(lhs="a", op=">=", rhs="b").evaluate(values)
    assert not Relation(lhs="a", op="==", rhs="b").evaluate(values)


def test_run_batch_keeps_seed_order() -> None:
    specs = [small_spec(seed) for seed in (5, 3, 4)]
    reports = run_batch("staircase", specs)
    assert [report.instance.seed for report in reports] == [5, 3, 4]
    assert all(report.holds for report in reports)
    with pytest.raises(KeyError):
        run_batch("unknown", specs)


def test_problem_file_replays_instance() -> None:
    spec = small_spec(9)
    problem = instance_problem_file(spec)
    _, ideals = random_instance(spec)
    instance = ProblemInstance(problem)
    assert instance.ideal("I1") == ideals[0]
    assert instance.region("G2") == ideals[1].newton
