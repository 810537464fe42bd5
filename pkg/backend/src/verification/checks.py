"""
Exact checks of the covolume and multiplicity identities on generated instances.

Each check returns a ``VerificationReport`` whose ``holds`` flag is recomputable from
its quantities and relations. Multiplicities are computed from staircase counts and
covolumes from polytope volumes, so an identity between them compares two independent
pipelines.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from src.algebra.monomial_ideals import (
    brute_force_colength,
    check_af_multiplicity,
    colength,
    ideal_product,
    ideals_equivalent,
    integral_closure,
    membership,
    mixed_multiplicity,
    multiplicity_polynomial_fit,
    samuel_multiplicity,
)
from src.config.settings.logger_config import logger
from src.geometry.cones_regions import covolume, region_sum
from src.geometry.mixed_covolume import check_af_covolume, covol_polynomial_fit, homogeneous_exponents, mixed_covolume
from src.models.schemas.verification import InstanceSpec, Relation, VerificationReport
from src.utilities.constants import ErrorMessages
from src.utilities.messages.exceptions.errors import ArityError, CoconeError
from src.verification.instances import random_instance

TRUE = "true"


class _Recorder:
    """
    Collects named quantities and relations for one report.
    """

    def __init__(self, check_name: str, spec: InstanceSpec):
        self.check_name = check_name
        self.spec = spec
        self.quantities: dict[str, Fraction] = {}
        self.relations: list[Relation] = []
        self.started = time.perf_counter()

    def equal(self, lhs: str, lhs_value, rhs: str, rhs_value) -> None:
        self._relate(lhs, lhs_value, "==", rhs, rhs_value)

    def at_least(self, lhs: str, lhs_value, rhs: str, rhs_value) -> None:
        self._relate(lhs, lhs_value, ">=", rhs, rhs_value)

    def true(self, name: str, value: bool) -> None:
        self.quantities[TRUE] = Fraction(1)
        self._relate(name, int(value), "==", TRUE, 1)

    def _relate(self, lhs: str, lhs_value, op: str, rhs: str, rhs_value) -> None:
        self.quantities[lhs] = Fraction(lhs_value)
        self.quantities[rhs] = Fraction(rhs_value)
        self.relations.append(Relation(lhs=lhs, op=op, rhs=rhs))

    def report(self) -> VerificationReport:
        holds = all(relation.evaluate(self.quantities) for relation in self.relations)
        report = VerificationReport(
            check_name=self.check_name,
            instance=self.spec,
            quantities=self.quantities,
            relations=self.relations,
            holds=holds,
            elapsed=time.perf_counter() - self.started,
        )
        if not holds:
            logger.warning(f"Check {self.check_name} failed on seed {self.spec.seed}")
        return report


def _first_ideals(spec: InstanceSpec, count: int):
    if spec.ideal_count < count:
        raise ArityError(ErrorMessages.ARITY.value.format(expected=count, actual=spec.ideal_count))
    _, ideals = random_instance(spec)
    return ideals[:count]


def verify_bk(spec: InstanceSpec) -> VerificationReport:
    """
    ``e(I1, ..., In) = n! * V(Gamma_I1, ..., Gamma_In)``, plus its diagonal ``e(I1) = n! * covol(Gamma_I1)``.
    """
    recorder = _Recorder("bk", spec)
    n = spec.dimension
    ideals = _first_ideals(spec, n)
    regions = [ideal.newton for ideal in ideals]
    recorder.equal("e_mixed", mixed_multiplicity(ideals), "n!_V_mixed", factorial(n) * mixed_covolume(regions))
    recorder.equal(
        "e_diagonal", samuel_multiplicity(ideals[0]), "n!_covol_diagonal", factorial(n) * covolume(regions[0])
    )
    return recorder.report()


def verify_af(spec: InstanceSpec) -> VerificationReport:
    """
    Both reverse Alexandrov-Fenchel inequalities, and for both equality when the first two
    arguments coincide.
    """
    recorder = _Recorder("af", spec)
    n = spec.dimension
    ideals = _first_ideals(spec, n)
    regions = [ideal.newton for ideal in ideals]
    covol_check = check_af_covolume(regions)
    recorder.at_least("covol_lhs", covol_check.lhs, "covol_rhs", covol_check.rhs)
    mult_check = check_af_multiplicity(ideals)
    recorder.at_least("mult_lhs", mult_check.lhs, "mult_rhs", mult_check.rhs)
    equal_case = check_af_covolume([regions[0], regions[0], *regions[2:]])
    recorder.equal("equal_case_lhs", equal_case.lhs, "equal_case_rhs", equal_case.rhs)
    mult_equal_case = check_af_multiplicity([ideals[0], ideals[0], *ideals[2:]])
    recorder.equal("mult_equal_case_lhs", mult_equal_case.lhs, "mult_equal_case_rhs", mult_equal_case.rhs)
    return recorder.report()


def verify_additivity(spec: InstanceSpec) -> VerificationReport:
    """
    ``e(I' I'', I2, ...) = e(I', I2, ...) + e(I'', I2, ...)`` and the same for mixed covolumes.
    """
    recorder = _Recorder("additivity", spec)
    n = spec.dimension
    first, second, *rest = _first_ideals(spec, n + 1)
    recorder.equal(
        "e_product",
        mixed_multiplicity([ideal_product(first, second), *rest]),
        "e_sum",
        mixed_multiplicity([first, *rest]) + mixed_multiplicity([second, *rest]),
    )
    regions = [ideal.newton for ideal in rest]
    recorder.equal(
        "V_region_sum",
        mixed_covolume([region_sum(first.newton, second.newton), *regions]),
        "V_sum",
        mixed_covolume([first.newton, *regions]) + mixed_covolume([second.newton, *regions]),
    )
    return recorder.report()


def verify_polynomiality(spec: InstanceSpec) -> VerificationReport:
    """
    Fit ``covol(l1 G1 + l2 G2)`` and ``e(I1^k1 I2^k2)`` exactly; compare every coefficient
    with the mixed covolumes and the two fits with each other.

    The coefficient of ``l1^a l2^b`` is ``n! / (a! b!) * V(G1 a times, G2 b times)``.
    Both fits sample the grid ``{0, ..., n + 1}^2``.
    """
    recorder = _Recorder("poly", spec)
    n = spec.dimension
    ideals = _first_ideals(spec, 2)
    regions = [ideal.newton for ideal in ideals]
    covol_fit = covol_polynomial_fit(regions, n + 1)
    mult_fit = multiplicity_polynomial_fit(ideals, n + 1)
    for a, b in homogeneous_exponents(2, n):
        label = f"{a},{b}"
        mixed = mixed_covolume([regions[0]] * a + [regions[1]] * b)
        coefficient = covol_fit.coefficient((a, b))
        multinomial = Fraction(factorial(n), factorial(a) * factorial(b))
        recorder.equal(f"covol_fit[{label}]", coefficient, f"polarized[{label}]", multinomial * mixed)
        recorder.equal(
            f"mult_fit[{label}]", mult_fit.coefficient((a, b)), f"n!_covol_fit[{label}]", factorial(n) * coefficient
        )
    return recorder.report()


def verify_closure(spec: InstanceSpec) -> VerificationReport:
    """
    Closure laws: idempotence, ``I ⊆ closure(I)``, ``I ~ closure(I)`` and ``e(I) = e(closure(I))``.
    """
    recorder = _Recorder("closure", spec)
    (ideal,) = _first_ideals(spec, 1)
    closure = integral_closure(ideal)
    recorder.true("idempotent", integral_closure(closure) == closure)
    recorder.true("contained", all(membership(g, closure) for g in ideal.generators))
    recorder.true("equivalent", ideals_equivalent(ideal, closure))
    recorder.equal("e_ideal", samuel_multiplicity(ideal), "e_closure", samuel_multiplicity(closure))
    return recorder.report()


def verify_staircase(spec: InstanceSpec) -> VerificationReport:
    """
    Breadth-first colength against the brute-force box count, for every generated ideal.
    """
    recorder = _Recorder("staircase", spec)
    _, ideals = random_instance(spec)
    for index, ideal in enumerate(ideals, start=1):
        recorder.equal(f"colength_I{index}", colength(ideal), f"box_count_I{index}", brute_force_colength(ideal))
    return recorder.report()


CHECKS: dict[str, Callable[[InstanceSpec], VerificationReport]] = {
    "bk": verify_bk,
    "af": verify_af,
    "additivity": verify_additivity,
    "poly": verify_polynomiality,
    "closure": verify_closure,
    "staircase": verify_staircase,
}


def run_check(check_name: str, spec: InstanceSpec) -> VerificationReport:
    """
    Run one named check; a toolkit failure becomes a report with ``holds = False`` and the error message.
    """
    started = time.perf_counter()
    try:
        return CHECKS[check_name](spec)
    except CoconeError as e:
        logger.error(f"Check {check_name} raised on seed {spec.seed}: {e}")
        return VerificationReport(
            check_name=check_name,
            instance=spec,
            holds=False,
            elapsed=time.perf_counter() - started,
            error=f"{type(e).__name__}: {e}",
        )


def _run_packed(task: tuple[str, InstanceSpec]) -> VerificationReport:
    return run_check(*task)


def run_batch(check_name: str, specs: Sequence[InstanceSpec], jobs: int = 1) -> list[VerificationReport]:
    """
    Run a check over many specs, optionally in worker processes.

    Args:
        check_name (str): A key of ``CHECKS``.
        specs (Sequence[InstanceSpec]): The instances, in the order reports are wanted.
        jobs (int): Number of worker processes; 1 runs in this process.

    Returns:
        list[VerificationReport]: One report per spec, in input order.

    Raises:
        KeyError: If the check name is unknown.
    """
    if check_name not in CHECKS:
        raise KeyError(check_name)
    logger.info(f"Running {check_name} on {len(specs)} instances with {jobs} job(s)")
    tasks = [(check_name, spec) for spec in specs]
    if jobs <= 1:
        return [_run_packed(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_run_packed, tasks))
