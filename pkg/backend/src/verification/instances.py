"""
Seeded random instances: a strictly convex cone and m-primary monomial ideals in it.
"""

import numpy as np

from src.algebra.monomial_ideals import MonomialIdeal, ToricSemigroup, monomial_ideal, toric_semigroup
from src.config.settings.base import config_env
from src.config.settings.logger_config import logger
from src.geometry.cones_regions import Cone, cone_from_rays
from src.models.schemas.problem_file import ConeSchema, ProblemFile
from src.models.schemas.verification import InstanceSpec
from src.utilities.constants import ErrorMessages
from src.utilities.messages.exceptions.errors import ConeError, GenerationFailedError
from src.utilities.rationals import format_rational

RAY_MULTIPLE_MAX = 2
COMBINATION_COEFFICIENT_MAX = 2


def _sample_rays(rng: np.random.Generator, spec: InstanceSpec) -> list[list[int]]:
    # rays in the open halfspace {sum(x) > 0}, so the cone they span holds no line
    rays: list[list[int]] = []
    bound = spec.coordinate_bound
    while len(rays) < spec.ray_count:
        candidate = rng.integers(-bound, bound + 1, size=spec.dimension)
        if int(candidate.sum()) > 0:
            rays.append([int(v) for v in candidate])
    return rays


def _sample_ideal(rng: np.random.Generator, semigroup: ToricSemigroup, spec: InstanceSpec) -> MonomialIdeal:
    exponents = []
    for ray in semigroup.cone.rays:
        multiple = int(rng.integers(1, RAY_MULTIPLE_MAX + 1))
        exponents.append(tuple(multiple * v for v in ray))
    basis = semigroup.hilbert_basis
    while len(exponents) < len(semigroup.cone.rays) + spec.generator_count:
        coefficients = rng.integers(0, COMBINATION_COEFFICIENT_MAX + 1, size=len(basis))
        if not coefficients.any():
            continue
        exponents.append(tuple(sum(int(c) * h[k] for c, h in zip(coefficients, basis)) for k in range(spec.dimension)))
    return monomial_ideal(semigroup, exponents)


def random_instance(spec: InstanceSpec) -> tuple[Cone, list[MonomialIdeal]]:
    """
    Generate the cone and ideals described by a spec.

    The ray sample is retried until it spans the space; every ideal contains a multiple
    of each extreme ray, which makes it m-primary.

    Args:
        spec (InstanceSpec): Seed and size parameters.

    Returns:
        tuple[Cone, list[MonomialIdeal]]: The cone and ``spec.ideal_count`` ideals.

    Raises:
        GenerationFailedError: If no valid instance was found within ``COCONE_GENERATION_ATTEMPTS``.
    """
    rng = np.random.default_rng(spec.seed)
    attempts = config_env.GENERATION_ATTEMPTS
    for attempt in range(attempts):
        try:
            cone = cone_from_rays(_sample_rays(rng, spec))
        except ConeError as e:
            logger.debug(f"Seed {spec.seed}, attempt {attempt}: {e}")
            continue
        semigroup = toric_semigroup(cone)
        ideals = [_sample_ideal(rng, semigroup, spec) for _ in range(spec.ideal_count)]
        if all(ideal.m_primary for ideal in ideals):
            logger.debug(f"Seed {spec.seed}: cone rays {cone.rays}, {len(ideals)} ideals")
            return cone, ideals
    logger.error(f"Instance generation failed for seed {spec.seed}")
    raise GenerationFailedError(
        ErrorMessages.GENERATION_FAILED.value.format(seed=spec.seed, attempts=attempts), seed=spec.seed
    )


def instance_problem_file(spec: InstanceSpec) -> ProblemFile:
    """
    Describe the instance of a spec as a problem file, with ideals ``I1, I2, ...`` and
    their Newton regions ``G1, G2, ...``.
    """
    cone, ideals = random_instance(spec)
    return ProblemFile(
        dimension=cone.dimension,
        cone=ConeSchema(rays=[list(ray) for ray in cone.rays]),
        ideals={f"I{i}": [list(g) for g in ideal.generators] for i, ideal in enumerate(ideals, start=1)},
        regions={
            f"G{i}": [[format_rational(v) for v in point] for point in ideal.newton.generators]
            for i, ideal in enumerate(ideals, start=1)
        },
    )
