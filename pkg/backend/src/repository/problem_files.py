"""
Imports for loading problem files and turning them into toolkit objects.

- Path: Location of the JSON document.
- cached_property: Builds the cone and semigroup once per problem.
- logger: Application logging configuration.
- ProblemFile: Pydantic schema of the document.
- cone_from_rays, region_from_generators: Geometry constructors.
- toric_semigroup, monomial_ideal: Algebra constructors.
"""

from functools import cached_property
from pathlib import Path

from src.algebra.monomial_ideals import MonomialIdeal, ToricSemigroup, monomial_ideal, toric_semigroup
from src.config.settings.logger_config import logger
from src.geometry.cones_regions import Cone, ConvexRegion, cone_from_rays, region_from_generators
from src.models.schemas.problem_file import ProblemFile
from src.utilities.constants import ErrorMessages
from src.utilities.messages.exceptions.errors import ProblemFileError


def load_problem_file(path: Path) -> ProblemFile:
    """
    Read and validate a problem file.

    Args:
        path (Path): The JSON document.

    Returns:
        ProblemFile: The validated problem.

    Raises:
        ProblemFileError: If the file cannot be read.
        pydantic.ValidationError: If the document does not match the schema; the error names the field.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Cannot read problem file {path}: {e}")
        raise ProblemFileError(ErrorMessages.PROBLEM_FILE_UNREADABLE.value.format(path=path, reason=e)) from e
    problem = ProblemFile.model_validate_json(text)
    logger.info(f"Loaded problem file {path}: {len(problem.regions)} regions, {len(problem.ideals)} ideals")
    return problem


class ProblemInstance:
    """
    Toolkit objects built on demand from a validated problem file.
    """

    def __init__(self, problem: ProblemFile):
        self.problem = problem

    @cached_property
    def cone(self) -> Cone:
        return cone_from_rays(self.problem.cone.rays)

    @cached_property
    def semigroup(self) -> ToricSemigroup:
        return toric_semigroup(self.cone)

    def region(self, name: str) -> ConvexRegion:
        if name not in self.problem.regions:
            raise ProblemFileError(ErrorMessages.UNKNOWN_REGION.value.format(name=name))
        return region_from_generators(self.cone, self.problem.region_points(name))

    def ideal(self, name: str) -> MonomialIdeal:
        if name not in self.problem.ideals:
            raise ProblemFileError(ErrorMessages.UNKNOWN_IDEAL.value.format(name=name))
        return monomial_ideal(self.semigroup, self.problem.ideals[name])
