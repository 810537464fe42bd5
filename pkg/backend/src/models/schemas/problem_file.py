"""
Imports for describing problem instances as validated documents.

- Fraction: Exact values of region coordinates.
- Union: Coordinates may be written as integers or "p/q" strings.
- BaseModel, Field: Pydantic model base class and field constraints.
- field_validator, model_validator: Pydantic v2 validation hooks.
- parse_rational: Text to Fraction conversion shared with the command line.
"""

from fractions import Fraction
from typing import Union

from pydantic import BaseModel, Field, field_validator, model_validator

from src.utilities.rationals import parse_rational

Coordinate = Union[int, str]


class ConeSchema(BaseModel):
    """
    Schema for the ambient cone, given by integer generators.
    """

    rays: list[list[int]] = Field(min_length=1)


class ProblemFile(BaseModel):
    """
    Schema of a problem instance: a cone plus named regions and ideals.

    Attributes:
        dimension: Ambient dimension n.
        cone: Integer generators of the cone C.
        regions: Region name to generator points; coordinates are integers or "p/q" strings.
        ideals: Ideal name to integer exponent vectors.
    """

    dimension: int = Field(ge=1)
    cone: ConeSchema
    regions: dict[str, list[list[Coordinate]]] = Field(default_factory=dict)
    ideals: dict[str, list[list[int]]] = Field(default_factory=dict)

    @field_validator("regions")
    @classmethod
    def check_rationals(cls, regions: dict[str, list[list[Coordinate]]]) -> dict[str, list[list[Coordinate]]]:
        for name, points in regions.items():
            if not points:
                raise ValueError(f"region '{name}' needs at least one generator")
            for point in points:
                for value in point:
                    try:
                        parse_rational(value)
                    except ValueError as e:
                        raise ValueError(f"region '{name}': {e}") from e
        return regions

    @model_validator(mode="after")
    def check_dimensions(self) -> "ProblemFile":
        for ray in self.cone.rays:
            if len(ray) != self.dimension:
                raise ValueError(f"cone.rays: {ray} does not have {self.dimension} entries")
        for name, points in self.regions.items():
            for point in points:
                if len(point) != self.dimension:
                    raise ValueError(f"regions.{name}: {point} does not have {self.dimension} entries")
        for name, exponents in self.ideals.items():
            if not exponents:
                raise ValueError(f"ideals.{name}: an ideal needs at least one generator")
            for exponent in exponents:
                if len(exponent) != self.dimension:
                    raise ValueError(f"ideals.{name}: {exponent} does not have {self.dimension} entries")
        return self

    def region_points(self, name: str) -> list[tuple[Fraction, ...]]:
        return [tuple(parse_rational(v) for v in point) for point in self.regions[name]]
