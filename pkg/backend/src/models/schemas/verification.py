"""
Schemas of the verification harness: instance parameters and per-check reports.
"""

from fractions import Fraction
from typing import Annotated, Any, Literal, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator

from src.utilities.rationals import format_rational, parse_rational

MAX_SEED = 2**64 - 1


def _rational_text(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return format_rational(parse_rational(value))


RationalText = Annotated[str, BeforeValidator(_rational_text)]


class InstanceSpec(BaseModel):
    """
    Parameters of one pseudo-random instance; equal specs generate equal instances.

    Attributes:
        seed: Unsigned 64-bit seed.
        dimension: Ambient dimension, 2 to 4.
        ray_count: Number of sampled cone generators (defaults to dimension + 1).
        generator_count: Extra random generators per ideal beyond the ones on the rays.
        coordinate_bound: Largest absolute coordinate of a sampled ray.
        ideal_count: Number of ideals to generate (defaults to dimension + 1).
    """

    model_config = ConfigDict(frozen=True)

    seed: int = Field(ge=0, le=MAX_SEED)
    dimension: int = Field(ge=2, le=4)
    ray_count: int = Field(ge=1)
    generator_count: int = Field(default=2, ge=0)
    coordinate_bound: int = Field(default=6, gt=0)
    ideal_count: int = Field(ge=1)

    @model_validator(mode="before")
    @classmethod
    def fill_defaults(cls, data: Any) -> Any:
        if not isinstance(data, dict) or not isinstance(data.get("dimension"), int):
            return data
        data = dict(data)
        for name in ("ray_count", "ideal_count"):
            if data.get(name) is None:
                data[name] = data["dimension"] + 1
        return data

    @model_validator(mode="after")
    def check_ray_count(self) -> "InstanceSpec":
        if self.ray_count < self.dimension:
            raise ValueError(f"ray_count {self.ray_count} is below the dimension {self.dimension}")
        return self


class Relation(BaseModel):
    """
    An exact comparison ``quantities[lhs] op quantities[rhs]``.
    """

    lhs: str
    op: Literal["==", ">="]
    rhs: str

    def evaluate(self, values: dict[str, Fraction]) -> bool:
        left, right = values[self.lhs], values[self.rhs]
        if self.op == "==":
            return left == right
        return left >= right


class VerificationReport(BaseModel):
    """
    Outcome of one check on one instance.

    Attributes:
        check_name: Identifier of the check (``bk``, ``af``, ...).
        instance: The spec the instance was generated from, for replay.
        quantities: Named exact values, serialized as "p/q".
        relations: The comparisons that make up the check.
        holds: True iff every relation holds.
        elapsed: Wall-clock seconds spent on the check.
        error: Message of an unexpected failure, if any.
    """

    check_name: str
    instance: InstanceSpec
    quantities: dict[str, RationalText] = Field(default_factory=dict)
    relations: list[Relation] = Field(default_factory=list)
    holds: bool
    elapsed: float = Field(ge=0)
    error: Optional[str] = None

    def values(self) -> dict[str, Fraction]:
        return {name: parse_rational(text) for name, text in self.quantities.items()}

    def recompute_holds(self) -> bool:
        if self.error is not None:
            return False
        values = self.values()
        return all(relation.evaluate(values) for relation in self.relations)
