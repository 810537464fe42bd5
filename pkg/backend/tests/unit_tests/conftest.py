import json
from pathlib import Path

import pytest

from src.algebra.monomial_ideals import MonomialIdeal, ToricSemigroup, monomial_ideal, toric_semigroup
from src.geometry.cones_regions import Cone, ConvexRegion, cone_from_rays, region_from_generators

QUADRANT_PROBLEM = {
    "dimension": 2,
    "cone": {"rays": [[1, 0], [0, 1]]},
    "regions": {
        "G1": [[1, 0], [0, 1]],
        "G2": [["2", 0], [0, "1/1"]],
        "G3": [["1/2", 0], [0, "1/2"]],
    },
    "ideals": {
        "I1": [[1, 0], [0, 1]],
        "I2": [[2, 0], [0, 1]],
        "I3": [[2, 0], [0, 2]],
        "I4": [[2, 0], [1, 1], [0, 2]],
        "X": [[1, 0]],
    },
}


@pytest.fixture
def quadrant() -> Cone:
    return cone_from_rays([[1, 0], [0, 1]])


@pytest.fixture
def quadrant_semigroup(quadrant: Cone) -> ToricSemigroup:
    return toric_semigroup(quadrant)


@pytest.fixture
def gamma_1(quadrant: Cone) -> ConvexRegion:
    return region_from_generators(quadrant, [(1, 0), (0, 1)])


@pytest.fixture
def gamma_2(quadrant: Cone) -> ConvexRegion:
    return region_from_generators(quadrant, [(2, 0), (0, 1)])


@pytest.fixture
def maximal_ideal(quadrant_semigroup: ToricSemigroup) -> MonomialIdeal:
    return monomial_ideal(quadrant_semigroup, [(1, 0), (0, 1)])


@pytest.fixture
def x_squared_y(quadrant_semigroup: ToricSemigroup) -> MonomialIdeal:
    return monomial_ideal(quadrant_semigroup, [(2, 0), (0, 1)])


@pytest.fixture
def quadrant_file(tmp_path: Path) -> Path:
    path = tmp_path / "quadrant.json"
    path.write_text(json.dumps(QUADRANT_PROBLEM), encoding="utf-8")
    return path
