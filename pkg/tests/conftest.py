import os

import pytest
from hypothesis import HealthCheck, settings

from reducts.model import InformationSystem

settings.register_profile(
    "default", max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("fast", max_examples=10)
settings.register_profile("thorough", max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def triple_reduct() -> InformationSystem:
    """Five objects over four attributes; three reducts, empty core."""
    return InformationSystem.from_columns(
        ["a1", "a2", "a3", "a4"],
        [
            [0, 0, 1, 1, 2],
            [0, 0, 0, 1, 1],
            [0, 0, 1, 0, 1],
            [0, 0, 0, 0, 1],
        ],
    )


@pytest.fixture
def ladder_system() -> InformationSystem:
    """Five objects over three attributes; unique reduct, two core attributes."""
    return InformationSystem.from_columns(
        ["a1", "a2", "a3"],
        [
            [0, 0, 0, 1, 1],
            [0, 0, 1, 1, 1],
            [0, 1, 0, 1, 1],
        ],
    )


@pytest.fixture
def ladder_family_rows() -> list[list[str]]:
    """Discernibility family with one core attribute and two reducts."""
    return [
        ["a3"],
        ["a2", "a3"],
        ["a1", "a2", "a3"],
        ["a1", "a2"],
        ["a1", "a3"],
    ]


@pytest.fixture
def walkthrough_rows() -> list[list[str]]:
    """Nine-member family over six attributes used in the reducer walkthroughs."""
    return [
        ["a", "b", "f"],
        ["a", "c"],
        ["a", "d"],
        ["c", "d", "f"],
        ["b", "d"],
        ["b", "c"],
        ["b", "e", "f"],
        ["c", "e"],
        ["d", "e"],
    ]
