"""Test-only generators and an independent partition-based reduct oracle."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from reducts.discern import SetFamily
from reducts.model import AttrSet, InformationSystem, is_consistent

# Audited claims whose two sides can be shown to coincide on every table;
# the audit must never find a disagreement for these.
PROVEN_CLAIMS = frozenset(
    {
        "substitute_transfer",
        "substitute_transfer_expanded",
        "blocked_substitute",
        "blocked_substitute_witness",
        "minimal_escape",
        "finer_membership",
        "equal_neighborhoods",
        "finer_no_cohabitation",
    }
)

# The remaining claims hold on most tables but have known counterexamples;
# the audit measures them instead of assuming them.
MEASURED_CLAIMS = frozenset(
    {
        "avoiding_escape",
        "coupled_partition_transfer",
        "coupled_extension_transfer",
        "coupled_difference_transfer",
        "exclusion_extension",
    }
)

ALL_CLAIMS = PROVEN_CLAIMS | MEASURED_CLAIMS


@st.composite
def systems(draw, max_objects: int = 6, max_attrs: int = 5, max_symbols: int = 3):
    n_attrs = draw(st.integers(1, max_attrs))
    n_objects = draw(st.integers(1, max_objects))
    rows = tuple(
        tuple(draw(st.integers(0, max_symbols - 1)) for _ in range(n_attrs))
        for _ in range(n_objects)
    )
    return InformationSystem(
        tuple(f"a{i + 1}" for i in range(n_attrs)),
        rows,
        tuple(str(i + 1) for i in range(n_objects)),
    )


@st.composite
def families(draw, max_attrs: int = 5, max_members: int = 8):
    n_attrs = draw(st.integers(1, max_attrs))
    members = draw(
        st.lists(
            st.frozensets(st.integers(0, n_attrs - 1), min_size=1, max_size=n_attrs),
            max_size=max_members,
        )
    )
    return SetFamily(tuple(members))


def fam(*sets) -> SetFamily:
    return SetFamily(tuple(frozenset(s) for s in sets))


def make_random_system(
    rng: random.Random,
    max_objects: int = 8,
    max_attrs: int = 8,
    max_symbols: int = 3,
) -> InformationSystem:
    n_attrs = rng.randint(1, max_attrs)
    n_objects = rng.randint(1, max_objects)
    rows = tuple(
        tuple(rng.randrange(max_symbols) for _ in range(n_attrs))
        for _ in range(n_objects)
    )
    return InformationSystem(
        tuple(f"a{i + 1}" for i in range(n_attrs)),
        rows,
        tuple(str(i + 1) for i in range(n_objects)),
    )


def reducts_by_partitions(system: InformationSystem) -> set[AttrSet]:
    """Enumerate reducts straight from the definition, smallest first.

    Checks consistency of every attribute subset against the full-table
    partition and keeps the minimal consistent ones.  Exponential, fine for
    the small systems used in tests; shares no code with the matrix path.
    """
    universe = sorted(system.all_attrs())
    found: set[AttrSet] = set()
    for size in range(len(universe) + 1):
        for combo in combinations(universe, size):
            cand = frozenset(combo)
            if any(r <= cand for r in found):
                continue
            if is_consistent(system, cand):
                found.add(cand)
    return found
