"""Discernibility matrices and ordered families of attribute sets.

``discernibility_matrix`` records, for every pair of objects, which
attributes tell them apart.  The deduplicated non-empty entries form a
``SetFamily``; hitting sets of that family are exactly the consistent
attribute sets, and its minimal hitting sets are the reducts.  The family
keeps first-seen member order because the reduction algorithms walk it in
that order, while equality and hashing ignore order entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError, ResourceLimitError
from .model import AttrSet, InformationSystem

__all__ = [
    "canonical_key",
    "SetFamily",
    "Absorption",
    "DiscernibilityMatrix",
    "discernibility_matrix",
    "containing_sets",
    "substitute_sets",
    "absorb",
    "hits_all",
    "reducts_by_expansion",
    "family_from_names",
]


def canonical_key(s: AttrSet) -> tuple[int, tuple[int, ...]]:
    """Sort key ordering sets by size, then lexicographically by element."""
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True, eq=False)
class SetFamily:
    """A duplicate-free sequence of non-empty attribute sets.

    Member order is first appearance and is preserved by every derived
    subfamily, since the row-wise reducer is sensitive to it.  Two families
    with the same members in any order compare equal and hash alike; use
    ``canonical`` when a display order independent of history is wanted.
    """

    members: tuple[AttrSet, ...]

    def __post_init__(self) -> None:
        deduped: list[AttrSet] = []
        seen: set[AttrSet] = set()
        for member in self.members:
            member = frozenset(member)
            if not member:
                raise InputError("empty member in set family")
            if member not in seen:
                seen.add(member)
                deduped.append(member)
        object.__setattr__(self, "members", tuple(deduped))
        object.__setattr__(self, "_member_set", frozenset(deduped))

    def __iter__(self) -> Iterator[AttrSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: Iterable[int]) -> bool:
        return frozenset(s) in self._member_set  # type: ignore[attr-defined]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self._member_set == other._member_set  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(self._member_set)  # type: ignore[attr-defined]

    @property
    def canonical(self) -> tuple[AttrSet, ...]:
        return tuple(sorted(self.members, key=canonical_key))

    def universe(self) -> AttrSet:
        return frozenset().union(*self.members) if self.members else frozenset()


@dataclass(frozen=True)
class Absorption:
    """Split of a family into its inclusion-minimal members and the rest.

    Every absorbed member is a strict superset of some minimal member, so
    dropping the absorbed part changes no hitting set.
    """

    minimal: SetFamily
    absorbed: tuple[AttrSet, ...]


@dataclass(frozen=True, eq=False)
class DiscernibilityMatrix:
    """Symmetric matrix of attribute sets separating each object pair."""

    attributes: tuple[str, ...]
    labels: tuple[str, ...]
    cells: tuple[tuple[AttrSet, ...], ...]
    family: SetFamily

    @property
    def n_objects(self) -> int:
        return len(self.labels)

    def entry(self, i: int, j: int) -> AttrSet:
        return self.cells[i][j]

    def pairs(self) -> Iterator[tuple[int, int, AttrSet]]:
        """Upper-triangle entries in row-major order, empty cells included."""
        for i in range(len(self.labels)):
            for j in range(i + 1, len(self.labels)):
                yield i, j, self.cells[i][j]


def discernibility_matrix(system: InformationSystem) -> DiscernibilityMatrix:
    """Compute all pairwise discerning attribute sets and their family.

    The family collects non-empty entries in row-major pair order,
    first occurrence only.
    """
    n = system.n_objects
    attrs = range(system.n_attributes)
    cells = [[frozenset()] * n for _ in range(n)]
    ordered: list[AttrSet] = []
    for i in range(n):
        for j in range(i + 1, n):
            d = frozenset(a for a in attrs if system.rows[i][a] != system.rows[j][a])
            cells[i][j] = cells[j][i] = d
            if d:
                ordered.append(d)
    return DiscernibilityMatrix(
        attributes=system.attributes,
        labels=system.labels,
        cells=tuple(tuple(row) for row in cells),
        family=SetFamily(tuple(ordered)),
    )


def containing_sets(family: SetFamily, a: int) -> SetFamily:
    """Subfamily of members that contain ``a``, in stored order."""
    return SetFamily(tuple(m for m in family if a in m))


def substitute_sets(family: SetFamily, a: int) -> SetFamily:
    """Members avoiding ``a`` that sit inside the union of those containing it.

    Hitting every such member forces a hit on every member containing ``a``
    once ``a`` itself is dropped, which is what makes ``a`` replaceable.
    """
    pool = containing_sets(family, a).universe()
    return SetFamily(tuple(m for m in family if a not in m and m <= pool))


def absorb(family: SetFamily) -> Absorption:
    """Partition members into inclusion-minimal ones and absorbed supersets."""
    minimal: list[AttrSet] = []
    absorbed: list[AttrSet] = []
    for m in family:
        if any(other < m for other in family if other is not m):
            absorbed.append(m)
        else:
            minimal.append(m)
    return Absorption(SetFamily(tuple(minimal)), tuple(absorbed))


def hits_all(attrs: AttrSet, family: SetFamily) -> bool:
    """True when ``attrs`` intersects every member; vacuously true if empty."""
    return all(attrs & m for m in family)


def _prune_to_minimal(candidates: Iterable[AttrSet]) -> list[AttrSet]:
    kept: list[AttrSet] = []
    for c in sorted(set(candidates), key=canonical_key):
        if not any(k <= c for k in kept):
            kept.append(c)
    return kept


def reducts_by_expansion(family: SetFamily, cap: int = 20) -> list[AttrSet]:
    """All minimal hitting sets, by distributing the family into a disjunction.

    Expands one member at a time and prunes non-minimal partial products
    after each step, so the working set stays an antichain.  Refuses
    families whose universe exceeds ``cap`` attributes.  The empty family
    is hit by the empty set.
    """
    support = family.universe()
    if len(support) > cap:
        raise ResourceLimitError(
            f"family spans {len(support)} attributes, cap is {cap}"
        )
    terms: list[AttrSet] = [frozenset()]
    for clause in absorb(family).minimal:
        terms = _prune_to_minimal(t | {a} for t in terms for a in clause)
    return sorted(terms, key=canonical_key)


def family_from_names(
    rows: Iterable[Iterable[str]],
) -> tuple[SetFamily, tuple[str, ...]]:
    """Build a family from lists of attribute names.

    Attribute indices follow sorted name order, so the same family always
    gets the same numbering no matter how its members are listed.  Returns
    the family and the index-to-name table.
    """
    as_sets: list[frozenset[str]] = []
    for row in rows:
        names = frozenset(row)
        if not names:
            raise InputError("empty member in family input")
        if not all(isinstance(n, str) and n for n in names):
            raise InputError("family members must be non-empty strings")
        as_sets.append(names)
    ordered_names = tuple(sorted(frozenset().union(*as_sets))) if as_sets else ()
    index = {name: i for i, name in enumerate(ordered_names)}
    members = tuple(frozenset(index[n] for n in s) for s in as_sets)
    return SetFamily(members), ordered_names
