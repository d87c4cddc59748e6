"""Inter-attribute relations and an exhaustive audit of quantified claims.

Four relations are computed from their definitions: one attribute refining
another, two attributes inducing the same partition, two attributes being
coupled (every reduct takes both or neither), and an attribute set
excluding an attribute from any reduct extending it.  The audit then
measures, by brute quantifier enumeration on a concrete table, a catalog
of equivalence claims connecting these relations to the containing and
substitute families.  Audited claims are measured, never trusted: each
instance records both sides and, on mismatch, a concrete counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .characters import Character, classify_all
from .discern import (
    SetFamily,
    absorb,
    containing_sets,
    discernibility_matrix,
    substitute_sets,
)
from .errors import InputError, InvariantViolation, ResourceLimitError
from .model import AttrSet, InformationSystem, indiscernibility_partition, refines
from .reducers import all_reducts_bruteforce

__all__ = [
    "RelationReport",
    "ClaimInstance",
    "AuditReport",
    "finer_by_membership",
    "equivalent_by_membership",
    "attr_finer",
    "attr_equivalent",
    "coupled",
    "excludes",
    "relation_report_from_system",
    "relation_report_from_family",
    "audit_theorems",
]


def finer_by_membership(family: SetFamily, a: int, b: int) -> bool:
    """Membership form of refinement: ``a`` sits in every member holding ``b``."""
    return all(a in k for k in containing_sets(family, b))


def equivalent_by_membership(family: SetFamily, a: int, b: int) -> bool:
    """Two attributes appear in exactly the same family members."""
    return containing_sets(family, a) == containing_sets(family, b)


def _check_attr(system: InformationSystem, a: int) -> None:
    if not 0 <= a < system.n_attributes:
        raise InputError(f"attribute index {a} out of range")


def attr_finer(
    system: InformationSystem, a: int, b: int, *, family: SetFamily | None = None
) -> bool:
    """True when ``a`` induces a partition at least as fine as ``b``.

    Evaluates both the partition criterion and the membership criterion
    over the discernibility family and insists they agree; they are two
    readings of the same fact, so a split would be a bug.
    """
    _check_attr(system, a)
    _check_attr(system, b)
    if family is None:
        family = discernibility_matrix(system).family
    by_partition = refines(
        indiscernibility_partition(system, frozenset({a})),
        indiscernibility_partition(system, frozenset({b})),
    )
    by_membership = finer_by_membership(family, a, b)
    if by_partition != by_membership:
        raise InvariantViolation(
            f"refinement criteria disagree on ({a}, {b}): "
            f"partition {by_partition}, membership {by_membership}"
        )
    return by_partition


def attr_equivalent(
    system: InformationSystem, a: int, b: int, *, family: SetFamily | None = None
) -> bool:
    """True when ``a`` and ``b`` induce the same partition; cross-checked."""
    if family is None:
        family = discernibility_matrix(system).family
    both_ways = attr_finer(system, a, b, family=family) and attr_finer(
        system, b, a, family=family
    )
    by_membership = equivalent_by_membership(family, a, b)
    if both_ways != by_membership:
        raise InvariantViolation(
            f"equivalence criteria disagree on ({a}, {b}): "
            f"mutual refinement {both_ways}, equal members {by_membership}"
        )
    return both_ways


def coupled(reducts: list[AttrSet], a: int, b: int) -> bool:
    """Every reduct contains both attributes or neither."""
    return all((a in r) == (b in r) for r in reducts)


def excludes(reducts: list[AttrSet], c: AttrSet, a: int) -> bool:
    """No reduct extends ``c`` while also containing ``a``."""
    return not any(c <= r and a in r for r in reducts)


@dataclass(frozen=True)
class RelationReport:
    """Pairwise relation survey over one family's attributes.

    ``finer_pairs`` holds ordered distinct pairs (a, b) with a refining b;
    ``equivalent_pairs`` and ``coupled_pairs`` hold unordered distinct
    pairs as (low, high); ``exclusions`` holds each queried (c, a) with
    its verdict.
    """

    finer_pairs: tuple[tuple[int, int], ...]
    equivalent_pairs: tuple[tuple[int, int], ...]
    coupled_pairs: tuple[tuple[int, int], ...]
    exclusions: tuple[tuple[AttrSet, int, bool], ...]


def _build_report(
    attrs: list[int],
    finer,
    equivalent,
    reducts: list[AttrSet],
    queries: tuple[tuple[AttrSet, int], ...],
) -> RelationReport:
    finer_pairs = tuple(
        (a, b) for a in attrs for b in attrs if a != b and finer(a, b)
    )
    equivalent_pairs = tuple(
        (a, b) for a, b in combinations(attrs, 2) if equivalent(a, b)
    )
    coupled_pairs = tuple(
        (a, b) for a, b in combinations(attrs, 2) if coupled(reducts, a, b)
    )
    exclusions = tuple((c, a, excludes(reducts, c, a)) for c, a in queries)
    return RelationReport(finer_pairs, equivalent_pairs, coupled_pairs, exclusions)


def relation_report_from_system(
    system: InformationSystem,
    queries: tuple[tuple[AttrSet, int], ...] = (),
) -> RelationReport:
    """Survey all relations on a table, with dual-criterion cross-checks."""
    family = discernibility_matrix(system).family
    reducts = all_reducts_bruteforce(family, system.all_attrs())
    attrs = sorted(system.all_attrs())
    return _build_report(
        attrs,
        lambda a, b: attr_finer(system, a, b, family=family),
        lambda a, b: attr_equivalent(system, a, b, family=family),
        reducts,
        queries,
    )


def relation_report_from_family(
    family: SetFamily,
    attrs: AttrSet | None = None,
    queries: tuple[tuple[AttrSet, int], ...] = (),
) -> RelationReport:
    """Survey relations on a bare family via the membership criteria.

    Without a table there are no partitions, so refinement and equivalence
    use their membership forms directly.
    """
    if attrs is None:
        attrs = family.universe()
    reducts = all_reducts_bruteforce(family, frozenset(attrs))
    return _build_report(
        sorted(attrs),
        lambda a, b: finer_by_membership(family, a, b),
        lambda a, b: equivalent_by_membership(family, a, b),
        reducts,
        queries,
    )


@dataclass(frozen=True)
class ClaimInstance:
    """One measured instance of a quantified claim.

    ``lhs`` is the relation or character the claim talks about; ``rhs`` is
    its proposed equivalent, evaluated by exhaustive enumeration.  When the
    two split, ``counterexample`` pins the concrete sets showing it.
    """

    claim: str
    subject: str
    lhs: bool
    rhs: bool
    counterexample: str | None = None

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True, eq=False)
class AuditReport:
    """All measured claim instances for one table."""

    attributes: tuple[str, ...]
    instances: tuple[ClaimInstance, ...]

    def disagreements(self) -> tuple[ClaimInstance, ...]:
        return tuple(i for i in self.instances if not i.agree)

    def by_claim(self) -> dict[str, tuple[ClaimInstance, ...]]:
        grouped: dict[str, list[ClaimInstance]] = {}
        for inst in self.instances:
            grouped.setdefault(inst.claim, []).append(inst)
        return {claim: tuple(rows) for claim, rows in grouped.items()}

    @property
    def all_agree(self) -> bool:
        return not self.disagreements()


def _names(names: tuple[str, ...], attrs) -> str:
    inner = ", ".join(names[i] for i in sorted(attrs))
    return "{" + inner + "}"


def _mask_attrs(mask: int, n: int) -> frozenset[int]:
    return frozenset(i for i in range(n) if mask >> i & 1)


class _Auditor:
    """Shared state for one audit run: masks, characters, oracle reducts."""

    def __init__(
        self, family: SetFamily, n_attrs: int, names: tuple[str, ...]
    ) -> None:
        self.family = family
        self.n = n_attrs
        self.names = names
        self.universe = frozenset(range(n_attrs))
        self.member_masks = [self._mask(m) for m in family]
        self.n_masks = {
            a: [self._mask(k) for k in containing_sets(family, a)]
            for a in range(n_attrs)
        }
        self.e_masks = {
            a: [self._mask(k) for k in substitute_sets(family, a)]
            for a in range(n_attrs)
        }
        self.reducts = all_reducts_bruteforce(family, self.universe)
        self.characters = classify_all(family, self.universe)
        self.instances: list[ClaimInstance] = []

    @staticmethod
    def _mask(s: AttrSet) -> int:
        return sum(1 << i for i in s)

    @staticmethod
    def _hits(mask: int, members: list[int]) -> bool:
        return all(mask & m for m in members)

    def _set_str(self, mask_or_set) -> str:
        if isinstance(mask_or_set, int):
            mask_or_set = _mask_attrs(mask_or_set, self.n)
        return _names(self.names, mask_or_set)

    def record(
        self, claim: str, subject: str, lhs: bool, rhs: bool, detail: str | None
    ) -> None:
        self.instances.append(
            ClaimInstance(claim, subject, lhs, rhs, detail if lhs != rhs else None)
        )

    def _transfer_violation(
        self,
        premise: list[int],
        conclusion: list[int],
        *,
        premise_extra: int = 0,
        conclusion_extra: int = 0,
    ) -> tuple[int, int] | None:
        """First C whose padded form hits ``premise`` yet misses ``conclusion``."""
        for c in range(1 << self.n):
            if self._hits(c | premise_extra, premise) and not self._hits(
                c | conclusion_extra, conclusion
            ):
                missed = next(
                    m for m in conclusion if not (c | conclusion_extra) & m
                )
                return c, missed
        return None

    def substitute_transfer_claims(self) -> None:
        """An attribute is unnecessary iff hitting its substitute sets always
        carries over to hitting its containing sets (stated twice, once via
        approximation inclusions and once via explicit intersections)."""
        for a in range(self.n):
            violation = self._transfer_violation(self.e_masks[a], self.n_masks[a])
            rhs = violation is None
            lhs = self.characters.character(a) is Character.UNNECESSARY
            if violation is not None:
                c, missed = violation
                detail = (
                    f"C={self._set_str(c)} hits every substitute set of "
                    f"{self.names[a]} but misses {self._set_str(missed)}"
                )
            else:
                detail = (
                    f"every C transfers, yet {self.names[a]} is "
                    f"{self.characters.character(a).value}"
                )
            subject = f"a={self.names[a]}"
            self.record("substitute_transfer", subject, lhs, rhs, detail)
            self.record("substitute_transfer_expanded", subject, lhs, rhs, detail)

    def blocked_substitute_claims(self) -> None:
        """An attribute is relatively necessary iff it is no singleton member
        and some C hits all its substitute sets while missing a containing
        set (stated twice; the witness form names the blocked member)."""
        for a in range(self.n):
            violation = self._transfer_violation(self.e_masks[a], self.n_masks[a])
            rhs = frozenset({a}) not in self.family and violation is not None
            lhs = (
                self.characters.character(a) is Character.RELATIVE_NECESSARY
            )
            if violation is not None:
                c, missed = violation
                detail = (
                    f"C={self._set_str(c)} hits the substitute sets of "
                    f"{self.names[a]} and misses {self._set_str(missed)}, "
                    f"yet {self.names[a]} is "
                    f"{self.characters.character(a).value}"
                )
            else:
                detail = (
                    f"no C separates the families of {self.names[a]}, yet it "
                    f"is {self.characters.character(a).value}"
                )
            subject = f"a={self.names[a]}"
            self.record("blocked_substitute", subject, lhs, rhs, detail)
            self.record("blocked_substitute_witness", subject, lhs, rhs, detail)

    def avoiding_escape_claims(self) -> None:
        """An attribute is relatively necessary iff it is no singleton member
        and every family member avoiding it escapes some containing set."""
        for a in range(self.n):
            a_bit = 1 << a
            offender = None
            for d, d_mask in zip(self.family, self.member_masks):
                if d_mask & a_bit:
                    continue
                if not any(d_mask & ~k for k in self.n_masks[a]):
                    offender = d
                    break
            rhs = frozenset({a}) not in self.family and offender is None
            lhs = (
                self.characters.character(a) is Character.RELATIVE_NECESSARY
            )
            if offender is not None:
                detail = (
                    f"member {self._set_str(offender)} avoids {self.names[a]} "
                    f"but fits inside every containing set"
                )
            else:
                detail = (
                    f"condition and character split for {self.names[a]}: it is "
                    f"{self.characters.character(a).value}"
                )
            self.record(
                "avoiding_escape", f"a={self.names[a]}", lhs, rhs, detail
            )

    def minimal_escape_claims(self) -> None:
        """For every multi-attribute minimal member, dropping one attribute
        leaves a set some reduct avoids entirely."""
        for d in absorb(self.family).minimal:
            if len(d) < 2:
                continue
            for a in sorted(d):
                rest = d - {a}
                rhs = any(not rest & b for b in self.reducts)
                detail = f"no reduct avoids {self._set_str(rest)}"
                subject = f"d={self._set_str(d)}, a={self.names[a]}"
                self.record("minimal_escape", subject, True, rhs, detail)

    def coupled_claims(self) -> None:
        """Coupling of two attributes equated with three transfer conditions:
        hitting one containing family forces the other, extension by one
        attribute forces the other, and the set-difference variant."""
        for a, b in combinations(range(self.n), 2):
            lhs = coupled(self.reducts, a, b)
            subject = f"a={self.names[a]}, b={self.names[b]}"
            fallback = (
                f"transfers hold both ways, yet some reduct separates "
                f"{self.names[a]} from {self.names[b]}"
            )
            plain = self._coupling_violation(a, b, extended=False)
            self.record(
                "coupled_partition_transfer",
                subject,
                lhs,
                plain is None,
                plain or fallback,
            )
            extended = self._coupling_violation(a, b, extended=True)
            self.record(
                "coupled_extension_transfer",
                subject,
                lhs,
                extended is None,
                extended or fallback,
            )
            diff = self._coupling_difference_violation(a, b)
            self.record(
                "coupled_difference_transfer",
                subject,
                lhs,
                diff is None,
                diff or fallback,
            )

    def _coupling_violation(self, a: int, b: int, extended: bool) -> str | None:
        for x, y in ((a, b), (b, a)):
            hit = self._transfer_violation(
                self.n_masks[y],
                self.n_masks[x],
                premise_extra=(1 << x) if extended else 0,
            )
            if hit is not None:
                c, missed = hit
                via = (
                    f"C∪{{{self.names[x]}}} hits every containing set of "
                    f"{self.names[y]}"
                    if extended
                    else f"C hits every containing set of {self.names[y]}"
                )
                return (
                    f"C={self._set_str(c)}: {via}, but C misses "
                    f"{self._set_str(missed)} containing {self.names[x]}"
                )
        return None

    def _coupling_difference_violation(self, a: int, b: int) -> str | None:
        for x, y in ((a, b), (b, a)):
            x_bit = 1 << x
            premise = [m for m in self.n_masks[y] if not m & x_bit]
            hit = self._transfer_violation(premise, self.n_masks[x])
            if hit is not None:
                c, missed = hit
                return (
                    f"C={self._set_str(c)} hits every containing set of "
                    f"{self.names[y]} lacking {self.names[x]}, but misses "
                    f"{self._set_str(missed)}"
                )
        return None

    def exclusion_extension_claims(self) -> None:
        """Exclusion of an attribute by a reduct-extendable set equated with
        a transfer: any D hitting the attribute's substitute sets that the
        set does not already touch makes the union hit its containing sets."""
        c_domain: set[AttrSet] = set()
        for r in self.reducts:
            members = sorted(r)
            for size in range(len(members) + 1):
                for combo in combinations(members, size):
                    c_domain.add(frozenset(combo))
        for c in sorted(c_domain, key=lambda s: (len(s), tuple(sorted(s)))):
            c_mask = self._mask(c)
            for a in range(self.n):
                if a in c:
                    continue
                lhs = excludes(self.reducts, c, a)
                targets = [k for k in self.e_masks[a] if not k & c_mask]
                violation = self._transfer_violation(
                    targets, self.n_masks[a], conclusion_extra=c_mask
                )
                rhs = violation is None
                if violation is not None:
                    d, missed = violation
                    detail = (
                        f"D={self._set_str(d)} hits the untouched substitute "
                        f"sets of {self.names[a]}, but C∪D misses "
                        f"{self._set_str(missed)}"
                    )
                else:
                    detail = (
                        f"every D transfers, yet some reduct extends "
                        f"{self._set_str(c)} with {self.names[a]}"
                    )
                subject = f"C={self._set_str(c)}, a={self.names[a]}"
                self.record("exclusion_extension", subject, lhs, rhs, detail)


def _partition_claims(
    system: InformationSystem, auditor: _Auditor
) -> None:
    """Refinement and equivalence of partitions equated with the membership
    criteria, plus: a strictly finer attribute shares no reduct with the
    attribute it refines."""
    names = system.attributes
    n = system.n_attributes
    parts = {
        a: indiscernibility_partition(system, frozenset({a})) for a in range(n)
    }
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            lhs = refines(parts[a], parts[b])
            rhs = all(a in k for k in containing_sets(auditor.family, b))
            witness = next(
                (k for k in containing_sets(auditor.family, b) if a not in k), None
            )
            detail = (
                f"member {auditor._set_str(witness)} holds {names[b]} without "
                f"{names[a]}"
                if witness is not None
                else f"every member holding {names[b]} holds {names[a]}, yet "
                f"the partitions disagree"
            )
            subject = f"a={names[a]}, b={names[b]}"
            auditor.record("finer_membership", subject, lhs, rhs, detail)
            if lhs:
                cohabit = next(
                    (r for r in auditor.reducts if a in r and b in r), None
                )
                auditor.record(
                    "finer_no_cohabitation",
                    subject,
                    True,
                    cohabit is None,
                    f"reduct {auditor._set_str(cohabit or frozenset())} "
                    f"contains both",
                )
    for a, b in combinations(range(n), 2):
        lhs = parts[a] == parts[b]
        rhs = containing_sets(auditor.family, a) == containing_sets(
            auditor.family, b
        )
        subject = f"a={names[a]}, b={names[b]}"
        auditor.record(
            "equal_neighborhoods",
            subject,
            lhs,
            rhs,
            "equal member lists with unequal partitions"
            if rhs and not lhs
            else "equal partitions with unequal member lists",
        )


def audit_theorems(system: InformationSystem, max_attrs: int = 10) -> AuditReport:
    """Measure every cataloged claim on one table, recording both sides.

    Quantifiers over attribute sets are evaluated by enumerating all
    subsets of the attribute universe, so tables wider than ``max_attrs``
    are refused.  Disagreements are findings, not errors: each carries a
    concrete counterexample and the report never raises because of one.
    """
    if system.n_attributes > max_attrs:
        raise ResourceLimitError(
            f"{system.n_attributes} attributes exceed the audit cap of {max_attrs}"
        )
    family = discernibility_matrix(system).family
    auditor = _Auditor(family, system.n_attributes, system.attributes)
    auditor.substitute_transfer_claims()
    auditor.blocked_substitute_claims()
    auditor.avoiding_escape_claims()
    auditor.minimal_escape_claims()
    auditor.coupled_claims()
    auditor.exclusion_extension_claims()
    _partition_claims(system, auditor)
    return AuditReport(system.attributes, tuple(auditor.instances))
