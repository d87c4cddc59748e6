"""Command line front end for the reduction library.

Two input formats are understood: a CSV table whose header row names the
attributes (optionally with a leading object-label column via --id-col),
and a JSON file holding a raw set family as an array of arrays of
attribute names.  The kind is inferred from the file extension and can be
forced with --kind.  Every subcommand emits either a plain-text report or
a canonical JSON document; JSON output re-serializes byte-identically.

Exit codes: 0 success, 1 malformed input or usage, 2 internal invariant
violation, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .characters import classify_all
from .covering import covering_from_family, minimal_description, neighborhood, singleton_equivalences
from .discern import SetFamily, discernibility_matrix, family_from_names, containing_sets, reducts_by_expansion, substitute_sets
from .errors import InputError, InvariantViolation, ResourceLimitError
from .model import InformationSystem, load_table
from .reducers import (
    ReductTrace,
    SelectionPolicy,
    all_reducts_bruteforce,
    ea_reduce,
    verify_reduct,
    yao_row_wise,
)
from .relations import audit_theorems, relation_report_from_family, relation_report_from_system

__all__ = ["RunConfig", "run", "main"]

ORACLE_CAP = 20
AUDIT_CAP = 10


@dataclass
class RunConfig:
    """Everything one invocation needs, already validated."""

    path: str
    kind: str
    command: str
    policy: SelectionPolicy = SelectionPolicy.FIRST
    algorithm: str = "ea"
    minimize: bool = True
    verbose: bool = False
    max_attrs: int | None = None
    fmt: str = "text"
    id_col: bool = False
    exclusion_queries: tuple[tuple[tuple[str, ...], str], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("table", "family"):
            raise InputError(f"unknown input kind {self.kind!r}")
        if self.max_attrs is not None and self.max_attrs < 1:
            raise InputError("--max-attrs must be at least 1")


@dataclass
class _Loaded:
    """Parsed input plus the name/index mappings every command needs."""

    names: tuple[str, ...]
    family: SetFamily
    system: InformationSystem | None = None
    labels: tuple[str, ...] = ()

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown attribute {name!r}") from None

    def set_names(self, attrs) -> list[str]:
        return sorted(self.names[a] for a in attrs)

    def family_names(self, fam) -> list[list[str]]:
        return [self.set_names(m) for m in fam]

    def require_system(self, command: str) -> InformationSystem:
        if self.system is None:
            raise InputError(f"the {command} command needs a CSV table input")
        return self.system


def _load(config: RunConfig) -> _Loaded:
    try:
        with open(config.path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise InputError(f"cannot read {config.path}: {err.strerror}") from None
    if config.kind == "table":
        try:
            system = load_table(text, id_col=config.id_col)
        except InputError as err:
            raise InputError(f"{config.path}: {err}") from None
        family = discernibility_matrix(system).family
        return _Loaded(system.attributes, family, system, system.labels)
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(
            f"{config.path}:{err.lineno}:{err.colno}: invalid JSON: {err.msg}"
        ) from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError(
            f"{config.path}: a family file must be an array of arrays of names"
        )
    try:
        family, names = family_from_names(rows)
    except InputError as err:
        raise InputError(f"{config.path}: {err}") from None
    return _Loaded(names, family)


def _universe(loaded: _Loaded) -> frozenset[int]:
    return frozenset(range(len(loaded.names)))


def _pad(rows: list[list[str]]) -> list[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def _set_str(loaded: _Loaded, attrs) -> str:
    return "{" + ", ".join(loaded.set_names(attrs)) + "}"


def _family_str(loaded: _Loaded, fam) -> str:
    if not len(fam):
        return "(empty)"
    return ", ".join(_set_str(loaded, m) for m in fam)


def _cmd_matrix(loaded: _Loaded, config: RunConfig):
    system = loaded.require_system("matrix")
    dm = discernibility_matrix(system)
    pairs = [
        {
            "objects": [loaded.labels[i], loaded.labels[j]],
            "attributes": loaded.set_names(entry),
        }
        for i, j, entry in dm.pairs()
    ]
    result = {
        "pairs": pairs,
        "family": loaded.family_names(dm.family),
    }
    lines = [f"discernibility matrix: {system.n_objects} objects, "
             f"{system.n_attributes} attributes"]
    if pairs:
        n = system.n_objects
        head = [""] + [loaded.labels[j] for j in range(1, n)]
        grid = [head]
        for i in range(n - 1):
            row = [loaded.labels[i]]
            for j in range(1, n):
                if j <= i:
                    row.append("")
                else:
                    cell = ", ".join(loaded.set_names(dm.entry(i, j)))
                    row.append(cell or "-")
            grid.append(row)
        lines += _pad(grid)
    lines.append(f"family: {_family_str(loaded, dm.family)}")
    return result, lines, []


def _cmd_classify(loaded: _Loaded, config: RunConfig):
    report = classify_all(loaded.family, _universe(loaded))
    characters = {
        loaded.names[a]: ev.character.value for a, ev in report.by_attr.items()
    }
    families = {
        loaded.names[a]: {
            "containing": loaded.family_names(containing_sets(loaded.family, a)),
            "substitutes": loaded.family_names(substitute_sets(loaded.family, a)),
        }
        for a in sorted(report.by_attr)
    }
    result = {
        "characters": characters,
        "core": loaded.set_names(report.core),
        "relative_necessary": loaded.set_names(report.relative_necessary),
        "unnecessary": loaded.set_names(report.unnecessary),
        "families": families,
    }
    lines = [
        f"core: {', '.join(result['core']) or '(none)'}",
        f"relative necessary: {', '.join(result['relative_necessary']) or '(none)'}",
        f"unnecessary: {', '.join(result['unnecessary']) or '(none)'}",
        "",
    ]
    for a in sorted(report.by_attr):
        name = loaded.names[a]
        lines.append(f"{name}: {report.character(a).value}")
        lines.append(
            f"  containing: {_family_str(loaded, containing_sets(loaded.family, a))}"
        )
        lines.append(
            f"  substitutes: {_family_str(loaded, substitute_sets(loaded.family, a))}"
        )
    return result, lines, []


def _trace_json(loaded: _Loaded, trace: ReductTrace) -> list[dict]:
    steps = []
    for step in trace.steps:
        if trace.algorithm == "yao":
            steps.append(
                {
                    "pivot": step.pivot,
                    "absorbed": loaded.set_names(step.absorbed),
                    "chosen": loaded.names[step.chosen],
                    "entries_after": loaded.family_names(step.entries_after),
                }
            )
        else:
            steps.append(
                {
                    "chosen": loaded.names[step.chosen],
                    "containing": loaded.family_names(step.containing),
                    "substitutes": loaded.family_names(step.substitutes),
                    "inner_reduct": loaded.set_names(step.inner_reduct),
                    "chosen_added": step.a_added,
                    "blocked": loaded.set_names(step.blocked)
                    if step.blocked is not None
                    else None,
                    "family_after": loaded.family_names(step.family_after),
                }
            )
    return steps


def _trace_lines(loaded: _Loaded, trace: ReductTrace) -> list[str]:
    lines = []
    for k, step in enumerate(trace.steps, start=1):
        if trace.algorithm == "yao":
            lines.append(
                f"step {k}: entry {step.pivot} absorbed to "
                f"{_set_str(loaded, step.absorbed)}, chose {loaded.names[step.chosen]}"
            )
            entries = ", ".join(_set_str(loaded, e) for e in step.entries_after)
            lines.append(f"  entries now: {entries}")
        else:
            lines.append(f"step {k}: examining {loaded.names[step.chosen]}")
            lines.append(
                f"  containing: {_family_str(loaded, step.containing)}"
            )
            lines.append(
                f"  substitutes: {_family_str(loaded, step.substitutes)}"
            )
            lines.append(
                f"  inner reduct: {_set_str(loaded, step.inner_reduct)}"
            )
            if step.a_added:
                lines.append(
                    f"  kept {loaded.names[step.chosen]}"
                    + (
                        f" (no inner attribute hits {_set_str(loaded, step.blocked)})"
                        if step.blocked is not None
                        else ""
                    )
                )
            else:
                lines.append(f"  dropped {loaded.names[step.chosen]}")
            lines.append(
                f"  family now: {_family_str(loaded, step.family_after)}"
            )
    return lines


def _cmd_reduct(loaded: _Loaded, config: RunConfig):
    if config.algorithm == "yao":
        reduct, trace = yao_row_wise(loaded.family, config.policy)
    else:
        reduct, trace = ea_reduce(
            loaded.family, config.policy, minimize=config.minimize
        )
    check = verify_reduct(loaded.family, reduct)
    if not check.is_valid:
        raise InvariantViolation(
            f"{trace.algorithm} produced {_set_str(loaded, reduct)}, "
            f"which fails verification: {check.status.value}"
        )
    result = {
        "algorithm": trace.algorithm,
        "policy": config.policy.value,
        "reduct": loaded.set_names(reduct),
        "valid": True,
    }
    trimmed = trace.minimized and trace.before_minimize != reduct
    if trimmed:
        result["raw"] = loaded.set_names(trace.before_minimize)
    if config.verbose:
        result["trace"] = _trace_json(loaded, trace)
    lines = [
        f"algorithm: {trace.algorithm}  selection: {config.policy.value}",
        f"reduct: {_set_str(loaded, reduct)}",
        "valid: yes",
    ]
    if trimmed:
        lines.insert(2, f"raw result before minimization: "
                        f"{_set_str(loaded, trace.before_minimize)}")
    if config.verbose:
        lines += [""] + _trace_lines(loaded, trace)
    return result, lines, []


def _cap_warning(config: RunConfig, default: int) -> tuple[int, list[str]]:
    cap = config.max_attrs if config.max_attrs is not None else default
    warnings = []
    if cap > default:
        warnings.append(
            f"--max-attrs {cap} is above the default {default}; "
            f"both enumerations grow exponentially"
        )
    return cap, warnings


def _cmd_all_reducts(loaded: _Loaded, config: RunConfig):
    cap, warnings = _cap_warning(config, ORACLE_CAP)
    reducts = all_reducts_bruteforce(loaded.family, _universe(loaded), cap=cap)
    expanded = reducts_by_expansion(loaded.family, cap=cap)
    if set(reducts) != set(expanded):
        raise InvariantViolation(
            "brute-force enumeration and prime-implicant expansion disagree: "
            f"{[sorted(r) for r in reducts]} vs {[sorted(r) for r in expanded]}"
        )
    result = {
        "reducts": loaded.family_names(reducts),
        "count": len(reducts),
    }
    lines = [f"{len(reducts)} reduct(s)"]
    lines += [_set_str(loaded, r) for r in reducts]
    return result, lines, warnings


def _cmd_relations(loaded: _Loaded, config: RunConfig):
    queries = tuple(
        (frozenset(loaded.index(n) for n in c_names), loaded.index(target))
        for c_names, target in config.exclusion_queries
    )
    if loaded.system is not None:
        report = relation_report_from_system(loaded.system, queries)
    else:
        report = relation_report_from_family(
            loaded.family, _universe(loaded), queries
        )
    result = {
        "finer": [[loaded.names[a], loaded.names[b]] for a, b in report.finer_pairs],
        "equivalent": [
            [loaded.names[a], loaded.names[b]] for a, b in report.equivalent_pairs
        ],
        "coupled": [
            [loaded.names[a], loaded.names[b]] for a, b in report.coupled_pairs
        ],
        "exclusions": [
            {
                "given": loaded.set_names(c),
                "attribute": loaded.names[a],
                "excluded": verdict,
            }
            for c, a, verdict in report.exclusions
        ],
    }
    lines = []
    lines.append(
        "finer: "
        + (
            "; ".join(f"{x} refines {y}" for x, y in result["finer"])
            or "(none)"
        )
    )
    lines.append(
        "equivalent: "
        + ("; ".join(f"{x} ~ {y}" for x, y in result["equivalent"]) or "(none)")
    )
    lines.append(
        "coupled: "
        + ("; ".join(f"{x} with {y}" for x, y in result["coupled"]) or "(none)")
    )
    for entry in result["exclusions"]:
        given = "{" + ", ".join(entry["given"]) + "}"
        verdict = "yes" if entry["excluded"] else "no"
        lines.append(f"excludes {entry['attribute']} given {given}: {verdict}")
    return result, lines, []


def _cmd_audit(loaded: _Loaded, config: RunConfig):
    system = loaded.require_system("audit")
    cap, warnings = _cap_warning(config, AUDIT_CAP)
    report = audit_theorems(system, max_attrs=cap)
    claims = {
        claim: [
            {
                "subject": inst.subject,
                "lhs": inst.lhs,
                "rhs": inst.rhs,
                "agree": inst.agree,
                "counterexample": inst.counterexample,
            }
            for inst in rows
        ]
        for claim, rows in report.by_claim().items()
    }
    disagreements = report.disagreements()
    result = {
        "claims": claims,
        "all_agree": report.all_agree,
        "disagreements": len(disagreements),
    }
    lines = [_fmt_claim_summary(claim, rows) for claim, rows in sorted(claims.items())]
    if disagreements:
        lines.append("")
        for inst in disagreements:
            lines.append(
                f"disagreement: {inst.claim} at {inst.subject} "
                f"(lhs={inst.lhs}, rhs={inst.rhs})"
            )
            lines.append(f"  {inst.counterexample}")
    else:
        lines.append("")
        lines.append("every audited claim agrees on this table")
    return result, lines, warnings


def _fmt_claim_summary(claim: str, rows: list[dict]) -> str:
    bad = sum(1 for r in rows if not r["agree"])
    state = "all agree" if bad == 0 else f"{bad} disagreement(s)"
    return f"{claim}: {len(rows)} instance(s), {state}"


def _cmd_covering(loaded: _Loaded, config: RunConfig):
    space = covering_from_family(loaded.family)
    uncovered = sorted(set(range(len(loaded.names))) - space.ground)
    warnings = [
        f"attribute {loaded.names[a]} appears in no family member and "
        f"is outside the covering space"
        for a in uncovered
    ]
    per_attr = {}
    grid = [["attribute", "minimal description", "neighborhood",
             "in cover", "single minimal", "lower is self", "minimal is lower"]]
    for a in sorted(space.ground):
        md = minimal_description(space, a)
        nb = neighborhood(space, a)
        checks = singleton_equivalences(space, a)
        per_attr[loaded.names[a]] = {
            "minimal_description": loaded.family_names(md),
            "neighborhood": loaded.set_names(nb),
            "in_cover": checks.in_cover,
            "minimal_is_singleton": checks.minimal_is_singleton,
            "lower_is_self": checks.lower_is_self,
            "minimal_is_lower": checks.minimal_is_lower,
            "all_true": checks.all_true,
        }
        grid.append(
            [
                loaded.names[a],
                _family_str(loaded, md),
                _set_str(loaded, nb),
            ]
            + ["yes" if v else "no" for v in checks.as_tuple()]
        )
    result = {
        "ground": loaded.set_names(space.ground),
        "cover": loaded.family_names(space.cover),
        "elements": per_attr,
    }
    lines = _pad(grid) if len(grid) > 1 else ["(empty covering space)"]
    return result, lines, warnings


_COMMANDS = {
    "matrix": _cmd_matrix,
    "classify": _cmd_classify,
    "reduct": _cmd_reduct,
    "all-reducts": _cmd_all_reducts,
    "relations": _cmd_relations,
    "audit": _cmd_audit,
    "covering": _cmd_covering,
}


def run(config: RunConfig, out=None) -> int:
    """Execute one subcommand and write its report to ``out``."""
    out = out if out is not None else sys.stdout
    loaded = _load(config)
    result, lines, warnings = _COMMANDS[config.command](loaded, config)
    if config.fmt == "json":
        report = {
            "command": config.command,
            "input": config.path,
            "attributes": list(loaded.names),
            "result": result,
            "warnings": warnings,
        }
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")
        for warning in warnings:
            out.write(f"warning: {warning}\n")
    return 0


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit 2; here that code means an
    internal invariant failed, so usage errors leave with 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        dest="fmt",
        help="output format (default: text)",
    )
    common.add_argument(
        "--id-col",
        action="store_true",
        help="treat the first CSV column as object labels",
    )
    common.add_argument(
        "--kind",
        choices=("table", "family"),
        help="input kind; inferred from the extension when omitted "
        "(.json reads as a family, anything else as a table)",
    )
    common.add_argument("input", help="path to a CSV table or JSON family")

    parser = _Parser(
        prog="reducts",
        description="Attribute reduction over categorical tables and set families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "matrix", parents=[common], help="print the discernibility matrix"
    )
    sub.add_parser(
        "classify",
        parents=[common],
        help="classify attributes as core, relatively necessary, or unnecessary",
    )
    reduct = sub.add_parser(
        "reduct", parents=[common], help="construct one reduct"
    )
    reduct.add_argument(
        "--algo", choices=("ea", "yao"), default="ea", help="construction algorithm"
    )
    reduct.add_argument(
        "--select",
        choices=("first", "freq"),
        default="first",
        help="attribute selection policy",
    )
    reduct.add_argument(
        "--no-minimize",
        action="store_true",
        help="skip the final minimization pass (ea only)",
    )
    reduct.add_argument(
        "--verbose", action="store_true", help="include the step-by-step trace"
    )
    all_reducts = sub.add_parser(
        "all-reducts", parents=[common], help="enumerate every reduct"
    )
    all_reducts.add_argument(
        "--max-attrs",
        type=int,
        help=f"attribute cap for enumeration (default: {ORACLE_CAP})",
    )
    relations = sub.add_parser(
        "relations",
        parents=[common],
        help="survey refinement, equivalence, and coupling between attributes",
    )
    relations.add_argument(
        "--excludes",
        action="append",
        default=[],
        metavar="C->a",
        help='exclusion query such as "a1,a2->a3"; repeatable',
    )
    audit = sub.add_parser(
        "audit", parents=[common], help="measure the cataloged claims on a table"
    )
    audit.add_argument(
        "--max-attrs",
        type=int,
        help=f"attribute cap for the audit (default: {AUDIT_CAP})",
    )
    sub.add_parser(
        "covering",
        parents=[common],
        help="describe each attribute inside the covering space of the family",
    )
    return parser


def _parse_exclusion(query: str) -> tuple[tuple[str, ...], str]:
    left, sep, right = query.partition("->")
    target = right.strip()
    if not sep or not target:
        raise InputError(
            f'exclusion query {query!r} must look like "a1,a2->a3"'
        )
    given = tuple(p.strip() for p in left.split(",") if p.strip())
    return given, target


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    kind = args.kind
    if kind is None:
        kind = "family" if args.input.lower().endswith(".json") else "table"
    policy = SelectionPolicy(getattr(args, "select", "first"))
    queries = tuple(
        _parse_exclusion(q) for q in getattr(args, "excludes", [])
    )
    return RunConfig(
        path=args.input,
        kind=kind,
        command=args.command,
        policy=policy,
        algorithm=getattr(args, "algo", "ea"),
        minimize=not getattr(args, "no_minimize", False),
        verbose=getattr(args, "verbose", False),
        max_attrs=getattr(args, "max_attrs", None),
        fmt=args.fmt,
        id_col=args.id_col,
        exclusion_queries=queries,
    )


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return run(_config_from_args(args))
    except SystemExit as exc:
        return int(exc.code or 0)
    except InputError as err:
        print(f"reducts: error: {err}", file=sys.stderr)
        return 1
    except InvariantViolation as err:
        print(f"reducts: internal check failed: {err}", file=sys.stderr)
        return 2
    except ResourceLimitError as err:
        print(f"reducts: refusing to run: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
