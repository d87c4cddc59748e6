#!/usr/bin/env python3
"""Measure audited-claim disagreement rates over random tables.

Also counts how often the substitute-family loop needs its final trim:
the raw loop output always hits the family, but whether it is already
minimal is a measured property, not an assumed one.
"""

from __future__ import annotations

import argparse
import random
from collections import Counter

from reducts.discern import discernibility_matrix
from reducts.model import InformationSystem
from reducts.reducers import ReductStatus, SelectionPolicy, ea_reduce, verify_reduct
from reducts.relations import audit_theorems


def random_system(rng: random.Random, max_objects: int, max_attrs: int) -> InformationSystem:
    n_attrs = rng.randint(1, max_attrs)
    n_objects = rng.randint(1, max_objects)
    rows = tuple(
        tuple(rng.randrange(3) for _ in range(n_attrs)) for _ in range(n_objects)
    )
    return InformationSystem(
        tuple(f"a{i + 1}" for i in range(n_attrs)),
        rows,
        tuple(str(i + 1) for i in range(n_objects)),
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--systems", type=int, default=400)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-objects", type=int, default=8)
    parser.add_argument("--max-attrs", type=int, default=6)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    instances: Counter[str] = Counter()
    disagreements: Counter[str] = Counter()
    raw_status: Counter[str] = Counter()
    sample: dict[str, str] = {}

    for _ in range(args.systems):
        system = random_system(rng, args.max_objects, args.max_attrs)
        report = audit_theorems(system)
        for row in report.instances:
            instances[row.claim] += 1
            if not row.agree:
                disagreements[row.claim] += 1
                sample.setdefault(row.claim, f"{row.subject}: {row.counterexample}")

        family = discernibility_matrix(system).family
        for policy in (SelectionPolicy.FIRST, SelectionPolicy.MAX_FREQUENCY):
            raw, _ = ea_reduce(family, policy, minimize=False)
            raw_status[verify_reduct(family, raw).status.value] += 1

    print(f"{args.systems} random tables, seed {args.seed}, "
          f"|U| <= {args.max_objects}, |A| <= {args.max_attrs}")
    print()
    width = max(len(c) for c in instances)
    for claim in sorted(instances):
        bad = disagreements.get(claim, 0)
        rate = f"{bad}/{instances[claim]}"
        print(f"{claim:<{width}}  {rate:>12}  disagreements")
    print()
    if sample:
        print("first counterexample per disagreeing claim:")
        for claim in sorted(sample):
            print(f"  {claim} at {sample[claim]}")
        print()

    total = sum(raw_status.values())
    already = raw_status.get(ReductStatus.VALID.value, 0)
    print(f"untrimmed loop output: {already}/{total} runs already minimal")
    for status, count in sorted(raw_status.items()):
        print(f"  {status}: {count}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
