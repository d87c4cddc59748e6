#!/usr/bin/env python3
"""Drive the CLI over the bundled worked tables and print everything.

Writes the inputs to a temporary directory and calls the console entry
point on them, so the output below is exactly what a user would see.
"""

from __future__ import annotations

import json
import tempfile
from pathlib import Path

from reducts.cli import main

FIVE_BY_FOUR = "\n".join(
    [
        "a1,a2,a3,a4",
        "0,0,0,0",
        "0,0,0,0",
        "1,0,1,0",
        "1,1,0,0",
        "2,1,1,1",
    ]
)

LADDER_FAMILY = [
    ["a3"],
    ["a2", "a3"],
    ["a1", "a2", "a3"],
    ["a1", "a2"],
    ["a1", "a3"],
]

WALKTHROUGH_FAMILY = [
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


def banner(text: str) -> None:
    print()
    print(f"== {text}")
    print()


def run() -> int:
    with tempfile.TemporaryDirectory() as tmp:
        table = Path(tmp) / "five_by_four.csv"
        table.write_text(FIVE_BY_FOUR + "\n")
        ladder = Path(tmp) / "ladder.json"
        ladder.write_text(json.dumps(LADDER_FAMILY))
        walkthrough = Path(tmp) / "walkthrough.json"
        walkthrough.write_text(json.dumps(WALKTHROUGH_FAMILY))

        failures = 0
        banner("five-object table: discernibility matrix")
        failures += main(["matrix", str(table)])
        banner("five-object table: attribute classification")
        failures += main(["classify", str(table)])
        banner("five-object table: all reducts")
        failures += main(["all-reducts", str(table)])
        banner("five-object table: audited claims")
        failures += main(["audit", str(table)])
        banner("five-object table: covering view")
        failures += main(["covering", str(table)])

        banner("ladder family: all reducts")
        failures += main(["all-reducts", str(ladder)])
        banner("ladder family: does {a2} shut a1 out?")
        failures += main(["relations", str(ladder), "--excludes", "a2->a1"])

        banner("nine-member family: substitute-family reduction, traced")
        failures += main(["reduct", str(walkthrough), "--algo", "ea", "--verbose"])
        banner("nine-member family: row-wise reduction for comparison")
        failures += main(["reduct", str(walkthrough), "--algo", "yao", "--verbose"])

    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(run())
