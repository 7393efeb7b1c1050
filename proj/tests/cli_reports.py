#!/usr/bin/env python3
"""Runs the CLI on the bundled maps: schema validation, exit codes, byte-identical reruns."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    (["check", "makar_limanov.json"], 0),
    (["check", "identity.json"], 0),
    (["check", "missing_q.json"], 1),
    (["invert", "quadratic_pair.json"], 0),
    (["invert", "makar_limanov.json"], 1),
    (["invert", "makar_limanov.json", "--translate", "1", "1", "--order", "8"], 0),
    (["invert", "elementary_composition.json", "--order", "12", "--window", "4"], 0),
    (["exceptional", "identity.json"], 0),
    (["exceptional", "shear.json"], 0),
    (["exceptional", "elementary_composition.json"], 0),
    (["exceptional", "quadratic_pair.json"], 0),
    (["exceptional", "makar_limanov.json"], 0),
    (["exceptional", "makar_limanov_printed.json", "--seed", "7"], 0),
    (["fibers", "makar_limanov.json", "--k", "3"], 0),
    (["fibers", "makar_limanov.json", "--k", "0", "--box", "2"], 0),
    (["fibers", "shear.json", "--k", "1+i", "--box", "2", "--ring-m", "2"], 0),
    (["verify", "makar_limanov.json", "dist", "--box", "2"], 0),
    (["verify", "makar_limanov.json", "dhat", "--box", "1"], 3),
    (["verify", "makar_limanov.json", "bounds", "--box", "6"], 0),
    (["verify", "makar_limanov.json", "bounds", "--box", "6", "--curve-source", "computed"], 3),
    (["verify", "identity.json", "dist", "--box", "1"], 0),
    (["check", "makar_limanov.json", "--order", "0"], 1),
]


def main() -> int:
    binary, schema_path, maps = Path(sys.argv[1]), Path(sys.argv[2]), Path(sys.argv[3])
    validator = jsonschema.Draft202012Validator(json.loads(schema_path.read_text()))
    failures = 0
    for args, expected in CASES:
        argv = [str(binary), args[0], str(maps / args[1]), *args[2:], "--json"]
        runs = [subprocess.run(argv, capture_output=True, timeout=600) for _ in range(2)]
        label = " ".join(args)
        problems = []
        if runs[0].returncode != expected:
            problems.append(f"exit {runs[0].returncode}, expected {expected}")
        if runs[0].stdout != runs[1].stdout:
            problems.append("reports differ between identical runs")
        try:
            report = json.loads(runs[0].stdout)
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            problems += [f"schema: {'/'.join(map(str, e.path))}: {e.message[:200]}" for e in errors[:5]]
            if "exit_status" in report and report["exit_status"] != runs[0].returncode:
                problems.append("exit_status field disagrees with the process exit code")
        except json.JSONDecodeError as e:
            problems.append(f"stdout is not JSON: {e}")
        print(("ok   " if not problems else "FAIL ") + label)
        for p in problems:
            print("     " + p)
        failures += bool(problems)
    print(f"{len(CASES) - failures}/{len(CASES)} CLI cases passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
