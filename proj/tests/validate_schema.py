"""Runs hopfgrow commands with --format json and validates each output against the report schema."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["list-examples"],
    ["normalize", "-e", "taft", "-p", "p=3", "-x", "y g y"],
    ["delta", "-e", "qplane", "-p", "v=2", "-x", "y1 y2 + 1/2 g"],
    ["delta", "-e", "L", "-x", "y1"],
    ["primitives", "-e", "K", "--degree", "3", "--group-bound", "3"],
    ["primitives", "-e", "qplane", "-p", "v=1", "--weight", "g"],
    ["invariants", "-e", "ex3_13", "-p", "s=2"],
    ["invariants", "-e", "L", "-p", "v=2", "-p", "p=3", "-p", "N=3", "-p", "lambda1=zeta", "-p", "beta=0"],
    ["bounds", "-e", "ex3_13", "-p", "s=3"],
    ["bounds", "-e", "K", "-p", "v=1", "-p", "lambda=1", "-p", "tau=2"],
    ["growth", "-e", "K", "-p", "v=2"],
    ["growth", "-e", "taft", "-p", "p=5", "--nmax", "8"],
    ["check-example", "taft", "-p", "p=5"],
    ["check-example", "qplane", "-p", "v=3"],
    ["check-example", "ex2_7_stub"],
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    extra = sys.argv[3:]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    runs = RUNS + [["bounds", "-f", path] for path in extra]
    failures = 0
    for args in runs:
        proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}")
            for e in errors[:5]:
                print(f"  at {list(e.path)}: {e.message[:300]}")
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
