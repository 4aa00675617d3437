"""Exit codes and check-example results of the hopfgrow command line tool."""

import os
import subprocess
import sys

EXE = sys.argv[1]
DATA = sys.argv[2]

CASES = [
    # (arguments, expected exit code, environment overrides)
    (["check-example", "ex3_13", "-p", "s=1"], 0, {}),
    (["check-example", "ex3_13", "-p", "s=2"], 0, {}),
    (["check-example", "ex3_13", "-p", "s=3"], 0, {}),
    (["check-example", "ex3_13", "-p", "s=4"], 0, {}),
    (["check-example", "taft", "-p", "p=2"], 0, {}),
    (["check-example", "taft", "-p", "p=3"], 0, {}),
    (["check-example", "taft", "-p", "p=5"], 0, {}),
    (["check-example", "qplane", "-p", "v=1"], 0, {}),
    (["check-example", "qplane", "-p", "v=2"], 0, {}),
    (["check-example", "qplane", "-p", "v=3"], 0, {}),
    (["check-example", "K"], 0, {}),
    (["check-example", "K", "-p", "v=1", "-p", "lambda=1", "-p", "tau=2"], 0, {}),
    (["check-example", "L"], 0, {}),
    (["check-example", "L", "-p", "v=2", "-p", "p=3", "-p", "N=3", "-p", "lambda1=zeta", "-p", "beta=0"], 0, {}),
    (["check-example", "ex2_7_stub"], 0, {}),
    (["check-example", "-f", os.path.join(DATA, "taft3.json")], 0, {}),
    (["check-example", "-f", os.path.join(DATA, "qplane2.json")], 0, {}),
    (["check-example", "-f", os.path.join(DATA, "exterior2.json")], 0, {}),
    (["list-examples"], 0, {}),
    ([], 1, {}),
    (["frobnicate"], 1, {}),
    (["bounds"], 1, {}),
    (["bounds", "-e", "nope"], 1, {}),
    (["bounds", "-e", "taft", "-p", "p=1"], 1, {}),
    (["bounds", "-e", "taft", "-p", "colour=red"], 1, {}),
    (["normalize", "-e", "taft", "-x", "y +* g"], 1, {}),
    (["bounds", "-e", "ex2_7_stub"], 1, {}),
    (["bounds", "-f", "/nonexistent.json"], 1, {}),
    (["bounds", "-e", "L", "-p", "rank=2", "-p", "mu1=1,0", "-p", "lambda1=-1,q1"], 2, {}),
    (["bounds", "-f", os.path.join(DATA, "nonconfluent_L.json")], 2, {}),
    (["invariants", "-f", os.path.join(DATA, "not_hopf.json")], 2, {}),
    (["growth", "-e", "K"], 3, {"HOPFGROW_MAX_WORDS": "300"}),
    (["growth", "-e", "K"], 1, {"HOPFGROW_MAX_WORDS": "lots"}),
]


def main() -> int:
    failures = 0
    for args, code, env in CASES:
        proc = subprocess.run([EXE, *args], capture_output=True, text=True, env={**os.environ, **env})
        label = " ".join(args) + (f" with {env}" if env else "")
        if proc.returncode != code:
            failures += 1
            print(f"FAIL {label}: exit {proc.returncode}, expected {code}\n{proc.stdout[-2000:]}{proc.stderr}")
        else:
            print(f"ok   {label} -> {code}")
    overlap = subprocess.run([EXE, "bounds", "-f", os.path.join(DATA, "nonconfluent_L.json")], capture_output=True, text=True)
    if "y1^2 g2" not in overlap.stderr:
        failures += 1
        print(f"FAIL non-confluence message does not name the overlap: {overlap.stderr}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
