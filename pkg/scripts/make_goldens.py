"""Regenerate tests/golden/* from the current CLI.  Review the diff before committing."""

import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"


def run_case(case):
    proc = subprocess.run(
        [sys.executable, "-m", "valchain.cli", *case["argv"]],
        cwd=ROOT / case["cwd"], capture_output=True, env={"PATH": "", "PYTHONHASHSEED": "0"},
    )
    return proc.returncode, proc.stdout


def main():
    for case in json.loads((GOLDEN / "cases.json").read_text()):
        code, out = run_case(case)
        if code != case["exit"]:
            sys.exit(f"{case['name']}: exit {code}, expected {case['exit']}")
        (GOLDEN / case["output"]).write_bytes(out)
        print(f"{case['name']}: {len(out)} bytes")


if __name__ == "__main__":
    main()
