"""Run the CLI over the fixtures and validate every JSON report against the schema.

usage: validate.py <cli> <fixture dir> <schema>
"""
import json
import subprocess
import sys

import jsonschema


def main():
    cli, fx, schema_path = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    runs = [
        ["analyze", f"{fx}/{s}.poset", f"{fx}/{s}.labels"] for s in ("chain3", "diamond", "b3", "b4", "circle")
    ]
    for lam in ("5", "3,1", "2,1,1", "1,1,1,1"):
        for sub in ("report", "cancel", "mobius", "homology"):
            runs.append(["multiset", "--lambda", lam, sub])
    runs.append(["multiset", "--lambda", "2,2,2", "cancel", "--force"])
    runs.append(["puzzle", "--max-total", "20", "--max-parts", "5"])
    runs.append(["puzzle", "--max-total", "20", "--max-parts", "5", "--distinct"])

    failed = 0
    for args in runs:
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode not in (0, 2):
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failed += 1
            continue
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e})")
            failed += 1
            continue
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        # Exit 2 must mean a failed check, and exit 0 a passing report.
        if (proc.returncode == 2) != (report.get("status") == "violation"):
            errors.append(f"exit {proc.returncode} with status {report.get('status')}")
        if errors:
            failed += 1
            print(f"FAIL {label}")
            for e in errors[:5]:
                print("   ", getattr(e, "message", e), list(getattr(e, "path", [])))
        else:
            print(f"ok   {label}")
    print(f"{len(runs) - failed}/{len(runs)} reports valid")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
