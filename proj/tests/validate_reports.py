"""Validates CLI reports against the published schema and checks exit codes
and byte-identical reruns."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    (["census", "--p", "3", "--q", "2", "--r", "5", "--alpha", "1", "--beta", "1", "--gamma", "0"], 0),
    (["census", "--p", "5", "--q", "2", "--r", "3", "--alpha", "0", "--beta", "1", "--gamma", "1"], 0),
    (["construct-primitive", "--q", "2", "--r", "7"], 0),
    (["construct-primitive", "--q", "3", "--r", "2", "--case", "cyclic-q"], 0),
    (["classify-gl", "--alpha", "3", "--s", "2", "--r", "3"], 0),
    (["classify-gl", "--alpha", "2", "--s", "4", "--r", "5"], 0),
    (["check-bounds"], 0),
    (["check-bounds", "--formula", "transitive-classes", "--n", "4", "--count", "884737"], 0),
    (["--timing", "selftest", "--scale", "quick"], 0),
    (["--max-order", "10", "selftest", "--scale", "full"], 0),
    (["census", "--p", "2", "--q", "2", "--r", "5", "--alpha", "1", "--beta", "1", "--gamma", "0"], 1),
]


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, expected in CASES:
        code, out = run(binary, args)
        report = json.loads(out)
        errors = sorted(validator.iter_errors(report), key=str)
        problems = [e.message for e in errors]
        if code != expected:
            problems.append(f"exit code {code}, expected {expected}")
        if report.get("exit_code") != code:
            problems.append(f"report exit_code {report.get('exit_code')} != process {code}")
        if "--timing" not in args and code != 1:
            again = run(binary, ["--jobs", "1", *args])[1]
            if again != out:
                problems.append("rerun differs")
        status = "ok" if not problems else "FAIL"
        print(f"{status}: {' '.join(args)}")
        for p in problems:
            print(f"    {p}")
        failures += bool(problems)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
