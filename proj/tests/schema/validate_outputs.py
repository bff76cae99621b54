"""Runs the CLI and validates every JSON artifact against the shipped schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator


def load_validators(schema_dir):
    validators = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        Draft202012Validator.check_schema(schema)
        validators[path.name.removesuffix(".schema.json")] = Draft202012Validator(schema)
    return validators


def run(cli, args, expect_code):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    if proc.returncode != expect_code:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {expect_code}\n{proc.stderr}")
    return proc


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    validators = load_validators(schema_dir)
    unit = "0,0,0,1,1,0"
    failures = 0

    def check(kind, document, label):
        nonlocal failures
        errors = sorted(validators[kind].iter_errors(document), key=lambda e: list(e.path))
        for err in errors:
            print(f"FAIL {label}: {list(err.path)}: {err.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        out = run(cli, ["jarnik", "--frame", unit, "--n", "10000", "--c", "0.01", "--verify"], 0)
        check("broken_line", json.loads(out.stdout), "jarnik unit frame")
        out = run(cli, ["jarnik", "--frame", "0,0,3,1,1,-2", "--n", "500", "--c", "1/20"], 0)
        check("broken_line", json.loads(out.stdout), "jarnik skew frame without verification")

        out = run(cli, ["cf-suitable", "--alpha", "isqrt:2", "--eps", "0.3", "--bound", "1000000"], 0)
        check("suitable_triangle", json.loads(out.stdout), "cf-suitable found")
        out = run(cli, ["cf-suitable", "--alpha", "golden", "--eps", "0.2", "--bound", "1000"], 0)
        check("suitable_triangle", json.loads(out.stdout), "cf-suitable not found")

        curve = tmp / "curve.json"
        run(cli, ["synth", "--series", "geometric:1/2", "--stages", "3", "--out", str(curve)], 0)
        document = json.loads(curve.read_text())
        check("curve", document, "synth geometric 1/2")
        document["stages"][0]["q"] = 0
        document["vertices"][0]["x"]["den"] = "0"
        if validators["curve"].is_valid(document):
            print("FAIL corrupted curve was accepted")
            failures += 1
        else:
            print("ok   corrupted curve rejected")
        curve2 = tmp / "curve2.json"
        run(cli, ["synth", "--series", "list:1/3,1/5", "--stages", "2", "--admissible", "list:7,500,90000,2000000",
                  "--out", str(curve2)], 0)
        check("curve", json.loads(curve2.read_text()), "synth listed series and admissible set")

        err = run(cli, ["synth", "--series", "geometric:1/2", "--stages", "1", "--admissible", "list:1,2",
                        "--out", str(tmp / "x.json")], 2)
        check("error", json.loads(err.stderr), "search exhausted error")
        err = run(cli, ["jarnik", "--frame", "0,0,1,1,2,2", "--n", "10"], 1)
        check("error", json.loads(err.stderr), "degenerate frame error")
        err = run(cli, ["cf-suitable", "--alpha", "3/2", "--eps", "0.2", "--bound", "10"], 1)
        check("error", json.loads(err.stderr), "alpha outside (0,1)")

    print(f"{failures} schema failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
