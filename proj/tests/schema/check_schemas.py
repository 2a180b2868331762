"""Validates the CLI's JSON output against the schema files in schemas/.

Usage: check_schemas.py QSHUFFLE_BINARY SCHEMA_DIR
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("element", ["shuffle", "x", "xy"]),
    ("element", ["free-mul", "--expr", "0", "y"]),
    ("element", ["commutator", "--k", "2", "1", "x"]),
    ("element", ["truncate", "--side", "right", "--letter", "y", "--expr", "xy + q*xx"]),
    ("classify", ["classify", "1", "x", "xyxyx", "xxyyx", "xxyx"]),
    ("verify", ["verify", "--family", "P4.xcomm1.1", "--max", "2"]),
    ("verify", ["verify", "--family", "A.11", "--params", "1,2"]),
    ("verify", ["series", "--identity", "S6.5.2", "--order", "3"]),
    ("series", ["series", "--name", "W+", "--order", "3", "--neg"]),
    ("catalog", ["catalog"]),
    ("sweep", ["verify-all", "--bound", "1", "--order", "2"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    )
    failures = 0
    for name, args in CASES:
        schema = schemas[f"{name}.schema.json"]
        proc = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.Draft202012Validator(schema, registry=registry).validate(json.loads(proc.stdout))
        except jsonschema.ValidationError as e:
            print(f"FAIL {label}: {e.message}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
