# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2026 The vlcsim authors
"""Runs the CLI once per format and checks the exported tables.

JSON tables must validate against the shipped schema and carry one cell per column;
CSV tables must read back through the csv module with the header's column count.
"""

import csv
import json
import pathlib
import subprocess
import sys

import jsonschema


def run(cli, out, fmt):
    args = [cli, "--experiment", "rms-adr", "--ensemble", "4", "--threads", "2", "--format", fmt, "--out", str(out)]
    done = subprocess.run(args, capture_output=True, text=True, check=True)
    return [pathlib.Path(p) for p in done.stdout.split()]


def main():
    cli, schema_path, out = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())

    paths = run(cli, out, "json")
    assert paths, "no JSON tables written"
    for p in paths:
        doc = json.loads(p.read_text())
        jsonschema.validate(doc, schema)
        width = len(doc["columns"])
        assert all(len(r) == width for r in doc["rows"]), p

    paths = run(cli, out, "csv")
    assert paths, "no CSV tables written"
    for p in paths:
        lines = [l for l in p.read_text(encoding="utf-8").splitlines() if not l.startswith("#")]
        rows = list(csv.reader(lines))
        width = len(rows[0])
        assert width > 1 and all(len(r) == width for r in rows), p
    print(f"checked {len(paths)} tables per format")


if __name__ == "__main__":
    main()
