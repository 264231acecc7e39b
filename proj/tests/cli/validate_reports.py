# Copyright 2026 The qclone Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every qclone subcommand and validates the JSON reports against the schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

INVOCATIONS = [
    (["demo", "--n", "3", "--seed", "11"], 0),
    (["demo", "--n", "1", "--psi", "-i"], 0),
    (["demo", "--n", "2", "--target", "2", "--variant", "rotated"], 0),
    (["audit", "--n", "1"], 0),
    (["audit", "--n", "3"], 0),
    (["iterate", "--k", "2", "--seed", "5"], 0),
    (["variants", "--n", "3"], 0),
    (["variants", "--n", "4"], 0),
    (["compile", "--n", "3"], 1),
    (["compile", "--n", "1"], 0),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0

    def check(label, proc, expected_code, text):
        nonlocal failures
        try:
            validator.validate(json.loads(text))
            ok = proc.returncode == expected_code
            detail = "" if ok else f" (exit {proc.returncode}, expected {expected_code})"
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            ok, detail = False, f" ({str(e).splitlines()[0]})"
        print(f"{'PASS' if ok else 'FAIL'} {label}{detail}")
        failures += not ok

    for args, code in INVOCATIONS:
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        check(" ".join(args), proc, code, proc.stdout)

    with tempfile.TemporaryDirectory() as tmp:
        csv = Path(tmp) / "sweep.csv"
        proc = subprocess.run([binary, "sweep", "--n", "2", "--points", "11", "--out", str(csv)],
                              capture_output=True, text=True)
        check("sweep --out", proc, 0, proc.stdout)

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
