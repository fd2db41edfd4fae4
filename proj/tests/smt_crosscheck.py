#!/usr/bin/env python3
# Copyright 2026 The patc Authors
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

"""Feeds exported SMT-LIB2 scripts to z3 and compares each verdict with the
`; expected:` line written by patc. Exit 0 on agreement, 1 on mismatch,
77 when no solver is available."""

import pathlib
import shutil
import subprocess
import sys


def z3_runner():
    try:
        import z3  # noqa: F401

        def run(path):
            s = z3.Solver()
            s.from_file(str(path))
            return str(s.check())

        return run
    except ImportError:
        pass
    exe = shutil.which("z3")
    if exe is None:
        return None

    def run(path):
        out = subprocess.run([exe, str(path)], capture_output=True, text=True, timeout=60)
        return out.stdout.strip().splitlines()[-1] if out.stdout.strip() else "error"

    return run


def expected(path):
    for line in path.read_text().splitlines():
        if line.startswith("; expected:"):
            return line.split(":", 1)[1].strip()
    return None


def main(argv):
    if len(argv) != 2:
        print("usage: smt_crosscheck.py DIR", file=sys.stderr)
        return 2
    run = z3_runner()
    if run is None:
        print("no SMT solver available")
        return 77
    files = sorted(pathlib.Path(argv[1]).glob("*.smt2"))
    bad = 0
    for f in files:
        want, got = expected(f), run(f)
        if want != got:
            bad += 1
            print(f"mismatch {f.name}: patc says {want}, z3 says {got}")
    print(f"{len(files)} scripts, {bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
