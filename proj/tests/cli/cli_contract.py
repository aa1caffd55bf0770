"""Black-box checks of the command line: exit codes, determinism, schema."""
import json
import subprocess
import sys
import tempfile
import os

import jsonschema

BINARY, SCHEMA = sys.argv[1], sys.argv[2]
with open(SCHEMA) as f:
    schema = json.load(f)

failures = []


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=600)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def validated(result, what):
    try:
        doc = json.loads(result.stdout)
        jsonschema.validate(doc, schema)
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        expect(False, f"{what}: {e}")
        return None


r = run("hochschild", "--p", "2", "--coefficients", "restricted-d", "--max-degree", "3", "--format", "json")
expect(r.returncode == 0, "restricted-d at p=2 exits 0")
doc = validated(r, "restricted-d report")
if doc:
    ranks = [d["free_rank"] for d in doc["reports"][0]["degrees"]]
    expect(ranks == [2, 0, 0], f"restricted-d ranks {ranks}")

r = run("hochschild", "--p", "2", "--coefficients", "structure", "--max-degree", "3", "--format", "json")
expect(r.returncode == 0, "structure at p=2 exits 0")
doc = validated(r, "structure report")
if doc:
    ranks = [d["free_rank"] for d in doc["reports"][0]["degrees"]]
    expect(ranks == [2, 2, 2], f"structure ranks {ranks}")

for args in (["hochschild", "--coefficients", "structure"],
             ["resolution-check", "--p", "14"],
             ["azumaya", "--p", "4"],
             ["identities", "--p", "3", "--samples", "0"]):
    r = run(*args)
    expect(r.returncode == 2, " ".join(args) + " exits 2")

expect(run("resolution-check", "--p", "5").returncode == 0, "resolution-check p=5 exits 0")
expect(run("reduced-complex", "--p", "3", "--max-degree", "4").returncode == 0, "reduced-complex exits 0")
expect(run("two-sided", "--p", "2", "--max-degree", "2").returncode == 0, "two-sided exits 0")

ids = ["identities", "--p", "3", "--samples", "100", "--seed", "42", "--format", "json"]
a, b = run(*ids), run(*ids)
expect(a.returncode in (0, 1) and a.stdout == b.stdout, "identities output is byte-identical for one seed")
validated(a, "identities report")

r = run("report", "--all", "--p", "2,3", "--format", "json")
expect(r.returncode in (0, 1), "report --all exits 0 or 1")
doc = validated(r, "aggregate report")
if doc:
    expect(doc["verdict"] == (r.returncode == 0), "verdict agrees with exit code")
    expect(sorted({rep["p"] for rep in doc["reports"]}) == [2, 3], "aggregate covers both primes")

r = run("report", "--all", "--p", "2", "--format", "table")
expect(r.returncode in (0, 1) and "verdict:" in r.stdout, "table format renders")

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "out.json")
    r = run("azumaya", "--p", "3", "--points", "0,1,2", "--format", "json", "--output", path)
    expect(r.returncode == 0 and r.stdout == "", "--output writes to the file only")
    with open(path) as f:
        doc = json.load(f)
    jsonschema.validate(doc, schema)
    expect(doc["config"]["p"] == [3], "config echoes p")

sys.exit(1 if failures else 0)
