"""End-to-end checks of the command-line tool: exit codes, output formats,
determinism and the steady-state JSON schema."""
import csv
import io
import json
import subprocess
import sys

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def expect(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


# Exit codes.
expect("pass exits 0", run("verify", "r-properties", "--max-index", "2").returncode == 0)
expect("mutated table exits 1",
       run("verify", "r-properties", "--max-index", "2", "--flip-sign", "1,1,0,2,0,1").returncode == 1)
expect("unknown suite exits 2", run("verify", "nonsense").returncode == 2)
expect("out of range bound exits 2", run("verify", "tetrahedron", "--max-mode", "40").returncode == 2)
expect("malformed list exits 2", run("verify", "hat-relation", "--n", "2", "--alpha", "1,x").returncode == 2)
expect("non-basic sector exits 2", run("steady-state", "--n", "2", "--L", "3", "--m", "2,0").returncode == 2)
expect("missing multiplicity exits 2", run("steady-state", "--n", "2", "--L", "3").returncode == 2)
r = run("steady-state", "--n", "2", "--L", "3", "--m", "2,1", "--cutoff", "0", "--max-cutoff", "0")
expect("unstable cutoff exits 1 with a hint", r.returncode == 1 and "--max-cutoff" in r.stderr, r.stderr)

# Text table.
r = run("steady-state", "--n", "2", "--L", "3", "--m", "2,1", "--cross-check")
lines = r.stdout.splitlines()
expect("text has (10,10,01) -> 1", "1,0|1,0|0,1  1" in lines)
expect("text has (00,20,01) -> 2", "0,0|2,0|0,1  2" in lines)
expect("text sum is 30", "sum 30" in lines)
expect("oracle agrees", "oracle agrees" in lines)

# CSV.
r = run("steady-state", "--n", "2", "--L", "3", "--m", "2,1", "--format", "csv")
rows = list(csv.reader(io.StringIO(r.stdout)))
expect("csv header", rows[0] == ["configuration", "probability"])
expect("csv rows", len(rows) == 19 and sum(int(p) for _, p in rows[1:]) == 30)

# JSON against the schema, for a few sectors.
with open(SCHEMA) as f:
    schema = json.load(f)
for args in (["2", "3", "2,1"], ["1", "4", "2"], ["3", "3", "1,1,1"]):
    r = run("steady-state", "--n", args[0], "--L", args[1], "--m", args[2], "--format", "json", "--cross-check")
    try:
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema)
        ok = doc["oracle_agrees"] and sum(int(x["probability"]) for x in doc["rows"]) == int(doc["normalization"])
        expect(f"json schema n={args[0]} L={args[1]} m={args[2]}", ok)
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        expect(f"json schema n={args[0]} L={args[1]} m={args[2]}", False, str(e))

bad = {"n": 2, "L": 3, "m": [2, 1], "cutoff": 1, "rows": [{"config": "1,0|x", "probability": 1}],
       "sum": 1, "normalization": 30}
try:
    jsonschema.validate(bad, schema)
    expect("schema rejects a malformed config", False)
except jsonschema.ValidationError:
    expect("schema rejects a malformed config", True)

# Report JSON.
r = run("verify", "q0-limit", "--max-index", "2", "--format", "json")
doc = json.loads(r.stdout)
expect("report json fields", doc["suite"] == "q0-limit" and doc["status"] == "pass" and doc["checked"] > 0
       and "timing_ms" not in doc)
r = run("verify", "r-properties", "--max-index", "2", "--flip-sign", "1,1,0,2,0,1", "--format", "json")
doc = json.loads(r.stdout)
expect("failing report carries residuals",
       doc["status"] == "fail" and doc["failures"] and all(f["residual"] not in ("", "0") for f in doc["failures"]))
locs = [f["location"] for f in doc["failures"]]
expect("failures sorted by location", locs == sorted(locs))

# Determinism: identical invocations, identical bytes.
for args in (["steady-state", "--n", "2", "--L", "4", "--m", "2,2", "--format", "json"],
             ["verify", "hat-relation", "--n", "2", "--max-occupancy", "1", "--format", "json"],
             ["verify", "intertwining", "--flip-sign", "1,1,0,2,0,1", "--max-boundary", "2", "--max-in", "2",
              "--max-green", "2", "--m", "1", "--n", "1"]):
    a, b = run(*args), run(*args)
    expect("deterministic " + " ".join(args[:2]), a.stdout == b.stdout and a.returncode == b.returncode)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
