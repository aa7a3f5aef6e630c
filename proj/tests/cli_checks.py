#!/usr/bin/env python3
"""End-to-end checks of the CLI surface: subcommands, formats, exit codes."""

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]

checks = 0


def run(args, stdin=None, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [CLI] + args, input=stdin, capture_output=True, text=True, env=env
    )


def expect(condition, label):
    global checks
    checks += 1
    if not condition:
        print(f"FAILED: {label}")
        sys.exit(1)


# dim: worked values and the census breakdown
result = run(["dim", "--n", "3", "--k", "2", "--l", "1", "--group", "an"])
expect(result.returncode == 0, "dim exits 0")
expect("dim = 9" in result.stdout, "dim (3,2,1,an) = 9")
expect("t=2" in result.stdout and "split" in result.stdout, "dim prints the census")

result = run(["dim", "--n", "2", "--k", "2", "--l", "1", "--group", "sn"])
expect("dim = 4" in result.stdout, "dim (2,2,1,sn) = 4")
result = run(["dim", "--n", "1", "--k", "2", "--l", "1", "--group", "an"])
expect("dim = 1" in result.stdout, "dim (1,2,1,an) = 1")

# partitions listing
result = run(["partitions", "--m", "3", "--max-blocks", "2", "--n", "2"])
lines = result.stdout.strip().splitlines()
expect(len(lines) == 4, "partitions (3,2) lists 4 rows")
expect(lines[0].startswith("{1,2,3}") and "splits(n=2)=yes" in lines[0], "splits flag shown")
result = run(["partitions", "--m", "3", "--max-blocks", "3"])
expect(len(result.stdout.strip().splitlines()) == 5, "partitions (3,3) lists 5 rows")
result = run(["partitions", "--m", "1", "--max-blocks", "1"])
expect(result.stdout.strip().splitlines()[0].startswith("{1}"), "singleton partition row")

# basis streaming, canonical order, document schema
result = run(["basis", "--n", "2", "--k", "2", "--l", "1", "--group", "an"])
docs = [json.loads(line) for line in result.stdout.strip().splitlines()]
expect(len(docs) == 8, "basis (2,2,1,an) streams 8 documents")
expect(docs[0]["entries"] == [[0, 0, 1, 1]], "first element is the plus corner")
expect(docs[0]["provenance"][0]["sign_class"] == "plus", "provenance is attached")
expect(docs[0]["schema_version"] == 1, "schema_version present")

result = run(["basis", "--n", "2", "--k", "0", "--l", "1", "--group", "an"])
docs = [json.loads(line) for line in result.stdout.strip().splitlines()]
expect(len(docs) == 2, "bias basis (k=0) streams 2 documents")
expect(docs[0]["entries"] == [[0, 0, 1, 1]] and docs[1]["entries"] == [[1, 0, 1, 1]],
       "bias columns are e_1 and e_2")

# at n >= 5 the two groups stream identical matrix payloads
sn_docs = run(["basis", "--n", "5", "--k", "2", "--l", "1", "--group", "sn"]).stdout
an_docs = run(["basis", "--n", "5", "--k", "2", "--l", "1", "--group", "an"]).stdout
sn_entries = [json.loads(line)["entries"] for line in sn_docs.strip().splitlines()]
an_entries = [json.loads(line)["entries"] for line in an_docs.strip().splitlines()]
expect(len(sn_entries) == 5 and sn_entries == an_entries,
       "n=5 alternating payloads equal symmetric")

# dense and coo formats
result = run(["basis", "--n", "2", "--k", "2", "--l", "1", "--group", "sn",
              "--format", "dense"])
expect("1 0 0 0" in result.stdout and "0 0 0 1" in result.stdout, "dense grid printed")
result = run(["basis", "--n", "2", "--k", "2", "--l", "1", "--group", "sn", "--format", "coo"])
expect("# element 0 {1,2,3}:unsplit" in result.stdout, "coo header carries provenance")

# weight: one-hot parameters reproduce a basis element
one_hot = "0,0,1,0,0,0,0,0"
result = run(["weight", "--n", "2", "--k", "2", "--l", "1", "--group", "an",
              "--params", one_hot])
doc = json.loads(result.stdout)
expect(doc["kind"] == "weight_matrix", "weight document kind")
expect(doc["entries"] == [[0, 1, 1, 1]], "one-hot weight equals element 2")
expect(doc["parameters"][2]["value"] == [1, 1], "parameter table records the hot index")

# weight from a params file
with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as handle:
    handle.write("1 2 3 4 5 6 7 8\n")
    params_path = handle.name
result = run(["weight", "--n", "2", "--k", "2", "--l", "1", "--group", "an",
              "--params", params_path, "--format", "dense"])
expect(result.stdout == "1 3 5 7\n8 6 4 2\n", "canonical parameters lay out as in the figure")
os.unlink(params_path)

# seeded weights verify and round-trip through the verify subcommand
result = run(["weight", "--n", "2", "--k", "2", "--l", "1", "--group", "an",
              "--seed", "42", "--verify"])
expect(result.returncode == 0, "seeded weight passes --verify")
weight_json = result.stdout
again = run(["weight", "--n", "2", "--k", "2", "--l", "1", "--group", "an",
             "--seed", "42", "--verify"])
expect(again.stdout == weight_json, "seeded weights are reproducible")

result = run(["verify"], stdin=weight_json)
expect(result.returncode == 0 and "equivariant" in result.stdout, "verify accepts the document")

# corrupt one entry of a symmetric-group weight: every orbit here has two
# members, so a single changed entry must violate some commutation.
sn_weight = run(["weight", "--n", "2", "--k", "2", "--l", "1", "--group", "sn",
                 "--seed", "7", "--verify"])
expect(sn_weight.returncode == 0, "seeded sn weight passes --verify")
doc = json.loads(sn_weight.stdout)
row, col, num, den = doc["entries"][0]
num += den  # stays reduced; bump again if it cancelled to zero
if num == 0:
    num += den
doc["entries"][0] = [row, col, num, den]
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
    handle.write(json.dumps(doc))
    corrupt_path = handle.name
result = run(["verify", "--input", corrupt_path])
expect(result.returncode == 4, "corrupted document exits 4")
expect("violated" in result.stdout and "(" in result.stdout, "witness permutation printed")
os.unlink(corrupt_path)

# malformed document: invalid arguments, exit 2
result = run(["verify"], stdin="{\"schema_version\": 9}")
expect(result.returncode == 2, "malformed document exits 2")

# oracle: report plus machine-readable line, exit 0 on success
result = run(["oracle", "--n", "3", "--k", "2", "--l", "1", "--group", "an"])
expect(result.returncode == 0, "oracle exits 0")
expect("dimension:  9" in result.stdout, "oracle reports dimension 9")
report = json.loads(result.stdout.strip().splitlines()[-1])
expect(report["basis_ok"] and report["span_ok"] and report["dimension"] == 9,
       "oracle JSON report")

result = run(["oracle", "--n", "4", "--k", "1", "--l", "1", "--group", "an"])
expect("dimension:  2" in result.stdout, "no splitting at (4,1,1): dimension 2")

# local: factor dims multiply; one factor matches basis
result = run(["local", "--factor", "2,1,1,an", "--factor", "2,1,1,an"])
expect(len(result.stdout.strip().splitlines()) == 16, "two A_2 factors stream 16 documents")
single = run(["local", "--factor", "2,2,1,an"]).stdout
direct = run(["basis", "--n", "2", "--k", "2", "--l", "1", "--group", "an"]).stdout
single_entries = [json.loads(line)["entries"] for line in single.strip().splitlines()]
direct_entries = [json.loads(line)["entries"] for line in direct.strip().splitlines()]
expect(single_entries == direct_entries, "single-factor local equals basis")

# local documents carry their factor specs and verify end to end
local_doc = run(["local", "--factor", "2,1,1,an", "--factor", "3,1,1,an"]).stdout.splitlines()[0]
expect(run(["verify"], stdin=local_doc).returncode == 0, "local document verifies")

# exit codes: invalid arguments
expect(run(["dim", "--k", "2", "--group", "an"]).returncode == 2, "missing --n exits 2")
expect(run(["dim", "--n", "2", "--group", "xx"]).returncode == 2, "bad group exits 2")
expect(run(["weight", "--n", "2", "--k", "2", "--l", "1", "--group", "an",
            "--params", "1,2"]).returncode == 2, "short parameter list exits 2")
expect(run(["weight", "--n", "2", "--k", "2", "--l", "1", "--group", "an"]).returncode == 2,
       "weight without params or seed exits 2")
expect(run(["nonsense"]).returncode == 2, "unknown subcommand exits 2")

# exit codes: resource bound via flag and via environment
expect(run(["basis", "--n", "3", "--k", "8", "--l", "8", "--group", "sn"]).returncode == 3,
       "oversized basis exits 3")
expect(run(["basis", "--n", "2", "--k", "2", "--l", "1", "--group", "sn",
            "--max-size", "4"]).returncode == 3, "--max-size lowers the bound")
expect(run(["basis", "--n", "2", "--k", "2", "--l", "1", "--group", "sn"],
           env_extra={"EQUILAYER_MAX_SIZE": "4"}).returncode == 3,
       "EQUILAYER_MAX_SIZE lowers the bound")

# --float converts on output only; such documents are not accepted back
result = run(["weight", "--n", "2", "--k", "2", "--l", "1", "--group", "an",
              "--params", "1/2,0,0,0,0,0,0,0", "--float"])
doc = json.loads(result.stdout)
expect(doc["encoding"] == "float" and doc["entries"] == [[0, 0, 0.5]],
       "--float emits decimal entries")
expect(run(["verify"], stdin=result.stdout).returncode == 2,
       "float documents are refused by verify")
result = run(["basis", "--n", "2", "--k", "0", "--l", "1", "--group", "an",
              "--format", "dense", "--float"])
expect(result.stdout.splitlines()[1:3] == ["1", "0"], "--float dense output")

# help exits 0
expect(run(["--help"]).returncode == 0, "--help exits 0")

print(f"cli_checks: {checks} checks passed")
