"""End-to-end checks of the klsc binary: reports, exit codes, determinism."""

import json
import os
import subprocess
import sys
import tempfile

KLSC, DATA = sys.argv[1], sys.argv[2]
failures = []


def run(*args):
    p = subprocess.run([KLSC, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def data(name):
    return os.path.join(DATA, name)


def expect(cond, what):
    if not cond:
        failures.append(what)


def report(*args, code=0):
    rc, out, err = run(*args)
    expect(rc == code, f"{args}: exit {rc}, expected {code}; stderr: {err.strip()}")
    return json.loads(out) if rc in (0, 1) and out else None


def coeffs(p):
    assert p["convention"] == "half-degree"
    return p["coeffs"]


r = report("matroid", "kl", "--input", data("u34.json"), "--compare-recursion")
expect(coeffs(r["result"]["P"]) == [1, 2], "U34 P")
expect(r["checks"]["recursion_agrees"]["ok"], "U34 recursion")

r = report("matroid", "z", "--input", data("u34.json"))
expect(coeffs(r["result"]["Z"]) == [1, 6, 6, 1], "U34 Z")

r = report("fan", "g", "--input", data("point.json"))
expect(coeffs(r["result"]["g"]) == [1], "0-polytope g")

r = report("fan", "g", "--input", data("square.json"), "--compare-recursion")
expect(coeffs(r["result"]["g"]) == [1, 1], "square g")

r = report("fan", "ih", "--input", data("four_orthants.json"), "--sections")
expect(r["result"]["global_shape"] == [0, 1, 1, 2], "four orthants")

r = report("coxeter", "kl", "--type", "A3", "--w", "3412", "--v", "e", "--compare-recursion")
expect(coeffs(r["result"]["P"]) == [1, 1], "P_{e,3412}")
expect(r["checks"]["recursion_agrees"]["ok"], "3412 recursion")

r = report("coxeter", "kl", "--input", data("a3_3412.json"))
expect(coeffs(r["result"]["P"]) == [1, 1], "P_{e,3412} from file")

r = report("kls", "--kernel", "coxeter", "--input", data("a3_3412.json"), "--pair", "e,s2s1s3s2")
expect(coeffs(r["result"]["f"][0]["poly"]) == [1, 1], "kls coxeter pair")

r = report("kls", "--kernel", "matroid", "--input", data("u34.json"), "--pair", "{},{0,1,2,3}")
expect(coeffs(r["result"]["f"][0]["poly"]) == [1, 2], "kls matroid pair")
expect(coeffs(r["result"]["Z"][0]["poly"]) == [1, 6, 6, 1], "kls matroid Z")

r = report("kls", "--kernel", "eulerian", "--input", data("square_cone.json"))
expect(all(c["ok"] for c in r["checks"].values()), "eulerian checks")

r = report("matroid", "kl", "--input", data("fano.json"), "--char", "3")
expect(coeffs(r["result"]["P"]) == [1], "Fano mod 3")
r = report("matroid", "kl", "--input", data("fano_matrix.json"), "--char", "2")
expect(coeffs(r["result"]["P"]) != [1], "Fano mod 2")
expect(r["checks"]["p_trivial_criterion"]["ok"], "Fano mod 2 criterion")

# Malformed input and bad flags exit 2 with a location.
with tempfile.TemporaryDirectory() as tmp:
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        f.write('{"ground_set": 3, "bases": [[0, 7]]}')
    rc, _, err = run("matroid", "kl", "--input", bad)
    expect(rc == 2 and "bases[0][1]" in err, f"bad base: {rc} {err}")
    with open(bad, "w") as f:
        f.write('{"dim": 2, "rays": [[1, 0]')
    rc, _, err = run("fan", "g", "--input", bad)
    expect(rc == 2 and "invalid JSON" in err, f"bad JSON: {rc} {err}")
rc, _, _ = run("coxeter", "kl", "--type", "A3", "--w", "3412", "--char", "2")
expect(rc == 2, "non-GKM characteristic")
rc, _, _ = run("matroid", "kl", "--input", data("u34.json"), "--char", "6")
expect(rc == 2, "composite characteristic")
rc, _, _ = run("matroid", "kl", "--input", data("u34.json"), "--degree-bound", "1")
expect(rc == 2, "truncation")
rc, _, _ = run("coxeter", "kl", "--type", "A2", "--w", "1,4")
expect(rc == 2, "generator out of range")
rc, _, _ = run("frobnicate")
expect(rc == 2, "unknown subcommand")

# Identical input gives byte-identical output.
a = run("coxeter", "kl", "--type", "B3", "--w", "s1s2s3s2s1", "--all", "--compare-recursion")
b = run("coxeter", "kl", "--type", "B3", "--w", "s1s2s3s2s1", "--all", "--compare-recursion")
expect(a == b and a[0] == 0, "determinism")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
