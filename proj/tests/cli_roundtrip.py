"""Black-box checks of the command line tool: determinism, slope fitting,
and exit codes. Usage: cli_roundtrip.py <path-to-binary>."""

import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
failures = []


def run(*args, expect=0):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    if p.returncode != expect:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, want {expect}\n{p.stderr}")
    return p


def check(name, ok, detail=""):
    print(f"{'pass' if ok else 'FAIL'}  {name}  {detail}")
    if not ok:
        failures.append(name)


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    # oracle CSV is reproducible bit for bit
    a, b = tmp / "a.csv", tmp / "b.csv"
    args = ["oracle", "--epsilon", "1", "--tmin", "580", "--tmax", "2000",
            "--dt", "1", "--record-every", "10", "--k-list", "1", "2",
            "--s-list", "1", "--tau", "0.5"]
    run(*args, "--output", str(a))
    run(*args, "--output", str(b))
    check("oracle determinism", a.read_bytes() == b.read_bytes())

    # fitted growth exponent of the k=1 weighted norm
    p = run("fit", "--input", str(a), "--column", "bracket_s1",
            "--window", "580", "2000")
    slope = float(p.stdout.split()[1])
    check("bracket_s1 slope", abs(slope - 1.0) < 0.05, f"slope={slope:.4f}")

    # simulate twice with the same seed: identical series and state dumps
    c, d = tmp / "c.csv", tmp / "d.csv"
    args = ["simulate", "--potential", "traveling_wave", "--epsilon", "1",
            "--N", "32", "--dt", "0.01", "--tmax", "2", "--record-every", "50",
            "--seed", "7"]
    run(*args, "--output", str(c))
    run(*args, "--output", str(d))
    same = c.read_bytes() == d.read_bytes() and (
        Path(str(c) + ".state.csv").read_bytes()
        == Path(str(d) + ".state.csv").read_bytes())
    check("simulate determinism", same)

    # usage errors
    check("unknown flag", run("simulate", "--frobnicate", expect=2).returncode == 2)
    check("unknown column", run("fit", "--input", str(a), "--column", "nope",
                                "--window", "0", "1", expect=2).returncode == 2)
    check("missing input", run("fit", "--input", str(tmp / "no.csv"),
                               "--column", "t", "--window", "0", "1",
                               expect=2).returncode == 2)

if failures:
    print("\n".join(failures))
    sys.exit(1)
sys.exit(0)
