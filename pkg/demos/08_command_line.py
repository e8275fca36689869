"""
Using the command line
======================

Every computation is also available as ``chiygenus <command>`` (or
``python3 -m chiygenus``). Output is JSON with rationals as strings.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def chiygenus(*args):
    done = subprocess.run([sys.executable, "-m", "chiygenus", *args], capture_output=True, text=True)
    print("$ chiygenus", " ".join(args), f"(exit {done.returncode})")
    print(done.stdout.rstrip() or done.stderr.rstrip())
    return done


with tempfile.TemporaryDirectory() as tmp:
    p4 = Path(tmp, "p4.json")
    p4.write_text(json.dumps({"kind": "projective_space", "dim": 4}))
    k3 = Path(tmp, "k3.json")
    k3.write_text(json.dumps({"kind": "hodge_diamond", "dim": 2, "h": [[1, 0, 1], [0, 20, 0], [1, 0, 1]]}))

    chiygenus("chi-y", str(p4), "--at", "-1", "--format", "text")
    chiygenus("class", str(p4), "--specialize", "todd", "--format", "text")
    chiygenus("reconstruct", "--dim", "2", "--samples", "0=2", "1=-16", "-1=24", "--format", "text")
    chiygenus("derived", str(p4), "--lw", "4")
    chiygenus("derived", str(k3), "--higher-euler", "--format", "text")
    chiygenus("catalog", "--dim", "1", "--format", "text")

    # a curve with chi_a != e/2 is rejected with exit code 3
    bad = Path(tmp, "bad.json")
    bad.write_text(json.dumps({"kind": "invariants", "dim": 1, "chi_a": 2, "euler": 2}))
    chiygenus("chi-y", str(bad))

chiygenus("verify", "--quick")
