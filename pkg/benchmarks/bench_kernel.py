"""Compare the compiled and pure-Python product kernels.

Each workload runs in a fresh interpreter per backend (the backend is picked
at import time via VLTWIST_PURE_PYTHON), so caches never leak between
measurements.  The rendered reports must match byte for byte.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--quick | --heavy]
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import statistics
import subprocess
import sys

WORKLOADS = {
    "twist_cocycle_N7": "run_suite('lemma3_3_twist', make_context(order=7))",
    "theorem2_6_general_T_N5": (
        "run_suite('theorem2_6', make_context((Fr(1, 2), Fr(1, 2)), (1, 1), 5),"
        " Extras(beta=[GroupVec(0, 1), GroupVec(2, -1)]))"
    ),
    "hopf_axioms_N4": "run_suite('hopf_axioms', make_context(order=4))",
    "lemma3_1_seed0": "run_suite('lemma3_1', make_context())",
}
HEAVY = {
    "theorem2_6_general_T_N6": (
        "run_suite('theorem2_6', make_context((Fr(1, 2), Fr(1, 2)), (1, 1), 6),"
        " Extras(beta=[GroupVec(0, 1), GroupVec(2, -1)]))"
    ),
}
QUICK = {
    "twist_cocycle_N5": "run_suite('lemma3_3_twist', make_context(order=5))",
    "theorem2_6_N4": "run_suite('theorem2_6', make_context(order=4))",
}

_RUNNER = """
import json, sys, time
from fractions import Fraction as Fr
from vltwist import kernel
from vltwist.report import render_json
from vltwist.scalars import GroupVec
from vltwist.suites import Extras, run_suite
from vltwist.twist import make_context
t0 = time.perf_counter()
report = {expr}
elapsed = time.perf_counter() - t0
print(json.dumps({{"impl": kernel.IMPLEMENTATION, "seconds": elapsed,
                  "passed": report.passed, "body": render_json(report)}}))
"""


def run_once(expr: str, pure: bool) -> dict:
    env = dict(os.environ, VLTWIST_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run(
        [sys.executable, "-c", _RUNNER.format(expr=expr)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--quick", action="store_true", help="small workloads only")
    p.add_argument("--heavy", action="store_true", help="add the order-6 general-T workload")
    args = p.parse_args(argv)
    workloads = QUICK if args.quick else dict(WORKLOADS, **(HEAVY if args.heavy else {}))

    print(f"{'workload':<26}{'python s':>10}{'compiled s':>12}{'speedup':>9}  parity")
    ok = True
    for name, expr in workloads.items():
        times = {}
        digests = {}
        impls = {}
        for pure in (True, False):
            runs = [run_once(expr, pure) for _ in range(args.repeat)]
            times[pure] = statistics.median(r["seconds"] for r in runs)
            digests[pure] = {hashlib.sha256(r["body"].encode()).hexdigest() for r in runs}
            impls[pure] = runs[0]["impl"]
            ok = ok and all(r["passed"] for r in runs)
        same = len(digests[True] | digests[False]) == 1
        ok = ok and same
        compiled = impls[False] != "python"
        speed = f"{times[True] / times[False]:8.2f}x" if compiled else "     n/a"
        label = f"{times[False]:12.3f}" if compiled else f"{'(not built)':>12}"
        print(f"{name:<26}{times[True]:10.3f}{label}{speed}  {'ok' if same else 'MISMATCH'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
