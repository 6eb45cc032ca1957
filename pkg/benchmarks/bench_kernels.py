"""Compare the numba kernels against the numpy fallback.

Each backend runs in its own interpreter because the switch is read at import
time (``PLANDEC_NO_NUMBA=1`` selects the fallback). The first numba call pays
for compilation, so it is timed separately from the steady-state runs.

    python benchmarks/bench_kernels.py --repeat 5
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from plandec import kernels

cfg = json.loads(sys.argv[1])
rng = np.random.default_rng(cfg["seed"])

def segments(s):
    seg = rng.integers(0, 1 << 20, size=(s, 4), dtype=np.int64)
    owner = np.stack([np.arange(s), np.zeros(s, dtype=np.int64)], axis=1)
    return seg, owner

def chords(m, n):
    c = np.sort(rng.integers(0, n, size=(m, 2)), axis=1)
    return c[c[:, 0] != c[:, 1]]

def masks(n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj

cases = {
    "segment_pairs": lambda: (lambda a: kernels.segment_pairs(*a), segments(cfg["segments"])),
    "interleavings": lambda: (lambda a: kernels.interleavings(a), chords(cfg["chords"], 4 * cfg["chords"])),
    "treewidth_dp": lambda: (lambda a: kernels.treewidth_dp(a, cfg["tw_n"]), masks(cfg["tw_n"], 0.3)),
}
out = {"backend": kernels.backend()}
for name, make in cases.items():
    fn, arg = make()
    t0 = time.perf_counter()
    first = fn(arg)
    t1 = time.perf_counter()
    times = []
    for _ in range(cfg["repeat"]):
        s = time.perf_counter()
        fn(arg)
        times.append(time.perf_counter() - s)
    if name == "treewidth_dp":
        check = int(first)
    else:
        check = int(np.asarray(first[0]).shape[0])
    out[name] = {"first": t1 - t0, "best": min(times), "check": check}
print(json.dumps(out))
"""


def run(backend: str, cfg: dict) -> dict:
    env = dict(os.environ)
    env.pop("PLANDEC_NO_NUMBA", None)
    if backend == "numpy":
        env["PLANDEC_NO_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, json.dumps(cfg)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--segments", type=int, default=3000)
    ap.add_argument("--chords", type=int, default=3000)
    ap.add_argument("--tw-n", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = {"segments": args.segments, "chords": args.chords, "tw_n": args.tw_n,
           "repeat": args.repeat, "seed": args.seed}
    results = {b: run(b, cfg) for b in ("numba", "numpy")}
    if results["numba"]["backend"] != "numba":
        print("numba is not importable here; both runs used the fallback")
    print(f"{'kernel':<15}{'numpy best':>12}{'numba best':>12}{'numba 1st':>12}{'speedup':>9}  agree")
    for name in ("segment_pairs", "interleavings", "treewidth_dp"):
        a, b = results["numpy"][name], results["numba"][name]
        speed = a["best"] / b["best"] if b["best"] > 0 else float("inf")
        print(f"{name:<15}{a['best']:>11.4f}s{b['best']:>11.4f}s{b['first']:>11.3f}s{speed:>8.1f}x  "
              f"{a['check'] == b['check']}")


if __name__ == "__main__":
    main()
