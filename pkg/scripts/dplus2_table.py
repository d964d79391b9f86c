"""Minimum k-face counts over all d-polytopes with d+2 facets and at least n vertices."""
import sys

from polylbt import verify

d_max = int(sys.argv[1]) if len(sys.argv) > 1 else 7
bad = 0
for d in range(4, d_max + 1):
    for n in range(2 * d + 1, 3 * d):
        rep = verify.suite_dplus2_case(d, n)
        bad += rep.failures
        x = rep.extra
        if not x.get("eligible"):
            print(f"d={d} n={n}: no type has this many vertices")
            continue
        cells = [f"{m}{'*' if t else ''}{am}" for m, am, t in zip(x["minimum"], x["argmin"], x["tight"])]
        print(f"d={d} n={n}: tau={x['tau']}  min={' '.join(cells)}")
print("* = equals tau;  [a, m] = minimising type")
sys.exit(1 if bad else 0)
