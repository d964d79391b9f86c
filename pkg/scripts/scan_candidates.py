"""Write the five-candidate minimiser table to CSV and report which family wins where."""
import argparse
import collections
import sys

from polylbt import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-min", type=int, default=4)
    ap.add_argument("--d-max", type=int, default=9)
    ap.add_argument("--out", default="candidates.csv")
    args = ap.parse_args()

    rows, rep = verify.scan_conjecture(args.d_min, args.d_max)
    with open(args.out, "w") as fh:
        fh.write(verify.table_csv(rows))
    print(f"{len(rows)} rows -> {args.out}; {rep.summary()}")

    # which candidate is minimal at k=1, per dimension
    for d in range(args.d_min, args.d_max + 1):
        wins = collections.Counter(r["argmin"] for r in rows if r["d"] == d and r["k"] == 1)
        print(f"d={d}: " + ", ".join(f"{k}x{v}" for k, v in sorted(wins.items())))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
