"""Run the full identity catalog and print a summary table.

    python scripts/verify_catalog.py --n-max 300 --pair-budget 5000
"""
import argparse
import sys
import time

from jacobsthal3.identities import CATALOG, check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=300)
    ap.add_argument("--pair-budget", type=int, default=5000)
    args = ap.parse_args()

    failed = 0
    for ident, entry in CATALOG.items():
        t0 = time.perf_counter()
        r = check(ident, args.n_max, args.pair_budget)
        dt = time.perf_counter() - t0
        failed += r.status == "fail"
        print(f"{ident.value:9} {r.status:4} {r.checked:6d} {dt:7.3f}s  {entry.statement}")
        for f in r.failures[:3]:
            print(f"          {f.indices}: {f.lhs} != {f.rhs}")
    print(f"{len(CATALOG) - failed}/{len(CATALOG)} identities hold")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
