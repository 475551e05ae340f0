"""Time each engine across growing n to show the asymptotic gap.

    python scripts/bench_engines.py --seq K3 --max-exp 6
"""
import argparse
import sys
import time

from jacobsthal3.engines import Engine, SequenceId, term

# iter is O(n) big-int additions; skip it past this size
ITER_LIMIT = 10**5


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seq", default="K3", choices=[s.value for s in SequenceId])
    ap.add_argument("--max-exp", type=int, default=6, help="largest n is 10**max_exp")
    args = ap.parse_args()

    sizes = [10**k for k in range(1, args.max_exp + 1)]
    engines = list(Engine)
    print("n," + ",".join(e.value for e in engines))
    for n in sizes:
        row, seen = [], set()
        for e in engines:
            if e is Engine.ITER and n > ITER_LIMIT:
                row.append("")
                continue
            t0 = time.perf_counter()
            seen.add(term(args.seq, n, e))
            row.append(f"{time.perf_counter() - t0:.6f}")
        if len(seen) != 1:
            print(f"engines disagree at n={n}", file=sys.stderr)
            return 1
        print(f"{n}," + ",".join(row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
