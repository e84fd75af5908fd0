"""Run every property check on a list of groups and print a timing table.

    python scripts/run_zoo.py                  # the acceptance zoo
    python scripts/run_zoo.py "A5" "C2xS4"     # anything parse_group accepts
"""

import argparse
import time

from trivsource.permgroup import parse_group
from trivsource.tsring import Session
from trivsource.verify import run_all

ZOO = ["C2", "C3", "C4", "C6", "klein4", "S3", "D8", "Q8", "D10", "A4", "C3xC3", "S4"]


def primes_dividing(n):
    out, d = [], 2
    while n > 1:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("groups", nargs="*", default=ZOO)
    ap.add_argument("--max-order", type=int, default=400)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    failures = 0
    print(f"{'group':>10} {'p':>2} {'|G|':>4} {'rank':>4} {'checks':>7} {'seconds':>8}")
    for name in args.groups:
        G = parse_group(name, max_order=args.max_order)
        for p in primes_dividing(G.order):
            t0 = time.time()
            S = Session(G, p, seed=args.seed)
            results = run_all(S)
            bad = [r for r in results if not r.passed]
            failures += len(bad)
            status = f"{len(results) - len(bad)}/{len(results)}"
            print(f"{name:>10} {p:>2} {G.order:>4} {len(S.C):>4} {status:>7} {time.time() - t0:8.2f}")
            for r in bad:
                print("           " + r.line())
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
