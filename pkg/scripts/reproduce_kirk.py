"""Recompute every value for Kirk's example and print a PASS/FAIL table.

    python3 scripts/reproduce_kirk.py [--data FILE] [--kmax 50] [--window 10]
"""
import argparse
import sys

from linktau import lmap
from linktau.checks import CheckConfig, run_checks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data", default=None)
    ap.add_argument("--kmax", type=int, default=50)
    ap.add_argument("--window", type=int, default=10)
    args = ap.parse_args()
    doc = lmap.load(args.data) if args.data else lmap.kirk_example()
    results = run_checks(doc, CheckConfig(window=args.window, kmax=args.kmax))
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
