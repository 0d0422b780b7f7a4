"""Count relator instances and their Phi-images as the exponent bound grows."""
import argparse
import time

from linktau import lmap
from linktau.checks import relation_instances, relator_phi


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bounds", type=int, nargs="+", default=[5, 10, 20, 50])
    args = ap.parse_args()
    spheres = lmap.kirk_example().spheres
    print(f"{'kmax':>5} {'R1':>6} {'R2':>7} {'R3':>7} {'R4':>7} {'total':>7} {'nonzero':>8} {'sec':>6}")
    for kmax in args.bounds:
        t0 = time.perf_counter()
        counts = dict.fromkeys(("R1", "R2", "R3", "R4"), 0)
        nonzero = 0
        for r in relation_instances(kmax, spheres):
            counts[r.kind] += 1
            nonzero += bool(relator_phi(r))
        dt = time.perf_counter() - t0
        total = sum(counts.values())
        print(f"{kmax:>5} {counts['R1']:>6} {counts['R2']:>7} {counts['R3']:>7} {counts['R4']:>7} {total:>7} {nonzero:>8} {dt:>6.2f}")


if __name__ == "__main__":
    main()
