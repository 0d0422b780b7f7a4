"""Decide tau = 0 and a few sample identities at increasing quotient windows."""
import argparse
import time

from linktau import lmap
from linktau.invariants import tau
from linktau.quotient import QuotientContext, are_equal_mod_R
from linktau.rings import BiLaurent
from linktau.wall import r4_data

SAMPLES = [
    ("s^3*t^3", "s^3"),
    ("2*t^5", "0"),
    ("s*t^2", "s^2*t"),
    ("s^2*t^4", "s^4*t^2"),
    ("s*t", "0"),
]


def label(cert) -> str:
    return cert.kind + (f" via {cert.witness}" if cert.kind == "DISTINCT" else "")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--windows", type=int, nargs="+", default=[6, 8, 10, 12])
    args = ap.parse_args()
    doc = lmap.kirk_example()
    x = tau(doc.disks)
    for w in args.windows:
        ctx = QuotientContext(r4_data(doc.spheres), window=w)
        plain = QuotientContext(window=w)
        t0 = time.perf_counter()
        print(f"window {w}: tau vs 0 -> {are_equal_mod_R(x, BiLaurent(), ctx).to_text()}")
        for a, b in SAMPLES:
            x_, y_ = BiLaurent.parse(a), BiLaurent.parse(b)
            row = [label(are_equal_mod_R(x_, y_, c)) for c in (plain, ctx)]
            print(f"  {a} vs {b}: R1-R3 only {row[0]}; with Kirk R4 {row[1]}")
        print(f"  ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
