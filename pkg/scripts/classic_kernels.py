"""Kernel weights of the classic operators over a range of m, k and N."""

import argparse

from isobaric.kernel import classify, format_vector
from isobaric.operators import OperatorSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=list(range(-3, 6)))
    ap.add_argument("--k", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--N", type=int, default=8)
    args = ap.parse_args()
    for k in args.k:
        for m in args.m:
            r = classify(OperatorSpec.classic(m, k), k, args.N)
            basis = " ".join(format_vector(v) for v in r.nullspace) or "-"
            print(f"k={k} m={m:>2}  {r.classification:<7} {basis}")


if __name__ == "__main__":
    main()
