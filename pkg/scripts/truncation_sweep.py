"""How the generalized-operator scan changes as the highest checked degree N grows.

Low N leaves too few equations, so some operators look like they have
kernel WIP sequences that disappear once higher degrees are added.

    python3 scripts/truncation_sweep.py --k 4 --N-min 5 --N-max 11
"""

import argparse
import time
from dataclasses import dataclass, field

from isobaric.kernel import format_vector, scan


@dataclass
class SweepConfig:
    k: int = 4
    a_grid: list = field(default_factory=lambda: [-1, 0, 1, 2])
    m_grid: list = field(default_factory=lambda: list(range(-2, 4)))
    N_min: int = 5
    N_max: int = 11


def sweep(cfg):
    rows = []
    for N in range(cfg.N_min, cfg.N_max + 1):
        start = time.perf_counter()
        reports = scan(cfg.a_grid, cfg.m_grid, cfg.k, N)
        rows.append((N, reports, time.perf_counter() - start))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--N-min", type=int, default=5)
    ap.add_argument("--N-max", type=int, default=11)
    ap.add_argument("--show", type=int, default=4, help="reports listed per N")
    args = ap.parse_args()
    cfg = SweepConfig(k=args.k, N_min=args.N_min, N_max=args.N_max)

    total = len(cfg.a_grid) ** cfg.k * len(cfg.m_grid)
    print(f"k={cfg.k}, {total} operators per N")
    for N, reports, secs in sweep(cfg):
        print(f"N={N:<3} nontrivial={len(reports):<4} ({secs:.1f}s)")
        for r in reports[:args.show]:
            a = ",".join(str(x) for x in r.spec.a)
            basis = " ".join(format_vector(v) for v in r.nullspace)
            print(f"    a=({a}) m={r.spec.m}  {r.classification:<7} {basis}")


if __name__ == "__main__":
    main()
