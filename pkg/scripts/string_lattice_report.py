"""Strings of a WIP, the first-meet nodes of each string, and a lattice drawing.

    python3 scripts/string_lattice_report.py --n 7 --k 3 --seq F --dot out.dot
"""

import argparse
from dataclasses import dataclass

from isobaric.io import poly_to_latex
from isobaric.lattice import intersection_nodes, lattice_to_dot, string_lattice_union
from isobaric.operators import OperatorSpec, domino_check
from isobaric.strings import decompose, expand_string, generator_of
from isobaric.weights import fibonacci_poly, lucas_poly


@dataclass
class ReportConfig:
    n: int = 7
    k: int = 3
    seq: str = "F"


def report(cfg):
    p = fibonacci_poly(cfg.n, cfg.k) if cfg.seq == "F" else lucas_poly(cfg.n, cfg.k)
    m = 2 if cfg.seq == "F" else 1
    spec = OperatorSpec.classic(m, cfg.k)
    print(f"{cfg.seq}_{cfg.n} (k={cfg.k}) = {poly_to_latex(p)}")
    print(f"operator m={m}\n")
    widest = None
    for ws in decompose(p):
        fam = ws.family
        coeffs = [str(ws.coeffs.get(e, 0)) for e in fam.elements]
        line = f"gen {fam.generator}  len {len(fam)}  coeffs {coeffs}  domino {domino_check(fam, ws.coeffs, spec)}"
        if len(fam) >= 2:
            nodes = intersection_nodes(fam)
            inner = expand_string(generator_of(nodes[0])) if nodes else None
            line += f"\n    meets {nodes}" + (f" -> string of degree {inner.degree}" if inner else "")
        print(line)
        if widest is None or len(fam) > len(widest):
            widest = fam
    return widest


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--seq", choices=["F", "G"], default="F")
    ap.add_argument("--dot", help="write the lattice of the longest string here")
    args = ap.parse_args()
    widest = report(ReportConfig(args.n, args.k, args.seq))
    if args.dot and widest is not None:
        lat = string_lattice_union(widest)
        with open(args.dot, "w") as fh:
            fh.write(lattice_to_dot(lat))
        print(f"\nwrote {len(lat.nodes)}-node lattice of {widest.generator} to {args.dot}")


if __name__ == "__main__":
    main()
