"""Differential lattices of monomials.

The lattice of ``t^alpha`` holds every nonzero exponent vector reachable
from ``alpha`` by repeatedly lowering one entry by 1 (partial
differentiation with the constant forgotten).  That is exactly the set of
nonzero vectors dominated componentwise by ``alpha``.
"""

from dataclasses import dataclass
from itertools import product

from .poly import depth, term_key

__all__ = [
    "DiffLattice",
    "build_lattice",
    "intersection_nodes",
    "lattice_to_dot",
    "string_lattice_union",
]


@dataclass(frozen=True)
class DiffLattice:
    """Nodes, undirected edges and the root(s) the lattice was built from.

    Edges are stored as ``(upper, lower)`` with ``lower`` one decrement
    below ``upper``.
    """

    roots: tuple
    nodes: frozenset
    edges: frozenset

    @property
    def root(self):
        return self.roots[0]

    def depth_of(self, node):
        return depth(node)

    def ranks(self):
        """Nodes grouped by depth, deepest first, each rank in canonical order."""
        by_depth = {}
        for node in self.nodes:
            by_depth.setdefault(depth(node), []).append(node)
        return [(d, sorted(by_depth[d], key=term_key)) for d in sorted(by_depth, reverse=True)]

    def to_dict(self):
        nodes = sorted(self.nodes, key=lambda a: (-depth(a), term_key(a)))
        edges = sorted(self.edges, key=lambda e: (-depth(e[0]), term_key(e[0]), term_key(e[1])))
        return {
            "roots": [list(r) for r in self.roots],
            "nodes": [list(n) for n in nodes],
            "edges": [[list(u), list(v)] for u, v in edges],
        }


def _down(alpha):
    for i, a in enumerate(alpha):
        if a:
            yield alpha[:i] + (a - 1,) + alpha[i + 1:]


def _edges(nodes):
    return frozenset((u, v) for u in nodes for v in _down(u) if v in nodes)


def build_lattice(alpha):
    alpha = tuple(alpha)
    if not any(alpha):
        raise ValueError("the zero monomial has no differential lattice")
    nodes = frozenset(
        beta for beta in product(*(range(a + 1) for a in alpha)) if any(beta)
    )
    return DiffLattice((alpha,), nodes, _edges(nodes))


def string_lattice_union(family):
    """Union of the lattices of all elements of a string."""
    nodes = frozenset().union(*(build_lattice(e).nodes for e in family.elements))
    return DiffLattice(tuple(family.elements), nodes, _edges(nodes))


def _first_meet(a, b):
    common = build_lattice(a).nodes & build_lattice(b).nodes
    if not common:
        return []
    top = max(depth(n) for n in common)
    return [n for n in common if depth(n) == top]


def intersection_nodes(family):
    """Deepest common lattice nodes of each pair of consecutive string elements.

    For a pair whose lattices are disjoint (only the two-element string
    ``t_2, t_1^2`` of degree 2, whose lattices would meet only at the
    excluded constant) the pair contributes nothing.
    """
    elements = family.elements
    if len(elements) < 2:
        raise ValueError("intersection nodes need a string with at least 2 elements")
    found = set()
    for a, b in zip(elements, elements[1:]):
        found.update(_first_meet(a, b))
    return sorted(found, key=term_key)


def lattice_to_dot(lat, name="lattice"):
    """Graphviz source; nodes of equal depth share a rank."""

    def label(n):
        return "(" + ",".join(map(str, n)) + ")"

    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=plaintext];"]
    for d, nodes in lat.ranks():
        names = " ".join(f'"{label(n)}";' for n in nodes)
        lines.append(f"  {{ rank=same; {names} }}  // depth {d}")
    for u, v in sorted(lat.edges, key=lambda e: (-depth(e[0]), term_key(e[0]), term_key(e[1]))):
        lines.append(f'  "{label(u)}" -> "{label(v)}" [dir=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"
