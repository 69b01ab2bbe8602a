"""Even and odd strings of exponent vectors.

A string is generated by ``g = (p, g2, a3, ..., ak)`` with ``p`` in {0, 1} and
consists of ``(p + 2j, g2 - j, a3, ..., ak)`` for ``j = 0..g2``.  Every
exponent vector lies in exactly one string, so each isobaric polynomial splits
into weighted strings carrying its coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .io import rational_str
from .operators import is_in_kernel
from .poly import IsobaricPolynomial, depth, isobaric_degree, term_key

__all__ = [
    "StringFamily",
    "WeightedString",
    "decompose",
    "expand_string",
    "depths_increasing",
    "generator_of",
    "string_theorem_sides",
    "verify_string_theorem",
]


@dataclass(frozen=True)
class StringFamily:
    generator: tuple
    elements: tuple

    @property
    def parity(self):
        return "odd" if self.generator[0] else "even"

    @property
    def tail(self):
        return self.generator[2:]

    @property
    def degree(self):
        return isobaric_degree(self.generator)

    @property
    def k(self):
        return len(self.generator)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class WeightedString:
    family: StringFamily
    coeffs: MappingProxyType

    def __post_init__(self):
        missing = [e for e in self.family.elements if e not in self.coeffs]
        if missing:
            raise ValueError(f"no coefficient for string elements {missing}")
        object.__setattr__(self, "coeffs", MappingProxyType(dict(self.coeffs)))

    def polynomial(self):
        f = self.family
        return IsobaricPolynomial(f.degree, f.k, {e: self.coeffs[e] for e in f.elements})

    def to_dict(self):
        return {
            "generator": list(self.family.generator),
            "elements": [
                {"alpha": list(e), "coeff": rational_str(self.coeffs[e])}
                for e in self.family.elements
            ],
        }


def generator_of(alpha):
    alpha = tuple(alpha)
    if not any(alpha):
        raise ValueError("the zero vector belongs to no string")
    if len(alpha) == 1:
        return alpha
    p = alpha[0] % 2
    j = (alpha[0] - p) // 2
    return (p, alpha[1] + j) + alpha[2:]


def expand_string(generator):
    generator = tuple(generator)
    if generator[0] not in (0, 1):
        raise ValueError(f"string generator must start with 0 or 1, got {generator}")
    if len(generator) == 1:
        return StringFamily(generator, (generator,))
    p, g2 = generator[0], generator[1]
    rest = generator[2:]
    elements = tuple((p + 2 * j, g2 - j) + rest for j in range(g2 + 1))
    return StringFamily(generator, elements)


def decompose(p):
    """Split ``p`` into weighted strings ordered by generator.

    Elements of a string that are absent from ``p`` get coefficient 0, so
    each returned string is complete.
    """
    if p.k < 2:
        raise ValueError("strings need k >= 2")
    groups = {}
    for alpha, c in p:
        groups.setdefault(generator_of(alpha), {})[alpha] = c
    out = []
    for gen in sorted(groups, key=term_key):
        fam = expand_string(gen)
        present = groups[gen]
        out.append(WeightedString(fam, {e: present.get(e, Fraction(0)) for e in fam.elements}))
    return out


def string_theorem_sides(p, spec):
    """``(p in kernel, every string of p in kernel)``."""
    whole = is_in_kernel(spec, p)
    parts = all(is_in_kernel(spec, ws.polynomial()) for ws in decompose(p))
    return whole, parts


def verify_string_theorem(p, spec):
    """Truth of: ``p`` is in the kernel iff each of its strings is."""
    whole, parts = string_theorem_sides(p, spec)
    return whole == parts


def depths_increasing(family):
    ds = [depth(e) for e in family.elements]
    return all(a < b for a, b in zip(ds, ds[1:]))
