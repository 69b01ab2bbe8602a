"""Weight vectors and the weighted isobaric polynomials (WIPs) they generate.

A weight vector ``omega`` assigns ``omega_j`` to ``t_j``; the monomial with
exponent vector ``alpha`` then receives the coefficient

    multinomial(|alpha|; alpha_1, ..., alpha_k) * (sum_j alpha_j omega_j) / |alpha|

where ``|alpha| = sum_j alpha_j`` is the depth.  Since the coefficient is
linear in ``omega``, WIP sequences form a module under addition of weight
vectors.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .io import rational_str
from .poly import (
    IsobaricPolynomial,
    add,
    as_rational,
    enumerate_partitions,
    multiply_by_variable,
)

__all__ = [
    "NamedWeight",
    "WeightVector",
    "fibonacci_poly",
    "fibonacci_recurrence_oracle",
    "hook_reflect",
    "lucas_poly",
    "multinomial",
    "weight_coefficient",
    "weight_form",
    "wip",
]


@dataclass(frozen=True)
class WeightVector:
    """Finite weight vector ``(omega_1, ..., omega_N)``, indexed from 1.

    Reading past the end raises IndexError rather than padding with zero.
    """

    entries: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(as_rational(e) for e in self.entries))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j):
        if not 1 <= j <= len(self.entries):
            raise IndexError(f"weight index {j} outside 1..{len(self.entries)}")
        return self.entries[j - 1]

    def __add__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError("weight vectors of different length")
        return WeightVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, c):
        c = as_rational(c)
        return WeightVector(tuple(c * e for e in self.entries))

    @classmethod
    def basis(cls, i, size):
        return cls(tuple(1 if j == i else 0 for j in range(1, size + 1)))

    def to_list(self):
        return [rational_str(e) for e in self.entries]


@dataclass(frozen=True)
class NamedWeight:
    """A weight vector tagged with the family it was built from.

    ``tag`` is one of ``"unit"``, ``"natural"``, ``"hook"``, ``"custom"``;
    ``r`` is only set for hooks.
    """

    tag: str
    vector: WeightVector
    r: int = field(default=None)

    @classmethod
    def unit(cls, size):
        return cls("unit", WeightVector((1,) * size))

    @classmethod
    def natural(cls, size):
        return cls("natural", WeightVector(tuple(range(1, size + 1))))

    @classmethod
    def hook(cls, r, size):
        # Hook shape (n-r, 1^r): (-1)^r (0,...,0, 1, 1, ...) with r leading zeros.
        if r < 0:
            raise ValueError("hook leg length r must be >= 0")
        sign = -1 if r % 2 else 1
        return cls("hook", WeightVector(tuple(0 if j <= r else sign for j in range(1, size + 1))), r)

    @classmethod
    def custom(cls, entries):
        return cls("custom", WeightVector(tuple(entries)))

    def to_dict(self):
        tag = {"hook": self.r} if self.tag == "hook" else self.tag
        return {"tag": tag, "entries": self.vector.to_list()}

    @classmethod
    def from_dict(cls, data):
        tag = data["tag"]
        vec = WeightVector(tuple(data["entries"]))
        if isinstance(tag, dict):
            return cls("hook", vec, int(tag["hook"]))
        if tag not in ("unit", "natural", "custom"):
            raise ValueError(f"unknown weight tag {tag!r}")
        return cls(tag, vec)


def _as_weight(omega):
    if isinstance(omega, NamedWeight):
        return omega.vector
    if isinstance(omega, WeightVector):
        return omega
    return WeightVector(tuple(omega))


def multinomial(alpha):
    out = factorial(sum(alpha))
    for a in alpha:
        out //= factorial(a)
    return out


def weight_coefficient(alpha, omega):
    """Coefficient assigned to ``t^alpha`` by the weight vector ``omega``."""
    alpha = tuple(alpha)
    d = sum(alpha)
    if d == 0:
        raise ValueError("the zero exponent vector has no weight (depth 0)")
    omega = _as_weight(omega)
    s = sum((a * omega[j] for j, a in enumerate(alpha, start=1) if a), Fraction(0))
    return multinomial(alpha) * s / d


def weight_form(alpha):
    """The coefficient of ``t^alpha`` as a linear form in the weights.

    Returns ``{j: c_j}`` so that the coefficient equals ``sum c_j omega_j``.
    Each ``c_j`` is the value of weight_coefficient at the basis vector e_j.
    """
    alpha = tuple(alpha)
    d = sum(alpha)
    if d == 0:
        raise ValueError("the zero exponent vector has no weight (depth 0)")
    m = multinomial(alpha)
    return {j: Fraction(m * a, d) for j, a in enumerate(alpha, start=1) if a}


def wip(n, k, omega):
    """The weighted isobaric polynomial ``P_{n, omega}`` in ``t_1..t_k``."""
    if n < 1:
        raise ValueError("WIP sequences are indexed from n = 1")
    omega = _as_weight(omega)
    need = min(n, k)
    if len(omega) < need:
        raise IndexError(f"weight vector of length {len(omega)} does not cover 1..{need}")
    terms = {alpha: weight_coefficient(alpha, omega) for alpha in enumerate_partitions(n, k)}
    return IsobaricPolynomial(n, k, terms)


def fibonacci_poly(n, k):
    return wip(n, k, NamedWeight.unit(min(n, k)))


def lucas_poly(n, k):
    return wip(n, k, NamedWeight.natural(min(n, k)))


def hook_reflect(n, r, k):
    """Reflect of the hook Schur polynomial of shape ``(n-r, 1^r)``."""
    if not 0 <= r < n:
        raise ValueError(f"hook leg r={r} must satisfy 0 <= r < n={n}")
    return wip(n, k, NamedWeight.hook(r, min(n, k)))


def fibonacci_recurrence_oracle(n, k):
    """``F_n`` from ``F_n = sum_{j<=min(n,k)} t_j F_{n-j}`` with ``F_0 = 1``.

    Independent of the weight formula; used to cross-check fibonacci_poly.
    """
    seq = [IsobaricPolynomial.constant(1, k)]
    for d in range(1, n + 1):
        acc = IsobaricPolynomial.zero(d, k)
        for j in range(1, min(d, k) + 1):
            acc = add(acc, multiply_by_variable(seq[d - j], j))
        seq.append(acc)
    return seq[n]
