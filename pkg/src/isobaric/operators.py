"""The operators ``D11 - sum_j a_j t_j D2j - m D2`` acting on isobaric polynomials.

``D_ij`` is the second mixed partial in ``t_i, t_j`` and ``D2`` the first
partial in ``t_2``.  With every ``a_j = 1`` this is the classic operator
``T_m``.  Every term lowers the isobaric degree by exactly 2.
"""

from dataclasses import dataclass
from fractions import Fraction

from .io import rational_str
from .poly import (
    IsobaricPolynomial,
    add,
    as_rational,
    multiply_by_variable,
    partial_derivative,
    scalar_mul,
)

__all__ = [
    "OperatorSpec",
    "apply_D",
    "apply_operator",
    "apply_tail",
    "domino_check",
    "is_in_kernel",
]


@dataclass(frozen=True)
class OperatorSpec:
    """Coefficients ``(a_1, ..., a_k)`` and ``m`` of the generalized operator."""

    a: tuple
    m: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(as_rational(x) for x in self.a))
        object.__setattr__(self, "m", as_rational(self.m))
        if len(self.a) < 2:
            raise ValueError("operator needs k >= 2 (it differentiates in t_2)")

    @classmethod
    def classic(cls, m, k):
        return cls((1,) * k, m)

    @property
    def k(self):
        return len(self.a)

    def is_classic(self):
        return all(x == 1 for x in self.a)

    def to_dict(self):
        return {"a": [rational_str(x) for x in self.a], "m": rational_str(self.m)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data["a"]), data["m"])

    def __str__(self):
        a = ",".join(rational_str(x) for x in self.a)
        return f"a=({a}) m={rational_str(self.m)}"


def apply_D(p, i, j):
    """Second mixed partial ``d^2 p / dt_i dt_j`` as two first partials."""
    for idx in (i, j):
        if not isinstance(idx, int) or not 1 <= idx <= p.k:
            raise IndexError(f"variable index {idx} out of range 1..{p.k}")
    return partial_derivative(partial_derivative(p, j), i)


def _check_spec(spec, p):
    if spec.k != p.k:
        raise ValueError(f"operator has k={spec.k} but polynomial has k={p.k}")


def apply_tail(spec, p):
    """``(T - D11) p = -sum_j a_j t_j D2j p - m D2 p``."""
    _check_spec(spec, p)
    out_degree = max(p.degree - 2, 0)
    acc = IsobaricPolynomial.zero(out_degree, p.k)
    if p.degree < 2:
        return acc
    d2 = partial_derivative(p, 2)
    for j, aj in enumerate(spec.a, start=1):
        if not aj or j > p.degree - 2:
            continue
        # t_j D2j p: the D2j output has degree n-2-j, so only j <= n-2 survive
        acc = add(acc, scalar_mul(-aj, multiply_by_variable(partial_derivative(d2, j), j)))
    return add(acc, scalar_mul(-spec.m, d2))


def apply_operator(spec, p):
    """``D11 p - sum_j a_j t_j D2j p - m D2 p``; zero for degrees below 2."""
    _check_spec(spec, p)
    if p.degree < 2:
        return IsobaricPolynomial.zero(0, p.k)
    return add(apply_D(p, 1, 1), apply_tail(spec, p))


def is_in_kernel(spec, p):
    return apply_operator(spec, p).is_zero()


def _tail_factor(spec, beta):
    """Scalar ``c`` with ``(T - D11) t^beta = -c t^(beta - e_2)``."""
    b2 = beta[1]
    if b2 == 0:
        return Fraction(0)
    s = spec.m
    for j, (aj, bj) in enumerate(zip(spec.a, beta), start=1):
        s += aj * (bj - 1 if j == 2 else bj)
    return b2 * s


def domino_check(family, coeffs, spec):
    """Pairwise cancellation test for a weighted string.

    Along a string ``s_0, s_1, ...`` (steps of ``(+2, -1, 0, ...)``),
    ``D11`` sends ``s_{j+1}`` and ``T - D11`` sends ``s_j`` to the same
    monomial, and nothing else lands there.  The string lies in the kernel
    iff for every adjacent pair

        c_{j+1} * x(x - 1) == c_j * tail_factor(s_j),   x = first entry of s_{j+1}

    together with the two boundary conditions: ``D11`` kills the generator
    and ``T - D11`` kills the terminal element.
    """
    elements = family.elements
    if spec.k != len(family.generator):
        raise ValueError(f"operator has k={spec.k} but string has k={len(family.generator)}")
    try:
        cs = [as_rational(coeffs[e]) for e in elements]
    except KeyError as exc:
        raise KeyError(f"missing coefficient for string element {exc.args[0]}") from None
    if family.degree < 2:
        return True
    gen, last = elements[0], elements[-1]
    # Boundaries: generator has first entry 0 or 1, terminal has second entry 0.
    if cs[0] and gen[0] * (gen[0] - 1):
        return False
    if cs[-1] and _tail_factor(spec, last):
        return False
    for j in range(len(elements) - 1):
        x = elements[j + 1][0]
        if cs[j + 1] * x * (x - 1) != cs[j] * _tail_factor(spec, elements[j]):
            return False
    return True
