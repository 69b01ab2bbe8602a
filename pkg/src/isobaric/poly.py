"""Isobaric polynomials over the rationals.

A monomial ``t_1^a1 ... t_k^ak`` is stored by its exponent vector
``(a1, ..., ak)``.  An isobaric polynomial of degree ``n`` only holds
monomials whose weighted degree ``sum(i * a_i)`` equals ``n``.

Canonical term order sorts exponent vectors ascending on the reversed tuple
(colexicographic), which puts ``t_1^n`` first and ``t_n`` last::

    t_1^4 + 3t_1^2t_2 + t_2^2 + 2t_1t_3 + t_4
"""

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

__all__ = [
    "IsobaricPolynomial",
    "as_rational",
    "depth",
    "enumerate_partitions",
    "isobaric_degree",
    "partition_count",
    "term_key",
]


def as_rational(value):
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def isobaric_degree(alpha):
    return sum(i * a for i, a in enumerate(alpha, start=1))


def depth(alpha):
    return sum(alpha)


def term_key(alpha):
    """Sort key realizing the canonical term order."""
    return tuple(reversed(alpha))


def _check_alpha(alpha):
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("exponent vector must have length k >= 1")
    for a in alpha:
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise ValueError(f"exponent entries must be nonnegative ints: {alpha}")
    return alpha


@lru_cache(maxsize=None)
def _partitions(n, k):
    if n == 0:
        return ((0,) * k,)
    out = []
    # Choose the multiplicity of the largest allowed part first.
    def rec(remaining, part, suffix):
        if part == 0:
            if remaining == 0:
                out.append(tuple(reversed(suffix)))
            return
        for mult in range(remaining // part + 1):
            rec(remaining - mult * part, part - 1, suffix + [mult])

    rec(n, k, [])
    out.sort(key=term_key)
    return tuple(out)


def enumerate_partitions(n, k):
    """All length-``k`` exponent vectors of isobaric degree ``n``.

    Each vector ``alpha`` encodes the partition ``(1^a1, ..., k^ak)`` of
    ``n``.  The list is in canonical term order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be at least 1")
    return list(_partitions(n, k))


@lru_cache(maxsize=None)
def partition_count(n, k):
    """Number of partitions of n into parts of size at most k."""
    if n == 0:
        return 1
    if n < 0 or k == 0:
        return 0
    return partition_count(n, k - 1) + partition_count(n - k, k)


class IsobaricPolynomial:
    """Immutable isobaric polynomial with exact rational coefficients.

    ``terms`` maps exponent vectors (tuples of length ``k``) to nonzero
    Fractions.  Zero polynomials remember their degree but compare equal
    to any other zero polynomial with the same ``k``.
    """

    __slots__ = ("_degree", "_k", "_terms", "_hash")

    def __init__(self, degree, k, terms=None):
        if not isinstance(degree, int) or degree < 0:
            raise ValueError(f"degree must be a nonnegative int, got {degree!r}")
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"k must be a positive int, got {k!r}")
        clean = {}
        for alpha, coeff in (terms or {}).items():
            alpha = _check_alpha(alpha)
            if len(alpha) != k:
                raise ValueError(f"exponent vector {alpha} does not have length {k}")
            if isobaric_degree(alpha) != degree:
                raise ValueError(f"monomial {alpha} is not of isobaric degree {degree}")
            coeff = as_rational(coeff)
            if coeff:
                clean[alpha] = clean.get(alpha, 0) + coeff
        self._degree = degree
        self._k = k
        self._terms = {a: clean[a] for a in sorted(clean, key=term_key) if clean[a]}
        self._hash = None

    @classmethod
    def _raw(cls, degree, k, terms):
        # Trusted constructor: terms already validated and nonzero.
        self = object.__new__(cls)
        self._degree = degree
        self._k = k
        self._terms = {a: terms[a] for a in sorted(terms, key=term_key)}
        self._hash = None
        return self

    @classmethod
    def zero(cls, degree, k):
        return cls._raw(degree, k, {})

    @classmethod
    def constant(cls, value, k):
        return cls(0, k, {(0,) * k: value})

    @classmethod
    def monomial(cls, alpha, coeff=1):
        alpha = _check_alpha(alpha)
        return cls(isobaric_degree(alpha), len(alpha), {alpha: coeff})

    @property
    def degree(self):
        return self._degree

    @property
    def k(self):
        return self._k

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coeff(self, alpha):
        return self._terms.get(tuple(alpha), Fraction(0))

    def support(self):
        return list(self._terms)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, IsobaricPolynomial):
            return NotImplemented
        if self._k != other._k:
            return False
        if not self._terms and not other._terms:
            return True
        return self._degree == other._degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self._terms:
                self._hash = hash((self._k, self._degree, frozenset(self._terms.items())))
            else:
                self._hash = hash((self._k, "zero"))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, IsobaricPolynomial):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return scalar_mul(-1, self)

    def __sub__(self, other):
        if not isinstance(other, IsobaricPolynomial):
            return NotImplemented
        return add(self, scalar_mul(-1, other))

    def __rmul__(self, c):
        return scalar_mul(c, self)

    def __repr__(self):
        return f"IsobaricPolynomial(degree={self._degree}, k={self._k}, {self.to_latex()!r})"

    def to_latex(self):
        from .io import poly_to_latex

        return poly_to_latex(self)


def _check_compatible(p, q):
    if p.k != q.k:
        raise ValueError(f"k mismatch: {p.k} vs {q.k}")
    if p.degree != q.degree and not (p.is_zero() or q.is_zero()):
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def add(p, q):
    """Coefficientwise sum; zero coefficients are dropped.

    A zero summand of a different degree tag is tolerated, since zero
    polynomials are degree-agnostic under equality.
    """
    _check_compatible(p, q)
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    terms = dict(p._terms)
    for alpha, c in q._terms.items():
        s = terms.get(alpha, 0) + c
        if s:
            terms[alpha] = s
        else:
            terms.pop(alpha, None)
    return IsobaricPolynomial._raw(p.degree, p.k, terms)


def scalar_mul(c, p):
    c = as_rational(c)
    if not c:
        return IsobaricPolynomial.zero(p.degree, p.k)
    return IsobaricPolynomial._raw(p.degree, p.k, {a: c * v for a, v in p._terms.items()})


def _check_index(p, j):
    if not isinstance(j, int) or not 1 <= j <= p.k:
        raise IndexError(f"variable index {j} out of range 1..{p.k}")


def partial_derivative(p, j):
    """Formal partial derivative with respect to ``t_j``.

    The result has degree ``p.degree - j``.  If that is negative no monomial
    can contain ``t_j`` and the zero polynomial (tagged degree 0) is returned.
    """
    _check_index(p, j)
    new_degree = max(p.degree - j, 0)
    terms = {}
    i = j - 1
    for alpha, c in p._terms.items():
        a = alpha[i]
        if a:
            beta = alpha[:i] + (a - 1,) + alpha[i + 1:]
            terms[beta] = c * a
    return IsobaricPolynomial._raw(new_degree, p.k, terms)


def multiply_by_variable(p, j):
    """Multiply by ``t_j``; the degree rises by ``j``."""
    _check_index(p, j)
    i = j - 1
    terms = {alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]: c for alpha, c in p._terms.items()}
    return IsobaricPolynomial._raw(p.degree + j, p.k, terms)
