"""Seeded random generators for polynomials, weights and operators."""

import random
from fractions import Fraction

from .operators import OperatorSpec
from .poly import IsobaricPolynomial, enumerate_partitions
from .strings import decompose
from .weights import WeightVector, wip


def random_rational(rng, lo=-5, hi=5, max_den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_weight(rng, size, integer=False, lo=-5, hi=5):
    if integer:
        return WeightVector(tuple(rng.randint(lo, hi) for _ in range(size)))
    return WeightVector(tuple(random_rational(rng, lo, hi) for _ in range(size)))


def random_poly(rng, n, k, density=0.5):
    terms = {
        alpha: random_rational(rng)
        for alpha in enumerate_partitions(n, k)
        if rng.random() < density
    }
    return IsobaricPolynomial(n, k, terms)


def random_spec(rng, k, classic_bias=0.5):
    if rng.random() < classic_bias:
        return OperatorSpec.classic(rng.choice([1, 2, rng.randint(-3, 4)]), k)
    return OperatorSpec(tuple(rng.randint(-1, 2) for _ in range(k)), rng.randint(-2, 3))


def random_kernel_pair(rng, n_max=10, k_max=6):
    """A ``(polynomial, spec)`` pair mixing kernel members and generic inputs.

    Roughly half the polynomials are built from kernel strings so that both
    truth values of the string equivalence get exercised.
    """
    n = rng.randint(2, n_max)
    k = rng.randint(2, k_max)
    spec = random_spec(rng, k)
    roll = rng.random()
    if roll < 0.25:
        # WIP with 2 w1 = w2: in the kernel of the classic m=1 operator
        w = list(random_weight(rng, min(n, k)).entries)
        if len(w) >= 2:
            w[1] = 2 * w[0]
        p = wip(n, k, w)
    elif roll < 0.5:
        base = wip(n, k, (1,) * min(n, k))
        p = IsobaricPolynomial.zero(n, k)
        for ws in decompose(base):
            if rng.random() < 0.6:
                p = p + random_rational(rng) * ws.polynomial()
    else:
        p = random_poly(rng, n, k, density=rng.choice([0.2, 0.5, 0.9]))
    return p, spec
