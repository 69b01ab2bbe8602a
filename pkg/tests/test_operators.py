import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from isobaric.io import poly_to_latex
from isobaric.operators import OperatorSpec, apply_D, apply_operator, apply_tail, domino_check, is_in_kernel
from isobaric.poly import IsobaricPolynomial, add, scalar_mul
from isobaric.sampling import random_poly, random_spec, random_weight
from isobaric.strings import decompose, expand_string
from isobaric.weights import fibonacci_poly, lucas_poly, wip

from oracles import operator_oracle

P = IsobaricPolynomial.monomial


def test_apply_D_examples():
    assert apply_D(P((2, 0)), 1, 1) == IsobaricPolynomial.constant(2, 2)
    assert apply_D(P((0, 2)), 2, 2) == IsobaricPolynomial.constant(2, 2)
    assert apply_D(P((1, 1)), 2, 1) == IsobaricPolynomial.constant(1, 2)
    assert apply_D(P((1, 0)), 1, 1).is_zero()
    with pytest.raises(IndexError):
        apply_D(P((1, 1)), 3, 1)


def test_classic_kernel_examples():
    assert apply_operator(OperatorSpec.classic(2, 4), fibonacci_poly(4, 4)).is_zero()
    assert apply_operator(OperatorSpec.classic(1, 3), lucas_poly(3, 3)).is_zero()
    assert apply_operator(OperatorSpec.classic(5, 3), P((1, 0, 0))).is_zero()


@pytest.mark.parametrize("m", [-2, 0, 1, 2, 3, Fraction(7, 3)])
def test_degree_two_output_is_vanishing_condition(m):
    # T_m(w1 t1^2 + w2 t2) = 2 w1 - m w2 as a constant
    for w1, w2 in [(1, 0), (0, 1), (3, -2), (Fraction(1, 2), 5)]:
        out = apply_operator(OperatorSpec.classic(m, 2), wip(2, 2, (w1, w2)))
        assert out == IsobaricPolynomial.constant(2 * w1 - m * w2, 2)


def test_kernel_membership_examples():
    assert is_in_kernel(OperatorSpec.classic(2, 4), fibonacci_poly(6, 4))
    out = apply_operator(OperatorSpec.classic(1, 4), fibonacci_poly(6, 4))
    assert poly_to_latex(out) == "5t_1^4 + 12t_1^2t_2 + 3t_2^2 + 6t_1t_3 + 2t_4"
    assert not is_in_kernel(OperatorSpec.classic(1, 4), fibonacci_poly(6, 4))
    assert is_in_kernel(OperatorSpec.classic(1, 5), wip(5, 5, (1, 2, 7, -3, 4)))


def test_k_mismatch():
    with pytest.raises(ValueError):
        apply_operator(OperatorSpec.classic(1, 3), lucas_poly(4, 4))
    with pytest.raises(ValueError):
        OperatorSpec((1,), 2)


def test_spec_json():
    s = OperatorSpec((1, "1/2", -3), 2)
    assert s.to_dict() == {"a": ["1", "1/2", "-3"], "m": "2"}
    assert OperatorSpec.from_dict(s.to_dict()) == s


@pytest.mark.parametrize("seed", range(40))
def test_apply_operator_matches_sympy(seed):
    rng = random.Random(seed)
    n, k = rng.randint(0, 9), rng.randint(2, 5)
    p = random_poly(rng, n, k)
    spec = random_spec(rng, k, classic_bias=0.3)
    assert apply_operator(spec, p) == operator_oracle(p, spec.a, spec.m)


def test_domino_examples():
    f4_even = {(0, 2, 0, 0): 1, (2, 1, 0, 0): 3, (4, 0, 0, 0): 1}
    fam = expand_string((0, 2, 0, 0))
    assert domino_check(fam, f4_even, OperatorSpec.classic(2, 4))
    assert domino_check(expand_string((0, 0, 0, 1)), {(0, 0, 0, 1): 1}, OperatorSpec.classic(2, 4))
    assert not domino_check(fam, f4_even, OperatorSpec.classic(1, 4))
    # the classic(1) image is nonzero, matching the domino verdict
    q = IsobaricPolynomial(4, 4, f4_even)
    assert apply_operator(OperatorSpec.classic(1, 4), q) == IsobaricPolynomial(2, 4, {(2, 0, 0, 0): 3, (0, 1, 0, 0): 2})


def test_domino_missing_coefficient():
    with pytest.raises(KeyError):
        domino_check(expand_string((0, 2, 0, 0)), {(0, 2, 0, 0): 1}, OperatorSpec.classic(2, 4))


@pytest.mark.parametrize("n", range(2, 11))
def test_domino_agrees_with_direct_application(n):
    rng = random.Random(n)
    for k in range(2, 6):
        for _ in range(4):
            spec = random_spec(rng, k, classic_bias=0.6)
            p = wip(n, k, random_weight(rng, min(n, k), integer=True, lo=-2, hi=2))
            if rng.random() < 0.5:
                p = wip(n, k, [1, 2] + [rng.randint(-3, 3) for _ in range(min(n, k) - 2)])
            for ws in decompose(p):
                direct = is_in_kernel(spec, ws.polynomial())
                assert domino_check(ws.family, ws.coeffs, spec) == direct


@pytest.mark.parametrize("n", range(2, 21))
def test_F_and_G_in_kernel(n):
    for k in range(2, 9):
        assert is_in_kernel(OperatorSpec.classic(2, k), fibonacci_poly(n, k))
        assert is_in_kernel(OperatorSpec.classic(1, k), lucas_poly(n, k))


def test_two_omega1_equals_omega2_gives_m1_kernel():
    rng = random.Random(42)
    for _ in range(200):
        n, k = rng.randint(2, 12), rng.randint(2, 6)
        w = list(random_weight(rng, min(n, k)).entries)
        w[1] = 2 * w[0]
        assert is_in_kernel(OperatorSpec.classic(1, k), wip(n, k, w))


# -- properties ---------------------------------------------------------------

@st.composite
def poly_and_spec(draw, max_n=14):
    k = draw(st.integers(2, 5))
    n = draw(st.integers(0, max_n))
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    return random_poly(rng, n, k, density=0.3), random_poly(rng, n, k, density=0.3), random_spec(rng, k)


@given(poly_and_spec())
def test_degree_law(case):
    p, _, spec = case
    out = apply_operator(spec, p)
    if p.degree >= 2 and not out.is_zero():
        assert out.degree == p.degree - 2
        assert all(sum(i * a for i, a in enumerate(al, 1)) == p.degree - 2 for al in out.support())


@given(poly_and_spec(max_n=10), st.fractions(-4, 4, max_denominator=5))
def test_operator_linear(case, c):
    p, q, spec = case
    assert apply_operator(spec, add(p, q)) == add(apply_operator(spec, p), apply_operator(spec, q))
    assert apply_operator(spec, scalar_mul(c, p)) == scalar_mul(c, apply_operator(spec, p))


@given(poly_and_spec(max_n=10))
def test_tail_plus_D11_is_operator(case):
    p, _, spec = case
    if p.degree >= 2:
        assert add(apply_D(p, 1, 1), apply_tail(spec, p)) == apply_operator(spec, p)


@pytest.mark.parametrize("n", range(0, 11))
def test_mixed_partials_symmetric(n):
    rng = random.Random(100 + n)
    p = random_poly(rng, n, 4, density=0.8)
    for i in range(1, 5):
        for j in range(1, 5):
            assert apply_D(p, i, j) == apply_D(p, j, i)
