from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from isobaric.io import poly_from_dict, poly_to_dict, poly_to_latex
from isobaric.poly import (
    IsobaricPolynomial,
    add,
    depth,
    enumerate_partitions,
    isobaric_degree,
    multiply_by_variable,
    partial_derivative,
    partition_count,
    scalar_mul,
)
from isobaric.weights import lucas_poly, wip

from oracles import brute_partitions

P = IsobaricPolynomial.monomial


def test_partitions_small():
    assert enumerate_partitions(1, 3) == [(1, 0, 0)]
    four = enumerate_partitions(4, 4)
    assert set(four) == {(0, 2, 0, 0), (2, 1, 0, 0), (4, 0, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1)}
    assert len(four) == 5
    assert (0, 2, 1) in enumerate_partitions(7, 3)


def test_partition_order_is_canonical():
    # t_1^4, t_1^2 t_2, t_2^2, t_1 t_3, t_4
    assert enumerate_partitions(4, 4) == [(4, 0, 0, 0), (2, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1)]
    assert enumerate_partitions(0, 3) == [(0, 0, 0)]


@pytest.mark.parametrize("n", range(0, 16))
@pytest.mark.parametrize("k", range(1, 7))
def test_partitions_match_brute_force_and_count(n, k):
    parts = enumerate_partitions(n, k)
    assert len(parts) == len(set(parts))
    assert set(parts) == brute_partitions(n, k)
    assert len(parts) == partition_count(n, k)


def test_partition_count_known_values():
    assert [partition_count(n, n) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert partition_count(20, 20) == 627


def test_add_identity_and_inverse():
    p = lucas_poly(4, 4)
    assert add(p, IsobaricPolynomial.zero(4, 4)) == p
    s = add(P((2, 0)), P((2, 0), -1))
    assert s.is_zero() and s.degree == 2
    assert add(wip(2, 2, (1, 0)), wip(2, 2, (0, 1))) == IsobaricPolynomial(2, 2, {(2, 0): 1, (0, 1): 1})


def test_add_rejects_mismatch():
    with pytest.raises(ValueError):
        add(P((2, 0)), P((1, 0)))
    with pytest.raises(ValueError):
        add(P((2, 0)), P((2, 0, 0)))


def test_scalar_mul():
    p = lucas_poly(5, 3)
    assert scalar_mul(1, p) == p
    z = scalar_mul(0, p)
    assert z.is_zero() and z.degree == 5
    assert scalar_mul(2, P((1, 0, 1))) == P((1, 0, 1), 2)
    assert scalar_mul("-1/2", P((1, 0))).coeff((1, 0)) == Fraction(-1, 2)


def test_partial_derivative_examples():
    assert partial_derivative(P((2, 0)), 1) == P((1, 0), 2)
    g2 = IsobaricPolynomial(2, 2, {(2, 0): 1, (0, 1): 2})
    assert partial_derivative(g2, 2) == IsobaricPolynomial.constant(2, 2)
    d = partial_derivative(P((1, 1, 0)), 3)
    assert d.is_zero() and d.degree == 0
    with pytest.raises(IndexError):
        partial_derivative(P((1, 1, 0)), 4)


def test_multiply_by_variable_examples():
    q = multiply_by_variable(P((1, 0)), 2)
    assert q == P((1, 1)) and q.degree == 3
    assert multiply_by_variable(IsobaricPolynomial.zero(3, 2), 1).is_zero()
    r = multiply_by_variable(P((1, 1, 0)), 3)
    assert r == P((1, 1, 1)) and r.degree == 6
    with pytest.raises(IndexError):
        multiply_by_variable(P((1, 1)), 0)


def test_invariants_enforced():
    with pytest.raises(ValueError):
        IsobaricPolynomial(3, 2, {(2, 0): 1})
    with pytest.raises(ValueError):
        IsobaricPolynomial(2, 3, {(2, 0): 1})
    with pytest.raises(ValueError):
        IsobaricPolynomial(2, 2, {(-1, 1): 1})
    p = IsobaricPolynomial(2, 2, {(2, 0): 0, (0, 1): 3})
    assert p.support() == [(0, 1)]


def test_zero_equality_ignores_degree_tag():
    assert IsobaricPolynomial.zero(3, 2) == IsobaricPolynomial.zero(7, 2)
    assert hash(IsobaricPolynomial.zero(3, 2)) == hash(IsobaricPolynomial.zero(7, 2))
    assert IsobaricPolynomial.zero(3, 2) != IsobaricPolynomial.zero(3, 3)
    assert P((2, 0)) != P((2, 0, 0))


def test_terms_are_read_only():
    p = P((2, 0))
    with pytest.raises(TypeError):
        p.terms[(0, 1)] = 1


def test_latex_rendering():
    f4 = IsobaricPolynomial(4, 4, {(0, 0, 0, 1): 1, (1, 0, 1, 0): 2, (4, 0, 0, 0): 1,
                                   (0, 2, 0, 0): 1, (2, 1, 0, 0): 3})
    assert poly_to_latex(f4) == "t_1^4 + 3t_1^2t_2 + t_2^2 + 2t_1t_3 + t_4"
    assert poly_to_latex(IsobaricPolynomial(2, 2, {(0, 1): -1})) == "-t_2"
    assert poly_to_latex(IsobaricPolynomial(2, 2, {(2, 0): "1/2", (0, 1): "-3"})) == r"\frac{1}{2}t_1^2 - 3t_2"
    assert poly_to_latex(IsobaricPolynomial.constant(5, 3)) == "5"
    assert poly_to_latex(IsobaricPolynomial.zero(4, 2)) == "0"


def test_json_format():
    p = IsobaricPolynomial(2, 2, {(2, 0): Fraction(-1, 2), (0, 1): 3})
    d = poly_to_dict(p)
    assert d == {"degree": 2, "k": 2, "terms": [{"alpha": [2, 0], "coeff": "-1/2"},
                                                {"alpha": [0, 1], "coeff": "3"}]}
    assert poly_from_dict(d) == p
    with pytest.raises(ValueError):
        poly_from_dict({"degree": 2, "terms": []})


# -- properties ---------------------------------------------------------------

@st.composite
def polys(draw, n=None, k=None):
    k = draw(st.integers(1, 5)) if k is None else k
    n = draw(st.integers(0, 8)) if n is None else n
    support = enumerate_partitions(n, k)
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                           min_size=len(support), max_size=len(support)))
    keep = draw(st.lists(st.booleans(), min_size=len(support), max_size=len(support)))
    return IsobaricPolynomial(n, k, {a: c for a, c, kp in zip(support, coeffs, keep) if kp})


@st.composite
def poly_triples(draw):
    k = draw(st.integers(1, 5))
    n = draw(st.integers(0, 8))
    return draw(polys(n, k)), draw(polys(n, k)), draw(polys(n, k))


@given(poly_triples())
def test_add_commutative_associative(triple):
    p, q, r = triple
    assert add(p, q) == add(q, p)
    assert add(add(p, q), r) == add(p, add(q, r))


@given(polys(), st.data())
def test_leibniz_commutator(p, data):
    j = data.draw(st.integers(1, p.k))
    lhs = partial_derivative(multiply_by_variable(p, j), j)
    rhs = multiply_by_variable(partial_derivative(p, j), j)
    assert add(lhs, scalar_mul(-1, rhs)) == p


@given(polys(), st.data())
def test_operations_preserve_single_degree(p, data):
    j = data.draw(st.integers(1, p.k))
    c = data.draw(st.fractions(-3, 3, max_denominator=4))
    for q in (partial_derivative(p, j), multiply_by_variable(p, j), scalar_mul(c, p), add(p, p)):
        assert all(isobaric_degree(a) == q.degree for a in q.support())
        assert all(len(a) == p.k for a in q.support())


@given(polys())
def test_json_round_trip(p):
    assert poly_from_dict(poly_to_dict(p)) == p


@given(polys())
def test_term_count_bounded_by_partitions(p):
    assert len(p) <= partition_count(p.degree, p.k)
    assert all(depth(a) > 0 for a in p.support()) or p.degree == 0
