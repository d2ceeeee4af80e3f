from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import T, from_sympy, to_sympy
from weylshape.errors import NonDivisible, UndefinedGcd, ZeroPolynomial
from weylshape.kernel import (
    UniPoly,
    generalized_binomial,
    poly_gcd,
    poly_kth_root,
    squarefree_decomposition,
)

x = UniPoly.x()
coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(coeff, min_size=0, max_size=6).map(UniPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_generalized_binomial_values():
    assert generalized_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert generalized_binomial(5, 2) == 10
    assert generalized_binomial(-1, 3) == -1
    assert generalized_binomial(Fraction(7, 3), 0) == 1
    with pytest.raises(ValueError):
        generalized_binomial(2, -1)


def test_generalized_binomial_matches_sympy():
    for c in (Fraction(1, 3), Fraction(-5, 2), Fraction(7)):
        for k in range(6):
            ref = sympy.binomial(sympy.Rational(c.numerator, c.denominator), k)
            assert generalized_binomial(c, k) == Fraction(int(ref.p), int(ref.q))


def test_formatting_and_degree():
    assert (x ** 3 + 1).format() == "x^3 + 1"
    assert (2 * x - Fraction(1, 2)).format() == "2*x - 1/2"
    assert UniPoly().degree == -1
    assert UniPoly().format() == "0"
    assert (-x).format() == "-x"


def test_exact_division():
    assert ((x - 1) * (x + 2)).exact_div(x - 1) == x + 2
    with pytest.raises(NonDivisible):
        (x ** 2 + 1).exact_div(x - 1)


def test_gcd_errors_and_values():
    with pytest.raises(UndefinedGcd):
        poly_gcd(UniPoly(), UniPoly())
    assert poly_gcd((x - 1) ** 2 * (x + 3), (x - 1) * (x - 5)) == x - 1
    assert poly_gcd(UniPoly(), 3 * x + 6) == x + 2


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_gcd_agrees_with_sympy(p, q):
    if p.is_zero() and q.is_zero():
        return
    ref = sympy.gcd(to_sympy(p), to_sympy(q)).monic()
    assert poly_gcd(p, q) == from_sympy(ref.as_expr())


@settings(max_examples=150, deadline=None)
@given(polys, nonzero_polys)
def test_divmod_reconstructs(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


def test_squarefree_examples():
    p = (x - 1) ** 3 * (x + 2) ** 2 * (x - 5)
    assert squarefree_decomposition(p.scale(4)) == [(x - 5, 1), (x + 2, 2), (x - 1, 3)]
    assert squarefree_decomposition(UniPoly.constant(7)) == []
    with pytest.raises(ZeroPolynomial):
        squarefree_decomposition(UniPoly())


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 3)), min_size=1, max_size=4), coeff.filter(bool))
def test_squarefree_agrees_with_sympy(factors, lead):
    p = UniPoly.constant(lead)
    for root, mult in factors:
        p = p * (x - root) ** mult
    ours = {(str(s), m) for s, m in squarefree_decomposition(p)}
    _, ref = sympy.sqf_list(to_sympy(p))
    theirs = {(str(from_sympy(f.monic().as_expr())), m) for f, m in ref}
    assert ours == theirs


def test_kth_root():
    assert poly_kth_root((x ** 2 + 3 * x - 1) ** 3 * 5, 3) == x ** 2 + 3 * x - 1
    assert poly_kth_root(x ** 2 + 1, 2) is None
    assert poly_kth_root(x ** 3 + 1, 2) is None
    assert poly_kth_root(UniPoly.constant(4), 3) == UniPoly.constant(1)


@settings(max_examples=100, deadline=None)
@given(nonzero_polys, st.integers(1, 4))
def test_kth_root_of_power(p, k):
    root = poly_kth_root(p ** k, k)
    assert root is not None and root == p.monic()


def test_compress_expand():
    p = x ** 6 - 2 * x ** 3 + 1
    assert p.compress(3) == x ** 2 - 2 * x + 1
    assert p.compress(2) is None
    assert (x ** 2 - 2 * x + 1).expand(3) == p


def test_valuation_and_shift():
    assert (x ** 3 + x ** 5).valuation() == 3
    assert (x + 1).shift(2) == x ** 3 + x ** 2
    with pytest.raises(ZeroPolynomial):
        UniPoly().valuation()
