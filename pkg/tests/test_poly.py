from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from symicis.poly import (
    DimensionError, Poly, Weights, grlex_key, monomials_of_degree, monomials_up_to,
    quasi_degree, truncate, variables,
)

from strategies import polys

y, z = variables(2)


def to_sympy(f: Poly, syms):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.prod([s ** k for s, k in zip(syms, e)])
         for e, c in f.terms.items()),
        sympy.Integer(0),
    )


def test_quasi_degree_examples():
    assert quasi_degree(y ** 2 + z ** 3, Weights((3, 2))) == 6
    # yz with w = (b, a), here a = 3, b = 2
    assert quasi_degree(y * z, Weights((2, 3))) == 5
    assert quasi_degree(y + z ** 2, Weights((1, 1))) is None
    assert quasi_degree(Poly.zero(2), Weights((1, 1))) is None


def test_quasi_degree_dimension_mismatch():
    with pytest.raises(DimensionError):
        quasi_degree(y, Weights((1, 1, 1)))


def test_truncate_examples():
    (t,) = variables(1)
    assert truncate(1 + t + t ** 5, 3) == 1 + t
    assert truncate(y ** 2 * z, 3, Weights((2, 1))).is_zero()
    assert truncate(y + z, 1) == y + z


def test_arithmetic_examples():
    assert (y + z) * (y - z) == y ** 2 - z ** 2
    assert y + Poly.zero(2) == y
    assert (y * z) * (y ** 2) == y ** 3 * z
    assert (y + z).scale(Fraction(1, 2)) == Poly({(1, 0): Fraction(1, 2), (0, 1): Fraction(1, 2)}, 2)


def test_no_zero_coefficients_stored():
    f = (y + z) - z
    assert f.terms == {(1, 0): 1}
    assert (y - y).is_zero()


def test_mismatched_variables():
    (t,) = variables(1)
    with pytest.raises(DimensionError):
        y + t


def test_weights_validation():
    with pytest.raises(ValueError):
        Weights((2, 4))
    with pytest.raises(ValueError):
        Weights((0, 1))
    assert Weights((2, 1)).extend(2).values == (2, 1, 1, 1)


def test_monomial_enumeration_grlex():
    assert monomials_of_degree(2, 2) == sorted(monomials_of_degree(2, 2), key=grlex_key)
    assert len(monomials_up_to(3, 4)) == 35
    assert monomials_up_to(2, 1) == [(0, 0), (0, 1), (1, 0)]


def test_rendering():
    assert (z ** 4 + y ** 2).to_str(["y", "z"]) == "z^4 + y^2"
    assert (-2 * z).to_str(["y", "z"]) == "-2*z"
    assert Poly.zero(2).to_str() == "0"


def test_substitute_and_diff():
    f = y ** 2 * z + 3 * z
    assert f.diff(0) == 2 * y * z
    assert f.diff(1) == y ** 2 + 3
    assert f.substitute([z, y]) == z ** 2 * y + 3 * y
    assert f.substitute([y + z, z], trunc=2) == 3 * z


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f - f == Poly.zero(2)


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_product_matches_sympy(f, g):
    ys, zs = sympy.symbols("y z")
    assert sympy.expand(to_sympy(f * g, (ys, zs)) - to_sympy(f, (ys, zs)) * to_sympy(g, (ys, zs))) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 3), st.integers(0, 3),
       st.integers(0, 3), st.integers(0, 3))
def test_quasi_degree_additive(a, b, i, j, k, l):
    g = gcd(a, b)
    w = Weights((a // g, b // g))
    f = Poly.monomial((i, j), 2)
    h = Poly.monomial((k, l), -1)
    assert quasi_degree(f * h, w) == quasi_degree(f, w) + quasi_degree(h, w)


@settings(max_examples=60, deadline=None)
@given(polys(maxdeg=5, max_terms=6), st.integers(0, 5))
def test_truncate_idempotent(f, d):
    once = truncate(f, d)
    assert truncate(once, d) == once
    assert all(sum(e) <= d for e in once.terms)
