import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from symicis.forms import (
    DiffForm, PolyMap, VectorField, exterior_derivative, form_quasi_degree, interior_product,
    lie_derivative, pullback, quasi_homogeneous_parts, standard_symplectic, wedge,
)
from symicis.poly import Poly, Weights, variables

from strategies import forms, rand_field, rand_form

y, z = variables(2)
dy = DiffForm.basic((0,), 2)
dz = DiffForm.basic((1,), 2)
dydz = DiffForm.basic((0, 1), 2)


def f0(p):
    return DiffForm.function(p)


def test_d_examples():
    assert exterior_derivative(f0(y ** 2 * Fraction(1, 2))) == dy.scale(y)
    assert exterior_derivative(dy.scale(y)).is_zero()
    assert exterior_derivative(dz.scale(y)) == dydz
    assert exterior_derivative(dydz.scale(y)).degree == 3


def test_wedge_examples():
    assert wedge(dy, dz) == dydz
    assert wedge(dy, dy).is_zero()
    assert wedge(dy.scale(y), dz.scale(z)) == dydz.scale(y * z)
    assert wedge(dz, dy) == -dydz


def test_interior_examples():
    assert interior_product(VectorField([y, Poly.zero(2)]), dydz) == dz.scale(y)
    E = VectorField.euler(Weights((2, 1)))
    assert interior_product(E, dydz) == dz.scale(2 * y) - dy.scale(z)
    with pytest.raises(ValueError):
        interior_product(E, f0(Poly.const(1, 2)))


def test_lie_examples():
    E = VectorField([3 * y, 2 * z])
    assert lie_derivative(E, f0(y ** 2 + z ** 3)) == f0((y ** 2 + z ** 3).scale(6))
    a, A, B = 4, 1, 8
    c = Fraction(B, (a + 4) * A)
    X = VectorField([(y * z).scale(a * c), (z * z).scale(2 * c)])
    assert lie_derivative(X, dydz.scale(A)) == dydz.scale(z.scale(B))
    assert lie_derivative(VectorField([Poly.const(1, 2), Poly.zero(2)]), f0(y ** 2)) == f0(2 * y)


def test_pullback_examples():
    F2 = PolyMap.scaling(Weights((2, 1)), 2)
    assert pullback(F2, dy.scale(y), None) == dy.scale(y).scale(16)
    om = dydz.scale(y + z ** 3)
    assert pullback(PolyMap.identity(2), om, None) == om
    phi = PolyMap([y, z], 2)  # A = 1, B = C = 0
    assert pullback(phi, dydz, 8) == dydz


def test_rendering():
    assert dydz.scale(z).to_str(["y", "z"]) == "z*dy^dz"
    assert dy.scale(y + z).to_str(["y", "z"]) == "(y + z)*dy"


def test_standard_symplectic():
    om = standard_symplectic(2)
    assert set(om.components) == {(0, 2), (1, 3)}
    assert exterior_derivative(om).is_zero()


def test_quasi_homogeneous_parts_sum():
    w = Weights((2, 1))
    om = dydz.scale(y + z ** 2 + y * z)
    parts = quasi_homogeneous_parts(om, w)
    assert sorted(parts) == [5, 6]
    total = DiffForm.zero(2, 2)
    for piece in parts.values():
        total = total + piece
    assert total == om
    assert form_quasi_degree(dy.scale(y), w) == 4


# independent coordinate formula for the Lie derivative


def _full(omega, idx):
    """Component of the antisymmetric tensor at an arbitrary index tuple."""
    if len(set(idx)) < len(idx):
        return Poly.zero(omega.nvars)
    order = sorted(idx)
    perm = [order.index(i) for i in idx]
    inv = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    c = omega.coeff(tuple(order))
    return -c if inv % 2 else c


def lie_oracle(X, omega):
    m, p = omega.nvars, omega.degree
    comps = {}
    for J in combinations(range(m), p):
        acc = X(omega.coeff(J))
        for r in range(p):
            for k in range(m):
                K = J[:r] + (k,) + J[r + 1:]
                acc = acc + _full(omega, K) * X.components[k].diff(J[r])
        comps[J] = acc
    return DiffForm(p, m, comps)


def d_oracle(omega):
    """(d w)_{j0..jp} = sum_r (-1)^r d_{j_r} w_{j0..^jr..jp}."""
    m, p = omega.nvars, omega.degree
    comps = {}
    for J in combinations(range(m), p + 1):
        acc = Poly.zero(m)
        for r, j in enumerate(J):
            term = omega.coeff(J[:r] + J[r + 1:]).diff(j)
            acc = acc + (term if r % 2 == 0 else -term)
        comps[J] = acc
    return DiffForm(p + 1, m, comps)


@settings(max_examples=80, deadline=None)
@given(forms(nvars=3, degree=1))
def test_d_matches_oracle_1forms(om):
    assert exterior_derivative(om) == d_oracle(om)


@settings(max_examples=80, deadline=None)
@given(forms(nvars=4, degree=2, maxdeg=2))
def test_d_matches_oracle_2forms(om):
    assert exterior_derivative(om) == d_oracle(om)
    assert exterior_derivative(exterior_derivative(om)).is_zero()


def test_lie_matches_coordinate_formula():
    rng = random.Random(7)
    for _ in range(60):
        p = rng.randint(0, 3)
        om = rand_form(rng, 3, p, 3)
        X = rand_field(rng, 3, 2)
        assert lie_derivative(X, om) == lie_oracle(X, om)


@settings(max_examples=50, deadline=None)
@given(forms(nvars=3, degree=1, maxdeg=2), forms(nvars=3, degree=2, maxdeg=2))
def test_graded_commutativity_and_leibniz(a, b):
    assert wedge(a, b) == wedge(b, a).scale((-1) ** (a.degree * b.degree))
    lhs = exterior_derivative(wedge(a, b))
    rhs = wedge(exterior_derivative(a), b) - wedge(a, exterior_derivative(b))
    assert lhs == rhs


def test_polymap_requires_vanishing():
    with pytest.raises(ValueError):
        PolyMap([y + 1, z], 2)
