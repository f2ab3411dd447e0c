
import pytest
from hypothesis import given, settings, strategies as st

from symicis.forms import PolyMap
from symicis.ideals import (
    FGIdeal, NotQuasiHomogeneousError, embedding_codim, find_weights, jet_membership,
    nilpotency_order, quotient_dimension, require_nilpotency, restrict_ideal_to_graph, suspend,
    NotZeroDimensionalError,
)
from symicis.poly import Poly, Weights, monomials_up_to, quasi_degree, variables
from symicis.symclass import FAMILIES

y, z = variables(2)
J = FGIdeal.of([y ** 2, z ** 4])


def test_find_weights_examples():
    w, degs = find_weights([y * z, y ** 2 + z ** 2])
    assert (w.values, degs) == ((1, 1), (2, 2))
    w, degs = find_weights([y ** 2, z ** 4])
    assert (w.values, degs) == ((2, 1), (4, 4))
    w, degs = find_weights([y + z ** 2, y ** 2])
    assert (w.values, degs) == ((2, 1), (2, 4))
    assert find_weights([y + y ** 2]) is None


@pytest.mark.parametrize("key,a,b,expected", [
    ("Iab", 3, 2, (2, 3)),
    ("Iab", 2, 2, (1, 1)),
    ("I2a+1", 3, None, (3, 2)),
    ("I2a+4", 2, None, (3, 2)),
    ("Ia+5", 4, None, (2, 1)),
    ("Ia+5", 5, None, (5, 2)),
    ("I10star", None, None, (2, 1)),
])
def test_catalog_weights(key, a, b, expected):
    gens = FAMILIES[key].template(y, z, a, b)
    w, degs = find_weights(gens)
    assert w.values == expected
    assert all(quasi_degree(g, w) == dg for g, dg in zip(gens, degs))


def test_ideal_rejects_unit_generator():
    with pytest.raises(ValueError):
        FGIdeal.of([y + 1])


def test_wrong_weights_rejected():
    with pytest.raises(NotQuasiHomogeneousError):
        FGIdeal((y + z ** 2,), 2, Weights((1, 1)))


def test_jet_membership_examples():
    assert jet_membership(y ** 3, J, 6)
    assert not jet_membership(y * z, J, 6)
    assert jet_membership(y ** 2 + z ** 4 + y ** 5 * z ** 7, J, 12)


def test_nilpotency_examples():
    assert nilpotency_order(J) == 5
    assert nilpotency_order(FGIdeal.of([y, z])) == 1
    assert nilpotency_order(FGIdeal.of([y ** 2]), cap=24) is None
    with pytest.raises(NotZeroDimensionalError) as info:
        require_nilpotency(FGIdeal.of([y ** 2]))
    assert "zero_dimensional" in str(info.value)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4))
def test_monomial_ideal_oracle(a, b):
    # y^i z^j lies in <y^a, z^b> iff i >= a or j >= b
    I = FGIdeal.of([y ** a, z ** b])
    assert nilpotency_order(I) == a + b - 1
    assert quotient_dimension(I) == a * b
    for e in monomials_up_to(2, a + b):
        assert jet_membership(Poly.monomial(e), I, a + b) == (e[0] >= a or e[1] >= b)


def test_quotient_dimensions_of_catalog():
    assert quotient_dimension(J) == 8
    assert quotient_dimension(FGIdeal.of([y * z, y ** 2 + z ** 2])) == 4


def test_membership_monotone_and_stable():
    N = nilpotency_order(J)
    f = y * z ** 3 + y ** 2 * z
    answers = [jet_membership(f, J, d) for d in range(N, N + 4)]
    assert len(set(answers)) == 1


def test_embedding_codim_examples():
    c, ker = embedding_codim(J)
    assert c == 0 and len(ker) == 2
    p1, p2, q1, q2 = variables(4)
    c, ker = embedding_codim(FGIdeal.of([p1 ** 2, p2 ** 4, q1, q2]))
    assert c == 2
    assert sorted(ker) == [[0, 1, 0, 0], [1, 0, 0, 0]]
    c, _ = embedding_codim(FGIdeal.of([y ** 2 + z, z ** 4]))
    assert c == 1


@pytest.mark.parametrize("extra", [0, 1, 2, 3])
def test_suspended_catalog_embedding(extra):
    for fam, a, b in [("Iab", 2, 2), ("I2a+1", 3, None), ("I10star", None, None)]:
        I = suspend(FGIdeal.of(FAMILIES[fam].template(y, z, a, b)), extra)
        c, _ = embedding_codim(I)
        assert I.nvars - c == 2


def test_suspend_examples():
    S = suspend(J, 2)
    x = variables(4)
    assert S.generators == (x[0] ** 2, x[1] ** 4, x[2], x[3])
    assert S.weights.values == (2, 1, 1, 1)
    assert suspend(J, 0) is J
    S = suspend([y * z, y ** 2 + z ** 2], 2)
    assert S.generators[2:] == (x[2], x[3])


def test_restrict_to_graph_examples():
    p1, p2, q1, q2 = variables(4)
    a, b = variables(2)
    graph = PolyMap([a, b, Poly.zero(2), Poly.zero(2)], 2)
    I = FGIdeal.of([p1 ** 2, p2 ** 4, q1, q2])
    assert restrict_ideal_to_graph(I, graph, 6).generators == (a ** 2, b ** 4)
    graph = PolyMap([a, b, Poly.zero(2), -(a * b)], 2)
    I = FGIdeal.of([p1 ** 2, p2 ** 4, q1, q2 + p1 * p2])
    assert restrict_ideal_to_graph(I, graph, 6).generators == (a ** 2, b ** 4)
    point = PolyMap([Poly.zero(0), Poly.zero(0)], 0)
    assert restrict_ideal_to_graph(FGIdeal.of([y, z]), point, 3).nvars == 0


def test_catalog_ideals_zero_dimensional():
    samples = [("Iab", 2, 2), ("Iab", 3, 2), ("I2a+1", 3, None), ("I2a+1", 4, None),
               ("I2a+4", 2, None), ("I2a+4", 3, None), ("Ia+5", 4, None), ("Ia+5", 5, None),
               ("I10star", None, None)]
    for fam, a, b in samples:
        assert nilpotency_order(FGIdeal.of(FAMILIES[fam].template(y, z, a, b))) is not None
