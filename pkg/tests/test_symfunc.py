"""Basis conversions checked against raw expansions in honest variables.

The conversion matrices are produced by linear solves against brute-force
expansions, so these tests lean on an independent route: expand both sides
in t_1..t_n and compare coefficient dictionaries.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gammagenus.partitions import partitions_of
from gammagenus.symfunc import (
    MultiPoly,
    SymPoly,
    collect_symmetric_to_m,
    e_to_m_matrix,
    expand_in_vars,
    sympoly_from_json,
    sympoly_to_json,
    to_basis,
)


def test_multipoly_arithmetic():
    x = MultiPoly(2, {(1, 0): 1})
    y = MultiPoly(2, {(0, 1): 1})
    assert (x + y) * (x + y) == MultiPoly(
        2, {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    )
    assert x - x == MultiPoly.zero(2)
    assert (x * y).terms == {(1, 1): 1}
    assert MultiPoly.one(3).terms == {(0, 0, 0): 1}


def test_multipoly_mul_rejects_mixed_arity():
    with pytest.raises(ValueError):
        MultiPoly.one(2) * MultiPoly.one(3)


def test_multipoly_high_degree_product():
    # square of (t1 + t2)^5: binomial coefficients of (t1 + t2)^10
    base = MultiPoly(2, {(1, 0): 1, (0, 1): 1})
    p = MultiPoly.one(2)
    for _ in range(5):
        p = p * base
    sq = p * p
    assert sq.terms[(5, 5)] == 252
    assert sq.terms[(10, 0)] == 1
    assert sum(sq.terms.values()) == 2**10


def test_e_expansion_in_three_vars():
    e2 = SymPoly.basis_element("e", (2,))
    mp = expand_in_vars(e2, 3)
    assert mp.terms == {
        (1, 1, 0): Fraction(1),
        (1, 0, 1): Fraction(1),
        (0, 1, 1): Fraction(1),
    }


def test_p_expansion_in_two_vars():
    p3 = SymPoly.basis_element("p", (3,))
    mp = expand_in_vars(p3, 2)
    assert mp.terms == {(3, 0): Fraction(1), (0, 3): Fraction(1)}


def test_expansion_rejects_degenerate_variable_count():
    with pytest.raises(ValueError):
        expand_in_vars(SymPoly.basis_element("e", (3,)), 2)
    with pytest.raises(ValueError):
        expand_in_vars(SymPoly.basis_element("m", (1, 1, 1)), 2)


def test_collect_symmetric_rejects_asymmetric_input():
    lopsided = MultiPoly(2, {(2, 0): 1, (0, 2): 2})
    with pytest.raises(ValueError):
        collect_symmetric_to_m(lopsided)


def test_e_to_m_matrix_weight_2():
    assert e_to_m_matrix(2) == [
        [Fraction(0), Fraction(1)],
        [Fraction(1), Fraction(2)],
    ]


def test_e_to_m_matrix_weight_3():
    assert e_to_m_matrix(3) == [
        [Fraction(0), Fraction(0), Fraction(1)],
        [Fraction(0), Fraction(1), Fraction(3)],
        [Fraction(1), Fraction(3), Fraction(6)],
    ]


@pytest.mark.parametrize("n", range(1, 9))
def test_e_to_m_matrix_symmetric(n):
    mat = e_to_m_matrix(n)
    size = len(mat)
    assert size == len(partitions_of(n))
    for i in range(size):
        for j in range(size):
            assert mat[i][j] == mat[j][i]


def test_e2_in_power_sums():
    e2 = SymPoly.basis_element("e", (2,))
    assert to_basis(e2, "p") == SymPoly(
        "p", {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
    )


def test_m21_in_power_sums():
    m21 = SymPoly.basis_element("m", (2, 1))
    assert to_basis(m21, "p") == SymPoly(
        "p", {(2, 1): Fraction(1), (3,): Fraction(-1)}
    )


def test_to_basis_preserves_expansion():
    f = SymPoly("e", {(2, 1): Fraction(3), (3,): Fraction(-1, 2), (1,): Fraction(2)})
    for target in ("m", "p"):
        g = to_basis(f, target)
        assert expand_in_vars(g, 3) == expand_in_vars(f, 3)


def test_to_basis_handles_constants():
    f = SymPoly("e", {(): Fraction(7, 2), (1,): Fraction(1)})
    g = to_basis(f, "p")
    assert g.terms[()] == Fraction(7, 2)


def _random_sympoly(draw):
    basis = draw(st.sampled_from(("m", "e", "p")))
    weights = draw(st.lists(st.integers(1, 5), min_size=1, max_size=3))
    terms = {}
    for w in weights:
        lam = draw(st.sampled_from(partitions_of(w)))
        terms[lam] = Fraction(draw(st.integers(-6, 6)), draw(st.integers(1, 4)))
    return SymPoly(basis, terms)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_conversion_roundtrip(data):
    f = _random_sympoly(data.draw)
    for target in ("m", "e", "p"):
        back = to_basis(to_basis(f, target), f.basis)
        assert back == f


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_conversion_agrees_with_raw_expansion(data):
    f = _random_sympoly(data.draw)
    n = max(f.weights() or [1])
    n = max(n, 1)
    target = data.draw(st.sampled_from(("m", "e", "p")))
    g = to_basis(f, target)
    assert expand_in_vars(g, n) == expand_in_vars(f, n)


def test_product_routes_through_expansion():
    a = SymPoly.basis_element("m", (1,))
    assert a * a == SymPoly("m", {(2,): Fraction(1), (1, 1): Fraction(2)})
    e1 = SymPoly.basis_element("e", (1,))
    e2 = SymPoly.basis_element("e", (2,))
    prod = e1 * e2
    assert to_basis(prod, "e") == SymPoly.basis_element("e", (2, 1))


def test_mixed_basis_addition_is_an_error():
    with pytest.raises(ValueError):
        SymPoly.basis_element("m", (1,)) + SymPoly.basis_element("e", (1,))


def test_json_roundtrip():
    f = SymPoly("p", {(3, 1): Fraction(-5, 3), (2,): Fraction(7)})
    data = sympoly_to_json(f)
    assert data["basis"] == "p"
    assert {"partition": [2], "coeff": "7/1"} in data["terms"]
    assert sympoly_from_json(data) == f
