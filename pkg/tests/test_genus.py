from fractions import Fraction

import pytest

from gammagenus.genus import (
    CyGenusPolynomial,
    GenusPolynomial,
    cy_genus_from_json,
    cy_genus_to_json,
    genus_from_json,
    genus_to_json,
    mzv_expansion,
    q_genus,
    q_genus_cy,
    q_genus_oracle,
)
from gammagenus.numeric import eval_mzv_terms, eval_zeta_poly
from gammagenus.partitions import partitions_of
from gammagenus.zetaring import GAMMA, MzvTerm, ZetaPoly, zeta_even, zeta_gen

GAMMA_GEN = ZetaPoly.generator(GAMMA)
PI2 = ZetaPoly.generator("pi2")


def test_q1():
    q = q_genus(1)
    assert q.degree == 1
    assert q.coeffs == {(1,): GAMMA_GEN}


def test_q2_coefficients():
    q = q_genus(2)
    assert q.coeffs[(2,)] == zeta_even(2)
    c11 = (GAMMA_GEN ** 2 - zeta_even(2)).scaled(Fraction(1, 2))
    assert q.coeffs[(1, 1)] == c11


def test_q3_c1_cube():
    q = q_genus(3)
    expected = (
        zeta_gen(3).scaled(Fraction(1, 3))
        - (GAMMA_GEN * zeta_even(2)).scaled(Fraction(1, 2))
        + (GAMMA_GEN ** 3).scaled(Fraction(1, 6))
    )
    assert q.coeffs[(1, 1, 1)] == expected


@pytest.mark.parametrize("i", range(2, 9))
def test_leading_coefficient_is_single_zeta(i):
    assert q_genus(i).coeffs[(i,)] == zeta_gen(i)


@pytest.mark.parametrize("i", range(1, 9))
def test_homogeneity_and_coefficient_count(i):
    q = q_genus(i)
    assert set(q.coeffs) == set(partitions_of(i))
    for lam, c in q.coeffs.items():
        assert c.is_homogeneous(i), lam


@pytest.mark.parametrize("i", range(1, 5))
def test_oracle_agrees(i):
    assert q_genus(i) == q_genus_oracle(i)


def test_budgets():
    with pytest.raises(ValueError):
        q_genus(13)
    with pytest.raises(ValueError):
        q_genus(0)
    with pytest.raises(ValueError):
        q_genus_oracle(7)


def test_validate_catches_bad_leading_coefficient():
    q = q_genus(2)
    broken = GenusPolynomial(
        2, {(2,): GAMMA_GEN ** 2, (1, 1): q.coeffs[(1, 1)]}
    )
    with pytest.raises(ValueError):
        broken.validate()


def test_validate_catches_missing_partition():
    with pytest.raises(ValueError):
        GenusPolynomial(2, {(2,): zeta_even(2)}).validate()


def test_mzv_expansion_examples():
    assert mzv_expansion((2,)) == [MzvTerm(Fraction(1), (2,))]
    assert mzv_expansion((2, 2)) == [MzvTerm(Fraction(1), (2, 2))]
    assert mzv_expansion((6, 2)) == [
        MzvTerm(Fraction(1), (6, 2)),
        MzvTerm(Fraction(1), (2, 6)),
    ]
    assert mzv_expansion((2, 2, 2)) == [MzvTerm(Fraction(1), (2, 2, 2))]


def test_mzv_expansion_rejects_unit_parts():
    with pytest.raises(ValueError):
        mzv_expansion((2, 1))
    with pytest.raises(ValueError):
        mzv_expansion(())


def test_cy_genus_small():
    cy2 = q_genus_cy(2)
    assert cy2.coeffs == {(2,): [MzvTerm(Fraction(1), (2,))]}
    cy4 = q_genus_cy(4)
    assert set(cy4.coeffs) == {(4,), (2, 2)}
    assert cy4.coeffs[(2, 2)] == [MzvTerm(Fraction(1), (2, 2))]
    cy5 = q_genus_cy(5)
    assert set(cy5.coeffs) == {(5,), (3, 2)}
    assert cy5.coeffs[(3, 2)] == [
        MzvTerm(Fraction(1), (3, 2)),
        MzvTerm(Fraction(1), (2, 3)),
    ]


def test_cy_genus_requires_degree_two():
    with pytest.raises(ValueError):
        q_genus_cy(1)


def test_cy_rejects_partitions_with_unit_parts():
    with pytest.raises(ValueError):
        CyGenusPolynomial(3, {(2, 1): []})


def test_cy_matches_full_genus_numerically():
    # the c_1 = 0 coefficients must evaluate to the same numbers as the
    # ring coefficients they restrict
    for i in (2, 3, 4):
        full = q_genus(i)
        cy = q_genus_cy(i)
        for lam, terms in cy.coeffs.items():
            a = eval_mzv_terms(terms, tol=1e-7)
            b = eval_zeta_poly(full.coeffs[lam])
            assert a.agrees_with(b), lam


def test_genus_json_roundtrip():
    q = q_genus(3)
    data = genus_to_json(q)
    assert data["degree"] == 3
    assert [t["c_partition"] for t in data["terms"]] == [
        [3],
        [2, 1],
        [1, 1, 1],
    ]
    assert genus_from_json(data) == q


def test_cy_genus_json_roundtrip():
    cy = q_genus_cy(4)
    data = cy_genus_to_json(cy)
    assert data["degree"] == 4
    assert cy_genus_from_json(data) == cy
