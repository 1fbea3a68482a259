"""Chern-class polynomials of the multiplicative sequence for 1/Gamma(1+z).

The generating identity sum_i Q_i(e_1,...,e_i) = prod_j 1/Gamma(1+t_j)
determines the Q_i.  The direct route reads each coefficient off as the
zeta homomorphism applied to a monomial symmetric function: the coefficient
of c_lambda in Q_i is zeta_hom(m_lambda).  An independent oracle expands
the product with symbolic degree-d coefficients and solves the resulting
linear system exactly; the two must agree, and do so only because the
elementary-to-monomial transition matrix is symmetric.

Setting c_1 = 0 (the Calabi-Yau specialization) kills every partition with
a part 1, and the surviving coefficients become plain sums of convergent
multiple zeta values.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import as_partition, partitions_of, sort_key
from .symfunc import SymPoly, e_to_m_matrix
from .words import sym_to_words, word_key
from .zetaring import (
    GAMMA,
    MzvTerm,
    ZetaPoly,
    zeta_gen,
    zeta_hom,
    zetapoly_from_json,
    zetapoly_to_json,
)

DEGREE_BUDGET = 12
ORACLE_BUDGET = 6


class GenusPolynomial:
    """Q_i as a map from partitions (indexing c_lambda) to ring coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict):
        self.degree = int(degree)
        self.coeffs = {as_partition(lam): c for lam, c in coeffs.items()}

    def validate(self) -> "GenusPolynomial":
        i = self.degree
        expected = set(partitions_of(i))
        if set(self.coeffs) != expected:
            raise ValueError(
                f"degree-{i} polynomial must have one coefficient per "
                f"partition of {i}"
            )
        for lam, c in self.coeffs.items():
            if not c.is_homogeneous(i):
                raise ValueError(f"coefficient of c_{lam} is not weight-{i}")
        lead = self.coeffs[(i,)]
        want = ZetaPoly.generator(GAMMA) if i == 1 else zeta_gen(i)
        if lead != want:
            raise ValueError(f"leading coefficient of Q_{i} is wrong")
        return self

    def sorted_terms(self):
        return [
            (lam, self.coeffs[lam])
            for lam in sorted(self.coeffs, key=sort_key)
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GenusPolynomial)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )


class CyGenusPolynomial:
    """Q_i at c_1 = 0: partitions without 1s, coefficients as MZV sums."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict):
        self.degree = int(degree)
        self.coeffs = {}
        for lam, terms in coeffs.items():
            lam = as_partition(lam)
            if lam and min(lam) < 2:
                raise ValueError(f"partition {lam} has a part 1")
            self.coeffs[lam] = list(terms)

    def sorted_terms(self):
        return [
            (lam, self.coeffs[lam])
            for lam in sorted(self.coeffs, key=sort_key)
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyGenusPolynomial)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )


def _check_degree(i: int, budget: int, label: str) -> int:
    i = int(i)
    if i < 1:
        raise ValueError(f"{label} degree must be >= 1, got {i}")
    if i > budget:
        raise ValueError(
            f"{label} degree {i} is beyond the configured budget {budget}"
        )
    return i


@lru_cache(maxsize=None)
def q_genus(i: int) -> GenusPolynomial:
    """Q_i with the coefficient of c_lambda given by zeta_hom(m_lambda)."""
    i = _check_degree(i, DEGREE_BUDGET, "genus")
    coeffs = {}
    for lam in partitions_of(i):
        f = SymPoly.basis_element("m", lam)
        coeffs[lam] = zeta_hom(f)
    return GenusPolynomial(i, coeffs).validate()


def _solve_exact_system(matrix, rhs):
    """Solve A x = b exactly, Fraction matrix and ZetaPoly right-hand side."""
    n = len(rhs)
    a = [list(row) for row in matrix]
    x = list(rhs)
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if a[r][col] != 0),
            None,
        )
        if pivot is None:
            raise ValueError("transition system is singular")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            x[col], x[pivot] = x[pivot], x[col]
        inv = Fraction(1, 1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        x[col] = x[col].scaled(inv)
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                x[r] = x[r] - x[col].scaled(f)
    return x


@lru_cache(maxsize=None)
def q_genus_oracle(i: int) -> GenusPolynomial:
    """Q_i read directly off the generating product, degree i at a time.

    Expands prod_{j<=i} (sum_d G_d t_j^d) with G_d = zeta_hom(e_d), keeps
    total degree <= i, collects the degree-i part in the monomial basis and
    solves exactly for its elementary-basis coefficients.
    """
    i = _check_degree(i, ORACLE_BUDGET, "oracle")
    g = [zeta_hom(SymPoly.basis_element("e", (d,))) for d in range(1, i + 1)]
    g.insert(0, ZetaPoly.one())
    # poly: exponent vector over t_1..t_i -> ZetaPoly, truncated past degree i
    poly = {(0,) * i: ZetaPoly.one()}
    for j in range(i):
        grown: dict = {}
        for exps, c in poly.items():
            room = i - sum(exps)
            for d in range(room + 1):
                if not g[d]:
                    continue
                key = exps[:j] + (d,) + exps[j + 1 :]
                piece = c * g[d]
                prev = grown.get(key)
                grown[key] = piece if prev is None else prev + piece
        poly = grown
    by_partition = {}
    for exps, c in poly.items():
        if sum(exps) != i:
            continue
        rep = tuple(sorted((e for e in exps if e), reverse=True))
        if exps == rep + (0,) * (i - len(rep)):
            by_partition[rep] = c
    order = partitions_of(i)
    matrix = e_to_m_matrix(i)
    # e_lambda = sum_mu M[lambda][mu] m_mu, so the m-coefficients are M^T a.
    transposed = [
        [matrix[r][c] for r in range(len(order))] for c in range(len(order))
    ]
    rhs = [by_partition.get(mu, ZetaPoly.zero()) for mu in order]
    solved = _solve_exact_system(transposed, rhs)
    coeffs = dict(zip(order, solved))
    return GenusPolynomial(i, coeffs).validate()


def mzv_expansion(lam) -> list:
    """zeta_hom(m_lam) as a plain sum of convergent MZVs, coefficient 1 each.

    Applies only to partitions with every part >= 2; the terms are exactly
    the distinct rearrangements of the parts, i.e. the words underlying
    sym_to_words(m_lam), in ascending word order.
    """
    lam = as_partition(lam)
    if not lam or min(lam) < 2:
        raise ValueError(f"partition {lam or '()'} must have all parts >= 2")
    expansion = sym_to_words(SymPoly.basis_element("m", lam))
    out = []
    for w in sorted(expansion.terms, key=word_key):
        c = expansion.terms[w]
        if c != 1:
            raise AssertionError("monomial word expansion must be 0/1")
        out.append(MzvTerm(Fraction(1), w))
    return out


@lru_cache(maxsize=None)
def q_genus_cy(i: int) -> CyGenusPolynomial:
    """The c_1 = 0 restriction of Q_i, coefficients as MZV term lists."""
    i = _check_degree(i, DEGREE_BUDGET, "genus")
    if i < 2:
        raise ValueError("the c_1 = 0 specialization needs degree >= 2")
    coeffs = {}
    for lam in partitions_of(i):
        if min(lam) >= 2:
            coeffs[lam] = mzv_expansion(lam)
    return CyGenusPolynomial(i, coeffs)


# --- JSON ---------------------------------------------------------------------


def genus_to_json(gp: GenusPolynomial) -> dict:
    return {
        "degree": gp.degree,
        "terms": [
            {"c_partition": list(lam), "coeff": zetapoly_to_json(c)}
            for lam, c in gp.sorted_terms()
        ],
    }


def genus_from_json(data: dict) -> GenusPolynomial:
    coeffs = {
        tuple(t["c_partition"]): zetapoly_from_json(t["coeff"])
        for t in data["terms"]
    }
    return GenusPolynomial(data["degree"], coeffs)


def cy_genus_to_json(gp: CyGenusPolynomial) -> dict:
    return {
        "degree": gp.degree,
        "terms": [
            {
                "c_partition": list(lam),
                "mzv_terms": [t.to_json() for t in terms],
            }
            for lam, terms in gp.sorted_terms()
        ],
    }


def cy_genus_from_json(data: dict) -> CyGenusPolynomial:
    coeffs = {
        tuple(t["c_partition"]): [MzvTerm.from_json(m) for m in t["mzv_terms"]]
        for t in data["terms"]
    }
    return CyGenusPolynomial(data["degree"], coeffs)
