"""Self-check suites behind the `verify` subcommand.

Three suites: `symbolic` covers the exact ring identities and the oracle
match, `words` covers the stuffle algebra and Lyndon machinery, `numeric`
covers summation against the symbolic values and stored constants.  Checks
are deliberately smaller than the acceptance tests so a full `verify all`
stays interactive; the heavyweight sweeps live in the test suite.

Randomized checks draw from a fixed seed so repeated runs are
byte-identical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .genus import mzv_expansion, q_genus, q_genus_oracle, q_genus_cy
from .numeric import (
    eval_mzv_terms,
    eval_qsym,
    eval_zeta_poly,
    generator_value,
    gamma_recip_coeffs,
    mzv,
    mzv_info,
    zeta_tail_estimate,
)
from .partitions import partitions_of
from .render import format_bounded, format_qsym, format_zeta_poly
from .symfunc import SymPoly, e_to_m_matrix
from .words import (
    QsymPoly,
    is_lyndon,
    lyndon_decompose,
    lyndon_factorize,
    lyndon_recompose,
    lyndon_words,
    stuffle,
    sym_to_words,
    word_key,
    words_of_weight,
)
from .zetaring import (
    GAMMA,
    ZetaPoly,
    path_independence_pairs,
    zeta_even,
    zeta_gen,
    zeta_hom,
)

SEED = 20318

SUITES = ("symbolic", "words", "numeric")


@dataclass
class CheckRecord:
    id: str
    description: str
    status: str
    expected: str = ""
    actual: str = ""
    bound: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "bound": self.bound,
        }


@dataclass
class Report:
    suite: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "overall": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }


def _record(check_id, description, ok, expected="", actual="", bound=""):
    return CheckRecord(
        id=check_id,
        description=description,
        status="pass" if ok else "fail",
        expected=str(expected),
        actual=str(actual),
        bound=str(bound),
    )


def _guard(records, check_id, description, fn):
    try:
        records.append(fn(check_id, description))
    except Exception as exc:  # a crashed check is a failed check
        records.append(
            _record(check_id, description, False, actual=f"raised {exc!r}")
        )


# --- symbolic -------------------------------------------------------------------


def _check_q1(cid, desc):
    got = q_genus(1).coeffs[(1,)]
    want = ZetaPoly.generator(GAMMA)
    return _record(
        cid, desc, got == want, format_zeta_poly(want), format_zeta_poly(got)
    )


def _check_q2_c1sq(cid, desc):
    got = q_genus(2).coeffs[(1, 1)]
    want = ZetaPoly({((GAMMA, 2),): Fraction(1, 2)}) - zeta_even(2).scaled(
        Fraction(1, 2)
    )
    return _record(
        cid, desc, got == want, format_zeta_poly(want), format_zeta_poly(got)
    )


def _check_q3_c1cube(cid, desc):
    got = q_genus(3).coeffs[(1, 1, 1)]
    want = (
        ZetaPoly({((GAMMA, 3),): Fraction(1, 6)})
        - ZetaPoly.generator(GAMMA).scaled(Fraction(1, 2)) * zeta_even(2)
        + zeta_gen(3).scaled(Fraction(1, 3))
    )
    return _record(
        cid, desc, got == want, format_zeta_poly(want), format_zeta_poly(got)
    )


def _check_leading(cid, desc):
    bad = [
        i
        for i in range(2, 9)
        if q_genus(i).coeffs[(i,)] != zeta_gen(i)
    ]
    return _record(cid, desc, not bad, "none", f"mismatches at {bad}" if bad else "none")


def _check_m22(cid, desc):
    got = zeta_hom(SymPoly.basis_element("m", (2, 2)))
    want = zeta_even(4).scaled(Fraction(3, 4))
    return _record(
        cid, desc, got == want, format_zeta_poly(want), format_zeta_poly(got)
    )


def _check_m62(cid, desc):
    got = zeta_gen(2) * zeta_gen(6) - zeta_gen(8)
    want = zeta_even(8).scaled(Fraction(2, 3))
    also = zeta_hom(SymPoly.basis_element("m", (6, 2)))
    ok = got == want and also == want
    return _record(
        cid, desc, ok, format_zeta_poly(want), format_zeta_poly(got)
    )


def _check_oracle(cid, desc):
    bad = [i for i in range(1, 5) if q_genus(i) != q_genus_oracle(i)]
    return _record(cid, desc, not bad, "none", f"mismatches at {bad}" if bad else "none")


def _check_matrix_symmetry(cid, desc):
    bad = []
    for n in range(1, 7):
        m = e_to_m_matrix(n)
        size = len(m)
        if any(
            m[a][b] != m[b][a] for a in range(size) for b in range(size)
        ):
            bad.append(n)
    return _record(cid, desc, not bad, "none", f"asymmetric at {bad}" if bad else "none")


def _check_homogeneity(cid, desc):
    bad = []
    for i in range(1, 7):
        gp = q_genus(i)
        if len(gp.coeffs) != len(partitions_of(i)):
            bad.append(i)
            continue
        if any(not c.is_homogeneous(i) for c in gp.coeffs.values()):
            bad.append(i)
    return _record(cid, desc, not bad, "none", f"failures at {bad}" if bad else "none")


def _check_word_route(cid, desc):
    bad = []
    for lam in ((2, 2), (3, 2), (4, 2), (3, 3), (6, 2)):
        direct, through = path_independence_pairs(
            SymPoly.basis_element("m", lam)
        )
        if direct != through:
            bad.append(lam)
    return _record(cid, desc, not bad, "none", f"mismatches at {bad}" if bad else "none")


def _symbolic_checks():
    records = []
    _guard(records, "sym.q1", "Q_1 equals γ c_1", _check_q1)
    _guard(
        records,
        "sym.q2-c1sq",
        "coefficient of c_1^2 in Q_2 is (γ^2 - ζ(2))/2",
        _check_q2_c1sq,
    )
    _guard(
        records,
        "sym.q3-c1cube",
        "coefficient of c_1^3 in Q_3 is ζ(3)/3 - γζ(2)/2 + γ^3/6",
        _check_q3_c1cube,
    )
    _guard(
        records,
        "sym.leading",
        "coefficient of c_i in Q_i is ζ(i) for i = 2..8",
        _check_leading,
    )
    _guard(
        records,
        "sym.m22",
        "ζ of m_(2,2) equals (3/4) ζ(4)",
        _check_m22,
    )
    _guard(
        records,
        "sym.m62",
        "ζ(2)ζ(6) - ζ(8) equals (2/3) ζ(8), matching ζ of m_(6,2)",
        _check_m62,
    )
    _guard(
        records,
        "sym.oracle",
        "generating-product oracle matches Q_i for i = 1..4",
        _check_oracle,
    )
    _guard(
        records,
        "sym.matrix-symmetry",
        "elementary-to-monomial transition matrix is symmetric, n = 1..6",
        _check_matrix_symmetry,
    )
    _guard(
        records,
        "sym.homogeneity",
        "Q_i coefficients are weight-i homogeneous with p(i) terms, i <= 6",
        _check_homogeneity,
    )
    _guard(
        records,
        "sym.word-route",
        "word-algebra route to ζ(m_lam) agrees with the p-basis route",
        _check_word_route,
    )
    return records


# --- words ----------------------------------------------------------------------


def _random_word(rng, max_weight):
    w = rng.randint(1, max_weight)
    out = []
    while w > 0:
        letter = rng.randint(1, w)
        out.append(letter)
        w -= letter
    return tuple(out)


def _check_unit_law(cid, desc):
    one = QsymPoly.from_word(())
    z1 = QsymPoly.from_word((1,))
    got = stuffle(z1, one)
    return _record(
        cid, desc, got == z1, format_qsym(z1), format_qsym(got)
    )


def _check_stuffle_26(cid, desc):
    got = stuffle(QsymPoly.from_word((2,)), QsymPoly.from_word((6,)))
    want = (
        QsymPoly.from_word((2, 6))
        + QsymPoly.from_word((6, 2))
        + QsymPoly.from_word((8,))
    )
    return _record(
        cid, desc, got == want, format_qsym(want), format_qsym(got)
    )


def _check_stuffle_12(cid, desc):
    got = stuffle(QsymPoly.from_word((1,)), QsymPoly.from_word((2,)))
    want = (
        QsymPoly.from_word((1, 2))
        + QsymPoly.from_word((2, 1))
        + QsymPoly.from_word((3,))
    )
    return _record(
        cid, desc, got == want, format_qsym(want), format_qsym(got)
    )


def _small_words(max_weight):
    out = []
    for w in range(1, max_weight + 1):
        out.extend(words_of_weight(w))
    return out


def _check_commutative(cid, desc):
    words = _small_words(4)
    bad = []
    for u in words:
        for v in words:
            if stuffle_pair(u, v) != stuffle_pair(v, u):
                bad.append((u, v))
    rng = random.Random(SEED)
    for _ in range(30):
        u = _random_word(rng, 7)
        v = _random_word(rng, 7)
        if stuffle_pair(u, v) != stuffle_pair(v, u):
            bad.append((u, v))
    return _record(cid, desc, not bad, "none", f"{bad[:3]}" if bad else "none")


def _check_associative(cid, desc):
    words = _small_words(3)
    bad = []
    for u in words:
        for v in words:
            for t in words:
                lhs = stuffle(stuffle_pair(u, v), QsymPoly.from_word(t))
                rhs = stuffle(QsymPoly.from_word(u), stuffle_pair(v, t))
                if lhs != rhs:
                    bad.append((u, v, t))
    rng = random.Random(SEED + 1)
    for _ in range(15):
        u = _random_word(rng, 6)
        v = _random_word(rng, 6)
        t = _random_word(rng, 6)
        lhs = stuffle(stuffle_pair(u, v), QsymPoly.from_word(t))
        rhs = stuffle(QsymPoly.from_word(u), stuffle_pair(v, t))
        if lhs != rhs:
            bad.append((u, v, t))
    return _record(cid, desc, not bad, "none", f"{bad[:3]}" if bad else "none")


def _check_weight_additive(cid, desc):
    rng = random.Random(SEED + 2)
    bad = []
    for _ in range(40):
        u = _random_word(rng, 7)
        v = _random_word(rng, 7)
        product = stuffle_pair(u, v)
        want = sum(u) + sum(v)
        if product.weights() not in ([], [want]):
            bad.append((u, v))
    return _record(cid, desc, not bad, "none", f"{bad[:3]}" if bad else "none")


def _check_lyndon_z1(cid, desc):
    bad = []
    for w in range(1, 7):
        starting = [u for u in lyndon_words(w) if u[0] == 1]
        if w == 1 and starting != [(1,)]:
            bad.append(w)
        if w > 1 and starting:
            bad.append(w)
    return _record(cid, desc, not bad, "none", f"weights {bad}" if bad else "none")


def _check_lyndon_counts(cid, desc):
    got = [len(lyndon_words(w)) for w in range(1, 6)]
    want = [1, 1, 2, 3, 6]
    return _record(cid, desc, got == want, str(want), str(got))


def _check_cfl_roundtrip(cid, desc):
    bad = []
    for w in _small_words(5):
        factors = lyndon_factorize(w)
        flat = tuple(x for f in factors for x in f)
        if flat != w or not all(is_lyndon(f) for f in factors):
            bad.append(w)
            continue
        keys = [word_key(f) for f in factors]
        if keys != sorted(keys, reverse=True):
            bad.append(w)
    return _record(cid, desc, not bad, "none", f"{bad[:3]}" if bad else "none")


def _check_decompose_roundtrip(cid, desc):
    bad = []
    q = QsymPoly.from_word((1, 2))
    decomposition = lyndon_decompose(q)
    want = {
        ((1,), (2,)): Fraction(1),
        ((2, 1),): Fraction(-1),
        ((3,),): Fraction(-1),
    }
    if decomposition != want or lyndon_recompose(decomposition) != q:
        bad.append((1, 2))
    rng = random.Random(SEED + 3)
    for _ in range(10):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            terms[_random_word(rng, 5)] = Fraction(rng.randint(-3, 3))
        poly = QsymPoly(terms)
        if lyndon_recompose(lyndon_decompose(poly)) != poly:
            bad.append(tuple(terms))
    return _record(cid, desc, not bad, "none", f"{bad[:2]}" if bad else "none")


def _check_sym_homomorphism(cid, desc):
    pairs = (
        (("m", (2,)), ("m", (1,))),
        (("e", (2,)), ("p", (2,))),
        (("m", (2, 1)), ("m", (1,))),
    )
    bad = []
    for (b1, l1), (b2, l2) in pairs:
        f = SymPoly.basis_element(b1, l1)
        g = SymPoly.basis_element(b2, l2)
        lhs = sym_to_words(f * g)
        rhs = stuffle(sym_to_words(f), sym_to_words(g))
        if lhs != rhs:
            bad.append((b1, l1, b2, l2))
    return _record(cid, desc, not bad, "none", f"{bad}" if bad else "none")


def stuffle_pair(u, v) -> QsymPoly:
    return stuffle(QsymPoly.from_word(u), QsymPoly.from_word(v))


def _words_checks():
    records = []
    _guard(records, "words.unit", "empty word is the stuffle unit", _check_unit_law)
    _guard(
        records,
        "words.stuffle-2-6",
        "z_2 * z_6 = z_2z_6 + z_6z_2 + z_8",
        _check_stuffle_26,
    )
    _guard(
        records,
        "words.stuffle-1-2",
        "z_1 * z_2 = z_1z_2 + z_2z_1 + z_3",
        _check_stuffle_12,
    )
    _guard(
        records,
        "words.commutative",
        "stuffle commutes (exhaustive weight <= 4, random weight <= 7)",
        _check_commutative,
    )
    _guard(
        records,
        "words.associative",
        "stuffle associates (exhaustive weight <= 3, random weight <= 6)",
        _check_associative,
    )
    _guard(
        records,
        "words.weight-additive",
        "stuffle products are homogeneous of the summed weight",
        _check_weight_additive,
    )
    _guard(
        records,
        "words.lyndon-z1",
        "z_1 is the only Lyndon word starting with z_1, weight <= 6",
        _check_lyndon_z1,
    )
    _guard(
        records,
        "words.lyndon-counts",
        "Lyndon word counts for weights 1..5 are 1,1,2,3,6",
        _check_lyndon_counts,
    )
    _guard(
        records,
        "words.cfl-roundtrip",
        "Lyndon factorization is nonincreasing and concatenates back",
        _check_cfl_roundtrip,
    )
    _guard(
        records,
        "words.decompose-roundtrip",
        "Lyndon decomposition inverts through the stuffle product",
        _check_decompose_roundtrip,
    )
    _guard(
        records,
        "words.sym-homomorphism",
        "sym_to_words carries products to stuffle products",
        _check_sym_homomorphism,
    )
    return records


# --- numeric --------------------------------------------------------------------


def _agreement_record(cid, desc, lhs, rhs):
    diff = abs(lhs.value - rhs.value)
    allowed = lhs.bound + rhs.bound
    return _record(
        cid,
        desc,
        diff <= allowed,
        format_bounded(rhs, ascii_mode=True),
        format_bounded(lhs, ascii_mode=True),
        f"{allowed:.3g}",
    )


def _check_zeta2(cid, desc):
    got = mzv((2,), 1e-8)
    want = eval_zeta_poly(zeta_even(2))
    rec = _agreement_record(cid, desc, got, want)
    if got.bound > 1e-8:
        rec.status = "fail"
    return rec


def _check_zeta22(cid, desc):
    got = mzv((2, 2), 1e-6)
    want = eval_zeta_poly(zeta_even(4).scaled(Fraction(3, 4)))
    return _agreement_record(cid, desc, got, want)


def _check_zeta62(cid, desc):
    got = mzv((6, 2), 1e-6) + mzv((2, 6), 1e-6)
    want = eval_zeta_poly(zeta_even(8).scaled(Fraction(2, 3)))
    return _agreement_record(cid, desc, got, want)


def _check_doubling(cid, desc):
    bad = []
    for comp in ((2,), (3,), (2, 1), (2, 2), (6, 2)):
        first, cutoff = mzv_info(comp, 1e-6)
        second, _ = mzv_info(comp, 1e-6, cutoff=2 * cutoff)
        if abs(first.value - second.value) >= first.bound:
            bad.append(comp)
    return _record(cid, desc, not bad, "none", f"{bad}" if bad else "none")


def _check_taylor(cid, desc):
    g = gamma_recip_coeffs(8)
    bad = []
    for i in range(9):
        symbolic = eval_zeta_poly(
            zeta_hom(SymPoly.basis_element("e", (i,)))
            if i
            else ZetaPoly.one()
        )
        if not symbolic.agrees_with(g[i]):
            bad.append(i)
    return _record(cid, desc, not bad, "none", f"degrees {bad}" if bad else "none")


def _check_product_validation(cid, desc):
    gamma_recip_coeffs(12)
    return _record(cid, desc, True, "validated", "validated")


def _check_gamma_limit(cid, desc):
    n = 1_000_000
    h = float(np.sum(1.0 / np.arange(1, n + 1, dtype=np.float64)))
    approx = h - math.log(n) - 1.0 / (2 * n)
    stored = generator_value(GAMMA).value
    diff = abs(stored - approx)
    return _record(
        cid, desc, diff <= 1e-7, f"{stored:.12g}", f"{approx:.12g}", "1e-07"
    )


def _check_pi2_series(cid, desc):
    n = 1_000_000
    s = float(np.sum(np.arange(1, n + 1, dtype=np.float64) ** -2.0))
    tail, _ = zeta_tail_estimate(n, 2)
    approx = 6.0 * (s + tail)
    stored = generator_value("pi2").value
    diff = abs(stored - approx)
    return _record(
        cid, desc, diff <= 1e-9, f"{stored:.12g}", f"{approx:.12g}", "1e-09"
    )


def _check_cy_consistency(cid, desc):
    bad = []
    for i in range(2, 7):
        for lam in q_genus_cy(i).coeffs:
            by_sum = eval_mzv_terms(mzv_expansion(lam), 1e-6)
            symbolic = eval_zeta_poly(
                zeta_hom(SymPoly.basis_element("m", lam))
            )
            if not by_sum.agrees_with(symbolic):
                bad.append(lam)
    return _record(cid, desc, not bad, "none", f"{bad}" if bad else "none")


def _check_stuffle_numeric(cid, desc):
    pairs = (((2,), (2, 1)), ((3,), (2,)), ((2, 2), (3,)))
    bad = []
    for u, v in pairs:
        product = eval_qsym(stuffle_pair(u, v), 1e-6)
        direct = mzv(u, 1e-6) * mzv(v, 1e-6)
        if not product.agrees_with(direct):
            bad.append((u, v))
    return _record(cid, desc, not bad, "none", f"{bad}" if bad else "none")


def _numeric_checks():
    records = []
    _guard(
        records,
        "num.zeta2",
        "summation of ζ(2) meets π^2/6 within bounds at tol 1e-8",
        _check_zeta2,
    )
    _guard(
        records,
        "num.zeta22",
        "ζ(2,2) meets (3/4) ζ(4) within bounds",
        _check_zeta22,
    )
    _guard(
        records,
        "num.zeta62",
        "ζ(6,2)+ζ(2,6) meets (2/3) ζ(8) within bounds",
        _check_zeta62,
    )
    _guard(
        records,
        "num.doubling",
        "doubling the cutoff moves values less than the reported bound",
        _check_doubling,
    )
    _guard(
        records,
        "num.taylor",
        "1/Γ Taylor coefficients match ζ(e_i) within bounds, i <= 8",
        _check_taylor,
    )
    _guard(
        records,
        "num.product-validation",
        "Taylor series validates against the Weierstrass product",
        _check_product_validation,
    )
    _guard(
        records,
        "num.gamma-limit",
        "stored γ matches H_n - ln n - 1/2n at n = 10^6",
        _check_gamma_limit,
    )
    _guard(
        records,
        "num.pi2-series",
        "stored π^2 matches 6 Σ n^-2 plus tail at n = 10^6",
        _check_pi2_series,
    )
    _guard(
        records,
        "num.cy-consistency",
        "MZV expansions match ζ(m_lam) numerically, weight <= 6",
        _check_cy_consistency,
    )
    _guard(
        records,
        "num.stuffle-numeric",
        "ζ is multiplicative across the stuffle product, sample pairs",
        _check_stuffle_numeric,
    )
    return records


def run_suite(name: str) -> Report:
    if name == "all":
        checks = _symbolic_checks() + _words_checks() + _numeric_checks()
        return Report("all", checks)
    if name == "symbolic":
        return Report("symbolic", _symbolic_checks())
    if name == "words":
        return Report("words", _words_checks())
    if name == "numeric":
        return Report("numeric", _numeric_checks())
    raise ValueError(f"unknown suite {name!r}")
