"""Floating-point evaluation with explicit absolute error bounds.

Convergent multiple zeta values are computed by nested truncated summation
over n_1 > n_2 > ... > n_k >= 1.  The truncation error is controlled
rigorously: the inner partial-sum functions are bounded by explicit
majorants A_j (1 + ln n)^{r_j} built from comparison integrals, the
outermost tail gets an Euler-Maclaurin estimate with an enveloping
remainder term, and floating-point accumulation is covered by a separate
rounding allowance.  Bounds are absolute and intended to be honest rather
than tight.

gamma and pi enter as stored decimal constants (50 digits).  Taylor
coefficients of 1/Gamma(1+z) are produced by exponentiating the log of the
Weierstrass product, an evaluation route that never touches the symbolic
zeta homomorphism, so the two can be compared as independent checks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .zetaring import GAMMA, PI2, ZetaPoly, generator_weight

# Per-operation rounding allowance for BoundedValue arithmetic: generous
# next to the true 2^-53 unit roundoff, so compound expressions stay honest
# without per-op ulp bookkeeping.
EPS_OP = 2.0 ** -48

# Unit roundoff allowance per accumulated float operation in the big
# summation loops (covers pow at ~2 ulp plus the running additions).
SUM_EPS = 2.5e-16

BLOCK = 1 << 20

DEFAULT_MAX_CUTOFF = 20_000_000

ZETA_TOL = 1e-12

GAMMA_DECIMAL = "0.57721566490153286060651209008240243104215933593992"
PI_DECIMAL = "3.14159265358979323846264338327950288419716939937510"


class DivergentMzvError(ValueError):
    """Raised for compositions with first entry < 2 (the series diverges)."""


class CutoffBudgetError(ValueError):
    """Raised when the tolerance would need a cutoff beyond the budget.

    The cutoff that would have been needed is reported in required_cutoff
    (None when no finite cutoff reaches the tolerance, which happens once
    the rounding allowance itself exceeds it).
    """

    def __init__(self, message: str, required_cutoff=None):
        super().__init__(message)
        self.required_cutoff = required_cutoff


class BoundedValue:
    """A float paired with a rigorous absolute error bound."""

    __slots__ = ("value", "bound")

    def __init__(self, value: float, bound: float):
        value = float(value)
        bound = float(bound)
        if not (bound >= 0.0):
            raise ValueError(f"error bound must be >= 0, got {bound!r}")
        self.value = value
        self.bound = bound

    @classmethod
    def exact(cls, value: float) -> "BoundedValue":
        return cls(value, 0.0)

    @classmethod
    def from_fraction(cls, q) -> "BoundedValue":
        q = Fraction(q)
        v = float(q)
        # float() on a Fraction rounds correctly, so half an ulp covers it.
        return cls(v, abs(v) * 2.0 ** -53 + 5e-324)

    def __add__(self, other: "BoundedValue") -> "BoundedValue":
        v = self.value + other.value
        return BoundedValue(v, self.bound + other.bound + abs(v) * EPS_OP)

    def __sub__(self, other: "BoundedValue") -> "BoundedValue":
        v = self.value - other.value
        return BoundedValue(v, self.bound + other.bound + abs(v) * EPS_OP)

    def __neg__(self) -> "BoundedValue":
        return BoundedValue(-self.value, self.bound)

    def __mul__(self, other: "BoundedValue") -> "BoundedValue":
        v = self.value * other.value
        b = (
            abs(self.value) * other.bound
            + abs(other.value) * self.bound
            + self.bound * other.bound
            + abs(v) * EPS_OP
        )
        return BoundedValue(v, b)

    def scale_fraction(self, q) -> "BoundedValue":
        """Multiply by an exact rational, rounding once."""
        q = Fraction(q)
        v = float(Fraction(self.value) * q)
        qmag = abs(float(q)) * (1.0 + 2.0 ** -50)
        return BoundedValue(v, self.bound * qmag + abs(v) * 2.0 ** -52)

    def power(self, k: int) -> "BoundedValue":
        if k < 0:
            raise ValueError("negative powers are not supported")
        acc = BoundedValue.exact(1.0)
        for _ in range(k):
            acc = acc * self
        return acc

    def agrees_with(self, other: "BoundedValue") -> bool:
        return abs(self.value - other.value) <= self.bound + other.bound

    def to_json(self) -> dict:
        return {"value": self.value, "bound": self.bound}

    @classmethod
    def from_json(cls, data: dict) -> "BoundedValue":
        return cls(data["value"], data["bound"])

    def __repr__(self) -> str:
        return f"BoundedValue({self.value!r}, bound={self.bound!r})"


# --- tail estimates -----------------------------------------------------------


def zeta_tail_estimate(N: int, s: int):
    """(midpoint, error) for sum_{n>N} n^-s, s >= 2 integer, N >= 10.

    Euler-Maclaurin through the B_4 term; for the completely monotone
    integrand x^-s the remainder is enveloped by the first omitted term.
    """
    if s < 2 or N < 10:
        raise ValueError("need s >= 2 and N >= 10")
    nf = float(N)
    mid = (
        nf ** (1 - s) / (s - 1)
        - nf ** (-s) / 2.0
        + (s / 12.0) * nf ** (-s - 1)
        - (s * (s + 1) * (s + 2) / 720.0) * nf ** (-s - 3)
    )
    err = (
        s * (s + 1) * (s + 2) * (s + 3) * (s + 4) / 30240.0 * nf ** (-s - 5)
        + abs(mid) * 1e-14
    )
    return mid, err


def tail_integral(N: float, s: int, r: int, a: int) -> float:
    """Closed form of the comparison integral

        integral_N^inf x^-s (1 + ln x)^r ln(x/N)^a dx,   s >= 2.

    Substituting x = N e^u turns each piece into a gamma integral, giving
    N^(1-s) sum_t C(r,t) (1+ln N)^(r-t) (t+a)! / (s-1)^(t+a+1).
    """
    if s < 2:
        raise ValueError("comparison integral needs s >= 2")
    base = 1.0 + math.log(N)
    total = 0.0
    for t in range(r + 1):
        total += (
            comb(r, t)
            * base ** (r - t)
            * math.factorial(t + a)
            / (s - 1.0) ** (t + a + 1)
        )
    return float(N) ** (1 - s) * total


@lru_cache(maxsize=None)
def _sum_majorant(s: int, r: int) -> float:
    """Upper bound for sum_{m>=1} m^-s (1+ln m)^r, s >= 2.

    First nine terms directly; for m >= 10 each term is at most
    (10/9)^r times the integral over [m-1, m], since the log factor grows
    by at most a factor m/(m-1) per step.
    """
    head = sum(m ** (-float(s)) * (1.0 + math.log(m)) ** r for m in range(1, 10))
    return head + (10.0 / 9.0) ** r * tail_integral(9.0, s, r, 0)


def _majorant_chain(comp):
    """Constants A[j], r[j] with T_j(n) <= A[j] (1+ln n)^r[j].

    T_j(n) = sum_{m<n} m^-s_j T_{j+1}(m) is the level-j inner partial sum,
    T_{k+1} identically 1.  A unit exponent bumps the log power by one
    (harmonic growth), anything larger absorbs into a convergent constant.
    """
    k = len(comp)
    A = {k + 1: 1.0}
    r = {k + 1: 0}
    for j in range(k, 1, -1):
        s_j = comp[j - 1]
        if s_j >= 2:
            A[j] = A[j + 1] * _sum_majorant(s_j, r[j + 1])
            r[j] = 0
        else:
            A[j] = A[j + 1]
            r[j] = r[j + 1] + 1
    return A, r


def _remainder_cap(comp, N: int, A, r) -> float:
    """Upper bound for the drift term of the outer tail.

    The tail sum_{m>N} m^-s_1 T_2(m) is split as T_2(N+1) * zeta-tail plus
    the drift sum_{m>N} m^-s_1 (T_2(m) - T_2(N+1)); this caps the drift.
    """
    k = len(comp)
    if k == 1:
        return 0.0
    s_1, s_2 = comp[0], comp[1]
    step = (1.0 + 1.0 / N) ** r[3]
    if s_2 >= 2:
        drift_max = A[3] * step * tail_integral(float(N), s_2, r[3], 0)
        return drift_max * float(N) ** (1 - s_1) / (s_1 - 1)
    return A[3] * step * tail_integral(float(N), s_1, r[3], 1)


def _slop(k: int, N: int, magnitude: float) -> float:
    return 3.0 * (k + 1) * N * SUM_EPS * magnitude


def _predicted_bound(comp, N: int, A, r) -> float:
    """A-priori bound for the cutoff-N run, at least the reported bound."""
    k = len(comp)
    _, ez = zeta_tail_estimate(N, comp[0])
    logcap = 1.0 + math.log(N + 1.0)
    if k == 1:
        t2cap = 1.0
        caps = 1.0
        partial_cap = _sum_majorant(comp[0], 0)
    else:
        t2cap = A[2] * logcap ** r[2]
        caps = sum(A[j] * logcap ** r[j] for j in range(2, k + 1))
        partial_cap = A[2] * _sum_majorant(comp[0], r[2])
    rup = _remainder_cap(comp, N, A, r)
    slop_cap = _slop(k, N, partial_cap + caps + 1.0)
    return (t2cap * ez + 0.55 * rup + slop_cap) * (1.0 + 1e-9)


# --- nested summation -----------------------------------------------------------


def check_composition(args) -> tuple:
    comp = tuple(args)
    if not comp or not all(isinstance(i, int) and i >= 1 for i in comp):
        raise ValueError(f"composition entries must be integers >= 1: {args!r}")
    if comp[0] < 2:
        raise DivergentMzvError(
            f"zeta{comp} diverges: the first argument must be >= 2"
        )
    return comp


def _dp_sum(comp, N: int):
    """Partial sum over n_1 <= N by blockwise dynamic programming.

    Returns (partial, carries) where partial = sum_{m<=N} m^-s_1 T_2(m) and
    carries[j] = T_j(N+1) for 2 <= j <= k.  All terms are nonnegative, which
    is asserted along the way (monotone convergence in the cutoff).
    """
    k = len(comp)
    partial = 0.0
    carry = {j: 0.0 for j in range(2, k + 1)}
    lo = 1
    while lo <= N:
        hi = min(lo + BLOCK - 1, N)
        n = np.arange(lo, hi + 1, dtype=np.float64)
        vals = np.ones_like(n)
        for j in range(k, 1, -1):
            terms = n ** (-float(comp[j - 1])) * vals
            csum = np.cumsum(terms)
            vals = carry[j] + csum - terms
            carry[j] += float(csum[-1])
        outer = n ** (-float(comp[0])) * vals
        if not bool((outer >= 0.0).all()):
            raise AssertionError("negative summand in a positive series")
        increment = float(outer.sum())
        assert increment >= 0.0, "partial sums must be nondecreasing"
        partial += increment
        lo = hi + 1
    return partial, carry


def _choose_cutoff(comp, tol: float, max_cutoff: int, A, r) -> int:
    target = 0.8 * tol
    ladder = []
    n = 100
    while n < max_cutoff:
        ladder.append(n)
        n *= 2
    ladder.append(max_cutoff)
    for N in ladder:
        if _predicted_bound(comp, N, A, r) <= target:
            return N
    # Over budget: keep doubling virtually to report what would be needed.
    required = None
    n = max_cutoff
    best = _predicted_bound(comp, n, A, r)
    while n < 1 << 62:
        n *= 2
        pred = _predicted_bound(comp, n, A, r)
        if pred <= target:
            required = n
            break
        if pred >= best and n > 1 << 40:
            break
        best = min(best, pred)
    needed = (
        f"about {required}"
        if required
        else "beyond what 64-bit summation can certify"
    )
    raise CutoffBudgetError(
        f"tolerance {tol:g} for zeta{comp} needs a cutoff {needed}, over "
        f"the budget of {max_cutoff}; raise max_cutoff or relax tol",
        required_cutoff=required,
    )


def mzv_info(args, tol: float, *, cutoff=None, max_cutoff=DEFAULT_MAX_CUTOFF):
    """(BoundedValue, cutoff used) for the multiple zeta value at args.

    The cutoff is normally chosen from a doubling ladder so the predicted
    bound is at most 0.8 * tol; passing cutoff explicitly skips the ladder
    (the reported bound is then whatever that cutoff honestly achieves).
    """
    comp = check_composition(args)
    tol = float(tol)
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    A, r = _majorant_chain(comp)
    if cutoff is None:
        N = _choose_cutoff(comp, tol, int(max_cutoff), A, r)
    else:
        N = int(cutoff)
        if N < 100:
            raise ValueError("cutoff must be at least 100")
    k = len(comp)
    partial, carry = _dp_sum(comp, N)
    t2 = carry[2] if k >= 2 else 1.0
    zmid, ez = zeta_tail_estimate(N, comp[0])
    rup = _remainder_cap(comp, N, A, r)
    # The drift lies in [0, rup]; center it and report a touch over half the
    # width so a doubled-cutoff rerun stays inside this run's bound.
    value = partial + t2 * zmid + 0.5 * rup
    slop = _slop(k, N, partial + sum(carry.values()) + 1.0)
    bound = (t2 * ez + 0.55 * rup + slop) * (1.0 + 1e-9)
    if cutoff is None and bound > tol:
        raise AssertionError(
            f"bound {bound:g} exceeded tol {tol:g} after ladder choice"
        )
    return BoundedValue(value, bound), N


@lru_cache(maxsize=None)
def _mzv_cached(comp, tol, max_cutoff):
    return mzv_info(comp, tol, max_cutoff=max_cutoff)[0]


def mzv(args, tol: float, *, max_cutoff=DEFAULT_MAX_CUTOFF) -> BoundedValue:
    """Convergent multiple zeta value with error_bound <= tol."""
    comp = check_composition(args)
    return _mzv_cached(comp, float(tol), int(max_cutoff))


# --- generator values -----------------------------------------------------------


@lru_cache(maxsize=None)
def _stored_gamma() -> BoundedValue:
    v = float(GAMMA_DECIMAL)
    return BoundedValue(v, abs(v) * 2.0 ** -52)


@lru_cache(maxsize=None)
def _stored_pi2() -> BoundedValue:
    v = float(PI_DECIMAL)
    pi_bv = BoundedValue(v, abs(v) * 2.0 ** -52)
    return pi_bv * pi_bv


@lru_cache(maxsize=None)
def generator_value(name: str) -> BoundedValue:
    if name == GAMMA:
        return _stored_gamma()
    if name == PI2:
        return _stored_pi2()
    k = generator_weight(name)
    return mzv((k,), ZETA_TOL)


def generator_values(odd_limit: int = 13) -> dict:
    """Numeric values for gamma, pi^2 and the odd zetas up to odd_limit."""
    out = {GAMMA: generator_value(GAMMA), PI2: generator_value(PI2)}
    for k in range(3, odd_limit + 1, 2):
        out[f"zeta{k}"] = generator_value(f"zeta{k}")
    return out


def eval_zeta_poly(p: ZetaPoly) -> BoundedValue:
    """Evaluate a ring element; rational coefficients convert last."""
    acc = BoundedValue.exact(0.0)
    for mono, c in p.sorted_terms():
        term = BoundedValue.exact(1.0)
        for name, e in mono:
            term = term * generator_value(name).power(e)
        acc = acc + term.scale_fraction(c)
    return acc


def eval_mzv_terms(terms, tol: float = 1e-8) -> BoundedValue:
    """Evaluate a list of MzvTerm objects numerically."""
    acc = BoundedValue.exact(0.0)
    for term in terms:
        acc = acc + mzv(term.args, tol).scale_fraction(term.coeff)
    return acc


def eval_qsym(q, tol: float = 1e-8) -> BoundedValue:
    """Evaluate a word polynomial; every word must be convergent."""
    acc = BoundedValue.exact(0.0)
    for w, c in sorted(q.terms.items()):
        acc = acc + mzv(w, tol).scale_fraction(c)
    return acc


def eval_mzv_value(v, tol: float = 1e-8) -> BoundedValue:
    """Evaluate an MzvValue (ring coefficients times MZV symbol products)."""
    acc = BoundedValue.exact(0.0)
    for atoms, poly in sorted(v.terms.items()):
        term = eval_zeta_poly(poly)
        for comp in atoms:
            term = term * mzv(comp, tol)
        acc = acc + term
    return acc


# --- Taylor coefficients of 1/Gamma(1+z) ----------------------------------------

_VALIDATION_POINTS = (-0.4, -0.2, 0.1, 0.3, 0.5)
_VALIDATION_DEGREE = 12
_WINDOW_DEGREE = 18


def recip_gamma_product(z: float, terms: int = 4000) -> BoundedValue:
    """1/Gamma(1+z) by the Weierstrass product, with error control.

    log(1/Gamma(1+z)) = gamma z + sum_{n>=1} [log(1+z/n) - z/n]; the product
    is truncated at `terms` and the rest replaced by its expansion in zeta
    tails sum_{k>=2} (-1)^(k-1) z^k/k sum_{n>M} n^-k, cut at k = 12 with an
    explicit geometric remainder.
    """
    if not -0.9 <= z <= 0.9:
        raise ValueError("sample point out of the validated range")
    M = int(terms)
    gamma_bv = _stored_gamma()
    n = np.arange(1, M + 1, dtype=np.float64)
    zn = z / n
    body = np.log1p(zn) - zn
    log_p = gamma_bv.value * z + float(body.sum())
    err = gamma_bv.bound * abs(z)
    # Rounding in the body: each of the M terms carries cancellation error
    # of order eps * |z|/n, plus eps per accumulated add.
    err += SUM_EPS * (
        2.0 * abs(z) * (1.0 + math.log(M)) + float(np.abs(body).sum())
    )
    for k in range(2, 13):
        zk_abs = abs(z) ** k
        tail_mid, tail_err = zeta_tail_estimate(M, k)
        log_p += (-1.0) ** (k - 1) * z ** k / k * tail_mid
        err += zk_abs / k * tail_err + abs(tail_mid) * zk_abs * SUM_EPS
    # k > 12 remainder: |z|^13/13 * tail(M,13), geometric in |z| from there.
    tail13 = float(M) ** -12 / 12.0
    err += abs(z) ** 13 / 13.0 * tail13 / (1.0 - abs(z))
    value = math.exp(log_p)
    bound = value * math.expm1(err) + abs(value) * 2.0 ** -50
    return BoundedValue(value, bound)


@lru_cache(maxsize=None)
def _recip_gamma_series(degree: int):
    """BoundedValue Taylor coefficients g_0..g_degree of 1/Gamma(1+z).

    The log of the Weierstrass product is gamma z plus a power series whose
    degree-k coefficient works out to (-1)^(k-1) zeta(k)/k; exponentiating
    through the usual recurrence n g_n = sum k l_k g_{n-k} gives the g_i.
    The zeta inputs come from the summation route, never from the symbolic
    homomorphism, so this stays an independent oracle.
    """
    ell = [None, _stored_gamma()]
    for k in range(2, degree + 1):
        sign = Fraction((-1) ** (k - 1), k)
        ell.append(mzv((k,), ZETA_TOL).scale_fraction(sign))
    g = [BoundedValue.exact(1.0)]
    for n in range(1, degree + 1):
        acc = BoundedValue.exact(0.0)
        for k in range(1, n + 1):
            acc = acc + ell[k].scale_fraction(k) * g[n - k]
        g.append(acc.scale_fraction(Fraction(1, n)))
    return tuple(g)


def _validate_recip_series(g) -> None:
    """Check the degree-12 Taylor sum against the product at sample points.

    The allowance combines both rounding bounds with an explicit Taylor
    remainder: terms 13..18 enter directly, and everything past the window
    is enveloped by a geometric tail in |z| <= 1/2 under the window's
    largest magnitude (with headroom), after checking that the magnitudes
    are actually decaying across the window.
    """
    window_mags = [
        abs(g[i].value) + g[i].bound
        for i in range(_VALIDATION_DEGREE + 1, _WINDOW_DEGREE + 1)
    ]
    if window_mags[-1] > window_mags[0]:
        raise ArithmeticError(
            "Taylor coefficients of 1/Gamma(1+z) stopped decaying; "
            "sign derivation is suspect"
        )
    for z in _VALIDATION_POINTS:
        taylor = BoundedValue.exact(0.0)
        for i in range(_VALIDATION_DEGREE + 1):
            zi = BoundedValue(z ** i, abs(z ** i) * i * 2.0 ** -52)
            taylor = taylor + g[i] * zi
        remainder = sum(
            mag * abs(z) ** i
            for mag, i in zip(
                window_mags, range(_VALIDATION_DEGREE + 1, _WINDOW_DEGREE + 1)
            )
        )
        remainder += (
            4.0
            * max(window_mags)
            * abs(z) ** (_WINDOW_DEGREE + 1)
            / (1.0 - abs(z))
        )
        product = recip_gamma_product(z)
        diff = abs(taylor.value - product.value)
        allowed = taylor.bound + product.bound + remainder
        if diff > allowed or diff > 1e-6:
            raise ArithmeticError(
                f"1/Gamma(1+z) Taylor series disagrees with the product at "
                f"z={z}: |{taylor.value} - {product.value}| = {diff:g} > "
                f"{min(allowed, 1e-6):g}"
            )


@lru_cache(maxsize=None)
def _validated_series(degree: int):
    g = _recip_gamma_series(degree)
    _validate_recip_series(g)
    return g


def gamma_recip_coeffs(N: int):
    """Taylor coefficients g_0..g_N of 1/Gamma(1+z), each with a bound.

    Every call revalidates the series against the Weierstrass product at
    the fixed sample points; a failure raises rather than returning
    unvalidated coefficients.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    g = _validated_series(max(N, _WINDOW_DEGREE))
    return list(g[: N + 1])
