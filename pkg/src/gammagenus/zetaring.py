"""The graded coefficient ring Q[gamma, pi^2, zeta(3), zeta(5), ...].

Single zeta values at even arguments are normalized to rational multiples
of powers of pi^2 through Euler's formula with Bernoulli numbers, so the
ring's generators are gamma (weight 1), pi^2 (weight 2) and the odd zetas
zeta(2k+1) (weight 2k+1).  gamma and the odd zetas are kept as independent
atoms; no conjectural relations are ever applied.

zeta_hom is the ring homomorphism from symmetric functions determined by
p_1 -> gamma and p_i -> zeta(i) for i >= 2.  zeta_word extends it to the
word algebra through the Lyndon factorization; its values live in MzvValue,
polynomials in unevaluated multiple-zeta symbols with ZetaPoly coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .rationals import frac_from_str, frac_str
from .symfunc import SymPoly, to_basis
from .words import QsymPoly, check_word, lyndon_decompose, sym_to_words

GAMMA = "gamma"
PI2 = "pi2"


def zeta_generator_name(k: int) -> str:
    if k < 3 or k % 2 == 0:
        raise ValueError(f"odd zeta generators need odd k >= 3, got {k}")
    return f"zeta{k}"


def generator_weight(name: str) -> int:
    if name == GAMMA:
        return 1
    if name == PI2:
        return 2
    if name.startswith("zeta"):
        k = int(name[4:])
        if k >= 3 and k % 2 == 1:
            return k
    raise ValueError(f"unknown ring generator {name!r}")


def _monomial(pairs) -> tuple:
    """Canonical monomial: (name, exponent) pairs sorted by generator weight."""
    merged: dict = {}
    for name, e in pairs:
        if e:
            generator_weight(name)
            merged[name] = merged.get(name, 0) + e
    return tuple(
        sorted(
            ((n, e) for n, e in merged.items() if e),
            key=lambda t: generator_weight(t[0]),
        )
    )


def monomial_weight(mono) -> int:
    return sum(generator_weight(n) * e for n, e in mono)


class ZetaPoly:
    """Polynomial in the ring generators with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        for mono, c in (terms or {}).items():
            q = Fraction(c)
            if q:
                key = _monomial(mono)
                q0 = clean.get(key)
                clean[key] = q if q0 is None else q0 + q
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def zero(cls) -> "ZetaPoly":
        return cls()

    @classmethod
    def constant(cls, q) -> "ZetaPoly":
        return cls({(): Fraction(q)})

    @classmethod
    def one(cls) -> "ZetaPoly":
        return cls.constant(1)

    @classmethod
    def generator(cls, name: str, power: int = 1) -> "ZetaPoly":
        return cls({((name, power),): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ZetaPoly) and self.terms == other.terms

    def __add__(self, other: "ZetaPoly") -> "ZetaPoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return ZetaPoly(out)

    def __sub__(self, other: "ZetaPoly") -> "ZetaPoly":
        return self + other.scaled(-1)

    def __neg__(self) -> "ZetaPoly":
        return self.scaled(-1)

    def scaled(self, q) -> "ZetaPoly":
        q = Fraction(q)
        return ZetaPoly({mono: q * c for mono, c in self.terms.items()})

    def __mul__(self, other: "ZetaPoly") -> "ZetaPoly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = _monomial(m1 + m2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return ZetaPoly(out)

    def __pow__(self, k: int) -> "ZetaPoly":
        if k < 0:
            raise ValueError("negative powers are not in the ring")
        acc = ZetaPoly.one()
        for _ in range(k):
            acc = acc * self
        return acc

    def weights(self) -> list:
        return sorted({monomial_weight(m) for m in self.terms})

    def is_homogeneous(self, w: int) -> bool:
        return all(monomial_weight(m) == w for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def sorted_terms(self):
        """Terms in the canonical display order (gamma powers first)."""

        def mono_key(mono):
            return tuple((generator_weight(n), n, -e) for n, e in mono)

        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{dict(m)}" for m, c in self.sorted_terms())
        return f"ZetaPoly({body or '0'})"


# --- Bernoulli numbers and even zeta normalization ---------------------------


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2), by the defining recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    acc = Fraction(0)
    for j in range(n):
        acc += comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


def zeta_even(k: int) -> ZetaPoly:
    """zeta(k) for even k >= 2, as an exact rational multiple of (pi^2)^(k/2).

    Euler: zeta(2m) = (-1)^(m+1) B_{2m} (2 pi)^(2m) / (2 (2m)!).
    """
    if k < 2 or k % 2:
        raise ValueError(f"zeta_even needs even k >= 2, got {k}")
    m = k // 2
    coeff = (
        Fraction((-1) ** (m + 1))
        * bernoulli(2 * m)
        * Fraction(2 ** (2 * m), 2 * factorial(2 * m))
    )
    return ZetaPoly({((PI2, m),): coeff})


def zeta_gen(i: int) -> ZetaPoly:
    """The ring element representing the single zeta value zeta(i), i >= 2."""
    if i < 2:
        raise ValueError(f"zeta_gen needs i >= 2, got {i}")
    if i % 2 == 0:
        return zeta_even(i)
    return ZetaPoly.generator(zeta_generator_name(i))


def zeta_hom(f: SymPoly) -> ZetaPoly:
    """Ring homomorphism: p_1 -> gamma, p_i -> zeta(i) for i >= 2."""
    fp = to_basis(f, "p")
    acc = ZetaPoly.zero()
    for lam, c in fp.terms.items():
        term = ZetaPoly.constant(c)
        for part in lam:
            term = term * (
                ZetaPoly.generator(GAMMA) if part == 1 else zeta_gen(part)
            )
        acc = acc + term
    return acc


# --- multiple zeta symbols ----------------------------------------------------


def check_convergent_composition(args) -> tuple:
    comp = tuple(args)
    if not comp or not all(isinstance(i, int) and i >= 1 for i in comp):
        raise ValueError(f"composition entries must be integers >= 1: {args!r}")
    if comp[0] < 2:
        raise ValueError(
            f"composition {comp} starts with {comp[0]}; need a first entry >= 2 "
            "for a convergent multiple zeta value"
        )
    return comp


@dataclass(frozen=True)
class MzvTerm:
    """One rational multiple of a convergent multiple zeta symbol."""

    coeff: Fraction
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "args", check_convergent_composition(self.args))

    @property
    def weight(self) -> int:
        return sum(self.args)

    @property
    def depth(self) -> int:
        return len(self.args)

    def to_json(self) -> dict:
        return {"args": list(self.args), "coeff": frac_str(self.coeff)}

    @classmethod
    def from_json(cls, data: dict) -> "MzvTerm":
        return cls(frac_from_str(data["coeff"]), tuple(data["args"]))


class MzvValue:
    """Polynomial in unevaluated MZV symbols with ZetaPoly coefficients.

    Keys are sorted tuples of convergent compositions (commuting atoms); the
    empty key carries the pure ring part.  This is the closure of what the
    Lyndon-multiplicative evaluation of words can produce: z_1 contributes
    gamma to the ring part, every other Lyndon factor contributes an atom.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        for atoms, c in (terms or {}).items():
            key = tuple(sorted(check_convergent_composition(a) for a in atoms))
            poly = c if isinstance(c, ZetaPoly) else ZetaPoly.constant(c)
            if poly:
                prev = clean.get(key)
                clean[key] = poly if prev is None else prev + poly
        self.terms = {k: p for k, p in clean.items() if p}

    @classmethod
    def zero(cls) -> "MzvValue":
        return cls()

    @classmethod
    def from_ring(cls, poly: ZetaPoly) -> "MzvValue":
        return cls({(): poly})

    @classmethod
    def one(cls) -> "MzvValue":
        return cls.from_ring(ZetaPoly.one())

    @classmethod
    def from_atom(cls, composition) -> "MzvValue":
        return cls({(tuple(composition),): ZetaPoly.one()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MzvValue) and self.terms == other.terms

    def __add__(self, other: "MzvValue") -> "MzvValue":
        out = dict(self.terms)
        for atoms, p in other.terms.items():
            prev = out.get(atoms)
            out[atoms] = p if prev is None else prev + p
        return MzvValue(out)

    def __sub__(self, other: "MzvValue") -> "MzvValue":
        return self + other.scaled(-1)

    def scaled(self, q) -> "MzvValue":
        return MzvValue({a: p.scaled(q) for a, p in self.terms.items()})

    def __mul__(self, other: "MzvValue") -> "MzvValue":
        out: dict = {}
        for a1, p1 in self.terms.items():
            for a2, p2 in other.terms.items():
                key = tuple(sorted(a1 + a2))
                p = p1 * p2
                prev = out.get(key)
                out[key] = p if prev is None else prev + p
        return MzvValue(out)

    def zeta_part(self) -> ZetaPoly:
        """The coefficient of the empty atom monomial (the pure ring part)."""
        return self.terms.get((), ZetaPoly.zero())

    def mzv_terms(self) -> list:
        """The single-atom part as MzvTerm objects, when that projection exists.

        Raises if any atom carries a non-constant ring coefficient or appears
        in a genuine product of atoms; callers that need full generality work
        with .terms directly.
        """
        out = []
        for atoms, poly in sorted(self.terms.items()):
            if not atoms:
                continue
            if len(atoms) > 1:
                raise ValueError(f"product of MZV symbols present: {atoms}")
            mono = dict(poly.terms)
            if set(mono) - {()}:
                raise ValueError(
                    f"atom {atoms[0]} has a non-constant ring coefficient"
                )
            out.append(MzvTerm(poly.constant_term(), atoms[0]))
        return out


def zeta_word(w) -> MzvValue:
    """Evaluate a word through the Lyndon-multiplicative extension.

    A convergent word (first letter subscript >= 2) is a single MZV symbol
    with coefficient 1.  Otherwise the word is rewritten as a polynomial in
    Lyndon generators; z_1 evaluates to gamma and any other Lyndon factor to
    its MZV symbol, with distinct symbols kept as independent commuting
    atoms.
    """
    word = check_word(w)
    if not word:
        return MzvValue.one()
    if word[0] >= 2:
        return MzvValue.from_atom(word)
    decomposition = lyndon_decompose(QsymPoly.from_word(word))
    acc = MzvValue.zero()
    for factors, c in decomposition.items():
        term = MzvValue.one().scaled(c)
        for factor in factors:
            if factor == (1,):
                term = term * MzvValue.from_ring(ZetaPoly.generator(GAMMA))
            else:
                term = term * MzvValue.from_atom(factor)
        acc = acc + term
    return acc


def zeta_word_poly(q: QsymPoly) -> MzvValue:
    """Linear extension of zeta_word to word polynomials."""
    acc = MzvValue.zero()
    for w, c in q.terms.items():
        acc = acc + zeta_word(w).scaled(c)
    return acc


def stuffle_reduce(value: MzvValue) -> ZetaPoly:
    """Rewrite a depth <= 2 MzvValue in the ring, using only forced identities.

    Single symbols zeta(k) are ring elements outright.  A depth-2 symbol is
    only reducible when stuffle forces it: zeta(a,a) = (zeta(a)^2 -
    zeta(2a))/2, and a symmetric pair zeta(a,b) + zeta(b,a) with equal
    coefficients collapses to zeta(a) zeta(b) - zeta(a+b).  Anything beyond
    that raises, because no honest reduction exists at this level.
    """
    acc = value.zeta_part()
    pending: dict = {}
    for atoms, poly in value.terms.items():
        if not atoms:
            continue
        if len(atoms) > 1:
            raise ValueError(f"no forced reduction for symbol products: {atoms}")
        comp = atoms[0]
        if len(comp) == 1:
            acc = acc + poly * zeta_gen(comp[0])
        elif len(comp) == 2:
            pending[comp] = poly
        else:
            raise ValueError(f"no forced reduction at depth {len(comp)}: {comp}")
    while pending:
        (a, b), poly = next(iter(pending.items()))
        if a == b:
            del pending[(a, b)]
            half = poly.scaled(Fraction(1, 2))
            acc = acc + half * (zeta_gen(a) * zeta_gen(a) - zeta_gen(2 * a))
        else:
            partner = pending.get((b, a))
            if partner is None or partner != poly:
                raise ValueError(
                    f"zeta({a},{b}) lacks a matching zeta({b},{a}) term; "
                    "the stuffle identity does not apply"
                )
            del pending[(a, b)]
            del pending[(b, a)]
            acc = acc + poly * (zeta_gen(a) * zeta_gen(b) - zeta_gen(a + b))
    return acc


def path_independence_pairs(f: SymPoly):
    """Both routes from a symmetric function into the ring.

    Returns (via p-basis homomorphism, via words and forced reduction); the
    two must agree whenever the reduction is forced, e.g. for m_lam with no
    unit parts and at most two parts.
    """
    direct = zeta_hom(f)
    through_words = stuffle_reduce(zeta_word_poly(sym_to_words(f)))
    return direct, through_words


# --- JSON ---------------------------------------------------------------------


def zetapoly_to_json(p: ZetaPoly) -> list:
    out = []
    for mono, c in p.sorted_terms():
        out.append({"monomial": {n: e for n, e in mono}, "coeff": frac_str(c)})
    return out


def zetapoly_from_json(data: list) -> ZetaPoly:
    terms = {}
    for entry in data:
        mono = _monomial(tuple(entry["monomial"].items()))
        terms[mono] = frac_from_str(entry["coeff"])
    return ZetaPoly(terms)
