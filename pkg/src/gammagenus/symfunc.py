"""Symmetric functions over exact rationals in the m / e / p bases.

A SymPoly is a basis tag plus a sparse map from partitions to rational
coefficients.  Conversions between bases are deliberately not transcribed
from closed formulas: every basis element can be expanded brute-force into
honest variables t_1..t_n (a MultiPoly), and conversion matrices are built
from those expansions, so the same machinery that implements to_basis also
serves as the oracle that cross-checks it.  Triangularity of the transition
matrices guarantees the exact linear solves are unique.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .partitions import Partition, as_partition, partitions_of, sort_key
from .rationals import frac_from_str, frac_str

BASES = ("m", "e", "p")


_SHIFT = 16


def _pack(exps, shift: int) -> int:
    acc = 0
    for x in exps:
        acc = (acc << shift) | x
    return acc


def _unpack(packed: int, nvars: int, shift: int) -> tuple:
    mask = (1 << shift) - 1
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = packed & mask
        packed >>= shift
    return tuple(out)


class MultiPoly:
    """Sparse polynomial in t_1..t_n with exact coefficients.

    Keys are exponent tuples of length ``nvars``.  Coefficients are ints or
    Fractions (both exact); zeros are never stored.
    """

    __slots__ = ("nvars", "terms", "_packed")

    def __init__(self, nvars: int, terms=None):
        self.nvars = int(nvars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                key = tuple(exps)
                if len(key) != self.nvars:
                    raise ValueError(
                        f"exponent vector {key} does not have {self.nvars} entries"
                    )
                if c:
                    clean[key] = clean.get(key, 0) + c
        self.terms = {k: c for k, c in clean.items() if c}
        self._packed = None

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return MultiPoly(self.nvars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + other.scaled(-1)

    def scaled(self, c) -> "MultiPoly":
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        # Exponent vectors are packed into one int (16 bits per variable) so
        # the hot loop does a single integer add per term pair instead of
        # building a tuple.  16 bits leaves no overflow risk at the degrees
        # this module sees.  Packed forms are kept on the instances because
        # expansion chains reuse the same factors over and over.
        swapped = a is other.terms
        pa = (other if swapped else self)._packed_terms()
        pb = (self if swapped else other)._packed_terms()
        packed: dict = {}
        get = packed.get
        for e1, c1 in pa.items():
            for e2, c2 in pb.items():
                key = e1 + e2
                prev = get(key)
                packed[key] = c1 * c2 if prev is None else prev + c1 * c2
        n = self.nvars
        out = {_unpack(k, n, _SHIFT): c for k, c in packed.items() if c}
        result = MultiPoly(n, out)
        result._packed = {k: c for k, c in packed.items() if c}
        return result

    def _packed_terms(self) -> dict:
        if self._packed is None:
            self._packed = {_pack(e, _SHIFT): c for e, c in self.terms.items()}
        return self._packed

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.terms!r})"


def _orbit_exponent_vectors(lam: Partition, n: int):
    """All distinct arrangements of the multiset lam padded with 0s to length n."""
    counts = Counter(list(lam) + [0] * (n - len(lam)))
    values = sorted(counts, reverse=True)
    out = []
    vec = []

    def place(remaining):
        if remaining == 0:
            out.append(tuple(vec))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                vec.append(v)
                place(remaining - 1)
                vec.pop()
                counts[v] += 1

    place(n)
    return out


_EXPANSION_MEMO: dict = {}


def clear_expansion_cache() -> None:
    """Drop memoized raw expansions (conversion matrices stay cached)."""
    _EXPANSION_MEMO.clear()


def _single_factor(basis: str, k: int, n: int) -> MultiPoly:
    key = (basis, k, n)
    hit = _EXPANSION_MEMO.get(key)
    if hit is not None:
        return hit
    if basis == "e":
        if k > n:
            raise ValueError(
                f"e_{k} collapses to 0 in {n} variables; need n >= {k}"
            )
        terms = {}
        for idx in combinations(range(n), k):
            vec = [0] * n
            for i in idx:
                vec[i] = 1
            terms[tuple(vec)] = 1
        mp = MultiPoly(n, terms)
    elif basis == "p":
        terms = {
            tuple(k if j == i else 0 for j in range(n)): 1 for i in range(n)
        }
        mp = MultiPoly(n, terms)
    else:  # pragma: no cover - internal misuse
        raise ValueError(f"no single-generator factor in basis {basis!r}")
    _EXPANSION_MEMO[key] = mp
    return mp


def _expand_element(basis: str, lam: Partition, n: int) -> MultiPoly:
    """Memoized expansion of one basis element in n variables.

    Products peel off the smallest part so that (2, 1, 1, 1) reuses the
    cached expansion of (2, 1, 1).
    """
    key = (basis, lam, n)
    hit = _EXPANSION_MEMO.get(key)
    if hit is not None:
        return hit
    if basis == "m":
        if len(lam) > n:
            raise ValueError(
                f"m_{lam} collapses to 0 in {n} variables; need n >= {len(lam)}"
            )
        mp = MultiPoly(n, {vec: 1 for vec in _orbit_exponent_vectors(lam, n)})
    elif not lam:
        mp = MultiPoly.one(n)
    elif len(lam) == 1:
        mp = _single_factor(basis, lam[0], n)
    else:
        mp = _expand_element(basis, lam[:-1], n) * _single_factor(basis, lam[-1], n)
    _EXPANSION_MEMO[key] = mp
    return mp


class SymPoly:
    """Symmetric function written in one of the bases "m", "e", "p"."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}, got {basis!r}")
        self.basis = basis
        clean: dict = {}
        for lam, c in (terms or {}).items():
            q = Fraction(c)
            if q:
                key = as_partition(lam)
                q0 = clean.get(key)
                clean[key] = q if q0 is None else q0 + q
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def zero(cls, basis: str) -> "SymPoly":
        return cls(basis)

    @classmethod
    def basis_element(cls, basis: str, lam) -> "SymPoly":
        return cls(basis, {as_partition(lam): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPoly)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if self.basis != other.basis:
            raise ValueError("mixed-basis addition; convert explicitly first")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymPoly(self.basis, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + other.scaled(-1)

    def __neg__(self) -> "SymPoly":
        return self.scaled(-1)

    def scaled(self, c) -> "SymPoly":
        q = Fraction(c)
        return SymPoly(self.basis, {lam: q * v for lam, v in self.terms.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        """Product, routed through the p basis where it is free."""
        fp = to_basis(self, "p")
        gp = to_basis(other, "p")
        out: dict = {}
        for lam, a in fp.terms.items():
            for mu, b in gp.terms.items():
                key = tuple(sorted(lam + mu, reverse=True))
                out[key] = out.get(key, Fraction(0)) + a * b
        return to_basis(SymPoly("p", out), self.basis)

    def weights(self) -> list:
        return sorted({sum(lam) for lam in self.terms})

    def homogeneous_part(self, w: int) -> "SymPoly":
        return SymPoly(
            self.basis, {lam: c for lam, c in self.terms.items() if sum(lam) == w}
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"{lam}: {c}" for lam, c in sorted(self.terms.items(), key=lambda t: sort_key(t[0]))
        )
        return f"SymPoly({self.basis!r}, {{{body}}})"


def expand_in_vars(f: SymPoly, n: int) -> MultiPoly:
    """Expand f as an honest polynomial in t_1..t_n.

    Rejects any request where a basis element of f would degenerate to an
    untruncated-inequivalent form: m_lam needs n >= len(lam) and e_k needs
    n >= k, otherwise they collapse to 0.  With n at least the weight of f
    the expansion is faithful, which is how the oracle call sites use it.
    """
    if n < 1:
        raise ValueError("need at least one variable")
    out = MultiPoly.zero(n)
    for lam, c in f.terms.items():
        out = out + _expand_element(f.basis, lam, n).scaled(c)
    return out


def collect_symmetric_to_m(mp: MultiPoly, strict: bool = True) -> SymPoly:
    """Collect a symmetric MultiPoly into the m basis.

    With strict=True the coefficient of every monomial is compared against
    its orbit representative, so an asymmetric input raises instead of being
    silently mangled.
    """
    reps: dict = {}
    for exps, c in mp.terms.items():
        rep = tuple(sorted(exps, reverse=True))
        if rep in reps:
            if strict and reps[rep] != c:
                raise ValueError("polynomial is not symmetric")
        else:
            reps[rep] = c
    terms = {}
    for rep, c in reps.items():
        lam = tuple(p for p in rep if p)
        terms[lam] = Fraction(c)
    return SymPoly("m", terms)


# --- exact linear algebra over Fraction ------------------------------------


def _identity(n: int):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = Fraction(0)
            for t in range(k):
                if a[i][t]:
                    acc += a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _invert(matrix):
    n = len(matrix)
    a = [list(row) for row in matrix]
    inv = [list(row) for row in _identity(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        scale = Fraction(1) / a[col][col]
        a[col] = [x * scale for x in a[col]]
        inv[col] = [x * scale for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


# --- conversion matrices ----------------------------------------------------


@lru_cache(maxsize=None)
def _basis_to_m_matrix(basis: str, n: int):
    """Rows: basis elements of weight n; columns: m-coefficients (fixed order)."""
    parts = partitions_of(n)
    rows = []
    for lam in parts:
        mp = _expand_element(basis, lam, n)
        row = tuple(
            Fraction(mp.terms.get(mu + (0,) * (n - len(mu)), 0)) for mu in parts
        )
        rows.append(row)
    return tuple(rows)


@lru_cache(maxsize=None)
def _m_to_basis_matrix(basis: str, n: int):
    return _invert(_basis_to_m_matrix(basis, n))


@lru_cache(maxsize=None)
def _conversion_matrix(src: str, dst: str, n: int):
    """C with src_lam = sum_mu C[lam][mu] dst_mu, over partitions of n."""
    if src == dst:
        return _identity(len(partitions_of(n)))
    if src == "m":
        return _m_to_basis_matrix(dst, n)
    s = _basis_to_m_matrix(src, n)
    if dst == "m":
        return s
    return _matmul(s, _m_to_basis_matrix(dst, n))


def e_to_m_matrix(n: int):
    """Transition matrix M with e_lam = sum_mu M[lam][mu] m_mu at weight n.

    Rows and columns follow the fixed partition order.  The matrix is built
    from raw expansions, never from a transcribed formula, and it comes out
    symmetric; the verification suites assert that.
    """
    if n < 1:
        raise ValueError("weight must be >= 1")
    return [list(row) for row in _basis_to_m_matrix("e", n)]


def to_basis(f: SymPoly, target: str) -> SymPoly:
    """Rewrite f exactly in the target basis ("m", "e" or "p")."""
    if target not in BASES:
        raise ValueError(f"basis must be one of {BASES}, got {target!r}")
    if f.basis == target:
        return f
    out: dict = {}
    for w in f.weights():
        if w == 0:
            out[()] = out.get((), Fraction(0)) + f.terms[()]
            continue
        parts = partitions_of(w)
        conv = _conversion_matrix(f.basis, target, w)
        comp = f.homogeneous_part(w).terms
        for i, lam in enumerate(parts):
            a = comp.get(lam)
            if not a:
                continue
            row = conv[i]
            for j, mu in enumerate(parts):
                if row[j]:
                    out[mu] = out.get(mu, Fraction(0)) + a * row[j]
    return SymPoly(target, out)


# --- JSON -------------------------------------------------------------------


def sympoly_to_json(f: SymPoly) -> dict:
    terms = [
        {"partition": list(lam), "coeff": frac_str(c)}
        for lam, c in sorted(f.terms.items(), key=lambda t: sort_key(t[0]))
    ]
    return {"basis": f.basis, "terms": terms}


def sympoly_from_json(data: dict) -> SymPoly:
    return SymPoly(
        data["basis"],
        {tuple(t["partition"]): frac_from_str(t["coeff"]) for t in data["terms"]},
    )
