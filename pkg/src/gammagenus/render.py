"""Plain-text rendering of ring elements, words and genus tables.

Unicode glyphs by default; the ascii flag swaps gamma, pi^2 and zeta(k)
spellings in for scripts that cannot take UTF-8.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import sort_key
from .zetaring import GAMMA, PI2, ZetaPoly, generator_weight


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _generator_text(name: str, power: int, ascii_mode: bool) -> str:
    if name == GAMMA:
        head = "gamma" if ascii_mode else "γ"
        return head if power == 1 else f"{head}^{power}"
    if name == PI2:
        head = "pi" if ascii_mode else "π"
        return f"{head}^{2 * power}"
    k = generator_weight(name)
    head = f"zeta({k})" if ascii_mode else f"ζ({k})"
    return head if power == 1 else f"{head}^{power}"


def format_zeta_poly(p: ZetaPoly, ascii_mode: bool = False) -> str:
    if not p:
        return "0"
    pieces = []
    for mono, c in p.sorted_terms():
        body = " ".join(_generator_text(n, e, ascii_mode) for n, e in mono)
        if not body:
            text = format_fraction(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{format_fraction(abs(c))} {body}"
        pieces.append(("-" if c < 0 else "+", text))
    sign, first = pieces[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def format_word(w) -> str:
    if not w:
        return "1"
    return "".join(f"z_{i}" for i in w)


def format_qsym(q) -> str:
    terms = q.sorted_terms()
    if not terms:
        return "0"
    pieces = []
    for w, c in terms:
        body = format_word(w)
        if abs(c) == 1 and w:
            text = body
        elif not w:
            text = format_fraction(abs(c))
        else:
            text = f"{format_fraction(abs(c))} {body}"
        pieces.append(("-" if c < 0 else "+", text))
    sign, first = pieces[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def format_c_monomial(lam) -> str:
    if not lam:
        return "1"
    out = []
    seen = {}
    for part in lam:
        seen[part] = seen.get(part, 0) + 1
    for part in sorted(seen, reverse=True):
        e = seen[part]
        out.append(f"c_{part}" if e == 1 else f"c_{part}^{e}")
    return "".join(out)


def format_mzv_args(args, ascii_mode: bool = False) -> str:
    head = "zeta" if ascii_mode else "ζ"
    return f"{head}({','.join(str(i) for i in args)})"


def format_mzv_terms(terms, ascii_mode: bool = False) -> str:
    if not terms:
        return "0"
    pieces = []
    for t in terms:
        body = format_mzv_args(t.args, ascii_mode)
        if abs(t.coeff) == 1:
            text = body
        else:
            text = f"{format_fraction(abs(t.coeff))} {body}"
        pieces.append(("-" if t.coeff < 0 else "+", text))
    sign, first = pieces[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def format_genus_line(gp, ascii_mode: bool = False) -> str:
    parts = []
    for lam in sorted(gp.coeffs, key=sort_key):
        coeff = gp.coeffs[lam]
        body = format_zeta_poly(coeff, ascii_mode)
        cm = format_c_monomial(lam)
        if len(coeff.terms) > 1 or body.startswith("-"):
            parts.append(f"({body}) {cm}")
        else:
            parts.append(f"{body} {cm}")
    return f"Q_{gp.degree} = " + " + ".join(parts)


def format_cy_genus_line(gp, ascii_mode: bool = False) -> str:
    parts = []
    for lam, terms in gp.sorted_terms():
        body = format_mzv_terms(terms, ascii_mode)
        cm = format_c_monomial(lam)
        if len(terms) > 1:
            parts.append(f"({body}) {cm}")
        else:
            parts.append(f"{body} {cm}")
    return f"Q_{gp.degree}[c_1=0] = " + " + ".join(parts)


def format_bounded(bv, ascii_mode: bool = False) -> str:
    pm = "+/-" if ascii_mode else "±"
    return f"{bv.value:.12g} {pm} {bv.bound:.3g}"
