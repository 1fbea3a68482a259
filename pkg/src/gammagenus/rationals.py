"""Exact rational <-> string helpers shared by the JSON interfaces."""

from __future__ import annotations

from fractions import Fraction


def frac_str(q) -> str:
    """Render an exact rational as the canonical decimal-free string "p/q"."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def frac_from_str(s: str) -> Fraction:
    """Parse "p/q" (a bare integer string is accepted as p/1)."""
    text = s.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))
