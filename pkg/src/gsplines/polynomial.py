"""Dense univariate polynomials with integer coefficients.

A polynomial is a tuple of ints in ascending-power order with no trailing
zeros; the zero polynomial is ``()``.  Everything here is a pure function on
such tuples.  A handful of helpers work modulo a prime ``p`` (coefficients
then live in ``range(p)``).
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Optional, Sequence

Poly = tuple  # tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)


def strip(coeffs: Iterable[int]) -> Poly:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    """Degree of ``f``; the zero polynomial has degree -1."""
    return len(f) - 1


def leading(f: Poly) -> int:
    return f[-1] if f else 0


def add(f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    return strip((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n))


def neg(f: Poly) -> Poly:
    return tuple(-a for a in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def scale(c: int, f: Poly) -> Poly:
    return strip(c * a for a in f)


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return strip(out)


def content(f: Poly) -> int:
    """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*f) if f else 0


def primitive(f: Poly) -> Poly:
    c = content(f)
    return tuple(a // c for a in f) if c else ZERO


def positive(f: Poly) -> Poly:
    """Multiply by the unit -1 if needed so the leading coefficient is positive."""
    return neg(f) if f and f[-1] < 0 else f


def exact_quotient(f: Poly, g: Poly) -> Optional[Poly]:
    """Return ``q`` with ``f == q*g`` in Z[x], or None if no such ``q`` exists."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return ZERO
    r = list(f)
    dg, lg = degree(g), g[-1]
    if len(r) - 1 < dg:
        return None
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        top = r[k + dg]
        if top % lg:
            return None
        c = top // lg
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] -= c * b
    if any(r):
        return None
    return strip(q)


def pseudo_remainder(f: Poly, g: Poly) -> Poly:
    """Remainder of ``lc(g)**k * f`` by ``g`` for a suitable ``k``; content is not controlled."""
    r = list(f)
    dg, lg = degree(g), g[-1]
    if len(r) - 1 < dg:
        return strip(r)
    steps = len(r) - dg
    for _ in range(steps):
        r = strip(r)
        if degree(r) < dg:
            break
        top, shift = r[-1], degree(r) - dg
        r = [lg * a for a in r]
        for j, b in enumerate(g):
            r[shift + j] -= top * b
    return strip(r)


def gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor in Z[x], normalized to a positive leading coefficient.

    Uses the primitive polynomial remainder sequence: the gcd of the contents
    times the primitive part of the last nonzero remainder.
    """
    if not f:
        return positive(g)
    if not g:
        return positive(f)
    c = math.gcd(content(f), content(g))
    a, b = primitive(f), primitive(g)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r = pseudo_remainder(a, b)
        a, b = b, primitive(r)
    return positive(scale(c, primitive(a)))


def lcm(f: Poly, g: Poly) -> Poly:
    """Least common multiple in Z[x] (a UFD), leading coefficient positive."""
    if not f or not g:
        return ZERO
    q = exact_quotient(mul(f, g), gcd(f, g))
    assert q is not None
    return positive(q)


def compose_affine(f: Poly, epsilon: int, shift: int) -> Poly:
    """Substitute ``x -> epsilon*x + shift`` into ``f``."""
    out: Poly = ZERO
    lin = strip((shift, epsilon))
    for a in reversed(f):  # Horner
        out = add(mul(out, lin), (a,))
    return out


# -- arithmetic over GF(p) -------------------------------------------------


def reduce_mod(f: Poly, p: int) -> Poly:
    return strip(a % p for a in f)


def _divmod_mod(f: Poly, g: Poly, p: int) -> tuple:
    r = list(f)
    dg = degree(g)
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(r) - dg, 0)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = (r[k + dg] * inv) % p
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] = (r[k + j] - c * b) % p
    return strip(q), strip(r)


def gcd_mod(f: Poly, g: Poly, p: int) -> Poly:
    """Monic gcd of ``f`` and ``g`` in GF(p)[x]."""
    a, b = reduce_mod(f, p), reduce_mod(g, p)
    while b:
        a, b = b, _divmod_mod(a, b, p)[1]
    if not a:
        return ZERO
    inv = pow(a[-1], -1, p)
    return strip((c * inv) % p for c in a)


def divides_mod(d: Poly, f: Poly, p: int) -> bool:
    """Does ``d`` divide ``f`` in GF(p)[x]?"""
    d, f = reduce_mod(d, p), reduce_mod(f, p)
    if not d:
        return not f
    return not _divmod_mod(f, d, p)[1]


# -- text ------------------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(?:([A-Za-z_]\w*)\s*(?:\^\s*(\d+)|\*\*\s*(\d+))?)?")


def parse(text: str, variable: str = "x") -> Poly:
    """Parse ``"x^2 - 9"``-style text into a coefficient tuple.

    Accepts ``^`` or ``**`` for powers and an optional ``*`` between a
    coefficient and the variable.  Raises ValueError on anything else.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial literal")
    coeffs: dict = {}
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign, num, var, e1, e2 = m.groups()
        if not sign and not first:
            raise ValueError(f"missing operator in polynomial {text!r} at position {pos}")
        if not num and not var:
            raise ValueError(f"dangling sign in polynomial {text!r}")
        if var is not None and var != variable:
            raise ValueError(f"unknown variable {var!r} in {text!r} (expected {variable!r})")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        e = 0 if var is None else int(e1 or e2 or 1)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        first = False
    top = max(coeffs)
    return strip(coeffs.get(i, 0) for i in range(top + 1))


def render(f: Sequence[int], variable: str = "x") -> str:
    """Human-readable form, highest power first: ``(-9, 0, 1) -> "x^2 - 9"``."""
    if not f:
        return "0"
    parts = []
    for e in range(len(f) - 1, -1, -1):
        c = f[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = variable if e == 1 else f"{variable}^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
