"""Dense univariate polynomials over GF(p).

A polynomial is a tuple of coefficients in ``[0, p)``, lowest degree first,
with no trailing zeros.  The zero polynomial is the empty tuple.
"""
from __future__ import annotations

import re
from itertools import product

import numpy as np

from .errors import ParseError

Poly = tuple[int, ...]


def trim(coeffs, p: int) -> Poly:
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    return len(f) - 1  # -1 for zero


def add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return trim([(f[k] if k < len(f) else 0) + (g[k] if k < len(g) else 0) for k in range(n)], p)


def neg(f: Poly, p: int) -> Poly:
    return tuple((-x) % p for x in f)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    return add(f, neg(g, p), p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    if p < 2**20:
        # int64 convolution cannot overflow at this size
        c = np.convolve(np.array(f, dtype=np.int64), np.array(g, dtype=np.int64)) % p
        nz = np.flatnonzero(c)
        return tuple(c[: nz[-1] + 1].tolist()) if len(nz) else ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out, p)


def scale(f: Poly, c: int, p: int) -> Poly:
    return trim([c * x for x in f], p)


def divmod_poly(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, p)
    r = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    dg = len(g) - 1
    for k in range(len(r) - 1, dg - 1, -1):
        c = (r[k] * inv) % p
        if c:
            q[k - dg] = c
            for j, b in enumerate(g):
                r[k - dg + j] = (r[k - dg + j] - c * b) % p
    return trim(q, p), trim(r[:dg], p)


def rem(f: Poly, g: Poly, p: int) -> Poly:
    return divmod_poly(f, g, p)[1]


def monic(f: Poly, p: int) -> Poly:
    if not f:
        return f
    return scale(f, pow(f[-1], -1, p), p)


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, rem(f, g, p)
    return monic(f, p)


def divides(g: Poly, f: Poly, p: int) -> bool:
    if not g:
        return not f
    return not rem(f, g, p)


def monic_polys(deg: int, p: int):
    """All monic polynomials of exact degree ``deg``."""
    for low in product(range(p), repeat=deg):
        yield tuple(low) + (1,)


def is_irreducible(f: Poly, p: int) -> bool:
    d = degree(f)
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in monic_polys(k, p):
            if divides(g, f, p):
                return False
    return True


def fmt(f: Poly) -> str:
    if not f:
        return "0"
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = "x" if k == 1 else f"x^{k}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)


_TERM = re.compile(r"^(?:(\d+)\*?)?(x(?:\^(\d+))?)?$")


def parse(text: str, p: int) -> Poly:
    """Parse ``2*x^2+x+1``-style literals; coefficients are reduced mod p."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError(f"empty polynomial literal {text!r}")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        m = _TERM.match(term)
        if not term or m is None or (m.group(1) is None and m.group(2) is None):
            raise ParseError(f"bad polynomial term {term!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            k = 0
        else:
            k = int(m.group(3)) if m.group(3) is not None else 1
        coeffs[k] = coeffs.get(k, 0) + c
    top = max(coeffs)
    return trim([coeffs.get(k, 0) for k in range(top + 1)], p)
