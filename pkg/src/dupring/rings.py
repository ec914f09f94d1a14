"""Computable commutative rings with unit.

Every ring is either *enumerable* (finite; all elements can be listed and
operation tables are built on demand) or *sampleable* (infinite; elements are
drawn at random, equality and arithmetic are still exact).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product as iproduct
from typing import Any, Iterable

import numpy as np

from . import polys
from .errors import (
    ModeMismatch,
    NotEnumerable,
    NotPrime,
    OwnerMismatch,
    ParseError,
    ZeroRing,
)

DEFAULT_SAMPLE_BOUND = 100


@dataclass(frozen=True, eq=False)
class Element:
    ring: Ring
    value: Any

    def _same(self, other: Element) -> None:
        if not isinstance(other, Element):
            raise TypeError(f"cannot combine ring element with {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise OwnerMismatch(f"{self.ring.descriptor} vs {other.ring.descriptor}")

    def __add__(self, other: Element) -> Element:
        self._same(other)
        return Element(self.ring, self.ring._add(self.value, other.value))

    def __sub__(self, other: Element) -> Element:
        self._same(other)
        r = self.ring
        return Element(r, r._add(self.value, r._neg(other.value)))

    def __mul__(self, other: Element) -> Element:
        self._same(other)
        return Element(self.ring, self.ring._mul(self.value, other.value))

    def __neg__(self) -> Element:
        return Element(self.ring, self.ring._neg(self.value))

    def __pow__(self, k: int) -> Element:
        if k < 0:
            raise ValueError("negative exponent")
        out, base = self.ring.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.value == other.value and (other.ring is self.ring or other.ring == self.ring)

    def __hash__(self) -> int:
        return hash(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == self.ring._zero()

    def __str__(self) -> str:
        return self.ring.format_value(self.value)

    def __repr__(self) -> str:
        return f"<{self} in {self.ring.descriptor}>"


@dataclass(frozen=True)
class Tables:
    """Index-level operation tables of a finite ring (enumeration order)."""

    values: list
    index: dict
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    zero: int
    one: int

    @property
    def size(self) -> int:
        return len(self.values)


class Ring:
    descriptor: str = "?"
    enumerable: bool = False
    is_domain: bool = False

    # -- hooks -----------------------------------------------------------
    def _zero(self) -> Any:
        raise NotImplementedError

    def _one(self) -> Any:
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _canon(self, raw) -> Any:
        raise NotImplementedError

    def _values(self) -> Iterable:
        raise NotEnumerable(f"{self.descriptor} is not enumerable")

    def _sample_value(self, rng, bound: int):
        raise NotImplementedError

    def format_value(self, v) -> str:
        return str(v)

    def parse_value(self, text: str):
        raise NotImplementedError

    # -- public surface --------------------------------------------------
    @property
    def zero(self) -> Element:
        return Element(self, self._zero())

    @property
    def one(self) -> Element:
        return Element(self, self._one())

    def __call__(self, x) -> Element:
        if isinstance(x, Element):
            if x.ring != self:
                raise OwnerMismatch(f"{x.ring.descriptor} vs {self.descriptor}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        return Element(self, self._canon(x))

    def parse(self, text: str) -> Element:
        return Element(self, self.parse_value(text.strip()))

    @property
    def cardinality(self) -> int | None:
        return None

    def enumerate(self) -> list[Element]:
        if not self.enumerable:
            raise NotEnumerable(f"{self.descriptor} is not enumerable")
        return [Element(self, v) for v in self.tables.values]

    def sample(self, rng, bound: int = DEFAULT_SAMPLE_BOUND) -> Element:
        if self.enumerable:
            t = self.tables
            return Element(self, t.values[rng.randrange(t.size)])
        return Element(self, self._sample_value(rng, bound))

    @cached_property
    def tables(self) -> Tables:
        if not self.enumerable:
            raise NotEnumerable(f"{self.descriptor} is not enumerable")
        values = list(self._values())
        index = {v: k for k, v in enumerate(values)}
        n = len(values)
        add = np.empty((n, n), dtype=np.int32)
        mul = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(values):
            for j, b in enumerate(values):
                add[i, j] = index[self._add(a, b)]
                mul[i, j] = index[self._mul(a, b)]
        neg = np.array([index[self._neg(a)] for a in values], dtype=np.int32)
        return Tables(values, index, add, mul, neg, index[self._zero()], index[self._one()])

    @cached_property
    def cache(self) -> dict:
        # memo space for derived data (ideal lattice etc.); rings are immutable
        return {}

    def index_of(self, e: Element) -> int:
        return self.tables.index[self(e).value]

    def at(self, k: int) -> Element:
        return Element(self, self.tables.values[k])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor!r})"


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer literal, got {text!r}") from None


class IntegersMod(Ring):
    enumerable = True

    def __init__(self, n: int):
        if n == 1:
            raise ZeroRing("Z/1 is the zero ring")
        if n < 2:
            raise ParseError(f"modulus must be >= 2, got {n}")
        self.n = n
        self.descriptor = f"Z/{n}"
        self.is_domain = is_prime_int(n)

    @property
    def cardinality(self) -> int:
        return self.n

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _add(self, a, b):
        return (a + b) % self.n

    def _mul(self, a, b):
        return (a * b) % self.n

    def _neg(self, a):
        return (-a) % self.n

    def _canon(self, raw):
        return int(raw) % self.n

    def _values(self):
        return range(self.n)

    def parse_value(self, text):
        return _parse_int(text) % self.n


class PrimeField(IntegersMod):
    def __init__(self, p: int):
        if not is_prime_int(p):
            raise NotPrime(f"GF({p}): {p} is not prime")
        super().__init__(p)
        self.p = p
        self.descriptor = f"GF({p})"


class Integers(Ring):
    descriptor = "Z"
    is_domain = True

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _canon(self, raw):
        return int(raw)

    def _sample_value(self, rng, bound):
        return rng.randint(-bound, bound)

    def parse_value(self, text):
        return _parse_int(text)


class PolyRing(Ring):
    """GF(p)[x]."""

    is_domain = True

    def __init__(self, p: int):
        if not is_prime_int(p):
            raise NotPrime(f"GF({p}): {p} is not prime")
        self.p = p
        self.descriptor = f"GF({p})[x]"

    def _zero(self):
        return ()

    def _one(self):
        return (1,)

    def _add(self, a, b):
        return polys.add(a, b, self.p)

    def _mul(self, a, b):
        return polys.mul(a, b, self.p)

    def _neg(self, a):
        return polys.neg(a, self.p)

    def _canon(self, raw):
        if isinstance(raw, int):
            raw = (raw,)
        return polys.trim(raw, self.p)

    def _sample_value(self, rng, bound):
        # degree <= bound
        return polys.trim([rng.randrange(self.p) for _ in range(bound + 1)], self.p)

    def format_value(self, v):
        return polys.fmt(v)

    def parse_value(self, text):
        return _parse_poly(text, self.p)


class QuotientPolyRing(Ring):
    """GF(p)[x]/(f) for monic f of degree >= 1."""

    enumerable = True

    def __init__(self, p: int, modulus):
        if not is_prime_int(p):
            raise NotPrime(f"GF({p}): {p} is not prime")
        f = polys.trim(modulus, p)
        if polys.degree(f) < 1 or f[-1] != 1:
            raise ParseError(f"quotient polynomial must be monic of degree >= 1, got {polys.fmt(f)}")
        self.p = p
        self.modulus = f
        self.deg = polys.degree(f)
        self.descriptor = f"GF({p})[x]/({polys.fmt(f)})"
        self.is_domain = polys.is_irreducible(f, p)

    @property
    def cardinality(self) -> int:
        return self.p**self.deg

    def _zero(self):
        return ()

    def _one(self):
        return (1,)

    def _add(self, a, b):
        return polys.add(a, b, self.p)

    def _mul(self, a, b):
        return polys.rem(polys.mul(a, b, self.p), self.modulus, self.p)

    def _neg(self, a):
        return polys.neg(a, self.p)

    def _canon(self, raw):
        if isinstance(raw, int):
            raw = (raw,)
        return polys.rem(polys.trim(raw, self.p), self.modulus, self.p)

    def _values(self):
        # constant term is the fastest-varying digit: 0, 1, x, x+1, ...
        for digits in iproduct(range(self.p), repeat=self.deg):
            yield polys.trim(digits[::-1], self.p)

    def format_value(self, v):
        return polys.fmt(v)

    def parse_value(self, text):
        return polys.rem(_parse_poly(text, self.p), self.modulus, self.p)


class ProductRing(Ring):
    def __init__(self, left: Ring, right: Ring):
        if left.enumerable != right.enumerable:
            raise ModeMismatch(f"cannot mix {left.descriptor} and {right.descriptor}")
        self.left = left
        self.right = right
        self.enumerable = left.enumerable
        self.descriptor = f"{left.descriptor} x {right.descriptor}"

    @property
    def cardinality(self):
        if not self.enumerable:
            return None
        return self.left.cardinality * self.right.cardinality

    def _zero(self):
        return (self.left._zero(), self.right._zero())

    def _one(self):
        return (self.left._one(), self.right._one())

    def _add(self, a, b):
        return (self.left._add(a[0], b[0]), self.right._add(a[1], b[1]))

    def _mul(self, a, b):
        return (self.left._mul(a[0], b[0]), self.right._mul(a[1], b[1]))

    def _neg(self, a):
        return (self.left._neg(a[0]), self.right._neg(a[1]))

    def _canon(self, raw):
        a, b = raw
        return (self.left(a).value, self.right(b).value)

    def _values(self):
        for a in self.left._values():
            for b in self.right._values():
                yield (a, b)

    def _sample_value(self, rng, bound):
        return (self.left.sample(rng, bound).value, self.right.sample(rng, bound).value)

    def format_value(self, v):
        return f"({self.left.format_value(v[0])},{self.right.format_value(v[1])})"

    def parse_value(self, text):
        a, b = parse_pair(text)
        return (self.left.parse_value(a), self.right.parse_value(b))


def product_ring(a: Ring, b: Ring) -> ProductRing:
    return ProductRing(a, b)


# -- helpers -------------------------------------------------------------

def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _parse_poly(text: str, p: int):
    s = text.replace(" ", "")
    if re.fullmatch(r"-?\d+", s):
        return polys.trim([int(s)], p)
    return polys.parse(s, p)


def split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` occurrences outside any parentheses/brackets."""
    parts, depth, start, k = [], 0, 0, 0
    while k < len(text):
        ch = text[k]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        elif depth == 0 and text.startswith(sep, k):
            parts.append(text[start:k])
            k += len(sep)
            start = k
            continue
        k += 1
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append(text[start:])
    return parts


def parse_pair(text: str) -> tuple[str, str]:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError(f"expected a pair literal '(a,b)', got {text!r}")
    parts = split_top(s[1:-1], ",")
    if len(parts) != 2:
        raise ParseError(f"expected exactly two components in {text!r}")
    return parts[0].strip(), parts[1].strip()


_GF = re.compile(r"GF\((\d+)\)")


def make_ring(spec: str) -> Ring:
    """Build a ring from the ring-spec DSL, e.g. ``Z/6``, ``GF(2)[x]/(x^2)``,
    ``Z/2 x Z/3`` or ``dup(Z/6; 2)``."""
    s = spec.strip()
    if not s:
        raise ParseError("empty ring spec")
    factors = split_top(s, " x ")
    if len(factors) > 1:
        return reduce(ProductRing, (make_ring(f) for f in factors))
    if s.startswith("dup(") and s.endswith(")"):
        from .duplication import duplicate
        from .ideals import ideal_from_generators, parse_generators

        parts = split_top(s[4:-1], ";")
        if len(parts) != 2:
            raise ParseError(f"expected 'dup(<ring>; <gens>)', got {spec!r}")
        base = make_ring(parts[0])
        return duplicate(base, ideal_from_generators(base, parse_generators(base, parts[1])))
    if s == "Z":
        return Integers()
    m = re.fullmatch(r"Z/(\d+)", s)
    if m:
        return IntegersMod(int(m.group(1)))
    m = _GF.fullmatch(s)
    if m:
        return PrimeField(int(m.group(1)))
    m = re.fullmatch(r"GF\((\d+)\)\[x\]", s)
    if m:
        return PolyRing(int(m.group(1)))
    m = re.fullmatch(r"GF\((\d+)\)\[x\]/\((.+)\)", s)
    if m:
        p = int(m.group(1))
        if not is_prime_int(p):
            raise NotPrime(f"GF({p}): {p} is not prime")
        return QuotientPolyRing(p, polys.parse(m.group(2), p))
    raise ParseError(f"unrecognised ring spec {spec!r}")


# -- element-level queries -----------------------------------------------

@dataclass(frozen=True)
class SpecialElements:
    units: frozenset
    idempotents: frozenset
    nilpotents: frozenset


def special_elements(R: Ring) -> SpecialElements:
    t = R.tables
    n = t.size
    units = {k for k in range(n) if (t.mul[k] == t.one).any()}
    idem = {k for k in range(n) if t.mul[k, k] == k}
    nil = set()
    for k in range(n):
        x = k
        for _ in range(n):
            if x == t.zero:
                nil.add(k)
                break
            x = t.mul[x, k]
    as_set = lambda ks: frozenset(R.at(k) for k in sorted(ks))
    return SpecialElements(as_set(units), as_set(idem), as_set(nil))


def sample(R: Ring, rng, bound: int = DEFAULT_SAMPLE_BOUND) -> Element:
    return R.sample(rng, bound)


AXIOMS = ("add-assoc", "add-comm", "mul-assoc", "mul-comm", "distrib", "add-inverse", "zero", "one")


def axiom_violations(
    R: Ring, rng=None, samples: int = 10_000, exhaustive_limit: int = 16, bound: int = 16
) -> dict:
    """Check the commutative ring axioms.

    Finite rings up to ``exhaustive_limit`` elements are checked on every
    triple; larger or infinite rings on ``samples`` seeded triples (infinite
    rings draw elements of size at most ``bound``).  Returns
    ``{"method": ..., "triples": n, "violations": [(axiom, a, b, c), ...]}``.
    """
    if R.enumerable and R.cardinality <= exhaustive_limit:
        t = R.tables
        n = t.size
        a, b, c = (x.ravel() for x in np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij"))
        return _table_axioms(R, a, b, c, "exhaustive")
    if rng is None:
        raise ValueError("sampled axiom check needs a seeded rng")
    if R.enumerable:
        t = R.tables
        draw = lambda: np.array([rng.randrange(t.size) for _ in range(samples)], dtype=np.int64)
        return _table_axioms(R, draw(), draw(), draw(), "sampled")
    bad = []
    z, o = R.zero, R.one
    for _ in range(samples):
        x, y, w = (R.sample(rng, bound) for _ in range(3))
        checks = {
            "add-assoc": (x + y) + w == x + (y + w),
            "add-comm": x + y == y + x,
            "mul-assoc": (x * y) * w == x * (y * w),
            "mul-comm": x * y == y * x,
            "distrib": x * (y + w) == x * y + x * w,
            "add-inverse": x + (-x) == z,
            "zero": x + z == x,
            "one": o * x == x,
        }
        bad.extend((name, str(x), str(y), str(w)) for name, ok in checks.items() if not ok)
    return {"method": "sampled", "triples": samples, "violations": bad}


def _table_axioms(R: Ring, a, b, c, method: str) -> dict:
    t = R.tables
    A, M = t.add, t.mul
    checks = {
        "add-assoc": A[A[a, b], c] == A[a, A[b, c]],
        "add-comm": A[a, b] == A[b, a],
        "mul-assoc": M[M[a, b], c] == M[a, M[b, c]],
        "mul-comm": M[a, b] == M[b, a],
        "distrib": M[a, A[b, c]] == A[M[a, b], M[a, c]],
        "add-inverse": A[a, t.neg[a]] == t.zero,
        "zero": A[a, t.zero] == a,
        "one": M[t.one, a] == a,
    }
    bad = []
    for name, ok in checks.items():
        for k in np.flatnonzero(~ok)[:5]:
            bad.append((name, *(R.format_value(t.values[x[k]]) for x in (a, b, c))))
    return {"method": method, "triples": int(len(a)), "violations": bad}
