"""The amalgamated duplication R ⋈ I and related constructions.

Elements of R ⋈ I are pairs (r, s) of R x R with s - r in I.  Internally an
element is stored as (r, i) with i = s - r, so every stored value is valid by
construction; the (r, s) view is only used for input and output.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .errors import (
    ImproperIdeal,
    InvalidElement,
    NotEnumerable,
    NotPrime,
    OwnerMismatch,
    SquareNotZero,
)
from .ideals import (
    IdealRep,
    QuotientRing,
    ideal_from_generators,
    ideal_from_indices,
    ideal_product,
    is_prime,
    membership,
    principal_generator,
)
from .rings import Element, Ring, parse_pair


def _gens_text(I: IdealRep) -> str:
    return ", ".join(str(g) for g in I.generators) or "0"


class DupRing(Ring):
    def __init__(self, base: Ring, ideal: IdealRep):
        if ideal.ring != base:
            raise OwnerMismatch(f"ideal of {ideal.ring.descriptor} used with {base.descriptor}")
        if not base.enumerable:
            # membership in I must be decidable: gcd-principal ideals only
            principal_generator(ideal)
        if not ideal.proper:
            raise ImproperIdeal(f"{ideal} is not a proper ideal of {base.descriptor}")
        self.base = base
        self.ideal = ideal
        self.enumerable = base.enumerable
        self.is_domain = base.is_domain and ideal.is_zero
        self.descriptor = f"dup({base.descriptor}; {_gens_text(ideal)})"

    @property
    def cardinality(self):
        if not self.enumerable:
            return None
        return self.base.cardinality * len(self.ideal)

    def _zero(self):
        z = self.base._zero()
        return (z, z)

    def _one(self):
        return (self.base._one(), self.base._zero())

    def _add(self, a, b):
        B = self.base
        return (B._add(a[0], b[0]), B._add(a[1], b[1]))

    def _mul(self, a, b):
        # (r, r+i)(t, t+j) = (rt, rt + (rj + it + ij))
        B = self.base
        r, i = a
        t, j = b
        cross = B._add(B._add(B._mul(r, j), B._mul(i, t)), B._mul(i, j))
        return (B._mul(r, t), cross)

    def _neg(self, a):
        return (self.base._neg(a[0]), self.base._neg(a[1]))

    def _canon(self, raw):
        r, s = raw
        return self._internal(self.base(r), self.base(s))

    def _internal(self, r: Element, s: Element):
        i = s - r
        if not membership(self.ideal, i):
            raise InvalidElement(f"({r},{s}) is not in {self.descriptor}: {i} is not in {self.ideal}")
        return (r.value, i.value)

    def _values(self):
        ideal_vals = [e.value for e in self.ideal.sorted_elements()]
        for r in self.base._values():
            for i in ideal_vals:
                yield (r, i)

    def _sample_value(self, rng, bound):
        B = self.base
        a = B(principal_generator(self.ideal))
        r = B.sample(rng, bound)
        t = B.sample(rng, bound)
        return (r.value, (t * a).value)

    def format_value(self, v):
        B = self.base
        return f"({B.format_value(v[0])},{B.format_value(B._add(v[0], v[1]))})"

    def parse_value(self, text):
        r, s = parse_pair(text)
        return self._internal(self.base.parse(r), self.base.parse(s))

    # -- views -----------------------------------------------------------
    def pair(self, r, s) -> Element:
        """The element (r, s); raises InvalidElement unless s - r is in I."""
        return Element(self, self._internal(self.base(r), self.base(s)))

    def from_internal(self, r, i) -> Element:
        r, i = self.base(r), self.base(i)
        if not membership(self.ideal, i):
            raise InvalidElement(f"{i} is not in {self.ideal}")
        return Element(self, (r.value, i.value))

    def diag(self, r) -> Element:
        r = self.base(r)
        return Element(self, (r.value, self.base._zero()))

    def first(self, e: Element) -> Element:
        return Element(self.base, self(e).value[0])

    def second(self, e: Element) -> Element:
        v = self(e).value
        return Element(self.base, self.base._add(v[0], v[1]))

    def offset(self, e: Element) -> Element:
        """i = s - r."""
        return Element(self.base, self(e).value[1])


def duplicate(R: Ring, I: IdealRep) -> DupRing:
    return DupRing(R, I)


# -- the two conductor ideals ------------------------------------------------

def o1(D: DupRing) -> IdealRep:
    """{(0, i) : i in I}, generated by (0, g) for the generators g of I."""
    zero = D.base.zero
    gens = [D.pair(zero, g) for g in D.ideal.generators]
    if D.enumerable:
        return ideal_from_generators(D, gens)
    return IdealRep(D, gens, member=lambda e: D.first(e).is_zero)


def o2(D: DupRing) -> IdealRep:
    """{(i, 0) : i in I}, generated by (g, 0) for the generators g of I."""
    zero = D.base.zero
    gens = [D.pair(g, zero) for g in D.ideal.generators]
    if D.enumerable:
        return ideal_from_generators(D, gens)
    return IdealRep(D, gens, member=lambda e: D.second(e).is_zero)


def o_by_definition(D: DupRing, which: int) -> IdealRep:
    """O1 or O2 materialized straight from its set description."""
    if not D.enumerable:
        raise NotEnumerable(f"{D.descriptor} is not enumerable")
    zero = D.base.zero
    if which == 1:
        members = [D.pair(zero, i) for i in D.ideal.sorted_elements()]
    elif which == 2:
        members = [D.pair(i, zero) for i in D.ideal.sorted_elements()]
    else:
        raise ValueError("which must be 1 or 2")
    return ideal_from_indices(D, [D.index_of(e) for e in members])


def retraction(D: DupRing, e: Element) -> Element:
    """phi(r, r+i) = r."""
    return D.first(e)


# -- quotients by O1 / O2 ----------------------------------------------------

@dataclass(frozen=True)
class IsoCheck:
    ok: bool
    checked: int
    counterexample: str | None = None


def quotient_by_oi(D: DupRing, which: int) -> tuple[QuotientRing, IsoCheck]:
    """Build D/Oi and check that the projection onto the i-th coordinate
    induces a ring isomorphism onto R."""
    if not D.enumerable:
        raise NotEnumerable(f"{D.descriptor} is not enumerable")
    O = o1(D) if which == 1 else o2(D)
    Q = QuotientRing(D, O)
    proj = D.first if which == 1 else D.second
    R = D.base
    checked = 0

    for x in D.enumerate():
        checked += 1
        if proj(x) != proj(Q.representative(Q.project(x))):
            return Q, IsoCheck(False, checked, f"projection not constant on the coset of {x}")

    qs = Q.enumerate()
    images = [proj(Q.representative(q)) for q in qs]
    if len(set(images)) != len(images):
        return Q, IsoCheck(False, checked, "induced map is not injective")
    if len(images) != R.cardinality:
        return Q, IsoCheck(False, checked, f"|D/O{which}| = {len(images)} but |R| = {R.cardinality}")

    f = lambda q: proj(Q.representative(q))
    if f(Q.one) != R.one:
        return Q, IsoCheck(False, checked, "unit not preserved")
    for a, b in product(qs, repeat=2):
        checked += 1
        if f(a + b) != f(a) + f(b):
            return Q, IsoCheck(False, checked, f"sum of {a} and {b}")
        if f(a * b) != f(a) * f(b):
            return Q, IsoCheck(False, checked, f"product of {a} and {b}")
    return Q, IsoCheck(True, checked)


# -- primes ----------------------------------------------------------------

class LiftCase(str, enum.Enum):
    CONTAINS_I = "ContainsI"
    NOT_CONTAINS_I = "NotContainsI"


@dataclass(frozen=True)
class PrimeLift:
    base_prime: IdealRep
    case: LiftCase
    p0: IdealRep
    p1: IdealRep
    p2: IdealRep

    @property
    def lifts(self) -> tuple[IdealRep, ...]:
        if self.case is LiftCase.CONTAINS_I:
            return (self.p1,)
        return (self.p1, self.p2)


def lift_prime(D: DupRing, P: IdealRep) -> PrimeLift:
    """P0 = {(p, p+i) : i in I∩P}, P1 = {(p, p+i) : i in I}, P2 = {(p+i, p)}."""
    R = D.base
    if P.ring != R:
        raise OwnerMismatch(f"prime of {P.ring.descriptor} lifted into {D.descriptor}")
    if not P.proper or not is_prime(P):
        raise NotPrime(f"{P} is not a prime ideal of {R.descriptor}")
    contains = all(membership(P, g) for g in D.ideal.generators)
    case = LiftCase.CONTAINS_I if contains else LiftCase.NOT_CONTAINS_I

    if not D.enumerable:
        inP = lambda x: membership(P, x)
        p0 = IdealRep(D, [], member=lambda e: inP(D.first(e)) and inP(D.second(e)))
        p1 = IdealRep(D, [], member=lambda e: inP(D.first(e)))
        p2 = IdealRep(D, [], member=lambda e: inP(D.second(e)))
        return PrimeLift(P, case, p0, p1, p2)

    ps = P.sorted_elements()
    ivals = D.ideal.sorted_elements()
    idx = D.tables.index
    p0 = [idx[(p.value, i.value)] for p in ps for i in ivals if membership(P, i)]
    p1 = [idx[(p.value, i.value)] for p in ps for i in ivals]
    p2 = [idx[((p + i).value, (-i).value)] for p in ps for i in ivals]
    return PrimeLift(
        P,
        case,
        ideal_from_indices(D, p0),
        ideal_from_indices(D, p1),
        ideal_from_indices(D, p2),
    )


class DescentCase(str, enum.Enum):
    NOT_CONTAINS_O1 = "a"
    CONTAINS_O1 = "b"


def descend_prime(D: DupRing, Q: IdealRep) -> tuple[IdealRep, DescentCase]:
    """The prime P = Q ∩ R of R under Q, and whether Q contains O1."""
    if Q.ring != D:
        raise OwnerMismatch(f"ideal of {Q.ring.descriptor} is not an ideal of {D.descriptor}")
    if not D.enumerable:
        raise NotEnumerable(f"{D.descriptor} is not enumerable")
    if not Q.proper or not is_prime(Q):
        raise NotPrime(f"{Q} is not a prime ideal of {D.descriptor}")
    R = D.base
    P = ideal_from_indices(R, [k for k, r in enumerate(R.enumerate()) if D.index_of(D.diag(r)) in Q.index_set])
    case = DescentCase.CONTAINS_O1 if o1(D).index_set <= Q.index_set else DescentCase.NOT_CONTAINS_O1
    return P, case


# -- idealization ----------------------------------------------------------

class Idealization(Ring):
    """R ∝ I on pairs (r, m) with (r, m)(s, n) = (rs, rn + sm)."""

    def __init__(self, base: Ring, ideal: IdealRep):
        if ideal.ring != base:
            raise OwnerMismatch(f"ideal of {ideal.ring.descriptor} used with {base.descriptor}")
        if not base.enumerable:
            principal_generator(ideal)
        self.base = base
        self.ideal = ideal
        self.enumerable = base.enumerable
        self.descriptor = f"idealization({base.descriptor}; {_gens_text(ideal)})"

    @property
    def cardinality(self):
        if not self.enumerable:
            return None
        return self.base.cardinality * len(self.ideal)

    def _zero(self):
        z = self.base._zero()
        return (z, z)

    def _one(self):
        return (self.base._one(), self.base._zero())

    def _add(self, a, b):
        B = self.base
        return (B._add(a[0], b[0]), B._add(a[1], b[1]))

    def _mul(self, a, b):
        B = self.base
        (r, m), (s, n) = a, b
        return (B._mul(r, s), B._add(B._mul(r, n), B._mul(s, m)))

    def _neg(self, a):
        return (self.base._neg(a[0]), self.base._neg(a[1]))

    def _canon(self, raw):
        r, m = (self.base(x) for x in raw)
        if not membership(self.ideal, m):
            raise InvalidElement(f"{m} is not in {self.ideal}")
        return (r.value, m.value)

    def _values(self):
        mvals = [e.value for e in self.ideal.sorted_elements()]
        for r in self.base._values():
            for m in mvals:
                yield (r, m)

    def _sample_value(self, rng, bound):
        a = self.base(principal_generator(self.ideal))
        return (self.base.sample(rng, bound).value, (self.base.sample(rng, bound) * a).value)

    def format_value(self, v):
        B = self.base
        return f"({B.format_value(v[0])},{B.format_value(v[1])})"

    def parse_value(self, text):
        r, m = parse_pair(text)
        return self._canon((self.base.parse(r), self.base.parse(m)))


def idealization(R: Ring, I: IdealRep) -> Idealization:
    return Idealization(R, I)


def iso_dup_idealization(R: Ring, I: IdealRep) -> IsoCheck:
    """Check that (r, r+i) -> (r, i) is a ring isomorphism R ⋈ I -> R ∝ I.

    Only meaningful when I*I = 0; raises SquareNotZero otherwise.
    """
    if not R.enumerable:
        raise NotEnumerable(f"{R.descriptor} is not enumerable")
    if not ideal_product(I, I).is_zero:
        raise SquareNotZero(f"{I}^2 != 0 in {R.descriptor}")
    D, A = duplicate(R, I), idealization(R, I)
    f = lambda e: A((D.first(e), D.second(e) - D.first(e)))
    elems = D.enumerate()
    images = {f(e) for e in elems}
    if len(images) != len(elems) or len(images) != A.cardinality:
        return IsoCheck(False, 0, "map is not bijective")
    if f(D.one) != A.one:
        return IsoCheck(False, 0, "unit not preserved")
    checked = 0
    for x, y in product(elems, repeat=2):
        checked += 1
        if f(x + y) != f(x) + f(y):
            return IsoCheck(False, checked, f"sum of {x} and {y}")
        if f(x * y) != f(x) * f(y):
            return IsoCheck(False, checked, f"product of {x} and {y}")
    return IsoCheck(True, checked)

