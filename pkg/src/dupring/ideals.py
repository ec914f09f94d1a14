"""Ideals: generation, membership, lattice operations and prime spectra."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Callable, Iterable

import numpy as np

from . import polys
from .errors import (
    CapExceeded,
    ImproperIdeal,
    NotAnIdeal,
    NotEnumerable,
    OwnerMismatch,
    UndecidableMembership,
)
from .rings import Element, Integers, PolyRing, Ring, is_prime_int, split_top

DEFAULT_LATTICE_CAP = 128


class IdealRep:
    """An ideal of ``ring`` given by generators.

    Over an enumerable ring the element set is materialized as a frozenset of
    indices into ``ring.tables``.  Over a sampleable ring membership is decided
    either by a gcd (Z, GF(p)[x]) or by an explicit ``member`` predicate.
    """

    def __init__(
        self,
        ring: Ring,
        generators: Iterable,
        *,
        indices: Iterable[int] | None = None,
        member: Callable[[Element], bool] | None = None,
    ):
        self.ring = ring
        self.generators = tuple(ring(g) for g in generators)
        self._idx = frozenset(int(k) for k in indices) if indices is not None else None
        self._member = member

    @property
    def materialized(self) -> bool:
        return self._idx is not None

    @property
    def index_set(self) -> frozenset:
        if self._idx is None:
            raise NotEnumerable(f"ideal of {self.ring.descriptor} is not materialized")
        return self._idx

    @property
    def index_array(self) -> np.ndarray:
        return np.array(sorted(self.index_set), dtype=np.int64)

    @property
    def elements(self) -> frozenset:
        return frozenset(self.ring.at(k) for k in self.index_set)

    def sorted_elements(self) -> list[Element]:
        return [self.ring.at(k) for k in sorted(self.index_set)]

    def __len__(self) -> int:
        return len(self.index_set)

    def __contains__(self, a) -> bool:
        return membership(self, a)

    @property
    def proper(self) -> bool:
        return not membership(self, self.ring.one)

    @property
    def is_zero(self) -> bool:
        if self.materialized:
            return len(self._idx) == 1
        return all(g.is_zero for g in self.generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealRep):
            return NotImplemented
        if other.ring != self.ring:
            return False
        if self.materialized and other.materialized:
            return self._idx == other._idx
        try:
            return principal_generator(self) == principal_generator(other)
        except UndecidableMembership:
            return self.generators == other.generators

    def __hash__(self) -> int:
        if self.materialized:
            return hash(self._idx)
        return hash(self.ring)

    def __str__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"({gens})"

    def __repr__(self) -> str:
        return f"<ideal {self} of {self.ring.descriptor}>"


# -- index-level machinery -----------------------------------------------

def _sumset(add: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.unique(add[np.ix_(a, b)])


def _principal(R: Ring, k: int) -> np.ndarray:
    return np.unique(R.tables.mul[:, k])


def _closure(R: Ring, gen_idx: Iterable[int]) -> np.ndarray:
    t = R.tables
    acc = np.array([t.zero], dtype=np.int64)
    for k in gen_idx:
        acc = _sumset(t.add, acc, _principal(R, k))
    return acc


def _is_ideal(R: Ring, idx: np.ndarray) -> bool:
    t = R.tables
    mask = np.zeros(t.size, dtype=bool)
    mask[idx] = True
    if not mask[t.zero]:
        return False
    if not mask[t.add[np.ix_(idx, idx)]].all():
        return False
    return bool(mask[t.mul[:, idx]].all())


def _greedy_generators(R: Ring, idx: Iterable[int]) -> list[int]:
    """Build up in enumeration order, then drop any generator lying in the
    closure of the others."""
    target = sorted(idx)
    gens: list[int] = []
    have = set(_closure(R, []).tolist())
    for k in target:
        if k not in have:
            gens.append(k)
            have = set(_closure(R, gens).tolist())
    k = 0
    while k < len(gens):
        rest = gens[:k] + gens[k + 1:]
        if gens[k] in set(_closure(R, rest).tolist()):
            gens = rest
        else:
            k += 1
    return gens


def _owned(R: Ring, gens) -> list[Element]:
    out = []
    for g in gens:
        if isinstance(g, Element) and g.ring != R:
            raise OwnerMismatch(f"generator {g!r} is not an element of {R.descriptor}")
        out.append(R(g))
    return out


# -- constructors ----------------------------------------------------------

def ideal_from_generators(R: Ring, gens: Iterable) -> IdealRep:
    gens = _owned(R, gens)
    if not R.enumerable:
        return IdealRep(R, gens)
    idx = _closure(R, [R.index_of(g) for g in gens])
    return IdealRep(R, gens, indices=idx)


def ideal_from_elements(R: Ring, elements: Iterable, generators=None) -> IdealRep:
    """Materialize an ideal from its full element set; verifies closure."""
    idx = np.array(sorted({R.index_of(e) for e in _owned(R, elements)}), dtype=np.int64)
    return ideal_from_indices(R, idx, generators)


def ideal_from_indices(R: Ring, idx, generators=None) -> IdealRep:
    idx = np.array(sorted(set(int(k) for k in idx)), dtype=np.int64)
    if not _is_ideal(R, idx):
        raise NotAnIdeal(f"subset of {R.descriptor} with {len(idx)} elements is not an ideal")
    if generators is None:
        generators = [R.at(k) for k in _greedy_generators(R, idx)]
    return IdealRep(R, generators, indices=idx)


def parse_generators(R: Ring, text: str) -> list[Element]:
    """Comma-separated element literals; tuples may contain commas."""
    return [R.parse(p) for p in split_top(text.strip(), ",") if p.strip()]


# -- membership --------------------------------------------------------------

def principal_generator(I: IdealRep):
    """gcd of the generators for ideals of Z or GF(p)[x] (raw value)."""
    R = I.ring
    if isinstance(R, Integers):
        return reduce(gcd, (g.value for g in I.generators), 0)
    if isinstance(R, PolyRing):
        return reduce(lambda f, g: polys.gcd(f, g, R.p), (g.value for g in I.generators), ())
    raise UndecidableMembership(f"no gcd-based membership for {R.descriptor}")


def membership(I: IdealRep, a) -> bool:
    R = I.ring
    if isinstance(a, Element) and a.ring != R:
        raise OwnerMismatch(f"{a!r} is not an element of {R.descriptor}")
    a = R(a)
    if I._idx is not None:
        return R.tables.index[a.value] in I._idx
    if I._member is not None:
        return I._member(a)
    g = principal_generator(I)
    if isinstance(R, Integers):
        return a.value == 0 if g == 0 else a.value % g == 0
    return polys.divides(g, a.value, R.p)


# -- lattice operations --------------------------------------------------

def _same_ring(I: IdealRep, J: IdealRep) -> Ring:
    if I.ring != J.ring:
        raise OwnerMismatch(f"{I.ring.descriptor} vs {J.ring.descriptor}")
    return I.ring


def ideal_sum(I: IdealRep, J: IdealRep) -> IdealRep:
    R = _same_ring(I, J)
    return ideal_from_generators(R, I.generators + J.generators)


def ideal_product(I: IdealRep, J: IdealRep) -> IdealRep:
    R = _same_ring(I, J)
    if not R.enumerable:
        raise NotEnumerable("ideal product needs an enumerable ring")
    return ideal_from_generators(R, [g * h for g in I.generators for h in J.generators])


def ideal_intersection(I: IdealRep, J: IdealRep) -> IdealRep:
    R = _same_ring(I, J)
    if not R.enumerable:
        raise NotEnumerable("ideal intersection needs an enumerable ring")
    return ideal_from_indices(R, sorted(I.index_set & J.index_set))


def colon_annihilator(R: Ring, a) -> IdealRep:
    """(0 : a) = {r : r*a = 0}."""
    if not R.enumerable:
        raise NotEnumerable(f"(0:a) over {R.descriptor} needs an enumerable ring")
    t = R.tables
    k = R.index_of(a)
    return ideal_from_indices(R, np.flatnonzero(t.mul[:, k] == t.zero))


def zero_ideal(R: Ring) -> IdealRep:
    return ideal_from_generators(R, [])


def unit_ideal(R: Ring) -> IdealRep:
    return ideal_from_generators(R, [R.one])


# -- primes ------------------------------------------------------------------

def is_prime(P: IdealRep) -> bool:
    if not P.proper:
        raise ImproperIdeal(f"{P} is the whole ring")
    R = P.ring
    if not R.enumerable:
        g = principal_generator(P)
        if isinstance(R, Integers):
            return g == 0 or is_prime_int(abs(g))
        return g == () or polys.is_irreducible(g, R.p)
    t = R.tables
    outside = np.array(sorted(set(range(t.size)) - P.index_set), dtype=np.int64)
    inside = np.zeros(t.size, dtype=bool)
    inside[P.index_array] = True
    return not inside[t.mul[np.ix_(outside, outside)]].any()


def is_maximal(P: IdealRep, cap: int = DEFAULT_LATTICE_CAP) -> bool:
    if not P.proper:
        raise ImproperIdeal(f"{P} is the whole ring")
    n = P.ring.cardinality
    for J in all_ideals(P.ring, cap):
        if len(J) < n and P.index_set < J.index_set:
            return False
    return True


def all_ideals(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> list[IdealRep]:
    """Every ideal of a finite ring: principal ideals closed under sums."""
    if not R.enumerable:
        raise NotEnumerable(f"{R.descriptor} is not enumerable")
    if R.cardinality > cap:
        raise CapExceeded(f"ring {R.descriptor}", R.cardinality, cap)
    if "all_ideals" in R.cache:
        return R.cache["all_ideals"]
    t = R.tables
    principals = {frozenset(_principal(R, k).tolist()) for k in range(t.size)}
    p_arrays = [np.array(sorted(p), dtype=np.int64) for p in principals]
    lattice = set(principals)
    frontier = list(principals)
    while frontier:
        fresh = []
        for A in frontier:
            a = np.array(sorted(A), dtype=np.int64)
            for p in p_arrays:
                S = frozenset(_sumset(t.add, a, p).tolist())
                if S not in lattice:
                    lattice.add(S)
                    fresh.append(S)
        frontier = fresh
    ordered = sorted(lattice, key=lambda s: (len(s), sorted(s)))
    out = [ideal_from_indices(R, sorted(s)) for s in ordered]
    R.cache["all_ideals"] = out
    return out


@dataclass(frozen=True)
class SpectrumPoint:
    ideal: IdealRep
    maximal: bool


def spectrum(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> list[SpectrumPoint]:
    out = []
    for J in all_ideals(R, cap):
        if J.proper and is_prime(J):
            out.append(SpectrumPoint(J, is_maximal(J, cap)))
    return out


def contains_regular_element(I: IdealRep) -> bool:
    R = I.ring
    if not R.enumerable:
        if R.is_domain and isinstance(R, (Integers, PolyRing)):
            return not I.is_zero
        raise UndecidableMembership(f"regularity over {R.descriptor} is not decidable here")
    t = R.tables
    for k in I.index_set:
        if np.count_nonzero(t.mul[k] == t.zero) == 1:
            return True
    return False


# -- quotients ---------------------------------------------------------------

class QuotientRing(Ring):
    """R/I over coset representatives (least index in each coset)."""

    enumerable = True

    def __init__(self, base: Ring, ideal: IdealRep):
        if ideal.ring != base:
            raise OwnerMismatch(f"ideal of {ideal.ring.descriptor} used with {base.descriptor}")
        if not ideal.proper:
            raise ImproperIdeal("quotient by the unit ideal is the zero ring")
        self.base = base
        self.ideal = ideal
        self.descriptor = f"{base.descriptor} / {ideal}"
        t = base.tables
        members = ideal.index_array
        self._rep = np.array([t.add[k, members].min() for k in range(t.size)], dtype=np.int64)
        self._reps = sorted(set(self._rep.tolist()))

    @property
    def cardinality(self) -> int:
        return len(self._reps)

    def _norm(self, v):
        t = self.base.tables
        return t.values[self._rep[t.index[v]]]

    def _zero(self):
        return self._norm(self.base._zero())

    def _one(self):
        return self._norm(self.base._one())

    def _add(self, a, b):
        return self._norm(self.base._add(a, b))

    def _mul(self, a, b):
        return self._norm(self.base._mul(a, b))

    def _neg(self, a):
        return self._norm(self.base._neg(a))

    def _canon(self, raw):
        return self._norm(self.base(raw).value)

    def _values(self):
        t = self.base.tables
        return [t.values[k] for k in self._reps]

    def format_value(self, v):
        return f"[{self.base.format_value(v)}]"

    def parse_value(self, text):
        return self._norm(self.base.parse_value(text.strip("[]")))

    def project(self, e: Element) -> Element:
        return Element(self, self._norm(self.base(e).value))

    def representative(self, q: Element) -> Element:
        return Element(self.base, q.value)


def quotient_ring(R: Ring, I: IdealRep) -> QuotientRing:
    return QuotientRing(R, I)


def has_zero_divisors(R: Ring) -> bool:
    t = R.tables
    nz = np.array([k for k in range(t.size) if k != t.zero], dtype=np.int64)
    return bool((t.mul[np.ix_(nz, nz)] == t.zero).any())
