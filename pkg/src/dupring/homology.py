"""Kernels of maps between finite free modules, annihilators over R ⋈ I,
and the checks behind the periodic resolution of O1 and O2."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .duplication import DupRing, duplicate, o1, o2
from .errors import (
    CapExceeded,
    ImproperIdeal,
    NotADomainHandle,
    NotEnumerable,
    UndecidableMembership,
    ZeroGenerator,
)
from .ideals import (
    IdealRep,
    _principal,
    colon_annihilator,
    ideal_from_generators,
    membership,
)
from .rings import Element, Integers, PolyRing, Ring

DEFAULT_TUPLE_CAP = 2**16
SWEEP_BOUND = {"Z": 8, "poly": 4}

INFINITE_PERIODIC = "Infinite-Periodic"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ModuleMap:
    """R^n -> R sending the k-th basis vector to ``images[k]``.

    ``codomain`` optionally names the ideal the map lands in.
    """

    ring: Ring
    images: tuple
    codomain: IdealRep | None = None

    def __post_init__(self):
        imgs = tuple(self.ring(x) for x in self.images)
        object.__setattr__(self, "images", imgs)
        if self.codomain is not None:
            for x in imgs:
                if not membership(self.codomain, x):
                    raise ValueError(f"image {x} lies outside the codomain {self.codomain}")

    @property
    def domain_rank(self) -> int:
        return len(self.images)

    def __call__(self, vec) -> Element:
        if len(vec) != self.domain_rank:
            raise ValueError(f"expected a vector of length {self.domain_rank}")
        out = self.ring.zero
        for x, g in zip(vec, self.images):
            out = out + self.ring(x) * g
        return out


# -- tuple codes ------------------------------------------------------------
# A vector of R^n is encoded as an integer: component indices in mixed radix
# |R|, first component most significant.

def _decode(codes: np.ndarray, N: int, n: int) -> np.ndarray:
    out = np.empty((len(codes), n), dtype=np.int64)
    rest = np.asarray(codes, dtype=np.int64)
    for k in range(n - 1, -1, -1):
        out[:, k] = rest % N
        rest = rest // N
    return out


def _encode(rows: np.ndarray, N: int) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.int64)
    code = np.zeros(rows.shape[:-1], dtype=np.int64)
    for k in range(rows.shape[-1]):
        code = code * N + rows[..., k]
    return code


def _cyclic(R: Ring, vec: np.ndarray) -> np.ndarray:
    t = R.tables
    return np.unique(_encode(t.mul[:, vec], t.size))


def _msum(R: Ring, a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    t = R.tables
    A, B = _decode(a, t.size, n), _decode(b, t.size, n)
    rows = t.add[A[:, None, :], B[None, :, :]]
    return np.unique(_encode(rows, t.size))


def _span(R: Ring, gens: list[int], n: int) -> np.ndarray:
    t = R.tables
    acc = np.array([0], dtype=np.int64) if t.zero == 0 else _encode(np.full((1, n), t.zero), t.size)
    for g in gens:
        acc = _msum(R, acc, _cyclic(R, _decode(np.array([g]), t.size, n)[0]), n)
    return acc


def _vec(R: Ring, row) -> tuple:
    return tuple(R.at(int(k)) for k in row)


@dataclass(frozen=True)
class Kernel:
    ring: Ring
    rank: int
    codes: np.ndarray
    generators: tuple

    def __len__(self) -> int:
        return len(self.codes)

    @property
    def elements(self) -> frozenset:
        rows = _decode(self.codes, self.ring.tables.size, self.rank)
        return frozenset(_vec(self.ring, r) for r in rows)


def _check_cap(R: Ring, n: int, cap: int) -> None:
    if not R.enumerable:
        raise NotEnumerable(f"{R.descriptor} is not enumerable")
    if R.cardinality**n > cap:
        raise CapExceeded(f"tuples of {R.descriptor}^{n}", R.cardinality**n, cap)


def _image_codes(R: Ring, images: list[int]) -> np.ndarray:
    """Index of the image of every tuple, in code order."""
    t = R.tables
    img = np.array([t.zero], dtype=np.int64)
    for g in images:
        img = t.add[img[:, None], t.mul[:, g][None, :]].reshape(-1)
    return img


def _kernel_codes(m: ModuleMap, cap: int) -> np.ndarray:
    R = m.ring
    _check_cap(R, m.domain_rank, cap)
    img = _image_codes(R, [R.index_of(g) for g in m.images])
    return np.flatnonzero(img == R.tables.zero)


def _reduce_generators(R: Ring, codes: np.ndarray, n: int) -> list[int]:
    gens: list[int] = []
    have = set(_span(R, [], n).tolist())
    for c in codes.tolist():
        if c not in have:
            gens.append(c)
            have = set(_span(R, gens, n).tolist())
    k = 0
    while k < len(gens):
        rest = gens[:k] + gens[k + 1:]
        if gens[k] in set(_span(R, rest, n).tolist()):
            gens = rest
        else:
            k += 1
    return gens


def kernel_generators(m: ModuleMap, cap: int = DEFAULT_TUPLE_CAP) -> Kernel:
    """Exhaustive kernel of ``m`` with a greedily reduced generating set."""
    R, n = m.ring, m.domain_rank
    codes = _kernel_codes(m, cap)
    gens = _reduce_generators(R, codes, n)
    rows = _decode(np.array(gens, dtype=np.int64), R.tables.size, n) if gens else []
    return Kernel(R, n, codes, tuple(_vec(R, r) for r in rows))


def submodule_closure(R: Ring, vectors) -> frozenset:
    """All R-linear combinations of the given vectors of R^n."""
    vectors = [tuple(R(x) for x in v) for v in vectors]
    if not vectors:
        return frozenset()
    n = len(vectors[0])
    t = R.tables
    gens = [int(_encode(np.array([[R.index_of(x) for x in v]]), t.size)[0]) for v in vectors]
    rows = _decode(_span(R, gens, n), t.size, n)
    return frozenset(_vec(R, r) for r in rows)


# -- annihilators over R ⋈ I ------------------------------------------------

def _small_base(R: Ring, bound: int | None = None) -> list[Element]:
    if isinstance(R, Integers):
        b = SWEEP_BOUND["Z"] if bound is None else bound
        return [R(v) for v in range(-b, b + 1)]
    if isinstance(R, PolyRing):
        b = SWEEP_BOUND["poly"] if bound is None else bound
        return [R(tuple(c)) for c in product(range(R.p), repeat=b + 1)]
    raise NotADomainHandle(f"{R.descriptor} is not a supported domain handle")


def small_elements(D: DupRing, bound: int | None = None) -> list[Element]:
    """Elements (r, r+i) of D with r and i small: |r|, |i| <= bound over Z,
    degree <= bound over GF(p)[x]."""
    small = _small_base(D.base, bound)
    offsets = [i for i in small if membership(D.ideal, i)]
    return [D.from_internal(r, i) for r in small for i in offsets]


def _sampleable_domain(R: Ring) -> None:
    if R.enumerable or not R.is_domain or not isinstance(R, (Integers, PolyRing)):
        raise NotADomainHandle(f"{R.descriptor} is not Z or GF(p)[x]")


@dataclass
class AnnihilatorResult:
    ring: str
    element: str
    ideal: IdealRep
    symbolic: bool
    equals_o1: bool
    samples: int = 0
    sweep: int = 0
    disagreements: list = field(default_factory=list)


def annihilator_dup(
    D: DupRing,
    c,
    samples: int = 500,
    seed: int = 0,
    sweep: bool = True,
    sample_bound: int = 100,
) -> AnnihilatorResult:
    """(0 : c) in D.

    Finite D: computed exhaustively.  Over Z or GF(p)[x] with c = (m, 0),
    m != 0, the answer is O1; seeded samples and a small-element sweep test
    e*c = 0 against e in O1.
    """
    c = D(c)
    O = o1(D)
    if D.enumerable:
        ann = colon_annihilator(D, c)
        return AnnihilatorResult(D.descriptor, str(c), ann, False, ann == O)
    try:
        _sampleable_domain(D.base)
    except NotADomainHandle as exc:
        raise UndecidableMembership(str(exc)) from None
    if not D.second(c).is_zero or D.first(c).is_zero:
        raise UndecidableMembership(f"symbolic (0:c) needs c = (m, 0) with m != 0, got {c}")
    rng = random.Random(seed)
    pool = [D.sample(rng, sample_bound) for _ in range(samples)]
    n_sweep = 0
    if sweep:
        smalls = small_elements(D)
        n_sweep = len(smalls)
        pool += smalls
    bad = [str(e) for e in pool if (e * c).is_zero != membership(O, e)]
    return AnnihilatorResult(D.descriptor, str(c), O, True, not bad, samples, n_sweep, bad[:10])


# -- the periodic resolution of O1 / O2 --------------------------------------

@dataclass
class ResolutionReport:
    dup: str
    generator: str
    ker_u_equals_o2: bool
    ker_v_equals_o1: bool
    o1_idempotent_generated: bool
    o2_idempotent_generated: bool
    pd_verdict: str
    samples_checked: int
    sweep_checked: int
    disagreements: list = field(default_factory=list)

    def consistent(self) -> bool:
        periodic = (
            self.ker_u_equals_o2
            and self.ker_v_equals_o1
            and not self.o1_idempotent_generated
            and not self.o2_idempotent_generated
        )
        return (self.pd_verdict == INFINITE_PERIODIC) == periodic


def _idempotent_generates(O: IdealRep, e: Element) -> bool:
    # for idempotent e: x in (e) iff x*e = x
    return membership(O, e) and all(g * e == g for g in O.generators)


def verify_periodic_resolution(
    R: Ring,
    a,
    samples: int = 1000,
    seed: int = 0,
    sweep: bool = True,
    sample_bound: int = 100,
) -> ResolutionReport:
    """Check the two short exact sequences over D = R ⋈ (a).

    u = multiplication by (0, a) with kernel O2, v = multiplication by (a, 0)
    with kernel O1.  Neither O1 nor O2 is generated by an idempotent, so the
    sequences splice into a periodic non-split resolution.
    """
    _sampleable_domain(R)
    a = R(a)
    if a.is_zero:
        raise ZeroGenerator("the ideal generator must be nonzero")
    I = ideal_from_generators(R, [a])
    if not I.proper:
        raise ImproperIdeal(f"({a}) is the whole ring {R.descriptor}")
    D = duplicate(R, I)
    O1, O2 = o1(D), o2(D)
    zero = R.zero
    u_by, v_by = D.pair(zero, a), D.pair(a, zero)

    rng = random.Random(seed)
    pool = [D.sample(rng, sample_bound) for _ in range(samples)]
    smalls = small_elements(D) if sweep else []
    pool += smalls

    bad = []
    ok_u = ok_v = True
    for e in pool:
        if (e * u_by).is_zero != membership(O2, e):
            ok_u = False
            bad.append(f"u: {e}")
        if (e * v_by).is_zero != membership(O1, e):
            ok_v = False
            bad.append(f"v: {e}")

    # in a domain the only idempotents are 0 and 1, so those of D are the
    # pairs (e1, e2) with e1, e2 in {0, 1} and e2 - e1 in I
    base_idem = [zero, R.one]
    swept_idem = {x for x in _small_base(R) if x * x == x}
    if not swept_idem <= set(base_idem):
        bad.append(f"non-trivial idempotent in {R.descriptor}: {sorted(map(str, swept_idem))}")
    dup_idem = [D.pair(x, y) for x in base_idem for y in base_idem if membership(I, y - x)]
    o1_idem = any(_idempotent_generates(O1, e) for e in dup_idem)
    o2_idem = any(_idempotent_generates(O2, e) for e in dup_idem)

    verdict = INFINITE_PERIODIC if (ok_u and ok_v and not o1_idem and not o2_idem and len(bad) == 0) else INCONCLUSIVE
    return ResolutionReport(
        dup=D.descriptor,
        generator=str(a),
        ker_u_equals_o2=ok_u,
        ker_v_equals_o1=ok_v,
        o1_idempotent_generated=o1_idem,
        o2_idempotent_generated=o2_idem,
        pd_verdict=verdict,
        samples_checked=samples,
        sweep_checked=len(smalls),
        disagreements=bad[:10],
    )


def is_idempotent_generated(I: IdealRep) -> bool:
    R = I.ring
    if not R.enumerable:
        raise NotEnumerable(f"{R.descriptor} is not enumerable")
    t = R.tables
    idx = I.index_array
    for e in idx:
        if t.mul[e, e] == e and (t.mul[idx, e] == idx).all():
            return True
    return False


@dataclass
class FiniteResolutionCheck:
    """Finite-ring version of the two sequences for I = (a).

    Over a finite ring ker(u) = {(r, s) : s*a = 0}, which is O2 only when a
    is regular; the splice is a complex in every case and exact iff a is
    regular.
    """

    a_regular: bool
    ker_u_equals_o2: bool
    ker_v_equals_o1: bool
    ker_u_by_annihilator: bool
    ker_v_by_annihilator: bool
    image_u_equals_o1: bool
    image_v_equals_o2: bool
    composable: bool
    exact: bool

    @property
    def ok(self) -> bool:
        return (
            self.ker_u_by_annihilator
            and self.ker_v_by_annihilator
            and self.image_u_equals_o1
            and self.image_v_equals_o2
            and self.composable
            and self.exact == self.a_regular
            and self.ker_u_equals_o2 == self.a_regular
            and self.ker_v_equals_o1 == self.a_regular
        )


def finite_resolution_check(D: DupRing) -> FiniteResolutionCheck:
    """u = multiplication by (0, a), v = multiplication by (a, 0) over a
    finite D with I = (a), computed exhaustively."""
    if not D.enumerable:
        raise NotEnumerable(f"{D.descriptor} is not enumerable")
    if len(D.ideal.generators) != 1:
        raise ValueError("finite resolution check needs a single generator")
    R = D.base
    a = D.ideal.generators[0]
    zero = R.zero
    u_by, v_by = D.pair(zero, a), D.pair(a, zero)
    ker_u = set(_kernel_codes(ModuleMap(D, (u_by,)), DEFAULT_TUPLE_CAP).tolist())
    ker_v = set(_kernel_codes(ModuleMap(D, (v_by,)), DEFAULT_TUPLE_CAP).tolist())
    im_u = set(_principal(D, D.index_of(u_by)).tolist())
    im_v = set(_principal(D, D.index_of(v_by)).tolist())
    ann = colon_annihilator(R, a)
    elems = D.enumerate()
    by_ann_u = {k for k, e in enumerate(elems) if membership(ann, D.second(e))}
    by_ann_v = {k for k, e in enumerate(elems) if membership(ann, D.first(e))}
    return FiniteResolutionCheck(
        a_regular=ann.is_zero,
        ker_u_equals_o2=ker_u == set(o2(D).index_set),
        ker_v_equals_o1=ker_v == set(o1(D).index_set),
        ker_u_by_annihilator=ker_u == by_ann_u,
        ker_v_by_annihilator=ker_v == by_ann_v,
        image_u_equals_o1=im_u == set(o1(D).index_set),
        image_v_equals_o2=im_v == set(o2(D).index_set),
        composable=im_v <= ker_u and im_u <= ker_v,
        exact=im_v == ker_u and im_u == ker_v,
    )


# -- coherence-proof presentation kernels ------------------------------------

@dataclass
class PresentationCheck:
    dup: str
    generators: list
    holds: bool
    kernel_size: int
    characterization_size: int
    counterexample: str | None = None


def presentation_kernel_check(D: DupRing, a: list, cap: int = DEFAULT_TUPLE_CAP) -> PresentationCheck:
    """ker(u) for u: D^n -> J = sum D(a_k, a_k), against the set of tuples
    (r_k, r_k + e_k) with (r_k) in ker(v), (e_k) in I^n ∩ ker(v), where
    v: R^n -> L = sum R a_k."""
    R = D.base
    a = [R(x) for x in a]
    n = len(a)
    _check_cap(D, n, cap)
    ker_u = set(_kernel_codes(ModuleMap(D, tuple(D.diag(x) for x in a)), cap).tolist())

    ker_v = _decode(_kernel_codes(ModuleMap(R, tuple(a)), cap), R.tables.size, n)
    in_I = np.zeros(R.tables.size, dtype=bool)
    in_I[D.ideal.index_array] = True
    e_rows = ker_v[in_I[ker_v].all(axis=1)]
    d_index = D.tables.index
    vals = R.tables.values
    rows = []
    for r in ker_v:
        for e in e_rows:
            rows.append([d_index[(vals[r[k]], vals[e[k]])] for k in range(n)])
    char = set(_encode(np.array(rows), D.tables.size).tolist()) if rows else set()

    diff = sorted(ker_u ^ char)
    witness = None
    if diff:
        witness = str(_vec(D, _decode(np.array(diff[:1]), D.tables.size, n)[0]))
    return PresentationCheck(
        D.descriptor, [str(x) for x in a], not diff, len(ker_u), len(char), witness
    )


# -- perfectness probe ---------------------------------------------------------

@dataclass(frozen=True)
class ProbeResult:
    ok: bool
    depth: int


def perfect_probe(R: Ring) -> ProbeResult:
    """Every chain (a) ⊇ (a^2) ⊇ ... of principal ideals stabilizes; depth is
    the largest k needed for (a^k) = (a^(k+1))."""
    if not R.enumerable:
        raise NotEnumerable(f"{R.descriptor} is not enumerable")
    t = R.tables
    depth = 0
    for a in range(t.size):
        power = a
        prev = set(_principal(R, power).tolist())
        for k in range(1, t.size + 1):
            power = int(t.mul[power, a])
            cur = set(_principal(R, power).tolist())
            if cur == prev:
                depth = max(depth, k)
                break
            prev = cur
        else:
            return ProbeResult(False, t.size)
    return ProbeResult(True, depth)
