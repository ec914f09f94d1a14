"""Decidable ring properties and the R vs R ⋈ I transfer checks."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .duplication import duplicate
from .errors import NotEnumerable
from .homology import DEFAULT_TUPLE_CAP, ModuleMap, kernel_generators, perfect_probe
from .ideals import DEFAULT_LATTICE_CAP, IdealRep, all_ideals, is_maximal, spectrum
from .rings import Integers, PolyRing, Ring, special_elements

EXHAUSTIVE = "Exhaustive"
SAMPLED = "Sampled"
THEOREM_BACKED = "TheoremBacked"


@dataclass
class PropertyReport:
    ring: str
    prop: str
    verdict: bool
    method: str
    witness: str | None = None
    justification: str | None = None
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _need_finite(R: Ring) -> None:
    if not R.enumerable:
        raise NotEnumerable(f"{R.descriptor} is not enumerable")


def _pid(R: Ring) -> bool:
    return isinstance(R, (Integers, PolyRing))


def is_reduced(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> PropertyReport:
    if not R.enumerable:
        if R.is_domain:
            return PropertyReport(R.descriptor, "reduced", True, THEOREM_BACKED, justification="integral domain")
        raise NotEnumerable(f"{R.descriptor} is not enumerable")
    nil = special_elements(R).nilpotents
    t = R.tables
    bad = sorted(t.index[e.value] for e in nil if not e.is_zero)
    witness = str(R.at(bad[0])) if bad else None
    return PropertyReport(R.descriptor, "reduced", not bad, EXHAUSTIVE, witness)


def is_vnr(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> PropertyReport:
    """Every a has some b with a = a^2 b."""
    _need_finite(R)
    t = R.tables
    for a in range(t.size):
        sq = t.mul[a, a]
        if not (t.mul[sq] == a).any():
            return PropertyReport(R.descriptor, "vnr", False, EXHAUSTIVE, str(R.at(a)))
    return PropertyReport(R.descriptor, "vnr", True, EXHAUSTIVE)


@dataclass
class VnrCrosscheck:
    ring: str
    vnr: bool
    reduced: bool
    dimension_zero: bool

    @property
    def agrees(self) -> bool:
        return self.vnr == (self.reduced and self.dimension_zero)


def vnr_characterization_crosscheck(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> VnrCrosscheck:
    """is_vnr against "reduced and every prime is maximal"."""
    _need_finite(R)
    dim0 = all(pt.maximal for pt in spectrum(R, cap))
    return VnrCrosscheck(R.descriptor, is_vnr(R).verdict, is_reduced(R).verdict, dim0)


def maximal_ideals(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> list[IdealRep]:
    return [J for J in all_ideals(R, cap) if J.proper and is_maximal(J, cap)]


def is_local(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> PropertyReport:
    _need_finite(R)
    maxes = maximal_ideals(R, cap)
    witness = None if len(maxes) == 1 else ", ".join(str(M) for M in maxes)
    return PropertyReport(
        R.descriptor,
        "local",
        len(maxes) == 1,
        EXHAUSTIVE,
        witness,
        evidence={"maximal_ideals": [str(M) for M in maxes]},
    )


def is_semisimple(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> PropertyReport:
    _need_finite(R)
    vnr = is_vnr(R)
    return PropertyReport(
        R.descriptor,
        "semisimple",
        vnr.verdict,
        THEOREM_BACKED,
        vnr.witness,
        justification="finite => Noetherian; Noetherian + von Neumann regular => semisimple",
    )


def is_perfect(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> PropertyReport:
    _need_finite(R)
    probe = perfect_probe(R)
    return PropertyReport(
        R.descriptor,
        "perfect",
        probe.ok,
        THEOREM_BACKED,
        justification="finite => Artinian => perfect",
        evidence={"probe_ok": probe.ok, "probe_depth": probe.depth},
    )


def is_steinitz(R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> PropertyReport:
    perfect = is_perfect(R, cap)
    local = is_local(R, cap)
    return PropertyReport(
        R.descriptor,
        "steinitz",
        perfect.verdict and local.verdict,
        THEOREM_BACKED,
        local.witness,
        justification="Steinitz = perfect and local",
        evidence={"perfect": perfect.verdict, "local": local.verdict, **perfect.evidence, **local.evidence},
    )


def _evidence_sets(R: Ring, tuple_cap: int) -> list[list]:
    elems = [e for e in R.enumerate() if not e.is_zero]
    units = special_elements(R).units
    pick = [e for e in elems if e not in units] + [e for e in elems if e in units]
    x = pick[:3]
    if len(x) < 2:
        return [[e] for e in x]
    if R.cardinality**2 <= tuple_cap:
        return [[x[0]], [x[1]], [x[0], x[1]]]
    return [[e] for e in x]


def _finitely_presented_evidence(R: Ring, tuple_cap: int) -> list[dict]:
    out = []
    for gens in _evidence_sets(R, tuple_cap):
        ker = kernel_generators(ModuleMap(R, tuple(gens)), tuple_cap)
        out.append(
            {
                "generators": [str(g) for g in gens],
                "kernel_size": len(ker),
                "kernel_generators": ["(" + ",".join(str(x) for x in v) + ")" for v in ker.generators],
            }
        )
    return out


def _finite_or_pid(R: Ring, prop: str, tuple_cap: int) -> PropertyReport:
    if not R.enumerable:
        if _pid(R):
            return PropertyReport(R.descriptor, prop, True, THEOREM_BACKED, justification="principal ideal domain")
        raise NotEnumerable(f"{R.descriptor} is not enumerable")
    chain = "finite => Noetherian" + (" => coherent" if prop == "coherent" else "")
    return PropertyReport(
        R.descriptor,
        prop,
        True,
        THEOREM_BACKED,
        justification=chain,
        evidence={"presentations": _finitely_presented_evidence(R, tuple_cap)},
    )


def is_noetherian(R: Ring, cap: int = DEFAULT_LATTICE_CAP, tuple_cap: int = DEFAULT_TUPLE_CAP) -> PropertyReport:
    return _finite_or_pid(R, "noetherian", tuple_cap)


def is_coherent(R: Ring, cap: int = DEFAULT_LATTICE_CAP, tuple_cap: int = DEFAULT_TUPLE_CAP) -> PropertyReport:
    return _finite_or_pid(R, "coherent", tuple_cap)


CHECKERS = {
    "reduced": is_reduced,
    "vnr": is_vnr,
    "local": is_local,
    "semisimple": is_semisimple,
    "perfect": is_perfect,
    "steinitz": is_steinitz,
    "coherent": is_coherent,
    "noetherian": is_noetherian,
}


def check_property(name: str, R: Ring, cap: int = DEFAULT_LATTICE_CAP) -> PropertyReport:
    try:
        fn = CHECKERS[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; known: {', '.join(CHECKERS)}") from None
    return fn(R, cap)


# -- transfer ------------------------------------------------------------

# theorem id -> property compared on R and R ⋈ I
TRANSFER_THEOREMS = {
    "vnr-transfer": "vnr",
    "semisimple-transfer": "semisimple",
    "perfect-transfer": "perfect",
    "local-transfer": "local",
    "steinitz-transfer": "steinitz",
}


@dataclass
class TransferRecord:
    theorem: str
    base: PropertyReport
    dup: PropertyReport
    agreement: bool

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "agreement": self.agreement,
            "base": self.base.to_dict(),
            "dup": self.dup.to_dict(),
        }


def verify_transfer(theorem: str, R: Ring, I: IdealRep, cap: int = DEFAULT_LATTICE_CAP) -> TransferRecord:
    """Run the theorem's property on R and on R ⋈ I; both directions of the
    biconditional are covered by comparing the two verdicts."""
    try:
        prop = TRANSFER_THEOREMS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}") from None
    D = duplicate(R, I)
    base = check_property(prop, R, cap)
    dup = check_property(prop, D, cap)
    return TransferRecord(theorem, base, dup, base.verdict == dup.verdict)


def squarefree(n: int) -> bool:
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True

