"""Built-in corpus of (ring, ideal) pairs used by the verification suite."""
from __future__ import annotations

from dataclasses import dataclass

from .duplication import DupRing, duplicate
from .ideals import IdealRep, ideal_from_generators, parse_generators
from .rings import Ring, make_ring

MAX_DUP_SIZE = 128


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    spec: str
    ideal: str
    tags: tuple[str, ...] = ()

    def ring(self) -> Ring:
        return make_ring(self.spec)

    def ideal_rep(self, R: Ring | None = None) -> IdealRep:
        R = self.ring() if R is None else R
        return ideal_from_generators(R, parse_generators(R, self.ideal))

    def dup(self) -> DupRing:
        R = self.ring()
        return duplicate(R, self.ideal_rep(R))

    @property
    def dup_spec(self) -> str:
        return f"dup({self.spec}; {self.ideal or '0'})"

    @property
    def sampleable(self) -> bool:
        return "sampleable" in self.tags


def _zn_entries() -> list[CorpusEntry]:
    out = []
    for n in (4, 6, 8, 9, 12, 30):
        for d in range(2, n + 1):
            if n % d:
                continue
            size = n * (n // d)
            if size > MAX_DUP_SIZE:
                continue
            tags = []
            if d == n:
                tags.append("zero-ideal")
            elif (d * d) % n == 0:
                tags.append("square-zero")
            if all(n % (k * k) for k in range(2, n)):
                tags.append("squarefree")
            gen = "0" if d == n else str(d)
            out.append(CorpusEntry(f"z{n}-{gen}", f"Z/{n}", gen, tuple(tags)))
    return out


def builtin_corpus() -> list[CorpusEntry]:
    return _zn_entries() + [
        CorpusEntry("gf2x-x2", "GF(2)[x]/(x^2)", "x", ("paper-example", "square-zero")),
        CorpusEntry("gf3x-x2", "GF(3)[x]/(x^2)", "x", ("square-zero",)),
        CorpusEntry("gf2x-x3-x", "GF(2)[x]/(x^3)", "x", ()),
        CorpusEntry("gf2x-x3-x2", "GF(2)[x]/(x^3)", "x^2", ("square-zero",)),
        CorpusEntry("gf4-0", "GF(2)[x]/(x^2+x+1)", "0", ("field", "zero-ideal")),
        CorpusEntry("gf5-0", "GF(5)", "0", ("field", "zero-ideal")),
        CorpusEntry("z2xz2-10", "Z/2 x Z/2", "(1,0)", ("product",)),
        CorpusEntry("z-2", "Z", "2", ("sampleable", "domain")),
        CorpusEntry("z-3", "Z", "3", ("sampleable", "domain")),
        CorpusEntry("gf2x-x", "GF(2)[x]", "x", ("sampleable", "domain")),
        CorpusEntry("gf3x-x", "GF(3)[x]", "x", ("sampleable", "domain")),
    ]


def finite_entries() -> list[CorpusEntry]:
    return [e for e in builtin_corpus() if not e.sampleable]


def sampleable_entries() -> list[CorpusEntry]:
    return [e for e in builtin_corpus() if e.sampleable]
