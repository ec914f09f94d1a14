"""The built-in verification suite run by ``dupring verify``."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .corpus import CorpusEntry, builtin_corpus, finite_entries, sampleable_entries
from .duplication import (
    DupRing,
    LiftCase,
    descend_prime,
    iso_dup_idealization,
    lift_prime,
    o1,
    o2,
    quotient_by_oi,
)
from .errors import CapExceeded, DupRingError
from .homology import (
    INFINITE_PERIODIC,
    annihilator_dup,
    finite_resolution_check,
    presentation_kernel_check,
    verify_periodic_resolution,
)
from .ideals import (
    DEFAULT_LATTICE_CAP,
    colon_annihilator,
    ideal_intersection,
    spectrum,
)
from .properties import (
    TRANSFER_THEOREMS,
    is_local,
    is_perfect,
    is_steinitz,
    is_vnr,
    squarefree,
    verify_transfer,
    vnr_characterization_crosscheck,
)
from .rings import IntegersMod, axiom_violations

SCHEMA = "dupring.suite/1"
PASS, FAIL, SKIP = "pass", "fail", "skip"

DEFAULT_SAMPLES = {"resolution": 1000, "annihilator": 500, "axioms": 10_000}

PRESENTATION_INSTANCES = [
    ("Z/8", "2", ["2"]),
    ("Z/6", "2", ["3"]),
    ("Z/12", "2", ["2", "3"]),
]

REGISTRY = {
    "vnr-transfer": "R is von Neumann regular iff R ⋈ I is",
    "semisimple-transfer": "R is semisimple iff R ⋈ I is",
    "perfect-transfer": "R is perfect iff R ⋈ I is",
    "local-transfer": "R is local iff R ⋈ I is",
    "steinitz-transfer": "R is Steinitz iff R ⋈ I is",
    "prime-lifting": "Spec(R ⋈ I) is exactly the union of the lifts of Spec(R)",
    "periodic-resolution": "over a domain with I = (a): ker(u) = O2, ker(v) = O1, no idempotent generators",
    "finite-resolution": "finite analogue: kernels via (0:a), splice is a complex, exact iff a regular",
    "annihilator-identity": "(0:(m,0)) = O1 for regular m in I",
    "idealization-coincidence": "R ⋈ I ≅ R ∝ I when I^2 = 0",
    "quotient-retraction": "(R ⋈ I)/Oi ≅ R and O1 ∩ O2 = 0",
    "module-retraction": "(r, r+i) -> r is R-linear and the identity on the diagonal",
    "steinitz-example": "GF(2)[x]/(x^2) ⋈ (x) is a Steinitz ring",
    "presentation-kernel": "ker(u) on (R ⋈ I)^n matches the ker(v)-based description",
    "vnr-characterization": "vnr iff reduced and zero-dimensional; Z/n vnr iff n squarefree",
    "ring-axioms": "commutative ring axioms on every corpus ring",
}


@dataclass
class Check:
    subject: str
    status: str
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"subject": self.subject, "status": self.status, "detail": self.detail}


def _ok(flag: bool) -> str:
    return PASS if flag else FAIL


def _guard(subject: str, fn) -> Check:
    """Run one check; library errors become a failed entry, not a crash."""
    try:
        return fn()
    except CapExceeded as exc:
        return Check(subject, FAIL, {"error": "CapExceeded", "size": exc.size, "cap": exc.cap})
    except DupRingError as exc:
        return Check(subject, FAIL, {"error": type(exc).__name__, "message": str(exc)})


def _rng(seed: int, tag: str) -> int:
    # per-check seed, stable across processes
    return random.Random(f"{seed}:{tag}").randrange(2**32)


# -- individual theorem runners ---------------------------------------------

def _transfer(theorem: str, entries: list[CorpusEntry], cap: int) -> list[Check]:
    out = []
    for e in entries:
        def run(e=e):
            R = e.ring()
            rec = verify_transfer(theorem, R, e.ideal_rep(R), cap)
            return Check(
                e.id,
                _ok(rec.agreement),
                {
                    "base": rec.base.verdict,
                    "dup": rec.dup.verdict,
                    "base_witness": rec.base.witness,
                    "dup_witness": rec.dup.witness,
                },
            )
        out.append(_guard(e.id, run))
    return out


def _prime_lifting(entries: list[CorpusEntry], cap: int) -> list[Check]:
    out = []
    for e in entries:
        def run(e=e):
            D = e.dup()
            R = D.base
            spec_r = spectrum(R, cap)
            spec_d = {pt.ideal.index_set for pt in spectrum(D, cap)}
            lifted, rows, expected = set(), [], 0
            for pt in spec_r:
                lift = lift_prime(D, pt.ideal)
                lifted |= {L.index_set for L in lift.lifts}
                expected += 1 if lift.case is LiftCase.CONTAINS_I else 2
                shape_ok = (
                    lift.p0.index_set == lift.p1.index_set == lift.p2.index_set
                    if lift.case is LiftCase.CONTAINS_I
                    else lift.p1.index_set != lift.p2.index_set
                    and lift.p1.index_set & lift.p2.index_set == lift.p0.index_set
                )
                rows.append({"prime": str(pt.ideal), "case": lift.case.value, "lifts": len(lift.lifts), "shape_ok": shape_ok})
            round_trip = True
            for pt in spectrum(D, cap):
                P, _ = descend_prime(D, pt.ideal)
                round_trip &= pt.ideal.index_set in {L.index_set for L in lift_prime(D, P).lifts}
            ok = spec_d == lifted and len(spec_d) == expected and round_trip and all(r["shape_ok"] for r in rows)
            return Check(
                e.id,
                _ok(ok),
                {"rows": rows, "spec_dup": len(spec_d), "expected": expected, "round_trip": round_trip},
            )
        out.append(_guard(e.id, run))
    return out


def _periodic(entries: list[CorpusEntry], samples: int, seed: int) -> list[Check]:
    out = []
    for e in entries:
        if samples == 0:
            out.append(Check(e.id, SKIP, {"reason": "sampled check disabled (--samples 0)"}))
            continue

        def run(e=e):
            R = e.ring()
            rep = verify_periodic_resolution(R, R.parse(e.ideal), samples=samples, seed=_rng(seed, "res:" + e.id))
            ok = rep.pd_verdict == INFINITE_PERIODIC and rep.consistent()
            return Check(
                e.id,
                _ok(ok),
                {
                    "dup": rep.dup,
                    "ker_u_equals_o2": rep.ker_u_equals_o2,
                    "ker_v_equals_o1": rep.ker_v_equals_o1,
                    "o1_idempotent_generated": rep.o1_idempotent_generated,
                    "o2_idempotent_generated": rep.o2_idempotent_generated,
                    "pd_verdict": rep.pd_verdict,
                    "samples": rep.samples_checked,
                    "sweep": rep.sweep_checked,
                    "disagreements": rep.disagreements,
                },
            )
        out.append(_guard(e.id, run))
    return out


def _finite_resolution(entries: list[CorpusEntry]) -> list[Check]:
    out = []
    for e in entries:
        def run(e=e):
            D = e.dup()
            if len(D.ideal.generators) != 1:
                return Check(e.id, SKIP, {"reason": "ideal is not given by one generator"})
            c = finite_resolution_check(D)
            return Check(e.id, _ok(c.ok), dict(vars(c)))
        out.append(_guard(e.id, run))
    return out


def _annihilator(finite: list[CorpusEntry], infinite: list[CorpusEntry], samples: int, seed: int) -> list[Check]:
    out = []
    for e in infinite:
        if samples == 0:
            out.append(Check(e.id, SKIP, {"reason": "sampled check disabled (--samples 0)"}))
            continue

        def run(e=e):
            D = e.dup()
            m = D.base.parse(e.ideal)
            res = annihilator_dup(D, D.pair(m, D.base.zero), samples=samples, seed=_rng(seed, "ann:" + e.id))
            return Check(
                e.id,
                _ok(res.equals_o1),
                {"c": res.element, "samples": res.samples, "sweep": res.sweep, "disagreements": res.disagreements},
            )
        out.append(_guard(e.id, run))
    for e in finite:
        def run(e=e):
            D = e.dup()
            R = D.base
            t = R.tables
            regular = [
                k for k in sorted(D.ideal.index_set)
                if k != t.zero and np.count_nonzero(t.mul[k] == t.zero) == 1
            ]
            if not regular:
                return Check(e.id, SKIP, {"reason": "I has no nonzero regular element"})
            m = R.at(regular[0])
            ann = colon_annihilator(D, D.pair(m, R.zero))
            return Check(e.id, _ok(ann == o1(D)), {"m": str(m)})
        out.append(_guard(e.id, run))
    return out


def _idealization(entries: list[CorpusEntry]) -> list[Check]:
    out = []
    for e in entries:
        def run(e=e):
            R = e.ring()
            iso = iso_dup_idealization(R, e.ideal_rep(R))
            return Check(e.id, _ok(iso.ok), {"pairs_checked": iso.checked, "counterexample": iso.counterexample})
        out.append(_guard(e.id, run))
    return out


def _quotients(entries: list[CorpusEntry]) -> list[Check]:
    out = []
    for e in entries:
        def run(e=e):
            D = e.dup()
            _, iso1 = quotient_by_oi(D, 1)
            _, iso2 = quotient_by_oi(D, 2)
            meet = ideal_intersection(o1(D), o2(D))
            ok = iso1.ok and iso2.ok and meet.is_zero
            return Check(
                e.id,
                _ok(ok),
                {"o1": iso1.ok, "o2": iso2.ok, "o1_meet_o2_zero": meet.is_zero,
                 "counterexample": iso1.counterexample or iso2.counterexample},
            )
        out.append(_guard(e.id, run))
    return out


def _retraction(entries: list[CorpusEntry]) -> list[Check]:
    out = []
    for e in entries:
        def run(e=e):
            D = e.dup()
            R = D.base
            td, tr = D.tables, R.tables
            phi = np.array([tr.index[v[0]] for v in td.values], dtype=np.int64)
            diag = np.array([td.index[D.diag(r).value] for r in R.enumerate()], dtype=np.int64)
            additive = bool((phi[td.add] == tr.add[phi[:, None], phi[None, :]]).all())
            linear = bool((phi[td.mul[diag]] == tr.mul[:, phi]).all())
            identity = bool((phi[diag] == np.arange(tr.size)).all())
            return Check(e.id, _ok(additive and linear and identity),
                         {"additive": additive, "r_linear": linear, "identity_on_diagonal": identity})
        out.append(_guard(e.id, run))
    return out


def _steinitz_example(cap: int) -> list[Check]:
    entry = next(e for e in builtin_corpus() if e.id == "gf2x-x2")

    def run():
        D = entry.dup()
        R = D.base
        local, perfect, st = is_local(D, cap), is_perfect(D, cap), is_steinitz(D, cap)
        transfer = verify_transfer("steinitz-transfer", R, D.ideal, cap)
        ok = D.cardinality == 8 and local.verdict and perfect.verdict and st.verdict and transfer.agreement
        return Check(
            entry.id,
            _ok(ok),
            {
                "cardinality": D.cardinality,
                "local": local.verdict,
                "maximal_ideals": local.evidence["maximal_ideals"],
                "perfect": perfect.verdict,
                "probe_depth": perfect.evidence["probe_depth"],
                "steinitz": st.verdict,
                "base_steinitz": transfer.base.verdict,
            },
        )
    return [_guard(entry.id, run)]


def _presentation() -> list[Check]:
    out = []
    for spec, ideal, gens in PRESENTATION_INSTANCES:
        subject = f"dup({spec}; {ideal}) a=[{','.join(gens)}]"

        def run(spec=spec, ideal=ideal, gens=gens, subject=subject):
            entry = CorpusEntry(subject, spec, ideal)
            D = entry.dup()
            chk = presentation_kernel_check(D, [D.base.parse(g) for g in gens])
            return Check(subject, _ok(chk.holds), {
                "kernel_size": chk.kernel_size,
                "characterization_size": chk.characterization_size,
                "counterexample": chk.counterexample,
            })
        out.append(_guard(subject, run))
    return out


def _vnr_characterization(entries: list[CorpusEntry], cap: int) -> list[Check]:
    out = []
    for n in range(2, 31):
        def run(n=n):
            R = IntegersMod(n)
            vnr = is_vnr(R).verdict
            cross = vnr_characterization_crosscheck(R, cap)
            ok = vnr == squarefree(n) and cross.agrees
            return Check(f"Z/{n}", _ok(ok), {"vnr": vnr, "squarefree": squarefree(n), "characterization": cross.agrees})
        out.append(_guard(f"Z/{n}", run))
    for e in entries:
        def run(e=e):
            D = e.dup()
            cr, cd = vnr_characterization_crosscheck(D.base, cap), vnr_characterization_crosscheck(D, cap)
            return Check(e.id, _ok(cr.agrees and cd.agrees), {"base": cr.agrees, "dup": cd.agrees})
        out.append(_guard(e.id, run))
    return out


def _axioms(entries: list[CorpusEntry], samples: int, seed: int) -> list[Check]:
    out = []
    seen: set[str] = set()
    rings = []
    for e in entries:
        for spec in (e.spec, e.dup_spec):
            if spec not in seen:
                seen.add(spec)
                rings.append(spec)
    from .rings import make_ring

    for spec in rings:
        def run(spec=spec):
            R = make_ring(spec)
            exhaustive = R.enumerable and R.cardinality <= 16
            if not exhaustive and samples == 0:
                return Check(spec, SKIP, {"reason": "sampled check disabled (--samples 0)"})
            res = axiom_violations(R, random.Random(_rng(seed, "ax:" + spec)), samples=samples)
            return Check(spec, _ok(not res["violations"]),
                         {"method": res["method"], "triples": res["triples"], "violations": res["violations"][:5]})
        out.append(_guard(spec, run))
    return out


# -- driver ------------------------------------------------------------------

def run_suite(
    suite: str = "paper",
    seed: int = 42,
    samples: int | None = None,
    cap: int = DEFAULT_LATTICE_CAP,
    timings: bool = False,
) -> dict:
    if suite != "paper":
        raise ValueError(f"unknown suite {suite!r}")
    n_of = lambda key: DEFAULT_SAMPLES[key] if samples is None else samples
    finite, infinite = finite_entries(), sampleable_entries()
    square_zero = [e for e in finite if "square-zero" in e.tags]

    runners = {
        **{tid: (lambda tid=tid: _transfer(tid, finite, cap)) for tid in TRANSFER_THEOREMS},
        "prime-lifting": lambda: _prime_lifting(finite, cap),
        "periodic-resolution": lambda: _periodic(infinite, n_of("resolution"), seed),
        "finite-resolution": lambda: _finite_resolution(finite),
        "annihilator-identity": lambda: _annihilator(finite, infinite, n_of("annihilator"), seed),
        "idealization-coincidence": lambda: _idealization(square_zero),
        "quotient-retraction": lambda: _quotients(finite),
        "module-retraction": lambda: _retraction(finite),
        "steinitz-example": lambda: _steinitz_example(cap),
        "presentation-kernel": _presentation,
        "vnr-characterization": lambda: _vnr_characterization(finite, cap),
        "ring-axioms": lambda: _axioms(builtin_corpus(), n_of("axioms"), seed),
    }
    theorems = []
    totals = {PASS: 0, FAIL: 0, SKIP: 0}
    for tid, description in REGISTRY.items():
        start = time.perf_counter()
        checks = runners[tid]()
        counts = {s: sum(c.status == s for c in checks) for s in (PASS, FAIL, SKIP)}
        for s, k in counts.items():
            totals[s] += k
        if counts[FAIL]:
            status = FAIL
        elif counts[PASS]:
            status = PASS
        else:
            status = SKIP
        entry = {
            "id": tid,
            "description": description,
            "status": status,
            "counts": counts,
            "checks": [c.to_dict() for c in checks],
        }
        if timings:
            entry["elapsed_s"] = round(time.perf_counter() - start, 3)
        theorems.append(entry)
    return {
        "schema": SCHEMA,
        "tool_version": __version__,
        "suite": suite,
        "seed": seed,
        "samples": samples,
        "cap": cap,
        "theorems": theorems,
        "summary": {"passed": totals[PASS], "failed": totals[FAIL], "skipped": totals[SKIP]},
    }
