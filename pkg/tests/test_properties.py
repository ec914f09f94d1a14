import pytest

import oracle
from dupring.corpus import finite_entries
from dupring.duplication import duplicate
from dupring.errors import NotEnumerable
from dupring.ideals import ideal_from_generators, parse_generators
from dupring.properties import (
    CHECKERS,
    EXHAUSTIVE,
    THEOREM_BACKED,
    TRANSFER_THEOREMS,
    check_property,
    is_coherent,
    is_local,
    is_noetherian,
    is_perfect,
    is_reduced,
    is_semisimple,
    is_steinitz,
    is_vnr,
    squarefree,
    verify_transfer,
    vnr_characterization_crosscheck,
)
from dupring.rings import make_ring


def ideal(R, gens):
    return ideal_from_generators(R, parse_generators(R, gens))


def test_reduced():
    assert is_reduced(make_ring("Z/6")).verdict
    rep = is_reduced(make_ring("Z/4"))
    assert not rep.verdict and rep.witness == "2"
    rep = is_reduced(make_ring("Z"))
    assert rep.verdict and rep.method == THEOREM_BACKED


def test_vnr():
    assert is_vnr(make_ring("Z/6")).verdict
    rep = is_vnr(make_ring("Z/4"))
    assert (rep.verdict, rep.witness, rep.method) == (False, "2", EXHAUSTIVE)
    rep = is_vnr(make_ring("GF(2)[x]/(x^2)"))
    assert (rep.verdict, rep.witness) == (False, "x")
    with pytest.raises(NotEnumerable):
        is_vnr(make_ring("Z"))


@pytest.mark.parametrize("n", range(2, 31))
def test_vnr_squarefree(n):
    R = make_ring(f"Z/{n}")
    assert is_vnr(R).verdict == squarefree(n) == oracle.squarefree(n) == oracle.vnr(oracle.zn(n))
    assert vnr_characterization_crosscheck(R).agrees


def test_local():
    assert is_local(make_ring("Z/4")).verdict
    rep = is_local(make_ring("Z/6"))
    assert not rep.verdict
    assert sorted(rep.evidence["maximal_ideals"]) == ["(2)", "(3)"]
    assert is_local(make_ring("GF(2)[x]/(x^2)")).verdict


def test_semisimple():
    assert is_semisimple(make_ring("Z/6")).verdict
    assert not is_semisimple(make_ring("Z/4")).verdict
    assert is_semisimple(make_ring("GF(5)")).verdict


@pytest.mark.parametrize("spec", ["Z/4", "Z/6", "GF(2)[x]/(x^3)", "Z/2 x Z/4"])
def test_perfect(spec):
    assert is_perfect(make_ring(spec)).verdict


def test_steinitz():
    assert is_steinitz(make_ring("GF(2)[x]/(x^2)")).verdict
    assert not is_steinitz(make_ring("Z/6")).verdict
    R = make_ring("GF(2)[x]/(x^2)")
    D = duplicate(R, ideal(R, "x"))
    rep = is_steinitz(D)
    assert rep.verdict and D.cardinality == 8


def test_coherent_and_noetherian():
    rep = is_coherent(make_ring("Z/8"))
    assert rep.verdict and rep.method == THEOREM_BACKED
    assert rep.evidence["presentations"]
    for p in rep.evidence["presentations"]:
        assert p["kernel_size"] >= 1 and p["kernel_generators"]
    rep = is_coherent(make_ring("Z"))
    assert rep.verdict and rep.justification == "principal ideal domain"
    assert is_noetherian(make_ring("GF(3)[x]")).verdict
    for e in finite_entries()[:6]:
        assert is_coherent(e.dup()).verdict


def test_check_property_unknown():
    with pytest.raises(ValueError):
        check_property("artinian", make_ring("Z/4"))
    assert set(CHECKERS) >= {"vnr", "reduced", "local", "perfect", "steinitz", "semisimple", "coherent"}


@pytest.mark.parametrize(
    "theorem, spec, gens, verdict",
    [
        ("vnr-transfer", "Z/6", "2", True),
        ("vnr-transfer", "Z/4", "2", False),
        ("steinitz-transfer", "GF(2)[x]/(x^2)", "x", True),
        ("local-transfer", "Z/6", "3", False),
        ("semisimple-transfer", "Z/30", "15", True),
    ],
)
def test_transfer_examples(theorem, spec, gens, verdict):
    R = make_ring(spec)
    rec = verify_transfer(theorem, R, ideal(R, gens))
    assert rec.agreement
    assert rec.base.verdict is verdict and rec.dup.verdict is verdict


@pytest.mark.parametrize("entry", finite_entries(), ids=lambda e: e.id)
def test_transfer_over_corpus(entry):
    R = entry.ring()
    for theorem in TRANSFER_THEOREMS:
        assert verify_transfer(theorem, R, entry.ideal_rep(R)).agreement


def test_vnr_dup_against_oracle():
    for n, d in [(6, 2), (6, 3), (4, 2), (12, 6), (30, 15)]:
        R = make_ring(f"Z/{n}")
        D = duplicate(R, ideal(R, str(d)))
        assert is_vnr(D).verdict == oracle.vnr(oracle.zn_dup(n, d))


def test_report_to_dict():
    d = is_vnr(make_ring("Z/4")).to_dict()
    assert d == {
        "ring": "Z/4",
        "prop": "vnr",
        "verdict": False,
        "method": "Exhaustive",
        "witness": "2",
        "justification": None,
        "evidence": {},
    }
