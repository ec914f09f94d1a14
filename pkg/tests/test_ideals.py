import pytest

import oracle
from dupring.errors import CapExceeded, ImproperIdeal, NotAnIdeal, NotEnumerable, UndecidableMembership
from dupring.ideals import (
    all_ideals,
    colon_annihilator,
    contains_regular_element,
    ideal_from_elements,
    ideal_from_generators,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_maximal,
    is_prime,
    membership,
    parse_generators,
    quotient_ring,
    spectrum,
    unit_ideal,
    zero_ideal,
)
from dupring.rings import make_ring


def ideal(spec, gens):
    R = make_ring(spec)
    return ideal_from_generators(R, parse_generators(R, gens))


def vals(I):
    return sorted(str(e) for e in I.elements)


def test_closure_examples():
    assert vals(ideal("Z/6", "2")) == ["0", "2", "4"]
    assert vals(ideal("Z/6", "")) == ["0"]
    assert vals(ideal("GF(2)[x]/(x^2)", "x")) == ["0", "x"]


def test_membership():
    Z6 = make_ring("Z/6")
    assert membership(ideal("Z/6", "2"), Z6("4"))
    Z = make_ring("Z")
    assert not membership(ideal_from_generators(Z, [Z("2")]), Z("3"))
    assert membership(ideal_from_generators(Z, [Z("4"), Z("6")]), Z("-2"))
    P = make_ring("GF(2)[x]")
    assert membership(ideal_from_generators(P, [P("x")]), P("x^2"))
    assert not membership(ideal_from_generators(P, [P("x")]), P("x+1"))


def test_lattice_operations():
    two, three = ideal("Z/6", "2"), ideal("Z/6", "3")
    s = ideal_sum(two, three)
    assert not s.proper
    assert ideal_intersection(two, three).is_zero
    assert ideal_product(ideal("Z/4", "2"), ideal("Z/4", "2")).is_zero


def test_sampleable_lattice_ops_refuse():
    Z = make_ring("Z")
    I = ideal_from_generators(Z, [Z("2")])
    with pytest.raises(NotEnumerable):
        ideal_intersection(I, I)


def test_annihilators():
    Z6 = make_ring("Z/6")
    assert vals(colon_annihilator(Z6, Z6("2"))) == ["0", "3"]
    assert colon_annihilator(Z6, Z6.one).is_zero
    assert not colon_annihilator(Z6, Z6.zero).proper


def test_primes():
    assert is_prime(ideal("Z/6", "2")) and is_maximal(ideal("Z/6", "2"))
    assert is_prime(ideal("Z/4", "2"))
    assert not is_prime(zero_ideal(make_ring("Z/6")))
    with pytest.raises(ImproperIdeal):
        is_prime(unit_ideal(make_ring("Z/6")))
    Z = make_ring("Z")
    assert is_prime(ideal_from_generators(Z, [Z("7")]))
    assert not is_prime(ideal_from_generators(Z, [Z("6")]))


@pytest.mark.parametrize("spec, count", [("Z/6", 4), ("Z/4", 3), ("GF(2)", 2), ("Z/12", 6), ("Z/8", 4)])
def test_all_ideals_count(spec, count):
    assert len(all_ideals(make_ring(spec))) == count


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12])
def test_all_ideals_against_oracle(n):
    # Z/n is principal, so one generator reaches every ideal
    R = make_ring(f"Z/{n}")
    ours = {frozenset(e.value for e in I.elements) for I in all_ideals(R)}
    assert ours == oracle.ideals(oracle.zn(n), max_gens=1)


def test_every_enumerated_set_is_an_ideal():
    R = make_ring("Z/2 x Z/4")
    O = oracle.Finite(
        [e.value for e in R.enumerate()],
        lambda a, b: (R._add(a, b)),
        lambda a, b: (R._mul(a, b)),
        R.zero.value,
        R.one.value,
    )
    for I in all_ideals(R):
        assert oracle.is_ideal(O, [e.value for e in I.elements])


@pytest.mark.parametrize(
    "spec, maxes",
    [("Z/6", ["(2)", "(3)"]), ("Z/4", ["(2)"]), ("GF(2)[x]/(x^2)", ["(x)"])],
)
def test_spectrum(spec, maxes):
    pts = spectrum(make_ring(spec))
    assert sorted(str(p.ideal) for p in pts) == maxes
    assert all(p.maximal for p in pts)


def test_cap():
    with pytest.raises(CapExceeded) as exc:
        all_ideals(make_ring("Z/30 x Z/30"), cap=128)
    assert exc.value.size == 900


def test_regular_elements():
    Z = make_ring("Z")
    assert contains_regular_element(ideal_from_generators(Z, [Z("2")]))
    assert not contains_regular_element(ideal("Z/6", "2"))
    for spec in ["Z/4", "Z/6", "Z/8", "Z/12", "GF(2)[x]/(x^3)", "Z/2 x Z/2"]:
        for I in all_ideals(make_ring(spec)):
            if I.proper:
                assert not contains_regular_element(I)


def test_not_an_ideal():
    R = make_ring("Z/6")
    with pytest.raises(NotAnIdeal):
        ideal_from_elements(R, [R("0"), R("2")])


def test_undecidable_membership():
    R = make_ring("Z x Z")
    I = ideal_from_generators(R, [R("(2,0)")])
    with pytest.raises(UndecidableMembership):
        membership(I, R("(4,0)"))


def test_quotient_ring():
    Q = quotient_ring(make_ring("Z/12"), ideal("Z/12", "4"))
    assert Q.cardinality == 4
    three = Q.project(make_ring("Z/12")("3"))
    assert (three * three) == Q.project(make_ring("Z/12")("1"))
