import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from dupring import polys
from dupring.errors import ModeMismatch, NotEnumerable, NotPrime, OwnerMismatch, ParseError, ZeroRing
from dupring.rings import axiom_violations, make_ring, special_elements


def strs(elems):
    return sorted(str(e) for e in elems)


@pytest.mark.parametrize(
    "spec, size",
    [("Z/6", 6), ("GF(2)[x]/(x^2)", 4), ("GF(5)", 5), ("Z/2 x Z/3", 6), ("GF(3)[x]/(x^2+1)", 9)],
)
def test_cardinality(spec, size):
    R = make_ring(spec)
    assert R.enumerable
    assert R.cardinality == size
    assert len(R.enumerate()) == size


@pytest.mark.parametrize("spec", ["Z", "GF(2)[x]", "GF(3)[x]", "Z x Z"])
def test_sampleable_has_no_cardinality(spec):
    R = make_ring(spec)
    assert not R.enumerable
    assert R.cardinality is None
    with pytest.raises(NotEnumerable):
        R.enumerate()


def test_arithmetic_examples():
    Z6 = make_ring("Z/6")
    assert Z6("4") + Z6("5") == Z6("3")
    Q = make_ring("GF(2)[x]/(x^2)")
    assert (Q("x") * Q("x")).is_zero
    P = make_ring("Z/6 x Z/6")
    assert str(P("(1,2)") * P("(3,4)")) == "(3,2)"


def test_enumeration_order():
    assert [str(e) for e in make_ring("Z/2").enumerate()] == ["0", "1"]
    assert [str(e) for e in make_ring("GF(2)[x]/(x^2)").enumerate()] == ["0", "1", "x", "x+1"]


def test_sampling_is_seeded():
    Z = make_ring("Z")
    a = [Z.sample(random.Random(42), 100) for _ in range(3)]
    b = [Z.sample(random.Random(42), 100) for _ in range(3)]
    assert a == b
    assert all(-100 <= e.value <= 100 for e in a)
    P = make_ring("GF(3)[x]")
    rng = random.Random(7)
    assert all(polys.degree(P.sample(rng, 4).value) <= 4 for _ in range(50))
    Z6 = make_ring("Z/6")
    assert Z6.sample(random.Random(0)) in Z6.enumerate()


def test_special_elements_examples():
    assert strs(special_elements(make_ring("Z/6")).idempotents) == ["0", "1", "3", "4"]
    assert strs(special_elements(make_ring("Z/4")).nilpotents) == ["0", "2"]
    assert strs(special_elements(make_ring("GF(2)[x]/(x^2)")).units) == ["1", "x+1"]
    assert len(special_elements(make_ring("Z/2 x Z/2")).idempotents) == 4


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 30])
def test_special_elements_against_oracle(n):
    R, O = make_ring(f"Z/{n}"), oracle.zn(n)
    sp = special_elements(R)
    assert sorted(e.value for e in sp.units) == sorted(oracle.units(O))
    assert sorted(e.value for e in sp.nilpotents) == sorted(oracle.nilpotents(O))


@pytest.mark.parametrize(
    "spec, err",
    [
        ("Z/1", ZeroRing),
        ("Z/0", ParseError),
        ("GF(4)", NotPrime),
        ("GF(6)[x]", NotPrime),
        ("Q", ParseError),
        ("Z/2 x Z", ModeMismatch),
        ("GF(2)[x]/(0)", ParseError),
        ("", ParseError),
    ],
)
def test_bad_specs(spec, err):
    with pytest.raises(err):
        make_ring(spec)


def test_owner_mismatch():
    with pytest.raises(OwnerMismatch):
        make_ring("Z/4")("1") + make_ring("Z/6")("1")


def test_element_parse_errors():
    with pytest.raises(ParseError):
        make_ring("Z/6")("y")


@pytest.mark.parametrize(
    "spec",
    ["Z", "Z/6", "GF(7)", "GF(2)[x]", "GF(3)[x]/(x^2+1)", "Z/2 x Z/3", "dup(Z/6; 2)", "dup(GF(2)[x]/(x^2); x)"],
)
def test_descriptor_round_trip(spec):
    R = make_ring(spec)
    assert make_ring(R.descriptor).descriptor == R.descriptor
    assert make_ring(R.descriptor) == R


def test_element_format_round_trip():
    for spec in ["Z/6", "GF(3)[x]/(x^2)", "Z/2 x Z/3", "dup(Z/4; 2)"]:
        R = make_ring(spec)
        for e in R.enumerate():
            assert R(str(e)) == e


@pytest.mark.parametrize("spec", ["Z/6", "Z/2 x Z/2", "GF(2)[x]/(x^3)", "Z/30", "Z", "GF(2)[x]"])
def test_axioms(spec):
    res = axiom_violations(make_ring(spec), random.Random(0), samples=2000)
    assert res["violations"] == []


def test_axiom_checker_catches_a_broken_ring():
    R = make_ring("Z/5")
    R.__dict__.pop("tables", None)
    R._mul = lambda a, b: (a * b + 1) % 5
    res = axiom_violations(R)
    assert res["method"] == "exhaustive"
    assert {v[0] for v in res["violations"]} >= {"mul-assoc", "one"}


# -- polynomial arithmetic ---------------------------------------------------

poly3 = st.lists(st.integers(0, 2), max_size=8).map(lambda c: polys.trim(c, 3))


@settings(max_examples=200, deadline=None)
@given(poly3, poly3.filter(bool))
def test_division_identity(f, g):
    q, r = polys.divmod_poly(f, g, 3)
    assert polys.add(polys.mul(q, g, 3), r, 3) == f
    assert polys.degree(r) < polys.degree(g)


@settings(max_examples=200, deadline=None)
@given(poly3, poly3)
def test_gcd_divides(f, g):
    d = polys.gcd(f, g, 3)
    if f or g:
        assert polys.divides(d, f, 3) and polys.divides(d, g, 3)


@settings(max_examples=100, deadline=None)
@given(poly3)
def test_fmt_parse_round_trip(f):
    assert polys.parse(polys.fmt(f), 3) == f


def test_irreducibility():
    assert polys.is_irreducible((1, 1, 1), 2)
    assert not polys.is_irreducible((1, 0, 1), 2)
    assert polys.is_irreducible((1, 0, 1), 3)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 40), st.integers(), st.integers(), st.integers())
def test_zn_ring_laws(n, a, b, c):
    R = make_ring(f"Z/{n}")
    x, y, z = R(a % n), R(b % n), R(c % n)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x - x == R.zero
