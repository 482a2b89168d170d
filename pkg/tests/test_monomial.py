import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from vpowers import (
    MonomialIdeal,
    PreconditionError,
    ResourceLimitError,
    Ring,
    colon_by_ideal,
    colon_by_monomial,
    generator_limit,
    ideal_profile,
    intersect,
    minimalize,
    power,
    product,
)
from vpowers.errors import RingMismatchError

R3 = Ring(["x", "y", "z"])
R4 = Ring.indexed(4)


def gens_strategy(n=3, max_exp=3, max_gens=5):
    mono = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
    return st.lists(mono, min_size=1, max_size=max_gens)


def as_set(I):
    return sorted(tuple(g.exponents) for g in I.generators)


def test_divides():
    x1, x2 = Ring.indexed(2).var(0), Ring.indexed(2).var(1)
    one = Ring.indexed(2).one
    assert x1.divides(x1 * x2)
    assert one.divides(x1**2)
    assert not (x1**2).divides(x1 * x2)


def test_monomial_arithmetic():
    m = R3.monomial("x*y^2")
    assert m.degree == 3
    assert str(m) == "x*y^2"
    assert str(R3.one) == "1"
    assert m / R3.monomial("y") == R3.monomial("x*y")
    with pytest.raises(PreconditionError):
        R3.monomial("x") / R3.monomial("y")
    assert m.gcd(R3.monomial("y^3*z")) == R3.monomial("y^2")
    assert m.lcm(R3.monomial("y^3*z")) == R3.monomial("x*y^3*z")
    divisors = list(R3.monomial("x*y").divisors())
    assert [str(d) for d in divisors] == ["1", "x", "y", "x*y"]


def test_canonical_order():
    I = R3.ideal("y^2", "x*y", "x^2", "z")
    assert [str(g) for g in I.generators] == ["z", "x^2", "x*y", "y^2"]


def test_minimalize_examples():
    R = Ring.indexed(2)
    assert as_set(minimalize([R.monomial("x1"), R.monomial("x1*x2")])) == [(1, 0)]
    gens = ["x1*x2^2", "x1^2*x2", "x1^2*x3*x4", "x2^2*x3*x4"]
    I = R4.ideal(*gens)
    assert len(I) == 4
    assert MonomialIdeal(R4, []).is_zero


@given(gens_strategy())
def test_minimal_generators_match_oracle(gens):
    assert as_set(MonomialIdeal(R3, gens)) == oracles.minimal(gens)


def test_colon_examples():
    I = R3.ideal("y^2*z", "z^3", "y^2*x")
    assert colon_by_monomial(I, R3.monomial("y^2")) == R3.ideal("x", "z")
    assert colon_by_monomial(I, R3.one) == I
    R = Ring.indexed(6)
    J = R.ideal("x1*x2", "x2*x3", "x4*x5", "x5*x6")
    Q = colon_by_ideal(J, R.ideal("x2", "x5"))
    assert R.monomial("x1*x6") in Q
    assert colon_by_ideal(J, J).is_unit
    R1 = Ring(["x"])
    assert colon_by_ideal(R1.ideal("x^2"), R1.ideal("x")) == R1.ideal("x")


@given(gens_strategy(), st.tuples(*[st.integers(0, 3)] * 3))
def test_colon_matches_membership_oracle(gens, f):
    I = MonomialIdeal(R3, gens)
    got = as_set(colon_by_monomial(I, R3.monomial(f)))
    assert got == oracles.colon_by_membership(gens, f)


@given(gens_strategy(), gens_strategy())
def test_intersection_matches_membership_oracle(a, b):
    got = as_set(intersect(MonomialIdeal(R3, a), MonomialIdeal(R3, b)))
    assert got == oracles.intersection_by_membership(a, b)


@given(gens_strategy(max_gens=4), gens_strategy(max_gens=4))
def test_product_matches_oracle(a, b):
    got = as_set(product(MonomialIdeal(R3, a), MonomialIdeal(R3, b)))
    assert got == oracles.product_gens(a, b)


@given(gens_strategy(max_gens=3), st.tuples(*[st.integers(0, 3)] * 3))
def test_colon_by_ideal_defining_property(gens, f):
    # (I : J) is the set of h with h*J inside I
    I = MonomialIdeal(R3, gens)
    J = R3.ideal("x*y", "z^2")
    Q = colon_by_ideal(I, J)
    h = R3.monomial(f)
    assert (h in Q) == all((h * g) in I for g in J.generators)


def test_intersection_and_product_examples():
    R = Ring(["x", "y"])
    assert R.ideal("x") & R.ideal("y") == R.ideal("x*y")
    I = R.ideal("x^2", "y")
    assert I & R.unit_ideal() == I
    assert R.ideal("x^2", "y") & R.ideal("x", "y^2") == R.ideal("x^2", "x*y", "y^2")
    assert R.ideal("x") * R.ideal("y") == R.ideal("x*y")
    assert I * R.unit_ideal() == I
    assert R.ideal("x", "y") ** 2 == R.ideal("x^2", "x*y", "y^2")


def test_power():
    I = R3.ideal("y^2*z", "z^3")
    assert power(I, 1) == I
    R = Ring(["x"])
    assert power(R.ideal("x^2"), 4) == R.ideal("x^8")
    with pytest.raises(PreconditionError):
        power(I, 0)
    J = R4.ideal("x1*x2^2", "x1^2*x2", "x1^2*x3*x4", "x2^2*x3*x4")
    assert J.alpha == 3
    assert power(J, 2).alpha == 6


def test_contains():
    R = Ring.indexed(2)
    assert R.monomial("x1*x2") in R.ideal("x1")
    I = R3.ideal("y^2*z", "z^3", "y^2*x")
    assert R3.one not in I
    assert R3.monomial("y^2") not in I


def test_profile():
    J = R4.ideal("x1*x2^2", "x1^2*x2", "x1^2*x3*x4", "x2^2*x3*x4")
    prof = ideal_profile(J)
    assert prof.alpha == 3
    assert not prof.equigenerated
    assert not prof.squarefree
    E = R4.ideal("x1*x2", "x2*x3", "x3*x4")
    prof = ideal_profile(E)
    assert (prof.alpha, prof.squarefree, prof.equigenerated) == (2, True, True)
    assert ideal_profile(R4.zero_ideal()).alpha is None


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        R3.ideal("x") + R4.ideal("x1")


def test_generator_limit():
    I = Ring.indexed(6).ideal(*[f"x{i}" for i in range(1, 7)])
    with generator_limit(20):
        with pytest.raises(ResourceLimitError):
            power(I, 3)
    assert len(power(I, 3)) == 56


def test_rows_are_read_only():
    I = R3.ideal("x", "y")
    with pytest.raises(ValueError):
        I.rows[0, 0] = 5
    assert isinstance(I.rows, np.ndarray)
