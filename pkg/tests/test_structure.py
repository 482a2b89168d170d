import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vpowers import (
    Graph,
    MonomialIdeal,
    PreconditionError,
    Ring,
    check_linear_quotient_order,
    edge_ideal,
    find_unsupported_witness,
    has_linear_quotients,
    has_strong_persistence_upto,
    is_ntf_upto,
    is_vertex_splittable,
    polarize,
    replay_split_tree,
    v_number,
)
from vpowers.corpus import random_vertex_splittable

R2 = Ring(["x", "y"])
R3 = Ring(["x", "y", "z"])
YZ = R3.ideal("y^2*z", "z^3", "y^2*x")


def test_polarize_example():
    P, pmap = polarize(YZ)
    assert P.ring.variables == ("x_1", "y_1", "y_2", "z_1", "z_2", "z_3")
    assert P == P.ring.ideal("y_1*y_2*z_1", "z_1*z_2*z_3", "x_1*y_1*y_2")
    assert v_number(P).degree == v_number(YZ).degree == 2
    assert dict((str(a), str(b)) for a, b in pmap.generators)["z^3"] == "z_1*z_2*z_3"


def test_polarize_squarefree_is_renaming():
    I = edge_ideal(Graph.cycle(5))
    P, _ = polarize(I)
    assert P.is_squarefree and len(P) == len(I)
    assert [v.split("_")[0] for v in P.ring.variables] == list(I.ring.variables)


def test_polarize_name_clash():
    R = Ring(["x", "x_1"])
    P, _ = polarize(R.ideal("x^2", "x_1"))
    assert len(set(P.ring.variables)) == P.ring.n == 3


@settings(max_examples=60)
@given(
    st.lists(st.tuples(*[st.integers(0, 3)] * 3).filter(any), min_size=1, max_size=5)
)
def test_polarization_never_raises_v_number(gens):
    I = MonomialIdeal(Ring.indexed(3), gens)
    if not I.is_proper:
        return
    assert v_number(polarize(I)[0]).degree <= v_number(I).degree


def test_polarization_can_lower_v_number():
    # (I : x2^2) = <x3> and nothing of degree 1 works, but after polarizing
    # (I(pol) : x3_2) = <x3_1>; checked independently with the pure oracle
    I = Ring.indexed(3).ideal("x3^2", "x2^2*x3")
    P, _ = polarize(I)
    assert v_number(I).degree == 2
    w = v_number(P)
    assert (w.degree, str(w.f), str(w.prime)) == (1, "x3_2", "<x3_1>")


@pytest.mark.parametrize("text", ["x1*x2, x2*x3", "x1^2, x1*x2, x2^2", "x1*x2^2, x1^2*x2, x1^2*x3*x4, x2^2*x3*x4"])
def test_polarization_equality_on_small_examples(text):
    I = Ring.indexed(4).ideal(*[t.strip() for t in text.split(",")])
    assert v_number(polarize(I)[0]).degree == v_number(I).degree


def brute_force_linear_quotients(I):
    for order in permutations(I.generators):
        if check_linear_quotient_order(I, list(order)):
            return True
    return False


def test_linear_quotient_examples():
    lq = has_linear_quotients(R2.ideal("x^2", "x*y", "y^2"))
    assert lq.status == "found"
    assert [str(u) for u in lq.ordering] == ["x^2", "x*y", "y^2"]
    assert has_linear_quotients(edge_ideal(Graph.cycle(3)))
    R4 = Ring.indexed(4)
    assert has_linear_quotients(R4.ideal("x1*x2", "x3*x4")).status == "none"
    with pytest.raises(PreconditionError):
        has_linear_quotients(R2.ideal("x", "y^2"))


@pytest.mark.parametrize("seed", range(25))
def test_linear_quotients_against_permutations(seed):
    rng = random.Random(seed)
    n = 4
    R = Ring.indexed(n)
    d = rng.choice((2, 3))
    pool = []
    for _ in range(rng.randint(2, 5)):
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        pool.append(e)
    I = MonomialIdeal(R, pool)
    lq = has_linear_quotients(I)
    assert bool(lq) == brute_force_linear_quotients(I)
    if lq:
        assert check_linear_quotient_order(I, list(lq.ordering))


def test_linear_quotient_budget():
    assert has_linear_quotients(edge_ideal(Graph.cycle(7)), budget=1).status == "unknown"


def test_vertex_splittable_examples():
    R1 = Ring(["x"])
    for I in (R1.ideal("x"), R1.zero_ideal(), R1.unit_ideal()):
        tree = is_vertex_splittable(I)
        assert tree is not None and replay_split_tree(tree) == I
    tree = is_vertex_splittable(R3.ideal("x*y", "x*z"))
    assert tree.variable == 0
    assert replay_split_tree(tree) == R3.ideal("x*y", "x*z")
    assert is_vertex_splittable(Ring.indexed(4).ideal("x1*x2", "x3*x4")) is None


def test_constructed_vertex_splittable_ideals_replay():
    rng = random.Random(3)
    R = Ring.indexed(6)
    for _ in range(15):
        I = random_vertex_splittable(rng, list(range(6)), rng.randint(1, 3), R)
        tree = is_vertex_splittable(I)
        assert tree is not None
        assert replay_split_tree(tree) == I


def test_ntf_windows():
    R6 = Ring.indexed(6)
    two = R6.ideal("x1*x2", "x2*x3", "x4*x5", "x5*x6")
    assert all(r.ass_contained and r.equals_symbolic for r in is_ntf_upto(two, 4))
    tri = is_ntf_upto(edge_ideal(Graph.cycle(3)), 3)
    assert tri[0].equals_symbolic and not tri[1].equals_symbolic
    principal = is_ntf_upto(R2.ideal("x^2*y"), 4)
    assert all(r.ass_contained for r in principal)


def test_strong_persistence():
    assert all(has_strong_persistence_upto(R2.ideal("x*y^3"), 4))
    assert all(has_strong_persistence_upto(edge_ideal(Graph.cycle(5)), 3))
    assert has_strong_persistence_upto(R2.ideal("x^2", "x*y"), 3) == [True, True, True]


def test_unsupported_witness():
    w = find_unsupported_witness(YZ)
    assert (str(w.f), str(w.prime)) == ("y^2", "<x,z>")
    w = find_unsupported_witness(R2.ideal("x^2", "x*y"))
    # x itself meets its prime <x,y>, but y gives (I : y) = <x>
    assert (str(w.f), str(w.prime)) == ("y", "<x>")
    assert w.verify(R2.ideal("x^2", "x*y"))


def test_squarefree_with_minimal_v_has_unsupported_witness():
    rng = random.Random(5)
    seen = 0
    for _ in range(200):
        n = rng.randint(3, 6)
        R = Ring.indexed(n)
        gens = [[int(rng.random() < 0.5) for _ in range(n)] for _ in range(rng.randint(1, 5))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        I = MonomialIdeal(R, gens)
        if v_number(I).degree == I.alpha - 1:
            seen += 1
            assert find_unsupported_witness(I) is not None
    assert seen > 20
