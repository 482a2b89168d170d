"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Corpora are seeded and cached so the lower-bound check (criterion 14) can
reuse every local v-number computed by the other suites.
"""

from __future__ import annotations

import random
from functools import lru_cache

from conftest import record
from vpowers import (
    Graph,
    PrimeIdeal,
    Ring,
    associated_primes,
    associated_primes_oracle,
    cover_ideal,
    edge_ideal,
    edge_power_colon,
    edge_product,
    colon_by_monomial,
    has_linear_quotients,
    is_vertex_splittable,
    local_v_numbers,
    polarize,
    power,
    stability_estimate,
    v_function,
    v_number,
    v_oracle,
    v_stab_upper_bound,
)
from vpowers.corpus import (
    connected_bipartite_graphs,
    connected_graphs,
    random_connected_graph,
    random_degree_two_ideal,
    random_monomial_ideal,
    random_squarefree_ideal,
    random_vertex_splittable,
)
from vpowers.graphs import bipartite_bound

R3 = Ring(["x", "y", "z"])
YZ = R3.ideal("y^2*z", "z^3", "y^2*x")
MIXED = Ring.indexed(4).ideal("x1*x2^2", "x1^2*x2", "x1^2*x3*x4", "x2^2*x3*x4")
TWO_P3 = Ring.indexed(6).ideal("x1*x2", "x2*x3", "x4*x5", "x5*x6")
THREE_PATHS = Ring.indexed(7).ideal("x1*x2*x3", "x3*x4*x5", "x5*x6*x7")

# (label, I, k, {p: witness}) for every local v-number computed below
LOCALS: list = []


def primes(ring, *groups):
    return [PrimeIdeal.from_names(ring, g.split(",")) for g in groups]


def report_with_locals(label, I, kmax):
    rep = v_function(I, kmax, with_locals=True)
    for row in rep.rows:
        LOCALS.append((label, I, row.k, row.locals))
    return rep


def locals_at_power(label, I, k):
    Ik = power(I, k)
    ass = associated_primes(Ik)
    loc = local_v_numbers(Ik, ass)
    LOCALS.append((label, I, k, loc))
    return min(w.degree for w in loc.values())


# ---------------------------------------------------------------------------
# corpora


@lru_cache(maxsize=None)
def corpus_random():
    rng = random.Random(20240101)
    return tuple(random_monomial_ideal(rng) for _ in range(200))


@lru_cache(maxsize=None)
def corpus_squarefree_tight():
    rng = random.Random(7)
    out = []
    while len(out) < 100:
        I = random_squarefree_ideal(rng)
        if v_number(I).degree == I.alpha - 1:
            out.append(I)
    return tuple(out)


@lru_cache(maxsize=None)
def corpus_v_one():
    rng = random.Random(11)
    out = []
    while len(out) < 50:
        I = random_degree_two_ideal(rng)
        if v_number(I).degree == 1:
            out.append(I)
    return tuple(out)


@lru_cache(maxsize=None)
def corpus_vertex_splittable():
    rng = random.Random(13)
    R = Ring.indexed(6)
    out = []
    while len(out) < 20:
        I = random_vertex_splittable(rng, list(range(6)), rng.randint(2, 3), R)
        if I.is_proper and I.is_equigenerated and len(I) >= 2 and is_vertex_splittable(I) is not None:
            out.append(I)
    return tuple(out)


# ---------------------------------------------------------------------------
# criteria


def test_criterion_01_oracle_equivalence():
    bad = []
    for j, I in enumerate(corpus_random()):
        w = v_number(I)
        if w.degree != v_oracle(I).degree or associated_primes(I).primes != associated_primes_oracle(I):
            bad.append((j, str(I)))
        LOCALS.append(("random", I, 1, local_v_numbers(I)))
    record(1, not bad, f"200 random ideals, {len(bad)} mismatches {bad[:3]}")
    assert not bad


def test_criterion_02_three_variable_example():
    ass = associated_primes(YZ).primes
    rep = report_with_locals("yz", YZ, 5)
    ok = list(ass) == primes(R3, "x,z", "y,z") and rep.values == [3 * k - 1 for k in range(1, 6)]
    ok = ok and rep.values[0] == 2
    record(2, ok, f"Ass={[str(p) for p in ass]} v(I^k)={rep.values}")
    assert ok


def test_criterion_03_mixed_degree_example():
    rep = report_with_locals("mixed", MIXED, 2)
    ok = MIXED.alpha == 3 and rep.values == [2, 6]
    record(3, ok, f"alpha={MIXED.alpha} v(I), v(I^2) = {rep.values}")
    assert ok


def test_criterion_04_disconnected_example():
    ring = TWO_P3.ring
    ass = associated_primes(TWO_P3).primes
    expected = primes(ring, "x2,x5", "x1,x3,x5", "x2,x4,x6", "x1,x3,x4,x6")
    rep = report_with_locals("two-p3", TWO_P3, 4)
    est = stability_estimate(rep, 2)
    ok = list(ass) == expected and rep.values == [2, 4, 6, 8]
    ok = ok and est is not None and (est.slope, est.intercept, est.index) == (2, 0, 1)
    record(4, ok, f"v(I^k)={rep.values} estimate={est}")
    assert ok


def test_criterion_05_three_paths_example():
    ring = THREE_PATHS.ring
    ass = associated_primes(THREE_PATHS).primes
    expected = primes(
        ring, "x1,x5", "x2,x5", "x3,x5", "x3,x6", "x3,x7", "x1,x4,x6", "x1,x4,x7", "x2,x4,x6", "x2,x4,x7"
    )
    rep = report_with_locals("three-paths", THREE_PATHS, 4)
    ok = list(ass) == expected and all(v != 3 * k - 1 for k, v in enumerate(rep.values, 1))
    record(5, ok, f"{len(ass)} primes, v(I^k)={rep.values}")
    assert ok


def test_criterion_06_path_and_cycle_fixtures():
    results = {}
    ok = True
    for name, G in (("P8", Graph.path(8)), ("C8", Graph.cycle(8)), ("C7", Graph.cycle(7))):
        rep = report_with_locals(name, edge_ideal(G), 6)
        bound = v_stab_upper_bound(G).bound
        results[name] = (rep.values, bound)
        ok = ok and rep.values[:2] == [2, 4] and all(rep.values[k - 1] == 2 * k - 1 for k in range(3, 7))
        ok = ok and bound == 3
    record(6, ok, " ".join(f"{n}:{v} bound={b}" for n, (v, b) in results.items()))
    assert ok


def test_criterion_07_connected_bound():
    bad, skipped, count = [], [], 0
    for G in connected_graphs(5):
        k = G.m + 1
        count += 1
        v = v_number(power(edge_ideal(G), k)).degree
        locals_at_power(f"graph{G.edges}", edge_ideal(G), k)
        if v != 2 * k - 1:
            bad.append((G.edges, k, v))
    record(7, not bad, f"{count} connected graphs on <= 5 vertices, {len(bad)} failures, {len(skipped)} skipped")
    assert not bad


def test_criterion_08_bipartite_bound():
    bad, count = [], 0
    for G in connected_bipartite_graphs(7):
        t = max(1, bipartite_bound(G))
        count += 1
        v = v_number(power(edge_ideal(G), t)).degree
        if v != 2 * t - 1:
            bad.append((G.edges, t, v))
    record(8, not bad, f"{count} connected bipartite graphs on <= 7 vertices, {len(bad)} failures")
    assert not bad


def test_criterion_09_even_connection():
    rng = random.Random(99)
    bad = []
    for _ in range(50):
        G = random_connected_graph(rng, max_n=7)
        es = [rng.choice(G.edges) for _ in range(rng.randint(1, 3))]
        direct = colon_by_monomial(power(edge_ideal(G), len(es) + 1), edge_product(G, es))
        if edge_power_colon(G, es) != direct:
            bad.append((G.edges, es))
    record(9, not bad, f"50 random graphs, {len(bad)} mismatches")
    assert not bad


def test_criterion_10_squarefree_tight():
    bad = []
    for j, I in enumerate(corpus_squarefree_tight()):
        rep = report_with_locals(f"sqfree{j}", I, 4)
        if rep.values != [I.alpha * k - 1 for k in range(1, 5)]:
            bad.append((str(I), rep.values))
    record(10, not bad, f"100 square-free ideals with v = alpha - 1, {len(bad)} failures {bad[:2]}")
    assert not bad


def test_criterion_11_v_equals_one():
    bad = []
    for j, I in enumerate(corpus_v_one()):
        rep = report_with_locals(f"vone{j}", I, 4)
        if rep.values != [2 * k - 1 for k in range(1, 5)]:
            bad.append((str(I), rep.values))
    record(11, not bad, f"50 ideals with alpha = 2 and v = 1, {len(bad)} failures {bad[:2]}")
    assert not bad


def test_criterion_12_polarization():
    corpus = [("random", I) for I in corpus_random()]
    corpus += [("yz", YZ), ("mixed", MIXED)]
    corpus += [("sqfree", I) for I in corpus_squarefree_tight()]
    corpus += [("vone", I) for I in corpus_v_one()]
    bad = []
    for label, I in corpus:
        a, b = v_number(I).degree, v_number(polarize(I)[0]).degree
        if a != b:
            bad.append((label, str(I), a, b))
    by_label = sorted({label for label, *_ in bad})
    record(
        12,
        not bad,
        f"{len(corpus)} ideals, {len(bad)} with v(I) != v(pol I) (suites {by_label}); first: {bad[:2]}",
    )
    assert not bad


def test_criterion_13_vertex_splittable():
    bad = []
    for j, I in enumerate(corpus_vertex_splittable()):
        rep = report_with_locals(f"vsplit{j}", I, 4)
        if rep.values != [I.alpha * k - 1 for k in range(1, 5)]:
            bad.append((str(I), rep.values))
    record(13, not bad, f"20 vertex splittable ideals, {len(bad)} failures {bad[:2]}")
    assert not bad


def test_criterion_15_cover_ideals():
    out, ok = [], True
    for n in (3, 4, 5):
        J = cover_ideal(Graph.complete(n))
        lq = has_linear_quotients(J)
        rep = report_with_locals(f"cover-K{n}", J, 3)
        expected = [J.alpha * k - 1 for k in range(1, 4)]
        ok = ok and lq.status == "found" and rep.values == expected
        out.append(f"K{n}: lq={lq.status} v={rep.values}")
    record(15, ok, "; ".join(out))
    assert ok


def test_criterion_14_lower_bound():
    # runs after the other suites (file order) and also stands alone
    if not LOCALS:
        for I in corpus_random():
            LOCALS.append(("random", I, 1, local_v_numbers(I)))
    bad, count = [], 0
    for label, I, k, loc in LOCALS:
        for p, w in loc.items():
            count += 1
            if w.degree < I.alpha * k - 1:
                bad.append((label, k, str(p), w.degree))
    record(14, not bad, f"{count} (I, k, p) triples, {len(bad)} violations")
    assert not bad
