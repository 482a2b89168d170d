"""Seeded test corpora: random monomial ideals and exhaustive small graph families."""

from __future__ import annotations

import random
from typing import Iterator

import networkx as nx

from .graphs import Graph
from .monomial import MonomialIdeal, Ring


def random_monomial_ideal(
    rng: random.Random, max_vars: int = 5, max_exp: int = 3, max_gens: int = 6
) -> MonomialIdeal:
    """Proper nonzero monomial ideal with at most ``max_gens`` minimal generators."""
    n = rng.randint(1, max_vars)
    ring = Ring.indexed(n)
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            exps = [rng.randint(0, max_exp) for _ in range(n)]
            if any(exps):
                gens.append(exps)
        if gens:
            return MonomialIdeal(ring, gens)


def random_squarefree_ideal(rng: random.Random, max_vars: int = 6, max_gens: int = 6) -> MonomialIdeal:
    n = rng.randint(2, max_vars)
    ring = Ring.indexed(n)
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            size = rng.randint(1, min(4, n))
            support = rng.sample(range(n), size)
            gens.append([1 if i in support else 0 for i in range(n)])
        return MonomialIdeal(ring, gens)


def random_degree_two_ideal(rng: random.Random, max_vars: int = 5, max_gens: int = 6) -> MonomialIdeal:
    """Random ideal with alpha = 2 (generators of degree 2 and 3)."""
    n = rng.randint(2, max_vars)
    ring = Ring.indexed(n)
    while True:
        gens = []
        for j in range(rng.randint(1, max_gens)):
            d = 2 if j == 0 or rng.random() < 0.6 else 3
            exps = [0] * n
            for _ in range(d):
                exps[rng.randrange(n)] += 1
            gens.append(exps)
        I = MonomialIdeal(ring, gens)
        if I.alpha == 2:
            return I


def random_connected_graph(rng: random.Random, max_n: int = 7, p: float = 0.4) -> Graph:
    while True:
        n = rng.randint(2, max_n)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
        G = Graph.from_index_edges(n, edges)
        if G.m and nx.is_connected(_to_nx(G)):
            return G


def _to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.edges)
    return g


def _from_nx(g: nx.Graph) -> Graph:
    order = sorted(g.nodes())
    idx = {v: i for i, v in enumerate(order)}
    return Graph.from_index_edges(len(order), [tuple(sorted((idx[a], idx[b]))) for a, b in g.edges()])


def connected_graphs(max_n: int) -> Iterator[Graph]:
    """Every connected graph with 2..max_n vertices, one per isomorphism class (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers graphs on at most 7 vertices")
    for g in nx.graph_atlas_g():
        if 2 <= g.number_of_nodes() <= max_n and nx.is_connected(g):
            yield _from_nx(g)


def connected_bipartite_graphs(max_n: int) -> Iterator[Graph]:
    for G in connected_graphs(max_n):
        if nx.is_bipartite(_to_nx(G)):
            yield G


def random_vertex_splittable(
    rng: random.Random, variables: list[int], degree: int, ring: Ring
) -> MonomialIdeal:
    """Equigenerated vertex splittable ideal built by the recursive definition.

    I = x I_1 + I_2 with I_1 of degree ``degree - 1`` in the remaining
    variables and I_2 one of: zero, y I_1 (y outside the support of I_1), or a
    random vertex splittable ideal contained in I_1.
    """
    from .structure import is_vertex_splittable

    if degree == 1:
        chosen = rng.sample(variables, rng.randint(1, len(variables)))
        return MonomialIdeal(ring, [ring.var(i) for i in chosen])
    x = rng.choice(variables)
    rest = [v for v in variables if v != x]
    I1 = random_vertex_splittable(rng, rest, degree - 1, ring)
    xI1 = I1 * ring.var(x)
    spare = [y for y in rest if y not in I1.support()]
    choice = rng.random()
    if choice < 0.3 or not rest:
        return xI1
    if choice < 0.6 and spare:
        return xI1 + I1 * ring.var(rng.choice(spare))
    multiples = [g * ring.var(z) for g in I1.generators for z in rest if not g.exponents[z]]
    if not multiples:
        return xI1
    for _ in range(20):
        picked = rng.sample(multiples, rng.randint(1, min(4, len(multiples))))
        I2 = MonomialIdeal(ring, picked)
        if I2.is_equigenerated and is_vertex_splittable(I2) is not None:
            return xI1 + I2
    return xI1
