"""Graph-derived monomial ideals, even-connection, and v-stability bounds for edge ideals."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError
from .monomial import MonomialIdeal, Ring


@dataclass(frozen=True)
class Graph:
    """Simple graph; vertex i is the ring variable i.  Edges are stored in vertex order."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]]):
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise PreconditionError("duplicate vertex names")
        pos = {v: i for i, v in enumerate(verts)}
        seen = set()
        for e in edges:
            a, b = e
            if a not in pos or b not in pos:
                raise PreconditionError(f"edge {a}-{b} has an unknown endpoint")
            if a == b:
                raise PreconditionError(f"loop at {a}")
            key = (a, b) if pos[a] < pos[b] else (b, a)
            if key in seen:
                raise PreconditionError(f"duplicate edge {a}-{b}")
            seen.add(key)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(
            self, "edges", tuple(sorted(seen, key=lambda e: (pos[e[0]], pos[e[1]])))
        )

    @classmethod
    def path(cls, n: int, prefix: str = "x") -> Graph:
        vs = [f"{prefix}{i}" for i in range(1, n + 1)]
        return cls(vs, zip(vs, vs[1:]))

    @classmethod
    def cycle(cls, n: int, prefix: str = "x") -> Graph:
        if n < 3:
            raise PreconditionError("a cycle needs at least 3 vertices")
        vs = [f"{prefix}{i}" for i in range(1, n + 1)]
        return cls(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])

    @classmethod
    def complete(cls, n: int, prefix: str = "x") -> Graph:
        vs = [f"{prefix}{i}" for i in range(1, n + 1)]
        return cls(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]])

    @classmethod
    def from_index_edges(cls, n: int, edges: Iterable[tuple[int, int]], prefix: str = "x") -> Graph:
        """Vertices x1..xn, edges given as 0-based index pairs."""
        vs = [f"{prefix}{i}" for i in range(1, n + 1)]
        return cls(vs, [(vs[a], vs[b]) for a, b in edges])

    @property
    def ring(self) -> Ring:
        return Ring(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: str) -> list[str]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def adjacency(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def has_edge(self, a: str, b: str) -> bool:
        pos = self.vertices.index
        key = (a, b) if pos(a) < pos(b) else (b, a)
        return key in self.edges

    def edge_key(self, a: str, b: str) -> tuple[str, str]:
        """Canonical orientation of an existing edge; raises if absent."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        if a not in pos or b not in pos:
            raise PreconditionError(f"unknown vertex in edge {a}-{b}")
        key = (a, b) if pos[a] < pos[b] else (b, a)
        if key not in self.edges:
            raise PreconditionError(f"{a}-{b} is not an edge")
        return key


@dataclass(frozen=True)
class WeightedOrientedGraph:
    underlying: Graph
    directed_edges: tuple[tuple[str, str], ...]
    weights: dict[str, int]

    def __init__(self, underlying: Graph, directed_edges: Iterable[Sequence[str]], weights: dict[str, int]):
        arcs = tuple(tuple(e) for e in directed_edges)
        covered = set()
        for a, b in arcs:
            key = underlying.edge_key(a, b)
            if key in covered:
                raise PreconditionError(f"edge {a}-{b} oriented twice")
            covered.add(key)
        full = {v: int(weights.get(v, 1)) for v in underlying.vertices}
        if any(w < 1 for w in full.values()):
            raise PreconditionError("weights must be >= 1")
        object.__setattr__(self, "underlying", underlying)
        object.__setattr__(self, "directed_edges", arcs)
        object.__setattr__(self, "weights", full)

    @property
    def ring(self) -> Ring:
        return self.underlying.ring


# ---------------------------------------------------------------------------
# ideal constructors


def _product_rows(ring: Ring, vertex_sets: Iterable[Iterable[str]]) -> list[list[int]]:
    rows = []
    for vs in vertex_sets:
        exps = [0] * ring.n
        for v in vs:
            exps[ring.index(v)] += 1
        rows.append(exps)
    return rows


def edge_ideal(G: Graph) -> MonomialIdeal:
    """I(G) generated by x_a x_b over the edges ab."""
    if G.m == 0:
        raise PreconditionError("edge ideal of a graph without edges")
    ring = G.ring
    return MonomialIdeal(ring, _product_rows(ring, G.edges))


def minimal_vertex_covers(G: Graph) -> list[frozenset[str]]:
    """All minimal vertex covers, by branching on an uncovered edge."""
    covers: set[frozenset[str]] = set()

    def grow(chosen: frozenset[str]):
        for a, b in G.edges:
            if a not in chosen and b not in chosen:
                grow(chosen | {a})
                grow(chosen | {b})
                return
        covers.add(chosen)

    grow(frozenset())
    minimal = [c for c in covers if not any(d < c for d in covers)]
    pos = {v: i for i, v in enumerate(G.vertices)}
    return sorted(minimal, key=lambda c: (len(c), sorted(pos[v] for v in c)))


def cover_ideal(G: Graph) -> MonomialIdeal:
    """J(G) generated by the products over minimal vertex covers."""
    if G.m == 0:
        raise PreconditionError("cover ideal of a graph without edges")
    ring = G.ring
    return MonomialIdeal(ring, _product_rows(ring, minimal_vertex_covers(G)))


def t_paths(G: Graph, t: int) -> list[tuple[str, ...]]:
    """Simple paths on t vertices, each listed once (the reversal is dropped)."""
    adj = G.adjacency()
    pos = {v: i for i, v in enumerate(G.vertices)}
    found = []

    def walk(path: list[str]):
        if len(path) == t:
            if pos[path[0]] <= pos[path[-1]]:
                found.append(tuple(path))
            return
        for w in adj[path[-1]]:
            if w not in path:
                path.append(w)
                walk(path)
                path.pop()

    for v in G.vertices:
        walk([v])
    return found


def path_ideal(G: Graph, t: int) -> MonomialIdeal:
    """I_t(G); the zero ideal when G has no path on t vertices."""
    if t < 2:
        raise PreconditionError("path length t must be >= 2")
    if t > G.n:
        raise PreconditionError(f"t = {t} exceeds the number of vertices {G.n}")
    ring = G.ring
    return MonomialIdeal(ring, _product_rows(ring, t_paths(G, t)))


def weighted_oriented_edge_ideal(D: WeightedOrientedGraph) -> MonomialIdeal:
    """I(D) generated by x_i x_j^{w(x_j)} over the arcs (x_i, x_j)."""
    if not D.directed_edges:
        raise PreconditionError("weighted oriented graph without arcs")
    ring = D.ring
    rows = []
    for a, b in D.directed_edges:
        exps = [0] * ring.n
        exps[ring.index(a)] += 1
        exps[ring.index(b)] += D.weights[b]
        rows.append(exps)
    return MonomialIdeal(ring, rows)


# ---------------------------------------------------------------------------
# even-connection


def _edge_multiset(G: Graph, es: Sequence[Sequence[str]]) -> Counter:
    if not es:
        raise PreconditionError("the edge product must contain at least one edge")
    return Counter(G.edge_key(a, b) for a, b in es)


def even_connected_pairs(G: Graph, es: Sequence[Sequence[str]]) -> set[tuple[str, str]]:
    """Pairs (u, v), u == v allowed, that are even-connected with respect to the product of ``es``.

    A witness is a walk u = x_1, x_2, ..., x_{2k+2} = v (k >= 1) in G whose
    links x_{2l} x_{2l+1} are edges of ``es``, each used at most as often as it
    occurs there.  Searched over states (vertex, usage counts, phase).
    """
    mult = _edge_multiset(G, es)
    distinct = sorted(mult, key=lambda e: (G.vertices.index(e[0]), G.vertices.index(e[1])))
    slot = {e: i for i, e in enumerate(distinct)}
    cap = tuple(mult[e] for e in distinct)
    adj = G.adjacency()
    pos = {v: i for i, v in enumerate(G.vertices)}
    pairs: set[tuple[str, str]] = set()
    for u in G.vertices:
        # phase "even": standing on x_{2l}, next link must be an es edge
        # phase "odd": standing on x_{2l+1}, next link is any edge of G
        start = [(w, (0,) * len(cap), "even") for w in adj[u]]
        seen = set(start)
        queue = deque(start)
        while queue:
            v, used, phase = queue.popleft()
            if phase == "even":
                for w in adj[v]:
                    key = (v, w) if pos[v] < pos[w] else (w, v)
                    j = slot.get(key)
                    if j is None or used[j] >= cap[j]:
                        continue
                    state = (w, used[:j] + (used[j] + 1,) + used[j + 1 :], "odd")
                    if state not in seen:
                        seen.add(state)
                        queue.append(state)
            else:
                for w in adj[v]:
                    pairs.add((u, w) if pos[u] <= pos[w] else (w, u))
                    state = (w, used, "even")
                    if state not in seen:
                        seen.add(state)
                        queue.append(state)
    return pairs


def edge_power_colon(G: Graph, es: Sequence[Sequence[str]]) -> MonomialIdeal:
    """(I(G)^{s+1} : e_1 ... e_s) as I(G) + <uv : u, v even-connected>."""
    ring = G.ring
    extra = _product_rows(ring, even_connected_pairs(G, es))
    return MonomialIdeal(ring, _product_rows(ring, G.edges) + extra)


def edge_product(G: Graph, es: Sequence[Sequence[str]]):
    """The monomial e_1 ... e_s."""
    ring = G.ring
    exps = [0] * ring.n
    for a, b in es:
        G.edge_key(a, b)
        exps[ring.index(a)] += 1
        exps[ring.index(b)] += 1
    return ring.monomial(exps)


# ---------------------------------------------------------------------------
# profiles and bounds


@dataclass(frozen=True)
class GraphProfile:
    m: int
    connected: bool
    bipartition: tuple[tuple[str, ...], tuple[str, ...]] | None
    degrees: dict[str, int]
    cycle_shape: str | None  # "path" | "even-cycle" | "odd-cycle" | None


def _components(G: Graph) -> list[list[str]]:
    adj = G.adjacency()
    seen: set[str] = set()
    comps = []
    for v in G.vertices:
        if v in seen:
            continue
        comp, queue = [], deque([v])
        seen.add(v)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        comps.append(comp)
    return comps


def _two_coloring(G: Graph) -> dict[str, int] | None:
    adj = G.adjacency()
    color: dict[str, int] = {}
    for v in G.vertices:
        if v in color:
            continue
        color[v] = 0
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def graph_profile(G: Graph) -> GraphProfile:
    degrees = {v: 0 for v in G.vertices}
    for a, b in G.edges:
        degrees[a] += 1
        degrees[b] += 1
    connected = len(_components(G)) == 1
    coloring = _two_coloring(G)
    bipartition = None
    if coloring is not None:
        X = tuple(v for v in G.vertices if coloring[v] == 0)
        Y = tuple(v for v in G.vertices if coloring[v] == 1)
        bipartition = (X, Y)
    shape = None
    if connected and G.n >= 2:
        degs = list(degrees.values())
        if G.m == G.n - 1 and max(degs) <= 2:
            shape = "path"
        elif G.n >= 3 and G.m == G.n and all(d == 2 for d in degs):
            shape = "even-cycle" if G.n % 2 == 0 else "odd-cycle"
    return GraphProfile(G.m, connected, bipartition, degrees, shape)


@dataclass(frozen=True)
class StabBound:
    """v(I(G)^k) = 2k - 1 is guaranteed for all k >= bound."""

    bound: int
    source: str
    slope: int = 2
    intercept: int = -1
    candidates: tuple[tuple[str, int], ...] = ()


# order used to break ties between equal bounds: most specific result first
_SOURCE_PRIORITY = ("path-or-even-cycle", "odd-cycle", "bipartite-formula", "connected-m+1")


def bipartite_bound(G: Graph) -> int:
    """min{|Y| + 1 - max deg over X, |X| + 1 - max deg over Y} for a connected bipartite graph."""
    prof = graph_profile(G)
    if prof.bipartition is None:
        raise PreconditionError("graph is not bipartite")
    X, Y = prof.bipartition
    dx = max(prof.degrees[v] for v in X)
    dy = max(prof.degrees[v] for v in Y)
    return min(len(Y) + 1 - dx, len(X) + 1 - dy)


def v_stab_upper_bound(G: Graph) -> StabBound:
    """Smallest applicable theorem-backed bound on v-stab(I(G)) for connected G."""
    prof = graph_profile(G)
    if not prof.connected:
        raise PreconditionError("v-stab bounds need a connected graph")
    if G.m == 0:
        raise PreconditionError("graph has no edges")
    candidates = {"connected-m+1": G.m + 1}
    if prof.bipartition is not None:
        candidates["bipartite-formula"] = bipartite_bound(G)
    if prof.cycle_shape in ("path", "even-cycle"):
        candidates["path-or-even-cycle"] = G.n // 2 - 1
    elif prof.cycle_shape == "odd-cycle":
        candidates["odd-cycle"] = G.n // 2
    # powers start at k = 1, so bounds below 1 say the same as 1
    clamped = {src: max(1, b) for src, b in candidates.items()}
    best = min(clamped.values())
    source = next(s for s in _SOURCE_PRIORITY if clamped.get(s) == best)
    listed = tuple((s, candidates[s]) for s in _SOURCE_PRIORITY if s in candidates)
    return StabBound(best, source, candidates=listed)
