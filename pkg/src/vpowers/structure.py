"""Structural checks on monomial ideals: polarization, linear quotients,
vertex splittability, normal torsion-freeness and strong persistence windows,
and witnesses avoiding their own prime."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .decomposition import _require_proper_nonzero, associated_primes, symbolic_power_squarefree
from .errors import PreconditionError, ResourceLimitError
from .monomial import Monomial, MonomialIdeal, Ring, _divisible_by_any, colon_by_ideal, get_generator_limit
from .vnumber import VWitness, colon_prime, v_witnesses

# ---------------------------------------------------------------------------
# polarization


@dataclass(frozen=True)
class PolarizationMap:
    source: Ring
    target: Ring
    columns: tuple[tuple[int, ...], ...]  # source variable i -> target indices of x_{i,1..p_i}
    generators: tuple[tuple[Monomial, Monomial], ...]

    def apply(self, f: Monomial) -> Monomial:
        """Polarize a monomial whose exponents do not exceed the lcm used to build the map."""
        exps = [0] * self.target.n
        for i, e in enumerate(f.exponents):
            if e > len(self.columns[i]):
                raise PreconditionError(f"{f} exceeds the polarization range")
            for j in self.columns[i][:e]:
                exps[j] = 1
        return Monomial(self.target, tuple(exps))


def _fresh_names(ring: Ring, counts: list[int]) -> list[str]:
    sep = "_"
    while True:
        names = [f"{v}{sep}{j}" for v, c in zip(ring.variables, counts) for j in range(1, c + 1)]
        if len(set(names)) == len(names):
            return names
        sep += "_"


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """Replace each x_i^a by x_{i,1} ... x_{i,a}, with x_{i,j} for j up to the lcm exponent."""
    if I.is_zero:
        raise PreconditionError("cannot polarize the zero ideal")
    counts = [int(e) for e in I.lcm().exponents]
    target = Ring(_fresh_names(I.ring, counts))
    columns, start = [], 0
    for c in counts:
        columns.append(tuple(range(start, start + c)))
        start += c
    pmap = PolarizationMap(I.ring, target, tuple(columns), ())
    pairs = tuple((g, pmap.apply(g)) for g in I.generators)
    pmap = PolarizationMap(I.ring, target, tuple(columns), pairs)
    return MonomialIdeal(target, [p for _, p in pairs]), pmap


# ---------------------------------------------------------------------------
# linear quotients

LINEAR_QUOTIENT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class LinearQuotients:
    """Outcome of the ordering search: ``status`` is found, none or unknown."""

    status: str
    ordering: tuple[Monomial, ...] | None = None

    def __bool__(self) -> bool:
        return self.status == "found"


def _is_linear_step(placed: np.ndarray, u: np.ndarray) -> bool:
    if len(placed) == 0:
        return True
    return colon_prime(placed, u) is not None


def has_linear_quotients(I: MonomialIdeal, budget: int = LINEAR_QUOTIENT_NODE_BUDGET) -> LinearQuotients:
    """Search an order u_1, ..., u_r of G(I) with every <u_1..u_{i-1}> : u_i variable-generated.

    Depth-first over the set of already placed generators (the colon only
    depends on that set), trying generators in canonical order and remembering
    dead sets.  "none" is only reported after the search space is exhausted;
    running out of ``budget`` expansions gives "unknown".
    """
    if not I.is_equigenerated:
        raise PreconditionError("linear quotients are only checked for equigenerated ideals")
    rows = I.rows
    r = len(rows)
    if r <= 1:
        return LinearQuotients("found", I.generators)
    dead: set[int] = set()
    order: list[int] = []
    cursor = [0]  # next candidate index at each depth
    mask = 0
    expansions = 0
    while len(order) < r:
        placed = rows[order]
        j = cursor[-1]
        while j < r and (
            mask >> j & 1
            or (mask | 1 << j) in dead
            or not _is_linear_step(placed, rows[j])
        ):
            j += 1
        if j < r:
            cursor[-1] = j + 1
            order.append(j)
            mask |= 1 << j
            cursor.append(0)
            expansions += 1
            if expansions > budget:
                return LinearQuotients("unknown")
            continue
        dead.add(mask)
        cursor.pop()
        if not order:
            return LinearQuotients("none")
        mask &= ~(1 << order.pop())
    return LinearQuotients("found", tuple(I.generators[j] for j in order))


def check_linear_quotient_order(I: MonomialIdeal, ordering) -> bool:
    """Verify an ordering directly by minimalizing every successive colon."""
    if sorted(ordering, key=Monomial.sort_key) != list(I.generators):
        return False
    for i in range(1, len(ordering)):
        prev = MonomialIdeal(I.ring, ordering[:i])
        col = prev.colon(ordering[i])
        if not (col.rows.sum(axis=1) == 1).all():
            return False
    return True


# ---------------------------------------------------------------------------
# vertex splittability


@dataclass(frozen=True)
class SplitLeaf:
    kind: str  # principal | zero | unit
    ideal: MonomialIdeal


@dataclass(frozen=True)
class SplitNode:
    variable: int
    left: "SplitTree"  # I_1
    right: "SplitTree"  # I_2
    ideal: MonomialIdeal


SplitTree = Union[SplitLeaf, SplitNode]


def is_vertex_splittable(I: MonomialIdeal) -> SplitTree | None:
    """A split tree I = x I_1 + I_2 (recursively) or None.

    Splitting variables are tried in ring order; results are memoized on the
    generator set.
    """
    ring = I.ring
    memo: dict[bytes, SplitTree | None] = {}

    def rec(rows: np.ndarray) -> SplitTree | None:
        key = rows.tobytes() + bytes([len(rows) % 256])
        if key in memo:
            return memo[key]
        if len(memo) > get_generator_limit():
            raise ResourceLimitError("vertex-splittable search exceeded the memo limit")
        ideal = MonomialIdeal._from_rows(ring, rows)
        if len(rows) == 0:
            memo[key] = SplitLeaf("zero", ideal)
            return memo[key]
        if ideal.is_unit:
            memo[key] = SplitLeaf("unit", ideal)
            return memo[key]
        if len(rows) == 1:
            memo[key] = SplitLeaf("principal", ideal)
            return memo[key]
        result = None
        for x in range(ring.n):
            col = rows[:, x]
            if col.max() != 1:
                continue  # x absent, or x^2 divides a generator (I_1 would involve x)
            left = rows[col == 1].copy()
            left[:, x] = 0
            right = rows[col == 0]
            if not _divisible_by_any(right, left).all():
                continue  # I_2 not contained in I_1
            t1 = rec(left)
            if t1 is None:
                continue
            t2 = rec(right)
            if t2 is None:
                continue
            result = SplitNode(x, t1, t2, ideal)
            break
        memo[key] = result
        return result

    return rec(I.rows)


def replay_split_tree(tree: SplitTree) -> MonomialIdeal:
    """Rebuild the ideal from a split tree, checking every node's conditions."""
    if isinstance(tree, SplitLeaf):
        return tree.ideal
    left = replay_split_tree(tree.left)
    right = replay_split_tree(tree.right)
    ring = left.ring
    x = ring.var(tree.variable)
    if tree.variable in left.support() or tree.variable in right.support():
        raise AssertionError("splitting variable occurs in I_1 or I_2")
    if not right.is_subset_of(left):
        raise AssertionError("I_2 is not contained in I_1")
    xl = left * x
    rebuilt = xl + right
    if len(rebuilt) != len(xl) + len(right):
        raise AssertionError("G(I) is not the disjoint union of G(x I_1) and G(I_2)")
    if rebuilt != tree.ideal:
        raise AssertionError("split tree does not reproduce its ideal")
    return rebuilt


# ---------------------------------------------------------------------------
# finite windows of NTF and strong persistence


@dataclass(frozen=True)
class NTFRow:
    k: int
    ass_contained: bool
    equals_symbolic: bool | None = None  # only for square-free ideals


def is_ntf_upto(I: MonomialIdeal, kmax: int) -> list[NTFRow]:
    """Per k <= kmax: Ass(I^k) within Ass(I); for square-free I also I^k == I^(k)."""
    _require_proper_nonzero(I)
    base = set(associated_primes(I).primes)
    rows = []
    Ik = None
    for k in range(1, kmax + 1):
        Ik = I if k == 1 else Ik * I
        contained = set(associated_primes(Ik).primes) <= base
        sym = None
        if I.is_squarefree:
            sym = Ik == symbolic_power_squarefree(I, k)
        rows.append(NTFRow(k, contained, sym))
    return rows


def has_strong_persistence_upto(I: MonomialIdeal, kmax: int) -> list[bool]:
    """Per k <= kmax: (I^{k+1} : I) == I^k."""
    _require_proper_nonzero(I)
    out = []
    Ik = I
    for _ in range(kmax):
        nxt = Ik * I
        out.append(colon_by_ideal(nxt, I) == Ik)
        Ik = nxt
    return out


def find_unsupported_witness(I: MonomialIdeal) -> VWitness | None:
    """A witness of degree v(I) whose monomial avoids every variable of its prime."""
    for w in v_witnesses(I):
        if not any(w.f.exponents[i] for i in w.prime.variables):
            return w
    return None
