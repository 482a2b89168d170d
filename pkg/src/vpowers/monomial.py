"""Exact arithmetic on monomials and monomial ideals.

Monomials are dense exponent vectors over a fixed :class:`Ring`.  A
:class:`MonomialIdeal` always stores its minimal generating set G(I), sorted in
graded-lexicographic order (degree ascending, then lex descending with respect
to the ring's declared variable order).  Internally the generators are kept as
an ``(N, n)`` integer array so that colon, product and minimalization run
vectorized.
"""

from __future__ import annotations

import contextlib
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import PreconditionError, ResourceLimitError, RingMismatchError

DEFAULT_GENERATOR_LIMIT = 50_000
_generator_limit = DEFAULT_GENERATOR_LIMIT

# bound on the boolean scratch array used in pairwise divisibility tests
_CHUNK_CELLS = 4_000_000


def get_generator_limit() -> int:
    return _generator_limit


def set_generator_limit(limit: int) -> None:
    global _generator_limit
    if limit < 1:
        raise PreconditionError("generator limit must be positive")
    _generator_limit = int(limit)


@contextlib.contextmanager
def generator_limit(limit: int):
    """Temporarily change the generator-count cap."""
    previous = _generator_limit
    set_generator_limit(limit)
    try:
        yield
    finally:
        set_generator_limit(previous)


def _check_limit(count: int, what: str = "generators") -> None:
    if count > _generator_limit:
        raise ResourceLimitError(
            f"{count} {what} exceed the configured limit of {_generator_limit}"
        )


@dataclass(frozen=True)
class Ring:
    """Polynomial ring K[x_1, ..., x_n]; only the variable names are stored."""

    variables: tuple[str, ...]

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise PreconditionError(f"duplicate variable names in {names}")
        for name in names:
            if not name or not isinstance(name, str):
                raise PreconditionError(f"invalid variable name {name!r}")
        object.__setattr__(self, "variables", names)

    @classmethod
    def indexed(cls, n: int, prefix: str = "x") -> Ring:
        """Ring with variables ``x1 ... xn``."""
        return cls(f"{prefix}{i}" for i in range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise PreconditionError(f"unknown variable {name}") from None

    @property
    def one(self) -> Monomial:
        return Monomial(self, (0,) * self.n)

    def var(self, which: int | str) -> Monomial:
        i = self.index(which) if isinstance(which, str) else which
        exps = [0] * self.n
        exps[i] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, spec: str | Sequence[int]) -> Monomial:
        """Build a monomial from an exponent vector or a string like ``x1*x2^2``."""
        if isinstance(spec, str):
            from .parsing import parse_monomial

            return parse_monomial(self, spec)
        return Monomial(self, tuple(int(e) for e in spec))

    def ideal(self, *gens: str | Sequence[int] | Monomial) -> MonomialIdeal:
        """Convenience constructor: ``ring.ideal("x*y", "y^2")``."""
        mons = [g if isinstance(g, Monomial) else self.monomial(g) for g in gens]
        return MonomialIdeal(self, mons)

    def zero_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._from_rows(self, np.zeros((0, self.n), dtype=np.int64))

    def unit_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._from_rows(self, np.zeros((1, self.n), dtype=np.int64))

    def __str__(self) -> str:
        return "K[" + ",".join(self.variables) + "]"


def _format_exponents(ring: Ring, exps: Sequence[int]) -> str:
    parts = []
    for name, e in zip(ring.variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def grlex_key(exps: Sequence[int]) -> tuple:
    """Sort key realizing the canonical order (degree, then lex descending)."""
    return (sum(exps), tuple(-e for e in exps))


@dataclass(frozen=True)
class Monomial:
    ring: Ring
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.ring.n:
            raise PreconditionError(
                f"exponent vector of length {len(self.exponents)} in a ring of {self.ring.n} variables"
            )
        if any(e < 0 for e in self.exponents):
            raise PreconditionError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def _same_ring(self, other: Monomial) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def divides(self, other: Monomial) -> bool:
        self._same_ring(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        self._same_ring(other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            raise PreconditionError("negative power of a monomial")
        return Monomial(self.ring, tuple(a * k for a in self.exponents))

    def __truediv__(self, other: Monomial) -> Monomial:
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        if not other.divides(self):
            raise PreconditionError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        self._same_ring(other)
        return Monomial(self.ring, tuple(map(min, self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        self._same_ring(other)
        return Monomial(self.ring, tuple(map(max, self.exponents, other.exponents)))

    def divisors(self) -> Iterator[Monomial]:
        """All monomial divisors in canonical (graded-lex) order."""
        ranges = [range(e + 1) for e in self.exponents]
        exps = sorted(itertools.product(*ranges), key=grlex_key)
        for e in exps:
            yield Monomial(self.ring, e)

    def sort_key(self) -> tuple:
        return grlex_key(self.exponents)

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return _format_exponents(self.ring, self.exponents)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def divides(u: Monomial, v: Monomial) -> bool:
    return u.divides(v)


# ---------------------------------------------------------------------------
# array kernels


def _canonical_order(rows: np.ndarray) -> np.ndarray:
    if len(rows) <= 1:
        return np.arange(len(rows))
    n = rows.shape[1]
    keys = tuple(-rows[:, i] for i in range(n - 1, -1, -1)) + (rows.sum(axis=1),)
    return np.lexsort(keys)


def _divisible_by_any(targets: np.ndarray, divisors: np.ndarray) -> np.ndarray:
    """Mask over ``targets``: row is a multiple of some row of ``divisors``."""
    out = np.zeros(len(targets), dtype=bool)
    if len(divisors) == 0 or len(targets) == 0:
        return out
    n = targets.shape[1]
    step = max(1, _CHUNK_CELLS // max(1, len(divisors) * max(n, 1)))
    for s in range(0, len(targets), step):
        block = targets[s : s + step]
        out[s : s + step] = (divisors[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return out


def minimal_rows(rows: np.ndarray) -> np.ndarray:
    """Divisibility-minimal, deduplicated rows in canonical order."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        raise PreconditionError("expected a 2-d exponent array")
    if len(rows) == 0:
        return rows.reshape(0, rows.shape[1])
    rows = np.unique(rows, axis=0)
    rows = rows[_canonical_order(rows)]
    deg = rows.sum(axis=1)
    # degree groups are contiguous; equal-degree distinct rows never divide each other
    bounds = np.flatnonzero(np.diff(deg)) + 1
    starts = np.concatenate(([0], bounds))
    ends = np.concatenate((bounds, [len(rows)]))
    kept: list[np.ndarray] = []
    kept_arr = rows[:0]
    for s, e in zip(starts, ends):
        group = rows[s:e]
        if len(kept_arr):
            group = group[~_divisible_by_any(group, kept_arr)]
        if len(group):
            kept.append(group)
            kept_arr = np.concatenate(kept) if len(kept) > 1 else group
    result = kept_arr
    _check_limit(len(result))
    return result


def _pairwise_lcm(a: np.ndarray, b: np.ndarray, max_degree: int | None = None) -> np.ndarray:
    """Minimal generators of the intersection of the ideals spanned by ``a`` and ``b``.

    With ``max_degree`` only generators of degree <= max_degree are produced
    (exact for that degree range since lcm degrees dominate both factors).
    """
    n = a.shape[1]
    if max_degree is not None:
        a = a[a.sum(axis=1) <= max_degree]
        b = b[b.sum(axis=1) <= max_degree]
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, n), dtype=np.int64)
    if max_degree is not None:
        da, db = a.sum(axis=1), b.sum(axis=1)
        top_a, top_b = da == max_degree, db == max_degree
        if top_a.any() or top_b.any():
            # lcm(u, w) with deg u == max_degree stays in range only when w | u,
            # so top-degree rows need a divisibility test instead of all pairs
            ta, tb = a[top_a], b[top_b]
            shared = set(map(bytes, np.ascontiguousarray(tb)))
            same = np.array([bytes(r) in shared for r in np.ascontiguousarray(ta)], dtype=bool)
            parts = [
                ta[same],
                ta[_divisible_by_any(ta, b[~top_b])],
                tb[_divisible_by_any(tb, a[~top_a])],
                _pairwise_lcm(a[~top_a], b[~top_b], max_degree),
            ]
            return minimal_rows(np.concatenate(parts).reshape(-1, n))
    pieces = []
    step = max(1, _CHUNK_CELLS // max(1, len(b) * n))
    for s in range(0, len(a), step):
        block = np.maximum(a[s : s + step, None, :], b[None, :, :]).reshape(-1, n)
        if max_degree is not None:
            block = block[block.sum(axis=1) <= max_degree]
        if len(block):
            pieces.append(np.unique(block, axis=0))
    if not pieces:
        return np.zeros((0, n), dtype=np.int64)
    return minimal_rows(np.concatenate(pieces))


# ---------------------------------------------------------------------------


class MonomialIdeal:
    """Monomial ideal stored by its canonical minimal generating set."""

    __slots__ = ("ring", "_rows", "_gens", "_hash")

    def __init__(self, ring: Ring, generators: Iterable[Monomial | Sequence[int]] = ()):
        rows = []
        for g in generators:
            if isinstance(g, Monomial):
                if g.ring != ring:
                    raise RingMismatchError(f"generator {g} is not in {ring}")
                rows.append(g.exponents)
            else:
                rows.append(tuple(g))
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), ring.n)
        if (arr < 0).any():
            raise PreconditionError("exponents must be non-negative")
        self._init(ring, minimal_rows(arr))

    def _init(self, ring: Ring, rows: np.ndarray) -> None:
        self.ring = ring
        rows.setflags(write=False)
        self._rows = rows
        self._gens = None
        self._hash = None

    @classmethod
    def _from_rows(cls, ring: Ring, rows: np.ndarray, minimal: bool = True) -> MonomialIdeal:
        obj = cls.__new__(cls)
        if not minimal:
            rows = minimal_rows(rows)
        obj._init(ring, np.ascontiguousarray(rows, dtype=np.int64))
        return obj

    # -- accessors ---------------------------------------------------------

    @property
    def rows(self) -> np.ndarray:
        """Read-only ``(N, n)`` exponent array of G(I) in canonical order."""
        return self._rows

    @property
    def generators(self) -> tuple[Monomial, ...]:
        if self._gens is None:
            self._gens = tuple(Monomial(self.ring, tuple(int(e) for e in r)) for r in self._rows)
        return self._gens

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    @property
    def is_zero(self) -> bool:
        return len(self._rows) == 0

    @property
    def is_unit(self) -> bool:
        return len(self._rows) == 1 and not self._rows[0].any()

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def alpha(self) -> int | None:
        return int(self._rows.sum(axis=1).min()) if len(self._rows) else None

    @property
    def is_squarefree(self) -> bool:
        return bool((self._rows <= 1).all())

    @property
    def is_equigenerated(self) -> bool:
        degs = self._rows.sum(axis=1)
        return bool(len(degs) == 0 or (degs == degs[0]).all())

    def lcm(self) -> Monomial:
        if self.is_zero:
            return self.ring.one
        return Monomial(self.ring, tuple(int(e) for e in self._rows.max(axis=0)))

    def support(self) -> tuple[int, ...]:
        if self.is_zero:
            return ()
        return tuple(int(i) for i in np.flatnonzero(self._rows.max(axis=0)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self._rows, other._rows)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self._rows.shape, self._rows.tobytes()))
        return self._hash

    def __str__(self) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self})"

    def _same_ring(self, other: MonomialIdeal | Monomial) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    # -- arithmetic --------------------------------------------------------

    def contains(self, f: Monomial) -> bool:
        self._same_ring(f)
        if self.is_zero:
            return False
        return bool((self._rows <= np.asarray(f.exponents)).all(axis=1).any())

    def __contains__(self, f: Monomial) -> bool:
        return self.contains(f)

    def is_subset_of(self, other: MonomialIdeal) -> bool:
        self._same_ring(other)
        return bool(_divisible_by_any(self._rows, other._rows).all())

    def colon(self, f: Monomial | MonomialIdeal) -> MonomialIdeal:
        if isinstance(f, MonomialIdeal):
            return colon_by_ideal(self, f)
        return colon_by_monomial(self, f)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_ring(other)
        return MonomialIdeal._from_rows(
            self.ring, np.concatenate((self._rows, other._rows)), minimal=False
        )

    def __mul__(self, other: MonomialIdeal | Monomial) -> MonomialIdeal:
        if isinstance(other, Monomial):
            self._same_ring(other)
            return MonomialIdeal._from_rows(self.ring, self._rows + np.asarray(other.exponents))
        return product(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)


def minimalize(gens: Iterable[Monomial], ring: Ring | None = None) -> MonomialIdeal:
    """Canonical ideal generated by ``gens`` (ring needed only when ``gens`` is empty)."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise PreconditionError("a ring is required to build the zero ideal")
        ring = gens[0].ring
    return MonomialIdeal(ring, gens)


def colon_by_monomial(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """(I : f) = < u / gcd(u, f) : u in G(I) >."""
    I._same_ring(f)
    if I.is_zero:
        return I
    rows = np.maximum(I.rows - np.asarray(f.exponents, dtype=np.int64), 0)
    return MonomialIdeal._from_rows(I.ring, rows, minimal=False)


def colon_by_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection of (I : g) over g in G(J)."""
    I._same_ring(J)
    if J.is_zero:
        return I.ring.unit_ideal()
    if I.is_zero:
        return I
    acc = None
    for g in J.rows:
        part = minimal_rows(np.maximum(I.rows - g, 0))
        acc = part if acc is None else _pairwise_lcm(acc, part)
    return MonomialIdeal._from_rows(I.ring, acc)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._same_ring(J)
    return MonomialIdeal._from_rows(I.ring, _pairwise_lcm(I.rows, J.rows))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._same_ring(J)
    n = I.ring.n
    if I.is_zero or J.is_zero:
        return I.ring.zero_ideal()
    rows = (I.rows[:, None, :] + J.rows[None, :, :]).reshape(-1, n)
    return MonomialIdeal._from_rows(I.ring, rows, minimal=False)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """G(I^k) by iterated product, minimalizing after every step."""
    if k < 1:
        raise PreconditionError(f"power exponent must be >= 1, got {k}")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def contains(I: MonomialIdeal, f: Monomial) -> bool:
    return I.contains(f)


@dataclass(frozen=True)
class IdealProfile:
    alpha: int | None
    equigenerated: bool
    squarefree: bool
    lcm_of_generators: Monomial
    num_generators: int


def ideal_profile(I: MonomialIdeal) -> IdealProfile:
    return IdealProfile(
        alpha=I.alpha,
        equigenerated=I.is_equigenerated,
        squarefree=I.is_squarefree,
        lcm_of_generators=I.lcm(),
        num_generators=len(I),
    )
