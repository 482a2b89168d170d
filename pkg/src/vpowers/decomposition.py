"""Irreducible decomposition, associated primes, c(I) and symbolic powers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

from .errors import PreconditionError, ResourceLimitError
from .monomial import (
    Monomial,
    MonomialIdeal,
    Ring,
    _check_limit,
    colon_by_monomial,
    get_generator_limit,
    intersect,
    minimal_rows,
    power,
)


@dataclass(frozen=True)
class PrimeIdeal:
    """Monomial prime ideal generated by a non-empty set of variables."""

    ring: Ring
    variables: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(self.variables)))
        if not vs:
            raise PreconditionError("a monomial prime needs at least one variable")
        if vs[0] < 0 or vs[-1] >= self.ring.n:
            raise PreconditionError(f"variable index out of range for {self.ring}")
        object.__setattr__(self, "variables", vs)

    @classmethod
    def from_names(cls, ring: Ring, names: Iterable[str]) -> PrimeIdeal:
        return cls(ring, tuple(ring.index(v) for v in names))

    @property
    def alpha(self) -> int:
        return 1

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.ring.variables[i] for i in self.variables)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, [self.ring.var(i) for i in self.variables])

    def sort_key(self) -> tuple:
        mask = [0] * self.ring.n
        for i in self.variables:
            mask[i] = 1
        return (len(self.variables), tuple(-m for m in mask))

    def __lt__(self, other: PrimeIdeal) -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: PrimeIdeal) -> bool:
        return set(self.variables) <= set(other.variables)

    def __str__(self) -> str:
        return "<" + ",".join(self.names) + ">"


@dataclass(frozen=True)
class IrreducibleComponent:
    """Irreducible monomial ideal < x_i^{a_i} : i in support >."""

    ring: Ring
    pure_powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pp = tuple(sorted(self.pure_powers))
        if not pp or any(a < 1 for _, a in pp):
            raise PreconditionError("component needs positive pure powers")
        object.__setattr__(self, "pure_powers", pp)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.pure_powers)

    @property
    def radical(self) -> PrimeIdeal:
        return PrimeIdeal(self.ring, self.support)

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i, a in self.pure_powers:
            exps = [0] * self.ring.n
            exps[i] = a
            gens.append(exps)
        return MonomialIdeal(self.ring, gens)

    def contains(self, f: Monomial) -> bool:
        return any(f.exponents[i] >= a for i, a in self.pure_powers)

    def sort_key(self) -> tuple:
        return self.radical.sort_key() + (self.pure_powers,)

    def __str__(self) -> str:
        return str(self.as_ideal())


@dataclass(frozen=True)
class AssociatedPrimes:
    primes: tuple[PrimeIdeal, ...]
    minimal: tuple[PrimeIdeal, ...]

    @property
    def embedded(self) -> tuple[PrimeIdeal, ...]:
        return tuple(p for p in self.primes if p not in self.minimal)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p: PrimeIdeal) -> bool:
        return p in self.primes


def _require_proper_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise PreconditionError("operation undefined for the zero ideal")
    if I.is_unit:
        raise PreconditionError("operation undefined for the unit ideal")


# Component vectors: exponent a_i on the support, _ABSENT elsewhere.  Then
# C is contained in C' exactly when vec(C') <= vec(C) componentwise, so the
# irredundant components are the componentwise-maximal vectors.
_ABSENT = np.iinfo(np.int64).max


def _maximal_vectors(vecs: np.ndarray) -> np.ndarray:
    vecs = np.unique(vecs, axis=0)
    if len(vecs) <= 1:
        return vecs
    keep = np.ones(len(vecs), dtype=bool)
    step = max(1, 2_000_000 // (len(vecs) * vecs.shape[1]))
    for s in range(0, len(vecs), step):
        block = vecs[s : s + step]
        # dominated by some other (distinct) vector
        le = (block[:, None, :] <= vecs[None, :, :]).all(axis=2)
        le[np.arange(len(block)), np.arange(s, s + len(block))] = False
        keep[s : s + step] = ~le.any(axis=1)
    return vecs[keep]


def _split(rows: np.ndarray, memo: dict) -> np.ndarray:
    """Irreducible components (as vectors, possibly redundant) of the ideal G = rows."""
    key = rows.tobytes()
    if key in memo:
        return memo[key]
    n = rows.shape[1]
    support_sizes = (rows > 0).sum(axis=1)
    mixed = np.flatnonzero(support_sizes >= 2)
    if len(mixed) == 0:
        vec = np.full(n, _ABSENT, dtype=np.int64)
        for r in rows:
            i = int(np.flatnonzero(r)[0])
            vec[i] = min(vec[i], int(r[i]))
        result = vec[None, :]
    else:
        u = rows[mixed[0]]
        i = int(np.flatnonzero(u)[0])
        pure = np.zeros(n, dtype=np.int64)
        pure[i] = u[i]
        rest = u.copy()
        rest[i] = 0
        left = minimal_rows(np.vstack((rows, pure)))
        right = minimal_rows(np.vstack((rows, rest)))
        result = _maximal_vectors(np.vstack((_split(left, memo), _split(right, memo))))
    _check_limit(len(result), "irreducible components")
    memo[key] = result
    if len(memo) > 20 * get_generator_limit():
        raise ResourceLimitError("irreducible decomposition search tree too large")
    return result


def _incremental(rows: np.ndarray) -> np.ndarray:
    """Irredundant component vectors, adding one generator at a time.

    Components already containing the new generator m stay; every other
    component C is replaced by the components C + <x_i^{m_i}> for x_i in supp(m).
    Old components can never become redundant, so only new ones are filtered.
    """
    n = rows.shape[1]
    first = rows[0]
    comps = []
    for i in np.flatnonzero(first):
        v = np.full(n, _ABSENT, dtype=np.int64)
        v[i] = first[i]
        comps.append(v)
    comps = np.array(comps)
    for m in rows[1:]:
        inside = (m[None, :] >= comps).any(axis=1)
        if inside.all():
            continue
        kept, out = comps[inside], comps[~inside]
        new = []
        for i in np.flatnonzero(m):
            c = out.copy()
            c[:, i] = np.minimum(c[:, i], m[i])
            new.append(c)
        new = np.unique(np.concatenate(new), axis=0)
        pool = np.concatenate((kept, new))
        keep = np.ones(len(new), dtype=bool)
        step = max(1, 2_000_000 // (len(pool) * n))
        for s in range(0, len(new), step):
            block = new[s : s + step]
            le = (block[:, None, :] <= pool[None, :, :]).all(axis=2)
            le[np.arange(len(block)), len(kept) + np.arange(s, s + len(block))] = False
            keep[s : s + step] = ~le.any(axis=1)
        comps = np.concatenate((kept, new[keep]))
        _check_limit(len(comps), "irreducible components")
    return comps


def irreducible_decomposition(I: MonomialIdeal, method: str = "incremental") -> tuple[IrreducibleComponent, ...]:
    """Irredundant irreducible components of I, canonically ordered.

    ``method="incremental"`` (default) adds generators one by one.
    ``method="split"`` splits on the first generator u (canonical order) with
    at least two support variables, u = x_i^a * w with x_i the first variable
    of u, using I = (I + x_i^a) cap (I + w); it is kept as an independent route
    for cross-checking.
    """
    _require_proper_nonzero(I)
    if method == "incremental":
        vecs = _incremental(I.rows)
    elif method == "split":
        vecs = _maximal_vectors(_split(I.rows, {}))
    else:
        raise PreconditionError(f"unknown decomposition method {method!r}")
    comps = []
    for v in vecs:
        pp = tuple((int(i), int(v[i])) for i in range(len(v)) if v[i] != _ABSENT)
        comps.append(IrreducibleComponent(I.ring, pp))
    return tuple(sorted(comps, key=IrreducibleComponent.sort_key))


def associated_primes(I: MonomialIdeal) -> AssociatedPrimes:
    comps = irreducible_decomposition(I)
    primes = sorted({c.radical for c in comps}, key=PrimeIdeal.sort_key)
    minimal = tuple(
        p for p in primes if not any(q != p and set(q.variables) <= set(p.variables) for q in primes)
    )
    return AssociatedPrimes(tuple(primes), minimal)


def minimal_primes(I: MonomialIdeal) -> tuple[PrimeIdeal, ...]:
    """Minimal primes via the radical (minimal transversals of generator supports)."""
    _require_proper_nonzero(I)
    radical = MonomialIdeal._from_rows(I.ring, (I.rows > 0).astype(np.int64), minimal=False)
    return associated_primes(radical).primes


def c_invariant(I: MonomialIdeal) -> int:
    """max alpha(p) over Ass(I); always 1 for monomial ideals."""
    return max(p.alpha for p in associated_primes(I))


def associated_primes_oracle(I: MonomialIdeal) -> tuple[PrimeIdeal, ...]:
    """Brute force: all (I:f) that are variable-generated, f ranging over divisors of lcm(G(I)).

    Truncating each exponent of f at the largest exponent of that variable in
    G(I) does not change (I:f), so these divisors cover every possible colon.
    """
    _require_proper_nonzero(I)
    found = set()
    for f in I.lcm().divisors():
        q = colon_by_monomial(I, f)
        if q.is_unit:
            continue
        if (q.rows.sum(axis=1) == 1).all():
            found.add(PrimeIdeal(I.ring, tuple(int(np.flatnonzero(r)[0]) for r in q.rows)))
    return tuple(sorted(found, key=PrimeIdeal.sort_key))


def symbolic_power_squarefree(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^(k) = intersection of p^k over the minimal primes p of a square-free I."""
    _require_proper_nonzero(I)
    if not I.is_squarefree:
        raise PreconditionError("symbolic_power_squarefree needs a square-free ideal")
    if k < 1:
        raise PreconditionError("k must be >= 1")
    parts = [power(p.as_ideal(), k) for p in associated_primes(I).minimal]
    return reduce(intersect, parts)
