"""Local and global v-numbers, v-functions over powers, and stability estimates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .decomposition import AssociatedPrimes, PrimeIdeal, _require_proper_nonzero, associated_primes
from .errors import PreconditionError, ResourceLimitError
from .monomial import Monomial, MonomialIdeal, _pairwise_lcm, colon_by_monomial, minimal_rows, power

ORACLE_MAX_LCM_DEGREE = 24


@dataclass(frozen=True)
class VWitness:
    """A monomial f of the given degree with (I : f) equal to ``prime``."""

    f: Monomial
    prime: PrimeIdeal
    degree: int

    def sort_key(self) -> tuple:
        return (self.degree, self.f.sort_key(), self.prime.sort_key())

    def verify(self, I: MonomialIdeal) -> bool:
        return colon_by_monomial(I, self.f) == self.prime.as_ideal()

    def __str__(self) -> str:
        return f"(I : {self.f}) = {self.prime}"


def colon_prime(rows: np.ndarray, f: np.ndarray) -> tuple[int, ...] | None:
    """Variables of (I : f) if that colon is generated by variables, else None.

    ``rows`` holds G(I).  Avoids minimalizing the colon: (I:f) = <P> exactly
    when every generator u/gcd(u,f) is divisible by a variable of P, where P
    collects the degree-one generators.
    """
    q = np.maximum(rows - f, 0)
    deg = q.sum(axis=1)
    if (deg == 0).any():
        return None
    linear = np.unique(np.flatnonzero(q[deg == 1].any(axis=0)))
    if len(linear) == 0:
        return None
    if not (q[:, linear] > 0).any(axis=1).all():
        return None
    return tuple(int(i) for i in linear)


def _colon_by_variable_upto(rows: np.ndarray, i: int, max_degree: int) -> np.ndarray:
    q = rows.copy()
    q[:, i] = np.maximum(q[:, i] - 1, 0)
    q = q[q.sum(axis=1) <= max_degree]
    return minimal_rows(q)


def _prime_colon_upto(I: MonomialIdeal, p: PrimeIdeal, max_degree: int) -> np.ndarray:
    """Generators of degree <= max_degree of (I : p) = intersection of (I : x_i), x_i in p."""
    acc = None
    for i in p.variables:
        part = _colon_by_variable_upto(I.rows, i, max_degree)
        acc = part if acc is None else _pairwise_lcm(acc, part, max_degree)
        if len(acc) == 0:
            break
    return acc


def _witness_of_degree(I: MonomialIdeal, p: PrimeIdeal, d: int) -> VWitness | None:
    """First (canonical order) f of degree d with (I : f) = p, or None.

    Every witness of minimum degree is a minimal generator of (I : p): if g
    divides f, both lie in (I : p), and (I : f) = p, then p <= (I:g) <= (I:f) = p.
    """
    gens = _prime_colon_upto(I, p, d)
    if len(gens) == 0:
        return None
    target = p.variables
    for row in gens[gens.sum(axis=1) == d]:
        if colon_prime(I.rows, row) == target:
            return VWitness(Monomial(I.ring, tuple(int(e) for e in row)), p, d)
    return None


def _witnesses_of_degree(I: MonomialIdeal, p: PrimeIdeal, d: int) -> list[VWitness]:
    gens = _prime_colon_upto(I, p, d)
    out = []
    for row in gens[gens.sum(axis=1) == d]:
        if colon_prime(I.rows, row) == p.variables:
            out.append(VWitness(Monomial(I.ring, tuple(int(e) for e in row)), p, d))
    return out


def local_v_number(
    I: MonomialIdeal, p: PrimeIdeal, ass: AssociatedPrimes | None = None
) -> VWitness | None:
    """Minimum-degree witness f with (I : f) = p, or None when p is not associated.

    Scans the minimal generators of (I : p) degree by degree.
    """
    _require_proper_nonzero(I)
    if p.ring != I.ring:
        raise PreconditionError("prime and ideal live in different rings")
    if ass is None:
        ass = associated_primes(I)
    if p not in ass:
        return None
    for d in range(I.lcm().degree + 1):
        w = _witness_of_degree(I, p, d)
        if w is not None:
            return w
    raise AssertionError(f"associated prime {p} has no witness dividing lcm(G(I))")


def local_v_numbers(I: MonomialIdeal, ass: AssociatedPrimes | None = None) -> dict[PrimeIdeal, VWitness]:
    if ass is None:
        ass = associated_primes(I)
    return {p: local_v_number(I, p, ass) for p in ass}


def v_number(I: MonomialIdeal, ass: AssociatedPrimes | None = None) -> VWitness:
    """v(I) = min over p in Ass(I) of v_p(I), with its witness.

    Ties are broken by (degree, canonical order of f, canonical order of p).
    """
    _require_proper_nonzero(I)
    if ass is None:
        ass = associated_primes(I)
    for d in range(I.lcm().degree + 1):
        found = [w for p in ass if (w := _witness_of_degree(I, p, d)) is not None]
        if found:
            return min(found, key=VWitness.sort_key)
    raise AssertionError("no witness found below deg lcm(G(I))")


def v_witnesses(I: MonomialIdeal, ass: AssociatedPrimes | None = None) -> list[VWitness]:
    """All witnesses of degree v(I), sorted by the tie-break order."""
    best = v_number(I, ass)
    if ass is None:
        ass = associated_primes(I)
    out = []
    for p in ass:
        out.extend(_witnesses_of_degree(I, p, best.degree))
    return sorted(out, key=VWitness.sort_key)


def v_oracle(I: MonomialIdeal) -> VWitness:
    """Brute force: first divisor f of lcm(G(I)) (canonical order) whose colon is prime."""
    _require_proper_nonzero(I)
    lcm = I.lcm()
    if lcm.degree > ORACLE_MAX_LCM_DEGREE:
        raise ResourceLimitError(
            f"oracle scan over divisors of an lcm of degree {lcm.degree} (> {ORACLE_MAX_LCM_DEGREE})"
        )
    for f in lcm.divisors():
        prime = colon_prime(I.rows, np.asarray(f.exponents))
        if prime is not None:
            return VWitness(f, PrimeIdeal(I.ring, prime), f.degree)
    raise AssertionError("a proper nonzero monomial ideal always has an associated prime")


# ---------------------------------------------------------------------------
# v-functions


@dataclass(frozen=True)
class PowerRow:
    k: int
    alpha_k: int
    v: int
    witness: VWitness
    locals: dict[PrimeIdeal, VWitness] | None = None
    num_generators: int = 0

    @property
    def b(self) -> int:
        """Offset v(I^k) - alpha(I) k."""
        return self.v - self.alpha_k


@dataclass(frozen=True)
class VReport:
    ideal: MonomialIdeal
    rows: tuple[PowerRow, ...]
    complete: bool = True
    note: str = ""

    @property
    def alpha(self) -> int:
        return self.ideal.alpha

    @property
    def values(self) -> list[int]:
        return [r.v for r in self.rows]

    @property
    def kmax(self) -> int:
        return len(self.rows)


def v_function(I: MonomialIdeal, kmax: int, with_locals: bool = False) -> VReport:
    """v(I^k) for k = 1..kmax.

    On a resource limit the raised ResourceLimitError carries the rows
    computed so far as ``exc.partial`` (a VReport with complete=False).
    """
    _require_proper_nonzero(I)
    if kmax < 1:
        raise PreconditionError("kmax must be >= 1")
    alpha = I.alpha
    rows = []
    Ik = None
    for k in range(1, kmax + 1):
        try:
            Ik = I if k == 1 else Ik * I
            ass = associated_primes(Ik)
            w = v_number(Ik, ass)
            locs = local_v_numbers(Ik, ass) if with_locals else None
        except ResourceLimitError as exc:
            exc.partial = VReport(I, tuple(rows), complete=False, note=f"stopped at k={k}: {exc}")
            raise
        rows.append(PowerRow(k, alpha * k, w.degree, w, locs, len(Ik)))
    return VReport(I, tuple(rows))


@dataclass(frozen=True)
class StabilityEstimate:
    slope: int
    intercept: int
    index: int
    certified: bool = False
    certificate_source: str = "window-only"


def stability_estimate(report: VReport | Sequence[int], alpha: int, bound=None) -> StabilityEstimate | None:
    """Longest observed suffix of v(I^k) on a line of slope alpha.

    Returns None when the last two observed values do not lie on such a line.
    ``bound`` may be a StabBound (see graphs.v_stab_upper_bound); the estimate is
    certified only if that bound lies inside the window and the observed tail
    agrees with the bound's line.
    """
    values = report.values if isinstance(report, VReport) else list(report)
    if len(values) < 2:
        raise PreconditionError("stability estimate needs at least k = 1, 2")
    offsets = [v - alpha * k for k, v in enumerate(values, start=1)]
    b = offsets[-1]
    if offsets[-2] != b:
        return None
    t = len(offsets)
    while t > 1 and offsets[t - 2] == b:
        t -= 1
    certified = False
    source = "window-only"
    if bound is not None and bound.bound <= len(values):
        if alpha == bound.slope and b == bound.intercept and t <= bound.bound:
            certified, source = True, "graph-bound"
    return StabilityEstimate(alpha, b, t, certified, source)


def check_lower_bound(I: MonomialIdeal, locals_: dict[PrimeIdeal, VWitness] | None = None) -> bool:
    """v_p(I) >= alpha(I) - alpha(p) = alpha(I) - 1 for every p in Ass(I)."""
    _require_proper_nonzero(I)
    if locals_ is None:
        locals_ = local_v_numbers(I)
    return all(w.degree >= I.alpha - p.alpha for p, w in locals_.items())


# ---------------------------------------------------------------------------
# conjecture checker


@dataclass(frozen=True)
class ConjectureRow:
    k: int
    linear_quotients: str  # found | none | unknown | not-equigenerated
    v: int
    predicted: int

    @property
    def matches(self) -> bool:
        return self.v == self.predicted


@dataclass(frozen=True)
class ConjectureVerdict:
    ideal: MonomialIdeal
    c: int
    rows: tuple[ConjectureRow, ...] = field(default_factory=tuple)

    @property
    def hypothesis_met(self) -> bool:
        return all(r.linear_quotients == "found" for r in self.rows)

    @property
    def verdict(self) -> str:
        if not self.hypothesis_met:
            return "hypothesis-not-met"
        if all(r.matches for r in self.rows):
            return "consistent"
        return "counterexample-candidate"


def check_conjecture(I: MonomialIdeal, kmax: int) -> ConjectureVerdict:
    """Compare v(I^k) with alpha(I) k - c(I), recording whether each I^k has linear quotients.

    Linear quotients of every computed power stand in for "linear powers"; the
    check is sufficient, not necessary, so a "hypothesis-not-met" verdict does
    not rule out linear powers.
    """
    from .structure import has_linear_quotients

    _require_proper_nonzero(I)
    if kmax < 1:
        raise PreconditionError("kmax must be >= 1")
    ass = associated_primes(I)
    c = max(p.alpha for p in ass)
    rows = []
    Ik = None
    for k in range(1, kmax + 1):
        Ik = I if k == 1 else Ik * I
        if Ik.is_equigenerated:
            lq = has_linear_quotients(Ik).status
        else:
            lq = "not-equigenerated"
        v = v_number(Ik).degree
        rows.append(ConjectureRow(k, lq, v, I.alpha * k - c))
    return ConjectureVerdict(I, c, tuple(rows))
