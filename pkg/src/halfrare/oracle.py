"""Exact LP verification of the closed-form bounds.

Each terrace probability is extremized over the polytope of joint
distributions with the given marginals (2^N atom variables, N+1 equality
constraints, atoms >= 0).  The solver is a dense two-phase simplex over
exact rationals with Bland's rule, so optima compare to the closed forms by
exact equality and every reported witness is a true vertex of the polytope.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .bounds import boundary_distributions
from .core import (
    HALF,
    ONE,
    ZERO,
    EventSet,
    MarginalSet,
    check_subset,
    default_event_set,
    subset_iter,
    validate_marginals,
)
from .errors import Infeasible, LengthMismatch, ProbabilityOutOfRange, TooLarge

#: LP cap: 2^N atom variables keeps the tableau at most 64 columns wide.
MAX_LP_EVENTS = 6


@dataclass(frozen=True)
class JointDistribution:
    """A feasible point of the marginal polytope: one atom per terrace cell."""

    events: EventSet
    atoms: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.atoms) != 1 << self.events.n:
            raise LengthMismatch(f"{len(self.atoms)} atoms for N={self.events.n}")
        for x, a in enumerate(self.atoms):
            if a < ZERO:
                raise ProbabilityOutOfRange(x, a)
        if sum(self.atoms) != ONE:
            raise ProbabilityOutOfRange("total", sum(self.atoms))

    def __getitem__(self, x: int) -> Fraction:
        return self.atoms[x]

    def induced_marginals(self) -> tuple[Fraction, ...]:
        n = self.events.n
        return tuple(
            sum((a for x, a in enumerate(self.atoms) if (x >> i) & 1), ZERO)
            for i in range(n)
        )


@dataclass(frozen=True)
class SubsetRecord:
    subset: int
    closed_form_lower: Fraction
    lp_min: Fraction
    closed_form_upper: Fraction
    lp_max: Fraction
    witness_min: JointDistribution
    witness_max: JointDistribution

    @property
    def matches(self) -> bool:
        return self.closed_form_lower == self.lp_min and self.closed_form_upper == self.lp_max


@dataclass(frozen=True)
class VerificationReport:
    marginals: MarginalSet
    records: tuple[SubsetRecord, ...]

    @property
    def verdict(self) -> bool:
        return all(r.matches for r in self.records)

    def first_mismatch(self) -> SubsetRecord | None:
        for r in self.records:
            if not r.matches:
                return r
        return None


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    prow = tableau[row]
    for r, trow in enumerate(tableau):
        if r == row:
            continue
        f = trow[col]
        if f:
            tableau[r] = [v - f * w for v, w in zip(trow, prow)]
    basis[row] = col


def _simplex(tableau: list[list[Fraction]], basis: list[int], ncols: int) -> None:
    """Minimize the objective in the last tableau row over the first `ncols`
    columns; Bland's rule, exact arithmetic."""
    obj = tableau[-1]
    while True:
        col = next((j for j in range(ncols) if obj[j] < ZERO), -1)
        if col < 0:
            return
        row, best = -1, None
        for r in range(len(tableau) - 1):
            a = tableau[r][col]
            if a > ZERO:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[row]):
                    row, best = r, ratio
        if row < 0:
            raise Infeasible("unbounded LP over a probability polytope")
        _pivot(tableau, basis, row, col)
        obj = tableau[-1]


def _solve_min(c: list[Fraction], a: list[list[Fraction]], b: list[Fraction]) -> tuple[Fraction, list[Fraction]]:
    """min c.x  s.t.  a x = b (b >= 0), x >= 0; returns optimum and a vertex."""
    m, n = len(a), len(c)
    # Phase 1: artificial basis, minimize sum of artificials.
    tableau = [a[i][:] + [ONE if j == i else ZERO for j in range(m)] + [b[i]] for i in range(m)]
    obj = [ZERO] * (n + m + 1)
    for row in tableau:
        for j in range(n):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    tableau.append(obj)
    basis = [n + i for i in range(m)]
    _simplex(tableau, basis, n)
    if tableau[-1][-1] != ZERO:
        raise Infeasible("no joint distribution matches the marginals")
    # Drive any degenerate artificials out of the basis.
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != ZERO), -1)
            if col >= 0:
                _pivot(tableau, basis, r, col)
    # Phase 2 on the original columns.
    obj = [ZERO] * (n + m + 1)
    for j, cj in enumerate(c):
        obj[j] = cj
    tableau[-1] = obj
    for r in range(m):
        j = basis[r]
        f = tableau[-1][j]
        if j < n and f:
            tableau[-1] = [v - f * w for v, w in zip(tableau[-1], tableau[r])]
    _simplex(tableau, basis, n)
    x = [ZERO] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = tableau[r][-1]
    value = sum((cj * xj for cj, xj in zip(c, x)), ZERO)
    return value, x


def lp_extremize_terrace(
    x: int, m: MarginalSet, direction: str
) -> tuple[Fraction, JointDistribution]:
    """Exact optimum of atom(X) over all joints with marginals m, plus an
    attaining witness.  `direction` is "min" or "max"."""
    if m.n > MAX_LP_EVENTS:
        raise TooLarge(f"N={m.n} exceeds the LP cap {MAX_LP_EVENTS}")
    check_subset(x, m.n)
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    ncells = 1 << m.n
    a = [[ONE] * ncells]
    b = [ONE]
    for i in range(m.n):
        a.append([ONE if (w >> i) & 1 else ZERO for w in range(ncells)])
        b.append(m.probs[i])
    sign = ONE if direction == "min" else -ONE
    c = [ZERO] * ncells
    c[x] = sign
    value, atoms = _solve_min(c, a, b)
    return sign * value, JointDistribution(m.events, tuple(atoms))


def verify_bounds(m: MarginalSet) -> VerificationReport:
    """Compare the LP optimum of every terrace cell, both directions, with the
    closed-form bounds; the verdict passes only on exact equality throughout."""
    if m.n > MAX_LP_EVENTS:
        raise TooLarge(f"N={m.n} exceeds the LP cap {MAX_LP_EVENTS}")
    bd = boundary_distributions(m)
    records = []
    for x in subset_iter(m.n):
        lo, wit_lo = lp_extremize_terrace(x, m, "min")
        hi, wit_hi = lp_extremize_terrace(x, m, "max")
        records.append(SubsetRecord(x, bd.lower[x], lo, bd.upper[x], hi, wit_lo, wit_hi))
    return VerificationReport(m, tuple(records))


def random_marginals(n: int, seed: int, half_rare: bool = False) -> MarginalSet:
    """Deterministic random marginals with denominators <= 1000; the half-rare
    variant clamps to [0, 1/2] and sorts descending."""
    if not 1 <= n <= 20:
        raise TooLarge(f"N={n} not in [1, 20]")
    rng = random.Random(seed)
    probs = []
    for _ in range(n):
        den = rng.randint(1, 1000)
        probs.append(Fraction(rng.randint(0, den), den))
    if half_rare:
        probs = sorted((min(p, HALF) for p in probs), reverse=True)
    return validate_marginals(default_event_set(n), tuple(probs))
