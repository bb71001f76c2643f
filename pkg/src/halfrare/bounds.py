"""Closed-form Fréchet bounds of the 1st kind.

General formulas for arbitrary marginals:

    lower(X) = max{0, 1 - sum_{x in X} (1 - p_x) - sum_{x not in X} p_x}
    upper(X) = min{min_{x in X} p_x, min_{x not in X} (1 - p_x)}

with the min over an empty index side dropped.  For half-rare marginals
(1/2 >= p_1 >= ... >= p_N) the upper bound simplifies to 1 - p_1 at the
empty set and min_{x in X} p_x elsewhere, and the lower bound is nonzero
for at most two subsets: the empty set and the singleton of the most
probable event.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    HALF,
    ONE,
    ZERO,
    EventSet,
    HalfRareMarginalSet,
    MarginalSet,
    TerraceDistribution,
    check_subset,
    make_event_set,
    subset_iter,
    validate_marginals,
)
from .errors import MarginalMismatch, NotHalfRare, TooLarge


@dataclass(frozen=True)
class BoundaryDistributions:
    """Dense lower and upper Fréchet bounds over the full power set."""

    events: EventSet
    lower: tuple[Fraction, ...]
    upper: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return self.events.n


@dataclass(frozen=True)
class CovarianceBounds:
    """Per-subset covariance intervals [kov_lower, kov_upper] for a doublet."""

    events: EventSet
    intervals: tuple[tuple[Fraction, Fraction], ...]


def lower_bound_general(x: int, m: MarginalSet) -> Fraction:
    check_subset(x, m.n)
    total = ONE
    for i, p in enumerate(m.probs):
        total -= (ONE - p) if (x >> i) & 1 else p
    return max(ZERO, total)


def upper_bound_general(x: int, m: MarginalSet) -> Fraction:
    check_subset(x, m.n)
    best = None
    for i, p in enumerate(m.probs):
        v = p if (x >> i) & 1 else ONE - p
        if best is None or v < best:
            best = v
    assert best is not None  # N >= 1 so one side is always nonempty
    return best


def upper_bound_half_rare(x: int, h: HalfRareMarginalSet) -> Fraction:
    check_subset(x, h.n)
    if x == 0:
        return ONE - h.p_max
    return min(h.probs[i] for i in range(h.n) if (x >> i) & 1)


def lower_bound_half_rare(x: int, h: HalfRareMarginalSet) -> Fraction:
    check_subset(x, h.n)
    if x == 0:
        return max(ZERO, ONE - sum(h.probs))
    if x == 1:  # singleton of the most probable event
        return max(ZERO, h.p_max - (sum(h.probs) - h.p_max))
    return ZERO


def boundary_distributions(m: MarginalSet, force_general: bool = False) -> BoundaryDistributions:
    """Dense bounds over all 2^N subsets.

    Dispatches to the half-rare fast path when the marginals qualify;
    `force_general` keeps the general formulas for differential testing.
    """
    if m.n > 20:
        raise TooLarge(f"N={m.n}")
    if not force_general and m.is_half_rare():
        h = HalfRareMarginalSet(m)
        lower = tuple(lower_bound_half_rare(x, h) for x in subset_iter(m.n))
        upper = tuple(upper_bound_half_rare(x, h) for x in subset_iter(m.n))
    else:
        lower = tuple(lower_bound_general(x, m) for x in subset_iter(m.n))
        upper = tuple(upper_bound_general(x, m) for x in subset_iter(m.n))
    return BoundaryDistributions(m.events, lower, upper)


def _doublet_marginals(p_x: Fraction, p_y: Fraction) -> MarginalSet:
    p_x, p_y = Fraction(p_x), Fraction(p_y)
    if p_x > HALF or p_x < p_y or p_y < ZERO:
        raise NotHalfRare(f"need 1/2 >= p_x >= p_y >= 0, got ({p_x}, {p_y})")
    return validate_marginals(make_event_set(("x", "y")), (p_x, p_y))


def doublet_bounds(p_x: Fraction, p_y: Fraction) -> BoundaryDistributions:
    """Closed-form bounds for a half-rare pair, in subset order
    (empty, {x}, {y}, {x,y})."""
    m = _doublet_marginals(p_x, p_y)
    p_x, p_y = m.probs
    lower = (ONE - p_x - p_y, p_x - p_y, ZERO, ZERO)
    upper = (ONE - p_x, p_x, p_y, p_y)
    return BoundaryDistributions(m.events, lower, upper)


def covariance_first_kind(d: TerraceDistribution, m: MarginalSet, x: int) -> Fraction:
    """Deviation of a terrace probability from its value under independence."""
    from .transforms import independent_value

    if d.events.n != m.n or d.induced_marginals() != m.probs:
        raise MarginalMismatch("distribution marginals do not match the declared ones")
    return d[x] - independent_value(x, m)


def covariance_bounds_doublet(p_x: Fraction, p_y: Fraction) -> CovarianceBounds:
    """Covariance intervals for a half-rare pair, in subset order
    (empty, {x}, {y}, {x,y}); every interval straddles 0."""
    m = _doublet_marginals(p_x, p_y)
    p_x, p_y = m.probs
    outer = (-p_x * p_y, (ONE - p_x) * p_y)
    inner = (-(ONE - p_x) * p_y, p_x * p_y)
    return CovarianceBounds(m.events, (outer, inner, inner, outer))
