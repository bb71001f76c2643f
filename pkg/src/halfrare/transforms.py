"""Independence projection, half-rare projection and set-phenomenon transforms.

An M-phenomenon complements every event outside the kept set M.  On terrace
distributions this acts as the bijective renumbering X -> X xor C (C the
complemented events), optionally followed by a relabeling permutation.  The
half-rare projection complements exactly the events with probability > 1/2
and reorders by descending probability (stable), which lands any marginal set
in the half-rare regime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import bounds as _bounds
from .core import (
    HALF,
    ONE,
    ZERO,
    HalfRareMarginalSet,
    MarginalSet,
    TerraceDistribution,
    make_event_set,
    subset_iter,
    validate_marginals,
)
from .errors import DimensionMismatch, TooLarge


@dataclass(frozen=True)
class PhenomenonMap:
    """Data of a set-phenomenon transform.

    `kept` is the bitmask M of events left alone; all others are complemented.
    `order` lists original event indices in their new positions, so
    `order == (0, 1, ..., N-1)` is the identity relabeling.
    """

    n: int
    kept: int
    order: tuple[int, ...]

    @property
    def complemented(self) -> int:
        return ((1 << self.n) - 1) ^ self.kept

    def is_identity(self) -> bool:
        return self.kept == (1 << self.n) - 1 and self.order == tuple(range(self.n))

    def map_subset(self, x: int) -> int:
        """Renumbering X -> perm(X xor C)."""
        w = x ^ self.complemented
        out = 0
        for j, i in enumerate(self.order):
            if (w >> i) & 1:
                out |= 1 << j
        return out


def identity_phenomenon(n: int, kept: int | None = None) -> PhenomenonMap:
    full = (1 << n) - 1
    return PhenomenonMap(n, full if kept is None else kept, tuple(range(n)))


def independent_value(x: int, m: MarginalSet) -> Fraction:
    """Terrace probability at X under independence (single subset, no table)."""
    v = ONE
    for i, p in enumerate(m.probs):
        v *= p if (x >> i) & 1 else ONE - p
    return v


def independent_epd(m: MarginalSet) -> TerraceDistribution:
    """Dense terrace distribution of the independent projection."""
    if m.n > 20:
        raise TooLarge(f"N={m.n}")
    # Tensor-product fill: one factor per event instead of N products per cell.
    values = [ONE]
    for p in m.probs:
        q = ONE - p
        values = [v * q for v in values] + [v * p for v in values]
    return TerraceDistribution(m.events, tuple(values))


def half_rare_projection(m: MarginalSet) -> tuple[HalfRareMarginalSet, PhenomenonMap]:
    """Complement events with p > 1/2, then stably sort descending."""
    flipped = [p if p <= HALF else ONE - p for p in m.probs]
    kept = 0
    for i, p in enumerate(m.probs):
        if p <= HALF:
            kept |= 1 << i
    order = tuple(sorted(range(m.n), key=lambda i: (-flipped[i], i)))
    labels = tuple(
        m.events.labels[i] if (kept >> i) & 1 else m.events.labels[i] + "^c"
        for i in order
    )
    probs = tuple(flipped[i] for i in order)
    projected = validate_marginals(make_event_set(labels), probs)
    return HalfRareMarginalSet(projected), PhenomenonMap(m.n, kept, order)


def apply_phenomenon(
    values: Sequence[Fraction], pm: PhenomenonMap, inverse: bool = False
) -> tuple[Fraction, ...]:
    """Renumber a dense power-set map; a bijection, so the value multiset is
    preserved.  Forward puts the input value at X into slot map_subset(X);
    inverse pulls it back."""
    if len(values) != 1 << pm.n:
        raise DimensionMismatch(f"{len(values)} values for N={pm.n}")
    out: list[Fraction] = [ZERO] * len(values)
    for x in subset_iter(pm.n):
        y = pm.map_subset(x)
        if inverse:
            out[x] = values[y]
        else:
            out[y] = values[x]
    return tuple(out)


def bounds_via_projection(m: MarginalSet) -> _bounds.BoundaryDistributions:
    """Fréchet bounds for arbitrary marginals through the half-rare detour:
    project, evaluate the half-rare closed forms, renumber back.  Agrees
    exactly with the general formulas."""
    if m.n > 20:
        raise TooLarge(f"N={m.n}")
    h, pm = half_rare_projection(m)
    lower = tuple(_bounds.lower_bound_half_rare(x, h) for x in subset_iter(m.n))
    upper = tuple(_bounds.upper_bound_half_rare(x, h) for x in subset_iter(m.n))
    return _bounds.BoundaryDistributions(
        m.events,
        apply_phenomenon(lower, pm, inverse=True),
        apply_phenomenon(upper, pm, inverse=True),
    )
