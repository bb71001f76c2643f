from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from halfrare import (
    apply_phenomenon,
    boundary_distributions,
    bounds_via_projection,
    half_rare_projection,
    independent_epd,
    independent_value,
    marginals_from_values,
    subset_iter,
)
from halfrare.errors import DimensionMismatch
from halfrare.transforms import PhenomenonMap, identity_phenomenon

from conftest import marginal_sets, unit_fraction

F = Fraction


class TestIndependentEpd:
    def test_fig_doublet(self):
        d = independent_epd(marginals_from_values(["0.45", "0.40"]))
        assert d.values == (F(33, 100), F(27, 100), F(11, 50), F(9, 50))

    def test_impossible_events(self):
        d = independent_epd(marginals_from_values([0, 0]))
        assert d.values == (1, 0, 0, 0)

    def test_fair_coins_are_uniform(self):
        n = 4
        d = independent_epd(marginals_from_values([F(1, 2)] * n))
        assert all(v == F(1, 2**n) for v in d.values)

    @given(marginal_sets())
    def test_normalization_and_marginal_recovery(self, m):
        d = independent_epd(m)
        assert sum(d.values) == 1  # TerraceDistribution also enforces this
        assert d.induced_marginals() == m.probs

    @given(marginal_sets(), st.data())
    def test_single_cell_matches_table(self, m, data):
        x = data.draw(st.integers(min_value=0, max_value=2**m.n - 1))
        assert independent_value(x, m) == independent_epd(m)[x]


class TestHalfRareProjection:
    def test_complements_likely_event(self):
        h, pm = half_rare_projection(marginals_from_values(["0.7", "0.4"]))
        assert h.probs == (F(2, 5), F(3, 10))
        assert h.events.labels == ("x2", "x1^c")
        assert pm.kept == 0b10
        assert pm.order == (1, 0)

    def test_identity_when_already_half_rare(self):
        m = marginals_from_values(["0.45", "0.40"])
        h, pm = half_rare_projection(m)
        assert h.probs == m.probs
        assert pm.is_identity()

    def test_half_is_kept(self):
        m = marginals_from_values([F(1, 2), F(1, 2)])
        h, pm = half_rare_projection(m)
        assert h.probs == m.probs
        assert pm.is_identity()

    @given(marginal_sets())
    def test_output_is_half_rare(self, m):
        h, _ = half_rare_projection(m)
        assert h.inner.is_half_rare()

    @given(marginal_sets())
    def test_idempotence(self, m):
        h, _ = half_rare_projection(m)
        h2, pm2 = half_rare_projection(h.inner)
        assert h2.probs == h.probs
        assert pm2.is_identity()


@st.composite
def phenomenon_maps(draw, n):
    kept = draw(st.integers(min_value=0, max_value=2**n - 1))
    order = tuple(draw(st.permutations(range(n))))
    return PhenomenonMap(n, kept, order)


class TestApplyPhenomenon:
    def test_identity(self):
        d = independent_epd(marginals_from_values(["0.45", "0.40"]))
        assert apply_phenomenon(d.values, identity_phenomenon(2)) == d.values

    def test_full_complement_reverses(self):
        d = independent_epd(marginals_from_values(["0.45", "0.40"]))
        out = apply_phenomenon(d.values, identity_phenomenon(2, kept=0))
        assert out == tuple(reversed(d.values))

    def test_double_complement_restores(self):
        d = independent_epd(marginals_from_values(["0.45", "0.40", "0.1"]))
        pm = identity_phenomenon(3, kept=0b010)
        assert apply_phenomenon(apply_phenomenon(d.values, pm), pm) == d.values

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            apply_phenomenon((F(1),), identity_phenomenon(2))

    @given(st.integers(min_value=1, max_value=5), st.data())
    def test_bijection(self, n, data):
        pm = data.draw(phenomenon_maps(n))
        values = tuple(data.draw(st.lists(unit_fraction, min_size=2**n, max_size=2**n)))
        out = apply_phenomenon(values, pm)
        assert sorted(out) == sorted(values)
        assert apply_phenomenon(out, pm, inverse=True) == values

    @given(marginal_sets())
    def test_commutes_with_independence(self, m):
        h, pm = half_rare_projection(m)
        direct = independent_epd(h.inner).values
        transported = apply_phenomenon(independent_epd(m).values, pm)
        assert direct == transported


class TestBoundsViaProjection:
    def test_non_half_rare_example(self):
        m = marginals_from_values(["0.7", "0.4"])
        bd = bounds_via_projection(m)
        assert bd.lower[1] == F(3, 10)

    def test_identity_on_half_rare(self):
        m = marginals_from_values(["0.45", "0.40"])
        bd = bounds_via_projection(m)
        ref = boundary_distributions(m)
        assert bd.lower == ref.lower and bd.upper == ref.upper

    def test_deterministic_events(self):
        bd = bounds_via_projection(marginals_from_values([1, 0]))
        assert bd.lower[1] == bd.upper[1] == 1

    @given(marginal_sets())
    def test_agrees_with_general_formulas(self, m):
        bd = bounds_via_projection(m)
        ref = boundary_distributions(m, force_general=True)
        assert bd.lower == ref.lower
        assert bd.upper == ref.upper
