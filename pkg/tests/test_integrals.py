"""Tests for observable kinds and the integrals catalog."""

from __future__ import annotations

import pytest

from staeckel_systems.errors import IncompatibleKind, IndexOutOfRange
from staeckel_systems.integrals.catalog import (
    angular_towers,
    build_observable,
    catalog_symmetries,
    fradkin_components,
    free_independent_sets,
    independent_set,
    lrl_components,
    sl2_generators,
    so_generators,
)
from staeckel_systems.integrals.kinds import ObservableKind
from staeckel_systems.models.phase_state import PhaseState

from conftest import build


# ── Labels ───────────────────────────────────────────────────────────

class TestLabels:

    def test_top_of_tower_is_l2(self):
        assert ObservableKind.angular_left(3).label(3) == "L2"
        assert ObservableKind.angular_right(3).label(3) == "L2"

    def test_tower_labels(self):
        assert ObservableKind.angular_left(2).label(4) == "S^(2)"
        assert ObservableKind.angular_right(3).label(4) == "S_(3)"

    def test_component_labels(self):
        assert ObservableKind.curved_fradkin(1, 2).label(3) == "St_1_2"
        assert ObservableKind.curved_lrl(2).label(3) == "St_2"
        assert ObservableKind.flat_fradkin(2, 2).label(3) == "SU_2_2"
        assert ObservableKind.so_generator(1, 3).label(3) == "J_1_3"


# ── Evaluation ───────────────────────────────────────────────────────

class TestBuildObservable:

    def test_total_angular_momentum(self):
        l2 = build_observable(build("free", 2), ObservableKind.total_l2())
        assert l2(PhaseState(q=(1.0, 0.0), p=(0.0, 3.0))) == pytest.approx(9.0)

    def test_curved_fradkin(self):
        spec = build("curved-kc", 3, alpha=1.0)
        s11 = build_observable(spec, ObservableKind.curved_fradkin(1, 1))
        assert s11(PhaseState(q=(1.0, 0.0, 0.0), p=(0.0, 1.0, 0.0))) == pytest.approx(-3.0)

    def test_curved_lrl(self, radial_point3):
        spec = build("spherical-osc", 3, alpha=0.0)
        s1 = build_observable(spec, ObservableKind.curved_lrl(1))
        assert s1(radial_point3) == pytest.approx(0.5)

    def test_flat_lrl(self):
        # seed Σ p_k(q_k p_1 − q_1 p_k) = −1, potential part −δ q_1/|q| = +1
        spec = build("flat-kc", 2, delta=-1.0, xi=0.0)
        s1 = build_observable(spec, ObservableKind.flat_lrl(1))
        assert s1(PhaseState(q=(1.0, 0.0), p=(0.0, 1.0))) == pytest.approx(0.0)

    def test_flat_fradkin(self):
        spec = build("flat-oscillator", 2, beta=0.5, gamma=0.0)
        s12 = build_observable(spec, ObservableKind.flat_fradkin(1, 2))
        assert s12(PhaseState(q=(1.0, 2.0), p=(3.0, 4.0))) == pytest.approx(12.0 + 2.0)

    def test_taubnut_lrl_carries_eta(self):
        spec = build("taubnut", 2, eta=2.0, alpha=0.0)
        s1 = build_observable(spec, ObservableKind.curved_lrl(1))
        # radial momentum: seed vanishes, ℋ = r p²/(2(η+r)) = 1/6
        assert s1(PhaseState(q=(1.0, 0.0), p=(1.0, 0.0))) == pytest.approx(2.0 / 6.0)

    def test_sl2_generators(self):
        minus, plus, three = sl2_generators(build("free", 2))
        x = PhaseState(q=(1.0, 2.0), p=(3.0, 4.0))
        assert (minus(x), plus(x), three(x)) == (5.0, 25.0, 11.0)

    def test_curved_kind_on_flat_system(self):
        with pytest.raises(IncompatibleKind):
            build_observable(build("flat-oscillator", 3), ObservableKind.curved_fradkin(1, 1))

    def test_fradkin_on_lrl_system(self):
        with pytest.raises(IncompatibleKind):
            build_observable(build("spherical-osc", 3), ObservableKind.curved_fradkin(1, 1))

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            build_observable(build("curved-kc", 3), ObservableKind.curved_fradkin(1, 4))

    def test_tower_index_below_two(self):
        with pytest.raises(IndexOutOfRange):
            build_observable(build("free", 3), ObservableKind.angular_left(1))

    def test_so_generator_needs_ordered_indices(self):
        with pytest.raises(IndexOutOfRange):
            build_observable(build("free", 3), ObservableKind.so_generator(2, 1))


# ── Families ─────────────────────────────────────────────────────────

class TestFamilies:

    def test_towers_end_in_l2(self):
        left, right = angular_towers(build("free", 4))
        assert [o.label for o in left] == ["S^(2)", "S^(3)", "L2"]
        assert [o.label for o in right] == ["S_(2)", "S_(3)", "L2"]

    def test_fradkin_component_count(self):
        spec = build("darboux3", 4)
        assert len(fradkin_components(spec)) == 10
        assert len(fradkin_components(spec, diagonal_only=True)) == 4
        assert lrl_components(spec) == []

    def test_free_motion_carries_both(self):
        spec = build("free", 3)
        assert len(fradkin_components(spec)) == 6
        assert len(lrl_components(spec)) == 3

    def test_so_generators(self):
        assert sorted(so_generators(build("free", 4))) == [
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        ]

    def test_catalog_lists_l2_once(self):
        labels = [o.label for o in catalog_symmetries(build("taubnut", 3))]
        assert labels.count("L2") == 1
        assert labels == ["S^(2)", "L2", "S_(2)", "St_1", "St_2", "St_3"]


class TestIndependentSet:

    def test_curved_kc_n3(self):
        labels = [o.label for o in independent_set(build("curved-kc", 3), fixed_i=1)]
        assert labels == ["H", "S^(2)", "L2", "S_(2)", "St_1_1"]

    @pytest.mark.parametrize("dim", [2, 3, 4, 5])
    def test_size_is_2n_minus_1(self, dim):
        assert len(independent_set(build("taubnut", dim), fixed_i=dim)) == 2 * dim - 1

    def test_flat_oscillator_closes_with_su(self):
        labels = [o.label for o in independent_set(build("flat-oscillator", 2), fixed_i=2)]
        assert labels == ["H", "L2", "SU_2_2"]

    def test_free_motion_has_two_sets(self):
        spec = build("free", 3)
        with pytest.raises(IncompatibleKind):
            independent_set(spec, fixed_i=1)
        fradkin_set, lrl_set = free_independent_sets(spec, fixed_i=2)
        assert fradkin_set[-1].label == "S_2_2"
        assert lrl_set[-1].label == "S_2"
        assert len(fradkin_set) == len(lrl_set) == 5

    def test_fixed_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            independent_set(build("curved-kc", 3), fixed_i=0)
