"""Tests for the Stäckel transform and the planar KS map."""

from __future__ import annotations

import numpy as np
import pytest

from staeckel_systems.errors import (
    BranchViolation,
    DomainViolation,
    IncompatibleKind,
    IndexOutOfRange,
    OriginSingularity,
    UnsupportedDimension,
)
from staeckel_systems.integrals.catalog import build_observable, hamiltonian_observable
from staeckel_systems.integrals.kinds import ObservableKind
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.sampling import sample_points
from staeckel_systems.models.system import SystemParams, eval_hamiltonian
from staeckel_systems.transform.ks_map import (
    IDENTITY,
    KS_FORWARD,
    KS_INVERSE,
    flat_kepler,
    flat_oscillator,
    jacobian,
    kepler_side_images,
    ks_forward,
    ks_inverse,
    map_observable,
    oscillator_side_images,
    sample_branch_points,
    symplectic_defect,
)
from staeckel_systems.transform.staeckel import (
    PotentialForm,
    angular_decomposition,
    fradkin_decomposition,
    free_motion,
    intermediate_for,
    lrl_decomposition,
    staeckel_hamiltonian,
    transform_hamiltonian,
    transform_symmetry,
)

from conftest import CURVED_SYSTEMS, build


# ── Helpers ──────────────────────────────────────────────────────────

def _close(a: float, b: float, tol: float = 1e-12) -> bool:
    return abs(a - b) <= tol * (1.0 + abs(a) + abs(b))


def _points(spec, count=20, seed=5):
    return sample_points(spec, count, seed, r_min_margin=0.1)


# ── Stäckel transform ────────────────────────────────────────────────

class TestTransformHamiltonian:

    def test_unit_factor_is_identity(self):
        h = free_motion(SystemParams(alpha=0.7))
        out = transform_hamiltonian(h, lambda q: 1.0).as_observable(2)
        x = PhaseState(q=(0.3, -1.2), p=(0.5, 2.0))
        assert out(x) == pytest.approx(0.5 * x.p_sq + 0.7)

    def test_vanishing_factor(self):
        h = transform_hamiltonian(free_motion(SystemParams(alpha=1.0)), lambda q: 0.0)
        with pytest.raises(DomainViolation):
            h.as_observable(2)(PhaseState(q=(1.0, 0.0), p=(0.0, 1.0)))

    def test_metric_and_potential_divide(self):
        h = PotentialForm(mu=lambda q: 2.0, v=lambda q: 3.0)
        out = transform_hamiltonian(h, lambda q: 4.0)
        assert out.mu([0.0, 0.0]) == 8.0
        assert out.v([0.0, 0.0]) == 0.75

    @pytest.mark.parametrize("name", CURVED_SYSTEMS)
    def test_rebuilds_catalog_hamiltonian(self, name):
        spec = build(name, 3)
        rebuilt = staeckel_hamiltonian(spec)
        for x in _points(spec):
            assert _close(rebuilt(x), eval_hamiltonian(spec, x))

    def test_flat_system_is_not_a_transform(self):
        with pytest.raises(IncompatibleKind):
            intermediate_for(build("flat-kc", 3))


class TestTransformSymmetry:

    @pytest.mark.parametrize("name", ["curved-kc", "darboux3"])
    def test_fradkin_matches_catalog(self, name):
        spec = build(name, 3)
        for i, j in [(1, 1), (1, 2), (2, 3), (3, 3)]:
            carried = transform_symmetry(fradkin_decomposition(spec, i, j), spec)
            catalog = build_observable(spec, ObservableKind.curved_fradkin(i, j))
            for x in _points(spec, count=10):
                assert _close(carried(x), catalog(x))

    @pytest.mark.parametrize("name", ["spherical-osc", "taubnut"])
    def test_lrl_matches_catalog(self, name):
        spec = build(name, 3)
        for i in (1, 2, 3):
            carried = transform_symmetry(lrl_decomposition(spec, i), spec)
            catalog = build_observable(spec, ObservableKind.curved_lrl(i))
            for x in _points(spec, count=10):
                assert _close(carried(x), catalog(x))

    def test_angular_integrals_pass_through(self):
        spec = build("taubnut", 4)
        for m in (2, 3, 4):
            left = transform_symmetry(angular_decomposition(spec, m), spec)
            right = transform_symmetry(angular_decomposition(spec, m, right=True), spec)
            for x in _points(spec, count=5):
                assert _close(left(x), build_observable(spec, ObservableKind.angular_left(m))(x))
                assert _close(right(x), build_observable(spec, ObservableKind.angular_right(m))(x))

    def test_decomposition_index_checked(self):
        with pytest.raises(IndexOutOfRange):
            fradkin_decomposition(build("curved-kc", 3), 0, 1)
        with pytest.raises(IndexOutOfRange):
            angular_decomposition(build("curved-kc", 3), 4)


# ── KS map ───────────────────────────────────────────────────────────

class TestKsMap:

    def test_forward_examples(self):
        y = ks_forward(PhaseState(q=(1.0, 1.0), p=(1.0, 0.0)))
        assert y.q == pytest.approx((0.0, 1.0))
        assert y.p == pytest.approx((0.5, 0.5))
        y = ks_forward(PhaseState(q=(1.0, 0.0), p=(0.0, 1.0)))
        assert y.q == pytest.approx((0.5, 0.0))
        assert y.p == pytest.approx((0.0, 1.0))

    def test_inverse_undoes_forward_on_upper_half_plane(self):
        for x in sample_branch_points(50, seed=1):
            back = ks_inverse(ks_forward(x))
            assert back.as_array() == pytest.approx(x.as_array(), rel=1e-8, abs=1e-8)

    def test_forward_undoes_inverse(self):
        for x in sample_branch_points(50, seed=2):
            assert ks_forward(ks_inverse(x)).as_array() == pytest.approx(x.as_array(), rel=1e-8, abs=1e-8)

    @pytest.mark.parametrize("m", [KS_FORWARD, KS_INVERSE, IDENTITY])
    def test_symplectic(self, m):
        for x in sample_branch_points(100, seed=3):
            size = float(np.max(np.abs(jacobian(m, x))))
            assert symplectic_defect(m, x) <= 1e-10 * (1.0 + size * size)

    def test_origin(self):
        with pytest.raises(OriginSingularity):
            ks_forward(PhaseState(q=(0.0, 0.0), p=(1.0, 0.0)))

    def test_inverse_branch_cut(self):
        with pytest.raises(BranchViolation):
            ks_inverse(PhaseState(q=(1.0, 0.0), p=(0.0, 1.0)))

    def test_planar_only(self):
        with pytest.raises(UnsupportedDimension):
            ks_forward(PhaseState(q=(1.0, 0.0, 0.0), p=(0.0, 1.0, 0.0)))

    def test_identity_keeps_label(self):
        ham = hamiltonian_observable(build("curved-kc", 2))
        assert map_observable(IDENTITY, ham).label == "H"


class TestKeplerSide:

    def test_curved_kc_becomes_flat_kepler(self):
        spec = build("curved-kc", 2, alpha=1.0)
        ham = hamiltonian_observable(spec)
        for x in sample_branch_points(100, seed=4):
            assert _close(flat_kepler(1.0)(ks_forward(x)), ham(x))

    def test_example_point(self):
        x = PhaseState(q=(1.0, 0.0), p=(0.0, 1.0))
        assert flat_kepler(1.0)(ks_forward(x)) == pytest.approx(1.5)

    def test_fradkin_tensor_images(self):
        spec = build("curved-kc", 2, alpha=0.8)
        images = kepler_side_images(0.8)
        catalog = {
            "St_1_1": build_observable(spec, ObservableKind.curved_fradkin(1, 1)),
            "St_2_2": build_observable(spec, ObservableKind.curved_fradkin(2, 2)),
            "St_1_2": build_observable(spec, ObservableKind.curved_fradkin(1, 2)),
            "L2": build_observable(spec, ObservableKind.total_l2()),
        }
        for label, obs in catalog.items():
            pulled = map_observable(KS_FORWARD, images[label])
            for x in sample_branch_points(30, seed=5):
                assert _close(pulled(x), obs(x), tol=1e-11)

    def test_diagonal_collapse(self):
        spec = build("curved-kc", 2, alpha=1.3)
        s11 = build_observable(spec, ObservableKind.curved_fradkin(1, 1))
        s22 = build_observable(spec, ObservableKind.curved_fradkin(2, 2))
        for x in _points(spec):
            assert _close(s22(x), -s11(x) - 2.0 * 1.3)


class TestOscillatorSide:

    def test_spherical_becomes_flat_oscillator(self):
        spec = build("spherical-osc", 2, alpha=0.5)
        ham = hamiltonian_observable(spec)
        for x in sample_branch_points(100, seed=6):
            assert _close(flat_oscillator(0.5)(ks_inverse(x)), ham(x), tol=1e-9)

    def test_lrl_images(self):
        spec = build("spherical-osc", 2, alpha=0.5)
        images = oscillator_side_images(0.5)
        for i in (1, 2):
            catalog = build_observable(spec, ObservableKind.curved_lrl(i))
            pulled = map_observable(KS_INVERSE, images[f"St_{i}"])
            for x in sample_branch_points(30, seed=7):
                assert _close(pulled(x), catalog(x), tol=1e-9)

    def test_flat_fradkin_reconstruction(self):
        spec = build("spherical-osc", 2, alpha=0.5)
        ham = hamiltonian_observable(spec)
        s1 = build_observable(spec, ObservableKind.curved_lrl(1))
        s2 = build_observable(spec, ObservableKind.curved_lrl(2))
        images = oscillator_side_images(0.5)
        for x in sample_branch_points(30, seed=8):
            y = ks_inverse(x)
            assert _close(2.0 * (ham(x) + s1(x)), images["SU_1_1"](y), tol=1e-9)
            assert _close(2.0 * (ham(x) - s1(x)), images["SU_2_2"](y), tol=1e-9)
            assert _close(2.0 * s2(x), images["SU_1_2"](y), tol=1e-9)

    def test_l2_image(self):
        spec = build("spherical-osc", 2, alpha=0.5)
        l2 = build_observable(spec, ObservableKind.total_l2())
        pulled = map_observable(KS_INVERSE, oscillator_side_images(0.5)["L2"])
        for x in sample_branch_points(30, seed=9):
            assert _close(pulled(x), l2(x), tol=1e-9)
