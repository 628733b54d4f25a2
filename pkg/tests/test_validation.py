"""Tests for Poisson brackets, commutation suites, identities and the rank test."""

from __future__ import annotations

import pytest

from staeckel_systems.autodiff.observable import Observable
from staeckel_systems.config import Tolerances
from staeckel_systems.errors import InvalidParameter
from staeckel_systems.integrals.catalog import (
    build_observable,
    independent_set,
    sl2_generators,
    so_generators,
)
from staeckel_systems.integrals.kinds import ObservableKind
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.sampling import sample_points
from staeckel_systems.validation.brackets import (
    bracket_scale,
    fd_poisson_bracket,
    poisson_bracket,
)
from staeckel_systems.validation.commutation import (
    BracketCheck,
    algebra_suite,
    commutation_suite,
    jacobi_defect,
    run_checks,
)
from staeckel_systems.validation.independence import independence_rank
from staeckel_systems.validation.report import format_report
from staeckel_systems.validation.traces import (
    casimir_identities,
    check_identities,
    system_identities,
    trace_identity_check,
)

from conftest import ALL_SYSTEMS, build


# ── Helpers ──────────────────────────────────────────────────────────

def _failed(reports) -> list[str]:
    return [r.label for r in reports if not r.passed]


# ── Brackets ─────────────────────────────────────────────────────────

class TestPoissonBracket:

    def test_canonical_pair(self):
        q1 = Observable("q1", 2, lambda q, p: q[0])
        p1 = Observable("p1", 2, lambda q, p: p[0])
        x = PhaseState(q=(0.3, 0.4), p=(0.5, 0.6))
        assert poisson_bracket(q1, p1, x) == 1.0
        assert poisson_bracket(p1, q1, x) == -1.0

    def test_sl2_pair(self):
        minus, plus, _ = sl2_generators(build("free", 2))
        assert poisson_bracket(minus, plus, PhaseState(q=(1.0, 2.0), p=(3.0, 4.0))) == pytest.approx(44.0)

    def test_scale_bounds_summands(self):
        minus, plus, _ = sl2_generators(build("free", 2))
        # |2q_i||2p_i| summed, plus one
        assert bracket_scale(minus, plus, PhaseState(q=(1.0, 2.0), p=(3.0, 4.0))) == pytest.approx(45.0)

    def test_scale_bounds_bracket(self):
        spec = build("curved-kc", 3)
        ham = build_observable(spec, ObservableKind.hamiltonian())
        s12 = build_observable(spec, ObservableKind.curved_fradkin(1, 2))
        for x in sample_points(spec, 10, seed=2, r_min_margin=0.1):
            scale = bracket_scale(s12, ham, x)
            assert abs(poisson_bracket(s12, ham, x)) <= (scale - 1.0) * (1 + 1e-12)

    def test_finite_difference_oracle(self):
        spec = build("curved-kc", 3)
        ham = build_observable(spec, ObservableKind.hamiltonian())
        s11 = build_observable(spec, ObservableKind.curved_fradkin(1, 1))
        minus = build_observable(spec, ObservableKind.sl2_minus())
        for x in sample_points(spec, 5, seed=1, r_min_margin=0.3):
            for other in (s11, minus):
                gap = abs(fd_poisson_bracket(ham, other, x) - poisson_bracket(ham, other, x))
                assert gap <= 1e-6 * bracket_scale(ham, other, x)


# ── Commutation suites ───────────────────────────────────────────────

class TestCommutationSuite:

    @pytest.mark.parametrize("dim", [2, 3, 5])
    @pytest.mark.parametrize("name", ALL_SYSTEMS)
    def test_catalog_relations_hold(self, name, dim):
        reports = commutation_suite(build(name, dim), trials=10, seed=0)
        assert reports
        assert _failed(reports) == []

    @pytest.mark.parametrize("name", ["curved-kc", "spherical-osc", "flat-kc"])
    def test_relations_agree_with_oracle(self, name):
        reports = commutation_suite(build(name, 3), trials=30, seed=1, cross_check=True)
        assert _failed(reports) == []
        assert all(r.oracle_gap is not None for r in reports)
        assert max(r.oracle_gap for r in reports) <= 1e-5

    def test_taubnut_high_dimension(self):
        reports = commutation_suite(build("taubnut", 5, eta=-1.0, alpha=0.3), trials=20, seed=2)
        assert _failed(reports) == []

    def test_planar_darboux(self):
        reports = commutation_suite(build("darboux3", 2, **{"lambda": -0.4}), trials=30, seed=3)
        assert _failed(reports) == []

    def test_broken_relation_is_reported(self):
        spec = build("free", 2)
        minus, plus, _ = sl2_generators(spec)
        reports = run_checks([BracketCheck("{J-,J+}", minus, plus)], sample_points(spec, 5, 0, 0.1), 1e-9)
        assert not reports[0].passed

    def test_trials_must_be_positive(self):
        with pytest.raises(InvalidParameter):
            commutation_suite(build("free", 2), trials=0)


class TestAlgebras:

    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_structure_relations(self, dim):
        reports = algebra_suite(dim, trials=10, seed=dim)
        assert _failed(reports) == []

    def test_relation_count(self):
        # three so(4) relations per index triple, plus three sl(2) relations
        assert len(algebra_suite(4, trials=2)) == 3 * 4 + 3

    def test_jacobi_on_so3(self):
        gens = so_generators(build("free", 3))
        for x in sample_points(build("free", 3), 5, seed=4, r_min_margin=0.1):
            defect, scale = jacobi_defect(gens[(1, 2)], gens[(1, 3)], gens[(2, 3)], x)
            assert defect <= 1e-8 * scale

    def test_jacobi_on_sl2(self):
        spec = build("free", 2)
        minus, plus, three = sl2_generators(spec)
        for x in sample_points(spec, 5, seed=5, r_min_margin=0.1):
            defect, scale = jacobi_defect(minus, plus, three, x)
            assert defect <= 1e-8 * scale


# ── Identities ───────────────────────────────────────────────────────

class TestTraceIdentities:

    @pytest.mark.parametrize("dim", [2, 3, 5])
    @pytest.mark.parametrize("name", ALL_SYSTEMS)
    def test_identities_hold(self, name, dim):
        reports = trace_identity_check(build(name, dim), trials=30, seed=0)
        assert reports
        assert _failed(reports) == []

    def test_free_motion_has_two(self):
        assert len(system_identities(build("free", 3))) == 2

    def test_curved_kc_trace(self):
        spec = build("curved-kc", 4, alpha=1.7)
        (report,) = trace_identity_check(spec, trials=20)
        assert report.identity == "sum St_ii = -2 alpha"
        assert report.passed

    def test_spherical_example_point(self, radial_point3):
        spec = build("spherical-osc", 3, alpha=0.0)
        (ident,) = system_identities(spec)
        assert ident.lhs(radial_point3) == pytest.approx(0.25)
        assert ident.rhs(radial_point3) == pytest.approx(0.25)

    def test_wrong_identity_fails(self):
        spec = build("darboux3", 3)
        (ident,) = system_identities(spec)
        shifted = type(ident)(ident.label, ident.statement, ident.lhs, lambda x: ident.rhs(x) + 1.0)
        (report,) = check_identities([shifted], sample_points(spec, 5, 0, 0.1), 1e-10)
        assert not report.passed

    def test_casimirs(self):
        spec = build("free", 4)
        reports = check_identities(casimir_identities(spec), sample_points(spec, 20, 1, 0.1), 1e-10)
        assert len(reports) == 6
        assert _failed(reports) == []


# ── Independence ─────────────────────────────────────────────────────

class TestIndependence:

    def test_curved_kc_full_rank(self):
        report = independence_rank(build("curved-kc", 3), fixed_i=1, trials=30)
        assert report.passed
        assert report.expected_rank == 5
        assert report.typical_rank == 5

    def test_darboux_n4(self):
        report = independence_rank(build("darboux3", 4), fixed_i=2, trials=20, seed=3)
        assert report.passed
        assert report.typical_rank == 7

    def test_free_motion_uses_fradkin_set(self):
        report = independence_rank(build("free", 3), trials=20)
        assert report.passed
        assert report.labels[-1] == "S_1_1"

    def test_duplicate_row_drops_rank(self):
        spec = build("curved-kc", 3)
        rows = independent_set(spec, 1)[:-1] + [build_observable(spec, ObservableKind.total_l2())]
        report = independence_rank(spec, trials=20, observables=rows)
        assert not report.passed
        assert report.typical_rank == 4

    def test_vanishing_jacobian(self):
        rows = [Observable.constant(1.0, 3, label=f"c{k}") for k in range(5)]
        report = independence_rank(build("curved-kc", 3), trials=10, observables=rows)
        assert report.ranks == [0] * 10
        assert report.worst_ratio == 0.0
        assert report.min_sigma == 0.0
        assert not report.passed

    def test_too_few_trials(self):
        with pytest.raises(InvalidParameter):
            independence_rank(build("curved-kc", 3), trials=5)

    def test_threshold_override(self):
        tolerances = Tolerances.from_overrides({"rank": 1e-6})
        report = independence_rank(build("spherical-osc", 3), trials=20, tolerances=tolerances)
        assert report.passed


# ── Text report ──────────────────────────────────────────────────────

class TestFormatReport:

    def test_sections(self):
        spec = build("curved-kc", 3)
        brackets = commutation_suite(spec, trials=5)
        traces = trace_identity_check(spec, trials=5)
        rank = independence_rank(spec, trials=10)
        text = format_report(spec, brackets, traces, rank)
        assert "VERIFICATION REPORT: curved-kc N=3" in text
        assert "## COMMUTATION" in text
        assert "All relations hold" in text
        assert "## IDENTITIES" in text
        assert "## INDEPENDENCE [ok]" in text

    def test_failures_listed(self):
        spec = build("free", 2)
        minus, plus, _ = sl2_generators(spec)
        brackets = run_checks([BracketCheck("{J-,J+}", minus, plus)], sample_points(spec, 3, 0, 0.1), 1e-9)
        text = format_report(spec, brackets, [])
        assert "1 failed" in text
        assert "{J-,J+}" in text
