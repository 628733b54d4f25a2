"""CLI entry point for the Stäckel-transform superintegrability toolkit."""

from __future__ import annotations

import math
import sys
from contextlib import contextmanager

import click
import numpy as np

from staeckel_systems.config import RunConfig, Tolerances, parse_pairs
from staeckel_systems.errors import (
    BoundaryHit,
    DomainViolation,
    EmptyDomain,
    IncompatibleKind,
    IndexOutOfRange,
    InvalidParameter,
    NotCurved,
    StepFailure,
    UnsupportedDimension,
)
from staeckel_systems.geometry.metric import (
    conformal_factor,
    intrinsic_potentials,
    scalar_curvature_closed,
    scalar_curvature_oracle,
)
from staeckel_systems.integrals.catalog import free_independent_sets, independent_set
from staeckel_systems.io.csv_writer import geometry_frame, trajectory_frame, write_csv
from staeckel_systems.io.json_report import (
    all_passed,
    build_report,
    check_from_rank,
    checks_from_brackets,
    checks_from_quantum,
    checks_from_traces,
    write_json,
)
from staeckel_systems.io.workbook_writer import write_report_xlsx
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.system import SystemId
from staeckel_systems.quantum.systems import QUANTUM_SYSTEMS, build_quantum_system, quantum_verdicts
from staeckel_systems.solver.integrator import integrate as integrate_trajectory
from staeckel_systems.solver.integrator import series_drift
from staeckel_systems.validation.commutation import commutation_suite
from staeckel_systems.validation.independence import independence_rank
from staeckel_systems.validation.report import format_report
from staeckel_systems.validation.traces import trace_identity_check

EXIT_FAILED = 1
EXIT_CONFIG = 2

CONFIG_ERRORS = (
    InvalidParameter, UnsupportedDimension, IncompatibleKind, IndexOutOfRange, EmptyDomain, NotCurved,
    DomainViolation,
)

SYSTEM_CHOICE = click.Choice([m.value for m in SystemId])
QUANTUM_CHOICE = click.Choice([m.value for m in QUANTUM_SYSTEMS])


def _log(message: str) -> None:
    click.echo(message, err=True)


@contextmanager
def _config_errors():
    """Exit with code 2 on invalid configuration."""
    try:
        yield
    except CONFIG_ERRORS as exc:
        _log(f"Error: {exc}")
        sys.exit(EXIT_CONFIG)


def _parse_vector(ctx, param, value: str | None) -> tuple[float, ...] | None:
    if value is None:
        return None
    try:
        return tuple(float(v) for v in value.split(","))
    except ValueError:
        raise click.BadParameter(f"'{value}' is not a comma-separated list of numbers")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
        _log(f"Written to: {output}")
    else:
        click.echo(text)


@click.group()
def cli():
    """Verify Stäckel-transformed superintegrable systems."""
    pass


@cli.command()
@click.option("--system", "system", type=SYSTEM_CHOICE, required=True, help="Catalog system")
@click.option("--dim", type=int, required=True, help="Degrees of freedom N")
@click.option("--param", "params", multiple=True, help="Coupling as name=value (repeatable)")
@click.option("--trials", default=100, show_default=True, help="Sampled points per suite")
@click.option("--seed", default=0, show_default=True, envvar="STAECKEL_SEED",
              help="Sampling seed (default from STAECKEL_SEED)")
@click.option("--tol", "tols", multiple=True, help="Tolerance override as name=value")
@click.option("--fixed-index", default=1, show_default=True,
              help="Fradkin diagonal / LRL component closing the independent set")
@click.option("--rank-trials", default=50, show_default=True, help="Samples for the rank test")
@click.option("--cross-check/--no-cross-check", default=True, show_default=True,
              help="Compare exact brackets with finite differences")
@click.option("--output", "-o", type=click.Path(), default=None, help="JSON report path (default: stdout)")
@click.option("--xlsx", type=click.Path(), default=None, help="Also write the report as a workbook")
def verify(system, dim, params, trials, seed, tols, fixed_index, rank_trials, cross_check, output, xlsx):
    """Run commutation, identity and independence suites for one system."""
    with _config_errors():
        config = RunConfig.from_cli(system, dim, params, seed, trials, tols, output)
        spec = config.build_spec()
        tol = config.tolerances
        _log(f"System: {spec.label} N={spec.dim}")

        _log("\n--- Commutation ---")
        brackets = commutation_suite(
            spec, tol=tol.commutation, trials=trials, seed=seed,
            cross_check=cross_check, tolerances=tol,
        )
        _log(f"Checked {len(brackets)} relations at {trials} points")

        _log("\n--- Identities ---")
        traces = trace_identity_check(spec, trials=trials, seed=seed, tol=tol.trace, tolerances=tol)

        _log("\n--- Independence ---")
        rank = independence_rank(spec, fixed_index, trials=max(rank_trials, 10), seed=seed, tolerances=tol)

    _log(format_report(spec, brackets, traces, rank))
    checks = (
        checks_from_brackets(brackets, tol.oracle if cross_check else None)
        + checks_from_traces(traces)
        + [check_from_rank(rank)]
    )
    report = build_report(
        spec.label, spec.dim, spec.params.as_dict(), seed, trials, checks,
        notes=[f"tolerances: {tol.as_dict()}"],
    )
    _emit(write_json(report), output)
    if xlsx:
        _log(f"Workbook written to: {write_report_xlsx(xlsx, report)}")
    if not all_passed(report):
        sys.exit(EXIT_FAILED)


@cli.command()
@click.option("--system", "system", type=SYSTEM_CHOICE, required=True, help="Catalog system")
@click.option("--dim", type=int, required=True, help="Degrees of freedom N")
@click.option("--param", "params", multiple=True, help="Coupling as name=value (repeatable)")
@click.option("--q", "q0", callback=_parse_vector, required=True, help="Initial positions, e.g. 1,0,0")
@click.option("--p", "p0", callback=_parse_vector, required=True, help="Initial momenta, e.g. 0,0.5,0.3")
@click.option("--t-end", type=float, required=True, help="Final time")
@click.option("--tol", "tols", multiple=True, help="Tolerance override as name=value")
@click.option("--method", type=click.Choice(["rk45", "midpoint"]), default="rk45", show_default=True)
@click.option("--step", type=float, default=None, help="Fixed step for --method midpoint")
@click.option("--fixed-index", default=1, show_default=True,
              help="Fradkin diagonal / LRL component in the tracked set")
@click.option("--output", "-o", type=click.Path(), default=None, help="CSV path (default: stdout)")
def integrate(system, dim, params, q0, p0, t_end, tols, method, step, fixed_index, output):
    """Integrate a trajectory and tabulate the independent integrals along it."""
    with _config_errors():
        config = RunConfig.from_cli(system, dim, params, tol_pairs=tols, output=output)
        spec = config.build_spec()
        x0 = PhaseState(q0, p0)
        if x0.dim != spec.dim:
            raise InvalidParameter(f"initial state has N={x0.dim}, system has N={spec.dim}")
        spec.check_domain(x0)
        if spec.id == SystemId.FREE_EUCLIDEAN:
            tracked = free_independent_sets(spec, fixed_index)[0]
        else:
            tracked = independent_set(spec, fixed_index)
    tol = config.tolerances

    _log(f"Integrating {spec.label} N={spec.dim} to t={t_end:g} ({method}, tol={tol.integrator:g})")
    status = 0
    try:
        traj = integrate_trajectory(
            spec, x0, t_end, tol.integrator, observables=tracked, method=method, step=step,
            boundary_margin=tol.boundary_margin,
        )
    except BoundaryHit as exc:
        _log(f"Boundary hit: {exc}")
        traj = exc.partial
        status = EXIT_FAILED
    except StepFailure as exc:
        _log(f"Step failure: {exc}")
        sys.exit(EXIT_FAILED)
    except InvalidParameter as exc:
        _log(f"Error: {exc}")
        sys.exit(EXIT_CONFIG)

    drift = series_drift(traj) if len(traj) else None
    if drift:
        worst = max(drift, key=drift.get)
        _log(f"{len(traj)} steps; worst drift {worst}: {drift[worst]:.3e}")
    _emit(write_csv(trajectory_frame(traj, spec.dim, drift)), output)
    if status:
        sys.exit(status)


@cli.command()
@click.option("--system", "system", type=SYSTEM_CHOICE, required=True, help="Curved catalog system")
@click.option("--dim", type=int, required=True, help="Degrees of freedom N")
@click.option("--param", "params", multiple=True, help="Coupling as name=value (repeatable)")
@click.option("--r", "radii", type=float, multiple=True, help="Radius to tabulate (repeatable)")
@click.option("--r-min", type=float, default=None, help="Grid start (with --r-max)")
@click.option("--r-max", type=float, default=None, help="Grid end (with --r-min)")
@click.option("--points", default=50, show_default=True, help="Grid size for --r-min/--r-max")
@click.option("--tol", "tols", multiple=True, help="Tolerance override as name=value")
@click.option("--output", "-o", type=click.Path(), default=None, help="CSV path (default: stdout)")
def geometry(system, dim, params, radii, r_min, r_max, points, tols, output):
    """Tabulate conformal factor, scalar curvature and intrinsic potentials."""
    with _config_errors():
        config = RunConfig.from_cli(system, dim, params, tol_pairs=tols, output=output)
        spec = config.build_spec()
        profile = conformal_factor(spec)
        grid = list(radii)
        if r_min is not None and r_max is not None:
            if points < 1:
                raise InvalidParameter(f"points must be >= 1, got {points}")
            grid += [float(r) for r in np.linspace(r_min, r_max, points)]
        if not grid:
            raise InvalidParameter("give --r values or both --r-min and --r-max")
    step = config.tolerances.curvature_step

    rows = []
    for r in grid:
        if not spec.radial_domain.contains(r):
            _log(f"Warning: r={r:g} outside {spec.radial_domain.describe()}, skipped")
            continue
        row = {"r": r, "f": profile.value(r), "R_closed": scalar_curvature_closed(spec, r)}
        try:
            row["R_oracle"] = scalar_curvature_oracle(profile, spec.dim, r, step)
        except DomainViolation as exc:
            _log(f"Warning: oracle unavailable at r={r:g} ({exc})")
            row["R_oracle"] = math.nan
        try:
            row["u_kc"], row["u_o"] = intrinsic_potentials(spec, r)
        except DomainViolation as exc:
            _log(f"Warning: {exc}")
            row["u_kc"] = row["u_o"] = math.nan
        rows.append(row)
    _log(f"Tabulated {len(rows)} of {len(grid)} radii for {spec.label} N={spec.dim}")
    _emit(write_csv(geometry_frame(rows)), output)


@cli.command("quantum-verify")
@click.option("--system", "system", type=QUANTUM_CHOICE, required=True, help="Curved catalog system")
@click.option("--dim", type=int, required=True, help="Degrees of freedom N (2 or 3)")
@click.option("--points", default=20, show_default=True, help="Random evaluation points per identity")
@click.option("--seed", default=0, show_default=True, envvar="STAECKEL_SEED",
              help="Evaluation seed (default from STAECKEL_SEED)")
@click.option("--tol", "tols", multiple=True, help="Tolerance override as name=value")
@click.option("--output", "-o", type=click.Path(), default=None, help="JSON report path (default: stdout)")
@click.option("--xlsx", type=click.Path(), default=None, help="Also write the report as a workbook")
def quantum_verify(system, dim, points, seed, tols, output, xlsx):
    """Check quantum commutators and sum identities by randomized zero testing."""
    with _config_errors():
        tolerances = Tolerances.from_overrides(parse_pairs(tols, what="tolerance"))
        # couplings are symbolic in the operators; these only satisfy catalog validation
        config = RunConfig(system=system, dim=dim, params={"lam": 1.0, "eta": 1.0})
        spec = config.build_spec()
        _log(f"Building quantum operators for {spec.label} N={spec.dim}")
        qsys = build_quantum_system(spec)
        verdicts = quantum_verdicts(qsys, points, seed, tolerances.zero_test)

    for v in verdicts:
        _log(f"  [{'ok' if v.passed else 'FAIL'}] {v.name}: {v.max_residual:.3e}")
    report = build_report(
        spec.label, spec.dim, {}, seed, points, checks_from_quantum(verdicts),
        notes=[
            "couplings alpha, lambda, eta and hbar are symbolic",
            "algebraic independence of the quantum observables is not certified",
        ],
    )
    _emit(write_json(report), output)
    if xlsx:
        _log(f"Workbook written to: {write_report_xlsx(xlsx, report)}")
    if not all_passed(report):
        sys.exit(EXIT_FAILED)


if __name__ == "__main__":
    cli()
