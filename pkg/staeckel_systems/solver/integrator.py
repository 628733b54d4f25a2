"""Trajectory integration of Hamilton's equations with drift monitoring.

The kinetic term of the curved systems depends on position, so the
Hamiltonians are not separable and explicit splitting schemes do not
apply. The default integrator is the adaptive Dormand-Prince 5(4) pair
behind ``scipy.integrate.solve_ivp(method="RK45")``; an implicit-midpoint
scheme is available for long fixed-step runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import fsolve

from staeckel_systems.autodiff.dual import Dual, seed_duals
from staeckel_systems.autodiff.observable import Observable
from staeckel_systems.errors import BoundaryHit, InvalidParameter, StepFailure
from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.system import SystemSpec


@dataclass
class Trajectory:
    """Accepted integrator steps.

    Attributes:
        times: Strictly increasing times, starting at 0.
        states: Phase-space state at each time.
        series: Observable label -> values along the trajectory ("H" always present).
        method: Integrator used.
    """
    times: list[float] = field(default_factory=list)
    states: list[PhaseState] = field(default_factory=list)
    series: dict[str, list[float]] = field(default_factory=dict)
    method: str = "rk45"

    @property
    def final(self) -> PhaseState:
        return self.states[-1]

    def __len__(self) -> int:
        return len(self.times)


def hamilton_vector_field(spec: SystemSpec):
    """(t, y) -> (∂ℋ/∂p, −∂ℋ/∂q) from one dual-number sweep."""
    n = spec.dim
    ham = spec.hamiltonian

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        seeds = seed_duals(np.asarray(y, dtype=float))
        out = ham(seeds[:n], seeds[n:])
        grad = out.tangent if isinstance(out, Dual) else np.zeros(2 * n)
        return np.concatenate([grad[n:], -grad[:n]])

    return rhs


def boundary_distance(spec: SystemSpec, r: float) -> float:
    """Distance from r to the nearest singular endpoint (inf when none)."""
    dom = spec.radial_domain
    dist = math.inf
    if not dom.lower_closed:
        dist = r - dom.lower
    if math.isfinite(dom.upper):
        dist = min(dist, dom.upper - r)
    return dist


def _boundary_event(spec: SystemSpec, margin: float):
    n = spec.dim

    def event(t: float, y: np.ndarray) -> float:
        return boundary_distance(spec, float(np.linalg.norm(y[:n]))) - margin

    event.terminal = True
    event.direction = -1
    return event


def _record(traj: Trajectory, observables: list[Observable], t: float, x: PhaseState) -> None:
    traj.times.append(float(t))
    traj.states.append(x)
    for obs in observables:
        traj.series[obs.label].append(obs(x))


def _new_trajectory(observables: list[Observable], method: str) -> Trajectory:
    return Trajectory(series={o.label: [] for o in observables}, method=method)


def integrate(
    spec: SystemSpec,
    x0: PhaseState,
    t_end: float,
    tol: float = 1e-10,
    observables: list[Observable] | None = None,
    method: str = "rk45",
    step: float | None = None,
    boundary_margin: float = 1e-3,
) -> Trajectory:
    """Integrate q̇ = ∂ℋ/∂p, ṗ = −∂ℋ/∂q from x0 up to t_end.

    Args:
        spec: System to integrate.
        x0: Admissible initial state.
        t_end: Final time (>= 0; 0 returns the single initial row).
        tol: Local relative and absolute tolerance ("rk45"), or solver
            tolerance of each implicit step ("midpoint").
        observables: Extra series to record besides ℋ.
        method: "rk45" (adaptive) or "midpoint" (fixed step, needs ``step``).
        step: Step size for "midpoint".
        boundary_margin: Abort when |q| gets this close to a singular endpoint.

    Returns:
        Trajectory with one row per accepted step.

    Raises:
        BoundaryHit: the state approached the domain boundary (partial trajectory attached).
        StepFailure: the requested tolerance could not be met.
    """
    if t_end < 0:
        raise InvalidParameter(f"t_end must be >= 0, got {t_end}")
    if not tol > 0:
        raise InvalidParameter(f"tol must be positive, got {tol}")
    spec.check_domain(x0)
    ham = Observable(label="H", dim=spec.dim, func=spec.hamiltonian, check=spec.check_domain)
    tracked = [ham] + [o for o in (observables or []) if o.label != "H"]
    traj = _new_trajectory(tracked, method)
    if boundary_distance(spec, x0.radius) <= boundary_margin:
        raise BoundaryHit(f"{spec.label}: initial state within {boundary_margin} of the boundary", traj)
    _record(traj, tracked, 0.0, x0)
    if t_end == 0:
        return traj
    if method == "rk45":
        return _integrate_rk45(spec, x0, t_end, tol, tracked, traj, boundary_margin)
    if method == "midpoint":
        if step is None or not step > 0:
            raise InvalidParameter("midpoint integration needs a positive step")
        return _integrate_midpoint(spec, x0, t_end, tol, step, tracked, traj, boundary_margin)
    raise InvalidParameter(f"unknown integration method '{method}'")


def _integrate_rk45(spec, x0, t_end, tol, tracked, traj, margin) -> Trajectory:
    events = []
    if math.isfinite(boundary_distance(spec, x0.radius)):
        events.append(_boundary_event(spec, margin))
    sol = solve_ivp(
        hamilton_vector_field(spec),
        (0.0, t_end),
        x0.as_array(),
        method="RK45",
        rtol=tol,
        atol=tol,
        events=events or None,
    )
    if sol.status == -1:
        raise StepFailure(f"{spec.label}: {sol.message}")
    for k in range(1, sol.t.size):
        _record(traj, tracked, sol.t[k], PhaseState.from_array(sol.y[:, k]))
    if sol.status == 1:
        raise BoundaryHit(
            f"{spec.label}: trajectory reached the boundary margin at t={sol.t[-1]:.6g}", traj,
        )
    return traj


def _integrate_midpoint(spec, x0, t_end, tol, step, tracked, traj, margin) -> Trajectory:
    rhs = hamilton_vector_field(spec)
    steps = max(1, math.ceil(t_end / step))
    h = t_end / steps
    y = x0.as_array()
    for k in range(1, steps + 1):
        def residual(z, y=y):
            return z - y - h * rhs(0.0, 0.5 * (y + z))

        guess = y + h * rhs(0.0, y)
        z, info, ier, msg = fsolve(residual, guess, xtol=tol, full_output=True)
        if ier != 1:
            raise StepFailure(f"{spec.label}: implicit midpoint step {k} failed ({msg})")
        y = z
        x = PhaseState.from_array(y)
        if boundary_distance(spec, x.radius) <= margin:
            raise BoundaryHit(
                f"{spec.label}: trajectory reached the boundary margin at t={k * h:.6g}", traj,
            )
        _record(traj, tracked, k * h, x)
    return traj


def drift_report(traj: Trajectory, observables: list[Observable]) -> dict[str, float]:
    """Max over time of |S(t) − S(0)| / (1 + |S(0)|) per observable."""
    if not traj.states:
        raise InvalidParameter("drift_report needs a nonempty trajectory")
    out = {}
    for obs in observables:
        values = np.array([obs(x) for x in traj.states])
        out[obs.label] = float(np.max(np.abs(values - values[0])) / (1.0 + abs(values[0])))
    return out


def series_drift(traj: Trajectory) -> dict[str, float]:
    """Same measure as ``drift_report`` for the recorded series."""
    out = {}
    for label, values in traj.series.items():
        arr = np.asarray(values)
        out[label] = float(np.max(np.abs(arr - arr[0])) / (1.0 + abs(arr[0])))
    return out


def time_reversal_gap(
    spec: SystemSpec, x0: PhaseState, t_end: float, tol: float = 1e-10, method: str = "rk45",
    step: float | None = None,
) -> float:
    """Integrate forward, flip p, integrate again; max |x_back − x0|."""
    forward = integrate(spec, x0, t_end, tol, method=method, step=step)
    backward = integrate(spec, forward.final.reversed(), t_end, tol, method=method, step=step)
    return float(np.max(np.abs(backward.final.reversed().as_array() - x0.as_array())))
