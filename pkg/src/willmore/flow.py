"""Discrete gradient flow of the revolution Willmore energy.

The energy of a profile polyline (closed on the axis at both ends) is
discretized per interior vertex: the planar curvature is the signed
circumscribed-circle (Menger) curvature of the vertex triple, the
rotational curvature is ``sin(theta)/r`` with ``theta`` the angle of the
central chord, and the vertex mass is the trapezoidal share of the swept
area ``2 pi r ds``.  Pole vertices carry a mirror-ghost curvature term on
their adjacent half edge, which both sharpens the near-axis quadrature
and penalizes profiles meeting the axis at a slant.  Both curvature
formulas are exact on circular polylines, so a sampled round sphere
evaluates to 4 pi up to the trapezoidal area defect.

The flow is steepest descent of this discrete energy with respect to
node positions in the rotationally weighted inner product (mass weight
``2 pi r ds`` per node), with backtracking line search, so accepted steps
never increase the energy.  The descent direction is projected onto the
local chord normals: tangential node motion does not move the swept
surface but does perturb the discrete quadrature, and following it lets
the mesh degenerate; the projected direction still strictly descends
(its derivative along the energy gradient is minus the weighted square
of the normal speed).  The gradient is the exact derivative of the
discrete energy (automatic differentiation), verified against finite
differences in the test suite.  The discretization is a faithful
gradient flow of the discrete energy, not a convergence-certified scheme
for the smooth flow; all claims are about the discrete object.

Descending past a neck triggers the blow-up diagnostic: the profile near
the smallest neck radius, rescaled by that radius, is compared in sup
norm against the catenary ``cosh``; time rescales with the fourth power
of space, which the flow inherits exactly (one step on a rescaled profile
with a rescaled step size reproduces the rescaled step).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .profiles import CurveError, ProfileCurve, from_samples

__all__ = [
    "FlowControls",
    "FlowState",
    "NeckDiagnostic",
    "FlowTrajectory",
    "discrete_energy",
    "discrete_gradient",
    "node_masses",
    "flow_state_from_curve",
    "curve_from_flow_state",
    "polyline_turning_number",
    "flow_step",
    "flow_run",
    "neck_rescale",
]

FOUR_PI = 4.0 * math.pi

_jax_energy = None
_jax_grad = None


def _ensure_jax():
    global _jax_energy, _jax_grad
    if _jax_energy is not None:
        return
    import jax

    jax.config.update("jax_enable_x64", True)
    import jax.numpy as jnp

    def energy(nodes):
        r = nodes[:, 0]
        h = nodes[:, 1]
        e = nodes[1:] - nodes[:-1]
        ell = jnp.sqrt(jnp.sum(e * e, axis=1))
        d = nodes[2:] - nodes[:-2]
        dn = jnp.sqrt(jnp.sum(d * d, axis=1))
        cross = e[:-1, 0] * e[1:, 1] - e[:-1, 1] * e[1:, 0]
        kappa1 = 2.0 * cross / (ell[:-1] * ell[1:] * dn)
        kappa2 = (d[:, 1] / dn) / r[1:-1]
        mean = 0.5 * (kappa1 + kappa2)
        mass = jnp.pi * r[1:-1] * (ell[:-1] + ell[1:])
        m_first = 0.25 * jnp.pi * r[1] * ell[0]
        m_last = 0.25 * jnp.pi * r[-2] * ell[-1]
        mass = mass.at[0].add(-m_first)
        mass = mass.at[-1].add(-m_last)
        k_first = 2.0 * (h[1] - h[0]) / (ell[0] * ell[0])
        k_last = 2.0 * (h[-2] - h[-1]) / (ell[-1] * ell[-1])
        return (jnp.sum(mean * mean * mass)
                + k_first * k_first * m_first + k_last * k_last * m_last)

    _jax_energy = jax.jit(energy)
    _jax_grad = jax.jit(jax.grad(energy))


def discrete_energy(nodes: np.ndarray) -> float:
    """Discrete Willmore energy of an axis-closed profile polyline."""
    _ensure_jax()
    return float(_jax_energy(np.asarray(nodes, dtype=float)))


def discrete_gradient(nodes: np.ndarray) -> np.ndarray:
    """Exact gradient of the discrete energy; pole radii are constrained
    to the axis, so their radial components are projected out."""
    _ensure_jax()
    g = np.array(_jax_grad(np.asarray(nodes, dtype=float)), dtype=float, copy=True)
    g[0, 0] = 0.0
    g[-1, 0] = 0.0
    return g


def node_masses(nodes: np.ndarray) -> np.ndarray:
    """Rotational mass weight 2 pi r ds per node (pole nodes get their
    ghost-term half-edge share)."""
    r = nodes[:, 0]
    ell = np.hypot(*(nodes[1:] - nodes[:-1]).T)
    mass = np.empty(nodes.shape[0])
    mass[1:-1] = math.pi * r[1:-1] * (ell[:-1] + ell[1:])
    m_first = 0.25 * math.pi * r[1] * ell[0]
    m_last = 0.25 * math.pi * r[-2] * ell[-1]
    mass[1] -= m_first
    mass[-2] -= m_last
    mass[0] = m_first
    mass[-1] = m_last
    return mass


def chord_normals(nodes: np.ndarray) -> np.ndarray:
    """Unit normals from the central chords (one-sided at the poles)."""
    pts = np.asarray(nodes, dtype=float)
    chords = np.empty_like(pts)
    chords[1:-1] = pts[2:] - pts[:-2]
    chords[0] = pts[1] - pts[0]
    chords[-1] = pts[-1] - pts[-2]
    lengths = np.hypot(chords[:, 0], chords[:, 1])
    normals = np.column_stack([-chords[:, 1], chords[:, 0]]) / lengths[:, None]
    return normals


def descent_velocity(nodes: np.ndarray) -> np.ndarray:
    """Mass-weighted steepest-descent velocity, projected onto the chord
    normals; pole nodes move along the axis only."""
    grad = discrete_gradient(nodes)
    masses = node_masses(nodes)
    raw = -grad / masses[:, None]
    normals = chord_normals(nodes)
    speed = np.sum(raw * normals, axis=1)
    velocity = speed[:, None] * normals
    velocity[0, 0] = 0.0
    velocity[-1, 0] = 0.0
    return velocity


def polyline_turning_number(nodes: np.ndarray) -> float:
    """Turning number from the chord tangents of the polyline."""
    pts = np.asarray(nodes, dtype=float)
    chords = np.empty_like(pts)
    chords[1:-1] = pts[2:] - pts[:-2]
    chords[0] = pts[1] - pts[0]
    chords[-1] = pts[-1] - pts[-2]
    theta = np.arctan2(chords[:, 1], chords[:, 0])
    jumps = (np.diff(theta) + math.pi) % (2.0 * math.pi) - math.pi
    return float(np.sum(jumps) / (2.0 * math.pi))


# ---------------------------------------------------------------------------
# state


@dataclass(frozen=True)
class FlowControls:
    """Step-size, redistribution, and termination controls."""

    dt_init: float | None = None
    dt_growth: float = 1.3
    dt_shrink: float = 0.5
    max_retries: int = 60
    descent_slack: float = 1e-12
    redistribute_ratio: float = 3.0
    floor: float | None = None          # absolute neck-radius floor
    floor_rel: float = 1e-3             # default floor: 1e-3 x initial diameter
    velocity_tol: float = 1e-4          # convergence: weighted L2 normal speed
    energy_tol: float = 1e-3            # convergence: |W - 4 pi|
    max_steps: int = 10_000
    log_every: int = 50
    checkpoint_every: int = 0
    track_turning: bool = False
    neck_window: float = 1.5            # window half-width, units of r_min
    residual_threshold: float = 0.5


@dataclass(frozen=True)
class FlowState:
    """Immutable snapshot of the discrete flow."""

    nodes: np.ndarray
    time: float
    dt: float
    energy: float
    step_index: int
    status: str = "ok"                  # ok | stalled | singular
    r_min: float | None = None
    neck_index: int | None = None
    history: tuple = ()                 # recent (time, energy, r_min) triples
    normal_speed: float = math.nan
    turning_number: float = math.nan

    @property
    def radii(self) -> np.ndarray:
        return self.nodes[:, 0]


@dataclass(frozen=True)
class NeckDiagnostic:
    """Catenoid comparison of the rescaled neck window."""

    residual: float
    r_min: float
    window: float
    clipped: bool
    rescaled_radius: np.ndarray
    rescaled_height: np.ndarray
    scale_trend: float                  # sign of recent d(r_min)/dt
    is_neck: bool


@dataclass
class FlowTrajectory:
    termination: str                    # converged | singular-stop | budget | stalled
    log: list
    final_state: FlowState
    final_diagnostic: NeckDiagnostic | None
    turning_numbers: list
    checkpoints: list


def _neck_location(r: np.ndarray) -> int | None:
    interior = r[1:-1]
    local = np.flatnonzero((interior[1:-1] < interior[:-2])
                           & (interior[1:-1] <= interior[2:])) + 2
    if local.size == 0:
        return None
    return int(local[np.argmin(r[local])])


def flow_state_from_curve(curve: ProfileCurve, ctrl: FlowControls | None = None) -> FlowState:
    if not all(curve.closed_on_axis):
        raise CurveError("the flow runs on profiles closed on the axis at both ends")
    ctrl = ctrl or FlowControls()
    nodes = curve.points.copy()
    nodes[0, 0] = 0.0
    nodes[-1, 0] = 0.0
    energy = discrete_energy(nodes)
    ell_min = float(np.min(np.hypot(*(nodes[1:] - nodes[:-1]).T)))
    dt = ctrl.dt_init if ctrl.dt_init is not None else 1e-2 * ell_min ** 4
    idx = _neck_location(nodes[:, 0])
    r_min = float(nodes[idx, 0]) if idx is not None else None
    return FlowState(nodes=nodes, time=0.0, dt=dt, energy=energy, step_index=0,
                     r_min=r_min, neck_index=idx,
                     history=((0.0, energy, r_min),),
                     turning_number=polyline_turning_number(nodes))


def curve_from_flow_state(state: FlowState, name: str = "flow") -> ProfileCurve:
    return from_samples(state.nodes[:, 0], state.nodes[:, 1],
                        closed_on_axis=(True, True), name=name)


def _redistribute(nodes: np.ndarray) -> np.ndarray:
    from scipy.interpolate import CubicSpline

    seg = np.hypot(*(nodes[1:] - nodes[:-1]).T)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    target = np.linspace(0.0, cum[-1], nodes.shape[0])
    spl_r = CubicSpline(cum, nodes[:, 0])
    spl_h = CubicSpline(cum, nodes[:, 1])
    out = np.column_stack([spl_r(target), spl_h(target)])
    out[0] = nodes[0]
    out[-1] = nodes[-1]
    out[0, 0] = 0.0
    out[-1, 0] = 0.0
    return out


def flow_step(state: FlowState, ctrl: FlowControls | None = None) -> FlowState:
    """One accepted descent step (with backtracking), followed by optional
    arclength redistribution.

    The accepted step satisfies ``W(new) <= W(old) + descent_slack``;
    otherwise the step size is halved and retried.  Exhausted retries mark
    the state ``stalled``; a neck radius below the floor marks it
    ``singular``.
    """
    ctrl = ctrl or FlowControls()
    nodes = state.nodes
    energy = state.energy
    velocity = descent_velocity(nodes)
    masses = node_masses(nodes)
    speed2 = velocity[:, 0] ** 2 + velocity[:, 1] ** 2
    vmax = float(math.sqrt(np.sum(masses * speed2) / np.sum(masses)))
    dt = state.dt
    slack = ctrl.descent_slack
    accepted = None
    for _ in range(ctrl.max_retries):
        trial = nodes + dt * velocity
        trial[0, 0] = 0.0
        trial[-1, 0] = 0.0
        if np.any(trial[1:-1, 0] <= 0.0):
            dt *= ctrl.dt_shrink
            continue
        e_new = discrete_energy(trial)
        if e_new <= energy + slack:
            accepted = (trial, e_new, dt)
            break
        dt *= ctrl.dt_shrink
    if accepted is None:
        return replace(state, status="stalled", normal_speed=vmax)
    trial, e_new, dt_used = accepted

    seg = np.hypot(*(trial[1:] - trial[:-1]).T)
    if float(seg.max() / seg.min()) > ctrl.redistribute_ratio:
        moved = _redistribute(trial)
        e_moved = discrete_energy(moved)
        if e_moved <= e_new + 10.0 * slack:
            trial, e_new = moved, e_moved

    idx = _neck_location(trial[:, 0])
    r_min = float(trial[idx, 0]) if idx is not None else None
    time = state.time + dt_used
    history = (state.history + ((time, e_new, r_min),))[-16:]
    status = "ok"
    floor = ctrl.floor
    if floor is None:
        r0, h0 = state.nodes[:, 0], state.nodes[:, 1]
        floor = ctrl.floor_rel * math.hypot(r0.max() - r0.min(), h0.max() - h0.min())
    if r_min is not None and r_min < floor:
        status = "singular"
    turning = polyline_turning_number(trial) if ctrl.track_turning else math.nan
    return FlowState(nodes=trial, time=time, dt=dt_used * ctrl.dt_growth,
                     energy=e_new, step_index=state.step_index + 1, status=status,
                     r_min=r_min, neck_index=idx, history=history,
                     normal_speed=vmax, turning_number=turning)


def neck_rescale(state: FlowState, window: float | None = None,
                 residual_threshold: float = 0.5) -> NeckDiagnostic:
    """Rescale the profile near the smallest neck radius and compare it
    against the catenary ``cosh`` in sup norm.

    ``window`` is an arclength half-width; by default 1.5 times the neck
    radius.  Falls back to the smallest interior radius if the profile has
    no interior neck (a sphere), in which case the residual is large and
    the window is flagged as not a neck.
    """
    nodes = state.nodes
    idx = state.neck_index
    if idx is None:
        idx = int(np.argmin(nodes[1:-1, 0])) + 1
    r_min = float(nodes[idx, 0])
    if r_min <= 0.0:
        raise CurveError("neck radius vanished; nothing to rescale")
    if window is None:
        window = 1.5 * r_min
    seg = np.hypot(*(nodes[1:] - nodes[:-1]).T)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    sel = np.abs(cum - cum[idx]) <= window
    clipped = bool(sel[0] or sel[-1])
    rho = nodes[sel, 0] / r_min
    eta = (nodes[sel, 1] - nodes[idx, 1]) / r_min
    residual = float(np.max(np.abs(rho - np.cosh(eta))))
    trend = 0.0
    r_hist = [entry[2] for entry in state.history if entry[2] is not None]
    if len(r_hist) >= 2:
        trend = float(np.sign(r_hist[-1] - r_hist[0]))
    return NeckDiagnostic(residual=residual, r_min=r_min, window=window,
                          clipped=clipped, rescaled_radius=rho, rescaled_height=eta,
                          scale_trend=trend,
                          is_neck=bool(residual < residual_threshold))


def flow_run(init: ProfileCurve, ctrl: FlowControls | None = None) -> FlowTrajectory:
    """Run the flow until convergence to the round-sphere energy level,
    a neck below the floor, a stall, or the step budget."""
    ctrl = ctrl or FlowControls()
    state = flow_state_from_curve(init, ctrl)
    log = []
    turning = []
    checkpoints = []

    def log_row(st: FlowState):
        residual = math.nan
        if st.r_min is not None:
            residual = neck_rescale(st, residual_threshold=ctrl.residual_threshold).residual
        log.append({"step": st.step_index, "t": st.time, "W": st.energy,
                    "r_min": st.r_min if st.r_min is not None else math.nan,
                    "residual": residual})

    log_row(state)
    termination = "budget"
    for _ in range(ctrl.max_steps):
        state = flow_step(state, ctrl)
        if ctrl.track_turning:
            turning.append(state.turning_number)
        if ctrl.checkpoint_every and state.step_index % ctrl.checkpoint_every == 0:
            checkpoints.append(state)
        if state.step_index % ctrl.log_every == 0:
            log_row(state)
        if state.status == "stalled":
            termination = "stalled"
            break
        if state.status == "singular":
            termination = "singular-stop"
            break
        if (state.normal_speed <= ctrl.velocity_tol
                and abs(state.energy - FOUR_PI) <= ctrl.energy_tol):
            termination = "converged"
            break
    if log[-1]["step"] != state.step_index:
        log_row(state)
    diagnostic = None
    if state.r_min is not None:
        diagnostic = neck_rescale(state, residual_threshold=ctrl.residual_threshold)
    return FlowTrajectory(termination=termination, log=log, final_state=state,
                          final_diagnostic=diagnostic, turning_numbers=turning,
                          checkpoints=checkpoints)
