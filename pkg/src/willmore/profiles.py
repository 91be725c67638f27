"""Generating curves of surfaces of revolution.

A profile curve ``c(s) = (r(s), h(s))`` in the half plane ``r >= 0`` sweeps
a surface when rotated about the ``h`` axis.  This module computes the
Willmore energy of that surface by quadrature, the continuous lift of the
profile's tangent angle and its turning number, and point multiplicities
(self-intersections of the profile, which become multiple covers of the
surface).

Curvature is evaluated in arc-length form, which stays valid at vertical
tangents where the curve is not a graph:

    kappa1 = (r' h'' - h' r'') / |c'|^3        (planar curvature)
    kappa2 = h' / (r |c'|)                     (rotational curvature)

with ``H = (kappa1 + kappa2) / 2`` and area element ``2 pi r |c'| ds``.
The 1/r factor in ``kappa2`` is removable where the curve meets the axis
perpendicularly; at such poles the surface is umbilic and the integrand
vanishes with the area weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import CubicSpline

from .quadrature import QuadratureResult, QuadratureSettings, integrate

__all__ = [
    "CurveError",
    "LiftError",
    "CurveGeometry",
    "ProfileCurve",
    "TangentLift",
    "EnergyEstimate",
    "piecewise_geometry",
    "sphere_profile",
    "circle_arc_profile",
    "catenary_profile",
    "from_samples",
    "scaled",
    "reversed_curve",
    "translated",
    "willmore_energy_revolution",
    "tangent_lift",
    "snap_half_integer",
    "tuple_point_multiplicity",
    "multiplicity_report",
    "liyau_check",
]

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


class CurveError(ValueError):
    """Raised for inadmissible profile curves."""


class LiftError(RuntimeError):
    """Raised when the discretization is too coarse for a valid angle lift."""


PlaneFn = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class CurveGeometry:
    """Analytic evaluators for a parametrized planar curve.

    Each callable maps an array of parameter values to a pair of arrays
    ``(r, h)`` (or their derivatives).  ``breaks`` lists interior parameter
    values where smoothness of the parametrization may drop; quadrature is
    split there.
    """

    point: PlaneFn
    velocity: PlaneFn
    acceleration: PlaneFn
    breaks: tuple[float, ...] = ()


def piecewise_geometry(segments: Sequence[tuple]) -> CurveGeometry:
    """Assemble a geometry from contiguous segments.

    ``segments`` is a sequence of ``(s_lo, s_hi, point, velocity,
    acceleration)`` tuples with ``s_hi`` of one segment equal to ``s_lo``
    of the next.
    """
    edges = np.array([seg[0] for seg in segments] + [segments[-1][1]], dtype=float)
    if np.any(np.diff(edges) <= 0.0):
        raise ValueError("segment parameter intervals must be increasing")

    def dispatch(slot: int) -> PlaneFn:
        def evaluate(s):
            s = np.atleast_1d(np.asarray(s, dtype=float))
            r = np.empty_like(s)
            h = np.empty_like(s)
            idx = np.clip(np.searchsorted(edges, s, side="right") - 1, 0, len(segments) - 1)
            for j, seg in enumerate(segments):
                mask = idx == j
                if np.any(mask):
                    rj, hj = seg[2 + slot](s[mask])
                    r[mask] = rj
                    h[mask] = hj
            return r, h

        return evaluate

    return CurveGeometry(dispatch(0), dispatch(1), dispatch(2), breaks=tuple(edges[1:-1]))


@dataclass(frozen=True)
class ProfileCurve:
    """Sampled generating curve of a surface of revolution.

    ``closed_on_axis`` records whether the start/end samples lie on the
    rotation axis (r = 0); at such ends the discrete tangent must be
    perpendicular to the axis.  ``geometry`` optionally carries analytic
    evaluators; without it, a cubic-spline interpolant of the samples is
    used for curvature.
    """

    s: np.ndarray
    r: np.ndarray
    h: np.ndarray
    closed_on_axis: tuple[bool, bool] = (False, False)
    geometry: CurveGeometry | None = None
    name: str = ""
    axis_contact_tol: float = 0.1

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        r = np.asarray(self.r, dtype=float)
        h = np.asarray(self.h, dtype=float)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "h", h)
        if s.ndim != 1 or s.shape != r.shape or s.shape != h.shape:
            raise CurveError("s, r, h must be 1-d arrays of equal length")
        if s.size < 3:
            raise CurveError("need at least 3 samples")
        if np.any(np.diff(s) <= 0.0):
            raise CurveError("parameter values must be strictly increasing")
        scale = self.diameter
        if np.any(r < -1e-12 * max(scale, 1.0)):
            raise CurveError("negative radius sample")
        dr = np.diff(r)
        dh = np.diff(h)
        step = np.hypot(dr, dh)
        if np.any(step == 0.0):
            idx = int(np.argmin(step))
            raise CurveError(f"degenerate (repeated) sample at index {idx}")
        lo, hi = self.closed_on_axis
        axis_tol = 1e-9 * max(scale, 1.0)
        if lo:
            if r[0] > axis_tol:
                raise CurveError("start flagged closed_on_axis but r[0] > 0")
            if abs(dh[0]) > self.axis_contact_tol * abs(dr[0]):
                raise CurveError("start tangent not perpendicular to the axis")
        if hi:
            if r[-1] > axis_tol:
                raise CurveError("end flagged closed_on_axis but r[-1] > 0")
            if abs(dh[-1]) > self.axis_contact_tol * abs(dr[-1]):
                raise CurveError("end tangent not perpendicular to the axis")
        interior = r[1:-1] if (lo or hi) else r
        if (lo or hi) and np.any(interior <= axis_tol):
            idx = int(np.argmin(interior)) + 1
            raise CurveError(f"interior sample {idx} touches the axis")

    @property
    def n_samples(self) -> int:
        return int(self.s.size)

    @property
    def diameter(self) -> float:
        return float(np.hypot(self.r.max() - self.r.min(), self.h.max() - self.h.min()))

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.r, self.h])


@dataclass(frozen=True)
class EnergyEstimate:
    """Willmore energy value with an a-posteriori quadrature estimate."""

    value: float
    error: float

    @classmethod
    def from_quadrature(cls, res: QuadratureResult) -> "EnergyEstimate":
        return cls(res.value, res.error)


@dataclass(frozen=True)
class TangentLift:
    """Continuous lift of the tangent angle along the profile."""

    s: np.ndarray
    values: np.ndarray
    turning_number: float

    def half_integer(self, tol: float = 0.05) -> float:
        return snap_half_integer(self.turning_number, tol)


# ---------------------------------------------------------------------------
# constructors


def circle_arc_profile(radius: float, center_h: float, t_start: float, t_end: float,
                       n: int = 2048, name: str = "") -> ProfileCurve:
    """Arc of the circle of given radius centered at (0, center_h).

    Parametrized as ``(radius sin t, center_h - radius cos t)`` so that
    ``t = 0`` is the bottom pole and ``t = pi`` the top pole.
    """
    if radius <= 0.0:
        raise CurveError("radius must be positive")
    R = float(radius)
    zc = float(center_h)
    t = np.linspace(t_start, t_end, n)

    def pt(tt):
        return R * np.sin(tt), zc - R * np.cos(tt)

    def vel(tt):
        return R * np.cos(tt), R * np.sin(tt)

    def acc(tt):
        return -R * np.sin(tt), R * np.cos(tt)

    r, h = pt(t)
    eps = 1e-12
    closed = (abs(math.sin(t_start)) < eps, abs(math.sin(t_end)) < eps)
    r = np.where(np.abs(r) < 1e-15 * R, 0.0, r)
    geom = CurveGeometry(pt, vel, acc)
    return ProfileCurve(t, r, h, closed_on_axis=closed, geometry=geom, name=name)


def sphere_profile(radius: float = 1.0, n: int = 2048, center_h: float = 0.0) -> ProfileCurve:
    """East half circle: the full generating curve of a round sphere."""
    return circle_arc_profile(radius, center_h, 0.0, math.pi, n=n, name="sphere")


def catenary_profile(lam: float, t_lo: float, t_hi: float, n: int = 2048) -> ProfileCurve:
    """Catenary ``(cosh(lam t)/lam, t)``, the profile of a catenoid of scale 1/lam."""
    if lam <= 0.0:
        raise CurveError("catenary scale parameter must be positive")
    lam = float(lam)
    t = np.linspace(t_lo, t_hi, n)

    def pt(tt):
        return np.cosh(lam * tt) / lam, tt.copy() if isinstance(tt, np.ndarray) else tt

    def vel(tt):
        return np.sinh(lam * tt), np.ones_like(tt)

    def acc(tt):
        return lam * np.cosh(lam * tt), np.zeros_like(tt)

    r, h = pt(t)
    geom = CurveGeometry(pt, vel, acc)
    return ProfileCurve(t, r, h, geometry=geom, name="catenary")


def from_samples(r, h, s=None, closed_on_axis=(False, False), name: str = "") -> ProfileCurve:
    """Profile from raw samples; curvature will come from a spline fit."""
    r = np.asarray(r, dtype=float)
    h = np.asarray(h, dtype=float)
    if s is None:
        steps = np.hypot(np.diff(r), np.diff(h))
        s = np.concatenate([[0.0], np.cumsum(steps)])
    return ProfileCurve(np.asarray(s, dtype=float), r, h,
                        closed_on_axis=tuple(closed_on_axis), name=name)


def _spline_geometry(curve: ProfileCurve) -> CurveGeometry:
    spl_r = CubicSpline(curve.s, curve.r)
    spl_h = CubicSpline(curve.s, curve.h)
    dr, dh = spl_r.derivative(), spl_h.derivative()
    ddr, ddh = spl_r.derivative(2), spl_h.derivative(2)
    return CurveGeometry(
        point=lambda s: (spl_r(s), spl_h(s)),
        velocity=lambda s: (dr(s), dh(s)),
        acceleration=lambda s: (ddr(s), ddh(s)),
    )


def effective_geometry(curve: ProfileCurve) -> CurveGeometry:
    return curve.geometry if curve.geometry is not None else _spline_geometry(curve)


# ---------------------------------------------------------------------------
# transforms


def scaled(curve: ProfileCurve, sigma: float) -> ProfileCurve:
    """Rescale the swept surface by ``sigma > 0`` (same parameter values)."""
    if sigma <= 0.0:
        raise CurveError("scale factor must be positive")
    geom = None
    if curve.geometry is not None:
        g = curve.geometry

        def wrap(fn):
            def out(s):
                a, b = fn(s)
                return sigma * a, sigma * b

            return out

        geom = CurveGeometry(wrap(g.point), wrap(g.velocity), wrap(g.acceleration), g.breaks)
    return replace(curve, r=sigma * curve.r, h=sigma * curve.h, geometry=geom)


def translated(curve: ProfileCurve, dh: float) -> ProfileCurve:
    geom = None
    if curve.geometry is not None:
        g = curve.geometry

        def pt(s):
            a, b = g.point(s)
            return a, b + dh

        geom = CurveGeometry(pt, g.velocity, g.acceleration, g.breaks)
    return replace(curve, h=curve.h + dh, geometry=geom)


def reversed_curve(curve: ProfileCurve) -> ProfileCurve:
    """Reverse the parameter orientation."""
    s0, s1 = float(curve.s[0]), float(curve.s[-1])
    s_new = (s0 + s1) - curve.s[::-1]
    geom = None
    if curve.geometry is not None:
        g = curve.geometry

        def pt(s):
            return g.point((s0 + s1) - np.asarray(s, dtype=float))

        def vel(s):
            a, b = g.velocity((s0 + s1) - np.asarray(s, dtype=float))
            return -a, -b

        def acc(s):
            return g.acceleration((s0 + s1) - np.asarray(s, dtype=float))

        breaks = tuple(sorted((s0 + s1) - b for b in g.breaks))
        geom = CurveGeometry(pt, vel, acc, breaks)
    return replace(curve, s=s_new, r=curve.r[::-1].copy(), h=curve.h[::-1].copy(),
                   closed_on_axis=(curve.closed_on_axis[1], curve.closed_on_axis[0]),
                   geometry=geom)


# ---------------------------------------------------------------------------
# Willmore energy


def _regularity_check(curve: ProfileCurve):
    lo, hi = curve.closed_on_axis
    r = curve.r
    interior = slice(1, -1) if (lo or hi) else slice(None)
    bad = np.flatnonzero(r[interior] <= 0.0)
    if bad.size:
        idx = int(bad[0]) + (1 if (lo or hi) else 0)
        raise CurveError(f"radius vanishes at interior sample {idx}: surface not immersed")


def _energy_integrand(geometry: CurveGeometry, scale: float) -> Callable:
    tiny = 1e-12 * max(scale, 1.0)

    def integrand(s):
        r, _ = geometry.point(s)
        dr, dh = geometry.velocity(s)
        ddr, ddh = geometry.acceleration(s)
        w2 = dr * dr + dh * dh
        w = np.sqrt(w2)
        kappa1 = (dr * ddh - dh * ddr) / (w2 * w)
        on_axis = r <= tiny
        safe_r = np.where(on_axis, 1.0, r)
        kappa2 = np.where(on_axis, kappa1, dh / (safe_r * w))
        mean = 0.5 * (kappa1 + kappa2)
        return mean * mean * TWO_PI * np.where(on_axis, 0.0, r) * w

    return integrand


def willmore_energy_revolution(curve: ProfileCurve,
                               settings: QuadratureSettings | None = None,
                               s_range: tuple[float, float] | None = None) -> EnergyEstimate:
    """Willmore energy of the surface swept by the profile.

    ``s_range`` restricts the integration to a parameter subinterval
    (used for the per-segment turning-number checks).
    """
    settings = settings or QuadratureSettings()
    _regularity_check(curve)
    geom = effective_geometry(curve)
    a = float(curve.s[0]) if s_range is None else float(s_range[0])
    b = float(curve.s[-1]) if s_range is None else float(s_range[1])
    if not (curve.s[0] - 1e-12 <= a <= b <= curve.s[-1] + 1e-12):
        raise CurveError("s_range outside the curve's parameter interval")
    cuts = [a] + [c for c in geom.breaks if a < c < b] + [b]
    integrand = _energy_integrand(geom, curve.diameter)
    piece_settings = replace(settings, tol=settings.tol / max(1, len(cuts) - 1))
    total = QuadratureResult(0.0, 0.0, 0)
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        total = total + integrate(integrand, lo, hi, piece_settings)
    return EnergyEstimate.from_quadrature(total)


# ---------------------------------------------------------------------------
# tangent angle lift and turning number


def _sample_tangents(curve: ProfileCurve) -> tuple[np.ndarray, np.ndarray]:
    if curve.geometry is not None:
        return curve.geometry.velocity(curve.s)
    pts = curve.points
    d = np.empty_like(pts)
    d[1:-1] = pts[2:] - pts[:-2]
    d[0] = pts[1] - pts[0]
    d[-1] = pts[-1] - pts[-2]
    return d[:, 0], d[:, 1]


def tangent_lift(curve: ProfileCurve) -> TangentLift:
    """Continuous lift of the tangent angle at the samples.

    Requires consecutive tangent angles to differ by less than pi; raise
    LiftError (refine the discretization) otherwise.
    """
    dr, dh = _sample_tangents(curve)
    theta = np.arctan2(dh, dr)
    jumps = np.diff(theta)
    wrapped = (jumps + math.pi) % TWO_PI - math.pi
    bad = np.abs(wrapped) >= math.pi * (1.0 - 1e-12)
    if np.any(bad):
        idx = int(np.flatnonzero(bad)[0])
        raise LiftError(
            f"tangent angle jump of {abs(wrapped[idx]):.3f} rad at sample {idx}; "
            "refine the discretization")
    values = np.concatenate([[theta[0]], theta[0] + np.cumsum(wrapped)])
    tau = (values[-1] - values[0]) / TWO_PI
    return TangentLift(curve.s.copy(), values, float(tau))


def snap_half_integer(tau: float, tol: float = 0.05) -> float:
    """Round to the nearest half integer, validating the residual."""
    snapped = round(2.0 * tau) / 2.0
    if abs(tau - snapped) > tol:
        raise LiftError(f"turning number {tau:.6f} is not within {tol} of a half integer")
    return snapped


# ---------------------------------------------------------------------------
# self intersections and point multiplicity


def _segment_crossings(pts: np.ndarray, s: np.ndarray, tol: float) -> list[dict]:
    """All transversal crossings between non-adjacent polyline segments."""
    n_seg = pts.shape[0] - 1
    starts = pts[:-1]
    ends = pts[1:]
    lo = np.minimum(starts, ends) - tol
    hi = np.maximum(starts, ends) + tol
    lens = np.hypot(*(ends - starts).T)
    cell = max(float(np.median(lens)) * 2.0, tol * 4.0, 1e-300)
    buckets: dict[tuple[int, int], list[int]] = {}
    for i in range(n_seg):
        x0, y0 = int(np.floor(lo[i, 0] / cell)), int(np.floor(lo[i, 1] / cell))
        x1, y1 = int(np.floor(hi[i, 0] / cell)), int(np.floor(hi[i, 1] / cell))
        for cx in range(x0, x1 + 1):
            for cy in range(y0, y1 + 1):
                buckets.setdefault((cx, cy), []).append(i)
    pairs = set()
    for members in buckets.values():
        for a_idx in range(len(members)):
            for b_idx in range(a_idx + 1, len(members)):
                i, j = members[a_idx], members[b_idx]
                if abs(i - j) > 1:
                    pairs.add((min(i, j), max(i, j)))
    crossings = []
    scale = max(float(np.max(hi - lo)), 1.0)
    for i, j in sorted(pairs):
        if np.any(lo[i] > hi[j]) or np.any(lo[j] > hi[i]):
            continue
        p, pd = starts[i], ends[i] - starts[i]
        q, qd = starts[j], ends[j] - starts[j]
        denom = pd[0] * qd[1] - pd[1] * qd[0]
        if abs(denom) < 1e-14 * scale * scale:
            continue
        diff = q - p
        t = (diff[0] * qd[1] - diff[1] * qd[0]) / denom
        u = (diff[0] * pd[1] - diff[1] * pd[0]) / denom
        eps_t = tol / max(lens[i], 1e-300)
        eps_u = tol / max(lens[j], 1e-300)
        if -eps_t <= t <= 1.0 + eps_t and -eps_u <= u <= 1.0 + eps_u:
            point = p + t * pd
            crossings.append({
                "point": point,
                "params": (
                    float(s[i] + np.clip(t, 0.0, 1.0) * (s[i + 1] - s[i])),
                    float(s[j] + np.clip(u, 0.0, 1.0) * (s[j + 1] - s[j])),
                ),
            })
    return crossings


def _cluster_points(crossings: list[dict], tol: float) -> list[list[int]]:
    n = len(crossings)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if np.hypot(*(crossings[i]["point"] - crossings[j]["point"])) <= 2.0 * tol:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def multiplicity_report(curve: ProfileCurve, tol: float | None = None) -> dict:
    """Cluster profile self-intersections and count branches per cluster."""
    if tol is None:
        tol = 1e-6 * curve.diameter
    pts = curve.points
    s = curve.s
    crossings = [c for c in _segment_crossings(pts, s, tol) if c["point"][0] > tol]
    # merge parameters closer than a few sample spacings: the same branch
    # contributes one preimage per cluster no matter how many segment pairs
    # recorded it.
    spacing = float(np.median(np.diff(s)))
    param_merge = 2.5 * spacing
    clusters = []
    for group in _cluster_points(crossings, tol):
        params = sorted(p for gi in group for p in crossings[gi]["params"])
        branches = []
        for p in params:
            if not branches or p - branches[-1][-1] > param_merge:
                branches.append([p])
            else:
                branches[-1].append(p)
        point = np.mean([crossings[gi]["point"] for gi in group], axis=0)
        clusters.append({
            "point": (float(point[0]), float(point[1])),
            "branches": len(branches),
            "params": [float(np.mean(b)) for b in branches],
        })
    clusters.sort(key=lambda c: -c["branches"])
    return {
        "multiplicity": max((c["branches"] for c in clusters), default=1),
        "clusters": clusters,
        "tol": tol,
    }


def tuple_point_multiplicity(curve: ProfileCurve, tol: float | None = None) -> int:
    """Maximum number of distinct parameters hitting one off-axis point."""
    return multiplicity_report(curve, tol)["multiplicity"]


def liyau_check(curve: ProfileCurve,
                settings: QuadratureSettings | None = None,
                tol: float | None = None,
                check_tol: float = 1e-9) -> dict:
    """Check ``W >= 4 pi n`` for the profile's point multiplicity ``n``.

    A violation beyond the combined quadrature and clustering tolerances
    indicates an implementation bug and is flagged, never silently passed.
    """
    energy = willmore_energy_revolution(curve, settings)
    n = tuple_point_multiplicity(curve, tol)
    bound = FOUR_PI * n
    slack = energy.error + check_tol * max(1.0, bound)
    return {
        "multiplicity": n,
        "energy": energy.value,
        "energy_error": energy.error,
        "bound": bound,
        "margin": energy.value - bound,
        "satisfied": bool(energy.value >= bound - slack),
    }
