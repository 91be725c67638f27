"""Closed model surfaces, shrinking homotopies, and turning-number bounds.

Two catenoid spheres sharing a full neck assemble into a closed profile:
sphere cap, gluing band, catenary neck (both halves), band, sphere cap.
With both attachments transversal (kind alpha) the spheres wrap around
each other and the generating curve has turning number +-3/2; with both
tangent (kind beta) the profile is an embedded dumbbell of turning number
+-1/2.  Chains of spheres joined by consecutive necks generalize this to
turning number n - 1/2.

The shrinking homotopy traces the equal-radius catenoid-sphere energy
along a linear parameter path from a large scale down to a target; above
the empirical monotonicity onset the trace is non-increasing and ends
below 4 pi, which makes composite energies after shrinking drop below
8 pi.

The turning-number lower bound ``W > 4 pi (|tau| + 1/2)`` is audited by
cutting the profile at the first parameters where the lifted tangent
angle reaches ``2 pi l + pi/2``, closing each piece with quarter circles
(round hemispheres of energy 2 pi each), and checking every closed-up
piece against its energy floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catenoid_sphere import (ALPHA, BETA, CatSphParams, DomainError, EnergyBreakdown,
                              catsph_energy, cap_energy)
from .gluing import GluingProfile, make_gluing_function
from .profiles import (CurveGeometry, LiftError, ProfileCurve, circle_arc_profile,
                       piecewise_geometry, snap_half_integer, tangent_lift,
                       willmore_energy_revolution)
from .quadrature import QuadratureSettings

__all__ = [
    "AttachmentConfig",
    "HomotopyTrace",
    "assemble_model",
    "bubble_chain",
    "shrinking_trace",
    "composite_energy_after_shrink",
    "turning_bound_report",
    "quarter_cap_energy",
]

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi
EIGHT_PI = 8.0 * math.pi


@dataclass(frozen=True)
class AttachmentConfig:
    """How the two ends of a full catenoid neck attach to spheres."""

    kinds: tuple[str, str]
    lam: float
    delta: float
    radii: tuple[float, float] | None = None

    def __post_init__(self):
        if len(self.kinds) != 2 or any(k not in (ALPHA, BETA) for k in self.kinds):
            raise DomainError("kinds must be a pair of 'alpha'/'beta'")
        for kind, radius in zip(self.kinds, self.end_radii):
            CatSphParams(self.lam, radius, self.delta, kind)

    @property
    def end_radii(self) -> tuple[float, float]:
        return self.radii if self.radii is not None else (self.lam, self.lam)

    def end_params(self) -> tuple[CatSphParams, CatSphParams]:
        r1, r2 = self.end_radii
        return (CatSphParams(self.lam, r1, self.delta, self.kinds[0]),
                CatSphParams(self.lam, r2, self.delta, self.kinds[1]))


# ---------------------------------------------------------------------------
# segment builders


def _arc_segment(s_lo, R, zc, psi_from, psi_to):
    sgn = 1.0 if psi_to >= psi_from else -1.0
    span = abs(psi_to - psi_from)

    def psi(s):
        return psi_from + sgn * (np.asarray(s, dtype=float) - s_lo)

    def pt(s):
        p = psi(s)
        return R * np.sin(p), zc - R * np.cos(p)

    def vel(s):
        p = psi(s)
        return sgn * R * np.cos(p), sgn * R * np.sin(p)

    def acc(s):
        p = psi(s)
        return -R * np.sin(p), R * np.cos(p)

    return (s_lo, s_lo + span, pt, vel, acc)


def _neck_segment(s_lo, lam, t_from, t_to, z_center):
    sgn = 1.0 if t_to >= t_from else -1.0
    span = abs(t_to - t_from)

    def t_of(s):
        return t_from + sgn * (np.asarray(s, dtype=float) - s_lo)

    def pt(s):
        t = t_of(s)
        return np.cosh(lam * t) / lam, z_center + t

    def vel(s):
        t = t_of(s)
        return sgn * np.sinh(lam * t), sgn * np.ones_like(t)

    def acc(s):
        t = t_of(s)
        return lam * np.cosh(lam * t), np.zeros_like(t)

    return (s_lo, s_lo + span, pt, vel, acc)


def _band_segment(s_lo, x_from, x_to, lam, z_junction, junction_top: bool,
                  R, zc, profile: GluingProfile):
    """Gluing band between the neck branch and the sphere branch at a
    junction circle (1, z_junction)."""
    neck_sign = 1.0 if junction_top else -1.0
    branch_sign = 1.0 if z_junction < zc else -1.0  # circle branch below/above center

    def neck(x, order):
        if order == 0:
            return z_junction + neck_sign * (np.arccosh(lam * x) - math.acosh(lam)) / lam
        if order == 1:
            return neck_sign / np.sqrt((lam * x) ** 2 - 1.0)
        return -neck_sign * lam ** 2 * x / ((lam * x) ** 2 - 1.0) ** 1.5

    def sphere(x, order):
        root = np.sqrt(R ** 2 - x ** 2)
        if order == 0:
            return zc - branch_sign * root
        if order == 1:
            return branch_sign * x / root
        return branch_sign * R ** 2 / root ** 3

    def height(x, order):
        w = [sphere(x, k) - neck(x, k) for k in range(order + 1)]
        p0 = profile(x)
        if order == 0:
            return neck(x, 0) + p0 * w[0]
        p1 = profile.derivative(x)
        if order == 1:
            return neck(x, 1) + p0 * w[1] + p1 * w[0]
        p2 = profile.second_derivative(x)
        return neck(x, 2) + p0 * w[2] + 2.0 * p1 * w[1] + p2 * w[0]

    sgn = 1.0 if x_to >= x_from else -1.0
    span = abs(x_to - x_from)

    def x_of(s):
        return x_from + sgn * (np.asarray(s, dtype=float) - s_lo)

    def pt(s):
        x = x_of(s)
        return x, height(x, 0)

    def vel(s):
        x = x_of(s)
        return sgn * np.ones_like(x), sgn * height(x, 1)

    def acc(s):
        x = x_of(s)
        return np.zeros_like(x), height(x, 2)

    return (s_lo, s_lo + span, pt, vel, acc)


def _sample_segments(segments, n, closed=(True, True), name=""):
    geom = piecewise_geometry(segments)
    spans = np.array([seg[1] - seg[0] for seg in segments])
    # allocate samples by span, with a floor so short bands stay resolved
    counts = np.maximum((n * spans / spans.sum()).astype(int), 48)
    pieces = []
    for seg, cnt in zip(segments, counts):
        pieces.append(np.linspace(seg[0], seg[1], cnt, endpoint=False))
    s = np.concatenate(pieces + [np.array([segments[-1][1]])])
    r, h = geom.point(s)
    if closed[0]:
        r[0] = 0.0
    if closed[1]:
        r[-1] = 0.0
    return ProfileCurve(s, r, h, closed_on_axis=closed, geometry=geom, name=name)


# ---------------------------------------------------------------------------
# model assembly


def assemble_model(cfg: AttachmentConfig, profile: GluingProfile | None = None,
                   n: int = 4096) -> ProfileCurve:
    """Closed profile: sphere cap, band, full catenary neck, band, sphere cap.

    The neck waist sits at height 0 with junction circles (1, -t0) and
    (1, +t0); the first configured kind attaches at the bottom junction.
    """
    profile = profile or make_gluing_function(cfg.delta)
    lam, delta = cfg.lam, cfg.delta
    r_bot, r_top = cfg.end_radii
    k_bot, k_top = cfg.kinds
    t0 = math.acosh(lam) / lam
    t1 = math.acosh(lam * (1.0 - delta)) / lam

    segments = []
    cursor = 0.0

    # bottom sphere
    psi_j_bot = math.asin((1.0 + delta) / r_bot)
    if k_bot == BETA:
        zc_bot = -t0 - math.sqrt(r_bot ** 2 - 1.0)
        seg = _arc_segment(cursor, r_bot, zc_bot, 0.0, math.pi - psi_j_bot)
    else:
        zc_bot = -t0 + math.sqrt(r_bot ** 2 - 1.0)
        seg = _arc_segment(cursor, r_bot, zc_bot, math.pi, psi_j_bot)
    segments.append(seg)
    cursor = seg[1]

    seg = _band_segment(cursor, 1.0 + delta, 1.0 - delta, lam, -t0,
                        junction_top=False, R=r_bot, zc=zc_bot, profile=profile)
    segments.append(seg)
    cursor = seg[1]

    seg = _neck_segment(cursor, lam, -t1, t1, 0.0)
    segments.append(seg)
    cursor = seg[1]

    psi_j_top = math.asin((1.0 + delta) / r_top)
    if k_top == BETA:
        zc_top = t0 + math.sqrt(r_top ** 2 - 1.0)
    else:
        zc_top = t0 - math.sqrt(r_top ** 2 - 1.0)
    seg = _band_segment(cursor, 1.0 - delta, 1.0 + delta, lam, t0,
                        junction_top=True, R=r_top, zc=zc_top, profile=profile)
    segments.append(seg)
    cursor = seg[1]

    if k_top == BETA:
        seg = _arc_segment(cursor, r_top, zc_top, psi_j_top, math.pi)
    else:
        seg = _arc_segment(cursor, r_top, zc_top, math.pi - psi_j_top, 0.0)
    segments.append(seg)

    name = f"model-{k_bot}-{k_top}"
    return _sample_segments(segments, n, name=name)


def bubble_chain(n_spheres: int, lam: float, radius: float, delta: float,
                 style: str = "zigzag", profile: GluingProfile | None = None,
                 n: int = 4096, spacing: float | None = None) -> ProfileCurve:
    """Chain of spheres joined by catenoid necks.

    ``zigzag`` wraps every attachment transversally, one sphere per step
    of height ``2 (sqrt(radius^2 - 1) - t0)``; its turning number is
    ``n_spheres - 1/2``.  ``barrel`` (three spheres) runs the middle
    sphere as a junction-to-junction barrel; with ``spacing=None`` the
    spacing is tuned so that the two outer spheres and the barrel equator
    pass through one common point (a genuine triple point).
    """
    if n_spheres < 2:
        raise DomainError("need at least two spheres")
    profile = profile or make_gluing_function(delta)
    CatSphParams(lam, radius, delta, ALPHA)
    t0 = math.acosh(lam) / lam
    t1 = math.acosh(lam * (1.0 - delta)) / lam
    root = math.sqrt(radius ** 2 - 1.0)
    psi_j = math.asin((1.0 + delta) / radius)

    if style == "zigzag":
        spacing = 2.0 * (root - t0)
        neck_z = [j * spacing for j in range(n_spheres - 1)]
        segments = []
        cursor = 0.0
        # first sphere: bottom pole up to the first neck's top junction
        zc = t0 - root
        seg = _arc_segment(cursor, radius, zc, 0.0, math.pi - psi_j)
        segments.append(seg)
        cursor = seg[1]
        for j, z in enumerate(neck_z):
            seg = _band_segment(cursor, 1.0 + delta, 1.0 - delta, lam, z + t0,
                                junction_top=True, R=radius, zc=z + t0 - root,
                                profile=profile)
            segments.append(seg)
            cursor = seg[1]
            seg = _neck_segment(cursor, lam, t1, -t1, z)
            segments.append(seg)
            cursor = seg[1]
            zc_next = z - t0 + root
            seg = _band_segment(cursor, 1.0 - delta, 1.0 + delta, lam, z - t0,
                                junction_top=False, R=radius, zc=zc_next,
                                profile=profile)
            segments.append(seg)
            cursor = seg[1]
            last = j == len(neck_z) - 1
            psi_hi = math.pi if last else math.pi - psi_j
            seg = _arc_segment(cursor, radius, zc_next, psi_j, psi_hi)
            segments.append(seg)
            cursor = seg[1]
        return _sample_segments(segments, n, name=f"chain-{n_spheres}")

    if style != "barrel" or n_spheres != 3:
        raise DomainError("style must be 'zigzag', or 'barrel' with three spheres")

    zc1 = -t0 + root

    def mismatch(d):
        inner = radius ** 2 - (0.5 * d - zc1) ** 2
        if inner <= 0.0:
            return -math.hypot(1.0, 0.5 * d - t0)
        return math.sqrt(inner) - math.hypot(1.0, 0.5 * d - t0)

    if spacing is None:
        from scipy.optimize import brentq

        spacing = float(brentq(mismatch, 2.0 * t0 + 1e-6, 2.0 * (zc1 + radius) - 1e-6))
    d = spacing
    r_mid = math.hypot(1.0, 0.5 * d - t0)
    if r_mid <= 1.0 + delta:
        raise DomainError("barrel spacing too small for the gluing band")
    sigma_j = math.asin((1.0 + delta) / r_mid)

    segments = []
    cursor = 0.0
    seg = _arc_segment(cursor, radius, zc1, math.pi, psi_j)
    segments.append(seg)
    cursor = seg[1]
    seg = _band_segment(cursor, 1.0 + delta, 1.0 - delta, lam, -t0,
                        junction_top=False, R=radius, zc=zc1, profile=profile)
    segments.append(seg)
    cursor = seg[1]
    seg = _neck_segment(cursor, lam, -t1, t1, 0.0)
    segments.append(seg)
    cursor = seg[1]
    seg = _band_segment(cursor, 1.0 - delta, 1.0 + delta, lam, t0,
                        junction_top=True, R=r_mid, zc=0.5 * d, profile=profile)
    segments.append(seg)
    cursor = seg[1]
    seg = _arc_segment(cursor, r_mid, 0.5 * d, sigma_j, math.pi - sigma_j)
    segments.append(seg)
    cursor = seg[1]
    seg = _band_segment(cursor, 1.0 + delta, 1.0 - delta, lam, d - t0,
                        junction_top=False, R=r_mid, zc=0.5 * d, profile=profile)
    segments.append(seg)
    cursor = seg[1]
    seg = _neck_segment(cursor, lam, -t1, t1, d)
    segments.append(seg)
    cursor = seg[1]
    zc3 = d + t0 - root
    seg = _band_segment(cursor, 1.0 - delta, 1.0 + delta, lam, d + t0,
                        junction_top=True, R=radius, zc=zc3, profile=profile)
    segments.append(seg)
    cursor = seg[1]
    seg = _arc_segment(cursor, radius, zc3, math.pi - psi_j, 0.0)
    segments.append(seg)
    return _sample_segments(segments, n, name="barrel-3")


# ---------------------------------------------------------------------------
# shrinking homotopy


@dataclass(frozen=True)
class HomotopyTrace:
    """Energy of equal-radius catenoid spheres along a linear scale path."""

    times: np.ndarray
    lam_values: np.ndarray
    energies: np.ndarray
    delta: float
    kind: str
    monotone: bool
    warning: str | None = None


def shrinking_trace(lam_start: float, lam_end: float, delta: float, steps: int,
                    kind: str = BETA,
                    profile: GluingProfile | None = None,
                    settings: QuadratureSettings | None = None,
                    min_monotone_lam: float | None = None) -> HomotopyTrace:
    """Trace ``W(lam_t, lam_t, delta)`` for ``lam_t`` interpolating from
    ``lam_start`` down to ``lam_end``."""
    if lam_start < lam_end:
        raise DomainError("the path shrinks: need lam_start >= lam_end")
    if steps < 1:
        raise DomainError("need at least one step")
    profile = profile or make_gluing_function(delta)
    times = np.linspace(0.0, 1.0, steps + 1)
    lam_values = (1.0 - times) * lam_start + times * lam_end
    energies = np.array([
        catsph_energy(CatSphParams(lam, lam, delta, kind), profile, settings).total
        for lam in lam_values])
    diffs = np.diff(energies)
    monotone = bool(np.all(diffs <= 1e-12 * max(1.0, float(np.max(np.abs(energies))))))
    warning = None
    if min_monotone_lam is not None and lam_end < min_monotone_lam:
        warning = (f"end scale {lam_end} is below the empirical monotonicity "
                   f"onset {min_monotone_lam:.3f}")
    return HomotopyTrace(times, lam_values, energies, delta, kind, monotone, warning)


def composite_energy_after_shrink(cfg: AttachmentConfig, trace: HomotopyTrace,
                                  profile: GluingProfile | None = None,
                                  settings: QuadratureSettings | None = None) -> dict:
    """Total energy of the two-sphere model after shrinking its beta ends
    along the trace; checks the total against 8 pi."""
    if BETA not in cfg.kinds:
        raise DomainError("configuration has no tangent (beta) end to shrink")
    profile = profile or make_gluing_function(cfg.delta)
    lam_end = float(trace.lam_values[-1])
    end_beta = catsph_energy(CatSphParams(lam_end, lam_end, cfg.delta, BETA),
                             profile, settings).total
    epsilon = FOUR_PI - end_beta
    ends = []
    untouched_ok = True
    total = 0.0
    for kind, radius in zip(cfg.kinds, cfg.end_radii):
        if kind == BETA:
            ends.append({"kind": kind, "energy": end_beta, "shrunk": True})
            total += end_beta
        else:
            w = catsph_energy(CatSphParams(cfg.lam, radius, cfg.delta, kind),
                              profile, settings).total
            ends.append({"kind": kind, "energy": w, "shrunk": False})
            untouched_ok = untouched_ok and (w < FOUR_PI + epsilon)
            total += w
    below = total < EIGHT_PI
    return {
        "ends": ends,
        "epsilon": epsilon,
        "total": total,
        "below_8pi": below,
        "untouched_within_epsilon": untouched_ok,
        "passed": bool(below or not untouched_ok),
        "monotone_trace": trace.monotone,
    }


# ---------------------------------------------------------------------------
# turning-number lower bound


def quarter_cap_energy(r0: float, settings: QuadratureSettings | None = None) -> float:
    """Energy of the hemisphere swept by a quarter circle of radius r0."""
    arc = circle_arc_profile(r0, 0.0, 0.5 * math.pi, math.pi, n=65)
    return willmore_energy_revolution(arc, settings).value


def _first_crossing(s: np.ndarray, values: np.ndarray, level: float) -> float | None:
    sign = values - level
    hits = np.flatnonzero(sign[:-1] * sign[1:] <= 0.0)
    for i in hits:
        a, b = sign[i], sign[i + 1]
        if a == b == 0.0:
            continue
        frac = 0.0 if a == 0.0 else a / (a - b)
        return float(s[i] + frac * (s[i + 1] - s[i]))
    return None


def turning_bound_report(curve: ProfileCurve,
                         settings: QuadratureSettings | None = None,
                         check_tol: float = 1e-6,
                         boundary_tol: float = 1e-6) -> dict:
    """Audit ``W > 4 pi (|tau| + 1/2)`` via the segment decomposition.

    The profile must close on the axis at both ends with perpendicular
    contact.  The report lists the crossing parameters, per-segment
    energies with their quarter-circle closures, each segment's floor
    check, and the global bound; a round sphere realizes the bound with
    equality and is flagged as the boundary case.
    """
    if not all(curve.closed_on_axis):
        raise DomainError("turning bound applies to profiles closed on the axis")
    settings = settings or QuadratureSettings()
    lift = tangent_lift(curve)
    tau = snap_half_integer(lift.turning_number)
    values = lift.values - lift.values[0]
    if tau < 0:
        values = -values
    abs_tau = abs(tau)
    k = int(round(abs_tau - 0.5))
    crossings = []
    for l in range(k + 1):
        level = TWO_PI * l + 0.5 * math.pi
        t_l = _first_crossing(lift.s, values, level)
        if t_l is None:
            raise LiftError(f"no crossing found for level index {l}; refine the curve")
        crossings.append(t_l)

    cuts = [float(curve.s[0])] + crossings + [float(curve.s[-1])]
    segments = []
    total = 0.0
    total_err = 0.0
    all_floors = True
    for i, (lo, hi) in enumerate(zip(cuts[:-1], cuts[1:])):
        kind = "end" if i in (0, len(cuts) - 2) else "interior"
        energy = willmore_energy_revolution(curve, settings, s_range=(lo, hi))
        closure = TWO_PI if kind == "end" else FOUR_PI
        floor = TWO_PI if kind == "end" else FOUR_PI
        passed = energy.value >= floor - check_tol * max(1.0, floor) - energy.error
        all_floors = all_floors and passed
        total += energy.value
        total_err += energy.error
        segments.append({
            "s_lo": lo,
            "s_hi": hi,
            "kind": kind,
            "energy": energy.value,
            "energy_error": energy.error,
            "closure_energy": closure,
            "closed_energy": energy.value + closure,
            "floor": floor,
            "passed": bool(passed),
        })
    bound = FOUR_PI * (abs_tau + 0.5)
    slack = check_tol * max(1.0, bound) + total_err
    satisfied = total >= bound - slack
    gap = total - bound
    boundary = abs(gap) <= boundary_tol * max(1.0, bound) + total_err
    return {
        "tau": float(tau),
        "tau_raw": lift.turning_number,
        "crossings": crossings,
        "segments": segments,
        "energy": total,
        "energy_error": total_err,
        "bound": bound,
        "gap": gap,
        "segment_checks_passed": bool(all_floors),
        "satisfied": bool(satisfied),
        "strict": bool(gap > slack),
        "boundary_case": bool(boundary),
        "passed": bool(satisfied and all_floors),
    }
