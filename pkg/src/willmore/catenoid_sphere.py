"""Catenoid-sphere constructions and their Willmore energy.

A catenoid sphere joins half a catenoid of scale ``1/lam`` to a sphere of
radius ``R`` across a gluing band over the annulus ``[1-delta, 1+delta]``.
The two kinds differ in how the sphere sits relative to the catenoid: in
kind ``beta`` the sphere is tangent to the catenoid's asymptotic direction
at the unit circle when ``R = lam`` (its center above the junction), while
in kind ``alpha`` the sphere wraps the other way (center below) and the
two curves cross transversally.

The total energy splits into a closed-form spherical cap term

    cap(R, delta) = 2 pi (1 + sqrt(1 - (1+delta)^2 / R^2)),

a quadrature term for the band (the catenoid itself is minimal and its
band-free part contributes nothing), and a residual neck term.  For the
band, with ``l = sqrt(1 + h'^2)``, the energy density of the rotationally
symmetric graph ``h`` is

    (t h'' + h' + h'^3)^2 / (4 t (1 + h'^2)^{5/2}),

integrated over the band against ``2 pi dt``.

All closed-form derivatives of the catenary height ``u``, the sphere
height ``v`` (with sphere radius equal to ``lam``) and the interpolated
band height ``h = u + phi (v - u)``, including their derivatives in
``lam``, are provided and validated against finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .gluing import GluingProfile, make_gluing_function
from .profiles import (CurveGeometry, EnergyEstimate, ProfileCurve, piecewise_geometry,
                       willmore_energy_revolution)
from .quadrature import QuadratureSettings, central_diff4, integrate

__all__ = [
    "ALPHA",
    "BETA",
    "DomainError",
    "CatSphParams",
    "EnergyBreakdown",
    "DerivativeTable",
    "derivative_table",
    "cap_energy",
    "cap_energy_lambda_derivative",
    "glue_energy",
    "neck_energy",
    "band_height_functions",
    "build_catsph",
    "catsph_energy",
    "energy_trend_report",
    "glue_scaling_report",
    "derivative_check_report",
]

ALPHA = "alpha"
BETA = "beta"
TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


class DomainError(ValueError):
    """Raised for parameters or evaluation points outside the valid domain."""


@dataclass(frozen=True)
class CatSphParams:
    """Parameters of a catenoid sphere.

    Requires ``lam > 1``, ``radius > 1`` and
    ``delta in (0, 1 - 1/lam) ∩ (0, radius - 1)``; ``delta = 0`` is allowed
    only for the closed-form energy limit.
    """

    lam: float
    radius: float
    delta: float
    kind: str

    def __post_init__(self):
        if self.kind not in (ALPHA, BETA):
            raise DomainError(f"kind must be {ALPHA!r} or {BETA!r}")
        if not self.lam > 1.0:
            raise DomainError("need lam > 1")
        if not self.radius > 1.0:
            raise DomainError("need radius > 1")
        limit = min(1.0 - 1.0 / self.lam, self.radius - 1.0)
        if self.delta < 0.0 or self.delta >= limit:
            raise DomainError(
                f"need delta in (0, {limit:.6g}) for lam={self.lam}, radius={self.radius}")

    @property
    def t0(self) -> float:
        """Height of the catenary's junction above its waist."""
        return math.acosh(self.lam) / self.lam

    @property
    def theta(self) -> float:
        """Polar angle of the unit circle on the sphere."""
        return math.asin(1.0 / self.radius)


@dataclass(frozen=True)
class EnergyBreakdown:
    """Cap / glue / neck split of a catenoid-sphere energy."""

    cap: float
    glue: float
    neck: float
    cap_error: float = 0.0
    glue_error: float = 0.0
    neck_error: float = 0.0

    @property
    def total(self) -> float:
        return self.cap + self.glue + self.neck

    @property
    def total_error(self) -> float:
        return self.cap_error + self.glue_error + self.neck_error


# ---------------------------------------------------------------------------
# closed-form derivative tables (sphere radius tied to lam)


def _acosh(x):
    return np.arccosh(x)


@dataclass(frozen=True)
class DerivativeTable:
    """Closed forms for the catenary height u, sphere height v, and their
    first three t-derivatives together with the lam-derivative of each.

    Valid for ``t in (1/lam, lam)``; evaluation at the singular endpoints
    raises DomainError.
    """

    lam: float

    def _check_u(self, t):
        if np.any(np.asarray(t) * self.lam <= 1.0):
            raise DomainError("catenary forms need t > 1/lam")

    def _check_v(self, t):
        if np.any(np.abs(np.asarray(t)) >= self.lam):
            raise DomainError("sphere forms need |t| < lam")

    # catenary family
    def u(self, t):
        self._check_u(t)
        return (_acosh(self.lam * t) - _acosh(self.lam)) / self.lam

    def u1(self, t):
        self._check_u(t)
        return 1.0 / np.sqrt((self.lam * t) ** 2 - 1.0)

    def u2(self, t):
        self._check_u(t)
        return -self.lam ** 2 * t / ((self.lam * t) ** 2 - 1.0) ** 1.5

    def u3(self, t):
        self._check_u(t)
        lt2 = (self.lam * t) ** 2
        return self.lam ** 2 * (2.0 * lt2 + 1.0) / (lt2 - 1.0) ** 2.5

    def u_lam(self, t):
        self._check_u(t)
        lam = self.lam
        return (_acosh(lam) - _acosh(lam * t)
                + lam * t / np.sqrt((lam * t) ** 2 - 1.0)
                - lam / math.sqrt(lam ** 2 - 1.0)) / lam ** 2

    def u1_lam(self, t):
        self._check_u(t)
        return -self.lam * t ** 2 / ((self.lam * t) ** 2 - 1.0) ** 1.5

    def u2_lam(self, t):
        self._check_u(t)
        lt2 = (self.lam * t) ** 2
        return self.lam * t * (2.0 + lt2) / (lt2 - 1.0) ** 2.5

    def u3_lam(self, t):
        self._check_u(t)
        lt2 = (self.lam * t) ** 2
        return -self.lam * (2.0 * lt2 ** 2 + 11.0 * lt2 + 2.0) / (lt2 - 1.0) ** 3.5

    # sphere family
    def v(self, t):
        self._check_v(t)
        return math.sqrt(self.lam ** 2 - 1.0) - np.sqrt(self.lam ** 2 - t ** 2)

    def v1(self, t):
        self._check_v(t)
        return t / np.sqrt(self.lam ** 2 - t ** 2)

    def v2(self, t):
        self._check_v(t)
        return self.lam ** 2 / (self.lam ** 2 - t ** 2) ** 1.5

    def v3(self, t):
        self._check_v(t)
        return 3.0 * self.lam ** 2 * t / (self.lam ** 2 - t ** 2) ** 2.5

    def v_lam(self, t):
        self._check_v(t)
        lam = self.lam
        return lam / math.sqrt(lam ** 2 - 1.0) - lam / np.sqrt(lam ** 2 - t ** 2)

    def v1_lam(self, t):
        self._check_v(t)
        return -self.lam * t / (self.lam ** 2 - t ** 2) ** 1.5

    def v2_lam(self, t):
        self._check_v(t)
        return -(self.lam ** 3 + 2.0 * self.lam * t ** 2) / (self.lam ** 2 - t ** 2) ** 2.5

    def v3_lam(self, t):
        self._check_v(t)
        return -3.0 * self.lam * t * (3.0 * self.lam ** 2 + 2.0 * t ** 2) \
            / (self.lam ** 2 - t ** 2) ** 3.5


def derivative_table(lam: float) -> DerivativeTable:
    if not lam > 1.0:
        raise DomainError("need lam > 1")
    return DerivativeTable(float(lam))


def _sphere_sign(kind: str) -> float:
    return 1.0 if kind == BETA else -1.0


def _sphere_height_functions(radius: float, kind: str):
    """Height of the sphere branch through (1, 0) and two derivatives."""
    sign = _sphere_sign(kind)
    root = math.sqrt(radius ** 2 - 1.0)

    def v(t):
        return sign * (root - np.sqrt(radius ** 2 - t ** 2))

    def v1(t):
        return sign * t / np.sqrt(radius ** 2 - t ** 2)

    def v2(t):
        return sign * radius ** 2 / (radius ** 2 - t ** 2) ** 1.5

    return v, v1, v2


def _catenary_height_functions(lam: float):
    def u(t):
        return (np.arccosh(lam * t) - math.acosh(lam)) / lam

    def u1(t):
        return 1.0 / np.sqrt((lam * t) ** 2 - 1.0)

    def u2(t):
        return -lam ** 2 * t / ((lam * t) ** 2 - 1.0) ** 1.5

    return u, u1, u2


def band_height_functions(lam: float, radius: float, kind: str,
                          profile: GluingProfile):
    """Interpolated band height ``h = u + phi (v - u)`` and derivatives."""
    u, u1, u2 = _catenary_height_functions(lam)
    v, v1, v2 = _sphere_height_functions(radius, kind)

    def h(t):
        return u(t) + profile(t) * (v(t) - u(t))

    def h1(t):
        return u1(t) + profile(t) * (v1(t) - u1(t)) + profile.derivative(t) * (v(t) - u(t))

    def h2(t):
        return (u2(t) + profile(t) * (v2(t) - u2(t))
                + 2.0 * profile.derivative(t) * (v1(t) - u1(t))
                + profile.second_derivative(t) * (v(t) - u(t)))

    return h, h1, h2


def band_height_lambda_derivatives(lam: float, kind: str, profile: GluingProfile):
    """lam-derivatives of the band slope and curvature (sphere radius = lam)."""
    table = derivative_table(lam)
    sign = _sphere_sign(kind)

    def w(t):
        return sign * table.v_lam(t) - table.u_lam(t)

    def w1(t):
        return sign * table.v1_lam(t) - table.u1_lam(t)

    def w2(t):
        return sign * table.v2_lam(t) - table.u2_lam(t)

    def h1_lam(t):
        return table.u1_lam(t) + profile(t) * w1(t) + profile.derivative(t) * w(t)

    def h2_lam(t):
        return (table.u2_lam(t) + profile(t) * w2(t)
                + 2.0 * profile.derivative(t) * w1(t)
                + profile.second_derivative(t) * w(t))

    return h1_lam, h2_lam


# ---------------------------------------------------------------------------
# energies


def cap_energy(radius: float, delta: float) -> float:
    """Energy of the sphere of the construction outside radius 1+delta."""
    ratio = (1.0 + delta) / radius
    if ratio >= 1.0:
        raise DomainError("boundary circle exceeds the sphere radius")
    return TWO_PI * (1.0 + math.sqrt(1.0 - ratio ** 2))


def cap_energy_lambda_derivative(lam: float, delta: float) -> float:
    """Derivative of ``cap_energy(lam, delta)`` in lam (closed form)."""
    b = 1.0 + delta
    return TWO_PI * b ** 2 / (lam ** 2 * math.sqrt(lam ** 2 - b ** 2))


def _band_energy_integrand(h1: Callable, h2: Callable) -> Callable:
    def integrand(t):
        slope = h1(t)
        return (t * h2(t) + slope + slope ** 3) ** 2 \
            / (4.0 * t * (1.0 + slope * slope) ** 2.5) * TWO_PI

    return integrand


def glue_energy(lam: float, delta: float, kind: str,
                profile: GluingProfile | None = None,
                settings: QuadratureSettings | None = None,
                radius: float | None = None) -> tuple[float, float]:
    """Energy of the gluing band, by quadrature.  Returns (value, error)."""
    radius = lam if radius is None else radius
    profile = profile or make_gluing_function(delta)
    settings = settings or QuadratureSettings()
    _, h1, h2 = band_height_functions(lam, radius, kind, profile)
    integrand = _band_energy_integrand(h1, h2)
    res = integrate(integrand, 1.0 - delta, 1.0, settings) \
        + integrate(integrand, 1.0, 1.0 + delta, settings)
    return res.value, res.error


def neck_energy(lam: float, delta: float,
                settings: QuadratureSettings | None = None) -> tuple[float, float]:
    """Residual energy of the catenoid piece below the band (zero for the
    exact catenary; reported as a quadrature check)."""
    settings = settings or QuadratureSettings()
    t1 = math.acosh(lam * (1.0 - delta)) / lam

    def integrand(t):
        cosh = np.cosh(lam * t)
        sinh = np.sinh(lam * t)
        r = cosh / lam
        w2 = 1.0 + sinh ** 2
        kappa1 = -lam * cosh / w2 ** 1.5
        kappa2 = 1.0 / (r * np.sqrt(w2))
        mean = 0.5 * (kappa1 + kappa2)
        return mean * mean * TWO_PI * r * np.sqrt(w2)

    res = integrate(integrand, 0.0, t1, settings)
    return res.value, res.error


# ---------------------------------------------------------------------------
# the profile curve


def build_catsph(p: CatSphParams, profile: GluingProfile | None = None,
                 n: int = 2048) -> ProfileCurve:
    """Generating curve: catenary from the waist, gluing band, spherical arc
    closed at the axis with a round cap.

    The junction of catenary and sphere sits at (1, 0); the waist at
    (1/lam, -t0).  Kind beta places the sphere center above the junction,
    kind alpha below (the profile at radius 1+delta then lies strictly
    below the beta branch).
    """
    if p.delta == 0.0:
        raise DomainError("delta = 0 is only a closed-form energy limit; no band to build")
    profile = profile or make_gluing_function(p.delta)
    if abs(profile.delta - p.delta) > 1e-12:
        raise DomainError("gluing profile half-width does not match the parameters")
    lam, R, delta = p.lam, p.radius, p.delta
    t0 = p.t0
    t1 = math.acosh(lam * (1.0 - delta)) / lam
    psi_j = math.asin((1.0 + delta) / R)
    h, h1, h2 = band_height_functions(lam, R, p.kind, profile)

    def neck_pt(t):
        return np.cosh(lam * t) / lam, t - t0

    def neck_vel(t):
        return np.sinh(lam * t), np.ones_like(t)

    def neck_acc(t):
        return lam * np.cosh(lam * t), np.zeros_like(t)

    band_lo = t1
    band_hi = t1 + 2.0 * delta

    def band_pt(s):
        x = (1.0 - delta) + (s - band_lo)
        return x, h(x)

    def band_vel(s):
        x = (1.0 - delta) + (s - band_lo)
        return np.ones_like(x), h1(x)

    def band_acc(s):
        x = (1.0 - delta) + (s - band_lo)
        return np.zeros_like(x), h2(x)

    # spherical arc, from the junction around to the axis
    sign = _sphere_sign(p.kind)
    zc = sign * math.sqrt(R ** 2 - 1.0)
    if p.kind == BETA:
        psi_from = psi_j

        def psi_of(s):
            return psi_from + (s - band_hi)
    else:
        psi_from = math.pi - psi_j

        def psi_of(s):
            return psi_from - (s - band_hi)
    arc_sign = 1.0 if p.kind == BETA else -1.0
    arc_len = (math.pi - psi_j)

    def arc_pt(s):
        psi = psi_of(s)
        return R * np.sin(psi), zc - R * np.cos(psi)

    def arc_vel(s):
        psi = psi_of(s)
        return arc_sign * R * np.cos(psi), arc_sign * R * np.sin(psi)

    def arc_acc(s):
        psi = psi_of(s)
        return -R * np.sin(psi), R * np.cos(psi)

    segments = [
        (0.0, band_lo, neck_pt, neck_vel, neck_acc),
        (band_lo, band_hi, band_pt, band_vel, band_acc),
        (band_hi, band_hi + arc_len, arc_pt, arc_vel, arc_acc),
    ]
    geom = piecewise_geometry(segments)
    n_neck = max(48, n // 4)
    n_band = max(64, n // 4)
    n_arc = max(64, n - n_neck - n_band)
    s = np.concatenate([
        np.linspace(0.0, band_lo, n_neck, endpoint=False),
        np.linspace(band_lo, band_hi, n_band, endpoint=False),
        np.linspace(band_hi, band_hi + arc_len, n_arc),
    ])
    r, hh = geom.point(s)
    r[-1] = 0.0
    return ProfileCurve(s, r, hh, closed_on_axis=(False, True), geometry=geom,
                        name=f"catsph-{p.kind}")


def catsph_energy(p: CatSphParams, profile: GluingProfile | None = None,
                  settings: QuadratureSettings | None = None) -> EnergyBreakdown:
    """Cap / glue / neck energy breakdown.

    ``delta = 0`` returns the closed-form limit
    ``2 pi (1 + sqrt(1 - 1/R^2))`` exactly.
    """
    if p.delta == 0.0:
        return EnergyBreakdown(cap=TWO_PI * (1.0 + math.sqrt(1.0 - 1.0 / p.radius ** 2)),
                               glue=0.0, neck=0.0)
    settings = settings or QuadratureSettings()
    glue, glue_err = glue_energy(p.lam, p.delta, p.kind, profile, settings, radius=p.radius)
    neck, neck_err = neck_energy(p.lam, p.delta, settings)
    return EnergyBreakdown(
        cap=cap_energy(p.radius, p.delta),
        glue=glue,
        neck=neck,
        glue_error=glue_err,
        neck_error=neck_err,
    )


# ---------------------------------------------------------------------------
# verification reports


def _beta_total(lam: float, delta: float, settings) -> float:
    return catsph_energy(CatSphParams(lam, lam, delta, BETA), settings=settings).total


def energy_trend_report(lam_grid=tuple(range(20, 201, 10)),
                        delta_grid=(0.1,),
                        delta_limit_lam: float = 10.0,
                        delta_limit_grid=(1e-1, 1e-2, 1e-3),
                        limit_lam_grid=(10.0, 100.0, 1000.0),
                        settings: QuadratureSettings | None = None,
                        onset_scan: bool = True) -> dict:
    """Monotonicity in lam, the delta -> 0 limit, and the lam -> inf limit
    of the equal-radius catenoid-sphere energies, with any counterexample
    flagged.
    """
    settings = settings or QuadratureSettings()
    report: dict = {"monotonicity": [], "delta_limit": {}, "large_lam": {}}
    passed = True
    for delta in delta_grid:
        energies = [_beta_total(lam, delta, settings) for lam in lam_grid]
        diffs = np.diff(energies)
        increasing = bool(np.all(diffs > 0.0))
        passed = passed and increasing
        entry = {
            "delta": delta,
            "lam_grid": list(map(float, lam_grid)),
            "energies": list(map(float, energies)),
            "forward_differences": list(map(float, diffs)),
            "all_increasing": increasing,
        }
        if onset_scan:
            lo = 1.0 / (1.0 - delta) + 0.05
            scan = np.geomspace(lo, lam_grid[0], 40)
            scan_e = [_beta_total(lam, delta, settings) for lam in scan]
            scan_d = np.diff(scan_e)
            onset = scan[0]
            for idx in range(len(scan_d) - 1, -1, -1):
                if scan_d[idx] <= 0.0:
                    onset = scan[idx + 1]
                    break
            entry["empirical_onset_lam"] = float(onset)
        report["monotonicity"].append(entry)

    lam = delta_limit_lam
    closed = TWO_PI * (1.0 + math.sqrt(1.0 - 1.0 / lam ** 2))
    gaps = [abs(_beta_total(lam, d, settings) - closed) for d in delta_limit_grid]
    monotone_gap = bool(np.all(np.diff(gaps) < 0.0))
    passed = passed and monotone_gap
    report["delta_limit"] = {
        "lam": lam,
        "closed_form": closed,
        "delta_grid": list(map(float, delta_limit_grid)),
        "gaps": list(map(float, gaps)),
        "monotone_decreasing": monotone_gap,
        "closed_form_below_4pi": bool(closed < FOUR_PI),
    }

    rows = []
    for lam in limit_lam_grid:
        for kind in (ALPHA, BETA):
            total = catsph_energy(CatSphParams(lam, lam, 0.1, kind), settings=settings).total
            rows.append({"lam": float(lam), "kind": kind, "energy": total,
                         "gap_to_4pi": total - FOUR_PI})
    alpha_rows = [row for row in rows if row["kind"] == ALPHA]
    alpha_above = all(row["gap_to_4pi"] > 0.0 for row in alpha_rows)
    gaps_shrink = all(abs(a["gap_to_4pi"]) > abs(b["gap_to_4pi"])
                      for a, b in zip(alpha_rows, alpha_rows[1:]))
    passed = passed and alpha_above and gaps_shrink
    report["large_lam"] = {
        "rows": rows,
        "alpha_above_4pi": alpha_above,
        "alpha_gap_decreasing": gaps_shrink,
    }
    report["passed"] = passed
    return report


def glue_scaling_report(lam_grid=(20.0, 50.0, 100.0, 200.0),
                        delta_grid=(0.05, 0.1, 0.2),
                        settings: QuadratureSettings | None = None,
                        spread_bound: float = 4.0) -> dict:
    """Scaling of the band energies: ``alpha * delta * lam^2`` and
    ``beta * lam^2 / delta`` stay bounded across the grid, and the
    lam-derivative of the beta band energy, scaled by ``lam^3 / delta``,
    stays bounded below.
    """
    settings = settings or QuadratureSettings()
    rows = []
    for delta in delta_grid:
        profile = make_gluing_function(delta)
        for lam in lam_grid:
            w_a, _ = glue_energy(lam, delta, ALPHA, profile, settings)
            w_b, _ = glue_energy(lam, delta, BETA, profile, settings)
            h = 1e-4 * lam
            dw_b = central_diff4(
                lambda x: glue_energy(x, delta, BETA, profile, settings)[0], lam, h)
            rows.append({
                "lam": float(lam),
                "delta": float(delta),
                "glue_alpha": w_a,
                "glue_beta": w_b,
                "scaled_alpha": w_a * delta * lam ** 2,
                "scaled_beta": w_b * lam ** 2 / delta,
                "dlam_glue_beta": dw_b,
                "scaled_dlam_beta": dw_b * lam ** 3 / delta,
            })
    sa = [row["scaled_alpha"] for row in rows]
    sb = [row["scaled_beta"] for row in rows]
    sd = [row["scaled_dlam_beta"] for row in rows]
    c_alpha, c_beta = max(sa), max(sb)
    spread_alpha = max(sa) / min(sa)
    spread_beta = max(sb) / min(sb)
    lower = min(sd)
    report = {
        "rows": rows,
        "empirical_constant_alpha": c_alpha,
        "empirical_constant_beta": c_beta,
        "spread_alpha": spread_alpha,
        "spread_beta": spread_beta,
        "derivative_lower_bound": lower,
        "alpha_bounded": bool(spread_alpha <= spread_bound),
        "beta_bounded": bool(spread_beta <= spread_bound),
        "derivative_bounded_below": bool(lower >= -spread_bound * c_beta),
    }
    report["passed"] = bool(report["alpha_bounded"] and report["beta_bounded"]
                            and report["derivative_bounded_below"])
    return report


def _relative_errors(closed: np.ndarray, approx: np.ndarray) -> float:
    closed = np.asarray(closed, dtype=float)
    approx = np.asarray(approx, dtype=float)
    floor = 1e-3 * np.max(np.abs(closed)) + 1e-300
    return float(np.max(np.abs(closed - approx) / np.maximum(np.abs(closed), floor)))


def derivative_check_report(lams=(2.0, 6.0, 50.0), delta: float = 0.1,
                            n_points: int = 100, rel_tol: float = 1e-6,
                            band_lam: float = 20.0) -> dict:
    """Validate every closed-form derivative against 4th-order finite
    differences of the quantity one level below, and the sign of the
    lam-derivative of the band slope.
    """
    checks = []

    def add(name, lam, closed_vals, fd_vals):
        err = _relative_errors(closed_vals, fd_vals)
        checks.append({"form": name, "lam": float(lam), "max_rel_err": err,
                       "passed": bool(err <= rel_tol)})

    for lam in lams:
        table = derivative_table(lam)
        lo, hi = 1.0 / lam, lam
        t = lo + (hi - lo) * np.linspace(0.05, 0.95, n_points)
        dist = np.minimum(t - lo, hi - t)
        h_t = 0.02 * dist
        h_l = 1e-3 * lam

        def fd_t(fn):
            return np.array([central_diff4(fn, ti, hi_) for ti, hi_ in zip(t, h_t)])

        def fd_lam(attr):
            def fn(lam_val):
                return derivative_table(lam_val).__getattribute__(attr)(t)

            return (-fn(lam + 2 * h_l) + 8.0 * fn(lam + h_l)
                    - 8.0 * fn(lam - h_l) + fn(lam - 2 * h_l)) / (12.0 * h_l)

        # anchors: u and v vanish at the junction
        checks.append({"form": "u(1)=0", "lam": float(lam),
                       "max_rel_err": abs(float(table.u(1.0))),
                       "passed": bool(abs(float(table.u(1.0))) < 1e-14)})
        checks.append({"form": "v(1)=0", "lam": float(lam),
                       "max_rel_err": abs(float(table.v(1.0))),
                       "passed": bool(abs(float(table.v(1.0))) < 1e-14)})
        add("u'", lam, table.u1(t), fd_t(table.u))
        add("u''", lam, table.u2(t), fd_t(table.u1))
        add("u'''", lam, table.u3(t), fd_t(table.u2))
        add("d_lam u", lam, table.u_lam(t), fd_lam("u"))
        add("d_lam u'", lam, table.u1_lam(t), fd_lam("u1"))
        add("d_lam u''", lam, table.u2_lam(t), fd_lam("u2"))
        add("d_lam u'''", lam, table.u3_lam(t), fd_lam("u3"))
        add("v'", lam, table.v1(t), fd_t(table.v))
        add("v''", lam, table.v2(t), fd_t(table.v1))
        add("v'''", lam, table.v3(t), fd_t(table.v2))
        add("d_lam v", lam, table.v_lam(t), fd_lam("v"))
        add("d_lam v'", lam, table.v1_lam(t), fd_lam("v1"))
        add("d_lam v''", lam, table.v2_lam(t), fd_lam("v2"))
        add("d_lam v'''", lam, table.v3_lam(t), fd_lam("v3"))

    # interpolated band height: t-derivatives and lam-derivatives
    profile = make_gluing_function(delta)
    tband = np.linspace(1.0 - delta * 0.98, 1.0 + delta * 0.98, n_points)
    for lam in lams:
        h, h1, h2 = band_height_functions(lam, lam, BETA, profile)
        hb = 2e-4 * delta

        def fd_band(fn):
            return np.array([central_diff4(fn, ti, hb) for ti in tband])

        add("h'", lam, h1(tband), fd_band(h))
        add("h''", lam, h2(tband), fd_band(h1))
        h1_lam, h2_lam = band_height_lambda_derivatives(lam, BETA, profile)
        h_l = 1e-3 * lam

        def fd_band_lam(order):
            def fn(lam_val):
                funcs = band_height_functions(lam_val, lam_val, BETA, profile)
                return funcs[order](tband)

            return (-fn(lam + 2 * h_l) + 8.0 * fn(lam + h_l)
                    - 8.0 * fn(lam - h_l) + fn(lam - 2 * h_l)) / (12.0 * h_l)

        add("d_lam h'", lam, h1_lam(tband), fd_band_lam(1))
        add("d_lam h''", lam, h2_lam(tband), fd_band_lam(2))

    # the band slope decreases in lam throughout the band
    h1_lam, _ = band_height_lambda_derivatives(band_lam, BETA, profile)
    slope_values = h1_lam(tband)
    sign_ok = bool(np.all(slope_values < 0.0))
    checks.append({"form": "d_lam h' < 0", "lam": float(band_lam),
                   "max_rel_err": float(np.max(slope_values)), "passed": sign_ok})

    return {"checks": checks, "passed": all(c["passed"] for c in checks)}
