"""Serialization of profile curves and reports.

Profile curves travel as CSV with header ``s,r,h`` (one sample per row,
UTF-8, LF line endings) or as a JSON variant that also carries the
axis-closure flags and a name.  All writers are atomic (temp file +
rename) and deterministic: floats are emitted with ``repr``, JSON keys
are sorted.
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .profiles import CurveError, ProfileCurve

__all__ = [
    "atomic_write_text",
    "save_curve_csv",
    "load_curve_csv",
    "save_curve_json",
    "load_curve_json",
    "load_curve",
    "dump_json",
]


def atomic_write_text(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path)) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def save_curve_csv(curve: ProfileCurve, path: str):
    lines = ["s,r,h"]
    for s, r, h in zip(curve.s, curve.r, curve.h):
        lines.append(f"{s!r},{r!r},{h!r}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def load_curve_csv(path: str, closed_on_axis=None, name: str = "") -> ProfileCurve:
    s, r, h = [], [], []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header.replace(" ", "") != "s,r,h":
            raise CurveError(f"{path}:1: expected header 's,r,h', got {header!r}")
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise CurveError(f"{path}:{lineno}: expected 3 fields, got {len(parts)}")
            try:
                vals = [float(p) for p in parts]
            except ValueError as exc:
                raise CurveError(f"{path}:{lineno}: {exc}") from exc
            s.append(vals[0])
            r.append(vals[1])
            h.append(vals[2])
    r = np.asarray(r)
    h = np.asarray(h)
    s = np.asarray(s)
    if closed_on_axis is None:
        scale = max(np.hypot(r.max() - r.min(), h.max() - h.min()), 1.0)
        closed_on_axis = (r[0] <= 1e-9 * scale, r[-1] <= 1e-9 * scale)
    return ProfileCurve(s, r, h, closed_on_axis=tuple(closed_on_axis), name=name)


def save_curve_json(curve: ProfileCurve, path: str, metadata: dict | None = None):
    payload = {
        "closed_on_axis": list(curve.closed_on_axis),
        "metadata": metadata or {},
        "name": curve.name,
        "samples": {
            "h": [float(x) for x in curve.h],
            "r": [float(x) for x in curve.r],
            "s": [float(x) for x in curve.s],
        },
    }
    atomic_write_text(path, dump_json(payload))


def load_curve_json(path: str) -> ProfileCurve:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CurveError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from exc
    try:
        samples = payload["samples"]
        return ProfileCurve(
            np.asarray(samples["s"], dtype=float),
            np.asarray(samples["r"], dtype=float),
            np.asarray(samples["h"], dtype=float),
            closed_on_axis=tuple(bool(b) for b in payload["closed_on_axis"]),
            name=str(payload.get("name", "")),
        )
    except KeyError as exc:
        raise CurveError(f"{path}: missing field {exc}") from exc


def load_curve(path: str) -> ProfileCurve:
    if path.endswith(".json"):
        return load_curve_json(path)
    return load_curve_csv(path)
