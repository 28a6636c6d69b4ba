"""Hand-emitted SVG plots of the census growth data plus a checksummed
manifest.  One growth plot per fitted (degree, class): the log-log points,
the fitted line, and a dashed guide of slope n(n+1)/2; one trend plot per
degree for the reducible fraction.  The plots carry no timestamps, so a rerun
with the same inputs is byte-identical; the manifest holds the run metadata.
"""
from __future__ import annotations

import datetime
import math
import os

from .asymptotics import ExponentFit
from .census import CensusRecord, reducible_fraction
from .tables import dumps_json, fmt_float, sha256_text, write_text_atomic

_W, _H = 640, 480
_ML, _MR, _MT, _MB = 70, 20, 40, 50


def _scale(vals, lo_px, hi_px):
    lo, hi = min(vals), max(vals)
    span = (hi - lo) or 1.0
    return lambda v: lo_px + (v - lo) / span * (hi_px - lo_px)


def _svg_open(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}" font-family="monospace" font-size="12">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W/2:.1f}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{_ML}" y1="{_H-_MB}" x2="{_W-_MR}" y2="{_H-_MB}" stroke="black"/>',
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H-_MB}" stroke="black"/>',
    ]


def _axis_labels(xlab: str, ylab: str, xs, ys, fx, fy) -> list[str]:
    parts = [
        f'<text x="{(_ML+_W-_MR)/2:.1f}" y="{_H-12}" text-anchor="middle">{xlab}</text>',
        f'<text x="16" y="{(_MT+_H-_MB)/2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {(_MT+_H-_MB)/2:.1f})">{ylab}</text>',
    ]
    for v in (min(xs), max(xs)):
        parts.append(
            f'<text x="{fx(v):.1f}" y="{_H-_MB+16}" text-anchor="middle">{v:.3g}</text>'
        )
    for v in (min(ys), max(ys)):
        parts.append(
            f'<text x="{_ML-6:.1f}" y="{fy(v)+4:.1f}" text-anchor="end">{v:.3g}</text>'
        )
    return parts


def growth_svg(fit: ExponentFit) -> str:
    """Log-log scatter with the fitted line and the predicted-slope guide."""
    xs = [math.log(r) for r in fit.radii]
    ys = [math.log(c) for c in fit.counts]
    gx = _scale(xs, _ML, _W - _MR)
    gy = _scale(ys, _H - _MB, _MT)
    parts = _svg_open(
        f"degree {fit.degree} {fit.poly_class} census: slope {fit.slope:.4f} "
        f"(guide {fmt_float(fit.predicted_exponent)})"
    )
    parts += _axis_labels("ln R", "ln count", xs, ys, gx, gy)
    x0, x1 = min(xs), max(xs)
    y0f, y1f = fit.intercept + fit.slope * x0, fit.intercept + fit.slope * x1
    parts.append(
        f'<line x1="{gx(x0):.1f}" y1="{gy(y0f):.1f}" x2="{gx(x1):.1f}" y2="{gy(y1f):.1f}" '
        f'stroke="steelblue" stroke-width="1.5"/>'
    )
    xm, ym = sum(xs) / len(xs), sum(ys) / len(ys)
    g = fit.predicted_exponent
    parts.append(
        f'<line x1="{gx(x0):.1f}" y1="{gy(ym + g*(x0-xm)):.1f}" '
        f'x2="{gx(x1):.1f}" y2="{gy(ym + g*(x1-xm)):.1f}" '
        f'stroke="gray" stroke-width="1.2" stroke-dasharray="6,4"/>'
    )
    for x, y in zip(xs, ys):
        parts.append(f'<circle cx="{gx(x):.1f}" cy="{gy(y):.1f}" r="3.5" fill="firebrick"/>')
    parts.append(
        f'<text x="{_W-_MR-4}" y="{_MT+14}" text-anchor="end" fill="gray">'
        f"dashed: slope {fmt_float(fit.predicted_exponent)}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def reducible_svg(degree: int, records: list[CensusRecord]) -> str:
    """Reducible fraction of the Perron count against ln R."""
    records = sorted(records, key=lambda r: r.radius)
    xs = [math.log(r.radius) for r in records]
    ys = [reducible_fraction(r) for r in records]
    gx = _scale(xs, _ML, _W - _MR)
    gy = _scale(ys + [0.0], _H - _MB, _MT)
    parts = _svg_open(f"degree {degree}: reducible fraction of the Perron census")
    parts += _axis_labels("ln R", "reducible fraction", xs, ys + [0.0], gx, gy)
    pts = " ".join(f"{gx(x):.1f},{gy(y):.1f}" for x, y in zip(xs, ys))
    parts.append(f'<polyline points="{pts}" fill="none" stroke="steelblue" stroke-width="1.5"/>')
    for x, y in zip(xs, ys):
        parts.append(f'<circle cx="{gx(x):.1f}" cy="{gy(y):.1f}" r="3.5" fill="firebrick"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_report(fits: list[ExponentFit], census_rows: list[CensusRecord],
                  out_dir: str, config: dict, version: str) -> dict:
    """Write plots and the manifest into out_dir; returns the manifest."""
    if not fits:
        raise ValueError("report needs at least one exponent fit")
    os.makedirs(out_dir, exist_ok=True)
    files: dict[str, str] = {}
    for fit in fits:
        name = f"growth_degree{fit.degree}_{fit.poly_class}.svg"
        text = growth_svg(fit)
        write_text_atomic(os.path.join(out_dir, name), text)
        files[name] = sha256_text(text)
    by_degree: dict[int, list[CensusRecord]] = {}
    for rec in census_rows:
        if rec.perron_polys > 0:
            by_degree.setdefault(rec.degree, []).append(rec)
    for degree, recs in sorted(by_degree.items()):
        if len({r.radius for r in recs}) < 2:
            continue
        name = f"reducible_degree{degree}.svg"
        text = reducible_svg(degree, recs)
        write_text_atomic(os.path.join(out_dir, name), text)
        files[name] = sha256_text(text)
    manifest = {
        "version": version,
        "config": config,
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "files": files,
    }
    write_text_atomic(os.path.join(out_dir, "manifest.json"), dumps_json(manifest))
    return manifest
