"""SVG rendering of instances and 2-factors: points on a circle, class
shades from dark to light, edges as straight chords.  Output bytes are a
pure function of the inputs."""

from __future__ import annotations

import math

from convexcycles.crossings import TwoFactor
from convexcycles.instance import ConvexInstance, InputError, validate_instance

_SIZE = 420
_RADIUS = 160
_CENTER = _SIZE / 2
_CAPTION_Y = _SIZE + 24


def _shade(label: int, k: int) -> str:
    value = round(255 * (label - 1) / (k - 1))
    return f"#{value:02x}{value:02x}{value:02x}"


def _point(p: int, m: int, radius: float) -> tuple[float, float]:
    theta = 2.0 * math.pi * p / m
    return (_CENTER + radius * math.cos(theta), _CENTER - radius * math.sin(theta))


def render_svg(inst: ConvexInstance, tf: TwoFactor | None = None) -> str:
    """Deterministic SVG document; includes chords only when tf is given."""
    verdict = validate_instance(inst)
    if not verdict:
        raise InputError("; ".join(verdict.problems))
    if tf is not None and tf.instance.colors != inst.colors:
        raise InputError("2-factor belongs to a different instance")
    m = inst.size
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SIZE}" height="{_SIZE + 40}" '
        f'viewBox="0 0 {_SIZE} {_SIZE + 40}">',
        f'<rect width="{_SIZE}" height="{_SIZE + 40}" fill="white"/>',
    ]
    if tf is not None:
        for u, v in tf.edges:
            x1, y1 = _point(u, m, _RADIUS)
            x2, y2 = _point(v, m, _RADIUS)
            parts.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                f'stroke="black" stroke-width="1.5"/>'
            )
    for p in range(m):
        x, y = _point(p, m, _RADIUS)
        parts.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="7" '
            f'fill="{_shade(inst.colors[p], inst.k)}" stroke="black"/>'
        )
        lx, ly = _point(p, m, _RADIUS + 22)
        parts.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="12" '
            f'text-anchor="middle" dominant-baseline="middle">{p}</text>'
        )
    if tf is not None:
        caption = f"crossings: {tf.crossing_count}"
    else:
        caption = f"instance k={inst.k} n={inst.n}"
    parts.append(
        f'<text id="caption" x="{_CENTER:.2f}" y="{_CAPTION_Y:.2f}" '
        f'font-size="16" text-anchor="middle">{caption}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
