"""Deterministic SVG pictures of surface fans and their polytopes."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from .divisors import NOT_SPANNED, LineBundle, max_convexity, support_function
from .errors import DimensionError
from .fan import Fan, _angle_order
from .polytope import edge_length, lattice_points, vertices

PANEL = 360
MARGIN = 30
FILLS = ("#dbe8f6", "#f6e7d0")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _svg_root(width, height):
    return ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )


def _draw_fan(parent, fan: Fan):
    g = ET.SubElement(parent, "g", id="fan")
    cx = cy = PANEL / 2
    longest = max(math.hypot(*r) for r in fan.rays)
    unit = (PANEL / 2 - MARGIN) / longest

    def pt(v, s=1.0):
        return cx + s * unit * v[0], cy - s * unit * v[1]

    for c, cone in enumerate(fan.cones):
        a, b = (fan.rays[i] for i in cone)
        corners = [(cx, cy), pt(a), pt(b)]
        ET.SubElement(
            g,
            "polygon",
            points=" ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in corners),
            fill=FILLS[c % 2],
            stroke="none",
        )
    for i in _angle_order(fan.rays):
        x, y = pt(fan.rays[i])
        ET.SubElement(
            g, "line", x1=_fmt(cx), y1=_fmt(cy), x2=_fmt(x), y2=_fmt(y),
            stroke="black", attrib={"stroke-width": "1.5", "marker-end": "url(#arrow)"},
        )
        lx, ly = pt(fan.rays[i], 1.08)
        label = ET.SubElement(g, "text", x=_fmt(lx), y=_fmt(ly), attrib={"font-size": "12", "text-anchor": "middle"})
        label.text = f"D{i + 1}"


def _draw_polytope(parent, L: LineBundle, offset: float):
    g = ET.SubElement(parent, "g", id="polytope")
    psi = support_function(L)
    pts = lattice_points(L).points
    if max_convexity(psi) is NOT_SPANNED:
        note = ET.SubElement(g, "text", x=_fmt(offset + PANEL / 2), y=_fmt(PANEL / 2), attrib={"text-anchor": "middle"})
        note.text = "psi_L not convex"
        return
    verts = vertices(L)
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    unit = (PANEL - 2 * MARGIN) / span
    mx = (max(xs) + min(xs)) / 2
    my = (max(ys) + min(ys)) / 2

    def pt(v):
        return offset + PANEL / 2 + unit * (v[0] - mx), PANEL / 2 - unit * (v[1] - my)

    # one slope per cone; cones in angular order give the boundary in order
    fan = L.fan
    ring = _cone_cycle(fan)
    boundary = []
    for c in ring:
        m = psi.slopes[c]
        if not boundary or boundary[-1] != m:
            boundary.append(m)
    if len(boundary) > 1 and boundary[0] == boundary[-1]:
        boundary.pop()
    if len(boundary) >= 3:
        ET.SubElement(
            g, "polygon",
            points=" ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(pt, boundary)),
            fill="#eef6e6", stroke="#3a6b22", attrib={"stroke-width": "2"},
        )
    elif len(boundary) == 2:
        (x1, y1), (x2, y2) = map(pt, boundary)
        ET.SubElement(g, "line", x1=_fmt(x1), y1=_fmt(y1), x2=_fmt(x2), y2=_fmt(y2), stroke="#3a6b22", attrib={"stroke-width": "2"})
    for w in fan.walls:
        a, b = psi.slopes[w.cone_a], psi.slopes[w.cone_b]
        if a == b:
            continue
        (x1, y1), (x2, y2) = pt(a), pt(b)
        label = ET.SubElement(
            g, "text", x=_fmt((x1 + x2) / 2), y=_fmt((y1 + y2) / 2 - 4),
            attrib={"font-size": "12", "text-anchor": "middle", "fill": "#3a6b22"},
        )
        label.text = str(edge_length(L, w))
    for p in pts:
        x, y = pt(p)
        ET.SubElement(g, "circle", cx=_fmt(x), cy=_fmt(y), r="3", fill="black")


def _cone_cycle(fan: Fan) -> list[int]:
    order = _angle_order(fan.rays)
    ring = []
    for i in range(len(order)):
        key = tuple(sorted((order[i], order[(i + 1) % len(order)])))
        ring.append(fan.cones.index(key))
    return ring


def render_svg(fan: Fan, bundle: LineBundle | None = None) -> str:
    if fan.dim != 2:
        raise DimensionError(f"can only render surfaces, fan has dimension {fan.dim}")
    width = PANEL * (2 if bundle is not None else 1)
    root = _svg_root(width, PANEL)
    defs = ET.SubElement(root, "defs")
    marker = ET.SubElement(
        defs, "marker", id="arrow", viewBox="0 0 10 10", refX="9", refY="5",
        markerWidth="6", markerHeight="6", orient="auto",
    )
    ET.SubElement(marker, "path", d="M0,0 L10,5 L0,10 z", fill="black")
    _draw_fan(root, fan)
    if bundle is not None:
        _draw_polytope(root, bundle, PANEL)
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
