"""SVG drawings of coverings: one stroke color per forest.

Points are drawn at their coordinates (y up) or, for abstract coverings,
clockwise on a circle starting at the top. Every edge of every forest is
one ``<line>``; designated absent edges are dotted ``<path>`` markers.
"""

from __future__ import annotations

import colorsys
import math
import xml.etree.ElementTree as ET

from .forest import Covering

SVG_NS = "http://www.w3.org/2000/svg"
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"]


def forest_color(i: int) -> str:
    if i < len(PALETTE):
        return PALETTE[i]
    r, g, b = colorsys.hls_to_rgb((i * 0.618034) % 1.0, 0.45, 0.65)
    return "#{:02x}{:02x}{:02x}".format(int(r * 255), int(g * 255), int(b * 255))


def layout(c: Covering, size: float, margin: float) -> dict[int, tuple[float, float]]:
    inner = size - 2 * margin
    if c.geometry is None:
        r = inner / 2
        return {
            v: (margin + r + r * math.sin(2 * math.pi * (v - 1) / c.n),
                margin + r - r * math.cos(2 * math.pi * (v - 1) / c.n))
            for v in range(1, c.n + 1)
        }
    pts = c.geometry.points
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = inner / span
    return {
        v: (margin + (p.x - min(xs)) * scale, size - margin - (p.y - min(ys)) * scale)
        for v, p in enumerate(pts, start=1)
    }


def render_svg(c: Covering, absent=(), size: float = 480, margin: float = 32) -> str:
    pos = layout(c, size, margin)
    ET.register_namespace("", SVG_NS)
    root = ET.Element(
        f"{{{SVG_NS}}}svg",
        {"width": str(size), "height": str(size), "viewBox": f"0 0 {size} {size}"},
    )
    for i, f in enumerate(c.forests):
        g = ET.SubElement(root, f"{{{SVG_NS}}}g",
                          {"class": f"forest-{i}", "stroke": forest_color(i), "stroke-width": "2"})
        for u, v in f.edges:
            (x1, y1), (x2, y2) = pos[u], pos[v]
            ET.SubElement(g, f"{{{SVG_NS}}}line", {
                "x1": f"{x1:.2f}", "y1": f"{y1:.2f}", "x2": f"{x2:.2f}", "y2": f"{y2:.2f}",
            })
    for u, v in absent:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ET.SubElement(root, f"{{{SVG_NS}}}path", {
            "class": "absent", "d": f"M {x1:.2f} {y1:.2f} L {x2:.2f} {y2:.2f}",
            "stroke": "#000000", "stroke-dasharray": "2 4", "fill": "none",
        })
    for v, (x, y) in pos.items():
        ET.SubElement(root, f"{{{SVG_NS}}}circle",
                      {"cx": f"{x:.2f}", "cy": f"{y:.2f}", "r": "4", "fill": "#000000"})
        label = ET.SubElement(root, f"{{{SVG_NS}}}text",
                              {"x": f"{x + 6:.2f}", "y": f"{y - 6:.2f}", "font-size": "11"})
        label.text = f"P{v}"
    return ET.tostring(root, encoding="unicode") + "\n"
