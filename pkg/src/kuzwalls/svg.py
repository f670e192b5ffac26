"""The (ch1/rk, ch2/rk) cartoon: Delta = 0 parabola, B_i points, target and wall lines.

Every drawn item is its own element with an ``id``/``class`` so tests can
check structure without rendering.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

from .character import Character, b_char
from .walls import Wall

WIDTH, HEIGHT = 640, 480
X_RANGE = (-2.0, 2.0)
Y_RANGE = (-0.5, 2.0)
B_RANGE = range(-3, 4)


def _px(x: float, y: float) -> tuple:
    x0, x1 = X_RANGE
    y0, y1 = Y_RANGE
    return (round((x - x0) / (x1 - x0) * WIDTH, 2), round((y1 - y) / (y1 - y0) * HEIGHT, 2))


def _per_rank(v: Character) -> tuple:
    return (float(v.c1 / v.rank), float(v.c2 / v.rank))


def wall_line(target: Character, wall: Wall) -> tuple:
    """Two plot points on the line through ker Z and the target (frame = wall.beta)."""
    t = target.at(wall.beta)
    kx, ky = 0.0, float(wall.alpha_sq / 2)
    if t.rank != 0:
        tx, ty = _per_rank(t)
        dx, dy = tx - kx, ty - ky
    else:
        dx, dy = float(t.c1), float(t.c2)
    if dx == 0:
        return (kx, Y_RANGE[0]), (kx, Y_RANGE[1])
    s = dy / dx
    return (X_RANGE[0], ky + s * (X_RANGE[0] - kx)), (X_RANGE[1], ky + s * (X_RANGE[1] - kx))


def cartoon(target: Character, walls: list, beta=-1) -> ET.Element:
    beta = Fraction(beta)
    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                     width=str(WIDTH), height=str(HEIGHT), viewBox=f"0 0 {WIDTH} {HEIGHT}")
    ET.SubElement(svg, "title").text = f"ch1/rk vs ch2/rk at beta={beta}"
    axes = ET.SubElement(svg, "g", id="axes", stroke="#999")
    for (a, b), (c, d) in (((X_RANGE[0], 0), (X_RANGE[1], 0)), ((0, Y_RANGE[0]), (0, Y_RANGE[1]))):
        (x1, y1), (x2, y2) = _px(a, b), _px(c, d)
        ET.SubElement(axes, "line", x1=str(x1), y1=str(y1), x2=str(x2), y2=str(y2))

    # Delta = 0 is y = x^2 / 2 in per-rank coordinates
    n = 80
    pts = [_px(X_RANGE[0] + (X_RANGE[1] - X_RANGE[0]) * k / n,
               (X_RANGE[0] + (X_RANGE[1] - X_RANGE[0]) * k / n) ** 2 / 2) for k in range(n + 1)]
    d = "M " + " L ".join(f"{x} {y}" for x, y in pts)
    ET.SubElement(svg, "path", {"id": "parabola", "class": "parabola", "d": d,
                                "fill": "none", "stroke": "black"})

    bpts = ET.SubElement(svg, "g", id="bimodules")
    for i in B_RANGE:
        x, y = _px(*_per_rank(b_char(i).at(beta)))
        g = ET.SubElement(bpts, "g", {"id": f"B({i})", "class": "b-point"})
        ET.SubElement(g, "circle", cx=str(x), cy=str(y), r="3", fill="black")
        ET.SubElement(g, "text", x=str(x + 4), y=str(y - 4)).text = f"B{i}"

    t = target.at(beta)
    g = ET.SubElement(svg, "g", {"id": "target", "class": "target"})
    if t.rank != 0:
        x, y = _px(*_per_rank(t))
        ET.SubElement(g, "circle", cx=str(x), cy=str(y), r="4", fill="red")
        ET.SubElement(g, "text", x=str(x + 4), y=str(y + 12)).text = "target"
    else:
        # rank zero: a direction, drawn as an arrow from the origin
        (x1, y1) = _px(0, 0)
        scale = 1.5 / max(abs(float(t.c1)), abs(float(t.c2)))
        (x2, y2) = _px(float(t.c1) * scale, float(t.c2) * scale)
        ET.SubElement(g, "line", x1=str(x1), y1=str(y1), x2=str(x2), y2=str(y2), stroke="red")
        ET.SubElement(g, "text", x=str(x2), y=str(y2 - 4)).text = "target (rank 0)"

    lines = ET.SubElement(svg, "g", id="walls")
    for k, w in enumerate(walls):
        (a, b), (c, e) = wall_line(target, w)
        (x1, y1), (x2, y2) = _px(a, b), _px(c, e)
        ET.SubElement(lines, "line", {"id": f"wall-{k}", "class": "wall-line",
                                      "data-alpha-sq": str(w.alpha_sq),
                                      "x1": str(x1), "y1": str(y1), "x2": str(x2), "y2": str(y2),
                                      "stroke": "blue", "stroke-dasharray": "4 2"})
        kx, ky = _px(0, float(w.alpha_sq / 2))
        ET.SubElement(lines, "circle", {"class": "kernel", "data-alpha-sq": str(w.alpha_sq),
                                        "cx": str(kx), "cy": str(ky), "r": "2", "fill": "blue"})
    return svg


def render(target: Character, walls: list, beta=-1) -> str:
    root = cartoon(target, walls, beta)
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
