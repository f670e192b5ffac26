import xml.etree.ElementTree as ET
from fractions import Fraction as F

from kuzwalls.presets import E_C, M_L
from kuzwalls.svg import render, wall_line
from kuzwalls.walls import enumerate_walls

NS = {"s": "http://www.w3.org/2000/svg"}


def parse(text):
    return ET.fromstring(text)


def test_structure_for_ec():
    walls = enumerate_walls(E_C, -1)
    root = parse(render(E_C, walls, -1))
    assert root.find("s:path[@id='parabola']", NS) is not None
    points = root.findall(".//s:g[@class='b-point']", NS)
    assert [p.get("id") for p in points] == [f"B({i})" for i in range(-3, 4)]
    lines = root.findall(".//s:line[@class='wall-line']", NS)
    assert [l.get("data-alpha-sq") for l in lines] == ["9/16", "1/16", "1/144"]
    # rank-0 target is drawn as a direction
    target = root.find(".//s:g[@id='target']", NS)
    assert target.find("s:line", NS) is not None


def test_rank_nonzero_target_is_a_point():
    root = parse(render(M_L, enumerate_walls(M_L, -1), -1))
    assert root.find(".//s:g[@id='target']/s:circle", NS) is not None
    assert len(root.findall(".//s:line[@class='wall-line']", NS)) == 1


def test_wall_line_passes_through_target():
    w = enumerate_walls(M_L, -1)[0]
    (x0, y0), (x1, y1) = wall_line(M_L, w)
    t = M_L.at(-1)
    tx, ty = float(t.c1 / t.rank), float(t.c2 / t.rank)
    # the target lies on the drawn line
    assert abs((y1 - y0) * (tx - x0) - (ty - y0) * (x1 - x0)) < 1e-9
    # and so does the kernel point (0, alpha^2 / 2)
    assert abs((y1 - y0) * (0 - x0) - (float(w.alpha_sq / 2) - y0) * (x1 - x0)) < 1e-9


def test_render_is_deterministic():
    walls = enumerate_walls(E_C, -1, F(1, 20))
    assert render(E_C, walls) == render(E_C, walls)
