import math
import xml.etree.ElementTree as ET

from elgamalmap.elgamal import elgamal_permutation
from elgamalmap.numth import GroupParams
from elgamalmap.permstat import CycleStructure, count_cycles, cycle_decompose
from elgamalmap.render import cycle_diagram_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


def _circles(svg_text):
    root = ET.fromstring(svg_text)
    return root.findall(f"{SVG_NS}circle")


def test_one_circle_per_cycle_small():
    svg = cycle_diagram_svg(cycle_decompose(elgamal_permutation(GroupParams(3, 2))))
    assert len(_circles(svg)) == 1


def test_radius_ratio_matches_cycle_lengths():
    structure = cycle_decompose(elgamal_permutation(GroupParams(5, 2)))
    circles = _circles(cycle_diagram_svg(structure))
    radii = sorted(float(c.get("r")) for c in circles)
    assert len(radii) == 2
    assert radii[1] / radii[0] == 3.0  # lengths {3, 1}


def test_circle_count_at_1009():
    structure = cycle_decompose(elgamal_permutation(GroupParams(1009, 11)))
    svg = cycle_diagram_svg(structure)
    assert len(_circles(svg)) == count_cycles(structure)
    assert 'version="1.1"' in svg


def test_circles_do_not_overlap():
    structure = CycleStructure(60, (20, 15, 10, 7, 5, 1, 1, 1))
    circles = _circles(cycle_diagram_svg(structure))
    geoms = [
        (float(c.get("cx")), float(c.get("cy")), float(c.get("r"))) for c in circles
    ]
    for i in range(len(geoms)):
        for j in range(i + 1, len(geoms)):
            x1, y1, r1 = geoms[i]
            x2, y2, r2 = geoms[j]
            assert math.hypot(x1 - x2, y1 - y2) >= r1 + r2


def test_rendering_is_deterministic():
    structure = CycleStructure(10, (4, 3, 2, 1))
    assert cycle_diagram_svg(structure) == cycle_diagram_svg(structure)


def test_circles_stay_inside_canvas():
    structure = CycleStructure(100, tuple([30, 25, 20] + [1] * 25))
    svg = cycle_diagram_svg(structure)
    root = ET.fromstring(svg)
    width = float(root.get("width"))
    height = float(root.get("height"))
    for c in _circles(svg):
        cx, cy, r = (float(c.get(a)) for a in ("cx", "cy", "r"))
        assert r <= cx <= width - r
        assert r <= cy <= height - r
