import cmath
import json
import math
from pathlib import Path

import numpy as np
import pytest

import jshapes

DATA = Path(__file__).resolve().parents[2] / "data"


def unit_circle(n=512):
    return jshapes.JordanCurve([cmath.rect(1.0, 2 * math.pi * k / n) for k in range(n)])


def test_circle_map_and_polynomial():
    c = unit_circle()
    m = jshapes.build_exterior_map(c, 0j)
    assert abs(m.capacity - 1) < 1e-9
    shape = jshapes.prepare_shape(c, 0.1, epsilon=0.0625)
    p = shape.polynomial(64)
    assert p.degree == 65
    z = 0.7 + 0.9j
    assert abs(p.omega(z) - ((z / 1.0625) ** 64 - 1)) < 1e-10 * abs((z / 1.0625) ** 64 - 1)
    for r in p.roots[:8]:
        assert abs(p(r) - r) <= 1e-8 * abs(r)


def test_certify_iterate_render():
    shape = jshapes.prepare_shape(jshapes.load_curve(str(DATA / "square.txt")), 0.05)
    poly, cert = shape.find_min_degree()
    assert cert.passed
    status, _ = jshapes.iterate(poly, shape.t, cert.escape_radius, cert.capture_radius)
    assert status == jshapes.OrbitStatus.INTERIOR_CAPTURED
    status, _ = jshapes.iterate(poly, 3 + 3j, cert.escape_radius, cert.capture_radius)
    assert status == jshapes.OrbitStatus.ESCAPED
    field = jshapes.render(poly, -0.5 - 0.5j, 1.5 + 1.5j, 64, 64, cert.escape_radius, cert.capture_radius)
    assert field["status"].shape == (64, 64)
    values = set(np.unique(field["status"]).tolist())
    assert {int(jshapes.OrbitStatus.INTERIOR_CAPTURED), int(jshapes.OrbitStatus.ESCAPED)} <= values


def test_errors_raise():
    with pytest.raises(jshapes.JShapesError, match="NOT_SIMPLE"):
        jshapes.load_curve(str(DATA / "figure_eight.txt"))
    with pytest.raises(jshapes.JShapesError, match="OFFSET_COLLAPSE"):
        jshapes.offset_annulus(jshapes.load_curve(str(DATA / "square.txt")), 0.6)


def test_run_command(tmp_path):
    code = jshapes.run("build", [str(DATA / "circle.txt")], out=str(tmp_path), eps_geom=0.05)
    assert code == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["status"] == "PASS"
    assert jshapes.run("render", [str(tmp_path / "nope.json")], out=str(tmp_path)) == 6
