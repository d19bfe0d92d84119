"""Tests for domain construction, measures, inclusion pairs and meshing."""

import math

import numpy as np
import pytest

from speclab import geometry as geo


def brute_diameter(poly):
    return max(
        math.dist(p, q) for i, p in enumerate(poly) for q in poly[i + 1 :]
    )


def rotate(poly, angle, center=(0.3, -0.7)):
    c, s = math.cos(angle), math.sin(angle)
    out = []
    for x, y in poly:
        dx, dy = x - center[0], y - center[1]
        out.append((center[0] + c * dx - s * dy, center[1] + s * dx + c * dy))
    return np.array(out)


# ---------------------------------------------------------------------------
# builders


def test_rhombus_build():
    poly = geo.build(geo.Rhombus(2.0, math.pi / 4))
    ref = {(-1.0, 0.0), (0.0, -1.0), (1.0, 0.0), (0.0, 1.0)}
    assert {tuple(np.round(p, 12)) for p in poly} == ref


def test_square_diameter_normalization():
    poly = geo.build(geo.Square(math.sqrt(2.0)))
    assert geo.diameter(poly) == pytest.approx(2.0, rel=1e-14)


def test_reuleaux_constant_width():
    poly = geo.build(geo.ReuleauxTriangle(2.0, 64))
    d2 = np.sum((poly[:, None] - poly[None, :]) ** 2, axis=2)
    assert math.sqrt(d2.max()) == pytest.approx(2.0, abs=1e-12)


def test_sector_vertices_on_circle():
    spec = geo.Sector(1.5, math.pi / 3, 32)
    poly = geo.build(spec)
    assert len(poly) == 34  # apex + 33 arc points
    radii = np.linalg.norm(poly[1:], axis=1)
    assert np.allclose(radii, 1.5, atol=1e-14)


def test_build_polygons_ccw_convex():
    specs = [
        geo.Rhombus(2.0, 0.1),
        geo.HalfRhombus(2.0, 0.3),
        geo.Rectangle(1.0, 0.01),
        geo.EquilateralTriangle(2.0),
        geo.RegularPolygon(7, 1.0),
        geo.Sector(1.0, 1.654, 16),
        geo.ReuleauxTriangle(1.0, 8),
    ]
    for spec in specs:
        poly = geo.build(spec)
        assert geo._signed_area(poly) > 0
        n = len(poly)
        for i in range(n):
            a, b, c = poly[i], poly[(i + 1) % n], poly[(i + 2) % n]
            assert geo._cross(b - a, c - b) >= -1e-12


# ---------------------------------------------------------------------------
# measures


def test_diameter_rhombus_long_diagonal():
    for theta in (0.1, 0.4, math.pi / 4 - 0.01):
        assert geo.diameter(geo.build(geo.Rhombus(3.0, theta))) == pytest.approx(3.0)


def test_diameter_regular_polygon_bounds():
    poly = geo.build(geo.RegularPolygon(64, 1.0))
    d = geo.diameter(poly)
    assert d == pytest.approx(brute_diameter([tuple(p) for p in poly]), rel=1e-14)
    assert 2.0 * math.cos(math.pi / 64) <= d <= 2.0


def test_area_values():
    assert geo.area(geo.build(geo.Square(1.0))) == pytest.approx(1.0, rel=1e-14)
    for theta in (0.2, 0.7):
        assert geo.area(geo.build(geo.Rhombus(2.0, theta))) == pytest.approx(
            2.0 * math.tan(theta), rel=1e-13
        )
    n = 256
    assert geo.area(geo.build(geo.RegularPolygon(n, 1.0))) == pytest.approx(
        0.5 * n * math.sin(2 * math.pi / n), rel=1e-13
    )
    assert abs(geo.area(geo.build(geo.RegularPolygon(256, 1.0))) - math.pi) < 1e-3


def test_measures_rigid_motion_invariant():
    poly = geo.build(geo.RegularPolygon(9, 1.3))
    for angle in (0.3, 1.1, 2.9):
        rot = rotate(poly, angle)
        assert geo.diameter(rot) == pytest.approx(geo.diameter(poly), abs=1e-12)
        assert geo.area(rot) == pytest.approx(geo.area(poly), abs=1e-12)


# ---------------------------------------------------------------------------
# inclusion pairs


def test_inclusion_pair_containment_and_determinism():
    inner, outer = geo.inclusion_pair(1, 12, 6)
    inner2, outer2 = geo.inclusion_pair(1, 12, 6)
    assert np.array_equal(inner, inner2) and np.array_equal(outer, outer2)
    for p in inner:
        assert geo.point_in_convex(outer, p)
    assert geo.diameter(inner) <= geo.diameter(outer) + 1e-15
    assert 0 < geo.area(inner) < geo.area(outer) < math.pi
    # golden values frozen from the first implementation run (seed 1)
    assert geo.area(inner) == pytest.approx(0.3426896399347, rel=1e-12)
    assert geo.area(outer) == pytest.approx(1.30824846090748, rel=1e-12)


def test_inclusion_pair_seeds_differ():
    a = geo.inclusion_pair(1, 12, 6)
    b = geo.inclusion_pair(2, 12, 6)
    assert not np.array_equal(a[1], b[1])


def test_inclusion_pair_many_seeds_valid():
    for seed in range(1, 40):
        inner, outer = geo.inclusion_pair(seed, 12, 6)
        assert all(geo.point_in_convex(outer, p) for p in inner)


def test_xorshift_reference_stream():
    # first outputs for seed state 1 (after the seed-mixing xor)
    rng = geo.Xorshift64Star(1)
    vals = [rng.uniform() for _ in range(4)]
    assert all(0.0 <= v < 1.0 for v in vals)
    rng2 = geo.Xorshift64Star(1)
    assert [rng2.uniform() for _ in range(4)] == vals


# ---------------------------------------------------------------------------
# meshing


def area_sum(mesh):
    p = mesh.vertices[mesh.triangles]
    return float(
        np.sum(
            0.5
            * (
                (p[:, 1, 0] - p[:, 0, 0]) * (p[:, 2, 1] - p[:, 0, 1])
                - (p[:, 1, 1] - p[:, 0, 1]) * (p[:, 2, 0] - p[:, 0, 0])
            )
        )
    )


def test_square_mesh_partitions_area():
    mesh = geo.triangulate(geo.Square(1.0), target_h=0.5)
    mesh.validate()
    assert area_sum(mesh) == pytest.approx(1.0, abs=1e-12)


def test_rhombus_mesh_default_neumann():
    mesh = geo.triangulate(geo.Rhombus(2.0, 0.1))
    mesh.validate()
    assert set(mesh.boundary_markers) == {"N"}
    assert area_sum(mesh) == pytest.approx(2.0 * math.tan(0.1), rel=1e-12)


def test_half_rhombus_base_dirichlet():
    mesh = geo.triangulate(geo.HalfRhombus(2.0, 0.3))
    mesh.validate()
    base_edges = [
        (e, m)
        for e, m in zip(mesh.boundary_edges, mesh.boundary_markers)
        if abs(mesh.vertices[e[0], 1]) < 1e-12 and abs(mesh.vertices[e[1], 1]) < 1e-12
    ]
    assert base_edges and all(m == "D" for _, m in base_edges)
    others = [
        m
        for e, m in zip(mesh.boundary_edges, mesh.boundary_markers)
        if not (abs(mesh.vertices[e[0], 1]) < 1e-12 and abs(mesh.vertices[e[1], 1]) < 1e-12)
    ]
    assert others and all(m == "N" for m in others)


def test_sector_arc_dirichlet_count():
    mesh = geo.triangulate(geo.Sector(1.0, math.pi / 3, 32), dirichlet_classes=frozenset({"arc"}))
    mesh.validate()
    assert sum(1 for m in mesh.boundary_markers if m == "D") == 32


def test_dirichlet_selector_no_match_errors():
    with pytest.raises(ValueError):
        geo.triangulate(geo.Square(1.0), dirichlet_classes=frozenset({"arc"}))


def test_refinement_halves_h_quadruples_triangles():
    mesh = geo.triangulate(geo.RegularPolygon(12, 1.0))
    fine = geo.refine_mesh(mesh)
    fine.validate()
    assert len(fine.triangles) == 4 * len(mesh.triangles)
    assert fine.h == pytest.approx(mesh.h / 2.0, rel=1e-12)


def test_inscribed_vertices_stay_inside():
    # sector and constant-width meshes keep vertices in the true domain
    mesh = geo.triangulate(geo.Sector(1.0, 1.654, 32), target_h=0.2)
    assert np.all(np.linalg.norm(mesh.vertices, axis=1) <= 1.0 + 1e-12)
    w = 2.0
    mesh = geo.triangulate(geo.ReuleauxTriangle(w, 16), target_h=0.5)
    corners = np.array([(0.0, 0.0), (w, 0.0), (0.5 * w, 0.5 * math.sqrt(3) * w)])
    for c in corners:
        assert np.all(np.linalg.norm(mesh.vertices - c, axis=1) <= w + 1e-12)


def test_triangulate_respects_target_h():
    for spec in (geo.Rhombus(2.0, 0.2), geo.RegularPolygon(16, 1.0), geo.Rectangle(1.0, 0.01)):
        mesh = geo.triangulate(spec, target_h=0.3)
        assert mesh.h <= 0.3 + 1e-12


def test_thin_rectangle_mesh_quality():
    mesh = geo.triangulate(geo.Rectangle(1.0, 0.01), target_h=0.05)
    mesh.validate()
    assert area_sum(mesh) == pytest.approx(0.01, rel=1e-12)


def test_mesh_io_roundtrip(tmp_path):
    mesh = geo.triangulate(geo.Sector(1.0, 1.0, 8), dirichlet_classes=frozenset({"arc"}))
    path = tmp_path / "mesh.txt"
    geo.write_mesh(mesh, path)
    back = geo.read_mesh(path)
    back.validate()
    assert np.allclose(back.vertices, mesh.vertices)
    assert np.array_equal(back.triangles, mesh.triangles)
    assert back.boundary_markers == mesh.boundary_markers
    assert back.h == pytest.approx(mesh.h, rel=1e-15)


def test_mesh_io_header(tmp_path):
    mesh = geo.triangulate(geo.Square(1.0), target_h=0.6)
    path = tmp_path / "mesh.txt"
    geo.write_mesh(mesh, path)
    first = path.read_text().splitlines()[0].split()
    assert list(map(int, first)) == [
        len(mesh.vertices),
        len(mesh.triangles),
        len(mesh.boundary_edges),
    ]


def test_scale_spec():
    spec = geo.Rhombus(2.0, 0.2)
    scaled = geo.scale_spec(spec, 3.0)
    assert scaled.D == 6.0 and scaled.theta == 0.2
    poly = geo.build(geo.scale_spec(geo.RegularPolygon(8, 1.0), 2.0))
    assert geo.diameter(poly) == pytest.approx(2.0 * geo.diameter(geo.build(geo.RegularPolygon(8, 1.0))))


def test_convex_hull_polygon_validation():
    with pytest.raises(ValueError):
        geo.ConvexHullPolygon(((0, 0), (1, 0), (1, 1), (0.5, 0.2)))  # nonconvex
    with pytest.raises(ValueError):
        geo.ConvexHullPolygon(((0, 0), (0, 1), (1, 0)))  # clockwise
