from fractions import Fraction

import pytest

from clawpoly.coordchange import to_prime_coords
from clawpoly.engine import (
    EXHAUSTIVE_SCAN_BITS,
    FVector,
    PolytopeDD,
    _pruned_scan,
    enumerate_integral_points,
    equal_polytopes,
    f_vector,
    hull_from_vertices,
    polytope_from_inequalities,
    vertices_from_inequalities,
)
from clawpoly.errors import (
    DimensionError,
    InfeasibleError,
    ResourceCapError,
    UnboundedError,
)
from clawpoly.groups import Z2Z2
from clawpoly.halfspaces import demihypercube_system, kimura3_system
from clawpoly.vertices import generate_vertices


class RowSource:
    """Minimal inequality source: homogenized rows (-b, a1..ad)."""

    def __init__(self, dimension, rows):
        self.dimension = dimension
        self._rows = rows

    def homogenized_rows(self):
        return list(self._rows)


# --- hull on hand-built inputs -------------------------------------------------

def test_hull_unit_simplex():
    poly = hull_from_vertices([(0, 0), (1, 0), (0, 1)])
    assert poly.vertices == ((0, 0), (0, 1), (1, 0))
    assert poly.equations == ()
    assert set(poly.facets) == {
        ((-1, 0), 0),
        ((0, -1), 0),
        ((1, 1), 1),
    }


def test_hull_segment_has_equation():
    poly = hull_from_vertices([(0, 0), (2, 2)])
    assert poly.vertices == ((0, 0), (2, 2))
    # affine hull x = y, sign-canonicalized to lead positive
    assert poly.equations == (((1, -1), 0),)
    assert len(poly.facets) == 2


def test_hull_single_point():
    poly = hull_from_vertices([(3, 4, 5)])
    assert poly.vertices == ((3, 4, 5),)
    assert len(poly.equations) == 3
    assert poly.facets == ()


def test_hull_dedupes_and_drops_interior():
    pts = [(0, 0), (1, 0), (0, 1), (1, 1), (1, 1), (Fraction(1, 2), Fraction(1, 2))]
    poly = hull_from_vertices(pts)
    assert poly.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert len(poly.facets) == 4


def test_hull_mixed_dimension():
    with pytest.raises(DimensionError):
        hull_from_vertices([(0, 0), (1, 0, 0)])


def test_hull_empty():
    with pytest.raises(InfeasibleError):
        hull_from_vertices([])


def test_hull_facets_are_coprime_and_valid():
    poly = hull_from_vertices([(0, 0), (4, 0), (0, 4)])
    from math import gcd

    for a, b in poly.facets:
        g = 0
        for x in (*a, b):
            g = gcd(g, x)
        assert g == 1
        for p in poly.vertices:
            assert sum(c * x for c, x in zip(a, p)) <= b


# --- vertex enumeration ----------------------------------------------------------

def test_square_vertices():
    # 0 <= x,y <= 1 as homogenized rows (-b, a)
    rows = [(0, -1, 0), (0, 0, -1), (-1, 1, 0), (-1, 0, 1)]
    vs = vertices_from_inequalities(RowSource(2, rows))
    assert vs.points == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_infeasible_system():
    # x <= -1 and -x <= 0
    rows = [(1, 1), (0, -1)]
    with pytest.raises(InfeasibleError):
        vertices_from_inequalities(RowSource(1, rows))


def test_unbounded_system():
    # only x >= 0
    rows = [(0, -1)]
    with pytest.raises(UnboundedError):
        vertices_from_inequalities(RowSource(1, rows))


def test_dimension_cap():
    rows = [(0, -1, 0), (0, 0, -1), (1, 1, 0), (1, 0, 1)]
    with pytest.raises(ResourceCapError):
        vertices_from_inequalities(RowSource(2, rows), max_dim=1)


def test_cap_env_override(monkeypatch):
    rows = [(0, -1), (-1, 1)]
    monkeypatch.setenv("CLAWPOLY_MAX_DIM", "0")
    with pytest.raises(ResourceCapError):
        vertices_from_inequalities(RowSource(1, rows))
    monkeypatch.setenv("CLAWPOLY_MAX_DIM", "junk")
    with pytest.raises(ResourceCapError):
        vertices_from_inequalities(RowSource(1, rows))
    monkeypatch.setenv("CLAWPOLY_MAX_DIM", "1")
    assert vertices_from_inequalities(RowSource(1, rows)).points == ((0,), (1,))


def test_rational_vertex_coordinates():
    # x >= 0, y >= 0, 2x + 3y <= 1
    rows = [(0, -1, 0), (0, 0, -1), (-1, 2, 3)]
    vs = vertices_from_inequalities(RowSource(2, rows))
    assert vs.points == (
        (0, 0),
        (0, Fraction(1, 3)),
        (Fraction(1, 2), 0),
    )


# --- model polytopes -------------------------------------------------------------

@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_demihypercube_vertices_even_weight(m):
    vs = vertices_from_inequalities(demihypercube_system(m), max_dim=m)
    expected = sorted(
        tuple((mask >> i) & 1 for i in range(m))
        for mask in range(1 << m)
        if bin(mask).count("1") % 2 == 0
    )
    assert list(vs.points) == expected


def test_standard_system_vertices_match_generated(k3, delta3_vertices):
    rep = equal_polytopes(delta3_vertices, k3)
    assert rep.equal
    assert rep.checked_a == rep.checked_b == 16


def test_prime_system_vertices_are_transform_images(k3, prime3_vertices):
    images = {tuple(to_prime_coords(p).flatten()) for p in k3.matrices()}
    assert set(prime3_vertices.points) == images
    assert all(
        x == int(x) for point in prime3_vertices.points for x in point
    )


def test_hull_recovers_standard_inequalities(k3, hull_k3):
    d3 = kimura3_system(3)
    hull_rows = {(-b,) + tuple(a) for a, b in hull_k3.facets}
    model_rows = {tuple(r) for r in d3.homogenized_rows()}
    assert hull_rows == model_rows
    assert hull_k3.equations == ()
    assert len(hull_k3.vertices) == 16


def test_roundtrip_inequalities_to_hull(delta3_vertices, hull_k3):
    # vertex enumeration then hull gives back the same irredundant system
    poly = hull_from_vertices(delta3_vertices)
    assert poly.facets == hull_k3.facets
    assert poly.vertices == hull_k3.vertices


def test_polytope_from_inequalities_composes():
    poly = polytope_from_inequalities(demihypercube_system(3), max_dim=3)
    assert len(poly.vertices) == 4
    assert len(poly.facets) == 4
    assert poly.equations == ()


def test_enumeration_is_deterministic():
    a = vertices_from_inequalities(kimura3_system(3))
    b = vertices_from_inequalities(kimura3_system(3))
    assert a == b


# --- polytope equality -----------------------------------------------------------

def test_equal_polytopes_detects_difference(k3):
    dh = vertices_from_inequalities(demihypercube_system(3), max_dim=3)
    with pytest.raises(DimensionError):
        equal_polytopes(k3, dh)


def test_equal_polytopes_reports_sides():
    a = hull_from_vertices([(0, 0), (1, 0), (0, 1)])
    b = hull_from_vertices([(0, 0), (1, 0), (1, 1)])
    rep = equal_polytopes(a, b)
    assert not rep.equal
    assert rep.only_a == ((0, 1),)
    assert rep.only_b == ((1, 1),)


# --- integral point scans ----------------------------------------------------------

def test_integral_points_match_generated_vertices(k3):
    pts = enumerate_integral_points(kimura3_system(3))
    assert [tuple(p) for p in pts] == sorted(k3.points)


def test_pruned_scan_agrees_with_exhaustive():
    sys4 = kimura3_system(4)
    assert sys4.dimension <= EXHAUSTIVE_SCAN_BITS
    exhaustive = enumerate_integral_points(sys4)
    assert _pruned_scan(sys4) == exhaustive
    assert len(exhaustive) == 64


def test_integral_points_demihypercube():
    pts = enumerate_integral_points(demihypercube_system(4))
    assert len(pts) == 8
    assert all(sum(p) % 2 == 0 for p in pts)


# --- face counting -----------------------------------------------------------------

def test_f_vector_simplex():
    poly = hull_from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    fv = f_vector(poly)
    assert fv == FVector((4, 6, 4), True)


def test_f_vector_demihypercube3():
    poly = polytope_from_inequalities(demihypercube_system(3), max_dim=3)
    assert f_vector(poly).counts == (4, 6, 4)


def test_f_vector_square():
    poly = hull_from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert f_vector(poly).counts == (4, 4)


def test_f_vector_cap():
    poly = polytope_from_inequalities(demihypercube_system(3), max_dim=3)
    fv = f_vector(poly, max_faces=3)
    assert fv.complete is False


def test_f_vector_euler_relation(hull_k3):
    fv = f_vector(hull_k3)
    assert fv.complete
    # alternating sum over proper faces of a 9-polytope
    assert sum((-1) ** i * c for i, c in enumerate(fv.counts)) == 2
