"""Exact polyhedral engine: V/H conversion, integral points, f-vectors.

The converter is a double description run over the rationals (integer
vectors after row scaling, so arithmetic never leaves Z). Both directions
reduce to one cone computation:

* vertices: homogenize a*x <= b as (-b, a).(x0, x) <= 0 plus the
  structural row x0 >= 0; rays with x0 > 0 scale to vertices.
* hull: a valid inequality a*x <= b is a point (-b, a) of the cone
  {y : y.(1, v_i) <= 0}; extreme rays are facets, lineality is the
  affine hull.

Lineality is absorbed on the fly (the run starts from R^n as a basis of
lines), rays carry exact tight-set bitmasks, and adjacency during the
combination step is the combinatorial test: a pair is adjacent iff no
third ray's tight set contains their common tight set. A popcount
prefilter (common tight count >= n - |lines| - 2, forced by the rank of
the pair's minimal face) keeps the test cheap.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    DimensionError,
    InfeasibleError,
    ResourceCapError,
    UnboundedError,
)
from .linalg import affine_rank, matrix_rank
from .rationals import canon
from .vertices import VertexSet

log = logging.getLogger("clawpoly.engine")

DEFAULT_MAX_DIM = 12
MAX_DIM_ENV = "CLAWPOLY_MAX_DIM"


def _normalize_int_vector(vec):
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g > 1:
        vec = tuple(x // g for x in vec)
    return tuple(vec)


def _scale_row_to_int(row):
    """Clear denominators of one rational row, preserving direction."""
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    return tuple(int(x * denom) for x in row)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _dd_cone(rows, n, label=""):
    """Double description of {x in R^n : row . x <= 0 for each row}.

    Returns (lines, rays): integer basis vectors of the lineality space and
    the extreme rays of the pointed quotient, each ray paired with its
    tight-set bitmask over the input rows.
    """
    lines = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    rays = []  # (vector, tight mask)
    for t, a in enumerate(rows):
        bit = 1 << t
        pivot = None
        for idx, l in enumerate(lines):
            if _dot(a, l):
                pivot = idx
                break
        if pivot is not None:
            # absorb one line: it leaves the lineality space and becomes the
            # ray pointing into the new halfspace; everything else is
            # projected onto the hyperplane along it
            lstar = lines.pop(pivot)
            s = _dot(a, lstar)
            r0 = lstar if s < 0 else tuple(-x for x in lstar)
            mag = abs(s)
            new_lines = []
            for l in lines:
                vl = _dot(a, l)
                if vl:
                    l = _normalize_int_vector(
                        tuple(s * x - vl * y for x, y in zip(l, lstar))
                    )
                new_lines.append(l)
            lines = new_lines
            new_rays = []
            for r, mask in rays:
                vr = _dot(a, r)
                if vr:
                    r = _normalize_int_vector(
                        tuple(mag * x + vr * y for x, y in zip(r, r0))
                    )
                new_rays.append((r, mask | bit))
            full = bit - 1  # tight on every earlier row, not on this one
            new_rays.append((r0, full))
            rays = new_rays
            continue
        plus = []  # violating side: a . r > 0
        zero = []
        minus = []
        for entry in rays:
            v = _dot(a, entry[0])
            if v > 0:
                plus.append((entry, v))
            elif v < 0:
                minus.append((entry, v))
            else:
                zero.append(entry)
        if not plus:
            rays = [(r, mask | bit) for r, mask in zero] + [e for e, _ in minus]
            continue
        threshold = n - len(lines) - 2
        all_masks = [mask for _, mask in rays]
        combined = []
        for (rp, mp), vp in plus:
            for (rm, mm), vm in minus:
                common = mp & mm
                if common.bit_count() < threshold:
                    continue
                adjacent = True
                for other in all_masks:
                    if common & other == common and other != mp and other != mm:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vec = _normalize_int_vector(
                    tuple(vp * x - vm * y for x, y in zip(rm, rp))
                )
                combined.append((vec, common | bit))
        rays = (
            [(r, mask | bit) for r, mask in zero]
            + [e for e, _ in minus]
            + combined
        )
        if label:
            log.info(
                "%s: row %d/%d, %d rays, %d lines",
                label, t + 1, len(rows), len(rays), len(lines),
            )
    return lines, rays


@dataclass(frozen=True)
class PolytopeDD:
    """Double description of a polytope.

    facets are pairs (a, b) meaning a . x <= b with coprime integer
    entries; equations cut out the affine hull (empty when full-
    dimensional); incidence[f] is a bitmask with vertex bit v set iff
    vertex v is tight on facet f.
    """

    dimension: int
    vertices: tuple
    facets: tuple
    equations: tuple
    incidence: tuple

    def homogenized_rows(self):
        rows = [(-b,) + tuple(a) for a, b in self.facets]
        for a, b in self.equations:
            rows.append((-b,) + tuple(a))
            rows.append((b,) + tuple(-x for x in a))
        return rows


@dataclass(frozen=True)
class FVector:
    counts: tuple
    complete: bool


@dataclass(frozen=True)
class EqualityReport:
    equal: bool
    only_a: tuple
    only_b: tuple
    checked_a: int
    checked_b: int


def _dimension_cap(max_dim):
    if max_dim is not None:
        return max_dim
    raw = os.environ.get(MAX_DIM_ENV)
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise ResourceCapError(f"{MAX_DIM_ENV} must be an integer, got {raw!r}")


def _source_rows(source):
    if hasattr(source, "homogenized_rows"):
        return list(source.homogenized_rows())
    raise DimensionError(f"cannot read inequalities from {type(source).__name__}")


def vertices_from_inequalities(source, max_dim=None) -> VertexSet:
    """Exact vertex enumeration of a bounded inequality system.

    source is an InequalitySystem or PolytopeDD. The dimension cap defaults
    to 12 and is overridden by max_dim or the CLAWPOLY_MAX_DIM environment
    variable; long runs log progress per inserted row.
    """
    d = source.dimension
    cap = _dimension_cap(max_dim)
    if d > cap:
        raise ResourceCapError(
            f"dimension {d} exceeds cap {cap}; raise {MAX_DIM_ENV} or max_dim to override"
        )
    rows = [_scale_row_to_int(r) for r in _source_rows(source)]
    # deterministic insertion order: sort by the (b, -a) file representation
    rows.sort(key=lambda r: tuple(-x for x in r))
    structural = tuple([-1] + [0] * d)
    rows.insert(0, structural)
    label = f"vertices[{getattr(source, 'model', '')} d={d}]"
    lines, rays = _dd_cone(rows, d + 1, label=label if d >= 10 else "")
    points = []
    recession = False
    for r, _ in rays:
        if r[0] > 0:
            points.append(tuple(canon(Fraction(x, r[0])) for x in r[1:]))
        else:
            recession = True
    if not points:
        raise InfeasibleError("inequality system has no solutions")
    if recession or lines:
        raise UnboundedError("polyhedron is unbounded; vertex set is not complete")
    points = sorted(set(points))
    shape = getattr(source, "shape", (d,))
    return VertexSet(dimension=d, shape=shape, points=tuple(points))


def _canonical_equation(a, b):
    vec = _normalize_int_vector(tuple(a) + (b,))
    lead = next((x for x in vec if x), 0)
    if lead < 0:
        vec = tuple(-x for x in vec)
    return vec[:-1], vec[-1]


def hull_from_vertices(points) -> PolytopeDD:
    """Convex hull: irredundant facets, affine-hull equations, incidence.

    Accepts a VertexSet or an iterable of rational point tuples; duplicates
    are removed. Vertices of the hull are the input points whose tight
    facet and equation normals have full rank.
    """
    if hasattr(points, "points"):
        pts = list(points.points)
    else:
        pts = [tuple(canon(x) for x in p) for p in points]
    if not pts:
        raise InfeasibleError("hull of an empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise DimensionError("points of mixed dimension")
    pts = sorted(set(pts))
    rows = sorted(_scale_row_to_int((1,) + p) for p in pts)
    lines, rays = _dd_cone(rows, d + 1)
    facets = []
    for y, _ in rays:
        a = y[1:]
        if any(a):
            # the full ray (-b, a) is already coprime
            facets.append((tuple(a), -y[0]))
    facets.sort()
    equations = sorted(_canonical_equation(l[1:], -l[0]) for l in lines)
    eq_normals = [a for a, _ in equations]
    vertices = []
    for p in pts:
        tight = [a for a, b in facets if _dot(a, p) == b]
        if matrix_rank(tight + eq_normals, d) == d:
            vertices.append(p)
    incidence = []
    for a, b in facets:
        mask = 0
        for vi, p in enumerate(vertices):
            if _dot(a, p) == b:
                mask |= 1 << vi
        incidence.append(mask)
    return PolytopeDD(
        dimension=d,
        vertices=tuple(vertices),
        facets=tuple(facets),
        equations=tuple(equations),
        incidence=tuple(incidence),
    )


def polytope_from_inequalities(source, max_dim=None) -> PolytopeDD:
    """Vertex enumeration followed by a hull run: irredundant double description."""
    return hull_from_vertices(vertices_from_inequalities(source, max_dim=max_dim))


def _vertex_points(obj):
    if isinstance(obj, PolytopeDD):
        return obj.dimension, set(obj.vertices)
    if hasattr(obj, "points"):
        return obj.dimension, set(obj.points)
    raise DimensionError(f"cannot read vertices from {type(obj).__name__}")


def equal_polytopes(a, b) -> EqualityReport:
    """Exact vertex-set comparison of two polytopes (PolytopeDD or VertexSet)."""
    dim_a, pts_a = _vertex_points(a)
    dim_b, pts_b = _vertex_points(b)
    if dim_a != dim_b:
        raise DimensionError(f"dimension mismatch: {dim_a} != {dim_b}")
    only_a = tuple(sorted(pts_a - pts_b))
    only_b = tuple(sorted(pts_b - pts_a))
    return EqualityReport(
        equal=not only_a and not only_b,
        only_a=only_a,
        only_b=only_b,
        checked_a=len(pts_a),
        checked_b=len(pts_b),
    )


EXHAUSTIVE_SCAN_BITS = 21


def enumerate_integral_points(system) -> list:
    """All 0/1 points of a model system, sorted lexicographically.

    Up to 21 coordinates this is an explicit scan of every bitmask with
    early exit on the first violated inequality; above that, a depth-first
    search pruned by per-inequality completion bounds.
    """
    d = system.dimension
    if d <= EXHAUSTIVE_SCAN_BITS:
        checks = system._binary_checks
        out = []
        for mask in range(1 << d):
            ok = True
            for pos, neg, rhs, _ in checks:
                if (mask & pos).bit_count() - (mask & neg).bit_count() > rhs:
                    ok = False
                    break
            if ok:
                out.append(tuple((mask >> i) & 1 for i in range(d)))
        out.sort()
        return out
    return _pruned_scan(system)


def _pruned_scan(system):
    d = system.dimension
    ineqs = system.inequalities
    pos_sets = [frozenset(q.pos) for q in ineqs]
    neg_sets = [frozenset(q.neg) for q in ineqs]
    rhss = [q.rhs for q in ineqs]
    # suffix table: how far each inequality can still drop using coords >= k
    neg_suffix = []
    for ns_set in neg_sets:
        ns = [0] * (d + 1)
        for k in range(d - 1, -1, -1):
            ns[k] = ns[k + 1] + (1 if k in ns_set else 0)
        neg_suffix.append(ns)
    values = [0] * len(ineqs)
    point = [0] * d
    out = []

    def descend(k):
        for i, rhs in enumerate(rhss):
            if values[i] - neg_suffix[i][k] > rhs:
                return
        if k == d:
            out.append(tuple(point))
            return
        point[k] = 0
        descend(k + 1)
        point[k] = 1
        for i in range(len(ineqs)):
            if k in pos_sets[i]:
                values[i] += 1
            elif k in neg_sets[i]:
                values[i] -= 1
        descend(k + 1)
        for i in range(len(ineqs)):
            if k in pos_sets[i]:
                values[i] -= 1
            elif k in neg_sets[i]:
                values[i] += 1
        point[k] = 0

    descend(0)
    out.sort()
    return out


DEFAULT_MAX_FACES = 200_000


def f_vector(poly: PolytopeDD, max_faces: int = DEFAULT_MAX_FACES) -> FVector:
    """Face counts (f_0, ..., f_{dim-1}) from the vertex-facet incidence.

    Every proper face is an intersection of facets, so the face lattice is
    the closure of the facet vertex-sets under intersection. Stops with
    complete=False if the lattice exceeds max_faces.
    """
    vertices = poly.vertices
    facet_masks = list(poly.incidence)
    seen = set(facet_masks)
    seen.discard(0)
    frontier = list(seen)
    complete = True
    while frontier:
        mask = frontier.pop()
        for fm in facet_masks:
            m = mask & fm
            if m and m not in seen:
                seen.add(m)
                frontier.append(m)
        if len(seen) > max_faces:
            complete = False
            break
    dim = affine_rank(vertices)
    counts = [0] * max(dim, 0)
    for mask in seen:
        face_pts = [vertices[i] for i in range(len(vertices)) if mask >> i & 1]
        fdim = affine_rank(face_pts)
        if 0 <= fdim < dim:
            counts[fdim] += 1
    return FVector(tuple(counts), complete)
