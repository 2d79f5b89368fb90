"""V-representation of claw-tree model polytopes.

A labeling assigns one group element to each of the m leaves of a claw tree;
it is consistent when the elements sum to the identity. Stacking the 0/1
embedding of each leaf's element as a column yields an (|G|-1) x m matrix,
and the consistent labelings' matrices are exactly the polytope's vertices,
|G|^(m-1) of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DimensionError, LeafCountError, ResourceCapError
from .groups import (
    GroupElement,
    GroupSpec,
    decode_embed,
    embed,
    group_elements,
    group_sum,
    identity,
    neg,
)
from .matrices import Matrix
from .rationals import Rational

# Generation refuses above this many vertices unless explicitly overridden.
GENERATION_CAP = 4 ** 11


@dataclass(frozen=True)
class Labeling:
    spec: GroupSpec
    elements: tuple[GroupElement, ...]

    def __post_init__(self):
        if len(self.elements) < 3:
            raise LeafCountError(f"claw trees need m >= 3 leaves, got {len(self.elements)}")
        for g in self.elements:
            if len(g.residues) != len(self.spec.orders):
                raise DimensionError("labeling element does not belong to the group")
            if any(not 0 <= r < n for r, n in zip(g.residues, self.spec.orders)):
                raise DimensionError(f"residues out of range: {g.residues}")

    @property
    def leaves(self) -> int:
        return len(self.elements)

    def is_consistent(self) -> bool:
        return group_sum(self.spec, self.elements) == identity(self.spec)


@dataclass(frozen=True)
class VertexSet:
    """Deterministically ordered list of flattened vertices plus its matrix shape."""

    dimension: int
    shape: tuple[int, int]
    points: tuple[tuple[Rational, ...], ...]

    def __len__(self) -> int:
        return len(self.points)

    def matrices(self):
        rows, cols = self.shape
        return [Matrix.from_flat(p, rows, cols) for p in self.points]


def labeling_to_matrix(labeling: Labeling) -> Matrix:
    """Stack the embedding of each leaf element as a column."""
    cols = [embed(labeling.spec, g) for g in labeling.elements]
    nrows = labeling.spec.size - 1
    return Matrix.from_rows(
        [tuple(col[r] for col in cols) for r in range(nrows)]
    )


def matrix_to_labeling(spec: GroupSpec, p: Matrix) -> Labeling | None:
    """Decode a matrix back to its labeling; None when some column is not an embedding image."""
    if p.nrows != spec.size - 1:
        raise DimensionError(
            f"matrix has {p.nrows} rows, group {spec.name()} embeds into {spec.size - 1}"
        )
    decoded = []
    for j in range(1, p.ncols + 1):
        g = decode_embed(spec, p.column(j))
        if g is None:
            return None
        decoded.append(g)
    return Labeling(spec, tuple(decoded))


def is_vertex(spec: GroupSpec, m: int, p: Matrix) -> bool:
    """True iff p is the matrix of a consistent labeling on m leaves."""
    if m < 3:
        raise LeafCountError(f"m >= 3 required, got {m}")
    if p.ncols != m or p.nrows != spec.size - 1:
        raise DimensionError(
            f"expected a {spec.size - 1}x{m} matrix, got {p.nrows}x{p.ncols}"
        )
    labeling = matrix_to_labeling(spec, p)
    return labeling is not None and labeling.is_consistent()


def _flat_vertex(cols, nrows: int, m: int) -> tuple[int, ...]:
    # row-major flatten without building a Matrix
    return tuple(cols[j][r] for r in range(nrows) for j in range(m))


def generate_vertices(spec: GroupSpec, m: int, allow_large: bool = False) -> VertexSet:
    """All vertices, ordered lexicographically in the labeling.

    Leaves 1..m-1 run over the canonical element order; the last element is
    forced to make the sum the identity, so exactly |G|^(m-1) matrices come
    out and they are pairwise distinct.
    """
    if m < 3:
        raise LeafCountError(f"m >= 3 required, got {m}")
    count = spec.size ** (m - 1)
    if count > GENERATION_CAP and not allow_large:
        raise ResourceCapError(
            f"{count} vertices exceeds the generation cap {GENERATION_CAP}; "
            "pass allow_large to override"
        )
    order = group_elements(spec)
    columns = {g: embed(spec, g) for g in order}
    nrows = spec.size - 1
    points = []
    for prefix in product(order, repeat=m - 1):
        last = neg(spec, group_sum(spec, prefix))
        cols = [columns[g] for g in prefix] + [columns[last]]
        points.append(_flat_vertex(cols, nrows, m))
    return VertexSet(dimension=nrows * m, shape=(nrows, m), points=tuple(points))


def generate_vertices_fullscan(spec: GroupSpec, m: int) -> VertexSet:
    """Independent oracle: scan all |G|^m labelings and keep the consistent ones.

    Same output contract as generate_vertices but derived without forcing the
    last leaf. Intended for cross-checks at small sizes.
    """
    if m < 3:
        raise LeafCountError(f"m >= 3 required, got {m}")
    if spec.size ** m > GENERATION_CAP:
        raise ResourceCapError("fullscan oracle is restricted to small inputs")
    order = group_elements(spec)
    columns = {g: embed(spec, g) for g in order}
    nrows = spec.size - 1
    ident = identity(spec)
    points = []
    for combo in product(order, repeat=m):
        if group_sum(spec, combo) == ident:
            points.append(_flat_vertex([columns[g] for g in combo], nrows, m))
    return VertexSet(dimension=nrows * m, shape=(nrows, m), points=tuple(points))
