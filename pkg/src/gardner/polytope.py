"""The polytope of value-1 G-matrices as a combinatorial object.

For side length d, the G-matrices of value 1 form a (2d-2)-dimensional
lattice polytope whose 2d vertices are the row indicators R_1..R_d (all ones
in one row) and column indicators C_1..C_d. The full vertex set is a circuit:
R_1 + ... + R_d = J = C_1 + ... + C_d is its unique affine dependence, so
dropping any single vertex leaves an affinely independent set.

This module provides those vertices, the triangulation into the d simplices
obtained by omitting one row vertex at a time, the matching half-open
decomposition, exact barycentric coordinates, and the linear projection onto
R^(2d-2) under which each triangulation cell becomes the standard simplex
(which is how one sees the cells are unimodular).

Vertex order is C_1..C_d then R_1..R_d everywhere, so determinants and
half-open bookkeeping are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from . import linalg
from .matrix import GMatrix, Scalar, SquareMatrix, decompose_canonical

VertexKind = Literal["R", "C"]


@dataclass(frozen=True)
class Vertex:
    """A row indicator R_i (kind "R") or column indicator C_j (kind "C")."""

    kind: VertexKind
    index: int
    d: int

    def __post_init__(self) -> None:
        if self.kind not in ("R", "C"):
            raise ValueError(f"kind must be 'R' or 'C', got {self.kind!r}")
        if not (1 <= self.index <= self.d):
            raise ValueError(f"index {self.index} out of range for d={self.d}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def row_vertex(i: int, d: int) -> Vertex:
    return Vertex("R", i, d)


def col_vertex(j: int, d: int) -> Vertex:
    return Vertex("C", j, d)


def all_vertices(d: int) -> tuple[Vertex, ...]:
    """C_1..C_d then R_1..R_d."""
    return tuple(col_vertex(j, d) for j in range(1, d + 1)) + \
        tuple(row_vertex(i, d) for i in range(1, d + 1))


def vertex_matrix(v: Vertex) -> SquareMatrix:
    """The 0/1 matrix of a vertex; always a G-matrix of value 1."""
    if v.kind == "R":
        return SquareMatrix(tuple(
            (1,) * v.d if i == v.index else (0,) * v.d for i in range(1, v.d + 1)))
    return SquareMatrix(tuple(
        tuple(1 if j == v.index else 0 for j in range(1, v.d + 1)) for _ in range(v.d)))


def _vertex_flat(v: Vertex) -> tuple[int, ...]:
    return vertex_matrix(v).flat()


@dataclass(frozen=True)
class LatticeSimplex:
    """An ordered set of distinct vertices, affinely independent by the
    circuit property. The full 2d-vertex set is rejected: it is the circuit
    itself, not a simplex."""

    vertices: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValueError("simplex needs at least one vertex")
        d = verts[0].d
        if any(v.d != d for v in verts):
            raise ValueError("mixed side lengths")
        if len(set(verts)) != len(verts):
            raise ValueError("repeated vertex")
        if len(verts) == 2 * d:
            raise ValueError("the full vertex set is the circuit, not a simplex")

    @property
    def d(self) -> int:
        return self.vertices[0].d

    @property
    def m(self) -> int:
        """Number of vertices; the simplex has dimension m - 1."""
        return len(self.vertices)


@dataclass(frozen=True)
class HalfOpenSimplex:
    """A simplex with the facets opposite the vertices in ``excluded``
    removed: points must give those vertices strictly positive weight."""

    simplex: LatticeSimplex
    excluded: frozenset[Vertex]

    def __post_init__(self) -> None:
        object.__setattr__(self, "excluded", frozenset(self.excluded))
        if not self.excluded <= set(self.simplex.vertices):
            raise ValueError("excluded vertices must belong to the simplex")


def circuit_check(d: int) -> bool:
    """True iff the row indicators and the column indicators both sum to J."""
    if d < 1:
        raise ValueError("d must be >= 1")
    j = SquareMatrix.all_ones(d)
    row_sum = SquareMatrix.zero(d)
    col_sum = SquareMatrix.zero(d)
    for i in range(1, d + 1):
        row_sum = row_sum + vertex_matrix(row_vertex(i, d))
        col_sum = col_sum + vertex_matrix(col_vertex(i, d))
    return row_sum == j == col_sum


def affine_hull_residual(a: SquareMatrix,
                         dilation: Scalar = 1) -> tuple[Scalar, list[tuple[int, int, int, int]]]:
    """Distance of a matrix from the hull equations at a given dilation.

    Returns |sum of entries - d*dilation| together with every violated 2x2
    exchange equation A[i,j] + A[k,l] = A[i,l] + A[k,j], reported through the
    first-row/first-column reduction as quadruples (1, 1, i, j). Both parts
    are zero/empty exactly when A lies in the affine hull of the dilated
    polytope.
    """
    rows = a.rows
    d = a.d
    sum_residual = abs(a.total() - d * dilation)
    violations = [(1, 1, i + 1, j + 1)
                  for i in range(1, d) for j in range(1, d)
                  if rows[i][j] + rows[0][0] != rows[0][j] + rows[i][0]]
    return sum_residual, violations


def triangulation_cells(d: int, omitted_kind: VertexKind = "R") -> list[LatticeSimplex]:
    """The d cells obtained by omitting one vertex of the given kind at a time.

    Omitting row vertices (the default) and omitting column vertices are the
    only two triangulations using no new vertices; cell k omits R_k (resp.
    C_k) and has 2d - 1 vertices.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    cells = []
    for k in range(1, d + 1):
        if omitted_kind == "R":
            verts = [col_vertex(j, d) for j in range(1, d + 1)]
            verts += [row_vertex(i, d) for i in range(1, d + 1) if i != k]
        elif omitted_kind == "C":
            verts = [col_vertex(j, d) for j in range(1, d + 1) if j != k]
            verts += [row_vertex(i, d) for i in range(1, d + 1)]
        else:
            raise ValueError(f"omitted_kind must be 'R' or 'C', got {omitted_kind!r}")
        cells.append(LatticeSimplex(tuple(verts)))
    return cells


def cell_intersection(i: int, j: int, d: int) -> LatticeSimplex:
    """Common face of the i-th and j-th triangulation cells: all column
    vertices plus the row vertices away from i and j (2d - 2 vertices)."""
    if i == j:
        raise ValueError("cell indices must differ")
    if not (1 <= i <= d and 1 <= j <= d):
        raise ValueError("cell index out of range")
    verts = [col_vertex(c, d) for c in range(1, d + 1)]
    verts += [row_vertex(r, d) for r in range(1, d + 1) if r not in (i, j)]
    return LatticeSimplex(tuple(verts))


def halfopen_cells(d: int) -> list[HalfOpenSimplex]:
    """Half-open decomposition: cell k excludes {R_1, ..., R_(k-1)}.

    The cells then partition the polytope, so lattice points can be counted
    cell by cell with no inclusion-exclusion.
    """
    cells = triangulation_cells(d)
    return [HalfOpenSimplex(cell, frozenset(row_vertex(i, d) for i in range(1, k)))
            for k, cell in enumerate(cells, start=1)]


def locate(g: GMatrix, omitted_kind: VertexKind = "R") -> int:
    """Index k of the half-open cell containing the board.

    For the row-omitting decomposition this is the smallest k with row label
    mu_k = 0 in the canonical (columns-first) labeling; the column-omitting
    variant uses the rows-first labeling and the column labels instead.
    """
    if omitted_kind == "R":
        lab = decompose_canonical(g, "columns-first")
        labels = lab.row_labels
    elif omitted_kind == "C":
        lab = decompose_canonical(g, "rows-first")
        labels = lab.col_labels
    else:
        raise ValueError(f"omitted_kind must be 'R' or 'C', got {omitted_kind!r}")
    return next(k for k, x in enumerate(labels, start=1) if x == 0)


def barycentric(g: GMatrix, cell: LatticeSimplex) -> tuple[Fraction, ...] | None:
    """Convex coefficients of A / value(A) with respect to the cell vertices.

    Returns the unique nonnegative affine representation, or None when the
    normalized board lies outside the cell (negative coefficients or not in
    the cell's affine span).
    """
    if g.d != cell.d:
        raise ValueError("dimension mismatch")
    if g.value == 0:
        raise ValueError("the zero board has no normalized point")
    verts = [_vertex_flat(v) for v in cell.vertices]
    target = [Fraction(x) / g.value for x in g.matrix.flat()]
    rows = [[Fraction(v[c]) for v in verts] for c in range(g.d * g.d)]
    rows.append([Fraction(1)] * len(verts))
    rhs = target + [Fraction(1)]
    coeffs = linalg.solve_unique(rows, rhs)
    if coeffs is None or any(x < 0 for x in coeffs):
        return None
    return coeffs


def halfopen_contains(g: GMatrix, cell: HalfOpenSimplex) -> bool:
    """Membership in a half-open cell: inside the simplex with strictly
    positive weight on every excluded vertex."""
    coeffs = barycentric(g, cell.simplex)
    if coeffs is None:
        return False
    return all(c > 0 for v, c in zip(cell.simplex.vertices, coeffs)
               if v in cell.excluded)


def project_pi(a: SquareMatrix) -> tuple[Scalar, ...]:
    """Linear projection to R^(2d-2): first row (tail) and first column
    (tail, shifted by the corner).

    pi(A) = (A[1,2], ..., A[1,d], A[2,1] - A[1,1], ..., A[d,1] - A[1,1]);
    it sends C_j to e_(j-1) (with e_0 = 0) and R_(i+1) to e_(d-1+i), so each
    triangulation cell maps onto the standard simplex.
    """
    d = a.d
    if d < 2:
        raise ValueError("projection needs d >= 2")
    first_row = a.rows[0]
    corner = first_row[0]
    return tuple(first_row[1:]) + tuple(a.rows[i][0] - corner for i in range(1, d))


def unimodularity_check(cell: LatticeSimplex) -> bool:
    """True iff the projected vertex differences have determinant +-1.

    Requires a full-dimensional cell (2d - 1 vertices); anything smaller is
    rejected as degenerate. Exact integer arithmetic throughout.
    """
    d = cell.d
    if cell.m != 2 * d - 1:
        raise ValueError("degenerate cell: expected 2d-1 vertices")
    if d == 1:
        return True
    pts = [project_pi(vertex_matrix(v)) for v in cell.vertices]
    base = pts[0]
    diffs = [[p[c] - base[c] for c in range(2 * d - 2)] for p in pts[1:]]
    return abs(linalg.det_bareiss(diffs)) == 1
