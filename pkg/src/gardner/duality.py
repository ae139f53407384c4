"""Birkhoff-side duality for the G-matrix polytope.

Under the trace inner product <A, B> = sum_ij A[i,j]*B[i,j], the value-1
G-matrices and the doubly stochastic matrices cut each other out of the
nonnegative orthant:

    {G-matrices of value 1}  = R>=0 orthant  ∩  {A : <A, P_s> = 1 for all s},
    {doubly stochastic}      = R>=0 orthant  ∩  {B : <B, R_i> = <B, C_j> = 1},

where P_s runs over the permutation matrices (the Birkhoff vertices) and
R_i, C_j over the row/column indicators (the G-matrix vertices). Pairs of
polytopes in this relation are called Gale-dual here.

The general mechanism is the dual of an affine subspace: for L = q + U with
q orthogonal to U and q != 0, the set of y pairing to 1 against all of L is

    L-dagger = q / |q|^2 + (U-perp ∩ q-perp),

an involution with dim L + dim L-dagger = D - 1. Whenever q > 0 entrywise,
intersecting L and L-dagger with the nonnegative orthant produces a Gale-dual
pair. Everything is exact rational arithmetic.

Both polytopes are Gorenstein of index d (the all-ones matrix J is the unique
interior lattice point of the d-th dilate, and subtracting J retracts the
interior of the N-th dilate onto the (N-d)-th) and compressed (each equals
the intersection of the unit cube with its affine hull); checkers for both
properties are included.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import linalg
from .counting import iter_g_matrices_flat
from .matrix import (FACTORIAL_GUARD, FactorialGuardError, Scalar,
                     SquareMatrix, is_g_matrix_fast, scale, trick_generate)
from .polytope import all_vertices, vertex_matrix


@dataclass(frozen=True)
class Permutation:
    """A bijection on 1..d, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("images are not a bijection on 1..d")

    @property
    def d(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(1, d + 1)))


def permutations_of(d: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, d + 1)):
        yield Permutation(images)


def permutation_matrix(sigma: Permutation | Sequence[int]) -> SquareMatrix:
    """0/1 matrix with a single 1 per row and column, at (i, sigma(i))."""
    if not isinstance(sigma, Permutation):
        sigma = Permutation(tuple(sigma))
    d = sigma.d
    return SquareMatrix(tuple(
        tuple(1 if sigma.images[i - 1] == j else 0 for j in range(1, d + 1))
        for i in range(1, d + 1)))


def is_doubly_stochastic(b: SquareMatrix) -> bool:
    """Nonnegative with every row and column summing to exactly 1."""
    if not b.is_nonnegative():
        return False
    d = b.d
    return all(sum(b.row(i)) == 1 for i in range(1, d + 1)) and \
        all(sum(b.col(j)) == 1 for j in range(1, d + 1))


def pairing(a: SquareMatrix, b: SquareMatrix) -> Scalar:
    """Trace inner product sum_ij A[i,j] * B[i,j]."""
    if a.d != b.d:
        raise ValueError("dimension mismatch")
    return sum(x * y for ra, rb in zip(a.rows, b.rows) for x, y in zip(ra, rb))


def _bounded_fraction(rng: random.Random, lo: int, hi: int) -> Fraction:
    # Seeded rationals with denominator <= 1000.
    return Fraction(rng.randint(lo, hi), rng.randint(1, 1000))


@dataclass(frozen=True)
class GalePairReport:
    d: int
    vertex_pairings_checked: int
    samples_checked: int
    counterexample: str | None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def gale_pair_check(d: int, sample_count: int = 40, seed: int = 0,
                    guard: int = FACTORIAL_GUARD) -> GalePairReport:
    """Verify the Gale-dual relation between the two polytopes.

    (a) every vertex-vertex pairing <R_i or C_j, P_s> equals 1 exactly, over
    all d! permutations; (b) on random rational matrices, pairing to 1
    against every P_s is equivalent to the fast value-1 G-check, and row/col
    sums 1 + nonnegativity is equivalent to pairing to 1 against every R_i
    and C_j; samples include true points, perturbed points, and noise.
    """
    if d > guard:
        raise FactorialGuardError(f"d={d} exceeds the d!-sweep guard {guard}")
    rng = random.Random(seed)
    perm_matrices = [permutation_matrix(s) for s in permutations_of(d)]
    g_vertices = [vertex_matrix(v) for v in all_vertices(d)]

    vertex_pairings = 0
    for v in g_vertices:
        for p in perm_matrices:
            vertex_pairings += 1
            if pairing(v, p) != 1:
                return GalePairReport(d, vertex_pairings, 0,
                                      f"vertex pairing <{v!r}, {p!r}> != 1")

    def g_side_agrees(a: SquareMatrix) -> bool:
        by_pairing = all(pairing(a, p) == 1 for p in perm_matrices)
        check = is_g_matrix_fast(a)
        by_fast = bool(check) and check.value == 1
        return by_pairing == by_fast

    def b_side_agrees(b: SquareMatrix) -> bool:
        by_pairing = b.is_nonnegative() and \
            all(pairing(b, v) == 1 for v in g_vertices)
        return by_pairing == is_doubly_stochastic(b)

    samples = 0
    for _ in range(sample_count):
        noise = SquareMatrix(tuple(tuple(_bounded_fraction(rng, 0, 3) for _ in range(d))
                                   for _ in range(d)))
        value = rng.randint(1, 20)
        board = trick_generate(d, value, "quick", seed=rng.randrange(2 ** 32))
        point = scale(board, Fraction(1, value)).matrix
        i, j = rng.randrange(d), rng.randrange(d)
        bumped_rows = [list(r) for r in point.rows]
        bumped_rows[i][j] += 1
        bumped = SquareMatrix(tuple(tuple(r) for r in bumped_rows))
        stochastic_point = _random_convex_combination(rng, perm_matrices)
        for a in (noise, point, bumped):
            samples += 1
            if not g_side_agrees(a):
                return GalePairReport(d, vertex_pairings, samples,
                                      f"G-side equivalence fails on {a.rows}")
        if all(pairing(bumped, p) == 1 for p in perm_matrices):
            return GalePairReport(d, vertex_pairings, samples,
                                  f"+1 bump left every pairing at 1: {bumped.rows}")
        for b in (noise, stochastic_point, bumped):
            samples += 1
            if not b_side_agrees(b):
                return GalePairReport(d, vertex_pairings, samples,
                                      f"B-side equivalence fails on {b.rows}")
    return GalePairReport(d, vertex_pairings, samples, None)


def _random_convex_combination(rng: random.Random,
                               mats: list[SquareMatrix]) -> SquareMatrix:
    weights = [Fraction(rng.randint(0, 50), 1) for _ in mats]
    if sum(weights) == 0:
        weights[0] = Fraction(1)
    total = sum(weights)
    acc = SquareMatrix.zero(mats[0].d)
    for w, m in zip(weights, mats):
        acc = acc + m.scaled(w / total)
    return acc


@dataclass(frozen=True)
class AffineSubspace:
    """An affine subspace q + U of R^D in normalized form.

    q is the point of the subspace closest to the origin (so q is orthogonal
    to U) and the direction basis is in reduced row echelon form; equality of
    normalized subspaces is therefore plain field equality.
    """

    ambient: int
    q: tuple[Fraction, ...]
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_point_and_directions(cls, point: Sequence, directions: Sequence[Sequence],
                                  reduce: bool = False) -> "AffineSubspace":
        """Normalize a base point and spanning directions.

        Directions must be linearly independent unless ``reduce`` is set, in
        which case a basis of their span is extracted.
        """
        ambient = len(point)
        point_v = linalg.to_vec(point)
        dirs = [linalg.to_vec(v) for v in directions]
        if any(len(v) != ambient for v in dirs):
            raise ValueError("direction length mismatch")
        reduced, pivots = linalg.rref(dirs) if dirs else ([], [])
        if not reduce and len(pivots) != len(dirs):
            raise ValueError("directions are linearly dependent")
        basis = tuple(tuple(row) for row in reduced)
        q = _perp_component(point_v, basis)
        return cls(ambient, q, basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, point: Sequence) -> bool:
        diff = [Fraction(x) - qx for x, qx in zip(linalg.to_vec(point), self.q)]
        return linalg.rank(list(self.basis) + [diff]) == len(self.basis)

    def spanning_points(self) -> list[tuple[Fraction, ...]]:
        """q together with q + b for each basis direction b."""
        pts = [self.q]
        for b in self.basis:
            pts.append(tuple(qx + bx for qx, bx in zip(self.q, b)))
        return pts


def _perp_component(point: linalg.Vec, basis: tuple[tuple[Fraction, ...], ...]) -> linalg.Vec:
    # point minus its orthogonal projection onto span(basis), via the Gram
    # system (basis is independent, so the Gram matrix is invertible).
    if not basis:
        return point
    gram = [[linalg.dot(u, v) for v in basis] for u in basis]
    rhs = [linalg.dot(u, point) for u in basis]
    coeffs = linalg.solve_unique(gram, rhs)
    proj = [sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(len(point))]
    return tuple(x - p for x, p in zip(point, proj))


def dual_subspace(sub: AffineSubspace) -> AffineSubspace:
    """The affine subspace of all y with <x, y> = 1 for every x in the input.

    For L = q + U (normalized) this is q/|q|^2 + (U-perp ∩ q-perp); it is
    empty exactly when L passes through the origin (q = 0), which raises.
    The construction is verified on spanning sets before returning, and
    applying it twice returns the original subspace.
    """
    if all(x == 0 for x in sub.q):
        raise ValueError("subspace contains the origin; its dual is empty")
    norm_sq = linalg.dot(sub.q, sub.q)
    q_dual = tuple(x / norm_sq for x in sub.q)
    constraints = list(sub.basis) + [sub.q]
    dual_basis = linalg.nullspace(constraints, sub.ambient)
    result = AffineSubspace.from_point_and_directions(q_dual, dual_basis)
    for x in sub.spanning_points():
        for y in result.spanning_points():
            if linalg.dot(x, y) != 1:
                raise AssertionError("dual construction failed its pairing check")
    return result


@dataclass(frozen=True)
class HDescription:
    """Nonnegative orthant intersected with affine equations <row, x> = rhs."""

    ambient: int
    equations: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def is_feasible(self, point: Sequence) -> bool:
        x = linalg.to_vec(point)
        if len(x) != self.ambient:
            raise ValueError("point has wrong dimension")
        if any(v < 0 for v in x):
            return False
        return all(linalg.dot(coeffs, x) == rhs for coeffs, rhs in self.equations)


@dataclass(frozen=True)
class GaleDualPair:
    p: HDescription
    q: HDescription
    samples_checked: int


def _h_description(sub: AffineSubspace) -> HDescription:
    normals = linalg.nullspace(list(sub.basis), sub.ambient)
    equations = tuple((tuple(w), linalg.dot(w, sub.q)) for w in normals)
    return HDescription(sub.ambient, equations)


def _sample_nonneg_point(rng: random.Random, sub: AffineSubspace) -> tuple[Fraction, ...]:
    # q is strictly positive, so shrinking a random direction offset far
    # enough always lands in the orthant.
    coeffs = [_bounded_fraction(rng, -3, 3) for _ in sub.basis]
    offset = [sum((c * b[k] for c, b in zip(coeffs, sub.basis)), Fraction(0))
              for k in range(sub.ambient)]
    for _ in range(64):
        candidate = tuple(qx + ox for qx, ox in zip(sub.q, offset))
        if all(x >= 0 for x in candidate):
            return candidate
        offset = [ox / 2 for ox in offset]
    return sub.q


def gale_pair_from_recipe(sub: AffineSubspace, sample_count: int = 20,
                          seed: int = 0) -> GaleDualPair:
    """Build the Gale-dual pair cut out by a subspace with positive base point.

    Returns H-style descriptions of P = orthant ∩ L and Q = orthant ∩
    L-dagger, after checking on sampled nonnegative points of each side that
    cross pairings equal 1 exactly.
    """
    if not all(x > 0 for x in sub.q):
        raise ValueError("recipe needs a strictly positive base point")
    dual = dual_subspace(sub)
    p_desc = _h_description(sub)
    q_desc = _h_description(dual)
    rng = random.Random(seed)
    checked = 0
    for _ in range(sample_count):
        x = _sample_nonneg_point(rng, sub)
        y = _sample_nonneg_point(rng, dual)
        if linalg.dot(x, y) != 1:
            raise AssertionError("recipe sampling check failed")
        if not (p_desc.is_feasible(x) and q_desc.is_feasible(y)):
            raise AssertionError("sampled point infeasible for its own side")
        checked += 1
    return GaleDualPair(p_desc, q_desc, checked)


def _flatten(m: SquareMatrix) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in m.flat())


def gardner_hull(d: int) -> AffineSubspace:
    """Affine hull of the value-1 G-matrices, dimension 2d-2."""
    base = [Fraction(1, d)] * (d * d)
    c1 = _flatten(vertex_matrix(all_vertices(d)[0]))
    directions = []
    for v in all_vertices(d)[1:]:
        flat = _flatten(vertex_matrix(v))
        directions.append(tuple(a - b for a, b in zip(flat, c1)))
    return AffineSubspace.from_point_and_directions(base, directions, reduce=True)


def birkhoff_hull(d: int) -> AffineSubspace:
    """Affine hull of the doubly stochastic matrices, dimension (d-1)^2."""
    base = [Fraction(1, d)] * (d * d)
    directions = []
    for i in range(d - 1):
        for j in range(d - 1):
            vec = [Fraction(0)] * (d * d)
            vec[i * d + j] = Fraction(1)
            vec[i * d + (d - 1)] = Fraction(-1)
            vec[(d - 1) * d + j] = Fraction(-1)
            vec[(d - 1) * d + (d - 1)] = Fraction(1)
            directions.append(tuple(vec))
    return AffineSubspace.from_point_and_directions(base, directions)


@dataclass(frozen=True)
class GorensteinReport:
    d: int
    unique_interior_point_is_j: bool
    translation_bijections: tuple[tuple[int, bool], ...]  # (N, ok)

    @property
    def passed(self) -> bool:
        return self.unique_interior_point_is_j and \
            all(ok for _, ok in self.translation_bijections)


def gorenstein_check(d: int, n_max: int, budget: int | None = None) -> GorensteinReport:
    """Verify the index-d Gorenstein property by enumeration.

    The d-th dilate must have J as its only interior lattice point, and for
    d <= N <= n_max subtracting J must biject interior lattice points of the
    N-th dilate onto all lattice points of the (N-d)-th dilate.
    """
    j_flat = tuple([1] * (d * d))
    interior_at_d = list(iter_g_matrices_flat(d, d, 1, budget))
    unique_j = interior_at_d == [j_flat]
    results = []
    for value in range(d, n_max + 1):
        interior = set(iter_g_matrices_flat(d, value, 1, budget))
        shifted = {tuple(x - 1 for x in t) for t in interior}
        target = set(iter_g_matrices_flat(d, value - d, 0, budget))
        results.append((value, shifted == target))
    return GorensteinReport(d, unique_j, tuple(results))


@dataclass(frozen=True)
class CompressedReport:
    d: int
    samples: int
    inside_cube: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def compressed_check(d: int, sample_count: int = 200, seed: int = 0) -> CompressedReport:
    """Sample the affine hulls inside the unit cube and verify membership.

    Every rational point of the G-matrix hull with entries in [0, 1] must be
    a value-1 G-matrix, and every such point of the Birkhoff hull must be
    doubly stochastic (cube ∩ hull = polytope, i.e. both are compressed).
    Points falling outside the cube are discarded, not violations. All 0/1
    vertices of both polytopes are checked to lie in the cube.
    """
    rng = random.Random(seed)
    violations: list[str] = []
    samples = 0
    inside = 0

    for v in all_vertices(d):
        m = vertex_matrix(v)
        if not all(x in (0, 1) for x in m.flat()):
            violations.append(f"vertex {v} is not a 0/1 point")

    def has_g_value_one(m: SquareMatrix) -> bool:
        check = is_g_matrix_fast(m)
        return bool(check) and check.value == 1

    g_hull = gardner_hull(d)
    b_hull = birkhoff_hull(d)
    for hull, predicate, name in (
            (g_hull, has_g_value_one, "value-1 G-check"),
            (b_hull, is_doubly_stochastic, "doubly stochastic check")):
        for _ in range(sample_count):
            samples += 1
            jitter = [_bounded_fraction(rng, -1, 1) / (4 * d) for _ in hull.basis]
            point = list(hull.q)
            for c, b in zip(jitter, hull.basis):
                for k in range(len(point)):
                    point[k] += c * b[k]
            if not all(0 <= x <= 1 for x in point):
                continue
            inside += 1
            rows = tuple(tuple(point[i * d + j] for j in range(d)) for i in range(d))
            if not predicate(SquareMatrix(rows)):
                violations.append(f"{name} fails on hull point {rows}")
    return CompressedReport(d, samples, inside, tuple(violations))
