"""Constant-rook-sum boards over exact scalars.

A d-by-d nonnegative matrix A is a *G-matrix* of value N when every placement
of d nonthreatening rooks covers entries summing to N, i.e.

    A[1, s(1)] + A[2, s(2)] + ... + A[d, s(d)] = N   for every permutation s.

The secret behind such boards: they are exactly the addition tables
A[i, j] = mu_i + lambda_j of nonnegative row labels mu and column labels
lambda, and then N = sum(lambda) + sum(mu). The party trick is to pick 2d
labels summing to the requested N and write out their table. The functions
here verify the rook-sum property (both by full permutation sweep and by an
O(d^2) criterion), recover the labels from a board, and generate boards.

Scalars are Python ints or ``fractions.Fraction``; all arithmetic is exact.
Every type is an immutable value, safe to share across threads.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence, Union

Scalar = Union[int, Fraction]

#: Largest side length the d!-sweep checker accepts by default (9! sums).
FACTORIAL_GUARD = 9


class FactorialGuardError(ValueError):
    """Raised when a d!-permutation sweep would exceed the configured guard."""


@dataclass(frozen=True)
class SquareMatrix:
    """An immutable d-by-d matrix of exact scalars, 1-based accessors."""

    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        d = len(rows)
        if d == 0:
            raise ValueError("matrix must have side length >= 1")
        if any(len(r) != d for r in rows):
            raise ValueError("matrix is not square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> "SquareMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, d: int) -> "SquareMatrix":
        return cls(tuple((0,) * d for _ in range(d)))

    @classmethod
    def all_ones(cls, d: int) -> "SquareMatrix":
        """The all-ones matrix J."""
        return cls(tuple((1,) * d for _ in range(d)))

    @classmethod
    def identity(cls, d: int) -> "SquareMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))

    @property
    def d(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Scalar:
        """Entry in row i, column j (1-based)."""
        if not (1 <= i <= self.d and 1 <= j <= self.d):
            raise IndexError(f"index ({i}, {j}) out of range for d={self.d}")
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.rows[i - 1]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j - 1] for r in self.rows)

    def flat(self) -> tuple[Scalar, ...]:
        """Entries in row-major order."""
        return tuple(x for r in self.rows for x in r)

    def total(self) -> Scalar:
        return sum(x for r in self.rows for x in r)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for r in self.rows for x in r)

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        return SquareMatrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                                  for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        return SquareMatrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                                  for ra, rb in zip(self.rows, other.rows)))

    def scaled(self, c: Scalar) -> "SquareMatrix":
        return SquareMatrix(tuple(tuple(x * c for x in r) for r in self.rows))

    def __str__(self) -> str:
        w = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.rows)


@dataclass(frozen=True)
class Witness:
    """A certificate that a matrix is not a G-matrix.

    ``quadruple`` is (i, j, k, l) with A[i,j] + A[k,l] != A[i,l] + A[k,j];
    ``sigma`` and ``sigma_prime`` are two rook placements (1-based image
    tuples, differing by one transposition) whose covered sums disagree.
    """

    quadruple: tuple[int, int, int, int]
    sigma: tuple[int, ...]
    sigma_prime: tuple[int, ...]
    sums: tuple[Scalar, Scalar]


@dataclass(frozen=True)
class FastCheck:
    """Result of the O(d^2) rook-sum check.

    Truthy iff the matrix is a G-matrix, in which case ``value`` holds the
    common rook-placement sum. On failure either ``witness`` (a violated
    2x2 exchange) or ``negative_entry`` explains why.
    """

    value: Scalar | None
    witness: Witness | None = None
    negative_entry: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class GMatrix:
    """A matrix certified to have constant rook-placement sums.

    Construction validates the certificate, so a ``GMatrix`` instance is
    always genuinely a G-matrix of the stated value.
    """

    matrix: SquareMatrix
    value: Scalar

    def __post_init__(self) -> None:
        check = is_g_matrix_fast(self.matrix)
        if not check:
            if check.negative_entry is not None:
                raise ValueError(f"negative entry at {check.negative_entry}")
            raise ValueError(
                f"rook sums are not constant; violated quadruple {check.witness.quadruple}")
        if check.value != self.value:
            raise ValueError(f"declared value {self.value} != actual {check.value}")

    @classmethod
    def from_matrix(cls, m: SquareMatrix) -> "GMatrix":
        """Certify an arbitrary matrix, raising ValueError if it fails."""
        check = is_g_matrix_fast(m)
        if not check:
            if check.negative_entry is not None:
                raise ValueError(f"negative entry at {check.negative_entry}")
            raise ValueError(
                f"rook sums are not constant; violated quadruple {check.witness.quadruple}")
        return cls(m, check.value)

    @classmethod
    def zero(cls, d: int) -> "GMatrix":
        return cls(SquareMatrix.zero(d), 0)

    @property
    def d(self) -> int:
        return self.matrix.d


@dataclass(frozen=True)
class Labeling:
    """Column labels and row labels whose addition table is a G-matrix.

    ``canonical`` is true when the smallest row label is zero; canonical
    labelings of total N are in bijection with integer G-matrices of value N.
    """

    col_labels: tuple[Scalar, ...]
    row_labels: tuple[Scalar, ...]
    canonical: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        if len(self.col_labels) != len(self.row_labels) or not self.col_labels:
            raise ValueError("need d >= 1 column labels and equally many row labels")
        if any(x < 0 for x in self.col_labels + self.row_labels):
            raise ValueError("labels must be nonnegative")
        object.__setattr__(self, "canonical", min(self.row_labels) == 0)

    @property
    def d(self) -> int:
        return len(self.col_labels)

    def total(self) -> Scalar:
        return sum(self.col_labels) + sum(self.row_labels)


def _validate_permutation(sigma: Sequence[int], d: int) -> None:
    if len(sigma) != d:
        raise ValueError(f"permutation length {len(sigma)} != matrix side {d}")
    if sorted(sigma) != list(range(1, d + 1)):
        raise ValueError("not a bijection on 1..d")


def permutation_sum(a: SquareMatrix, sigma: Sequence[int]) -> Scalar:
    """Sum of the entries covered by the rook placement sigma (1-based images)."""
    _validate_permutation(sigma, a.d)
    return sum(a.rows[i][sigma[i] - 1] for i in range(a.d))


def is_g_matrix_bruteforce(a: SquareMatrix, guard: int = FACTORIAL_GUARD) -> Scalar | None:
    """Check the rook-sum property by sweeping all d! placements.

    Returns the common value, or None if entries are negative or two
    placements disagree. Refuses d > guard (the sweep has d! terms).
    """
    d = a.d
    if d > guard:
        raise FactorialGuardError(f"d={d} exceeds the d!-sweep guard {guard}")
    if not a.is_nonnegative():
        return None
    rows = a.rows
    value: Scalar | None = None
    for perm in itertools.permutations(range(d)):
        s = sum(rows[i][perm[i]] for i in range(d))
        if value is None:
            value = s
        elif s != value:
            return None
    return value


def _exchange_permutations(d: int, i: int, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # Two placements differing by one transposition: row 1 and row i take
    # columns {1, j} in either order, remaining rows take remaining columns
    # in ascending order.
    other_rows = [r for r in range(1, d + 1) if r not in (1, i)]
    other_cols = [c for c in range(1, d + 1) if c not in (1, j)]
    images = {1: 1, i: j}
    images.update(zip(other_rows, other_cols))
    sigma = tuple(images[r] for r in range(1, d + 1))
    images[1], images[i] = j, 1
    sigma_prime = tuple(images[r] for r in range(1, d + 1))
    return sigma, sigma_prime


def is_g_matrix_fast(a: SquareMatrix) -> FastCheck:
    """O(d^2) rook-sum check.

    Verifies nonnegativity and A[i,j] = A[1,j] + A[i,1] - A[1,1] for all
    i, j >= 2 (every 2x2 exchange condition follows by transitivity). On
    success the value is the main-diagonal sum; on failure the result
    carries a Witness with two placements whose sums differ.
    """
    rows = a.rows
    d = a.d
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x < 0:
                return FastCheck(None, negative_entry=(i + 1, j + 1))
    a11 = rows[0][0]
    top = rows[0]
    for i in range(1, d):
        ri = rows[i]
        base = ri[0] - a11
        for j in range(1, d):
            if ri[j] - top[j] != base:
                sigma, sigma_prime = _exchange_permutations(d, i + 1, j + 1)
                sums = (permutation_sum(a, sigma), permutation_sum(a, sigma_prime))
                return FastCheck(None, witness=Witness(
                    quadruple=(1, 1, i + 1, j + 1),
                    sigma=sigma, sigma_prime=sigma_prime, sums=sums))
    return FastCheck(sum(rows[i][i] for i in range(d)))


def g_value_of_flat(entries: Sequence[Scalar], d: int) -> Scalar | None:
    """Rook-sum value of a row-major entry tuple, or None.

    Low-level variant of :func:`is_g_matrix_fast` for enumeration sweeps;
    entries are assumed nonnegative.
    """
    a11 = entries[0]
    for i in range(1, d):
        off = i * d
        base = entries[off] - a11
        for j in range(1, d):
            if entries[off + j] - entries[j] != base:
                return None
    return sum(entries[i * d + i] for i in range(d))


DecompositionOrder = Literal["columns-first", "rows-first"]


def decompose_canonical(g: GMatrix, order: DecompositionOrder = "columns-first") -> Labeling:
    """Recover the labels whose addition table is the given board.

    Columns-first (the default) takes column minima as the column labels and
    row minima of the residue as the row labels, which forces min(mu) = 0;
    rows-first is the mirror-image variant and forces min(lambda) = 0 instead.
    """
    rows = g.matrix.rows
    d = g.d
    if order == "columns-first":
        lam = [min(rows[i][j] for i in range(d)) for j in range(d)]
        mu = [min(rows[i][j] - lam[j] for j in range(d)) for i in range(d)]
    elif order == "rows-first":
        mu = [min(row) for row in rows]
        lam = [min(rows[i][j] - mu[i] for i in range(d)) for j in range(d)]
    else:
        raise ValueError(f"unknown order {order!r}")
    if any(rows[i][j] != mu[i] + lam[j] for i in range(d) for j in range(d)):
        raise ValueError("invariant violation: board is not an addition table")
    return Labeling(tuple(lam), tuple(mu))


def compose(lab: Labeling) -> GMatrix:
    """Addition table of the labels: A[i,j] = mu_i + lambda_j."""
    rows = tuple(tuple(m + l for l in lab.col_labels) for m in lab.row_labels)
    return GMatrix(SquareMatrix(rows), lab.total())


def _composition_from_bars(bars: Sequence[int], n: int, parts: int) -> tuple[int, ...]:
    out = []
    prev = -1
    for b in bars:
        out.append(b - prev - 1)
        prev = b
    out.append(n + parts - 1 - prev - 1)
    return tuple(out)


def _random_composition(rng: random.Random, n: int, parts: int) -> tuple[int, ...]:
    # Stars and bars: a uniform (parts-1)-subset of n+parts-1 slots.
    if parts == 1:
        return (n,)
    bars = sorted(rng.sample(range(n + parts - 1), parts - 1))
    return _composition_from_bars(bars, n, parts)


def trick_generate(d: int, value: int, mode: Literal["uniform", "quick"] = "uniform",
                   seed: int = 0) -> GMatrix:
    """Generate an integer board with constant rook sum ``value``.

    mode="uniform" draws uniformly among all such boards, by rejection
    sampling on compositions of value into 2d labels (accept when the row
    labels contain a zero; the acceptance rate is >= ~1/2 for value >= d).
    mode="quick" composes any random labeling, with an unspecified (not
    uniform) distribution over boards. Deterministic for a fixed seed.

    d = 1 is a special case with a single board [[value]], returned directly
    (rejection would accept only 1 of value+1 compositions there).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if value < 0:
        raise ValueError("value must be >= 0")
    if mode not in ("uniform", "quick"):
        raise ValueError(f"unknown mode {mode!r}")
    if d == 1:
        return compose(Labeling((value,), (0,)))
    rng = random.Random(seed)
    comp = _random_composition(rng, value, 2 * d)
    if mode == "uniform":
        while min(comp[d:]) != 0:
            comp = _random_composition(rng, value, 2 * d)
    return compose(Labeling(comp[:d], comp[d:]))


def scale(g: GMatrix, c: Scalar) -> GMatrix:
    """Entrywise c*A, a G-matrix of value c*N; requires c > 0.

    Scaling a board of value N by 1/N yields a board of value 1.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    return GMatrix(g.matrix.scaled(c), g.value * c)
