import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EXAMPLE_COL_LABELS, EXAMPLE_ROW_LABELS, EXAMPLE_VALUE
from gardner.matrix import (FactorialGuardError, GMatrix, Labeling,
                            SquareMatrix, compose, decompose_canonical,
                            is_g_matrix_bruteforce, is_g_matrix_fast,
                            permutation_sum, scale, trick_generate)


def mat(rows) -> SquareMatrix:
    return SquareMatrix.from_rows(rows)


# ---------------------------------------------------------------- rook sums

def test_permutation_sum_identity_on_example(example_matrix):
    assert permutation_sum(example_matrix, (1, 2, 3, 4, 5)) == EXAMPLE_VALUE
    assert 19 + 1 + 8 + 27 + 2 == EXAMPLE_VALUE


def test_permutation_sum_every_placement_on_example(example_matrix):
    for sigma in itertools.permutations(range(1, 6)):
        assert permutation_sum(example_matrix, sigma) == EXAMPLE_VALUE


def test_permutation_sum_zero_and_all_ones():
    for d in (1, 2, 4):
        for sigma in itertools.permutations(range(1, d + 1)):
            assert permutation_sum(SquareMatrix.zero(d), sigma) == 0
            assert permutation_sum(SquareMatrix.all_ones(d), sigma) == d


def test_permutation_sum_validates():
    m = SquareMatrix.zero(3)
    with pytest.raises(ValueError):
        permutation_sum(m, (1, 2))
    with pytest.raises(ValueError):
        permutation_sum(m, (1, 1, 2))


# ------------------------------------------------------------- brute force

def test_bruteforce_on_example(example_matrix):
    assert is_g_matrix_bruteforce(example_matrix) == EXAMPLE_VALUE


def test_bruteforce_rejects_disagreeing_sums():
    # The two 2x2 placements cover 1 and 0.
    assert is_g_matrix_bruteforce(mat([[1, 0], [0, 0]])) is None


def test_bruteforce_accepts_label_table():
    # Table of columns (3, 0), rows (0, 2): placements cover 3+2 and 0+5.
    assert is_g_matrix_bruteforce(mat([[3, 0], [5, 2]])) == 5


def test_bruteforce_rejects_negative_entries():
    assert is_g_matrix_bruteforce(mat([[-1]])) is None
    assert is_g_matrix_bruteforce(mat([[1, 2], [0, 1]])) == 2
    assert is_g_matrix_bruteforce(mat([[1, 2], [-1, 0]])) is None


def test_bruteforce_guard():
    with pytest.raises(FactorialGuardError):
        is_g_matrix_bruteforce(SquareMatrix.zero(10))
    # A larger configured guard admits the sweep.
    assert is_g_matrix_bruteforce(SquareMatrix.zero(10), guard=10) == 0


# --------------------------------------------------------------- fast check

def test_fast_on_example(example_matrix):
    check = is_g_matrix_fast(example_matrix)
    assert check and check.value == EXAMPLE_VALUE and check.witness is None


def test_fast_zero_matrix():
    check = is_g_matrix_fast(SquareMatrix.zero(4))
    assert check and check.value == 0


def test_fast_identity_witness():
    check = is_g_matrix_fast(SquareMatrix.identity(2))
    assert not check
    w = check.witness
    assert w.quadruple == (1, 1, 2, 2)
    assert {w.sigma, w.sigma_prime} == {(1, 2), (2, 1)}
    assert set(w.sums) == {2, 0}


def test_fast_negative_entry():
    check = is_g_matrix_fast(mat([[1, 2], [0, -1]]))
    assert not check
    assert check.negative_entry == (2, 2)
    assert check.witness is None


def test_fast_matches_bruteforce_exhaustive_small():
    # Every matrix with entries in {0..3}, d in {2, 3}.
    for d in (2, 3):
        for flat in itertools.product(range(4), repeat=d * d):
            m = SquareMatrix(tuple(flat[i * d:(i + 1) * d] for i in range(d)))
            assert is_g_matrix_fast(m).value == is_g_matrix_bruteforce(m)


def test_fast_matches_bruteforce_random_d4_d5():
    rng = random.Random(20816)
    checked = 0
    for d in (4, 5):
        for _ in range(5200):
            m = SquareMatrix(tuple(
                tuple(rng.randint(0, 3) for _ in range(d)) for _ in range(d)))
            assert is_g_matrix_fast(m).value == is_g_matrix_bruteforce(m)
            checked += 1
        for _ in range(300):
            lab = Labeling(tuple(rng.randint(0, 9) for _ in range(d)),
                           tuple(rng.randint(0, 9) for _ in range(d)))
            m = compose(lab).matrix
            assert is_g_matrix_fast(m).value == is_g_matrix_bruteforce(m) == lab.total()
            checked += 1
    assert checked >= 10 ** 4


def test_witness_placements_disagree():
    rng = random.Random(7)
    seen = 0
    while seen < 200:
        d = rng.randint(2, 5)
        m = SquareMatrix(tuple(
            tuple(rng.randint(0, 4) for _ in range(d)) for _ in range(d)))
        check = is_g_matrix_fast(m)
        if check or check.witness is None:
            continue
        seen += 1
        w = check.witness
        assert permutation_sum(m, w.sigma) != permutation_sum(m, w.sigma_prime)
        assert (permutation_sum(m, w.sigma), permutation_sum(m, w.sigma_prime)) == w.sums
        i, j, k, l = w.quadruple
        assert m.entry(i, j) + m.entry(k, l) != m.entry(i, l) + m.entry(k, j)


def test_value_zero_forces_zero_matrix():
    for d in (2, 3):
        for flat in itertools.product(range(3), repeat=d * d):
            m = SquareMatrix(tuple(flat[i * d:(i + 1) * d] for i in range(d)))
            check = is_g_matrix_fast(m)
            if check and check.value == 0:
                assert m == SquareMatrix.zero(d)


# ------------------------------------------------------------ decomposition

def test_decompose_example(example_board):
    lab = decompose_canonical(example_board)
    assert lab.col_labels == EXAMPLE_COL_LABELS
    assert lab.row_labels == EXAMPLE_ROW_LABELS
    assert lab.canonical


def test_decompose_zero_and_ones():
    lab = decompose_canonical(GMatrix.zero(3))
    assert lab.col_labels == (0, 0, 0) and lab.row_labels == (0, 0, 0)
    lab = decompose_canonical(GMatrix(SquareMatrix.all_ones(4), 4))
    assert lab.col_labels == (1, 1, 1, 1) and lab.row_labels == (0, 0, 0, 0)


def test_decompose_rows_first_variant():
    g = compose(Labeling((2, 3), (0, 1)))
    assert g.matrix == mat([[2, 3], [3, 4]])
    cols_first = decompose_canonical(g)
    assert (cols_first.col_labels, cols_first.row_labels) == ((2, 3), (0, 1))
    assert cols_first.canonical
    rows_first = decompose_canonical(g, "rows-first")
    assert (rows_first.col_labels, rows_first.row_labels) == ((0, 1), (2, 3))
    assert not rows_first.canonical
    assert compose(rows_first) == g


def test_decompose_rejects_unknown_order(example_board):
    with pytest.raises(ValueError):
        decompose_canonical(example_board, "diagonal-first")


def test_compose_example(example_board):
    lab = Labeling(EXAMPLE_COL_LABELS, EXAMPLE_ROW_LABELS)
    assert compose(lab) == example_board
    assert compose(lab).value == EXAMPLE_VALUE


def test_compose_small():
    assert compose(Labeling((0, 0), (0, 0))) == GMatrix.zero(2)
    g = compose(Labeling((1, 0), (0, 2)))
    assert g.matrix == mat([[1, 0], [3, 2]]) and g.value == 3
    assert is_g_matrix_bruteforce(g.matrix) == 3


def test_negative_labels_rejected():
    with pytest.raises(ValueError):
        Labeling((1, -1), (0, 0))


label_lists = st.integers(1, 5).flatmap(
    lambda d: st.tuples(
        st.lists(st.integers(0, 30), min_size=d, max_size=d),
        st.lists(st.integers(0, 30), min_size=d, max_size=d)))


@settings(deadline=None)
@given(label_lists)
def test_roundtrip_and_canonical_shift(lists):
    lam, mu = (tuple(lists[0]), tuple(lists[1]))
    g = compose(Labeling(lam, mu))
    lab = decompose_canonical(g)
    assert compose(lab) == g
    shift = min(mu)
    assert lab.col_labels == tuple(x + shift for x in lam)
    assert lab.row_labels == tuple(x - shift for x in mu)
    assert lab.canonical
    if shift == 0:
        assert lab == Labeling(lam, mu)


@settings(deadline=None)
@given(label_lists, st.integers(1, 20), st.integers(1, 20))
def test_scaling_preserves_the_property(lists, num, den):
    g = compose(Labeling(tuple(lists[0]), tuple(lists[1])))
    c = Fraction(num, den)
    scaled = scale(g, c)
    assert is_g_matrix_fast(scaled.matrix).value == c * g.value


# ---------------------------------------------------------------- generator

def test_trick_d1_is_forced():
    for mode in ("uniform", "quick"):
        assert trick_generate(1, 7, mode, seed=5).matrix == mat([[7]])


def test_trick_value_zero_is_zero_board():
    assert trick_generate(2, 0, seed=11) == GMatrix.zero(2)


def test_trick_seeded_board_verifies():
    g = trick_generate(5, 57, seed=1)
    assert is_g_matrix_fast(g.matrix).value == 57
    assert trick_generate(5, 57, seed=1) == g
    assert trick_generate(5, 57, "quick", seed=1) == trick_generate(5, 57, "quick", seed=1)


def test_trick_uniform_reaches_every_board():
    boards = {trick_generate(2, 1, seed=s).matrix.rows for s in range(300)}
    assert len(boards) == 4  # g_2(1) = 4 boards in total


def test_trick_canonicalizes_quick_mode():
    for s in range(50):
        g = trick_generate(3, 11, "quick", seed=s)
        assert g.value == 11
        assert is_g_matrix_fast(g.matrix).value == 11


def test_trick_validates_arguments():
    with pytest.raises(ValueError):
        trick_generate(0, 3)
    with pytest.raises(ValueError):
        trick_generate(2, -1)
    with pytest.raises(ValueError):
        trick_generate(2, 3, "slow")


# ------------------------------------------------------------------ scaling

def test_scale_example_to_value_one(example_board):
    unit = scale(example_board, Fraction(1, 57))
    assert unit.value == 1
    assert unit.matrix.entry(1, 1) == Fraction(19, 57)


def test_scale_zero_and_barycenter():
    assert scale(GMatrix.zero(3), Fraction(5, 3)).matrix == SquareMatrix.zero(3)
    j = GMatrix(SquareMatrix.all_ones(4), 4)
    center = scale(j, Fraction(1, 4))
    assert center.value == 1
    assert center.matrix.entry(2, 3) == Fraction(1, 4)


def test_scale_rejects_nonpositive(example_board):
    with pytest.raises(ValueError):
        scale(example_board, 0)
    with pytest.raises(ValueError):
        scale(example_board, Fraction(-1, 2))


# ------------------------------------------------------------ constructors

def test_gmatrix_constructor_validates():
    with pytest.raises(ValueError):
        GMatrix(SquareMatrix.identity(2), 1)
    with pytest.raises(ValueError):
        GMatrix(SquareMatrix.all_ones(3), 5)  # actual value is 3
    assert GMatrix.from_matrix(SquareMatrix.all_ones(3)).value == 3


def test_square_matrix_validates():
    with pytest.raises(ValueError):
        SquareMatrix(((1, 2), (3,)))
    with pytest.raises(ValueError):
        SquareMatrix(())
    m = mat([[1, 2], [3, 4]])
    assert m.entry(1, 2) == 2 and m.row(2) == (3, 4) and m.col(1) == (1, 3)
    assert m.flat() == (1, 2, 3, 4) and m.total() == 10
    with pytest.raises(IndexError):
        m.entry(0, 1)
