import pytest

from gardner.matrix import GMatrix, SquareMatrix

# 5x5 board with constant rook sum 57; its label table is
# columns (12, 1, 4, 18, 0), rows (7, 0, 4, 9, 2).
EXAMPLE_ROWS = (
    (19, 8, 11, 25, 7),
    (12, 1, 4, 18, 0),
    (16, 5, 8, 22, 4),
    (21, 10, 13, 27, 9),
    (14, 3, 6, 20, 2),
)
EXAMPLE_VALUE = 57
EXAMPLE_COL_LABELS = (12, 1, 4, 18, 0)
EXAMPLE_ROW_LABELS = (7, 0, 4, 9, 2)


@pytest.fixture
def example_matrix() -> SquareMatrix:
    return SquareMatrix(EXAMPLE_ROWS)


@pytest.fixture
def example_board(example_matrix) -> GMatrix:
    return GMatrix(example_matrix, EXAMPLE_VALUE)
