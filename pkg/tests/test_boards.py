import json

import pytest

from conftest import EXAMPLE_COL_LABELS, EXAMPLE_ROW_LABELS, EXAMPLE_ROWS
from gardner.boards import (BoardDocument, BoardParseError,
                            board_json_payload, format_addition_table,
                            format_board_text)
from gardner.matrix import GMatrix, SquareMatrix, decompose_canonical


def test_parse_plain_text():
    doc = BoardDocument.from_text("1 2\n3 4\n")
    assert doc.d == 2 and doc.entries == ((1, 2), (3, 4))


def test_parse_with_header():
    doc = BoardDocument.from_text("2\n1 2\n3 4\n")
    assert doc.entries == ((1, 2), (3, 4))


def test_parse_one_by_one():
    assert BoardDocument.from_text("7\n").entries == ((7,),)
    assert BoardDocument.from_text("1\n5\n").entries == ((5,),)


def test_parse_ignores_trailer_after_blank_line():
    doc = BoardDocument.from_text("1 2\n3 4\n\n+ | stuff that is not a board\n")
    assert doc.entries == ((1, 2), (3, 4))


def test_parse_leading_blank_lines():
    doc = BoardDocument.from_text("\n\n1 2\n3 4\n")
    assert doc.entries == ((1, 2), (3, 4))


@pytest.mark.parametrize("text", [
    "",
    "1 2\n3\n",
    "2\n1 2\n",
    "a b\nc d\n",
    "1 -2\n3 4\n",
    "2 2\n",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(BoardParseError):
        BoardDocument.from_text(text)


def test_parse_json():
    doc = BoardDocument.from_text('{"d": 2, "entries": [[1, 2], [3, 4]]}')
    assert doc.entries == ((1, 2), (3, 4))
    doc = BoardDocument.from_text(
        '{"d": 2, "entries": [["1", "2"], ["3", "4"]], "value": "5"}')
    assert doc.entries == ((1, 2), (3, 4)) and doc.value == 5


@pytest.mark.parametrize("text", [
    "{not json}",
    '{"d": 3, "entries": [[1, 2], [3, 4]]}',
    '{"entries": [[1, 2], [3, -4]]}',
    '{"d": 2}',
])
def test_parse_rejects_malformed_json(text):
    with pytest.raises(BoardParseError):
        BoardDocument.from_text(text)


def test_text_round_trip():
    m = SquareMatrix(EXAMPLE_ROWS)
    for header in (False, True):
        text = format_board_text(m, header=header)
        assert BoardDocument.from_text(text).to_matrix() == m


def test_json_payload_round_trip(example_board):
    lab = decompose_canonical(example_board)
    payload = board_json_payload(example_board, lab)
    assert payload["value"] == "57"
    assert payload["lambda"] == [str(x) for x in EXAMPLE_COL_LABELS]
    assert payload["mu"] == [str(x) for x in EXAMPLE_ROW_LABELS]
    doc = BoardDocument.from_text(json.dumps(payload))
    assert doc.to_matrix() == example_board.matrix
    assert doc.value == 57
    assert doc.col_labels == EXAMPLE_COL_LABELS
    assert doc.row_labels == EXAMPLE_ROW_LABELS


def test_addition_table_contains_all_numbers(example_board):
    lab = decompose_canonical(example_board)
    table = format_addition_table(example_board, lab)
    lines = [line for line in table.splitlines() if "|" in line]
    header = lines[0]
    assert [int(t) for t in header.split("|")[1].split()] == list(EXAMPLE_COL_LABELS)
    for mu, row, line in zip(EXAMPLE_ROW_LABELS, EXAMPLE_ROWS, lines[1:]):
        left, right = line.split("|")
        assert int(left) == mu
        assert [int(t) for t in right.split()] == list(row)


def test_load_from_file(tmp_path, example_board):
    path = tmp_path / "board.txt"
    path.write_text(format_board_text(example_board.matrix) + "\n")
    doc = BoardDocument.load(str(path))
    assert GMatrix.from_matrix(doc.to_matrix()).value == 57
