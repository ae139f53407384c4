"""Reading and writing boards.

Text format: an optional header line holding the single integer d, then d
lines of d whitespace-separated nonnegative decimal integers. A blank line
ends the board; anything after it (e.g. an appended label table) is ignored.

JSON format: an object {"d": int, "entries": [[int, ...], ...]}; entries may
also be decimal strings, and the metadata keys "value", "lambda", "mu" are
accepted. On output, big integers are always emitted as decimal strings.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .matrix import GMatrix, Labeling, SquareMatrix


class BoardParseError(ValueError):
    """Raised for malformed board input."""


@dataclass(frozen=True)
class BoardDocument:
    """A parsed board: d*d nonnegative integers plus optional metadata."""

    entries: tuple[tuple[int, ...], ...]
    value: int | None = None
    col_labels: tuple[int, ...] | None = None
    row_labels: tuple[int, ...] | None = None

    @property
    def d(self) -> int:
        return len(self.entries)

    def to_matrix(self) -> SquareMatrix:
        return SquareMatrix(self.entries)

    @classmethod
    def from_text(cls, text: str) -> "BoardDocument":
        if text.lstrip().startswith("{"):
            return cls.from_json(text)
        lines = []
        for line in text.splitlines():
            if not line.strip():
                if lines:
                    break
                continue
            lines.append(line.split())
        if not lines:
            raise BoardParseError("empty board")
        try:
            rows = [[_parse_entry(tok) for tok in line] for line in lines]
        except ValueError as exc:
            raise BoardParseError(str(exc)) from None
        if all(len(r) == len(rows) for r in rows):
            return cls(tuple(tuple(r) for r in rows))
        if len(rows[0]) == 1:
            d = rows[0][0]
            body = rows[1:]
            if len(body) == d and all(len(r) == d for r in body):
                return cls(tuple(tuple(r) for r in body))
        raise BoardParseError("board is not square (and no valid header found)")

    @classmethod
    def from_json(cls, text: str) -> "BoardDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BoardParseError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or "entries" not in data:
            raise BoardParseError("JSON board needs an 'entries' key")
        try:
            rows = [[_parse_entry(x) for x in row] for row in data["entries"]]
            d = int(data.get("d", len(rows)))
            value = _parse_entry(data["value"]) if "value" in data else None
            lam = tuple(_parse_entry(x) for x in data["lambda"]) if "lambda" in data else None
            mu = tuple(_parse_entry(x) for x in data["mu"]) if "mu" in data else None
        except (TypeError, ValueError) as exc:
            raise BoardParseError(str(exc)) from None
        if len(rows) != d or any(len(r) != d for r in rows):
            raise BoardParseError(f"expected {d}x{d} entries")
        if d < 1:
            raise BoardParseError("d must be >= 1")
        return cls(tuple(tuple(r) for r in rows), value=value,
                   col_labels=lam, row_labels=mu)

    @classmethod
    def load(cls, path: str) -> "BoardDocument":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())


def _parse_entry(token) -> int:
    n = int(token)
    if n < 0:
        raise ValueError(f"negative entry {n}")
    return n


def format_board_text(m: SquareMatrix, header: bool = False) -> str:
    width = max(len(str(x)) for r in m.rows for x in r)
    lines = [str(m.d)] if header else []
    lines += [" ".join(str(x).rjust(width) for x in row) for row in m.rows]
    return "\n".join(lines)


def board_json_payload(g: GMatrix, lab: Labeling) -> dict:
    """The board JSON schema: d, value, entries, lambda, mu (decimal strings)."""
    return {
        "d": g.d,
        "value": str(g.value),
        "entries": [[str(x) for x in row] for row in g.matrix.rows],
        "lambda": [str(x) for x in lab.col_labels],
        "mu": [str(x) for x in lab.row_labels],
    }


def format_addition_table(g: GMatrix, lab: Labeling) -> str:
    """Label table: column labels across the top, row labels down the side,
    the board as the body of the table."""
    header_cells = [str(x) for x in lab.col_labels]
    left_cells = ["+"] + [str(x) for x in lab.row_labels]
    body = [[str(x) for x in row] for row in g.matrix.rows]
    left_w = max(len(s) for s in left_cells)
    col_w = [max(len(header_cells[j]), max(len(body[i][j]) for i in range(g.d)))
             for j in range(g.d)]

    def fmt_row(left: str, cells: list[str]) -> str:
        return left.rjust(left_w) + " | " + \
            " ".join(c.rjust(w) for c, w in zip(cells, col_w))

    lines = [fmt_row("+", header_cells)]
    lines.append("-" * left_w + "-+-" + "-".join("-" * w for w in col_w))
    for mu, row in zip(lab.row_labels, body):
        lines.append(fmt_row(str(mu), row))
    return "\n".join(lines)
