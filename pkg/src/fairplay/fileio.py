"""CSV formats for availability and assignment matrices.

Layout: header ``player,<day1>,...,<dayM>``, one row per player with 0/1
cells.  UTF-8; LF or CRLF accepted on input; output is always LF with no
trailing separators and no BOM.  Derived totals are never stored, only
recomputed, so inconsistent totals cannot enter data files.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from fairplay.model import Assignment, Problem, ValidationError, validate_problem


def parse_matrix_csv(text: str) -> tuple[list[str], list[str], list[list[int]]]:
    """Parse the common matrix layout into (players, days, rows).

    Raises ValidationError naming the offending cell on any malformed input.
    """
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise ValidationError("empty file: expected a header row") from None
    if len(header) < 2:
        raise ValidationError("header must name at least one day column")
    if header[0] != "player":
        raise ValidationError(
            f"header must start with 'player', got {header[0]!r}"
        )
    days = [label.strip() for label in header[1:]]

    players: list[str] = []
    rows: list[list[int]] = []
    for lineno, record in enumerate(reader, start=2):
        if not record:
            continue
        if len(record) != len(days) + 1:
            raise ValidationError(
                f"line {lineno}: expected {len(days) + 1} fields, got {len(record)}"
            )
        players.append(record[0].strip())
        row = []
        for col, cell in enumerate(record[1:]):
            cell = cell.strip()
            if cell == "0":
                row.append(0)
            elif cell == "1":
                row.append(1)
            else:
                raise ValidationError(
                    f"line {lineno}, column {days[col]!r}: "
                    f"cell {cell!r} is not 0 or 1"
                )
        rows.append(row)
    if not players:
        raise ValidationError("no player rows found")
    return players, days, rows


def parse_problem(text: str, group_size: int) -> Problem:
    players, days, rows = parse_matrix_csv(text)
    return validate_problem(players, days, rows, group_size)


def parse_problem_file(path: str | Path, group_size: int) -> Problem:
    return parse_problem(Path(path).read_text(encoding="utf-8"), group_size)


def parse_assignment(text: str, p: Problem) -> Assignment:
    """Parse an assignment file and check it lines up with the problem's
    player and day labels."""
    players, days, rows = parse_matrix_csv(text)
    if tuple(players) != p.players:
        raise ValidationError(
            "assignment player names do not match the availability file"
        )
    if tuple(days) != p.days:
        raise ValidationError(
            "assignment day labels do not match the availability file"
        )
    return Assignment(tuple(tuple(row) for row in rows))


def parse_assignment_file(path: str | Path, p: Problem) -> Assignment:
    return parse_assignment(Path(path).read_text(encoding="utf-8"), p)


def _serialize(players, days, matrix) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["player", *days])
    for name, row in zip(players, matrix):
        writer.writerow([name, *row])
    return out.getvalue()


def serialize_problem(p: Problem) -> str:
    return _serialize(p.players, p.days, p.avail)


def serialize_assignment(x: Assignment, p: Problem) -> str:
    return _serialize(p.players, p.days, x.matrix)
