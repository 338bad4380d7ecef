"""CSV formats: parsing, serialization, and the round-trip identity."""

import pytest

from conftest import random_problem
from fairplay import fixtures
from fairplay.fileio import (
    parse_assignment,
    parse_matrix_csv,
    parse_problem,
    serialize_assignment,
    serialize_problem,
)
from fairplay.model import ValidationError


def test_parse_table1():
    p = fixtures.table1()
    assert p.players[0] == "Barry T"
    assert p.players[-1] == "Ken L"
    assert p.days == ("Mon", "Tues", "Wed", "Thurs", "Fri")
    assert p.avail[0] == (0, 0, 1, 1, 0)


def test_crlf_input_is_accepted():
    text = "player,d1,d2\r\na,1,0\r\nb,1,1\r\n"
    players, days, rows = parse_matrix_csv(text)
    assert players == ["a", "b"]
    assert rows == [[1, 0], [1, 1]]


def test_quoted_names_with_commas_round_trip():
    text = 'player,d1\n"Smith, Jr",1\nplain,0\n'
    p = parse_problem(text, 2)
    assert p.players == ("Smith, Jr", "plain")
    assert parse_problem(serialize_problem(p), 2) == p


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty file"),
        ("player\n", "at least one day"),
        ("names,d1\na,1\n", "must start with 'player'"),
        ("player,d1\na,1,1\n", "expected 2 fields"),
        ("player,d1\na,x\n", "not 0 or 1"),
        ("player,d1\n", "no player rows"),
        ("player,d1\na,2\n", "not 0 or 1"),
    ],
)
def test_parse_errors_name_the_defect(text, fragment):
    with pytest.raises(ValidationError, match=fragment):
        parse_problem(text, 2)


def test_malformed_cell_error_names_the_cell():
    with pytest.raises(ValidationError, match=r"line 3.*'d2'"):
        parse_problem("player,d1,d2\na,1,1\nb,1,x\n", 2)


def test_duplicate_names_rejected_via_validate():
    with pytest.raises(ValidationError, match="duplicate"):
        parse_problem("player,d1\na,1\na,1\n", 2)


def test_assignment_labels_must_match():
    p = fixtures.table1()
    with pytest.raises(ValidationError, match="player names"):
        parse_assignment("player,Mon\nwho,1\n", p)
    wrong_days = serialize_problem(p).replace("Tues", "Tuesday")
    with pytest.raises(ValidationError, match="day labels"):
        parse_assignment(wrong_days, p)


def test_serialization_is_lf_only_without_trailing_separators():
    text = serialize_problem(fixtures.table2())
    assert "\r" not in text
    assert not text.startswith("﻿")
    assert all(not line.endswith(",") for line in text.splitlines())
    assert text.endswith("\n")


def test_fixture_files_round_trip_byte_identically():
    for name in (
        "table1.csv",
        "table2.csv",
        "table1_assignment_printed.csv",
        "table1_assignment_corrected.csv",
    ):
        raw = fixtures.fixture_text(name)
        if name.startswith("table1_assignment"):
            p = fixtures.table1()
            x = parse_assignment(raw, p)
            assert serialize_assignment(x, p) == raw
        else:
            p = parse_problem(raw, 4)
            assert serialize_problem(p) == raw


def test_random_problems_round_trip(rng):
    for _ in range(100):
        p = random_problem(rng)
        assert parse_problem(serialize_problem(p), p.group_size) == p
