import json

import pytest

from deccrystal.cli import main


def test_insert_ascii(capsys):
    assert main(["insert", "--word", "4' 4 3 3 2' 3' 3 2' 1'"]) == 0
    out = capsys.readouterr().out
    assert "P:" in out and "Q:" in out
    assert "round-trip: 4' 4 3 3 2' 3' 3 2' 1'" in out


def test_insert_json(capsys):
    assert main(["insert", "--word", "2 1'", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["word"] == "2 1'"
    assert data["p"]["shape"] == [2]


def test_graph_from_shape(capsys):
    assert main(["graph", "--shape", "2,1", "--n", "2"]) == 0
    assert "digraph" in capsys.readouterr().out


def test_graph_from_word(capsys):
    assert main(["graph", "--word", "1 1", "--n", "2",
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["vertices"]


def test_graph_needs_one_source(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["graph", "--n", "2"])
    assert exc.value.code == 2


def test_enumerate(capsys):
    assert main(["enumerate", "--family", "dectab+", "--shape", "2,1",
                 "--n", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert all(t["shape"] == [2, 1] for t in data)


def test_character_expand(capsys):
    assert main(["character", "--family", "dectab+", "--shape", "2",
                 "--n", "2", "--expand"]) == 0
    assert "Q[2]" in capsys.readouterr().out


def test_classes(capsys):
    assert main(["classes", "--length", "2", "--n", "2",
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert sum(len(c["words"]) for c in data) == 16


def test_check_single_suite(capsys):
    assert main(["check", "--suite", "monoid"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL " not in out


def test_bad_word_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["insert", "--word", "x"])
    assert exc.value.code == 2
