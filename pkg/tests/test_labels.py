"""Tests for the puzzle-piece label tables."""

import pytest

from twostep.labels import (
    SIMPLE,
    complete_triangle,
    dual_label,
    label_to_string,
    tables,
    validate_tables,
)


def test_simple_labels():
    assert SIMPLE == (0, 1, 2)
    assert [label_to_string(l) for l in range(3)] == ["0", "1", "2"]


def test_dual_label_involution():
    for l in range(8):
        assert dual_label(dual_label(l)) == l
    assert dual_label(0) == 2 and dual_label(1) == 1 and dual_label(5) == 5
    assert dual_label(3) == 4 and dual_label(6) == 7


def test_up_triangles_rotation_closed():
    t = tables()
    ups = t.up_triangles
    assert len(ups) == 18
    for l, r, h in ups:
        assert (h, l, r) in ups  # 120-degree rotation


def test_down_is_flipped_up():
    t = tables()
    for tri in t.up_triangles:
        l, r, h = tri
        assert t.valid_up(l, r, h)
        assert t.valid_down(r, l, h)
    assert not t.valid_down(0, 1, 2)


def test_rhombi():
    t = tables()
    assert set(t.rhombi) == {
        (1, 0), (2, 1), (2, 0), (2, 3), (4, 0), (4, 3), (6, 0), (2, 7)
    }


def test_validate_tables():
    assert validate_tables(tables()) == []


def test_dual_tables():
    t = tables()
    d = t.dual()
    assert d.up_triangles == frozenset(
        (dual_label(r), dual_label(l), dual_label(h)) for l, r, h in t.up_triangles
    )


def test_complete_triangle():
    assert complete_triangle("up", left=1, right=0) == (1, 0, 3)
    assert complete_triangle("up", left=0, right=0) == (0, 0, 0)
    assert complete_triangle("down", nw=0, top=3) == (0, 1, 3)


def test_table_path_override(monkeypatch, tmp_path):
    import twostep.labels as labels

    copy = tmp_path / "tables.txt"
    copy.write_text(labels.default_table_text())
    monkeypatch.setenv("PUZZLE_TABLE_PATH", str(copy))
    assert validate_tables(tables()) == []


def test_corrupt_table_rejected(monkeypatch, tmp_path):
    import twostep.labels as labels

    bad = tmp_path / "bad_tables.txt"
    bad.write_text(
        labels.default_table_text().replace("triangle 1 0 3", "triangle 0 1 3")
    )
    monkeypatch.setenv("PUZZLE_TABLE_PATH", str(bad))
    with pytest.raises(ValueError):
        tables()
