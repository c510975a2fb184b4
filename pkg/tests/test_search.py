"""Tests for puzzle enumeration and structure constants."""

import itertools

from twostep.strings import (
    all_strings,
    content,
    extreme_constant,
    length,
    oracle_constant,
    parse,
)
from twostep.search import (
    count_puzzles,
    enumerate_puzzles,
    product_expansion,
    restriction_puzzle,
    structure_constant,
)


def test_restriction_puzzle_properties():
    for a, b, n in [(1, 2, 3), (1, 2, 4), (2, 3, 4)]:
        for w in all_strings(a, b, n):
            P = restriction_puzzle(w)
            assert P.boundary() == (w, w, w)
            assert P.weight() == extreme_constant(w)
            assert list(enumerate_puzzles(w, w, w)) == [P]


def test_mismatched_content_gives_nothing():
    assert count_puzzles(parse("012"), parse("012"), parse("122")) == 0


def test_constants_are_homogeneous():
    u, v = parse("0121"), parse("1021")
    for w, c in product_expansion(u, v).items():
        assert c.is_homogeneous()
        assert c.degree() == length(u) + length(v) - length(w)


def test_commutative():
    S = all_strings(1, 2, 3)
    for u, v in itertools.combinations(S, 2):
        for w in S:
            assert structure_constant(u, v, w) == structure_constant(v, u, w)


def test_matches_oracle_small():
    for u, v, w in itertools.product(all_strings(1, 1, 3), repeat=3):
        assert structure_constant(u, v, w) == oracle_constant(u, v, w)


def test_identity_is_unit():
    S = all_strings(1, 2, 3)
    e = parse("012")
    for v in S:
        exp = product_expansion(e, v)
        assert set(exp) == {v}
        assert exp[v].coeff(()) == 1 and exp[v].degree() == 0


def test_deterministic_order():
    u, v, w = parse("01201"), parse("10102"), parse("10210")
    first = [P.weight() for P in enumerate_puzzles(u, v, w)]
    second = [P.weight() for P in enumerate_puzzles(u, v, w)]
    assert first == second


def test_enumerated_puzzles_have_right_boundary():
    u, v = parse("0121"), parse("0211")
    assert content(u) == content(v)
    for w, _ in product_expansion(u, v).items():
        for P in enumerate_puzzles(u, v, w):
            assert P.boundary() == (u, v, w)
            assert P.validate() == []
