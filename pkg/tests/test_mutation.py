"""Tests for gashes, flaws, propagation, and the mutation maps."""

import itertools
import json
from collections import Counter

import pytest

from twostep.mutation import (
    FlawedPuzzle,
    all_directed_gashes,
    backward_gashes,
    component_to_dot,
    component_to_json,
    down_temporary_table,
    dual_flawed,
    enumerate_flawed,
    flawed_from_json,
    flawed_to_json,
    forward_gashes,
    gash_class,
    in_backward_set,
    in_forward_set,
    mutate,
    mutation_component,
    mutations,
    opposite,
    phi,
    psi,
    psi_infinity,
    recognize_flaw,
    rotate_gash,
    scab_positions,
    scab_table,
    singleton_gashes,
    temporary_table,
)
from twostep.strings import all_strings, parse


def sample_flawed(a=1, b=2, n=3):
    for u, v, w in itertools.product(all_strings(a, b, n), repeat=3):
        yield from enumerate_flawed(u, v, w)


def test_gash_census():
    gs = all_directed_gashes()
    assert len(gs) == 336
    classes = {gash_class(g) for g in gs}
    hist = Counter(len(c) for c in classes)
    assert hist == {6: 24, 5: 12, 4: 12, 1: 84}
    # classes partition the gashes
    assert sorted(g for c in classes for g in c) == sorted(gs)


def test_opposite_and_rotation():
    for g in all_directed_gashes():
        assert opposite(opposite(g)) == g
        assert rotate_gash(g, 6) == g
        assert gash_class(opposite(g)) == frozenset(
            opposite(h) for h in gash_class(g)
        )


def test_singletons():
    singles = singleton_gashes()
    assert len(singles) == 84
    assert all(gash_class(g) == frozenset({g}) for g in singles)


def test_temporary_table():
    t = temporary_table()
    assert len(t) == 12
    for tri, res in t.items():
        assert len(res) == 3
        rot = (tri[2], tri[0], tri[1])  # 120-degree rotation stays temporary
        assert rot in t
    d = down_temporary_table()
    assert set(d) == {(r, l, h) for l, r, h in t}


def test_scab_table():
    t = scab_table()
    assert len(t) == 34
    orbits = {min(s, (s[2], s[3], s[0], s[1])) for s in t}
    assert len(orbits) == 17
    for s, (side, _) in t.items():
        assert side in ("L", "R")


def test_forward_backward_sets():
    F, B = forward_gashes(), backward_gashes()
    assert len(F) == len(B)
    assert F.isdisjoint(B)
    assert {rotate_gash(g, 3) for g in F} == B


def test_phi_is_involution():
    checked = 0
    for P in sample_flawed():
        for R in P.resolutions():
            assert phi(phi(R)) == R
            checked += 1
    assert checked > 100


def test_mutate_preserves_boundary_and_weight_degree():
    for P in sample_flawed():
        outer = P.boundary()
        for Q in mutations(P):
            assert Q.validate() == []
            assert Q.boundary() == outer


def test_mutate_is_involution_for_single_resolution_flaws():
    checked = 0
    for P in sample_flawed():
        if P.flaw_type == "temporary":
            continue
        Q = mutate(P)
        if Q.flaw_type == "temporary":
            continue  # the way back is one of three choices
        assert mutate(Q) == P
        checked += 1
    assert checked > 100


def test_recognize_flaw_round_trip():
    for P in sample_flawed():
        for R in P.resolutions():
            assert recognize_flaw(R) == P


def test_mutation_component_serialization():
    P = next(iter(sample_flawed()))
    graph = mutation_component(P)
    assert P in graph
    data = json.loads(component_to_json(graph))
    assert data["nodes"]
    dot = component_to_dot(graph)
    assert dot.startswith("graph") or "graph" in dot


def test_flawed_json_round_trip():
    for P in itertools.islice(sample_flawed(), 200):
        assert flawed_from_json(flawed_to_json(P)) == P


def test_dual_flawed_involution():
    for P in itertools.islice(sample_flawed(), 200):
        D = dual_flawed(P)
        assert D.validate() == []
        assert dual_flawed(D) == P


def test_psi_moves_forward_to_backward():
    found = 0
    for P in sample_flawed(1, 2, 4):
        if P.flaw_type == "temporary" or not in_forward_set(P):
            continue
        Q = psi_infinity(P)
        assert not in_forward_set(Q)
        assert in_backward_set(Q)
        found += 1
        if found >= 25:
            break
    assert found == 25


def test_psi_requires_forward_resolution():
    for P in sample_flawed():
        if P.flaw_type != "temporary" and not in_forward_set(P):
            with pytest.raises(ValueError):
                psi(P)
            break
    else:
        pytest.fail("no flawed puzzle without forward resolution found")


def test_flawed_validate_rejects_non_cover_gashpair():
    u = parse("012")
    from twostep.search import enumerate_puzzles

    [P] = enumerate_puzzles(u, u, u)
    # outer labels equal to the inner ones: the border strings do not
    # form a Bruhat cover, so the flaw is rejected
    flaw = ("gashpair", ("u", ((1, u[0]), (2, u[1]))))
    bad = FlawedPuzzle(P.n, dict(P.labels), P.rhombi, flaw)
    assert bad.validate() != []


def test_scab_positions_are_scabs():
    for P in sample_flawed():
        if P.flaw_type == "scab":
            assert P.flaw[1] in scab_positions(P.base_puzzle())
            assert P.validate() == []
