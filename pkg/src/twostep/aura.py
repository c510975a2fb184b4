"""Auras: vector-valued invariants of edges, gashes, and flawed puzzles.

An *aura* is an element of ``Z[zeta][delta0, delta1, delta2]`` that is
linear in the deltas (a :class:`~.algebra.Tower` without y-variables).
A semi-labeled edge -- an edge with a label on one side only -- is
encoded by the pair ``(d, label)`` where ``d`` is the gash direction
(angle ``(2d + 1) * 30`` degrees) perpendicular to the edge and pointing
toward the label's side.  For a simple label ``a`` the aura is
``delta_a * zeta^(2d+1)``; for composed labels it is forced by the rule
that the side auras of every valid piece (labels moved slightly inside)
sum to zero.  The composed values are derived once from the piece tables
and checked for consistency across all pieces.

The aura of a gash is the sum of its two semi-labeled edges; gashes in
one propagation class share one aura, and swapping the two labels
negates it.  The aura of a flawed puzzle with a gash-pair or marked-scab
flaw is the aura of the right gash of its resolution.  Equivariant auras
scale edge auras by the edge weights ``y_i``; the ``check_*`` functions
below are executable forms of the identities that together prove the
puzzle rule, each returning a report dict ``{check, instance, pass,
lhs, rhs}``.

>>> from .algebra import Tower
>>> edge_aura(1, 0) == Tower.delta(0) * Tower.zeta(3)
True
>>> edge_aura(1, 3) == Tower.delta(1) * Tower.zeta(5) + Tower.delta(0) * Tower.zeta(1)
True
>>> gash_aura((1, 0, 4)) == (Tower.delta(0) * Tower.zeta(3)
...     + Tower.delta(1) * Tower.zeta(7) + Tower.delta(2) * Tower.zeta(11))
True
>>> gash_aura((1, 0, 1)) == (Tower.delta(0) - Tower.delta(1)) * Tower.zeta(3)
True
>>> check_gash_classes()["pass"]
True
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .algebra import Tower, YPoly, y, zeta_pow
from .board import (
    Puzzle,
    down_cell_edges,
    edge_weight,
    rhombus_position,
    up_cell_edges,
)
from .labels import SIMPLE, tables
from .mutation import (
    AbstractGash,
    FlawedPuzzle,
    GashedPuzzle,
    all_directed_gashes,
    enumerate_flawed,
    gash_class,
    opposite,
    right_gash,
    scab_positions,
)
from .search import enumerate_puzzles, structure_constant
from .strings import String012, c_form, cocovers, content, covers, fmt

__all__ = [
    "aura_table",
    "edge_aura",
    "gash_aura",
    "resolution_aura",
    "flawed_aura",
    "gamma_form",
    "piece_equivariant_aura",
    "scab_equivariant_aura",
    "equivariant_flawed_aura",
    "check_gash_classes",
    "check_boundary_aura",
    "check_scab_sum",
    "check_mutation_closed_sum",
    "check_temporary_sum",
    "check_cover_aura",
    "check_scab_weight",
    "check_two_sums",
    "check_recursion",
]

# direction (toward the piece interior) of side i of a cell;
# up cells list sides as (left, right, bottom), down cells as (nw, ne, top)
_IN_UP = (5, 3, 1)
_IN_DOWN = (0, 2, 4)


def _pieces() -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """All valid triangles as (in-directions, side labels)."""
    ups = sorted(tables().up_triangles)
    out = [(_IN_UP, t) for t in ups]
    out += [(_IN_DOWN, (r, l, h)) for (l, r, h) in ups]
    return out


@lru_cache(maxsize=None)
def aura_table() -> dict[tuple[int, int], Tower]:
    """Aura of every semi-labeled edge ``(direction d, label)``.

    Simple labels are seeded directly; composed labels are solved from
    pieces with a single unknown side until the table is complete.  The
    zero-sum rule is then asserted for *all* pieces (so two pieces can
    never derive different values) together with rotation equivariance.
    """
    table: dict[tuple[int, int], Tower] = {}
    for d in range(6):
        for a in SIMPLE:
            table[(d, a)] = Tower.delta(a) * Tower.zeta(2 * d + 1)
    pieces = _pieces()
    changed = True
    while changed:
        changed = False
        for ins, t in pieces:
            unknown = [i for i in range(3) if (ins[i], t[i]) not in table]
            if len(unknown) == 1:
                i = unknown[0]
                total = Tower.zero()
                for k in range(3):
                    if k != i:
                        total = total + table[(ins[k], t[k])]
                table[(ins[i], t[i])] = -total
                changed = True
    assert len(table) == 48, f"underdetermined aura table: {len(table)} entries"
    for ins, t in pieces:
        total = table[(ins[0], t[0])] + table[(ins[1], t[1])] + table[(ins[2], t[2])]
        assert not total, f"inconsistent aura derivation at piece {t}"
    for (d, a), v in table.items():
        assert table[((d + 1) % 6, a)] == v * zeta_pow(2), (d, a)
    return table


def edge_aura(d: int, label: int) -> Tower:
    """Aura of a semi-labeled edge: perpendicular direction ``d`` points
    toward the side bearing ``label``.

    >>> from .algebra import Tower
    >>> edge_aura(4, 2) == Tower.delta(2) * Tower.zeta(9)
    True
    """
    return aura_table()[(d % 6, label)]


def gash_aura(g: AbstractGash) -> Tower:
    """Aura of a (directed) gash: the sum over its two semi-labeled
    edges.  The direction is immaterial (reversing gives the same
    undirected gash) while swapping the labels negates the aura.

    >>> all(gash_aura(opposite(g)) == -gash_aura(g) for g in all_directed_gashes())
    True
    """
    d, orig, new = g
    return edge_aura(d, orig) + edge_aura(d + 3, new)


def resolution_aura(R: GashedPuzzle) -> Tower:
    """Aura of a resolution: the aura of its right gash."""
    return gash_aura(right_gash(R).abstract)


def flawed_aura(P: FlawedPuzzle) -> Tower:
    """Aura of a flawed puzzle with a gash-pair or marked-scab flaw (the
    flaw then has a unique resolution)."""
    if P.flaw_type == "temporary":
        raise ValueError("a temporary-piece flaw has three resolution auras")
    (R,) = P.resolutions()
    return resolution_aura(R)


def gamma_form(a: int, b: int, n: int) -> Tower:
    """``gamma = a*delta0 + (b-a)*delta1 + (n-b)*delta2``."""
    return (
        Tower.delta(0) * a + Tower.delta(1) * (b - a) + Tower.delta(2) * (n - b)
    )


# ---------------------------------------------------------------------------
# Equivariant auras


def piece_equivariant_aura(P: Puzzle, cell: tuple[str, int, int]) -> Tower:
    """Weight-scaled aura of a triangular piece: the sum over its sides
    of ``weight(e) * edge_aura`` with labels moved inside the piece."""
    kind, x, yy = cell
    if kind == "U":
        edges, ins = up_cell_edges(x, yy), _IN_UP
    else:
        edges, ins = down_cell_edges(x, yy), _IN_DOWN
    out = Tower.zero()
    for e, d in zip(edges, ins):
        out = out + Tower.from_ypoly(edge_weight(e, P.n)) * edge_aura(d, P.labels[e])
    return out


def scab_equivariant_aura(P: Puzzle, x: int, yy: int) -> Tower:
    """Equivariant aura of the two-triangle vertical rhombus made of
    ``U(x,y)`` and ``D(x,y+1)`` (zero unless the pair is a scab)."""
    return piece_equivariant_aura(P, ("U", x, yy)) + piece_equivariant_aura(
        P, ("D", x, yy + 1)
    )


def equivariant_flawed_aura(P: FlawedPuzzle) -> Tower:
    """Equivariant aura of a marked-scab flawed puzzle: the equivariant
    aura of its marked scab."""
    if P.flaw_type != "scab":
        raise ValueError("equivariant aura is defined for marked-scab flaws")
    x, yy = P.flaw[1]
    return scab_equivariant_aura(P.base_puzzle(), x, yy)


def _scab_weight(P: FlawedPuzzle) -> YPoly:
    x, yy = P.flaw[1]
    i, j = rhombus_position(x, yy, P.n)
    return y(j) - y(i)


# ---------------------------------------------------------------------------
# Executable identities (each returns {check, instance, pass, lhs, rhs})


def _report(check: str, instance: str, lhs: Tower, rhs: Tower) -> dict:
    return {
        "check": check,
        "instance": instance,
        "pass": lhs == rhs,
        "lhs": str(lhs),
        "rhs": str(rhs),
    }


def check_gash_classes() -> dict:
    """All gashes in one propagation class share one aura, and opposite
    classes carry opposite auras."""
    bad = []
    for g in all_directed_gashes():
        a = gash_aura(g)
        if any(gash_aura(h) != a for h in gash_class(g)):
            bad.append(g)
        if gash_aura(opposite(g)) != -a:
            bad.append(g)
    return {
        "check": "class-constant auras",
        "instance": "all 336 directed gashes",
        "pass": not bad,
        "lhs": "auras per class",
        "rhs": f"constant; violations: {sorted(set(bad))}",
    }


def check_boundary_aura(P: Puzzle) -> dict:
    """Border aura sums of a puzzle: with labels moved inside, the left,
    right, and bottom borders sum to ``gamma*zeta^11``, ``gamma*zeta^7``,
    and ``gamma*zeta^3``."""
    u, v, w = P.boundary()
    a, b, n = content(u)
    gamma = gamma_form(a, b, n)
    sums, targets = [], []
    for s, d in ((u, 5), (v, 3), (w, 1)):
        total = Tower.zero()
        for letter in s:
            total = total + edge_aura(d, letter)
        sums.append(total)
        targets.append(gamma * Tower.zeta(2 * d + 1))
    return {
        "check": "border aura sums",
        "instance": f"boundary ({fmt(u)}, {fmt(v)}, {fmt(w)})",
        "pass": sums == targets,
        "lhs": "; ".join(str(t) for t in sums),
        "rhs": "; ".join(str(t) for t in targets),
    }


def check_scab_sum(P: Puzzle) -> dict:
    """Scab sum of a flawless puzzle: the equivariant auras of its scabs
    add up to ``C_u zeta^11 + C_v zeta^7 + C_w zeta^3``."""
    u, v, w = P.boundary()
    lhs = Tower.zero()
    for x, yy in scab_positions(P):
        lhs = lhs + scab_equivariant_aura(P, x, yy)
    rhs = (
        c_form(u) * Tower.zeta(11)
        + c_form(v) * Tower.zeta(7)
        + c_form(w) * Tower.zeta(3)
    )
    inst = f"puzzle with boundary ({fmt(u)}, {fmt(v)}, {fmt(w)})"
    return _report("scab sum", inst, lhs, rhs)


def check_mutation_closed_sum(S: Iterable[FlawedPuzzle], instance: str = "") -> dict:
    """Over a mutation-closed set of flawed puzzles, the auras of the
    scab-flawed and gash-pair-flawed members sum to zero (temporary
    flaws do not contribute)."""
    total = Tower.zero()
    count = 0
    for P in S:
        count += 1
        if P.flaw_type in ("scab", "gashpair"):
            total = total + flawed_aura(P)
    inst = instance or f"mutation-closed set of {count} flawed puzzles"
    return _report("mutation-closed aura sum", inst, total, Tower.zero())


def check_temporary_sum(P: FlawedPuzzle) -> dict:
    """The three resolution auras of a temporary-piece flaw sum to zero."""
    if P.flaw_type != "temporary":
        raise ValueError("not a temporary-piece flaw")
    total = Tower.zero()
    for R in P.resolutions():
        total = total + resolution_aura(R)
    return _report(
        "temporary resolution sum", f"temporary flaw at {P.flaw[1]}", total, Tower.zero()
    )


def check_cover_aura(P: FlawedPuzzle) -> dict:
    """A gash pair realizing a Bruhat cover has aura ``zeta^5 * delta``
    (left border), ``zeta * delta`` (right), or ``zeta^9 * delta``
    (bottom), where ``delta`` is the cover's delta form."""
    border, ce = P.cover_edge()
    k = {"u": 5, "v": 1, "w": 9}[border]
    rhs = Tower.zeta(k) * ce.delta_tower()
    inst = f"gash pair on border {border}: {fmt(ce.before)} -> {fmt(ce.after)}"
    return _report("cover gash aura", inst, flawed_aura(P), rhs)


def check_scab_weight(P: FlawedPuzzle) -> dict:
    """For a marked-scab flaw, the equivariant aura is ``-weight(s)``
    times the ordinary aura."""
    lhs = equivariant_flawed_aura(P)
    rhs = -Tower.from_ypoly(_scab_weight(P)) * flawed_aura(P)
    return _report("scab weight", f"marked scab at {P.flaw[1]}", lhs, rhs)


def check_two_sums(u: String012, v: String012, w: String012) -> dict:
    """The key identity behind the puzzle rule: over all flawed puzzles
    with outer boundary ``(u, v, w)``, the weighted equivariant auras of
    the scab-flawed members equal the weighted auras of the gash-pair-
    flawed members."""
    lhs = Tower.zero()
    rhs = Tower.zero()
    for P in enumerate_flawed(u, v, w):
        if P.flaw_type == "scab":
            lhs = lhs + equivariant_flawed_aura(P) * Tower.from_ypoly(P.weight())
        elif P.flaw_type == "gashpair":
            rhs = rhs + flawed_aura(P) * Tower.from_ypoly(P.weight())
    inst = f"flawed puzzles with boundary ({fmt(u)}, {fmt(v)}, {fmt(w)})"
    return _report("two weighted sums", inst, lhs, rhs)


def check_recursion(u: String012, v: String012, w: String012) -> dict:
    """The recursion satisfied by the puzzle-rule constants, in the
    delta-linear ring: ``(C_u z^11 + C_v z^7 + C_w z^3) C^w_{u,v}``
    equals the cover-sum of neighbouring constants."""
    c = Tower.from_ypoly(structure_constant(u, v, w))
    lhs = (
        c_form(u) * Tower.zeta(11)
        + c_form(v) * Tower.zeta(7)
        + c_form(w) * Tower.zeta(3)
    ) * c
    rhs = Tower.zero()
    for ce in covers(u):
        rhs = rhs + Tower.zeta(5) * ce.delta_tower() * Tower.from_ypoly(
            structure_constant(ce.after, v, w)
        )
    for ce in covers(v):
        rhs = rhs + Tower.zeta(1) * ce.delta_tower() * Tower.from_ypoly(
            structure_constant(u, ce.after, w)
        )
    for ce in cocovers(w):
        rhs = rhs + Tower.zeta(9) * ce.delta_tower() * Tower.from_ypoly(
            structure_constant(u, v, ce.before)
        )
    inst = f"recursion at ({fmt(u)}, {fmt(v)}, {fmt(w)})"
    return _report("aura recursion", inst, lhs, rhs)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
