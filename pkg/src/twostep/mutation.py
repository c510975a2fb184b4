"""Gashes, flaws, and the puzzle mutation algorithm.

A *directed gash* is an edge whose two sides carry different labels,
together with a direction perpendicular to the edge; the label the
direction points to is the *original* label, the other one the *new*
label.  Abstractly a gash is a triple ``(d, orig, new)`` where the
direction makes the angle ``(2d + 1) * 30`` degrees with the positive
x-axis (y axis pointing up), so ``d`` also determines the edge axis:
``d in (1, 4)`` horizontal, ``d in (0, 3)`` NW-SE, ``d in (2, 5)``
SW-NE.  There are ``6 * 8 * 7 = 336`` directed gashes.

Propagation moves a gash across the piece it points at: across a
rhombus it slides to the opposite side unchanged (when the modified
rhombus is still a valid piece), and across a triangle there is at most
one valid replacement piece (so at most one move).  The classes of the
reachability relation, the temporary-piece table, and the scab table
are all *computed* from the triangle/rhombus tables rather than
transcribed.

A *flawed puzzle* carries exactly one flaw: a gash pair on a border
segment, a temporary piece, or a marked scab.  Replacing the flaw by
two directed gashes gives its *resolutions*; ``phi`` propagates both
gashes to their fixed points and reverses them, which is an involution
whose value is a resolution of a unique other (or the same) flawed
puzzle.  ``mutate`` composes these steps, ``mutation_component``
explores the resulting trivalent graph, and ``psi``/``psi_infinity``
implement the left-to-right sliding bijection.

>>> g = (1, 1, 0)
>>> sorted(gash_class(g))
[(0, 3, 0), (1, 1, 0), (1, 6, 5), (2, 1, 3), (2, 4, 5), (3, 4, 6)]
>>> opposite((1, 1, 0))
(1, 0, 1)
>>> len(all_directed_gashes())
336
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .board import (
    Edge,
    Puzzle,
    down_cell_edges,
    puzzle_from_json,
    puzzle_to_json,
    rhombus_cells,
    rhombus_inner_edge,
    rhombus_outer_edges,
    up_cell_edges,
)
from .labels import complete_triangle, tables
from .search import enumerate_one_special, enumerate_puzzles
from .strings import String012, covers, cocovers

__all__ = [
    "AbstractGash",
    "PlacedGash",
    "GashedPuzzle",
    "FlawedPuzzle",
    "FlawRecognitionError",
    "all_directed_gashes",
    "immediate_moves",
    "gash_class",
    "opposite",
    "rotate_gash",
    "is_opposite_class",
    "singleton_gashes",
    "temporary_table",
    "down_temporary_table",
    "scab_table",
    "scab_positions",
    "propagate_step",
    "propagate_full",
    "phi",
    "recognize_flaw",
    "mutate",
    "mutations",
    "mutation_component",
    "component_to_json",
    "component_to_dot",
    "right_gash",
    "forward_gashes",
    "backward_gashes",
    "psi",
    "psi_infinity",
    "enumerate_flawed",
    "flawed_to_json",
    "flawed_from_json",
    "dual_flawed",
]

AbstractGash = tuple[int, int, int]  # (direction d, original label, new label)

# side order within a cell: up = (left, right, bottom); down = (nw, ne, top)
_IN_UP = (5, 3, 1)  # gash direction pointing into an up cell through side i
_OUT_UP = (2, 0, 4)
_IN_DOWN = (0, 2, 4)
_OUT_DOWN = (3, 5, 1)


@dataclass(frozen=True, order=True)
class PlacedGash:
    """A directed gash at a specific edge of a board."""

    edge: Edge
    d: int
    orig: int
    new: int

    @property
    def abstract(self) -> AbstractGash:
        return (self.d, self.orig, self.new)

    def reverse(self) -> "PlacedGash":
        return PlacedGash(self.edge, (self.d + 3) % 6, self.new, self.orig)


def cell_ahead(edge: Edge, d: int, n: int) -> Optional[tuple[str, int, int]]:
    """The cell a gash at ``edge`` with direction ``d`` points at, or
    None when it points off the board."""
    kind, x, yy = edge
    if kind == "H":
        cell = ("U", x, yy) if d == 1 else ("D", x, yy + 1) if d == 4 else None
    elif kind == "B":
        cell = ("U", x, yy) if d == 3 else ("D", x, yy) if d == 0 else None
    elif kind == "A":
        cell = ("U", x, yy) if d == 5 else ("D", x - 1, yy) if d == 2 else None
    else:
        cell = None
    if cell is None:
        raise ValueError(f"direction {d} is not perpendicular to edge {edge}")
    _, cx, cy = cell
    if cell[0] == "U" and 0 <= cx <= cy <= n - 1:
        return cell
    if cell[0] == "D" and 1 <= cy <= n - 1 and 0 <= cx <= cy - 1:
        return cell
    return None


def cell_behind(edge: Edge, d: int, n: int) -> Optional[tuple[str, int, int]]:
    return cell_ahead(edge, (d + 3) % 6, n)


def cell_sides(cell: tuple[str, int, int]) -> tuple[Edge, Edge, Edge]:
    kind, x, yy = cell
    return up_cell_edges(x, yy) if kind == "U" else down_cell_edges(x, yy)


def _valid_triples(kind: str) -> list[tuple[int, int, int]]:
    ups = sorted(tables().up_triangles)
    if kind == "U":
        return ups
    return sorted((r, l, h) for (l, r, h) in ups)


# ---------------------------------------------------------------------------
# Abstract gashes and their classes


def all_directed_gashes() -> list[AbstractGash]:
    return [
        (d, a, b) for d in range(6) for a in range(8) for b in range(8) if a != b
    ]


@lru_cache(maxsize=None)
def immediate_moves() -> frozenset[tuple[AbstractGash, AbstractGash]]:
    """The symmetric "immediately reachable" relation, computed by
    scanning all single-triangle propagation templates."""
    rel: set[tuple[AbstractGash, AbstractGash]] = set()
    for kind, ins, outs in (("U", _IN_UP, _OUT_UP), ("D", _IN_DOWN, _OUT_DOWN)):
        triples = _valid_triples(kind)
        for q in triples:
            for s in range(3):
                for q2 in triples:
                    if q2[s] == q[s]:
                        continue
                    agree = [i for i in range(3) if i != s and q[i] == q2[i]]
                    if len(agree) != 1:
                        continue
                    s2 = ({0, 1, 2} - {s, agree[0]}).pop()
                    g = (ins[s], q[s], q2[s])
                    h = (outs[s2], q[s2], q2[s2])
                    rel.add((g, h))
                    rel.add((h, g))
    assert all((h, g) in rel for (g, h) in rel)
    return frozenset(rel)


@lru_cache(maxsize=None)
def gash_class(g: AbstractGash) -> frozenset[AbstractGash]:
    """All directed gashes reachable from ``g`` by propagations."""
    adj: dict[AbstractGash, set[AbstractGash]] = {}
    for a, b in immediate_moves():
        adj.setdefault(a, set()).add(b)
    seen = {g}
    stack = [g]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def opposite(g: AbstractGash) -> AbstractGash:
    """Interchange the labels, keeping the direction.

    >>> opposite((2, 4, 5))
    (2, 5, 4)
    """
    d, a, b = g
    return (d, b, a)


def rotate_gash(g: AbstractGash, k: int) -> AbstractGash:
    """Rotate by ``k`` sixth-turns counterclockwise."""
    d, a, b = g
    return ((d + k) % 6, a, b)


def is_opposite_class(g: AbstractGash, h: AbstractGash) -> bool:
    return gash_class(opposite(g)) == gash_class(h)


def singleton_gashes() -> list[AbstractGash]:
    return [g for g in all_directed_gashes() if gash_class(g) == {g}]


# ---------------------------------------------------------------------------
# Temporary pieces (computed per the existence-of-replacements criterion)


@lru_cache(maxsize=None)
def temporary_table() -> dict[
    tuple[int, int, int], tuple[tuple[int, int, int], ...]
]:
    """Map each temporary up-triangle ``(left, right, bottom)`` to its
    three resolution pieces, indexed by the preserved side."""
    valid = _valid_triples("U")
    out = {}
    for l in range(8):
        for r in range(8):
            for h in range(8):
                t = (l, r, h)
                if t in valid:
                    continue
                found = []
                for rA in valid:  # preserves side 0
                    if rA[0] != t[0]:
                        continue
                    for rB in valid:  # preserves side 1
                        if rB[1] != t[1]:
                            continue
                        for rC in valid:  # preserves side 2
                            if rC[2] != t[2]:
                                continue
                            t1 = (rC[0], rA[1], rB[2])
                            t2 = (rB[0], rC[1], rA[2])
                            if t1 in valid and t2 in valid:
                                found.append((rA, rB, rC))
                if found:
                    assert len(found) == 1, (t, found)
                    out[t] = found[0]
    return out


@lru_cache(maxsize=None)
def down_temporary_table() -> dict[
    tuple[int, int, int], tuple[tuple[int, int, int], ...]
]:
    """Temporary down-triangles ``(nw, ne, top)`` with resolutions, by
    180-degree rotation of the up table."""

    def flip(t):
        return (t[1], t[0], t[2])

    return {
        flip(t): (flip(rB), flip(rA), flip(rC))
        for t, (rA, rB, rC) in temporary_table().items()
    }


# ---------------------------------------------------------------------------
# Scabs (vertical two-triangle rhombi that are not 180-degree symmetric)


@lru_cache(maxsize=None)
def scab_table() -> dict[tuple[int, int, int, int], tuple[str, tuple[int, int]]]:
    """Map each scab ``(NW, NE, SE, SW)`` to its unique resolution:
    ``("L", (p, q))`` when the equivariant piece agrees on the NW/SW
    sides (gashes on NE and SE), ``("R", (p, q))`` when it agrees on
    NE/SE (gashes on NW and SW)."""
    t = tables()
    ups = _valid_triples("U")
    out = {}
    for a, b, z in ups:  # up triangle: left a, right b, bottom z
        for c, d in ((q3[1], q3[0]) for q3 in ups if q3[2] == z):
            # down triangle below: nw c, ne d, top z
            if (c, d) == (b, a):
                continue  # 180-degree symmetric: not a scab
            s = (a, b, d, c)  # (NW, NE, SE, SW)
            res = []
            if (c, a) in t.rhombi:
                res.append(("L", (c, a)))
            if (b, d) in t.rhombi:
                res.append(("R", (b, d)))
            assert len(res) == 1, (s, res)
            out[s] = res[0]
    return out


def scab_positions(P: Puzzle) -> list[tuple[int, int]]:
    """Anchors ``(x, y)`` of all scabs in a puzzle: vertically adjacent
    triangle pairs that are not 180-degree rotations of each other."""
    ups, downs = P.covered_cells()
    out = []
    for yy in range(P.n - 1):
        for x in range(yy + 1):
            if (x, yy) in ups or (x, yy + 1) in downs:
                continue
            s = _scab_at(P.labels, x, yy)
            if (s[3], s[2]) != (s[1], s[0]):
                out.append((x, yy))
    return out


def _scab_at(labels: dict, x: int, yy: int) -> tuple[int, int, int, int]:
    """(NW, NE, SE, SW) labels of the triangle pair U(x,y), D(x,y+1)."""
    return (
        labels[("A", x, yy)],
        labels[("B", x, yy)],
        labels[("A", x + 1, yy + 1)],
        labels[("B", x, yy + 1)],
    )


# ---------------------------------------------------------------------------
# Gashed puzzles and propagation


@dataclass(frozen=True)
class GashedPuzzle:
    """A tiling whose labels match everywhere except at gash edges.

    ``labels`` omits gash edges and rhombus-interior edges; each gash
    carries both side labels (the piece it points at contributes the
    original label, the piece behind it the new label).
    """

    n: int
    labels: dict[Edge, int] = field(compare=False)
    rhombi: frozenset = frozenset()
    gashes: frozenset = frozenset()
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        key = (
            self.n,
            tuple(sorted(self.labels.items())),
            tuple(sorted(self.rhombi)),
            tuple(sorted(self.gashes)),
        )
        object.__setattr__(self, "_key", key)

    def __eq__(self, other) -> bool:
        return isinstance(other, GashedPuzzle) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def rhombus_at(self, cell: tuple[str, int, int]):
        for r in self.rhombi:
            up, down = rhombus_cells(r)
            if cell == ("U",) + up or cell == ("D",) + down:
                return r
        return None

    def side_label(self, cell: tuple[str, int, int], edge: Edge) -> int:
        for g in self.gashes:
            if g.edge == edge:
                return g.orig if cell_ahead(edge, g.d, self.n) == cell else g.new
        return self.labels[edge]


class FlawRecognitionError(Exception):
    """The two stuck gashes do not form a recognizable flaw (this would
    contradict the uniqueness theorem for mutations)."""


def _step(G: GashedPuzzle, g: PlacedGash):
    """One propagation. Returns (new GashedPuzzle, new PlacedGash),
    "stuck", or "blocked" (another gash on the target piece)."""
    cell = cell_ahead(g.edge, g.d, G.n)
    if cell is None:
        return "stuck"
    t = tables()
    other_edges = {h.edge for h in G.gashes if h != g}
    r0 = G.rhombus_at(cell)
    if r0 is not None:
        p_pair, q_pair = rhombus_outer_edges(r0)
        if other_edges & (set(p_pair) | set(q_pair)):
            return "blocked"
        # read each pair's label from its non-gashed member
        p = G.labels[p_pair[1] if p_pair[0] == g.edge else p_pair[0]]
        q = G.labels[q_pair[1] if q_pair[0] == g.edge else q_pair[0]]
        if g.edge in p_pair:
            assert g.orig == p, (g, p, q)
            newpq, pair = (g.new, q), p_pair
        else:
            assert g.orig == q, (g, p, q)
            newpq, pair = (p, g.new), q_pair
        if newpq not in t.rhombi:
            return "stuck"
        opp = pair[0] if pair[1] == g.edge else pair[1]
        labels = dict(G.labels)
        labels[g.edge] = g.new
        labels.pop(opp, None)
        ng = PlacedGash(opp, g.d, g.orig, g.new)
        gashes = (G.gashes - {g}) | {ng}
        return GashedPuzzle(G.n, labels, G.rhombi, frozenset(gashes)), ng
    edges = cell_sides(cell)
    if other_edges & set(edges):
        return "blocked"
    s = edges.index(g.edge)
    q = tuple(
        g.orig if i == s else G.labels[edges[i]] for i in range(3)
    )
    triples = _valid_triples(cell[0])
    assert q[s] == g.orig
    cands = []
    for q2 in triples:
        if q2[s] != g.new:
            continue
        agree = [i for i in range(3) if i != s and q2[i] == q[i]]
        if len(agree) == 1:
            cands.append((q2, agree[0]))
    if not cands:
        return "stuck"
    assert len(cands) == 1, (q, g, cands)
    q2, s1 = cands[0]
    s2 = ({0, 1, 2} - {s, s1}).pop()
    outs = _OUT_UP if cell[0] == "U" else _OUT_DOWN
    labels = dict(G.labels)
    labels[g.edge] = g.new
    del labels[edges[s2]]
    ng = PlacedGash(edges[s2], outs[s2], q[s2], q2[s2])
    gashes = (G.gashes - {g}) | {ng}
    return GashedPuzzle(G.n, labels, G.rhombi, frozenset(gashes)), ng


def propagate_step(
    G: GashedPuzzle, g: PlacedGash
) -> Optional[tuple[GashedPuzzle, PlacedGash]]:
    """Propagate one step; None when the gash is stuck.  Raises
    ValueError for ill-formed requests (gash not present, or another
    gash on the target piece)."""
    if g not in G.gashes:
        raise ValueError(f"gash {g} is not in this gashed puzzle")
    res = _step(G, g)
    if res == "stuck":
        return None
    if res == "blocked":
        raise ValueError("another gash lies on the sides of the target piece")
    return res


def propagate_full(
    G: GashedPuzzle, g: PlacedGash
) -> tuple[GashedPuzzle, PlacedGash, list[Edge]]:
    """Propagate until stuck; returns the final state, the final gash,
    and the path of gashed edges (asserting no edge repeats)."""
    if g not in G.gashes:
        raise ValueError(f"gash {g} is not in this gashed puzzle")
    path = [g.edge]
    while True:
        res = _step(G, g)
        if res in ("stuck", "blocked"):
            return G, g, path
        G, g = res
        assert g.edge not in path, "propagation revisited an edge"
        path.append(g.edge)


def phi(G: GashedPuzzle) -> GashedPuzzle:
    """Propagate both gashes to their fixed points and reverse them."""
    g1, g2 = sorted(G.gashes)
    G1, f1, p1 = propagate_full(G, g1)
    G2, f2, p2 = propagate_full(G1, g2)
    assert not (set(p1) & set(p2)), "propagation paths are not disjoint"
    gashes = frozenset({f1.reverse(), f2.reverse()})
    return GashedPuzzle(G2.n, dict(G2.labels), G2.rhombi, gashes)


# ---------------------------------------------------------------------------
# Flawed puzzles


@dataclass(frozen=True)
class FlawedPuzzle:
    """A puzzle with exactly one flaw.

    ``labels`` holds the interior ("inner") labels everywhere.  The flaw
    is one of:

    - ``("gashpair", (border, ((i, outer_i), (j, outer_j))))`` with
      border ``"u"``/``"v"``/``"w"`` and 1-based positions whose outer
      labels differ from the inner ones;
    - ``("temporary", (kind, x, y))`` marking the cell holding the
      temporary piece;
    - ``("scab", (x, y))`` marking the scab made of U(x,y) and D(x,y+1).
    """

    n: int
    labels: dict[Edge, int] = field(compare=False)
    rhombi: frozenset = frozenset()
    flaw: tuple = ()
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        key = (
            self.n,
            tuple(sorted(self.labels.items())),
            tuple(sorted(self.rhombi)),
            self.flaw,
        )
        object.__setattr__(self, "_key", key)

    def __eq__(self, other) -> bool:
        return isinstance(other, FlawedPuzzle) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    @property
    def flaw_type(self) -> str:
        return self.flaw[0]

    def base_puzzle(self) -> Puzzle:
        return Puzzle(self.n, dict(self.labels), self.rhombi)

    def inner_boundary(self):
        return self.base_puzzle().boundary()

    def boundary(self):
        """The outer boundary strings (u, v, w)."""
        u, v, w = (list(s) for s in self.inner_boundary())
        if self.flaw_type == "gashpair":
            border, positions = self.flaw[1]
            s = {"u": u, "v": v, "w": w}[border]
            for i, outer in positions:
                s[i - 1] = outer
        return tuple(u), tuple(v), tuple(w)

    def weight(self):
        return self.base_puzzle().weight()

    def cover_edge(self):
        """For a gash-pair flaw: the border name and the Bruhat cover
        linking the longer and shorter boundary strings."""
        if self.flaw_type != "gashpair":
            raise ValueError("not a gash-pair flaw")
        border = self.flaw[1][0]
        iu, iv, iw = self.inner_boundary()
        ou, ov, ow = self.boundary()
        if border == "u":
            pre, post = ou, iu  # outer -> inner is a cover
        elif border == "v":
            pre, post = ov, iv
        else:
            pre, post = iw, ow  # inner -> outer is a cover
        for ce in covers(pre):
            if ce.after == post:
                return border, ce
        raise FlawRecognitionError(f"border strings do not form a cover: {self}")

    def validate(self) -> list[str]:
        out = []
        base = self.base_puzzle()
        problems = base.validate()
        if self.flaw_type == "gashpair":
            out.extend(problems)
            try:
                self.cover_edge()
            except FlawRecognitionError as e:
                out.append(str(e))
        elif self.flaw_type == "temporary":
            kind, x, yy = self.flaw[1]
            cell = (kind, x, yy)
            triple = tuple(self.labels[e] for e in cell_sides(cell))
            table = temporary_table() if kind == "U" else down_temporary_table()
            if triple not in table:
                out.append(f"cell {cell} does not hold a temporary piece")
            expect = f"invalid {'up' if kind == 'U' else 'down'}-triangle " \
                f"{triple} at {(x, yy)}"
            out.extend(p for p in problems if p != expect)
        elif self.flaw_type == "scab":
            out.extend(problems)
            x, yy = self.flaw[1]
            s = _scab_at(self.labels, x, yy)
            if s not in scab_table():
                out.append(f"marked rhombus {s} at {(x, yy)} is not a scab")
        else:
            out.append(f"unknown flaw {self.flaw!r}")
        for s in self.boundary():
            for l in s:
                if l > 2:
                    out.append(f"composed outer boundary label {l}")
        return out

    # -- resolutions -------------------------------------------------------

    def resolutions(self) -> list[GashedPuzzle]:
        """Gash pair and marked scab have one resolution; a temporary
        piece has three, ordered by its preserved side."""
        if self.flaw_type == "gashpair":
            border, positions = self.flaw[1]
            labels = dict(self.labels)
            gashes = set()
            for i, outer in positions:
                edge, d = _border_edge(border, i, self.n)
                gashes.add(PlacedGash(edge, d, labels.pop(edge), outer))
            return [GashedPuzzle(self.n, labels, self.rhombi, frozenset(gashes))]
        if self.flaw_type == "temporary":
            kind, x, yy = self.flaw[1]
            cell = (kind, x, yy)
            edges = cell_sides(cell)
            t = tuple(self.labels[e] for e in edges)
            table = temporary_table() if kind == "U" else down_temporary_table()
            outs = _OUT_UP if kind == "U" else _OUT_DOWN
            res = []
            for k in range(3):
                r = table[t][k]
                labels = dict(self.labels)
                gashes = set()
                for s in range(3):
                    if s == k:
                        continue
                    del labels[edges[s]]
                    gashes.add(PlacedGash(edges[s], outs[s], t[s], r[s]))
                res.append(
                    GashedPuzzle(self.n, labels, self.rhombi, frozenset(gashes))
                )
            return res
        if self.flaw_type == "scab":
            x, yy = self.flaw[1]
            s = _scab_at(self.labels, x, yy)
            side, (p, q) = scab_table()[s]
            nw_e, ne_e = ("A", x, yy), ("B", x, yy)
            sw_e, se_e = ("B", x, yy + 1), ("A", x + 1, yy + 1)
            labels = dict(self.labels)
            del labels[("H", x, yy)]  # becomes the rhombus interior
            if side == "L":  # agrees on NW/SW; gashes on NE and SE
                gashes = {
                    PlacedGash(ne_e, 0, labels.pop(ne_e), p),
                    PlacedGash(se_e, 5, labels.pop(se_e), q),
                }
            else:  # agrees on NE/SE; gashes on NW and SW
                gashes = {
                    PlacedGash(nw_e, 2, labels.pop(nw_e), q),
                    PlacedGash(sw_e, 3, labels.pop(sw_e), p),
                }
            rhombi = self.rhombi | {(x, yy, 0)}
            return [GashedPuzzle(self.n, labels, frozenset(rhombi), frozenset(gashes))]
        raise ValueError(f"unknown flaw {self.flaw!r}")


def _border_edge(border: str, i: int, n: int) -> tuple[Edge, int]:
    """The border edge at 1-based position ``i`` and the direction of a
    gash pointing into the puzzle."""
    if border == "u":
        return ("A", 0, n - i), 5
    if border == "v":
        return ("B", i - 1, i - 1), 3
    return ("H", i - 1, n - 1), 1


def _border_position(edge: Edge, d: int, n: int) -> Optional[tuple[str, int]]:
    kind, x, yy = edge
    if kind == "A" and x == 0 and d == 5:
        return ("u", n - yy)
    if kind == "B" and x == yy and d == 3:
        return ("v", yy + 1)
    if kind == "H" and yy == n - 1 and d == 1:
        return ("w", x + 1)
    return None


def recognize_flaw(G: GashedPuzzle) -> FlawedPuzzle:
    """The unique flawed puzzle having ``G`` as a resolution.  Tries, in
    order: gash pair on a border segment, temporary-piece resolution,
    scab resolution."""
    g1, g2 = sorted(G.gashes)
    n = G.n
    b1 = _border_position(g1.edge, g1.d, n)
    b2 = _border_position(g2.edge, g2.d, n)
    if b1 is not None and b2 is not None and b1[0] == b2[0]:
        labels = dict(G.labels)
        labels[g1.edge] = g1.orig
        labels[g2.edge] = g2.orig
        positions = tuple(
            sorted(((b1[1], g1.new), (b2[1], g2.new)))
        )
        P = FlawedPuzzle(n, labels, G.rhombi, ("gashpair", (b1[0], positions)))
        P.cover_edge()  # raises if the strings do not form a cover
        return P
    c1 = cell_behind(g1.edge, g1.d, n)
    c2 = cell_behind(g2.edge, g2.d, n)
    if c1 is not None and c1 == c2 and G.rhombus_at(c1) is None:
        kind = c1[0]
        edges = cell_sides(c1)
        s1, s2 = edges.index(g1.edge), edges.index(g2.edge)
        k = ({0, 1, 2} - {s1, s2}).pop()
        t = tuple(
            g1.orig if i == s1 else g2.orig if i == s2 else G.labels[edges[i]]
            for i in range(3)
        )
        r = tuple(
            g1.new if i == s1 else g2.new if i == s2 else G.labels[edges[i]]
            for i in range(3)
        )
        table = temporary_table() if kind == "U" else down_temporary_table()
        if t in table and table[t][k] == r:
            labels = dict(G.labels)
            labels[g1.edge] = g1.orig
            labels[g2.edge] = g2.orig
            return FlawedPuzzle(n, labels, G.rhombi, ("temporary", c1))
    r1 = G.rhombus_at(c1) if c1 is not None else None
    r2 = G.rhombus_at(c2) if c2 is not None else None
    if r1 is not None and r1 == r2:
        x, yy, o = r1
        assert o == 0, "scab resolutions exist only for vertical rhombi"
        nw_e, ne_e = ("A", x, yy), ("B", x, yy)
        sw_e, se_e = ("B", x, yy + 1), ("A", x + 1, yy + 1)
        lab = {}
        for e in (nw_e, ne_e, sw_e, se_e):
            if e == g1.edge:
                lab[e] = g1.orig
            elif e == g2.edge:
                lab[e] = g2.orig
            else:
                lab[e] = G.labels[e]
        s = (lab[nw_e], lab[ne_e], lab[se_e], lab[sw_e])
        if s in scab_table():
            z = complete_triangle("up", left=s[0], right=s[1])
            assert z is not None
            labels = dict(G.labels)
            labels.update(lab)
            labels[("H", x, yy)] = z[2]
            rhombi = frozenset(G.rhombi - {r1})
            return FlawedPuzzle(n, labels, rhombi, ("scab", (x, yy)))
    raise FlawRecognitionError(f"stuck gashes {sorted(G.gashes)} match no flaw")


# ---------------------------------------------------------------------------
# Mutation


def mutate(P: FlawedPuzzle, choice: int = 0) -> FlawedPuzzle:
    """The flawed puzzle whose resolution is ``phi`` of the chosen
    resolution of ``P``."""
    return recognize_flaw(phi(P.resolutions()[choice]))


def mutations(P: FlawedPuzzle) -> list[FlawedPuzzle]:
    return [mutate(P, i) for i in range(len(P.resolutions()))]


def mutation_component(
    P: FlawedPuzzle,
) -> dict[FlawedPuzzle, list[FlawedPuzzle]]:
    """Adjacency mapping of the connected mutation-graph component of
    ``P`` (each node maps to its mutations, one per resolution)."""
    graph: dict[FlawedPuzzle, list[FlawedPuzzle]] = {}
    queue = [P]
    while queue:
        Q = queue.pop()
        if Q in graph:
            continue
        graph[Q] = mutations(Q)
        queue.extend(R for R in graph[Q] if R not in graph)
    return graph


def component_to_json(graph: dict) -> str:
    nodes = sorted(graph, key=lambda P: P._key)
    index = {P: i for i, P in enumerate(nodes)}
    return json.dumps(
        {
            "nodes": [json.loads(flawed_to_json(P)) for P in nodes],
            "edges": [
                {"from": index[P], "choice": c, "to": index[Q]}
                for P in nodes
                for c, Q in enumerate(graph[P])
            ],
        }
    )


def component_to_dot(graph: dict) -> str:
    nodes = sorted(graph, key=lambda P: P._key)
    index = {P: i for i, P in enumerate(nodes)}
    lines = ["graph mutation_component {"]
    for P in nodes:
        lines.append(f'  n{index[P]} [label="{P.flaw_type}"];')
    seen = set()
    for P in nodes:
        for Q in graph[P]:
            key = tuple(sorted((index[P], index[Q])))
            if key not in seen:
                seen.add(key)
                lines.append(f"  n{key[0]} -- n{key[1]};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Right gashes and the sliding bijection


def _edge_midpoint(e: Edge) -> tuple[float, float]:
    kind, x, yy = e
    if kind == "A":
        vs = ((x, yy), (x, yy + 1))
    elif kind == "B":
        vs = ((x, yy), (x + 1, yy + 1))
    else:
        vs = ((x, yy + 1), (x + 1, yy + 1))
    pts = [(vx - vy / 2.0, -vy * math.sqrt(3) / 2.0) for vx, vy in vs]
    return ((pts[0][0] + pts[1][0]) / 2, (pts[0][1] + pts[1][1]) / 2)


def right_gash(G: GashedPuzzle) -> PlacedGash:
    """The rightmost of the two gashes, as seen by an observer standing
    between them and facing the direction of the gashes."""
    g1, g2 = sorted(G.gashes)
    a1 = math.radians(30 * (2 * g1.d + 1))
    a2 = math.radians(30 * (2 * g2.d + 1))
    f = (math.cos(a1) + math.cos(a2), math.sin(a1) + math.sin(a2))
    p1, p2 = _edge_midpoint(g1.edge), _edge_midpoint(g2.edge)
    rel = (p1[0] - p2[0], p1[1] - p2[1])
    cross = f[0] * rel[1] - f[1] * rel[0]
    assert abs(cross) > 1e-9, "gash positions are collinear with the direction"
    return g1 if cross < 0 else g2


@lru_cache(maxsize=None)
def forward_gashes() -> frozenset[AbstractGash]:
    """The union of the six gash classes whose members' resolutions
    slide labels to the right: original label 1, 2, or 4 changing to 0,
    pointing north or northwest."""
    out = set()
    for d in (1, 2):
        for orig in (1, 2, 4):
            out |= gash_class((d, orig, 0))
    return frozenset(out)


@lru_cache(maxsize=None)
def backward_gashes() -> frozenset[AbstractGash]:
    return frozenset(rotate_gash(g, 3) for g in forward_gashes())


def _arrow_resolutions(P: FlawedPuzzle, pool: frozenset) -> list[GashedPuzzle]:
    return [R for R in P.resolutions() if right_gash(R).abstract in pool]


def in_forward_set(P: FlawedPuzzle) -> bool:
    return bool(_arrow_resolutions(P, forward_gashes()))


def in_backward_set(P: FlawedPuzzle) -> bool:
    return bool(_arrow_resolutions(P, backward_gashes()))


def psi(P: FlawedPuzzle) -> FlawedPuzzle:
    """One sliding step: mutate along the unique resolution whose right
    gash is a forward gash."""
    Rs = _arrow_resolutions(P, forward_gashes())
    if not Rs:
        raise ValueError("puzzle has no forward resolution")
    assert len(Rs) == 1, "forward resolution is not unique"
    return recognize_flaw(phi(Rs[0]))


def psi_infinity(P: FlawedPuzzle) -> FlawedPuzzle:
    """Iterate ``psi`` until the result has no forward resolution."""
    Q = psi(P)
    while in_forward_set(Q):
        Q = psi(Q)
    return Q


# ---------------------------------------------------------------------------
# Enumeration of flawed puzzles


def enumerate_flawed(
    u: String012, v: String012, w: String012
) -> Iterator[FlawedPuzzle]:
    """All flawed puzzles whose outer boundary is ``(u, v, w)``:
    gash pairs on each border, marked scabs, and temporary pieces."""
    n = len(u)
    for border, outer in (("u", u), ("v", v)):
        for ce in covers(outer):
            bounds = (ce.after, v, w) if border == "u" else (u, ce.after, w)
            positions = tuple(
                sorted((i + 1, outer[i]) for i in (ce.i, ce.j))
            )
            for P in enumerate_puzzles(*bounds):
                yield FlawedPuzzle(
                    n, dict(P.labels), P.rhombi, ("gashpair", (border, positions))
                )
    for ce in cocovers(w):
        positions = tuple(sorted((i + 1, w[i]) for i in (ce.i, ce.j)))
        for P in enumerate_puzzles(u, v, ce.before):
            yield FlawedPuzzle(
                n, dict(P.labels), P.rhombi, ("gashpair", ("w", positions))
            )
    for P in enumerate_puzzles(u, v, w):
        for x, yy in scab_positions(P):
            yield FlawedPuzzle(n, dict(P.labels), P.rhombi, ("scab", (x, yy)))
    sp_up = set(temporary_table())
    sp_down = set(down_temporary_table())
    for P, cell in enumerate_one_special(u, v, w, sp_up, sp_down):
        yield FlawedPuzzle(n, dict(P.labels), P.rhombi, ("temporary", cell))


# ---------------------------------------------------------------------------
# Dualization and serialization


def dual_flawed(P: FlawedPuzzle) -> FlawedPuzzle:
    """Reflect the flawed puzzle and dualize all labels."""
    from .labels import dual_label

    D = P.base_puzzle().dual()
    n = P.n
    kind, data = P.flaw
    if kind == "gashpair":
        border, positions = data
        new_border = {"u": "v", "v": "u", "w": "w"}[border]
        new_positions = tuple(
            sorted((n + 1 - i, dual_label(l)) for i, l in positions)
        )
        flaw = ("gashpair", (new_border, new_positions))
    elif kind == "temporary":
        ck, x, yy = data
        flaw = (
            "temporary",
            (ck, yy - x, yy) if ck == "U" else (ck, yy - 1 - x, yy),
        )
    else:
        x, yy = data
        flaw = ("scab", (yy - x, yy))
    return FlawedPuzzle(n, dict(D.labels), D.rhombi, flaw)


def flawed_to_json(P: FlawedPuzzle) -> str:
    base = json.loads(puzzle_to_json(P.base_puzzle()))
    kind, data = P.flaw
    if kind == "gashpair":
        border, positions = data
        flaw = {"type": kind, "border": border, "outer": [list(p) for p in positions]}
    elif kind == "temporary":
        flaw = {"type": kind, "cell": list(data)}
    else:
        flaw = {"type": kind, "anchor": list(data)}
    base["flaw"] = flaw
    return json.dumps(base)


def flawed_from_json(text: str) -> FlawedPuzzle:
    data = json.loads(text)
    flaw = data.pop("flaw")
    base = puzzle_from_json(json.dumps(data))
    kind = flaw["type"]
    if kind == "gashpair":
        payload = (
            flaw["border"],
            tuple(sorted((i, l) for i, l in flaw["outer"])),
        )
    elif kind == "temporary":
        payload = tuple(flaw["cell"])
    else:
        payload = tuple(flaw["anchor"])
    return FlawedPuzzle(base.n, dict(base.labels), base.rhombi, (kind, payload))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
