"""Triangular-lattice geometry and puzzles.

A size-``n`` puzzle fills the upward equilateral triangle with rows
``y = 0`` (apex) through ``n-1`` (bottom).  Row ``y`` holds up-cells
``U(x,y)`` for ``0 <= x <= y`` and down-cells ``D(x,y)`` for
``0 <= x <= y-1`` (between ``U(x,y)`` and ``U(x+1,y)``).

Edges are identified by the up-cell they bound::

    A(x,y) = left side of U(x,y)      (SW-NE direction)
    B(x,y) = right side of U(x,y)     (NW-SE direction)
    H(x,y) = bottom side of U(x,y)    (horizontal)

so ``D(x,y)`` has NW side ``B(x,y)``, NE side ``A(x+1,y)`` and top side
``H(x,y-1)``.  The boundary strings are read left border bottom-up
(``u_i = A(0, n-i)``), right border top-down (``v_i = B(i-1, i-1)``) and
bottom left-right (``w_i = H(i-1, n-1)``), all "left to right" along the
border.

A rhombus occurrence is ``(x, y, o)``: it covers up-cell ``U(x,y)`` plus
one adjacent down-cell -- ``o = 0`` vertical with ``D(x,y+1)`` below,
``o = 1`` with ``D(x-1,y)`` across the left side, ``o = 2`` with
``D(x,y)`` across the right side.  Equivariant puzzles use only vertical
rhombi; the other orientations exist so whole puzzles can be rotated.
A vertical rhombus at ``U(x,y)`` spans the bottom-edge positions
``(i, j) = (x+1, n-y+x)`` and carries weight ``y_j - y_i``.

>>> from .strings import parse
>>> P = demo_puzzle()
>>> P.boundary() == (parse("10"), parse("10"), parse("10"))
True
>>> P.validate()
[]
>>> str(P.weight())
'-1*y1 + 1*y2'
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .algebra import YPoly, y
from .labels import SIMPLE, dual_label, tables

__all__ = [
    "Edge",
    "Rhombus",
    "Puzzle",
    "up_cells",
    "down_cells",
    "up_cell_edges",
    "down_cell_edges",
    "rhombus_outer_edges",
    "rhombus_inner_edge",
    "all_edges",
    "left_projection",
    "right_projection",
    "edge_weight",
    "rhombus_position",
    "demo_puzzle",
    "puzzle_to_json",
    "puzzle_from_json",
    "render_text",
    "render_svg",
]

Edge = tuple[str, int, int]  # ("A"|"B"|"H", x, y)
Rhombus = tuple[int, int, int]  # (x, y, orientation 0|1|2)


def up_cells(n: int) -> Iterator[tuple[int, int]]:
    for yy in range(n):
        for x in range(yy + 1):
            yield (x, yy)


def down_cells(n: int) -> Iterator[tuple[int, int]]:
    for yy in range(1, n):
        for x in range(yy):
            yield (x, yy)


def up_cell_edges(x: int, yy: int) -> tuple[Edge, Edge, Edge]:
    """(left, right, bottom) edges of U(x,y)."""
    return (("A", x, yy), ("B", x, yy), ("H", x, yy))


def down_cell_edges(x: int, yy: int) -> tuple[Edge, Edge, Edge]:
    """(nw, ne, top) edges of D(x,y)."""
    return (("B", x, yy), ("A", x + 1, yy), ("H", x, yy - 1))


def rhombus_cells(r: Rhombus) -> tuple[tuple[int, int], tuple[int, int]]:
    """(up-cell, down-cell) covered by a rhombus occurrence."""
    x, yy, o = r
    if o == 0:
        return ((x, yy), (x, yy + 1))
    if o == 1:
        return ((x, yy), (x - 1, yy))
    if o == 2:
        return ((x, yy), (x, yy))
    raise ValueError(f"bad rhombus orientation in {r!r}")


def rhombus_inner_edge(r: Rhombus) -> Edge:
    """The unlabeled edge interior to a rhombus occurrence."""
    x, yy, o = r
    return (("H", x, yy), ("A", x, yy), ("B", x, yy))[o]


def rhombus_outer_edges(r: Rhombus) -> tuple[tuple[Edge, Edge], tuple[Edge, Edge]]:
    """The two opposite-side pairs ``(p_pair, q_pair)`` of a rhombus.

    For a vertical rhombus the ``p`` sides are the NW-SE ones (the
    up-cell's right side and the down-cell's NW side) and the ``q``
    sides the SW-NE ones; rotating by 120 degrees advances the roles
    (o=1: p on horizontals, q on NW-SE; o=2: p on SW-NE, q on
    horizontals).
    """
    x, yy, o = r
    if o == 0:
        return ((("B", x, yy), ("B", x, yy + 1)), (("A", x, yy), ("A", x + 1, yy + 1)))
    if o == 1:
        return ((("H", x, yy), ("H", x - 1, yy - 1)), (("B", x, yy), ("B", x - 1, yy)))
    if o == 2:
        return ((("A", x, yy), ("A", x + 1, yy)), (("H", x, yy), ("H", x, yy - 1)))
    raise ValueError(f"bad rhombus orientation in {r!r}")


def all_edges(n: int) -> list[Edge]:
    out: list[Edge] = []
    for x, yy in up_cells(n):
        out.extend(up_cell_edges(x, yy))
    return out


def left_projection(e: Edge, n: int) -> int:
    """Bottom-edge index hit by the line through ``e`` parallel to the
    left border (NW-SE edges and bottom horizontals only)."""
    kind, x, yy = e
    if kind == "B":
        return x + 1
    if kind == "H" and yy == n - 1:
        return x + 1
    raise ValueError(f"no left projection for edge {e!r}")


def right_projection(e: Edge, n: int) -> int:
    """Bottom-edge index hit by the line through ``e`` parallel to the
    right border (SW-NE edges and bottom horizontals only)."""
    kind, x, yy = e
    if kind == "A":
        return n - yy + x
    if kind == "H" and yy == n - 1:
        return x + 1
    raise ValueError(f"no right projection for edge {e!r}")


def edge_weight(e: Edge, n: int) -> YPoly:
    """The weight ``y_i`` of an edge (0 for interior horizontals)."""
    kind, x, yy = e
    if kind == "B":
        return y(x + 1)
    if kind == "A":
        return y(n - yy + x)
    if yy == n - 1:
        return y(x + 1)
    return YPoly()


def rhombus_position(x: int, yy: int, n: int) -> tuple[int, int]:
    """The bottom-edge pair (i, j), i < j, spanned by a vertical rhombus.

    >>> sorted(rhombus_position(x, yy, 4) for yy in range(3) for x in range(yy + 1))
    [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    """
    return (x + 1, n - yy + x)


@dataclass(frozen=True)
class Puzzle:
    """A puzzle on the size-``n`` triangle.

    ``labels`` maps edges to labels (edges interior to a rhombus are
    omitted); ``rhombi`` is the set of rhombus occurrences.
    """

    n: int
    labels: dict[Edge, int] = field(compare=False)
    rhombi: frozenset[Rhombus] = frozenset()
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = dict(self.labels)
        for r in self.rhombi:
            labels.pop(rhombus_inner_edge(r), None)
        object.__setattr__(self, "labels", labels)
        key = (self.n, tuple(sorted(labels.items())), tuple(sorted(self.rhombi)))
        object.__setattr__(self, "_key", key)

    def __eq__(self, other) -> bool:
        return isinstance(other, Puzzle) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    # -- structure ---------------------------------------------------------

    def covered_cells(self) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
        """(up-cells, down-cells) covered by rhombi."""
        ups, downs = set(), set()
        for r in self.rhombi:
            u, d = rhombus_cells(r)
            ups.add(u)
            downs.add(d)
        return ups, downs

    def internal_edges(self) -> set[Edge]:
        return {rhombus_inner_edge(r) for r in self.rhombi}

    def boundary(self):
        n = self.n
        u = tuple(self.labels[("A", 0, n - i)] for i in range(1, n + 1))
        v = tuple(self.labels[("B", i - 1, i - 1)] for i in range(1, n + 1))
        w = tuple(self.labels[("H", i - 1, n - 1)] for i in range(1, n + 1))
        return (u, v, w)

    def validate(self) -> list[str]:
        """Empty list iff the labeling is a valid puzzle."""
        t = tables()
        out: list[str] = []
        n = self.n
        ups, downs = self.covered_cells()
        if len(ups) + len(downs) != 2 * len(self.rhombi):
            out.append("overlapping rhombi")
        internal = self.internal_edges()
        for e in all_edges(n):
            if e not in self.labels and e not in internal:
                out.append(f"unlabeled edge {e}")
        if out:
            return out
        for r in sorted(self.rhombi):
            x, yy, o = r
            (up, down) = rhombus_cells(r)
            if not (0 <= up[0] <= up[1] < n and 0 <= down[0] < down[1] < n):
                out.append(f"rhombus {r} leaves the board")
                continue
            p_pair, q_pair = rhombus_outer_edges(r)
            p0, p1 = (self.labels[e] for e in p_pair)
            q0, q1 = (self.labels[e] for e in q_pair)
            if p0 != p1 or q0 != q1:
                out.append(f"rhombus {r} has unequal opposite sides")
            elif (p0, q0) not in t.rhombi:
                out.append(f"invalid rhombus {(p0, q0)} at {r}")
        for x, yy in up_cells(n):
            if (x, yy) in ups:
                continue
            l, rr, h = (self.labels[e] for e in up_cell_edges(x, yy))
            if not t.valid_up(l, rr, h):
                out.append(f"invalid up-triangle {(l, rr, h)} at {(x, yy)}")
        for x, yy in down_cells(n):
            if (x, yy) in downs:
                continue
            nw, ne, top = (self.labels[e] for e in down_cell_edges(x, yy))
            if not t.valid_down(nw, ne, top):
                out.append(f"invalid down-triangle {(nw, ne, top)} at {(x, yy)}")
        for s in self.boundary():
            for l in s:
                if l not in SIMPLE:
                    out.append(f"composed label {l} on the boundary")
        return out

    # -- weights -----------------------------------------------------------

    def vertical_rhombi(self) -> list[tuple[int, int]]:
        if any(o for (_, _, o) in self.rhombi):
            raise ValueError("puzzle contains non-vertical rhombi")
        return sorted((x, yy) for (x, yy, _) in self.rhombi)

    def weight(self) -> YPoly:
        """Product of ``y_j - y_i`` over all rhombi (all must be vertical)."""
        out = YPoly.const(1)
        for x, yy in self.vertical_rhombi():
            i, j = rhombus_position(x, yy, self.n)
            out = out * (y(j) - y(i))
        return out

    # -- symmetries --------------------------------------------------------

    def rotate(self, k: int) -> "Puzzle":
        """Rotate by ``k`` sixth-turns; ``k`` must be even (a triangular
        region maps to itself only under 120-degree steps).

        One step of 2 maps the left border onto the right border; the
        boundary transforms as ``(u, v, w) -> (rev w, u, rev v)``.
        """
        if k % 2:
            raise ValueError("triangular puzzles rotate by even sixth-turns only")
        P = self
        for _ in range((k // 2) % 3):
            P = P._rotate120()
        return P

    def _rotate120(self) -> "Puzzle":
        n = self.n

        def cell(x: int, yy: int) -> tuple[int, int]:
            return (n - 1 - yy, n - 1 - yy + x)

        labels: dict[Edge, int] = {}
        for x, yy in up_cells(n):
            cx, cy = cell(x, yy)
            for src, dst in (("A", "B"), ("B", "H"), ("H", "A")):
                if (src, x, yy) in self.labels:
                    labels[(dst, cx, cy)] = self.labels[(src, x, yy)]
        rhombi = set()
        for x, yy, o in self.rhombi:
            cx, cy = cell(x, yy)
            rhombi.add((cx, cy, (o + 1) % 3))
        return Puzzle(n, labels, frozenset(rhombi))

    def dual(self) -> "Puzzle":
        """Reflect in a vertical line and substitute dual labels."""
        n = self.n
        labels: dict[Edge, int] = {}
        for x, yy in up_cells(n):
            if ("A", x, yy) in self.labels:
                labels[("B", yy - x, yy)] = dual_label(self.labels[("A", x, yy)])
            if ("B", x, yy) in self.labels:
                labels[("A", yy - x, yy)] = dual_label(self.labels[("B", x, yy)])
            if ("H", x, yy) in self.labels:
                labels[("H", yy - x, yy)] = dual_label(self.labels[("H", x, yy)])
        rhombi = set()
        for x, yy, o in self.rhombi:
            rhombi.add((yy - x, yy, (0, 2, 1)[o]))
        return Puzzle(n, labels, frozenset(rhombi))


def demo_puzzle() -> Puzzle:
    """The unique puzzle with boundary (10, 10, 10): one rhombus."""
    labels = {
        ("A", 0, 0): 0,
        ("B", 0, 0): 1,
        ("A", 0, 1): 1,
        ("B", 0, 1): 1,
        ("H", 0, 1): 1,
        ("A", 1, 1): 0,
        ("B", 1, 1): 0,
        ("H", 1, 1): 0,
    }
    return Puzzle(2, labels, frozenset({(0, 0, 0)}))


# ---------------------------------------------------------------------------
# Serialization


def puzzle_to_json(P: Puzzle) -> str:
    """Serialize to the piece-list JSON schema (deterministic order)."""
    n = P.n
    ups, downs = P.covered_cells()
    pieces = []
    for r in sorted(P.rhombi):
        p_pair, q_pair = rhombus_outer_edges(r)
        pieces.append(
            {
                "kind": "rhombus",
                "orientation": 2 * r[2],
                "anchor": [r[0], r[1]],
                "labels": [P.labels[p_pair[0]], P.labels[q_pair[0]]],
            }
        )
    for x, yy in up_cells(n):
        if (x, yy) in ups:
            continue
        l, rr, h = (P.labels[e] for e in up_cell_edges(x, yy))
        pieces.append(
            {"kind": "triangle", "orientation": 0, "anchor": [x, yy], "labels": [l, rr, h]}
        )
    for x, yy in down_cells(n):
        if (x, yy) in downs:
            continue
        nw, ne, top = (P.labels[e] for e in down_cell_edges(x, yy))
        pieces.append(
            {
                "kind": "triangle",
                "orientation": 3,
                "anchor": [x, yy],
                "labels": [nw, ne, top],
            }
        )
    region = [n, 0, n, 0, n, 0]
    return json.dumps({"region": region, "pieces": pieces})


def puzzle_from_json(text: str) -> Puzzle:
    """Parse the piece-list JSON schema back into a puzzle."""
    data = json.loads(text)
    region = data["region"]
    nonzero = [s for s in region if s]
    if len(region) != 6 or len(nonzero) != 3 or len(set(nonzero)) != 1:
        raise ValueError("only triangular regions are supported")
    n = nonzero[0]
    labels: dict[Edge, int] = {}
    rhombi: set[Rhombus] = set()
    for piece in data["pieces"]:
        x, yy = piece["anchor"]
        kind = piece["kind"]
        lab = piece["labels"]
        orient = piece.get("orientation", 0) % 6
        if kind == "rhombus":
            if orient % 2:
                raise ValueError("rhombus orientation must be even")
            r = (x, yy, orient // 2)
            p_pair, q_pair = rhombus_outer_edges(r)
            p, q = lab
            for e in p_pair:
                labels[e] = p
            for e in q_pair:
                labels[e] = q
            rhombi.add(r)
        elif kind == "triangle" and orient % 6 == 0:
            for e, l in zip(up_cell_edges(x, yy), lab):
                labels[e] = l
        elif kind == "triangle" and orient % 6 == 3:
            for e, l in zip(down_cell_edges(x, yy), lab):
                labels[e] = l
        else:
            raise ValueError(f"bad piece {piece!r}")
    return Puzzle(n, labels, frozenset(rhombi))


# ---------------------------------------------------------------------------
# Rendering


def render_text(P: Puzzle) -> str:
    """n text lines, bottom row first; up-cells as ``left.bottom.right``
    triples, rhombus-covered cells bracketed."""
    ups, _ = P.covered_cells()
    lines = []
    for yy in range(P.n - 1, -1, -1):
        cells = []
        for x in range(yy + 1):
            l = P.labels.get(("A", x, yy), "*")
            rr = P.labels.get(("B", x, yy), "*")
            h = P.labels.get(("H", x, yy), "*")
            if (x, yy) in ups:
                cells.append(f"[{l}.{h}.{rr}]")
            else:
                cells.append(f"{l}.{h}.{rr}")
        lines.append(" ".join(str(c) for c in cells))
    return "\n".join(lines)


def _vertex_xy(x: int, yy: int, scale: float = 40.0) -> tuple[float, float]:
    return (scale * (x - yy / 2.0), scale * yy * 0.8660254)


def render_svg(
    P: Puzzle,
    marked_scabs: Iterable[tuple[int, int]] = (),
    gashes: Iterable[tuple[Edge, int, int]] = (),
) -> str:
    """Render to SVG: triangles outlined, rhombi shaded, marked scabs in
    a distinct fill, gashes drawn with both labels."""
    n = P.n
    scale = 40.0
    ups, downs = P.covered_cells()
    marked = set(marked_scabs)
    parts: list[str] = []

    def pt(p):
        return f"{p[0] + scale * n / 2 + 10:.1f},{p[1] + 10:.1f}"

    def poly(points, fill):
        pts = " ".join(pt(p) for p in points)
        parts.append(
            f'<polygon points="{pts}" fill="{fill}" stroke="black" stroke-width="1"/>'
        )

    def text(px, py, s, color="black"):
        parts.append(
            f'<text x="{px + scale * n / 2 + 10:.1f}" y="{py + 10:.1f}" '
            f'font-size="9" fill="{color}" text-anchor="middle">{s}</text>'
        )

    drawn_rhombi = set()
    for r in sorted(P.rhombi):
        up, down = rhombus_cells(r)
        drawn_rhombi.update({("U", *up), ("D", *down)})
        ux, uy = up
        a = _vertex_xy(ux, uy, scale)
        bl = _vertex_xy(ux, uy + 1, scale)
        br = _vertex_xy(ux + 1, uy + 1, scale)
        dx, dy = down
        dtl = _vertex_xy(dx, dy, scale)
        dtr = _vertex_xy(dx + 1, dy, scale)
        dbot = _vertex_xy(dx + 1, dy + 1, scale)
        quad = {p for p in (a, bl, br, dtl, dtr, dbot)}
        # order the four distinct corners around the rhombus centroid
        import math

        cx = sum(p[0] for p in quad) / 4
        cy = sum(p[1] for p in quad) / 4
        ordered = sorted(quad, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
        fill = "#ffb0b0" if up in marked else "#c8d8ff"
        poly(ordered, fill)
        p_pair, q_pair = rhombus_outer_edges(r)
        text(cx, cy, f"{P.labels[p_pair[0]]}/{P.labels[q_pair[0]]}")
    for x, yy in up_cells(n):
        if (x, yy) in ups:
            continue
        a = _vertex_xy(x, yy, scale)
        bl = _vertex_xy(x, yy + 1, scale)
        br = _vertex_xy(x + 1, yy + 1, scale)
        fill = "#fff3b0" if (x, yy) in marked else "white"
        poly([a, bl, br], fill)
        if ("H", x, yy) in P.labels:
            text((bl[0] + br[0]) / 2, bl[1] - 3, str(P.labels[("H", x, yy)]))
        if ("A", x, yy) in P.labels:
            text((a[0] + bl[0]) / 2 - 6, (a[1] + bl[1]) / 2 + 3, str(P.labels[("A", x, yy)]))
        if ("B", x, yy) in P.labels:
            text((a[0] + br[0]) / 2 + 6, (a[1] + br[1]) / 2 + 3, str(P.labels[("B", x, yy)]))
    for x, yy in down_cells(n):
        if (x, yy) in downs:
            continue
        tl = _vertex_xy(x, yy, scale)
        tr = _vertex_xy(x + 1, yy, scale)
        bot = _vertex_xy(x + 1, yy + 1, scale)
        poly([tl, tr, bot], "white")
    for e, orig, new in gashes:
        kind, x, yy = e
        if kind == "H":
            p1 = _vertex_xy(x, yy + 1, scale)
            p2 = _vertex_xy(x + 1, yy + 1, scale)
        elif kind == "A":
            p1 = _vertex_xy(x, yy + 1, scale)
            p2 = _vertex_xy(x, yy, scale)
        else:
            p1 = _vertex_xy(x, yy, scale)
            p2 = _vertex_xy(x + 1, yy + 1, scale)
        mx, my = (p1[0] + p2[0]) / 2, (p1[1] + p2[1]) / 2
        text(mx, my, f"{orig}|{new}", color="red")
    size = scale * (n + 1) + 20
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" '
        f'height="{size:.0f}">' + "".join(parts) + "</svg>"
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
