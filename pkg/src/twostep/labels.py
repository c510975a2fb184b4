"""Edge labels and the canonical puzzle-piece tables.

Labels are the integers 0..7.  The simple labels 0, 1, 2 are single
letters; the composed labels expand to strings over {0,1,2}:
``3 = 10``, ``4 = 21``, ``5 = 20``, ``6 = 2(10)``, ``7 = (21)0``.

A triangular piece is stored in its right-side-up frame as a label triple
``(left, right, horizontal)``.  The eight canonical triangles are::

    (0,0,0)  (1,1,1)  (2,2,2)  (1,0,3)  (2,1,4)  (2,0,5)  (2,3,6)  (4,0,7)

and rotating a piece by 120 degrees maps ``(l, r, h)`` to ``(h, l, r)``.
A rhombus (equivariant) piece is stored in its vertical frame as a pair
``(p, q)`` where ``p`` labels the two NW-SE sides and ``q`` the two SW-NE
sides; opposite sides always agree.  The eight canonical rhombi are::

    (1,0)  (2,1)  (2,0)  (2,3)  (4,0)  (4,3)  (6,0)  (2,7)

Pieces may be rotated but never reflected.  :func:`validate_tables` gates
everything downstream: it re-checks the counts, the one-replacement
lemma behind gash propagation, label coverage, and uniqueness of
completion from two known sides.

>>> complete_triangle("up", left=1, right=0)
(1, 0, 3)
>>> complete_triangle("up", left=6, right=7) is None
True
>>> dual_label(3)
4
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import product
from typing import Iterable, Optional

__all__ = [
    "LABELS",
    "SIMPLE",
    "COMPOSED",
    "label_to_string",
    "dual_label",
    "PieceTables",
    "tables",
    "load_tables",
    "save_tables",
    "default_table_text",
    "validate_tables",
    "complete_triangle",
    "TrianglePiece",
    "RhombusPiece",
    "rotate_piece",
]

LABELS = tuple(range(8))
SIMPLE = (0, 1, 2)
COMPOSED = (3, 4, 5, 6, 7)

_LABEL_STRINGS = {
    0: "0",
    1: "1",
    2: "2",
    3: "10",
    4: "21",
    5: "20",
    6: "2(10)",
    7: "(21)0",
}

_DUAL = {0: 2, 1: 1, 2: 0, 3: 4, 4: 3, 5: 5, 6: 7, 7: 6}

# canonical tables: triangles as (left, right, horizontal) in the
# right-side-up frame; rhombi as (NW-SE label, SW-NE label) in the
# vertical frame
_BASE_TRIANGLES = (
    (0, 0, 0),
    (1, 1, 1),
    (2, 2, 2),
    (1, 0, 3),
    (2, 1, 4),
    (2, 0, 5),
    (2, 3, 6),
    (4, 0, 7),
)
_BASE_RHOMBI = ((1, 0), (2, 1), (2, 0), (2, 3), (4, 0), (4, 3), (6, 0), (2, 7))


def label_to_string(l: int) -> str:
    """The fixed 012-expansion of a label.

    >>> label_to_string(0)
    '0'
    >>> label_to_string(7)
    '(21)0'
    """
    return _LABEL_STRINGS[l]


def dual_label(l: int) -> int:
    """The dual-label substitution 0<->2, 1->1, 3<->4, 5->5, 6<->7.

    >>> dual_label(dual_label(6))
    6
    """
    return _DUAL[l]


def _rot(t: tuple[int, int, int]) -> tuple[int, int, int]:
    l, r, h = t
    return (h, l, r)


@dataclass(frozen=True)
class PieceTables:
    """The canonical triangle and rhombus tables.

    ``triangles`` holds the canonical (rotation-orbit representative)
    triples; ``up_triangles`` is the rotation closure, i.e. all valid
    ``(left, right, horizontal)`` triples for a right-side-up cell.
    """

    triangles: tuple[tuple[int, int, int], ...]
    rhombi: tuple[tuple[int, int], ...]

    @property
    def up_triangles(self) -> frozenset[tuple[int, int, int]]:
        closure = set()
        for t in self.triangles:
            closure.add(t)
            closure.add(_rot(t))
            closure.add(_rot(_rot(t)))
        return frozenset(closure)

    def valid_up(self, left: int, right: int, horizontal: int) -> bool:
        return (left, right, horizontal) in self.up_triangles

    def valid_down(self, nw: int, ne: int, top: int) -> bool:
        # a 180-degree rotation of an upside-down cell: its NE side lands
        # where an up cell's left side is, its NW side on the right side
        return (ne, nw, top) in self.up_triangles

    def dual(self) -> "PieceTables":
        tris = tuple(
            (dual_label(r), dual_label(l), dual_label(h)) for (l, r, h) in self.triangles
        )
        rhos = tuple((dual_label(q), dual_label(p)) for (p, q) in self.rhombi)
        return PieceTables(tris, rhos)


# ---------------------------------------------------------------------------
# Oriented piece values (plumbing for serialization and rotation tests)


@dataclass(frozen=True)
class TrianglePiece:
    """A triangle in its canonical frame plus a rotation in sixth-turns."""

    labels: tuple[int, int, int]  # (left, right, horizontal) at orientation 0
    orientation: int = 0  # even = point-up, odd = point-down

    def __post_init__(self):
        object.__setattr__(self, "orientation", self.orientation % 6)


@dataclass(frozen=True)
class RhombusPiece:
    """A rhombus in its vertical frame plus a rotation in sixth-turns."""

    labels: tuple[int, int]  # (NW-SE sides, SW-NE sides) at orientation 0
    orientation: int = 0

    def __post_init__(self):
        object.__setattr__(self, "orientation", self.orientation % 6)


def rotate_piece(p, k: int):
    """Advance a piece's orientation by ``k`` sixth-turns.

    >>> t = TrianglePiece((1, 0, 3))
    >>> rotate_piece(rotate_piece(t, 3), 3) == t
    True
    >>> rotate_piece(RhombusPiece((2, 0)), 1).orientation
    1
    """
    if isinstance(p, TrianglePiece):
        return TrianglePiece(p.labels, p.orientation + k)
    if isinstance(p, RhombusPiece):
        return RhombusPiece(p.labels, p.orientation + k)
    raise TypeError(f"not a piece: {p!r}")


# ---------------------------------------------------------------------------
# Fixture (de)serialization


def default_table_text() -> str:
    """The canonical tables in the plain-text fixture format."""
    lines = [
        "# puzzle piece tables",
        "# triangle <left> <right> <horizontal>   (right-side-up frame)",
        "# rhombus <nw-se> <sw-ne>                (vertical frame)",
    ]
    for t in _BASE_TRIANGLES:
        lines.append("triangle %d %d %d" % t)
    for r in _BASE_RHOMBI:
        lines.append("rhombus %d %d" % r)
    return "\n".join(lines) + "\n"


def save_tables(path: str, t: Optional[PieceTables] = None) -> None:
    if t is None:
        text = default_table_text()
    else:
        lines = ["triangle %d %d %d" % tri for tri in t.triangles]
        lines += ["rhombus %d %d" % r for r in t.rhombi]
        text = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def _parse_tables(text: str) -> PieceTables:
    tris: list[tuple[int, int, int]] = []
    rhos: list[tuple[int, int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "triangle" and len(parts) == 4:
            tris.append(tuple(int(x) for x in parts[1:]))  # type: ignore[arg-type]
        elif parts[0] == "rhombus" and len(parts) == 3:
            rhos.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"bad piece-table line: {line!r}")
    return PieceTables(tuple(tris), tuple(rhos))


def load_tables(path: Optional[str] = None) -> PieceTables:
    """Load piece tables from ``path``, ``$PUZZLE_TABLE_PATH``, or the
    packaged fixture."""
    path = path or os.environ.get("PUZZLE_TABLE_PATH")
    if path:
        with open(path, encoding="utf-8") as f:
            return _parse_tables(f.read())
    text = resources.files("twostep").joinpath("data/piece_tables.txt").read_text("utf-8")
    return _parse_tables(text)


@lru_cache(maxsize=4)
def _tables_cached(path: Optional[str]) -> PieceTables:
    t = load_tables(path)
    violations = validate_tables(t)
    if violations:
        raise ValueError("invalid piece tables: " + "; ".join(violations))
    return t


def tables() -> PieceTables:
    """The validated piece tables (respects ``$PUZZLE_TABLE_PATH``)."""
    return _tables_cached(os.environ.get("PUZZLE_TABLE_PATH"))


# ---------------------------------------------------------------------------
# Validation


def validate_tables(t: Optional[PieceTables] = None) -> list[str]:
    """Check the transcribed tables; returns a list of violations.

    Checks: (i) exactly 8 triangles and 8 rhombi up to rotation;
    (ii) the one-replacement lemma -- for labels with a != x, b != y,
    c != z, the triangles (x,b,c), (a,y,c), (a,b,z) are never all valid;
    (iii) every composed label appears on some triangle; (iv) completion
    from two known sides never has two solutions.

    >>> validate_tables()
    []
    >>> bad = PieceTables(_BASE_TRIANGLES[1:], _BASE_RHOMBI)
    >>> validate_tables(bad) != []
    True
    """
    if t is None:
        t = load_tables()
    out: list[str] = []
    up = t.up_triangles

    # (i) counts up to rotation
    orbits = set()
    for tri in up:
        orbits.add(min(tri, _rot(tri), _rot(_rot(tri))))
    if len(orbits) != 8:
        out.append(f"expected 8 triangle rotation-orbits, got {len(orbits)}")
    if len(up) != 18:
        out.append(f"expected 18 oriented up-triangles, got {len(up)}")
    if len(set(t.rhombi)) != 8:
        out.append(f"expected 8 distinct rhombi, got {len(set(t.rhombi))}")

    # (ii) one-replacement lemma over all label assignments
    for a, b, c in product(LABELS, repeat=3):
        for x in LABELS:
            if x == a:
                continue
            if (x, b, c) not in up:
                continue
            for yy in LABELS:
                if yy == b or (a, yy, c) not in up:
                    continue
                for z in LABELS:
                    if z != c and (a, b, z) in up:
                        out.append(
                            f"one-replacement lemma fails at {(a, b, c)} vs {(x, yy, z)}"
                        )

    # (iii) composed-label coverage
    seen = {l for tri in up for l in tri}
    for l in COMPOSED:
        if l not in seen:
            out.append(f"composed label {l} appears on no triangle")

    # (iv) two-side completion uniqueness
    for i, j in ((0, 1), (0, 2), (1, 2)):
        pairs: dict[tuple[int, int], int] = {}
        for tri in up:
            key = (tri[i], tri[j])
            pairs[key] = pairs.get(key, 0) + 1
        for key, cnt in pairs.items():
            if cnt > 1:
                out.append(f"two-side completion ambiguous on sides {(i, j)} = {key}")

    # closure sanity: duals of valid pieces are valid
    if t.dual().up_triangles != up:
        out.append("triangle table not closed under dualization")
    if set(t.dual().rhombi) != set(t.rhombi):
        out.append("rhombus table not closed under dualization")
    return out


def complete_triangle(orientation: str, **sides: int):
    """Complete a triangle from two known sides; ``None`` if impossible.

    ``orientation`` is ``"up"`` (sides ``left``, ``right``,
    ``horizontal``) or ``"down"`` (sides ``nw``, ``ne``, ``top``).
    Returns the full label triple in the frame's side order
    (up: left, right, horizontal; down: nw, ne, top).

    >>> complete_triangle("up", left=0, right=0)
    (0, 0, 0)
    >>> complete_triangle("down", nw=0, top=3)
    (0, 1, 3)
    """
    if orientation not in ("up", "down"):
        raise ValueError("orientation must be 'up' or 'down'")
    if len(sides) != 2:
        raise ValueError("exactly two sides must be given")
    t = tables()
    solutions = []
    if orientation == "up":
        for l, r, h in t.up_triangles:
            vals = {"left": l, "right": r, "horizontal": h}
            if all(vals[k] == v for k, v in sides.items()):
                solutions.append((l, r, h))
    else:
        for nw, ne, top in (
            (l2, r2, h2)
            for (r2, l2, h2) in t.up_triangles  # valid_down(nw,ne,top) iff up(ne,nw,top)
        ):
            vals = {"nw": nw, "ne": ne, "top": top}
            if all(vals[k] == v for k, v in sides.items()):
                solutions.append((nw, ne, top))
    if len(solutions) > 1:
        raise AssertionError(f"ambiguous completion: {solutions}")
    return solutions[0] if solutions else None


if __name__ == "__main__":
    import doctest

    doctest.testmod()
