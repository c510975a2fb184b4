"""Command-line interface.

Subcommands:

- ``product``: expand a product of two Schubert classes into structure
  constants, one ``w: polynomial`` line per term.
- ``puzzles``: enumerate the puzzles for one boundary triple, printing
  the count and weights, optionally rendering each puzzle.
- ``mutate``: load a puzzle from JSON, inject a flaw, and either apply
  mutation steps or dump the whole mutation-graph component.
- ``quantum``: a quantum Littlewood-Richardson product on a
  Grassmannian, printed as ``q^d [nu]: polynomial`` lines.
- ``verify``: run an invariant sweep (pieces, gashes, mutation, aura,
  or oracle) up to a size bound and print a JSON summary.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 semantic mismatch (e.g. a flaw spec that does not fit the puzzle).
All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Sequence

from .algebra import format_poly
from .board import puzzle_from_json, render_svg, render_text
from .strings import (
    String012,
    all_strings,
    content,
    fmt,
    oracle_constant,
    parse,
)

__all__ = ["main"]


class InputError(Exception):
    """Malformed command-line input (exit code 2)."""


class SemanticError(Exception):
    """Well-formed input that does not fit the data (exit code 3)."""


def _parse_string(text: str) -> String012:
    try:
        return parse(text)
    except (ValueError, TypeError) as e:
        raise InputError(str(e))


def _contents_up_to(max_n: int) -> Iterator[tuple[int, int, int]]:
    for n in range(2, max_n + 1):
        for b in range(1, n):
            for a in range(1, b + 1):
                yield (a, b, n)


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_product(args) -> int:
    from .search import product_expansion

    u, v = _parse_string(args.u), _parse_string(args.v)
    if content(u) != content(v):
        raise InputError("u and v have different contents")
    if args.a is not None and (args.a, args.b, args.n) != content(u):
        raise InputError(
            f"strings have content {content(u)}, not ({args.a}, {args.b}, {args.n})"
        )
    exp = product_expansion(u, v)
    items = sorted((fmt(w), format_poly(c)) for w, c in exp.items())
    if args.format == "json":
        print(json.dumps(dict(items)))
    else:
        for w, c in items:
            print(f"{w}: {c}")
    return 0


def _cmd_puzzles(args) -> int:
    from .search import enumerate_puzzles

    u, v, w = (_parse_string(s) for s in (args.u, args.v, args.w))
    if not (content(u) == content(v) == content(w)):
        raise InputError("u, v, w have different contents")
    puzzles = list(enumerate_puzzles(u, v, w))
    print(f"count: {len(puzzles)}")
    for i, P in enumerate(puzzles):
        print(f"puzzle {i}: weight {format_poly(P.weight())}")
        if args.render == "text" and args.out is None:
            print(render_text(P))
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        for i, P in enumerate(puzzles):
            if args.render == "svg":
                path = os.path.join(args.out, f"puzzle_{i:03d}.svg")
                data = render_svg(P)
            else:
                path = os.path.join(args.out, f"puzzle_{i:03d}.txt")
                data = render_text(P) + "\n"
            with open(path, "w", encoding="utf-8") as f:
                f.write(data)
        print(f"wrote {len(puzzles)} file(s) to {args.out}")
    return 0


def _parse_flaw(spec: str):
    kind, _, rest = spec.partition(":")
    parts = rest.split(",") if rest else []
    try:
        if kind == "scab" and len(parts) == 2:
            return ("scab", (int(parts[0]), int(parts[1])))
        if kind == "temporary" and len(parts) == 3 and parts[0] in ("U", "D"):
            return ("temporary", (parts[0], int(parts[1]), int(parts[2])))
        if kind == "gashpair" and len(parts) == 5 and parts[0] in ("u", "v", "w"):
            i, li, j, lj = (int(p) for p in parts[1:])
            positions = tuple(sorted(((i, li), (j, lj))))
            return ("gashpair", (parts[0], positions))
    except ValueError as e:
        raise InputError(f"bad flaw spec {spec!r}: {e}")
    raise InputError(
        f"bad flaw spec {spec!r}; use scab:X,Y or temporary:U|D,X,Y "
        "or gashpair:u|v|w,I,OUTER_I,J,OUTER_J"
    )


def _cmd_mutate(args) -> int:
    from .mutation import (
        FlawedPuzzle,
        component_to_dot,
        component_to_json,
        flawed_to_json,
        mutate,
        mutation_component,
    )

    try:
        with open(args.puzzle, encoding="utf-8") as f:
            base = puzzle_from_json(f.read())
    except OSError as e:
        raise InputError(str(e))
    except (ValueError, KeyError) as e:
        raise InputError(f"bad puzzle JSON: {e}")
    P = FlawedPuzzle(base.n, dict(base.labels), base.rhombi, _parse_flaw(args.flaw))
    problems = P.validate()
    if problems:
        raise SemanticError("; ".join(problems))
    if args.component:
        graph = mutation_component(P)
        print(component_to_dot(graph) if args.format == "dot" else component_to_json(graph))
        return 0
    choices = [int(c) for c in args.choices.split(",")] if args.choices else []
    for k in range(args.steps):
        choice = choices[k] if k < len(choices) else 0
        P = mutate(P, choice)
        print(flawed_to_json(P))
    return 0


def _parse_partition(text: str, m: int, n: int) -> tuple[int, ...]:
    if text in ("", "0"):
        return ()
    try:
        lam = tuple(int(p) for p in text.split(","))
    except ValueError as e:
        raise InputError(f"bad partition {text!r}: {e}")
    if any(p < 0 for p in lam) or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ):
        raise InputError(f"{text!r} is not a partition")
    lam = tuple(p for p in lam if p)
    if len(lam) > m or any(p > n - m for p in lam):
        raise InputError(f"partition {text!r} does not fit in a {m} x {n - m} box")
    return lam


def _cmd_quantum(args) -> int:
    from .strings import quantum_product

    m, n = args.m, args.n
    if not 0 < m < n:
        raise InputError("need 0 < m < n")
    lam = _parse_partition(args.lam, m, n)
    mu = _parse_partition(args.mu, m, n)
    terms = quantum_product(lam, mu, m, n)
    for (d, nu), c in sorted(terms.items()):
        nu_text = ",".join(str(p) for p in nu) or "0"
        print(f"q^{d} [{nu_text}]: {format_poly(c)}")
    return 0


# ---------------------------------------------------------------------------
# Verification suites


def _suite_pieces(max_n: int) -> list[dict]:
    from .labels import tables, validate_tables

    problems = validate_tables(tables())
    return [
        {
            "check": "piece tables",
            "instance": "triangles and rhombi",
            "pass": not problems,
            "lhs": "validation problems",
            "rhs": "; ".join(problems) or "none",
        }
    ]


def _suite_gashes(max_n: int) -> list[dict]:
    from .aura import check_gash_classes
    from .mutation import all_directed_gashes, gash_class

    sizes: dict[int, int] = {}
    seen = set()
    for g in all_directed_gashes():
        cls = gash_class(g)
        if cls not in seen:
            seen.add(cls)
            sizes[len(cls)] = sizes.get(len(cls), 0) + 1
    expected = {6: 24, 5: 12, 4: 12, 1: 84}
    return [
        {
            "check": "gash class partition",
            "instance": "all 336 directed gashes",
            "pass": sizes == expected,
            "lhs": json.dumps(sizes, sort_keys=True),
            "rhs": json.dumps(expected, sort_keys=True),
        },
        check_gash_classes(),
    ]


def _suite_oracle(max_n: int) -> list[dict]:
    from .search import structure_constant

    reports = []
    for a, b, n in _contents_up_to(max_n):
        bad = []
        strings = all_strings(a, b, n)
        for u in strings:
            for v in strings:
                for w in strings:
                    if structure_constant(u, v, w) != oracle_constant(u, v, w):
                        bad.append((fmt(u), fmt(v), fmt(w)))
        reports.append(
            {
                "check": "oracle equivalence",
                "instance": f"Fl({a},{b};{n}), {len(strings) ** 3} triples",
                "pass": not bad,
                "lhs": "puzzle-rule constants",
                "rhs": f"oracle; mismatches: {bad}",
            }
        )
    return reports


def _suite_mutation(max_n: int) -> list[dict]:
    from .mutation import enumerate_flawed, mutate, mutations, phi, recognize_flaw

    reports = []
    for a, b, n in _contents_up_to(max_n):
        bad = []
        count = 0
        strings = all_strings(a, b, n)
        for u in strings:
            for v in strings:
                for w in strings:
                    for P in enumerate_flawed(u, v, w):
                        count += 1
                        for i, R in enumerate(P.resolutions()):
                            G = phi(R)
                            Q = recognize_flaw(G)
                            if Q.boundary() != P.boundary() or Q.validate():
                                bad.append((fmt(u), fmt(v), fmt(w), "flaw"))
                                continue
                            back = phi(G)
                            if recognize_flaw(back) != P:
                                bad.append((fmt(u), fmt(v), fmt(w), "involution"))
        reports.append(
            {
                "check": "mutation involution",
                "instance": f"Fl({a},{b};{n}), {count} flawed puzzles",
                "pass": not bad,
                "lhs": "phi(phi(R)) and recognized flaws",
                "rhs": f"originals; failures: {bad[:5]}",
            }
        )
    return reports


def _suite_aura(max_n: int) -> list[dict]:
    from .aura import (
        check_boundary_aura,
        check_gash_classes,
        check_mutation_closed_sum,
        check_recursion,
        check_scab_sum,
        check_two_sums,
    )
    from .mutation import enumerate_flawed, mutation_component
    from .search import enumerate_puzzles

    reports = [check_gash_classes()]
    for a, b, n in _contents_up_to(max_n):
        bad = []
        strings = all_strings(a, b, n)
        seen = set()
        for u in strings:
            for v in strings:
                for w in strings:
                    for P in enumerate_puzzles(u, v, w):
                        for r in (check_boundary_aura(P), check_scab_sum(P)):
                            if not r["pass"]:
                                bad.append(r)
                    for r in (check_two_sums(u, v, w), check_recursion(u, v, w)):
                        if not r["pass"]:
                            bad.append(r)
                    for P in enumerate_flawed(u, v, w):
                        if P in seen:
                            continue
                        comp = mutation_component(P)
                        seen.update(comp)
                        r = check_mutation_closed_sum(comp)
                        if not r["pass"]:
                            bad.append(r)
        reports.append(
            {
                "check": "aura identities",
                "instance": f"Fl({a},{b};{n})",
                "pass": not bad,
                "lhs": "scab/boundary/mutation/recursion sums",
                "rhs": f"identities; failures: {bad[:3]}",
            }
        )
    return reports


_SUITES = {
    "pieces": _suite_pieces,
    "gashes": _suite_gashes,
    "mutation": _suite_mutation,
    "aura": _suite_aura,
    "oracle": _suite_oracle,
}


def _cmd_verify(args) -> int:
    reports = _SUITES[args.suite](args.max_n)
    ok = all(r["pass"] for r in reports)
    print(json.dumps({"suite": args.suite, "pass": ok, "checks": reports}, indent=2))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twostep",
        description="Equivariant Schubert structure constants of two-step "
        "flag varieties via puzzles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="expand a product of two Schubert classes")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("puzzles", help="enumerate puzzles for a boundary triple")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--render", choices=("text", "svg"), default="text")
    p.add_argument("--out", help="directory to write rendered puzzles to")
    p.set_defaults(func=_cmd_puzzles)

    p = sub.add_parser("mutate", help="inject a flaw and mutate")
    p.add_argument("--puzzle", required=True, help="puzzle JSON file")
    p.add_argument(
        "--flaw",
        required=True,
        help="scab:X,Y | temporary:U|D,X,Y | gashpair:u|v|w,I,OUTER_I,J,OUTER_J",
    )
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--choices", help="comma-separated resolution choices per step")
    p.add_argument("--component", action="store_true", help="dump the whole component")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("quantum", help="quantum product on a Grassmannian")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help='e.g. "2,1" ("" = empty)')
    p.add_argument("--mu", required=True)
    p.set_defaults(func=_cmd_quantum)

    p = sub.add_parser("verify", help="run an invariant sweep")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except SemanticError as e:
        print(f"semantic error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
