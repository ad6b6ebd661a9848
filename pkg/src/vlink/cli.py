"""vlink command line: genus, equiv, minimize, classify.

Exit codes for equiv: 0 equivalent, 1 distinguished, 2 unknown.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codec import emit_gauss, from_diagram, parse_gauss, to_diagram
from .diagram import Diagram
from .invariants import Quandle, dihedral_quandle, load_quandle
from .search import (
    DEFAULT_QUANDLES,
    SearchBounds,
    classify_corpus,
    equivalent,
    minimize,
)
from .surface import build_surface


def _read_diagram(path: str) -> Diagram:
    return to_diagram(parse_gauss(Path(path).read_text()))


def _read_corpus(path: str) -> list[Diagram]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(to_diagram(parse_gauss(line)))
    return out


def _parse_quandles(arg: str) -> tuple[tuple[str, Quandle], ...]:
    """Comma list of named dihedral quandles (R3, R5, ...) or table files."""
    if not arg:
        return DEFAULT_QUANDLES
    out = []
    for name in arg.split(","):
        name = name.strip()
        if name.startswith("R") and name[1:].isdigit():
            out.append((name, dihedral_quandle(int(name[1:]))))
        else:
            out.append((name, load_quandle(Path(name).read_text())))
    return tuple(out)


def _bounds(args, *diagrams: Diagram) -> SearchBounds:
    max_crossings = args.max_crossings
    if max_crossings is None:
        max_crossings = max([d.n_vertices for d in diagrams], default=0) + 2
    return SearchBounds(max_crossings=max_crossings,
                        max_depth=args.max_depth,
                        max_states=args.max_states)


def _add_search_args(sub) -> None:
    sub.add_argument("--max-crossings", type=int, default=None,
                     help="crossing cap during search (default: input size + 2)")
    sub.add_argument("--max-depth", type=int, default=None,
                     help="move count cap (default: unbounded)")
    sub.add_argument("--max-states", type=int, default=20000,
                     help="visited state cap (default: 20000)")
    sub.add_argument("--quandles", default="",
                     help="comma list of quandles for invariant checks, e.g. R3,R5")


def cmd_genus(args) -> int:
    d = _read_diagram(args.diagram)
    s = build_surface(d)
    k = 0
    for k, g in enumerate(s.component_genus, start=1):
        vset = set(s.component_vertices[k - 1])
        faces = sum(1 for f in s.faces if d.vertex_of[f[0]] in vset)
        print(f"component {k}: genus {g}, faces {faces}")
    for _ in range(s.sphere_components):
        k += 1
        print(f"component {k}: genus 0, faces 2")
    print(f"total genus {sum(s.component_genus)}")
    return 0


def cmd_equiv(args) -> int:
    d1, d2 = _read_diagram(args.a), _read_diagram(args.b)
    outcome = equivalent(d1, d2, _bounds(args, d1, d2), _parse_quandles(args.quandles))
    print(f"verdict: {outcome.verdict}")
    if outcome.verdict == "equivalent":
        print(f"path-length: {len(outcome.path)}")
        for site, _ in outcome.path:
            print(f"move: {site.kind} where={site.where} variant={site.variant}")
    elif outcome.verdict == "distinguished":
        for name, v1, v2 in outcome.distinguishers:
            print(f"invariant: {name}")
            print(f"value[a]: {v1}")
            print(f"value[b]: {v2}")
    print(f"explored: {outcome.explored}")
    return {"equivalent": 0, "distinguished": 1, "unknown": 2}[outcome.verdict]


def cmd_minimize(args) -> int:
    d = _read_diagram(args.diagram)
    res = minimize(d, _bounds(args, d))
    code = emit_gauss(from_diagram(res.witness))
    print(f"witness: {code if code else '(empty)'}")
    print(f"genus: {res.total_genus}")
    print(f"crossings: {res.crossings}")
    print(f"status: {'certified' if res.certified else 'upper-bound'}")
    print(f"explored: {res.explored}")
    return 0


def cmd_classify(args) -> int:
    corpus = _read_corpus(args.corpus)
    report = classify_corpus(corpus, _bounds(args, *corpus), _parse_quandles(args.quandles))
    print(report.to_text())
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="vlink", description="virtual link diagrams: genus, equivalence, invariants")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("genus", help="surface genus per component")
    p.add_argument("diagram", help="file containing a signed Gauss code")
    p.set_defaults(fn=cmd_genus)

    p = subs.add_parser("equiv", help="bounded equivalence check")
    p.add_argument("a")
    p.add_argument("b")
    _add_search_args(p)
    p.set_defaults(fn=cmd_equiv)

    p = subs.add_parser("minimize", help="minimal (genus, crossings) witness in the bounded orbit")
    p.add_argument("diagram")
    _add_search_args(p)
    p.set_defaults(fn=cmd_minimize)

    p = subs.add_parser("classify", help="partition a corpus file (one Gauss code per line)")
    p.add_argument("corpus")
    _add_search_args(p)
    p.set_defaults(fn=cmd_classify)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
