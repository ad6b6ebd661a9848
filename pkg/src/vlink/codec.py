"""Signed Gauss code text format and the lossless JSON map format.

Grammar::

    link      = component ("/" component)*
    component = "*" | token+
    token     = ("O" | "U") digit+ ("+" | "-")

Whitespace separates tokens and is otherwise ignored; "*" denotes one
crossing-free loop component.  A valid code uses every crossing index
exactly twice, once as O and once as U, with the same sign both times.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import Diagram, require_valid, serialize_default


class GaussCodeError(ValueError):
    """Malformed or invalid Gauss code text.  ``position`` indexes the offending character."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Token:
    role: str   # "O" | "U"
    index: int  # positive crossing index
    sign: int   # +1 | -1


@dataclass(frozen=True)
class SignedGaussCode:
    components: tuple[tuple[Token, ...], ...]
    free_loops: int = 0


def _validate_code(components, free_loops, pos_of=None) -> None:
    if free_loops < 0:
        raise GaussCodeError("negative free loop count")
    occurrences: dict[int, list[Token]] = {}
    for comp in components:
        if not comp:
            raise GaussCodeError("empty component")
        for tok in comp:
            occurrences.setdefault(tok.index, []).append(tok)
    for idx, toks in sorted(occurrences.items()):
        where = None if pos_of is None else pos_of.get(idx)
        if len(toks) != 2:
            raise GaussCodeError(f"crossing {idx} appears {len(toks)} times, expected 2", where)
        roles = {t.role for t in toks}
        if roles != {"O", "U"}:
            raise GaussCodeError(f"crossing {idx} does not appear once over and once under", where)
        if toks[0].sign != toks[1].sign:
            raise GaussCodeError(f"crossing {idx} appears with both signs", where)


def parse_gauss(text: str) -> SignedGaussCode:
    """Parse Gauss code text; raises :class:`GaussCodeError` with a position on bad input."""
    if text.strip() == "":
        return SignedGaussCode(components=())
    components: list[tuple[Token, ...]] = []
    free_loops = 0
    pos_of: dict[int, int] = {}
    i, n = 0, len(text)
    current: list[Token] = []
    starred = False

    def end_component(at: int) -> None:
        nonlocal current, free_loops, starred
        if starred:
            if current:
                raise GaussCodeError("'*' must be a component on its own", at)
            free_loops += 1
        elif current:
            components.append(tuple(current))
        else:
            raise GaussCodeError("empty component", at)
        current = []
        starred = False

    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "/":
            end_component(i)
            i += 1
        elif ch == "*":
            if starred or current:
                raise GaussCodeError("'*' must be a component on its own", i)
            starred = True
            i += 1
        elif ch in "OU":
            start = i
            i += 1
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j == i:
                raise GaussCodeError("expected crossing index after role", i)
            index = int(text[i:j])
            if index <= 0:
                raise GaussCodeError("crossing index must be positive", i)
            if j >= n or text[j] not in "+-":
                raise GaussCodeError("expected sign after crossing index", j)
            if starred:
                raise GaussCodeError("'*' must be a component on its own", start)
            current.append(Token(ch, index, 1 if text[j] == "+" else -1))
            pos_of.setdefault(index, start)
            i = j + 1
        else:
            raise GaussCodeError(f"unexpected character {ch!r}", i)
    end_component(n)

    _validate_code(components, free_loops, pos_of)
    return SignedGaussCode(tuple(components), free_loops)


def emit_gauss(code: SignedGaussCode) -> str:
    """Normalized text for ``code``: single spaces, components in given order,
    one ``*`` component per free loop.  ``parse_gauss(emit_gauss(c)) == c``."""
    parts = [" ".join(f"{t.role}{t.index}{'+' if t.sign > 0 else '-'}" for t in comp)
             for comp in code.components]
    parts.extend("*" * code.free_loops)
    return " / ".join(parts)


def to_diagram(code: SignedGaussCode) -> Diagram:
    """Build the decorated map determined by the code and the sign convention.

    Crossing indices become vertices in order of first appearance; vertex v
    owns darts 4v..4v+3 with counterclockwise rotation (4v, 4v+1, 4v+2, 4v+3),
    over-in at slot 0, and under-in at slot 1 (sign +) or slot 3 (sign -).
    """
    _validate_code(code.components, code.free_loops)
    vertex: dict[int, int] = {}
    sign: dict[int, int] = {}
    for comp in code.components:
        for tok in comp:
            if tok.index not in vertex:
                vertex[tok.index] = len(vertex)
                sign[tok.index] = tok.sign
    nv = len(vertex)
    edge = [-1] * (4 * nv)

    def pass_darts(tok: Token) -> tuple[int, int]:
        v = vertex[tok.index]
        if tok.role == "O":
            return 4 * v, 4 * v + 2
        if sign[tok.index] > 0:
            return 4 * v + 1, 4 * v + 3
        return 4 * v + 3, 4 * v + 1

    for comp in code.components:
        darts = [pass_darts(t) for t in comp]
        for (inb_a, out_a), (inb_b, _) in zip(darts, darts[1:] + darts[:1]):
            edge[out_a] = inb_b
            edge[inb_b] = out_a

    inbound = [False] * (4 * nv)
    for idx, v in vertex.items():
        inbound[4 * v] = True
        inbound[4 * v + 1 if sign[idx] > 0 else 4 * v + 3] = True
    return require_valid(Diagram(
        rotations=tuple(tuple(range(4 * v, 4 * v + 4)) for v in range(nv)),
        edge_pair=tuple(edge),
        over_pair=tuple((4 * v, 4 * v + 2) for v in range(nv)),
        inbound=tuple(inbound),
        free_loops=code.free_loops,
    ))


def from_diagram(d: Diagram) -> SignedGaussCode:
    """Traversal-order code: components ordered by least dart, each started at
    its least pass, crossings renumbered 1..n by first traversal."""
    return parse_gauss(serialize_default(d))


def diagram_to_json(d: Diagram) -> dict:
    """Lossless JSON-ready mapping with the fixed field names."""
    over_under = []
    for v in range(d.n_vertices):
        o_in = d.over_in(v)
        u_in = d.under_in(v)
        over_under.append({
            "over_in": o_in,
            "over_out": d.opposite[o_in],
            "under_in": u_in,
            "under_out": d.opposite[u_in],
        })
    return {
        "darts": d.n_darts,
        "edge_involution": list(d.edge_pair),
        "vertex_rotations": [list(rot) for rot in d.rotations],
        "over_under": over_under,
        "free_loops": d.free_loops,
    }


def diagram_from_json(obj: dict) -> Diagram:
    """Inverse of :func:`diagram_to_json`; validates the reconstructed map."""
    try:
        n = int(obj["darts"])
        rotations = tuple(tuple(int(x) for x in rot) for rot in obj["vertex_rotations"])
        edge = tuple(int(x) for x in obj["edge_involution"])
        over_under = obj["over_under"]
        free_loops = int(obj["free_loops"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GaussCodeError(f"malformed diagram JSON: {exc}") from None
    if any(len(rot) != 4 for rot in rotations):
        raise GaussCodeError("vertex_rotations entries must have length 4")
    if n != 4 * len(rotations):
        raise GaussCodeError("dart count does not match vertex count")
    inbound = [False] * n
    over = []
    for entry in over_under:
        try:
            o_in, u_in = int(entry["over_in"]), int(entry["under_in"])
            o_out = int(entry["over_out"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GaussCodeError(f"malformed over_under entry: {exc}") from None
        if not (0 <= o_in < n and 0 <= u_in < n):
            raise GaussCodeError("over_under names a dart out of range")
        inbound[o_in] = True
        inbound[u_in] = True
        over.append(tuple(sorted((o_in, o_out))))
    return require_valid(Diagram(rotations, edge, tuple(over), tuple(inbound), free_loops))


def dumps(d: Diagram) -> str:
    return json.dumps(diagram_to_json(d), sort_keys=True)


def loads(text: str) -> Diagram:
    return diagram_from_json(json.loads(text))
