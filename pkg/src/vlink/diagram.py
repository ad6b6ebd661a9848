"""Virtual link diagrams as decorated combinatorial maps.

A diagram is an oriented 4-valent combinatorial map with over/under
decorations, the purely combinatorial stand-in for a link projection on
a closed oriented surface.  The encoding:

* darts are ``0 .. 4V-1``; every vertex owns exactly four of them and
  ``rotations[v]`` lists its darts in counterclockwise cyclic order;
* ``edge_pair`` is a fixed-point-free involution pairing an outbound
  dart with the inbound dart it feeds (each orbit is one edge);
* at a vertex the two sigma^2-opposite dart pairs are the two strand
  passes; ``over_pair[v]`` names the pass carried by the overstrand;
* ``inbound[d]`` is True when the strand enters the vertex through
  dart ``d``; a strand enters on an inbound dart and leaves on the
  opposite dart of the same pass;
* ``free_loops`` counts crossing-free circle components, which carry
  no graph structure at all.

Crossing sign convention (this fixes the embedding produced from signed
Gauss codes): sign +1 when the under-in dart immediately follows the
over-in dart counterclockwise, -1 when it immediately precedes it.

Diagrams are immutable values.  Constructors in :mod:`vlink.codec` and
:mod:`vlink.moves` only build valid diagrams; arbitrary field values may
represent broken maps, which :func:`validate` reports as data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache


class DiagramError(ValueError):
    """Raised when an operation requires a valid diagram and gets a broken one."""


@dataclass(frozen=True)
class Diagram:
    rotations: tuple[tuple[int, int, int, int], ...]
    edge_pair: tuple[int, ...]
    over_pair: tuple[tuple[int, int], ...]
    inbound: tuple[bool, ...]
    free_loops: int = 0

    @property
    def n_vertices(self) -> int:
        return len(self.rotations)

    @property
    def n_darts(self) -> int:
        return 4 * len(self.rotations)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        """Map dart -> vertex, from the rotation partition."""
        out = [-1] * self.n_darts
        for v, rot in enumerate(self.rotations):
            for d in rot:
                if 0 <= d < self.n_darts:
                    out[d] = v
        return tuple(out)

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        """Counterclockwise next dart at the same vertex."""
        out = [-1] * self.n_darts
        for rot in self.rotations:
            for i, d in enumerate(rot):
                if 0 <= d < self.n_darts:
                    out[d] = rot[(i + 1) % 4]
        return tuple(out)

    @cached_property
    def opposite(self) -> tuple[int, ...]:
        return tuple(self.sigma[s] if 0 <= (s := self.sigma[d]) < self.n_darts else -1
                     for d in range(self.n_darts))

    @cached_property
    def violations(self) -> tuple[str, ...]:
        return tuple(_check(self))

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def is_over(self, dart: int) -> bool:
        """True when the pass through ``dart`` is the overstrand of its vertex."""
        return dart in self.over_pair[self.vertex_of[dart]]

    def over_in(self, v: int) -> int:
        a, b = self.over_pair[v]
        return a if self.inbound[a] else b

    def under_in(self, v: int) -> int:
        rot = self.rotations[v]
        under = [d for d in rot if d not in self.over_pair[v]]
        return under[0] if self.inbound[under[0]] else under[1]

    def sign(self, v: int) -> int:
        """Crossing sign derived from rotation, decoration and orientation."""
        return 1 if self.sigma[self.over_in(v)] == self.under_in(v) else -1

    @cached_property
    def strand_circuits(self) -> tuple[tuple[int, ...], ...]:
        """Closed strand walks, each a cyclic tuple of pass in-darts.

        Each circuit is rotated to start at its least dart; circuits are
        sorted by that dart.  Free loops are not included.
        """
        seen = set()
        circuits = []
        for d in range(self.n_darts):
            if d in seen or not self.inbound[d]:
                continue
            walk = []
            x = d
            while x not in seen:
                seen.add(x)
                walk.append(x)
                x = self.edge_pair[self.opposite[x]]
            k = walk.index(min(walk))
            circuits.append(tuple(walk[k:] + walk[:k]))
        circuits.sort(key=lambda c: c[0])
        return tuple(circuits)

    @cached_property
    def graph_components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the underlying graph, as vertex tuples."""
        comps = []
        unseen = set(range(self.n_vertices))
        while unseen:
            root = min(unseen)
            stack, comp = [root], set()
            while stack:
                v = stack.pop()
                if v not in comp:
                    comp.add(v)
                    for d in self.rotations[v]:
                        w = self.vertex_of[self.edge_pair[d]]
                        if w not in comp:
                            stack.append(w)
            unseen -= comp
            comps.append(tuple(sorted(comp)))
        return tuple(comps)


EMPTY = Diagram(rotations=(), edge_pair=(), over_pair=(), inbound=())

UNKNOT = Diagram(rotations=(), edge_pair=(), over_pair=(), inbound=(), free_loops=1)


@dataclass(frozen=True)
class DiagramStats:
    crossings: int
    components: int
    writhe: int


def _check(d: Diagram) -> list[str]:
    errs: list[str] = []
    n = d.n_darts
    if d.free_loops < 0:
        errs.append("free loop count is negative")
    if len(d.edge_pair) != n:
        errs.append(f"edge involution has {len(d.edge_pair)} entries, expected {n}")
    if len(d.inbound) != n:
        errs.append(f"orientation has {len(d.inbound)} entries, expected {n}")
    if len(d.over_pair) != d.n_vertices:
        errs.append("strand decoration does not cover every vertex")
    if errs:
        return errs

    seen: dict[int, int] = {}
    for v, rot in enumerate(d.rotations):
        for x in rot:
            if not (0 <= x < n):
                errs.append(f"rotation of vertex {v} names dart {x} out of range")
            elif x in seen:
                errs.append(f"dart {x} appears in rotations of vertices {seen[x]} and {v}")
            else:
                seen[x] = v
    if len(seen) < n:
        missing = sorted(set(range(n)) - set(seen))
        errs.append(f"darts {missing} missing from every rotation")
    if errs:
        return errs

    for x in range(n):
        y = d.edge_pair[x]
        if not (0 <= y < n):
            errs.append(f"edge involution sends dart {x} out of range")
        elif y == x:
            errs.append(f"edge involution has fixed point at dart {x}")
        elif d.edge_pair[y] != x:
            errs.append(f"edge involution is not an involution at dart {x}")
        elif d.inbound[x] == d.inbound[y]:
            kind = "inbound" if d.inbound[x] else "outbound"
            errs.append(f"edge {{{x}, {y}}} joins two {kind} darts")

    for v, rot in enumerate(d.rotations):
        a, b = d.over_pair[v]
        if a not in rot or b not in rot or a == b:
            errs.append(f"over pair of vertex {v} is not two of its darts")
            continue
        if d.opposite[a] != b:
            errs.append(f"over pair of vertex {v} is not an opposite pair")
        for pair in ((rot[0], rot[2]), (rot[1], rot[3])):
            flags = [d.inbound[x] for x in pair]
            if flags[0] == flags[1]:
                errs.append(
                    f"pass {pair} at vertex {v} has {sum(flags)} inbound darts, expected 1")
    return errs


def validate(d: Diagram) -> list[str]:
    """Return a list of invariant violations; empty iff ``d`` is a valid diagram."""
    return list(d.violations)


def require_valid(d: Diagram) -> Diagram:
    if not d.is_valid:
        raise DiagramError("invalid diagram: " + "; ".join(d.violations))
    return d


def stats(d: Diagram) -> DiagramStats:
    require_valid(d)
    return DiagramStats(
        crossings=d.n_vertices,
        components=len(d.strand_circuits) + d.free_loops,
        writhe=sum(d.sign(v) for v in range(d.n_vertices)),
    )


def mirror(d: Diagram) -> Diagram:
    """Swap the over/under decoration at every vertex.  Involutive."""
    new_over = []
    for v, rot in enumerate(d.rotations):
        new_over.append(tuple(x for x in rot if x not in d.over_pair[v]))
    return Diagram(d.rotations, d.edge_pair, tuple(new_over), d.inbound, d.free_loops)


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    """Place two diagrams side by side on separate surfaces."""
    require_valid(d1)
    require_valid(d2)
    k = d1.n_darts
    return Diagram(
        rotations=d1.rotations + tuple(tuple(x + k for x in rot) for rot in d2.rotations),
        edge_pair=d1.edge_pair + tuple(x + k for x in d2.edge_pair),
        over_pair=d1.over_pair + tuple((a + k, b + k) for a, b in d2.over_pair),
        inbound=d1.inbound + d2.inbound,
        free_loops=d1.free_loops + d2.free_loops,
    )


def relabel(d: Diagram, vertex_order: list[int]) -> Diagram:
    """Rebuild ``d`` with vertices renumbered along ``vertex_order`` and
    dart ``4v+i`` being position ``i`` of the new rotation of vertex ``v``."""
    dart_map: dict[int, int] = {}
    for new_v, old_v in enumerate(vertex_order):
        for i, dart in enumerate(d.rotations[old_v]):
            dart_map[dart] = 4 * new_v + i
    rotations = tuple(tuple(range(4 * v, 4 * v + 4)) for v in range(len(vertex_order)))
    n = 4 * len(vertex_order)
    edge = [0] * n
    inbound = [False] * n
    over = [(0, 0)] * len(vertex_order)
    for old, new in dart_map.items():
        edge[new] = dart_map[d.edge_pair[old]]
        inbound[new] = d.inbound[old]
    for new_v, old_v in enumerate(vertex_order):
        a, b = d.over_pair[old_v]
        over[new_v] = tuple(sorted((dart_map[a], dart_map[b])))
    return Diagram(rotations, tuple(edge), tuple(over), tuple(inbound), d.free_loops)


def _serialize(d: Diagram, comp_order: tuple[int, ...], starts: tuple[int, ...]) -> str:
    """Emit a signed Gauss string for one choice of component order and
    starting pass per component; crossings renumbered by first traversal."""
    names: dict[int, int] = {}
    parts = []
    for ci, si in zip(comp_order, starts):
        circ = d.strand_circuits[ci]
        toks = []
        for j in range(len(circ)):
            p = circ[(si + j) % len(circ)]
            v = d.vertex_of[p]
            if v not in names:
                names[v] = len(names) + 1
            role = "O" if d.is_over(p) else "U"
            sgn = "+" if d.sign(v) > 0 else "-"
            toks.append(f"{role}{names[v]}{sgn}")
        parts.append(" ".join(toks))
    parts.extend("*" * d.free_loops)
    return " / ".join(parts)


def serialize_default(d: Diagram) -> str:
    """Deterministic traversal-order serialization (least-dart starts)."""
    require_valid(d)
    c = len(d.strand_circuits)
    return _serialize(d, tuple(range(c)), (0,) * c)


@lru_cache(maxsize=None)
def canonical_string(d: Diagram) -> str:
    """Isomorphism-invariant serialization.

    Two valid diagrams are isomorphic as decorated oriented maps iff
    their canonical strings are equal: the string is the lexicographic
    minimum of the traversal serializations over every component order
    and every starting pass.
    """
    require_valid(d)
    circuits = d.strand_circuits
    c = len(circuits)
    if c == 0:
        return _serialize(d, (), ())
    best = None
    for comp_order in itertools.permutations(range(c)):
        for starts in itertools.product(*(range(len(circuits[i])) for i in comp_order)):
            s = _serialize(d, comp_order, starts)
            if best is None or s < best:
                best = s
    return best
