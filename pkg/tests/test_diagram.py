import itertools
import random

import pytest

from vlink.codec import parse_gauss, to_diagram
from vlink.diagram import (
    EMPTY,
    UNKNOT,
    Diagram,
    DiagramError,
    canonical_string,
    disjoint_union,
    mirror,
    stats,
    validate,
)

from helpers import random_diagram, random_diagrams
from oracles import find_isomorphism

TREFOIL = to_diagram(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"))
VT = to_diagram(parse_gauss("O1+ O2+ U1+ U2+"))
KINK = to_diagram(parse_gauss("O1+ U1+"))


def test_constructed_diagrams_validate():
    rng = random.Random(5)
    for _ in range(100):
        assert validate(random_diagram(rng, max_v=5)) == []


def test_validate_reports_adjacent_over_pair():
    d = KINK
    broken = Diagram(d.rotations, d.edge_pair, ((0, 1),), d.inbound, d.free_loops)
    errs = validate(broken)
    assert any("over pair of vertex 0" in e for e in errs)


def test_validate_reports_edge_fixed_point():
    d = KINK
    broken = Diagram(d.rotations, (0, 2, 1, 3), d.over_pair, d.inbound, d.free_loops)
    errs = validate(broken)
    assert any("fixed point" in e for e in errs)


def test_validate_reports_orientation_clash():
    d = KINK
    flags = list(d.inbound)
    flags[0] = not flags[0]
    errs = validate(Diagram(d.rotations, d.edge_pair, d.over_pair, tuple(flags), 0))
    assert errs


def test_validate_rotation_partition():
    broken = Diagram(((0, 1, 2, 2),), (3, 2, 1, 0), ((0, 2),), (True, True, False, False), 0)
    assert any("appears in rotations" in e or "missing" in e for e in validate(broken))


def test_stats_examples():
    assert stats(TREFOIL).crossings == 3
    assert stats(TREFOIL).components == 1
    assert stats(TREFOIL).writhe == 3
    assert stats(VT) == type(stats(VT))(crossings=2, components=1, writhe=2)
    s = stats(UNKNOT)
    assert (s.crossings, s.components, s.writhe) == (0, 1, 0)


def test_stats_rejects_invalid():
    broken = Diagram(((0, 1, 2, 3),), (0, 1, 2, 3), ((0, 2),), (True,) * 4, 0)
    with pytest.raises(DiagramError):
        stats(broken)


def test_edge_count_is_twice_vertex_count():
    for d in random_diagrams(17, 40, max_v=6):
        edges = {tuple(sorted((x, d.edge_pair[x]))) for x in range(d.n_darts)}
        assert len(edges) == 2 * d.n_vertices


def test_canonical_equal_iff_isomorphic():
    rng = random.Random(23)
    diagrams = [random_diagram(rng, max_v=3, max_comps=2, max_loops=1) for _ in range(24)]
    for d1, d2 in itertools.combinations(diagrams, 2):
        iso = find_isomorphism(d1, d2)
        same = canonical_string(d1) == canonical_string(d2)
        assert same == (iso is not None)


def test_canonical_invariant_under_relabeling():
    # a rotated serialization parses back to a relabeled isomorphic diagram
    vt2 = to_diagram(parse_gauss("O2+ O1+ U2+ U1+"))
    assert canonical_string(vt2) == canonical_string(VT)
    assert canonical_string(VT) != canonical_string(TREFOIL)
    assert stats(vt2) == stats(VT)


def test_canonical_idempotent():
    for d in (TREFOIL, VT, KINK, UNKNOT, EMPTY):
        cs = canonical_string(d)
        again = canonical_string(to_diagram(parse_gauss(cs)))
        assert again == cs


def test_mirror_involution_and_writhe():
    for d in random_diagrams(31, 30, max_v=5):
        m = mirror(d)
        assert validate(m) == []
        assert mirror(m) == d
        assert stats(m).writhe == -stats(d).writhe


def test_disjoint_union_identity_and_counts():
    assert disjoint_union(TREFOIL, EMPTY) == TREFOIL
    two = disjoint_union(UNKNOT, UNKNOT)
    assert two.free_loops == 2
    assert stats(two).components == 2
    s = stats(disjoint_union(TREFOIL, VT))
    assert s.crossings == 5 and s.components == 2 and s.writhe == 5


def test_disjoint_union_stats_add():
    rng = random.Random(77)
    for _ in range(20):
        d1, d2 = random_diagram(rng, max_v=4), random_diagram(rng, max_v=4)
        s1, s2, s = stats(d1), stats(d2), stats(disjoint_union(d1, d2))
        assert s.crossings == s1.crossings + s2.crossings
        assert s.components == s1.components + s2.components
        assert s.writhe == s1.writhe + s2.writhe
