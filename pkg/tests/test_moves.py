import random

import pytest

from vlink.codec import parse_gauss, to_diagram
from vlink.diagram import UNKNOT, Diagram, canonical_string, stats, validate
from vlink.moves import (
    ALL_KINDS,
    PLAIN_KINDS,
    MoveError,
    MoveSite,
    _apply_unchecked,
    apply_move,
    enumerate_moves,
    simplify_greedy,
)

from helpers import random_diagram

TREFOIL = to_diagram(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"))
VT = to_diagram(parse_gauss("O1+ O2+ U1+ U2+"))
KINK = to_diagram(parse_gauss("O1+ U1+"))


def test_kink_has_exactly_one_r1_minus():
    sites = enumerate_moves(KINK, {"R1-"})
    assert len(sites) == 1
    out = apply_move(KINK, sites[0])
    assert out == UNKNOT


def test_virtual_trefoil_is_reduced():
    assert enumerate_moves(VT, {"R1-"}) == []
    assert enumerate_moves(VT, {"R2-"}) == []
    assert enumerate_moves(TREFOIL, {"R1-", "R2-"}) == []


def test_empty_diagram_r1_plus_counts_loops():
    for loops in (1, 2, 3):
        d = Diagram((), (), (), (), free_loops=loops)
        sites = enumerate_moves(d, {"R1+"})
        assert len(sites) == loops
        assert all(s.where[0] == "loop" for s in sites)


def test_r1_plus_on_loop_gives_positive_kink():
    site = enumerate_moves(UNKNOT, {"R1+"})[0]
    out = apply_move(UNKNOT, site)
    assert canonical_string(out) == "O1+ U1+"


def test_move_changes_vertex_count_correctly():
    deltas = {"R1+": 1, "R1-": -1, "R2+": 2, "R2-": -2, "R3": 0, "R2+stab": 2}
    rng = random.Random(6)
    for _ in range(25):
        d = random_diagram(rng, max_v=4)
        for site in enumerate_moves(d, ALL_KINDS)[:60]:
            out = _apply_unchecked(d, site)
            assert out.n_vertices - d.n_vertices == deltas[site.kind]


def test_validity_preserved_on_random_diagrams():
    rng = random.Random(61)
    for _ in range(30):
        d = random_diagram(rng, max_v=6)
        for site in enumerate_moves(d, ALL_KINDS):
            assert validate(_apply_unchecked(d, site)) == []


def test_component_count_preserved():
    rng = random.Random(62)
    for _ in range(15):
        d = random_diagram(rng, max_v=5)
        n = stats(d).components
        for site in enumerate_moves(d, ALL_KINDS)[:80]:
            assert stats(_apply_unchecked(d, site)).components == n


def test_r1_r2_cancellation():
    rng = random.Random(63)
    for _ in range(12):
        d = random_diagram(rng, max_v=4)
        cs = canonical_string(d)
        for site in enumerate_moves(d, {"R1+"})[:10]:
            d2 = _apply_unchecked(d, site)
            undone = {canonical_string(_apply_unchecked(d2, t))
                      for t in enumerate_moves(d2, {"R1-"})}
            assert cs in undone
        for site in enumerate_moves(d, {"R2+", "R2+stab"})[:20]:
            d2 = _apply_unchecked(d, site)
            undone = {canonical_string(_apply_unchecked(d2, t))
                      for t in enumerate_moves(d2, {"R2-"})}
            assert cs in undone


def test_reductions_are_invertible():
    rng = random.Random(64)
    for _ in range(40):
        d = random_diagram(rng, max_v=5)
        cs = canonical_string(d)
        for site in enumerate_moves(d, {"R1-", "R2-"}):
            d2 = _apply_unchecked(d, site)
            redo = {canonical_string(_apply_unchecked(d2, t))
                    for t in enumerate_moves(d2, {"R1+", "R2+", "R2+stab"})}
            assert cs in redo


def test_r3_double_apply_returns_original():
    rng = random.Random(65)
    found = 0
    for _ in range(150):
        d = random_diagram(rng, max_v=5, max_comps=2)
        cs = canonical_string(d)
        for site in enumerate_moves(d, {"R3"}):
            found += 1
            d2 = _apply_unchecked(d, site)
            assert validate(d2) == []
            assert d2.n_vertices == d.n_vertices
            back = {canonical_string(_apply_unchecked(d2, t))
                    for t in enumerate_moves(d2, {"R3"})}
            assert cs in back
    assert found >= 10


def test_stale_site_rejected():
    site = enumerate_moves(KINK, {"R1-"})[0]
    with pytest.raises(MoveError):
        apply_move(TREFOIL, site)
    with pytest.raises(MoveError):
        apply_move(UNKNOT, MoveSite("R1-", (0,)))


def test_simplify_greedy():
    assert simplify_greedy(KINK) == UNKNOT
    assert simplify_greedy(TREFOIL) == TREFOIL
    doubled = to_diagram(parse_gauss("O1+ U1+ O2+ U2+"))
    assert simplify_greedy(doubled) == UNKNOT
    nested = to_diagram(parse_gauss("O1- O2+ U2+ U1-"))
    assert simplify_greedy(nested) == UNKNOT
    rng = random.Random(66)
    for _ in range(25):
        d = random_diagram(rng, max_v=6)
        out = simplify_greedy(d)
        assert validate(out) == []
        assert out.n_vertices <= d.n_vertices
        assert enumerate_moves(out, {"R1-", "R2-"}) == []


def test_unknown_kind_rejected():
    with pytest.raises(MoveError):
        enumerate_moves(KINK, {"R5"})
