import random

import pytest

from vlink.codec import parse_gauss, to_diagram
from vlink.diagram import UNKNOT, canonical_string, stats
from vlink.invariants import f_poly, quandle_colorings, dihedral_quandle
from vlink.moves import enumerate_moves, _apply_unchecked
from vlink.search import (
    SearchBounds,
    classify_corpus,
    equivalent,
    invariant_table,
    minimize,
    orbit,
)
from vlink.surface import genus

from helpers import random_diagram

TREFOIL = to_diagram(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"))
VT = to_diagram(parse_gauss("O1+ O2+ U1+ U2+"))
KINK = to_diagram(parse_gauss("O1+ U1+"))
DOUBLED = to_diagram(parse_gauss("O1+ U1+ O2+ U2+"))


def test_bounds_validation():
    with pytest.raises(ValueError):
        orbit(TREFOIL, SearchBounds(max_crossings=2))
    with pytest.raises(ValueError):
        SearchBounds(max_crossings=0).check()


def test_orbit_contains_start():
    res = orbit(VT, SearchBounds(max_crossings=2))
    assert canonical_string(VT) in res.states


def test_orbit_unknot_cap2():
    res = orbit(UNKNOT, SearchBounds(max_crossings=2, max_states=5000))
    assert not res.truncated
    assert canonical_string(KINK) in res.states
    assert canonical_string(to_diagram(parse_gauss("O1- U1-"))) in res.states
    assert canonical_string(DOUBLED) in res.states


def test_orbit_vt_cap2_is_isolated_and_nonclassical():
    res = orbit(VT, SearchBounds(max_crossings=2, max_states=5000))
    assert not res.truncated
    assert res.states == frozenset({canonical_string(VT)})
    for cs in res.states:
        assert genus(to_diagram(parse_gauss(cs))).total > 0


def test_orbit_truncation_flag():
    res = orbit(UNKNOT, SearchBounds(max_crossings=4, max_states=40))
    assert res.truncated
    assert res.explored <= 41


def test_equivalent_relabeling_empty_path():
    vt2 = to_diagram(parse_gauss("O2+ O1+ U2+ U1+"))
    out = equivalent(VT, vt2, SearchBounds(max_crossings=4))
    assert out.verdict == "equivalent"
    assert out.path == ()


def test_equivalent_kink_unknot_path_replays():
    out = equivalent(KINK, UNKNOT, SearchBounds(max_crossings=3, max_states=4000))
    assert out.verdict == "equivalent"
    assert len(out.path) >= 1
    # replay by hand from the canonical representative
    cur = to_diagram(parse_gauss(canonical_string(KINK)))
    for site, expected in out.path:
        assert site in enumerate_moves(cur, {site.kind})
        cur = _apply_unchecked(cur, site)
        assert canonical_string(cur) == expected
    assert canonical_string(cur) == canonical_string(UNKNOT)


def test_equivalent_distinguishes_trefoil_from_unknot_by_colorings():
    out = equivalent(TREFOIL, UNKNOT, SearchBounds(max_crossings=5, max_states=200))
    assert out.verdict == "distinguished"
    names = {n: (a, b) for n, a, b in out.distinguishers}
    assert names["colorings[R3]"] == ("9", "3")


def test_equivalent_distinguishes_vt_by_f_poly():
    out = equivalent(VT, UNKNOT, SearchBounds(max_crossings=4, max_states=200))
    assert out.verdict == "distinguished"
    assert any(n == "f_poly" for n, _, _ in out.distinguishers)
    out = equivalent(VT, TREFOIL, SearchBounds(max_crossings=5, max_states=200))
    assert out.verdict == "distinguished"
    assert any(n == "f_poly" for n, _, _ in out.distinguishers)


def test_distinguished_values_recompute():
    out = equivalent(TREFOIL, UNKNOT, SearchBounds(max_crossings=5, max_states=200))
    t1 = dict(invariant_table(TREFOIL))
    t2 = dict(invariant_table(UNKNOT))
    for name, v1, v2 in out.distinguishers:
        assert t1[name] == v1
        assert t2[name] == v2


def test_unknown_when_bounds_too_tight():
    # two diagrams of the same knot; a 2-state budget cannot connect them
    out = equivalent(DOUBLED, UNKNOT, SearchBounds(max_crossings=2, max_depth=1, max_states=3))
    assert out.verdict == "unknown"


def test_minimize_kink_certified():
    res = minimize(KINK, SearchBounds(max_crossings=2, max_states=4000))
    assert res.witness == UNKNOT
    assert res.certified
    assert (res.total_genus, res.crossings) == (0, 0)


def test_minimize_vt_keeps_genus_one():
    res = minimize(VT, SearchBounds(max_crossings=4, max_states=2000))
    assert (res.total_genus, res.crossings) == (1, 2)
    assert canonical_string(res.witness) == canonical_string(VT)


def test_minimize_trefoil_upper_bound_under_tight_budget():
    res = minimize(TREFOIL, SearchBounds(max_crossings=5, max_states=120))
    assert canonical_string(res.witness) == canonical_string(TREFOIL)
    assert (res.total_genus, res.crossings) == (0, 3)
    assert not res.certified  # state budget truncated the cap-5 orbit


def test_minimize_monotone():
    rng = random.Random(19)
    for _ in range(8):
        d = random_diagram(rng, max_v=3)
        res = minimize(d, SearchBounds(max_crossings=d.n_vertices + 1, max_states=400))
        assert (res.total_genus, res.crossings) <= (genus(d).total, d.n_vertices)


def test_minimize_same_witness_from_orbit_members():
    bounds = SearchBounds(max_crossings=3, max_states=10000)
    res = orbit(KINK, bounds)
    assert not res.truncated
    witnesses = set()
    for cs in sorted(res.states)[:10]:
        member = to_diagram(parse_gauss(cs))
        witnesses.add(canonical_string(minimize(member, bounds).witness))
    assert len(witnesses) == 1


def test_classify_one_class():
    report = classify_corpus([UNKNOT, KINK, DOUBLED],
                             SearchBounds(max_crossings=3, max_states=4000))
    assert len(report.classes) == 1
    assert report.violations == ()
    assert report.unresolved == ()


def test_classify_three_classes():
    report = classify_corpus([UNKNOT, TREFOIL, VT],
                             SearchBounds(max_crossings=5, max_states=300))
    assert len(report.classes) == 3
    assert report.violations == ()
    text = report.to_text()
    assert "classes: 3" in text
    assert "violations: none" in text


def test_classify_empty():
    report = classify_corpus([], SearchBounds(max_crossings=2))
    assert report.classes == ()
    assert "diagrams: 0" in report.to_text()
