"""Bounded search over the move graph.

Equivalence of virtual links is only semi-decided here: a meeting
search yields a replayable move path, an invariant mismatch yields a
certificate of inequivalence, and exhausted bounds yield an honest
"unknown".
"""

from vlink import (
    UNKNOT,
    SearchBounds,
    canonical_string,
    classify_corpus,
    equivalent,
    minimize,
    orbit,
    parse_gauss,
    to_diagram,
)

kink = to_diagram(parse_gauss("O1+ U1+"))
doubled = to_diagram(parse_gauss("O1+ U1+ O2+ U2+"))
trefoil = to_diagram(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"))
vtrefoil = to_diagram(parse_gauss("O1+ O2+ U1+ U2+"))

print("== orbits ==")
res = orbit(UNKNOT, SearchBounds(max_crossings=2))
print(f"unknot orbit, crossing cap 2: {res.explored} diagrams, closed={not res.truncated}")

print("\n== equivalence verdicts ==")
out = equivalent(doubled, UNKNOT, SearchBounds(max_crossings=3))
print("doubled kink vs unknot:", out.verdict, "path length", len(out.path))

out = equivalent(trefoil, UNKNOT, SearchBounds(max_crossings=5, max_states=200))
print("trefoil vs unknot:", out.verdict)
for name, a, b in out.distinguishers:
    print(f"   {name}: {a} vs {b}")

out = equivalent(vtrefoil, UNKNOT, SearchBounds(max_crossings=4, max_states=200))
print("virtual trefoil vs unknot:", out.verdict, "-",
      out.distinguishers[0][0], "differs")

print("\n== minimal witnesses ==")
for name, d, cap in [("doubled kink", doubled, 3), ("virtual trefoil", vtrefoil, 4)]:
    res = minimize(d, SearchBounds(max_crossings=cap, max_states=3000))
    status = "certified" if res.certified else "upper bound"
    print(f"{name}: witness {canonical_string(res.witness)!r} "
          f"genus {res.total_genus}, V {res.crossings} ({status})")

print("\n== classifying a small corpus ==")
corpus = [UNKNOT, kink, doubled, trefoil, vtrefoil]
report = classify_corpus(corpus, SearchBounds(max_crossings=5, max_states=500))
print(report.to_text())
