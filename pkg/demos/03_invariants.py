"""Bracket polynomial, f-polynomial, and quandle coloring counts.

The writhe-normalized bracket and the coloring counts are unchanged by
every Reidemeister move, so a mismatch certifies two diagrams present
different virtual links.
"""

from vlink import UNKNOT, bracket, f_poly, mirror, parse_gauss, quandle_colorings, to_diagram
from vlink.invariants import dihedral_quandle, trivial_quandle, check_quandle

diagrams = {
    "unknot": UNKNOT,
    "kink": to_diagram(parse_gauss("O1+ U1+")),
    "trefoil": to_diagram(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")),
    "mirror trefoil": mirror(to_diagram(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+"))),
    "virtual trefoil": to_diagram(parse_gauss("O1+ O2+ U1+ U2+")),
    "figure-8": to_diagram(parse_gauss("O1+ U2+ O3- U4- O2+ U1+ O4- U3-")),
}

r3 = dihedral_quandle(3)
r5 = dihedral_quandle(5)
print(f"{'diagram':<16} {'writhe-normalized f':<34} col[R3]  col[R5]")
for name, d in diagrams.items():
    print(f"{name:<16} {str(f_poly(d)):<34} "
          f"{quandle_colorings(d, r3):<8} {quandle_colorings(d, r5)}")

print("\nbracket vs f (kinks are invisible to f):")
kink = diagrams["kink"]
print("  bracket(kink) =", bracket(kink), "   f(kink) =", f_poly(kink))

print("\nquandle axioms are machine-checked:")
print("  dihedral R3 violations:", check_quandle(r3.table))
print("  broken table:", check_quandle(((1, 0), (0, 1)))[0])

print("\ntrivial quandle counts components:",
      quandle_colorings(diagrams["trefoil"], trivial_quandle(7)), "= 7^1")
