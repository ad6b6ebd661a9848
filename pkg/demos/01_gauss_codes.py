"""Reading and writing virtual link diagrams.

A diagram is entered as a signed Gauss code: tokens like O3+ or U3+
record passing over/under crossing 3 at a positive crossing, components
are separated by "/", and "*" is a crossing-free loop component.
"""

from vlink import (
    GaussCodeError,
    emit_gauss,
    from_diagram,
    parse_gauss,
    stats,
    to_diagram,
    validate,
)
from vlink.codec import diagram_to_json, dumps, loads

print("== parsing ==")
trefoil = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
print("trefoil components:", len(trefoil.components),
      "tokens:", len(trefoil.components[0]))

hopfish = parse_gauss("O1+ U2+ / U1+ O2+")
print("two-component code:", emit_gauss(hopfish))

with_loop = parse_gauss("O1+ U1+ / *")
print("free loops:", with_loop.free_loops)

print("\n== validation errors ==")
for bad in ["O1+ U2+", "O1+ O1+", "O1+ U1-", "O1+ x"]:
    try:
        parse_gauss(bad)
    except GaussCodeError as e:
        print(f"  {bad!r}: {e}")

print("\n== diagrams ==")
d = to_diagram(trefoil)
print("valid:", validate(d) == [])
print("stats:", stats(d))
print("re-emitted:", emit_gauss(from_diagram(d)))

print("\n== JSON map format ==")
obj = diagram_to_json(to_diagram(parse_gauss("O1+ U1+")))
print("fields:", sorted(obj))
print("rotations:", obj["vertex_rotations"])
round_trip = loads(dumps(d))
print("lossless:", round_trip == d)
