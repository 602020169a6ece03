"""A guided tour of the annulus-diagram calculus.

Run with ``python3 demos/tour.py``.  Walks through slopes, labels, the
table-knot catalog, serialization, canonical keys, and the equivalence
decision rules.
"""

from anndiag import (Diagram, DiagramDocument, Edge, Family, NodeKind, Slope,
                     SlopePair, Strictness, TableKnot, base_diagram,
                     canonical_form, decide_equivalence, distinguish, ell,
                     family_diagram, pair_form, serialize, shape_of,
                     validate_diagram, H2, k2)


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Slopes: normalized extended rationals")
print("Slope(4, 6)   ->", Slope(4, 6))
print("Slope(2, -3)  ->", Slope(2, -3))
print("Slope(5, 0)   ->", Slope(5, 0), "(infinity is stored uniquely as 1/0)")

section("Slope pairs and their legal forms")
for a, b in [(Slope(1, 3), Slope(3, 1)), (Slope(2, 3), Slope(6, 1)),
             (Slope(2, 3), Slope(3, 2)), (Slope(2, 3), Slope(5, 1))]:
    pr = SlopePair(a, b)
    print(f"{str(pr):14s} -> {pair_form(pr).value}")

section("The table-knot catalog")
for knot in TableKnot:
    entry = base_diagram(knot)
    presence = "present" if entry.diagram is not None else "not recorded"
    print(f"{entry.name}: shape={entry.shape.value:12s} diagram {presence}; "
          f"exterior determines knot type: {entry.exterior_determines.value}")

section("Serialized form of the 5_2 stick diagram")
print(serialize(DiagramDocument(base_diagram(TableKnot.K5_2).diagram,
                                name="5_2")), end="")

section("Canonical keys decide isomorphism")
five_two = base_diagram(TableKnot.K5_2).diagram
ll2_zero = family_diagram(Family.LL2, 0)
print("catalog 5_2 key :", canonical_form(five_two).hex())
print("ll2 at n=0 key  :", canonical_form(ll2_zero).hex())
print("equal keys, so the zero-twist member reproduces the catalog diagram")

section("Twist families change the recorded slopes")
for n in range(-2, 3):
    d = family_diagram(Family.MOTTO, n)
    print(f"motto n={n:+d}: " + ", ".join(str(e.label) for e in d.edges))

section("Distinguishing family members")
print("motto:1 vs motto:2 ->",
      distinguish(family_diagram(Family.MOTTO, 1),
                  family_diagram(Family.MOTTO, 2)).value)
print("e:1 vs e:5         ->",
      distinguish(family_diagram(Family.E, 1),
                  family_diagram(Family.E, 5)).value,
      "(the E family shares one diagram)")

section("Decision rules with homeomorphic exteriors")
six_one = base_diagram(TableKnot.K6_1).diagram
print("6_1 vs motto:0 (circle-stick) ->",
      decide_equivalence(six_one, family_diagram(Family.MOTTO, 0), True).value)
print("e:1 vs e:2 (circle)           ->",
      decide_equivalence(family_diagram(Family.E, 1),
                         family_diagram(Family.E, 2), True).value)

section("Validation enforces the structural lemmas")
u = NodeKind.UNKNOWN
bad = Diagram((u, u), (Edge(0, 1, H2), Edge(0, 1, k2(Slope(2, 1)))))
strict = validate_diagram(bad, Strictness.STRICT)
print("strict check of {h2, k2(2)}:")
for v in strict.violations:
    print("  ", v)
loop = Diagram((u,), (Edge(0, 0, ell()),))
print("lenient check of a bare l(?) loop:")
for w in validate_diagram(loop).warnings:
    print("   warning:", w)
