"""Tabulate the five twist families and their pairwise verdicts.

Run with ``python3 demos/family_tables.py [LO HI]`` (default range -3..3).
Reproduces, at desk scale, how the invariant separates members of the
Motto and Lee-Lee families while the E family stays indistinguishable.
"""

import sys

from anndiag import (Family, ParameterOutOfDomain, Verdict, distinguish,
                     e_family_crossing_number, family_diagram,
                     leelee2_companion_torus_knot, shape_of)

lo, hi = (int(sys.argv[1]), int(sys.argv[2])) if len(sys.argv) == 3 else (-3, 3)


def members(family):
    out = []
    for n in range(lo, hi + 1):
        try:
            out.append((n, family_diagram(family, n)))
        except ParameterOutOfDomain:
            pass
    return out


for family in Family:
    print(f"== {family.value} ==")
    rows = members(family)
    for n, d in rows:
        labels = ",".join(str(e.label) for e in d.edges)
        print(f"  n={n:+d}\t{labels}\t{shape_of(d).value}")
    verdicts = {distinguish(d1, d2) for (m, d1) in rows for (n, d2) in rows
                if m < n}
    if verdicts == {Verdict.INEQUIVALENT}:
        print("  all members pairwise inequivalent")
    elif verdicts == {Verdict.INCONCLUSIVE}:
        print("  the diagram does not separate any members")
    elif verdicts:
        print("  mixed verdicts:",
              ", ".join(sorted(v.value for v in verdicts)))
    print()

print("E-family catalog facts (n > 0): constituent-knot crossing numbers")
print("  " + "  ".join(f"n={n}: {e_family_crossing_number(n)}"
                       for n in range(1, 7)))
print("Lee-Lee II companion torus knots")
print("  " + "  ".join(f"n={n}: {leelee2_companion_torus_knot(n)}"
                       for n in range(-2, 3)))
