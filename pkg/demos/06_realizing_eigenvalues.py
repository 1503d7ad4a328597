#!/usr/bin/env python3
"""Constructing allowed decorations that realize a prescribed eigenvalue.

The engine solves the congruence for nu at a candidate node over the dashed
slots (the pairwise-coprime weights make this an extended-gcd computation),
repairs allowedness and residues by kernel moves, and certifies every answer
from scratch: the divisor must be allowed and the reduced zeta must have a
pole whose exponential is the requested root of unity.
"""

from splicezeta import UnityRoot
from splicezeta.corpus import intro_star, two_cusp_diagram, two_cusp_diagram_mult
from splicezeta.realize import realize_eigenvalue, realize_star

# ---------------------------------------------------------------------------
# 1. a star is solved directly

st = intro_star(2, 3)
for s in realize_star(st, UnityRoot(1, 12), count=2):
    print("star solution:", s.values(), "pole", s.s0, "from", s.source)

# ---------------------------------------------------------------------------
# 2. both primitive 6th roots on the running example, effectively if asked

d = two_cusp_diagram()
for lam in (UnityRoot(1, 6), UnityRoot(5, 6)):
    out = realize_eigenvalue(d, lam, count=1, effective=True)
    r = out.found[0]
    print(f"lambda = {lam}: W values {r.values()} certified pole {r.s0} ({r.source})")

# ---------------------------------------------------------------------------
# 3. and an honest failure: with the arrowhead multiplicity raised to 7, the
#    class 37/42 is blocked by the interplay of the nu congruence and the
#    allowedness constraint on the middle star

d7 = two_cusp_diagram_mult(7)
out = realize_eigenvalue(d7, UnityRoot(37, 42))
print("\nstatus:", out.status)
for c in out.congruences:
    print(c.describe())

# opening the doubling slot on the arrowhead changes the congruence and makes
# the class reachable; the default search keeps doubles closed so that the
# boundary-slot analysis above is decisive
out2 = realize_eigenvalue(d7, UnityRoot(37, 42), include_doubles=True)
print("\nwith doubling slots open:", out2.status, out2.found[0].values())
