#!/usr/bin/env python3
"""Allowed dashed-arrow decorations and the pole-to-eigenvalue property.

A decoration set W is allowed when every star of the splice decomposition
satisfies the divisibility implication on its boundary legs.  For allowed W,
every pole of Z maps into the eigenvalue set; dropping allowedness breaks
this, and the checker exhibits the offending pole.
"""

import random

from splicezeta import UnityRoot
from splicezeta.allowed import check_goal1, is_allowed, semigroup_condition
from splicezeta.corpus import plane_curve_staircase, two_cusp_diagram, unimodular_counterexample_plumbing
from splicezeta.diagrams import plumbing_to_splice
from splicezeta.generate import random_allowed_w, random_valid_splice

d = two_cusp_diagram()

# ---------------------------------------------------------------------------
# 1. the zero decoration is NOT allowed on the running example ...

verdict = is_allowed(d)
print(verdict)

# ... because the semigroup condition fails at its central node
print()
rep = semigroup_condition(d)
for f in rep.failures:
    print("semigroup failure:", f)

# ---------------------------------------------------------------------------
# 2. plane-curve staircases pass both

st = plane_curve_staircase([(2, 3), (13, 2)])
print("\nstaircase semigroup:", semigroup_condition(st).ok,
      "| W = 0 allowed:", is_allowed(st).allowed)

u = plumbing_to_splice(unimodular_counterexample_plumbing(1))
print("unimodular counterexample semigroup:",
      semigroup_condition(u).ok, [str(f) for f in semigroup_condition(u).failures])

# ---------------------------------------------------------------------------
# 3. goal (1): poles of allowed decorations land in the eigenvalue set

good = check_goal1(d, w={"leg1": 2, "leg1p": 1})  # i1=1, i2=3, I'=7
print("\nallowed decorations:")
print(good)

bad = check_goal1(d, w={"leg1": 5})  # i2 = 6: not allowed
print("\nnon-allowed decorations:")
print(bad)

# ---------------------------------------------------------------------------
# 4. the property holds across random allowed draws

rng = random.Random(1)
checked = 0
while checked < 25:
    dd = random_valid_splice(rng, max_nodes=4, max_weight=13)
    w = random_allowed_w(rng, dd)
    if w is None:
        continue
    checked += 1
    assert check_goal1(dd, w=w).holds
print(f"\n{checked} random allowed decorations: every pole lands in Eig")
