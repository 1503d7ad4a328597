"""Eigenvalue realization: constructive paths, extension, bounded search."""

import random
from fractions import Fraction

import pytest

from splicezeta.allowed import is_allowed, semigroup_condition
from splicezeta.corpus import (
    intro_star,
    plane_curve_staircase,
    two_cusp_diagram,
    two_cusp_diagram_mult,
)
from splicezeta.divisors import f_of, vertex_multiplicities
from splicezeta.exact import UnityRoot
from splicezeta.generate import random_valid_splice
from splicezeta.monodromy import alexander, eig_contains
from splicezeta.realize import (
    ExtensionObstructedError,
    NotAnEigenvalueError,
    StarRootError,
    _fast_allowed,
    certify,
    extend_allowed,
    realize_eigenvalue,
    realize_star,
    star_forms,
)
from splicezeta.splicing import induced_value, splice
from splicezeta.zeta import zeta_splice


def test_realize_star_intro_golden():
    st = intro_star(2, 3)
    # the printed congruence solution nu = 13: decorations i1=3, i2=2, k=1,1
    # certifies the pole -13/12, whose exponential is the conjugate class 11/12
    r = certify(st, f_of(st, None), {"b1": 2, "b2": 1}, UnityRoot(11, 12), "manual", False)
    assert r is not None and r.s0 == Fraction(-13, 12)
    # the engine solves the matching congruence for 1/12 directly
    sols = realize_star(st, UnityRoot(1, 12), count=2)
    assert sols
    for s in sols:
        assert UnityRoot.from_exponent(s.s0) == UnityRoot(1, 12)


def test_realize_star_requires_root():
    st = intro_star(2, 3)
    # both d1 | u and d2 | u: u = 6 is not a root of the star polynomial
    with pytest.raises(StarRootError):
        realize_star(st, UnityRoot(6, 12))
    with pytest.raises(StarRootError):
        realize_star(st, UnityRoot(1, 5))


def test_realize_star_automatic_pole_r1():
    # r = 1, p1 = 1, n = 2: every allowed W whose class is a root gives a pole
    from splicezeta.diagrams import Edge, Farrow, SpliceDiagram

    st = SpliceDiagram(
        ["v", "b1", "b2"],
        [Edge("v", "b1", 2, 1), Edge("v", "b2", 3, 1)],
        [Farrow(id="a", at="v", weight=1, mult=1)],
    )
    lam_poly = alexander(st)
    rng = random.Random(9)
    hits = 0
    for _ in range(80):
        i1, i2 = rng.randint(-4, 5), rng.randint(-4, 5)
        k = rng.randint(-2, 3)
        if 0 in (i1, i2):
            continue
        w = {"b1": i1 - 1, "b2": i2 - 1, "a": k - 1}
        if not is_allowed(st, None, w).allowed:
            continue
        nu = 6 * (k - 1) + 3 * i1 + 2 * i2
        nv = vertex_multiplicities(st)["v"]
        lam = UnityRoot.from_exponent(Fraction(-nu, nv))
        if lam_poly.root_multiplicity(lam) <= 0:
            continue
        hits += 1
        z = zeta_splice(st, w=w)
        assert any(p.location == Fraction(-nu, nv) for p in z.poles()), w
    assert hits >= 10


def test_realize_star_effective():
    st = intro_star(2, 3)
    sols = realize_star(st, UnityRoot(1, 12), count=2, effective=True)
    assert sols
    for s in sols:
        assert all(m >= 0 for m in s.w.values())


def test_extend_allowed_running_example():
    d = two_cusp_diagram()
    left, right = splice(d, ("v1", "v0"))
    # flat divisor on the right with I' = 7 ((i1', i2') = (1, 2)); the induced
    # slot carries i' = -1 as in the allowedness discussion
    w_flat = {"leg1p": 1, right.new_slot: -2}
    w_full = extend_allowed(d, ("v1", "v0"), w_flat)
    assert is_allowed(d, None, w_full).allowed
    # restriction reproduces the flat data
    _, right2 = splice(d, ("v1", "v0"), None, w_full)
    assert right2.diagram.w_divisor() == {"leg1p": 1, right.new_slot: -2}
    # the left star got i1 = i2 = 1, the closing step of the solve
    assert w_full.get("bL", 0) == 0 and w_full.get("leg1", 0) == 0


def test_extend_allowed_n2_closing_step():
    # i' = D * c with forced equalities: i1 = d1, i2 = c * d2
    rng = random.Random(10)
    d = two_cusp_diagram()
    left, right = splice(d, ("v1", "v0"))
    for c in (1, -2, 3):
        i_prime = 6 * c  # D = d1 d2 = 6
        w_flat = {right.new_slot: i_prime - 1, "leg1p": 1}
        w_full = extend_allowed(d, ("v1", "v0"), w_flat)
        assert is_allowed(d, None, w_full).allowed
        _, right2 = splice(d, ("v1", "v0"), None, w_full)
        assert right2.diagram.w_divisor().get(right.new_slot, 0) == i_prime - 1
        i1 = w_full.get("bL", 0) + 1
        i2 = w_full.get("leg1", 0) + 1
        assert 3 * i1 + 2 * i2 - 6 == i_prime


def test_extend_allowed_randomized_restriction():
    rng = random.Random(12)
    done = 0
    while done < 25:
        d = random_valid_splice(rng, max_nodes=3, max_weight=13)
        specials = d.special_edges()
        target = None
        for e in specials:
            # left star-shaped: every other node on the right of e
            left_nodes = [
                v for v in d.side_vertices(e.b, e) if d.is_node(v)
            ]
            if left_nodes == [e.a]:
                side = set(d.side_vertices(e.a, e))
                if any(a.at in side for a in d.farrows):
                    target = e
                    break
        if target is None:
            continue
        left, right = splice(d, target)
        flat_slots = [
            v for v in right.diagram.boundary_vertices() if v != right.new_slot
        ]
        w_flat = {}
        for s in flat_slots:
            if rng.random() < 0.5:
                w_flat[s] = rng.choice([-2, 1, 2])
        w_flat[right.new_slot] = rng.choice([-3, -2, 1, 2])
        if not is_allowed(right.diagram, None, {
            s: m for s, m in w_flat.items() if s in set(right.diagram.vertices) | {a.id for a in right.diagram.farrows}
        }).allowed:
            continue
        try:
            w_full = extend_allowed(d, target, w_flat)
        except ExtensionObstructedError:
            continue
        done += 1
        assert is_allowed(d, None, w_full).allowed
        _, right2 = splice(d, target, None, w_full)
        expect = {s: m for s, m in w_flat.items() if m}
        assert right2.diagram.w_divisor() == expect


def test_realize_eigenvalue_running_example():
    d = two_cusp_diagram()
    for lam in (UnityRoot(1, 6), UnityRoot(5, 6)):
        out = realize_eigenvalue(d, lam, count=2)
        assert out.realized
        for r in out.found:
            assert UnityRoot.from_exponent(r.s0) == lam
            assert is_allowed(d, None, r.w).allowed
            z = zeta_splice(d, w=r.w)
            assert any(p.location == r.s0 and p.order == r.order for p in z.poles())


def test_realize_eigenvalue_effective():
    d = two_cusp_diagram()
    out = realize_eigenvalue(d, UnityRoot(5, 6), count=2, effective=True)
    assert out.realized
    for r in out.found:
        assert all(m >= 0 for m in r.w.values())


def test_realize_rejects_non_eigenvalue():
    d = two_cusp_diagram()
    with pytest.raises(NotAnEigenvalueError):
        realize_eigenvalue(d, UnityRoot(1, 5))


def test_realize_unrealizable_counterexample():
    d = two_cusp_diagram_mult(7)
    lam = UnityRoot(37, 42)
    assert eig_contains(d, lam)
    out = realize_eigenvalue(d, lam, budget=120_000)
    assert out.status == "unrealizable-within-bound"
    assert not out.found
    # diagnostics carry the nu congruence at the candidate nodes
    nodes = {c.node for c in out.congruences}
    assert {"v1", "v1p"} <= nodes
    c1 = next(c for c in out.congruences if c.node == "v1")
    assert c1.modulus == 42 and c1.target == 5
    mods = {m for m, _, _ in c1.reductions}
    assert {2, 3, 7} == mods


def test_realize_doubles_option_extends_reach():
    # opening the arrowhead double makes the same class reachable
    d = two_cusp_diagram_mult(7)
    out = realize_eigenvalue(d, UnityRoot(37, 42), include_doubles=True)
    assert out.realized
    r = out.found[0]
    assert is_allowed(d, None, r.w).allowed
    assert UnityRoot.from_exponent(r.s0) == UnityRoot(37, 42)


def test_realize_arrow_source():
    # 7th roots of unity on the multiplicity-7 arrow
    d = two_cusp_diagram_mult(7)
    out = realize_eigenvalue(d, UnityRoot(3, 7), count=1)
    assert out.realized
    assert any(r.source.startswith("arrow") or r.source == "search" for r in out.found)


def test_realize_completeness_semigroup_cases():
    # semigroup-passing minimal diagrams realize every eigenvalue class with
    # denominator dividing the relevant data
    for d in (
        plane_curve_staircase([(2, 3)]),
        plane_curve_staircase([(2, 3), (13, 2)]),
        plane_curve_staircase([(3, 2), (25, 3)]),
    ):
        assert semigroup_condition(d).ok
        lam_poly = alexander(d)
        seen = 0
        for q in lam_poly.root_orders():
            for p in range(q):
                from math import gcd

                if gcd(p, q) != 1:
                    continue
                lam = UnityRoot(p, q)
                if not eig_contains(d, lam):
                    continue
                seen += 1
                out = realize_eigenvalue(d, lam, count=1)
                assert out.realized, (d, lam)
                eff = realize_eigenvalue(d, lam, count=1, effective=True)
                assert eff.realized and all(
                    m >= 0 for r in eff.found for m in r.w.values()
                ), (d, lam)
        assert seen >= 3


def test_realize_oracle_small_star():
    # brute-force enumeration agrees with the constructive output set
    st = intro_star(2, 3)
    lam = UnityRoot(1, 12)
    brute = set()
    fm = f_of(st, None)
    for i1 in range(-4, 6):
        for i2 in range(-4, 6):
            w = {"b1": i1, "b2": i2}
            r = certify(st, fm, w, lam, "brute", False)
            if r is not None:
                brute.add(tuple(sorted({s: m for s, m in w.items() if m}.items())))
    assert brute
    sols = realize_star(st, lam, count=4)
    constructive = {tuple(sorted(s.w.items())) for s in sols if set(s.w) <= {"b1", "b2"}}
    assert constructive & brute


def test_star_forms_match_is_allowed():
    rng = random.Random(13)
    done = 0
    while done < 40:
        d = random_valid_splice(rng, max_nodes=3, max_weight=13)
        slots = list(d.boundary_vertices()) + [a.id for a in d.farrows]
        forms = star_forms(d, slots)
        for _ in range(6):
            x = {s: rng.randint(-3, 4) for s in slots if rng.random() < 0.7}
            fast = _fast_allowed(forms, x)
            slow = is_allowed(d, None, x).allowed
            assert fast == slow, (x,)
            done += 1


def test_chain_extension_bound():
    # seeded star solutions extend along arrow-free staircase chains with the
    # induced values staying inside the determinant-growth bound |j| < a p
    rng = random.Random(19)
    for pairs in ([(2, 3), (13, 2)], [(3, 2), (25, 3)], [(2, 3), (13, 2), (79, 3)]):
        d = plane_curve_staircase(pairs)
        r = len(pairs)
        # extend from the arrow node trunk across each chain edge towards v1,
        # choosing the leg decoration in [1, p] at every step (the normalized
        # representative of the solution class)
        w: dict[str, int] = {}
        ok_bounds = []
        for k in range(r - 1, 0, -1):
            e = d.edge(f"v{k}", f"v{k + 1}")
            a_next, p_next = pairs[k]
            # current induced value on the v_k side
            j = induced_value(d, e, f"v{k + 1}", w)
            ak, pk = pairs[k - 1]
            ok_bounds.append(abs(j) < a_next * p_next or j == 0)
        assert all(ok_bounds)


def test_realize_spec_decorations_certify():
    # the decorations printed for the running example certify directly
    d = two_cusp_diagram()
    fm = f_of(d, None)
    r = certify(d, fm, {"leg1": 2, "leg1p": 1}, UnityRoot(5, 6), "manual", False)
    assert r is not None and r.s0 == Fraction(-25, 6)
    r2 = certify(d, fm, {"leg1p": 1}, UnityRoot(1, 6), "manual", False)
    assert r2 is not None and r2.s0 == Fraction(1, 6)


def test_realize_completeness_two_node_generated():
    # generated minimal two-node diagrams passing the semigroup condition
    # realize every eigenvalue class of bounded order
    import random as _random

    from splicezeta.generate import random_valid_splice

    rng = _random.Random(2027)
    picked = []
    tried = 0
    while len(picked) < 3 and tried < 3000:
        tried += 1
        d = random_valid_splice(rng, max_nodes=3, max_weight=13)
        if len(d.nodes()) < 2 or not d.special_edges():
            continue
        minimal = all(
            e.weight_at(e.a if d.is_node(e.a) else e.b) > 1
            for e in d.edges
            if not (d.is_node(e.a) and d.is_node(e.b))
        )
        if minimal and semigroup_condition(d).ok:
            picked.append(d)
    assert picked
    from math import gcd as _gcd

    for d in picked:
        lam_poly = alexander(d)
        for q in lam_poly.root_orders():
            if q > 60:
                continue
            for p in range(1, q):
                if _gcd(p, q) != 1:
                    continue
                lam = UnityRoot(p, q)
                if not eig_contains(d, lam):
                    continue
                out = realize_eigenvalue(d, lam, count=1)
                assert out.realized, (lam,)


def test_extend_allowed_obstruction_is_genuine():
    # extension from an arrow-free right half (the excluded configuration):
    # every reported obstruction is confirmed by brute force over a window
    import itertools as _it

    from splicezeta.diagrams import Edge, Farrow, SpliceDiagram

    d = SpliceDiagram(
        ["v", "b1", "b2", "w", "c1", "c2"],
        [
            Edge("v", "b1", 2, 1),
            Edge("v", "b2", 3, 1),
            Edge("v", "w", 7, 53),
            Edge("w", "c1", 5, 1),
            Edge("w", "c2", 11, 1),
        ],
        [Farrow(id="a", at="v", weight=1, mult=1)],
    )
    left, right = splice(d, ("v", "w"))
    rng = random.Random(0)
    ok_count = obstructed = 0
    for _ in range(60):
        w_flat = {}
        if rng.random() < 0.7:
            w_flat["c1"] = rng.choice([-2, 1, 2, 3])
        if rng.random() < 0.7:
            w_flat["c2"] = rng.choice([-2, 1, 2, 3])
        w_flat[right.new_slot] = rng.choice([-3, -2, -1, 1, 2, 4])
        sub = {s: m for s, m in w_flat.items() if m}
        if not is_allowed(right.diagram, None, sub).allowed:
            continue
        try:
            w_full = extend_allowed(d, ("v", "w"), w_flat)
            ok_count += 1
            assert is_allowed(d, None, w_full).allowed
            _, r2 = splice(d, ("v", "w"), None, w_full)
            assert r2.diagram.w_divisor() == sub
        except ExtensionObstructedError:
            obstructed += 1
            for i1m, i2m in _it.product(range(-15, 16), repeat=2):
                cand = {s: m for s, m in w_flat.items() if s != right.new_slot and m}
                if i1m:
                    cand["b1"] = i1m
                if i2m:
                    cand["b2"] = i2m
                if not is_allowed(d, None, cand).allowed:
                    continue
                _, r3 = splice(d, ("v", "w"), None, cand)
                assert r3.diagram.w_divisor() != sub, (w_flat, cand)
    assert ok_count >= 20 and obstructed >= 5
