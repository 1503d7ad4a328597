"""Multiplicity systems: linking-number route vs linear-algebra route."""

import random

import pytest

from splicezeta.corpus import (
    intro_star,
    rodrigues_plumbing,
    smooth_point_plumbing,
    two_cusp_diagram,
    two_cusp_plumbing,
    unimodular_counterexample_plumbing,
)
from splicezeta.diagrams import DiagramError, plumbing_to_splice
from splicezeta.divisors import (
    canonical_plumbing,
    nu_values,
    pullback_plumbing,
    vertex_multiplicities,
)
from splicezeta.generate import random_plumbing


def test_vertex_multiplicities_golden():
    d = two_cusp_diagram()
    n = vertex_multiplicities(d)
    assert n == {"bL": 3, "v1": 6, "leg1": 2, "v0": 1, "v1p": 6, "leg1p": 2, "bR": 3}


def test_vertex_multiplicities_zero_divisor():
    d = two_cusp_diagram()
    assert set(vertex_multiplicities(d, {"a0": 0}).values()) == {0}


def test_vertex_multiplicities_unimod_counterexample():
    d = plumbing_to_splice(unimodular_counterexample_plumbing(1))
    n = vertex_multiplicities(d)
    assert n["u2"] == 18 and n["u3"] == 3
    # splice level keeps four of the printed values; the (2) lives on the
    # string vertex that turned into the arrowhead support
    assert sorted(v for k, v in n.items() if k not in ("u2", "u3")) == [1, 6, 9]
    m = pullback_plumbing(unimodular_counterexample_plumbing(1))
    assert sorted(m.values()) == [1, 2, 3, 6, 9, 18]


def test_nu_values_golden():
    d = two_cusp_diagram()
    assert nu_values(d) == {"v1": -13, "v0": -2, "v1p": -13}


def test_nu_values_with_warrows():
    # decorations i1 = i2 = 1, I' = 7 realized by (i1', i2') = (1, 2)
    d = two_cusp_diagram()
    nu = nu_values(d, {"leg1p": 1})
    assert (nu["v1"], nu["v0"], nu["v1p"]) == (-1, 0, 1)


def test_nu_star_closed_formula():
    # one node, legs d1 d2, two arrowheads: nu = d1 d2 (k1 + k2 - 2) + d2 i1 + d1 i2
    rng = random.Random(3)
    for d1, d2 in ((2, 3), (3, 5), (4, 7)):
        st = intro_star(d1, d2)
        for _ in range(10):
            k1, k2 = rng.randint(-3, 4), rng.randint(-3, 4)
            i1, i2 = rng.randint(-3, 4), rng.randint(-3, 4)
            w = {"a1": k1 - 1, "a2": k2 - 1, "b1": i1 - 1, "b2": i2 - 1}
            nu = nu_values(st, w)["v"]
            assert nu == d1 * d2 * (k1 + k2 - 2) + d2 * i1 + d1 * i2


def test_nu_linear_in_warrow_values():
    # finite differences over integer inputs give exactly the linking products
    d = two_cusp_diagram()
    base = nu_values(d, {})
    for slot in ("bL", "leg1", "bR", "leg1p", "a0"):
        up = nu_values(d, {slot: 1})
        for v in base:
            assert up[v] - base[v] == d.linking_product(v, slot)


def test_pullback_plumbing_golden():
    g = two_cusp_plumbing()
    m = pullback_plumbing(g)
    assert m == {"e1": 3, "e2": 6, "e3": 1, "e4": 6, "e5": 3, "e6": 2, "e7": 2}
    assert set(pullback_plumbing(g, {"a0": 0}).values()) == {0}


def test_pullback_rodrigues_golden():
    m = pullback_plumbing(rodrigues_plumbing())
    assert m == {"c1": 6, "c2": 12, "c3": 3, "c4": 5, "c5": 3, "c6": 1}


def test_canonical_plumbing_golden():
    g = two_cusp_plumbing()
    k = canonical_plumbing(g)
    assert (k["e2"], k["e3"], k["e4"]) == (-14, -3, -14)


def test_canonical_single_minus_one():
    # adjunction on a lone (-1)-curve: (K, E) = -e - 2 = -1, so K = E
    g = smooth_point_plumbing()
    assert canonical_plumbing(g) == {"e": 1}
    assert pullback_plumbing(g) == {"e": 1}


def test_canonical_rodrigues_rational_free():
    # numerically Gorenstein: the canonical coefficients are integers
    k = canonical_plumbing(rodrigues_plumbing())
    assert all(isinstance(x, int) for x in k.values())


def test_oracle_equality_random():
    rng = random.Random(99)
    done = 0
    while done < 40:
        g = random_plumbing(rng, blowups=rng.randint(2, 7), arrows=rng.randint(1, 2))
        try:
            d = plumbing_to_splice(g)
        except DiagramError:
            continue
        done += 1
        rupture = [v for v in d.nodes() if g.valency_f(v) >= 3]
        ns = vertex_multiplicities(d)
        np_ = pullback_plumbing(g)
        for v in rupture:
            assert ns[v] == np_[v]
        nus = nu_values(d)
        kp = canonical_plumbing(g)
        for v in rupture:
            assert nus[v] == kp[v] + 1


def test_oracle_equality_with_warrows():
    g = two_cusp_plumbing()
    from splicezeta.diagrams import PlumbingGraph, Warrow

    g = PlumbingGraph(
        g.vertices,
        g.edges,
        g.farrows,
        [Warrow(id="w1", value=3, at="e1"), Warrow(id="w2", value=-2, doubles="a0")],
    )
    d = plumbing_to_splice(g)
    nus = nu_values(d)
    kp = canonical_plumbing(g)
    for v in d.nodes():
        assert nus[v] == kp[v] + 1


def test_positive_multiplicities():
    rng = random.Random(4)
    done = 0
    while done < 20:
        g = random_plumbing(rng, blowups=rng.randint(1, 6), arrows=rng.randint(1, 3))
        try:
            d = plumbing_to_splice(g)
        except DiagramError:
            continue
        done += 1
        assert all(v > 0 for v in vertex_multiplicities(d).values())


def test_nu_rejects_chain_slots():
    d = two_cusp_diagram()
    with pytest.raises(DiagramError):
        nu_values(d, {"nonexistent": 1})
