"""Divisor data on diagrams: multiplicity systems N_v and nu_v.

Two independent computation routes are provided.  On splice diagrams the
values come from linking-number products; on plumbing graphs they come from
exact linear algebra against the intersection form.  The two routes must agree
on unimodular graphs, and the test suite enforces that.
"""

from __future__ import annotations

from fractions import Fraction

from .diagrams import DiagramError, PlumbingGraph, SpliceDiagram

# A P-divisor is a plain mapping: arrowhead id -> multiplicity for F,
# slot id -> multiplicity (= value - 1) for W.  Slots are boundary-vertex ids,
# node ids (dashed arrow drawn at the node) or farrow ids (doubling arrows).
PDivisor = dict


def f_of(d, f: PDivisor | None) -> dict[str, int]:
    return dict(d.f_divisor()) if f is None else dict(f)


def w_of(d, w: PDivisor | None) -> dict[str, int]:
    return dict(d.w_divisor()) if w is None else dict(w)


def _check_w_slots(d: SpliceDiagram, w: dict[str, int]):
    fids = {a.id for a in d.farrows}
    for slot in w:
        if slot in fids:
            continue
        if slot not in d.vertices:
            raise DiagramError(f"W slot {slot!r} is not a vertex or arrowhead")
        if d.chain_vertex(slot):
            raise DiagramError(f"W slot {slot!r} is a valency-2 vertex")


def vertex_multiplicities(d: SpliceDiagram, f: PDivisor | None = None) -> dict[str, int]:
    """N_v = sum over arrowheads of N_a * l_{va}, for every vertex."""
    fm = f_of(d, f)
    out: dict[str, int] = {}
    for v in d.vertices:
        out[v] = sum(
            mult * d.linking_product(v, aid) for aid, mult in fm.items() if mult
        )
    return out


def nu_values(d: SpliceDiagram, w: PDivisor | None = None) -> dict[str, int]:
    """nu_v at every node: canonical-class part plus the W part.

    The canonical part sums (2 - delta_x) l_{vx} over the vertices of the
    arrow-stripped diagram: ordinary arrowheads with supporting weight > 1
    turn into boundary vertices (contributing l_{va} each), weight-1
    arrowheads vanish, and the dashed data is ignored.
    """
    wm = w_of(d, w)
    _check_w_slots(d, wm)
    out: dict[str, int] = {}
    for v in d.nodes():
        acc = 0
        for x in d.vertices:
            acc += (2 - d.delta(x)) * d.linking_product(v, x)
        for a in d.farrows:
            if a.weight >= 2:
                acc += d.linking_product(v, a.id)
        for slot, mult in wm.items():
            if mult:
                acc += mult * d.linking_product(v, slot)
        out[v] = acc
    return out


def node_data(
    d: SpliceDiagram, f: PDivisor | None = None, w: PDivisor | None = None
) -> dict[str, tuple[int, int]]:
    """(nu_v, N_v) for every node."""
    nv = vertex_multiplicities(d, f)
    nu = nu_values(d, w)
    return {v: (nu[v], nv[v]) for v in nu}


# ---------------------------------------------------------------------------
# plumbing-level linear algebra


def _solve_exact(m: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Q; the intersection forms here are definite."""
    n = len(m)
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise DiagramError("singular intersection form")
        a[k], a[piv] = a[piv], a[k]
        for i in range(n):
            if i != k and a[i][k]:
                r = a[i][k] / a[k][k]
                for j in range(k, n + 1):
                    a[i][j] -= r * a[k][j]
    return [a[i][n] / a[i][i] for i in range(n)]


def _as_int_if_possible(x: Fraction):
    return int(x) if x.denominator == 1 else x


def pullback_plumbing(g: PlumbingGraph, arrows: PDivisor | None = None) -> dict[str, int | Fraction]:
    """Coefficients of the exceptional part of pi^*F: solve (pi^*F, E_i) = 0."""
    if not g.is_negative_definite():
        raise DiagramError("plumbing graph is not negative definite")
    fm = g.f_divisor() if arrows is None else dict(arrows)
    by_vertex: dict[str, int] = {v.id: 0 for v in g.vertices}
    arrows_by_id = {a.id: a for a in g.farrows}
    for aid, mult in fm.items():
        if aid not in arrows_by_id:
            raise DiagramError(f"unknown arrowhead {aid!r}")
        by_vertex[arrows_by_id[aid].at] += mult
    ids = [v.id for v in g.vertices]
    I = [
        [Fraction(-x) for x in row]
        for row in g.minus_intersection_matrix()
    ]
    rhs = [Fraction(-by_vertex[v]) for v in ids]
    sol = _solve_exact(I, rhs)
    return {v: _as_int_if_possible(x) for v, x in zip(ids, sol)}


def canonical_plumbing(g: PlumbingGraph, w: PDivisor | None = None) -> dict[str, int | Fraction]:
    """Coefficients of K_pi + pi^*W on the exceptional curves (the nu_v - 1).

    K is pinned by adjunction (K + E, E_i) = delta_i - 2 with genus 0, i.e.
    (K, E_i) = -e_i - 2; the W part solves (pi^*W, E_i) = 0 from the dashed
    arrowhead multiplicities.
    """
    if not g.is_negative_definite():
        raise DiagramError("plumbing graph is not negative definite")
    wm = g.w_divisor() if w is None else dict(w)
    by_vertex: dict[str, int] = {v.id: 0 for v in g.vertices}
    arrows_by_id = {a.id: a for a in g.farrows}
    for slot, mult in wm.items():
        if slot in arrows_by_id:
            by_vertex[arrows_by_id[slot].at] += mult
        elif slot in by_vertex:
            by_vertex[slot] += mult
        else:
            raise DiagramError(f"unknown W slot {slot!r}")
    ids = [v.id for v in g.vertices]
    I = [[Fraction(-x) for x in row] for row in g.minus_intersection_matrix()]
    rhs = [
        Fraction(-g.self_int(v) - 2 - by_vertex[v]) for v in ids
    ]
    sol = _solve_exact(I, rhs)
    return {v: _as_int_if_possible(x) for v, x in zip(ids, sol)}


def plumbing_node_data(
    g: PlumbingGraph, f: PDivisor | None = None, w: PDivisor | None = None
) -> dict[str, tuple[Fraction, Fraction]]:
    """(nu_v, N_v) for every plumbing vertex, by exact linear algebra."""
    nv = pullback_plumbing(g, f)
    kv = canonical_plumbing(g, w)
    return {v.id: (Fraction(kv[v.id]) + 1, Fraction(nv[v.id])) for v in g.vertices}
