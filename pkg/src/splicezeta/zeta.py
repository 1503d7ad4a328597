"""Topological zeta functions, from splice diagrams and from plumbing graphs.

The splice route implements the node/edge sum over the decorated diagram; the
plumbing route implements the stratified Euler-characteristic sum over a
resolution, which also covers non-unimodular (rational-multiplicity) graphs.
Both produce exact rational functions in s, and the retained term list keeps
per-node contributions addressable for residue queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import DiagramError, PlumbingGraph, SpliceDiagram, edge_determinant
from .divisors import (
    PDivisor,
    canonical_plumbing,
    f_of,
    node_data,
    pullback_plumbing,
    w_of,
)
from .exact import Poly, Pole, RatFunc


@dataclass(frozen=True)
class ArrowPart:
    """d / (i + s N) inside a node bracket."""

    weight: int
    i: Fraction
    n: Fraction


@dataclass(frozen=True)
class NodeTerm:
    """(1/(nu + s N)) * (const + sum of arrow parts)."""

    vertex: str
    nu: Fraction
    n: Fraction
    const: Fraction
    arrows: tuple[ArrowPart, ...]

    def bracket_at(self, s0: Fraction) -> Fraction:
        acc = Fraction(self.const)
        for p in self.arrows:
            acc += Fraction(p.weight) / (p.i + s0 * p.n)
        return acc

    def ratfunc(self) -> RatFunc:
        lin = RatFunc(Poly.const(1), Poly.linear(self.nu, self.n))
        acc = RatFunc(Poly.const(self.const))
        for p in self.arrows:
            acc = acc + RatFunc(Poly.const(p.weight), Poly.linear(p.i, p.n))
        return lin * acc


@dataclass(frozen=True)
class EdgeTerm:
    """q / ((nu + s N)(nu' + s N'))."""

    vertices: tuple[str, str]
    q: Fraction
    nu1: Fraction
    n1: Fraction
    nu2: Fraction
    n2: Fraction

    def ratfunc(self) -> RatFunc:
        return RatFunc(
            Poly.const(self.q),
            Poly.linear(self.nu1, self.n1) * Poly.linear(self.nu2, self.n2),
        )


@dataclass
class ZetaResult:
    func: RatFunc
    node_terms: list[NodeTerm]
    edge_terms: list[EdgeTerm]

    def candidate_poles(self) -> list[Fraction]:
        cands = set()
        for t in self.node_terms:
            if t.n:
                cands.add(Fraction(-t.nu, t.n))
            for p in t.arrows:
                if p.n:
                    cands.add(Fraction(-p.i, p.n))
        return sorted(cands)

    def poles(self) -> list[Pole]:
        return self.func.poles(hints=self.candidate_poles())

    def residue_contribution(self, vertex: str, s0: Fraction) -> Fraction:
        """Contribution of one node to the residue at a simple candidate s0.

        Sums the node term and the incident edge terms whose (nu + s N)
        factor vanishes at s0; the partner factors must not vanish."""
        s0 = Fraction(s0)
        contrib = Fraction(0)
        for t in self.node_terms:
            if t.vertex != vertex:
                continue
            if t.nu + s0 * t.n != 0:
                return Fraction(0)
            contrib += t.bracket_at(s0) / t.n
        for e in self.edge_terms:
            if vertex not in e.vertices:
                continue
            if e.vertices[0] == vertex:
                mine, other = (e.nu1, e.n1), (e.nu2, e.n2)
            else:
                mine, other = (e.nu2, e.n2), (e.nu1, e.n1)
            if mine[0] + s0 * mine[1] != 0:
                continue
            den = other[0] + s0 * other[1]
            if den == 0:
                raise DiagramError(
                    f"order-2 interaction at s0={s0}; no simple residue contribution"
                )
            contrib += Fraction(e.q) / (mine[1] * den)
        return contrib


def _require_nonzero_pair(nu, n, where: str):
    if nu == 0 and n == 0:
        raise DiagramError(f"(nu, N) = (0, 0) at {where}")


def zeta_splice(
    d: SpliceDiagram, f: PDivisor | None = None, w: PDivisor | None = None
) -> ZetaResult:
    """Z(Gamma; s) of the decorated diagram, with the per-node term list."""
    d.require_standard()
    fm = f_of(d, f)
    wm = w_of(d, w)
    if all(m == 0 for m in fm.values()):
        raise DiagramError("F must be effective and nonzero")
    if any(m < 0 for m in fm.values()):
        raise DiagramError("F must be effective")
    data = node_data(d, fm, wm)
    node_terms: list[NodeTerm] = []
    edge_terms: list[EdgeTerm] = []
    for v in d.nodes():
        nu_v, n_v = data[v]
        _require_nonzero_pair(nu_v, n_v, f"node {v}")
        arrows: list[ArrowPart] = []
        const = Fraction(0)
        for e in d.edges_at(v):
            u = e.other(v)
            if d.is_node(u):
                continue
            # boundary vertex: constant part d_vw / i_w
            i_w = wm.get(u, 0) + 1
            if i_w == 0:
                raise DiagramError(f"boundary vertex {u!r} carries i = 0")
            const += Fraction(e.weight_at(v), i_w)
        for a in d.farrows_at(v):
            i_a = wm.get(a.id, 0) + 1
            _require_nonzero_pair(i_a, a.mult, f"arrowhead {a.id}")
            arrows.append(ArrowPart(weight=a.weight, i=Fraction(i_a), n=Fraction(a.mult)))
        node_warrows = 0
        if wm.get(v, 0):
            # dashed arrow drawn at the node: weight 1, N = 0
            i_a = wm[v] + 1
            if i_a == 0:
                raise DiagramError(f"dashed arrow at node {v!r} with i = 0")
            arrows.append(ArrowPart(weight=1, i=Fraction(i_a), n=Fraction(0)))
            node_warrows = 1
        delta_fw = len(d.edges_at(v)) + len(d.farrows_at(v)) + node_warrows
        const += Fraction(2 - delta_fw)
        node_terms.append(
            NodeTerm(vertex=v, nu=Fraction(nu_v), n=Fraction(n_v), const=const, arrows=tuple(arrows))
        )
    for e in d.special_edges():
        q = edge_determinant(d, e)
        nu_a, n_a = data[e.a]
        nu_b, n_b = data[e.b]
        edge_terms.append(
            EdgeTerm(
                vertices=(e.a, e.b),
                q=Fraction(q),
                nu1=Fraction(nu_a),
                n1=Fraction(n_a),
                nu2=Fraction(nu_b),
                n2=Fraction(n_b),
            )
        )
    total = RatFunc.zero()
    for t in node_terms:
        total = total + t.ratfunc()
    for t in edge_terms:
        total = total + t.ratfunc()
    return ZetaResult(func=total, node_terms=node_terms, edge_terms=edge_terms)


def zeta_plumbing(
    g: PlumbingGraph, f: PDivisor | None = None, w: PDivisor | None = None
) -> ZetaResult:
    """Z(F, W; s) from a resolution graph via the stratified Euler sum.

    Works in general (non-unimodular negative-definite) mode, where the
    nu_v and N_v may be rational.
    """
    fm = g.f_divisor() if f is None else dict(f)
    wm = g.w_divisor() if w is None else dict(w)
    if all(m == 0 for m in fm.values()):
        raise DiagramError("F must be effective and nonzero")
    if any(m < 0 for m in fm.values()):
        raise DiagramError("F must be effective")
    nv = pullback_plumbing(g, fm)
    kv = canonical_plumbing(g, wm)
    arrows_by_id = {a.id: a for a in g.farrows}
    # strict transforms at each vertex: (weight-like count, i, N)
    node_terms: list[NodeTerm] = []
    edge_terms: list[EdgeTerm] = []
    for v in g.vertices:
        nu_v = Fraction(kv[v.id]) + 1
        n_v = Fraction(nv[v.id])
        _require_nonzero_pair(nu_v, n_v, f"vertex {v.id}")
        transforms: list[ArrowPart] = []
        for a in g.farrows_at(v.id):
            i_a = wm.get(a.id, 0) + 1
            _require_nonzero_pair(i_a, a.mult, f"arrowhead {a.id}")
            transforms.append(ArrowPart(weight=1, i=Fraction(i_a), n=Fraction(a.mult)))
        if wm.get(v.id, 0) and v.id not in arrows_by_id:
            i_a = wm[v.id] + 1
            if i_a == 0:
                raise DiagramError(f"dashed arrow at {v.id!r} with i = 0")
            transforms.append(ArrowPart(weight=1, i=Fraction(i_a), n=Fraction(0)))
        chi = 2 - g.degree(v.id) - len(transforms)
        node_terms.append(
            NodeTerm(
                vertex=v.id,
                nu=nu_v,
                n=n_v,
                const=Fraction(chi),
                arrows=tuple(transforms),
            )
        )
    for a, b in g.edges:
        edge_terms.append(
            EdgeTerm(
                vertices=(a, b),
                q=Fraction(1),
                nu1=Fraction(kv[a]) + 1,
                n1=Fraction(nv[a]),
                nu2=Fraction(kv[b]) + 1,
                n2=Fraction(nv[b]),
            )
        )
    total = RatFunc.zero()
    for t in node_terms:
        total = total + t.ratfunc()
    for t in edge_terms:
        total = total + t.ratfunc()
    return ZetaResult(func=total, node_terms=node_terms, edge_terms=edge_terms)
