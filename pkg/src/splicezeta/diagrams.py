"""Decorated splice diagrams and plumbing graphs.

A splice diagram is a finite tree whose edges carry a positive integer weight
near each endpoint.  Ordinary arrowheads (``Farrow``) encode components of an
effective divisor F and attach at nodes via a weighted supporting edge; dashed
arrowheads (``Warrow``) encode components of a second divisor W and either sit
at a vertex or double an ordinary arrowhead.  A plumbing graph is a resolution
dual graph: vertices carry self-intersection numbers, all genera are zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd


class DiagramError(ValueError):
    """Structural precondition violated (bad locus, non-tree input, ...)."""


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    wa: int = 1
    wb: int = 1

    def other(self, v: str) -> str:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise DiagramError(f"vertex {v!r} not on edge {self.key}")

    def weight_at(self, v: str) -> int:
        if v == self.a:
            return self.wa
        if v == self.b:
            return self.wb
        raise DiagramError(f"vertex {v!r} not on edge {self.key}")

    @property
    def key(self) -> tuple[str, str]:
        return (self.a, self.b) if self.a <= self.b else (self.b, self.a)


@dataclass(frozen=True)
class Farrow:
    """Ordinary arrowhead: one component of F with multiplicity ``mult``."""

    id: str
    at: str
    weight: int = 1
    mult: int = 1


@dataclass(frozen=True)
class Warrow:
    """Dashed arrowhead: one component of W with value i (stored mult i-1).

    Exactly one of ``at`` (a vertex id) and ``doubles`` (a farrow id) is set.
    """

    id: str
    value: int
    at: str | None = None
    doubles: str | None = None

    def __post_init__(self):
        if (self.at is None) == (self.doubles is None):
            raise DiagramError(
                f"warrow {self.id!r}: exactly one of at/doubles must be given"
            )


class SpliceDiagram:
    """Immutable decorated splice diagram."""

    def __init__(self, vertices, edges=(), farrows=(), warrows=()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.edges: tuple[Edge, ...] = tuple(
            e if isinstance(e, Edge) else Edge(*e) for e in edges
        )
        self.farrows: tuple[Farrow, ...] = tuple(farrows)
        self.warrows: tuple[Warrow, ...] = tuple(warrows)
        self._check_ids()
        self._adj: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            self._adj[e.a].append(e)
            self._adj[e.b].append(e)
        self._farrows_at: dict[str, list[Farrow]] = {v: [] for v in self.vertices}
        for a in self.farrows:
            self._farrows_at[a.at].append(a)
        self._farrow_by_id = {a.id: a for a in self.farrows}
        self._warrow_by_id = {w.id: w for w in self.warrows}

    def _check_ids(self):
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise DiagramError(f"duplicate id {v!r}")
            seen.add(v)
        for a in self.farrows:
            if a.id in seen:
                raise DiagramError(f"duplicate id {a.id!r}")
            seen.add(a.id)
            if a.at not in self._vset():
                raise DiagramError(f"farrow {a.id!r} at unknown vertex {a.at!r}")
            if a.weight < 1 or a.mult < 0:
                raise DiagramError(f"farrow {a.id!r}: weight >= 1 and mult >= 0 required")
        fids = {a.id for a in self.farrows}
        for w in self.warrows:
            if w.id in seen:
                raise DiagramError(f"duplicate id {w.id!r}")
            seen.add(w.id)
            if w.at is not None and w.at not in self._vset():
                raise DiagramError(f"warrow {w.id!r} at unknown vertex {w.at!r}")
            if w.doubles is not None and w.doubles not in fids:
                raise DiagramError(f"warrow {w.id!r} doubles unknown farrow {w.doubles!r}")
        for e in self.edges:
            if e.a not in self._vset() or e.b not in self._vset():
                raise DiagramError(f"edge {e.key} touches an unknown vertex")
            if e.a == e.b:
                raise DiagramError(f"loop edge at {e.a!r}")

    def _vset(self) -> set[str]:
        return set(self.vertices)

    # -- structure ---------------------------------------------------------

    def edges_at(self, v: str) -> tuple[Edge, ...]:
        return tuple(self._adj[v])

    def farrows_at(self, v: str) -> tuple[Farrow, ...]:
        return tuple(self._farrows_at[v])

    def warrows_at(self, v: str) -> tuple[Warrow, ...]:
        return tuple(w for w in self.warrows if w.at == v)

    def warrow_doubling(self, farrow_id: str) -> Warrow | None:
        for w in self.warrows:
            if w.doubles == farrow_id:
                return w
        return None

    def farrow(self, farrow_id: str) -> Farrow:
        try:
            return self._farrow_by_id[farrow_id]
        except KeyError:
            raise DiagramError(f"unknown farrow {farrow_id!r}") from None

    def edge(self, a: str, b: str) -> Edge:
        for e in self._adj.get(a, ()):
            if e.other(a) == b:
                return e
        raise DiagramError(f"no edge between {a!r} and {b!r}")

    def incidence_count(self, v: str) -> int:
        """Edges + ordinary arrowheads at v (doubled arrowheads count once)."""
        return len(self._adj[v]) + len(self._farrows_at[v])

    def is_node(self, v: str) -> bool:
        if len(self.vertices) == 1:
            return True
        return self.incidence_count(v) >= 3

    def nodes(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.is_node(v))

    def boundary_vertices(self) -> tuple[str, ...]:
        return tuple(
            v for v in self.vertices if not self.is_node(v) and self.incidence_count(v) == 1
        )

    def chain_vertices(self) -> tuple[str, ...]:
        """Valency-2 vertices: tolerated in the data model, rejected by most ops."""
        return tuple(
            v for v in self.vertices if not self.is_node(v) and self.incidence_count(v) == 2
        )

    def special_edges(self) -> tuple[Edge, ...]:
        return tuple(
            e for e in self.edges if self.is_node(e.a) and self.is_node(e.b)
        )

    def is_connected_tree(self) -> bool:
        if not self.vertices:
            return False
        if len(self.edges) != len(self.vertices) - 1:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for e in self._adj[v]:
                u = e.other(v)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.vertices)

    def require_standard(self):
        """Most operations need a tree with no valency-2 chain vertices."""
        if not self.is_connected_tree():
            raise DiagramError("diagram is not a connected tree")
        chains = self.chain_vertices()
        if chains:
            raise DiagramError(
                f"valency-2 vertices present ({', '.join(chains)}); normalize first"
            )

    # -- valencies at the three decoration levels --------------------------

    def delta(self, v: str) -> int:
        """Valency with every arrowhead stripped: weight>=2 arrowheads become
        boundary legs, weight-1 arrowheads vanish entirely."""
        return len(self._adj[v]) + sum(1 for a in self._farrows_at[v] if a.weight >= 2)

    def delta_f(self, v: str) -> int:
        """Valency counting ordinary arrowheads (the F level)."""
        return len(self._adj[v]) + len(self._farrows_at[v])

    def delta_fw(self, v: str) -> int:
        """Valency counting all arrowheads; a doubled arrowhead is one incidence."""
        return self.delta_f(v) + sum(1 for w in self.warrows if w.at == v)

    # -- paths and linking products ----------------------------------------

    def path(self, u: str, v: str) -> list[str]:
        """Vertex path from u to v in the tree."""
        if u == v:
            return [u]
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                break
            for e in self._adj[x]:
                y = e.other(x)
                if y not in prev:
                    prev[y] = x
                    stack.append(y)
        if v not in prev:
            raise DiagramError(f"no path from {u!r} to {v!r}")
        out = [v]
        while out[-1] != u:
            out.append(prev[out[-1]])
        out.reverse()
        return out

    def _target_anchor(self, target: str) -> tuple[str, str | None]:
        """Resolve a target (vertex / farrow / warrow id) to (vertex, arrow edge).

        The second component names the farrow whose supporting edge leads to the
        target, or None when the target is the vertex itself (this includes
        dashed arrows attached at a vertex: their supporting weight is 1 and
        contributes nothing beyond the vertex)."""
        if target in self._vset():
            return target, None
        if target in self._farrow_by_id:
            a = self._farrow_by_id[target]
            return a.at, a.id
        if target in self._warrow_by_id:
            w = self._warrow_by_id[target]
            if w.doubles is not None:
                a = self._farrow_by_id[w.doubles]
                return a.at, a.id
            return w.at, None
        raise DiagramError(f"unknown linking target {target!r}")

    def linking_product(self, v: str, target: str, exclude_edge: Edge | None = None) -> int:
        """Product of weights adjacent to, but not on, the path from v to target.

        All weighted incidences count: edge ends and arrow supporting edges.
        ``exclude_edge`` drops one edge at v from the adjacent set, which is the
        edge-endpoint variant used by the splice formulas."""
        anchor, via_farrow = self._target_anchor(target)
        path = self.path(v, anchor)
        on_path: set[tuple[str, str]] = set()
        for x, y in zip(path, path[1:]):
            on_path.add((x, y))
            on_path.add((y, x))
        prod = 1
        for x in path:
            for e in self._adj[x]:
                if (x, e.other(x)) in on_path:
                    continue
                if exclude_edge is not None and x == v and e.key == exclude_edge.key:
                    continue
                prod *= e.weight_at(x)
            for a in self._farrows_at[x]:
                if x == anchor and via_farrow == a.id:
                    continue
                prod *= a.weight
        return prod

    def linking_product_from_edge(self, e: Edge, side_vertex: str, target: str) -> int:
        """l_{e,target}: weights on the ``side_vertex`` side only."""
        return self.linking_product(side_vertex, target, exclude_edge=e)

    def side_vertices(self, v: str, e: Edge) -> list[str]:
        """Vertices of the connected component of diagram minus v in direction e."""
        start = e.other(v)
        seen = {v, start}
        out = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for f in self._adj[x]:
                y = f.other(x)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    stack.append(y)
        return out

    # -- derived decorations -------------------------------------------------

    def f_divisor(self) -> dict[str, int]:
        return {a.id: a.mult for a in self.farrows}

    def w_slots(self) -> list[str]:
        """Legal attachment slots for W: boundary vertices, nodes, farrows."""
        return [v for v in self.vertices if not self.chain_vertex(v)] + [
            a.id for a in self.farrows
        ]

    def boundary_slots(self) -> list[str]:
        """W slots at boundary vertices and nodes only (no arrowhead doubles)."""
        return [v for v in self.vertices if not self.chain_vertex(v)]

    def chain_vertex(self, v: str) -> bool:
        return not self.is_node(v) and self.incidence_count(v) == 2

    def w_divisor(self) -> dict[str, int]:
        """Stored W as a slot map: slot id -> multiplicity (= value - 1)."""
        out: dict[str, int] = {}
        for w in self.warrows:
            slot = w.at if w.at is not None else w.doubles
            if slot in out:
                raise DiagramError(f"two warrows on slot {slot!r}")
            out[slot] = w.value - 1
        return out

    # -- rebuilding ----------------------------------------------------------

    def with_decorations(self, f: dict[str, int] | None = None, w: dict[str, int] | None = None) -> "SpliceDiagram":
        """Copy with farrow multiplicities / warrow records replaced.

        ``f`` maps farrow id -> multiplicity.  ``w`` maps slot (vertex id or
        farrow id) -> multiplicity i-1; slots with multiplicity 0 are dropped.
        """
        farrows = list(self.farrows)
        if f is not None:
            farrows = [replace(a, mult=f.get(a.id, 0)) for a in farrows]
        warrows = list(self.warrows)
        if w is not None:
            warrows = []
            fids = {a.id for a in self.farrows}
            for slot, mult in sorted(w.items()):
                if mult == 0:
                    continue
                wid = f"~W.{slot}"
                if slot in fids:
                    warrows.append(Warrow(id=wid, value=mult + 1, doubles=slot))
                else:
                    warrows.append(Warrow(id=wid, value=mult + 1, at=slot))
        return SpliceDiagram(self.vertices, self.edges, farrows, warrows)

    def __repr__(self):
        return (
            f"SpliceDiagram(vertices={len(self.vertices)}, edges={len(self.edges)}, "
            f"farrows={len(self.farrows)}, warrows={len(self.warrows)})"
        )


# ---------------------------------------------------------------------------
# validation


@dataclass
class Violation:
    kind: str
    where: str
    detail: str

    def __str__(self):
        return f"[{self.kind}] {self.where}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, where: str, detail: str):
        self.violations.append(Violation(kind, where, detail))

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def edge_determinant(d: SpliceDiagram, e: Edge) -> int:
    """q_e = d_ve * d_we - (product of all other weights at both end nodes)."""
    if not (d.is_node(e.a) and d.is_node(e.b)):
        raise DiagramError(f"edge {e.key} is not special (must join two nodes)")
    q = e.wa * e.wb
    rest = 1
    for v in (e.a, e.b):
        for f in d.edges_at(v):
            if f.key != e.key:
                rest *= f.weight_at(v)
        for a in d.farrows_at(v):
            rest *= a.weight
    return q - rest


def validate(d: SpliceDiagram) -> ValidationReport:
    """Check every diagram invariant; violations are data, not exceptions."""
    rep = ValidationReport()
    if not d.vertices:
        rep.add("structure", "-", "empty diagram")
        return rep
    if not d.is_connected_tree():
        rep.add("structure", "-", "underlying graph is not a connected tree")
        return rep
    for e in d.edges:
        if e.wa < 1 or e.wb < 1:
            rep.add("weight", f"edge {e.key}", f"weights ({e.wa},{e.wb}) must be >= 1")
    for a in d.farrows:
        if not d.is_node(a.at):
            rep.add("farrow", a.id, f"attached at non-node vertex {a.at!r}")
    # at most one warrow per boundary vertex and per slot
    slot_seen: dict[str, str] = {}
    for w in d.warrows:
        slot = w.at if w.at is not None else w.doubles
        if slot in slot_seen:
            rep.add("warrow", w.id, f"slot {slot!r} already carries warrow {slot_seen[slot]!r}")
        slot_seen[slot] = w.id
        if w.at is not None and not d.is_node(w.at) and d.incidence_count(w.at) != 1:
            rep.add("warrow", w.id, f"attached at valency-2 vertex {w.at!r}")
    # pairwise coprime weights at every node
    for v in d.nodes():
        weights = [e.weight_at(v) for e in d.edges_at(v)] + [
            a.weight for a in d.farrows_at(v)
        ]
        for i in range(len(weights)):
            for j in range(i + 1, len(weights)):
                if gcd(weights[i], weights[j]) != 1:
                    rep.add(
                        "coprimality",
                        f"node {v}",
                        f"weights {weights[i]} and {weights[j]} share a factor",
                    )
    # positive edge determinants
    for e in d.special_edges():
        q = edge_determinant(d, e)
        if q <= 0:
            rep.add("edge-determinant", f"edge {e.key}", f"q_e = {q} <= 0")
    # (N_a, i_a) != (0, 0) for every arrowhead
    for a in d.farrows:
        dbl = d.warrow_doubling(a.id)
        i_a = dbl.value if dbl is not None else 1
        if a.mult == 0 and i_a == 0:
            rep.add("arrow-data", a.id, "(N, i) = (0, 0)")
    for w in d.warrows:
        if w.at is not None and w.value == 0:
            rep.add("arrow-data", w.id, "pure dashed arrow with i = 0")
    return rep


# ---------------------------------------------------------------------------
# normalization


def normalize(d: SpliceDiagram) -> SpliceDiagram:
    """Minimal equivalent representation.

    Deletes weight-1 bare boundary legs, re-attaches warrows from weight-1
    legs to the node, and merges valency-2 arrowhead carriers into
    node-supported arrowheads.  Idempotent.
    """
    changed = True
    while changed:
        changed = False
        # boundary vertex at the end of a weight-1 leg
        for v in d.boundary_vertices():
            if d.farrows_at(v):
                continue
            (e,) = d.edges_at(v)
            n = e.other(v)
            if e.weight_at(n) != 1 or e.weight_at(v) != 1:
                continue
            if not d.is_node(n):
                continue
            wlist = d.warrows_at(v)
            if len(wlist) > 1:
                continue
            vertices = [x for x in d.vertices if x != v]
            edges = [f for f in d.edges if f.key != e.key]
            warrows = list(d.warrows)
            if wlist:
                w = wlist[0]
                warrows = [x for x in warrows if x.id != w.id]
                warrows.append(Warrow(id=w.id, value=w.value, at=n))
            d = SpliceDiagram(vertices, edges, d.farrows, warrows)
            changed = True
            break
        if changed:
            continue
        # valency-2 vertex carrying a weight-1 arrowhead on a weight-1 stub
        for v in d.vertices:
            if d.is_node(v) or d.incidence_count(v) != 2:
                continue
            arrows = d.farrows_at(v)
            if len(arrows) != 1 or len(d.edges_at(v)) != 1:
                continue
            a = arrows[0]
            (e,) = d.edges_at(v)
            if a.weight != 1 or e.weight_at(v) != 1:
                continue
            n = e.other(v)
            vertices = [x for x in d.vertices if x != v]
            edges = [f for f in d.edges if f.key != e.key]
            farrows = [x for x in d.farrows if x.id != a.id]
            farrows.append(Farrow(id=a.id, at=n, weight=e.weight_at(n), mult=a.mult))
            warrows = []
            for w in d.warrows:
                if w.at == v:
                    # a dashed arrow on the same carrier becomes a double
                    warrows.append(Warrow(id=w.id, value=w.value, doubles=a.id))
                else:
                    warrows.append(w)
            d = SpliceDiagram(vertices, edges, farrows, warrows)
            changed = True
            break
    return d


# ---------------------------------------------------------------------------
# plumbing graphs


@dataclass(frozen=True)
class PVertex:
    id: str
    self_int: int


class PlumbingGraph:
    """Resolution dual graph: genus-0 vertices with self-intersections."""

    def __init__(self, vertices, edges=(), farrows=(), warrows=()):
        self.vertices: tuple[PVertex, ...] = tuple(
            v if isinstance(v, PVertex) else PVertex(*v) for v in vertices
        )
        self.edges: tuple[tuple[str, str], ...] = tuple(
            tuple(sorted(e)) for e in edges
        )
        self.farrows: tuple[Farrow, ...] = tuple(
            a if isinstance(a, Farrow) else Farrow(*a) for a in farrows
        )
        self.warrows: tuple[Warrow, ...] = tuple(warrows)
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise DiagramError("duplicate vertex ids")
        self._index = {v.id: i for i, v in enumerate(self.vertices)}
        seen = set(ids)
        for a in self.farrows:
            if a.id in seen:
                raise DiagramError(f"duplicate id {a.id!r}")
            seen.add(a.id)
            if a.at not in self._index:
                raise DiagramError(f"farrow {a.id!r} at unknown vertex")
        fids = {a.id for a in self.farrows}
        for w in self.warrows:
            if w.id in seen:
                raise DiagramError(f"duplicate id {w.id!r}")
            seen.add(w.id)
            if w.at is not None and w.at not in self._index:
                raise DiagramError(f"warrow {w.id!r} at unknown vertex")
            if w.doubles is not None and w.doubles not in fids:
                raise DiagramError(f"warrow {w.id!r} doubles unknown farrow")
        for a, b in self.edges:
            if a not in self._index or b not in self._index or a == b:
                raise DiagramError(f"bad edge ({a}, {b})")
        self._adj: dict[str, list[str]] = {v.id: [] for v in self.vertices}
        for a, b in self.edges:
            self._adj[a].append(b)
            self._adj[b].append(a)

    def neighbours(self, v: str) -> tuple[str, ...]:
        return tuple(self._adj[v])

    def farrows_at(self, v: str) -> tuple[Farrow, ...]:
        return tuple(a for a in self.farrows if a.at == v)

    def warrow_doubling(self, farrow_id: str) -> Warrow | None:
        for w in self.warrows:
            if w.doubles == farrow_id:
                return w
        return None

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def valency_f(self, v: str) -> int:
        return self.degree(v) + len(self.farrows_at(v))

    def valency_fw(self, v: str) -> int:
        return self.valency_f(v) + sum(1 for w in self.warrows if w.at == v)

    def self_int(self, v: str) -> int:
        return self.vertices[self._index[v]].self_int

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0].id}
        stack = [self.vertices[0].id]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.vertices)

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.vertices) - 1

    def minus_intersection_matrix(self, subset=None) -> list[list[int]]:
        ids = [v.id for v in self.vertices] if subset is None else list(subset)
        pos = {v: i for i, v in enumerate(ids)}
        n = len(ids)
        m = [[0] * n for _ in range(n)]
        for v in ids:
            m[pos[v]][pos[v]] = -self.self_int(v)
        for a, b in self.edges:
            if a in pos and b in pos:
                m[pos[a]][pos[b]] -= 1
                m[pos[b]][pos[a]] -= 1
        return m

    def det_minus_I(self, subset=None) -> int:
        return _int_det(self.minus_intersection_matrix(subset))

    def is_negative_definite(self) -> bool:
        """Exact Sylvester criterion on -I(G)."""
        m = [[Fraction(x) for x in row] for row in self.minus_intersection_matrix()]
        n = len(m)
        for k in range(n):
            if m[k][k] <= 0:
                return False
            for i in range(k + 1, n):
                if m[i][k]:
                    r = m[i][k] / m[k][k]
                    for j in range(k, n):
                        m[i][j] -= r * m[k][j]
        return True

    def is_unimodular(self) -> bool:
        return self.is_negative_definite() and self.det_minus_I() == 1

    def component_vertices(self, v: str, towards: str) -> list[str]:
        """Vertices of the component of G minus v containing ``towards``."""
        seen = {v, towards}
        out = [towards]
        stack = [towards]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    stack.append(y)
        return out

    def f_divisor(self) -> dict[str, int]:
        return {a.id: a.mult for a in self.farrows}

    def w_divisor(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for w in self.warrows:
            slot = w.at if w.at is not None else w.doubles
            if slot in out:
                raise DiagramError(f"two warrows on slot {slot!r}")
            out[slot] = w.value - 1
        return out

    def __repr__(self):
        return (
            f"PlumbingGraph(vertices={len(self.vertices)}, edges={len(self.edges)}, "
            f"farrows={len(self.farrows)})"
        )


def _int_det(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant on an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def validate_plumbing(g: PlumbingGraph, require_unimodular: bool = False) -> ValidationReport:
    rep = ValidationReport()
    if not g.vertices:
        rep.add("structure", "-", "empty graph")
        return rep
    if not g.is_connected():
        rep.add("structure", "-", "graph is not connected")
        return rep
    if not g.is_tree():
        rep.add("structure", "-", "graph has a cycle (genus-0 IHS links are trees)")
    if not g.is_negative_definite():
        rep.add("definiteness", "-", "-I(G) is not positive definite")
        return rep
    det = g.det_minus_I()
    if require_unimodular and det != 1:
        rep.add("determinant", "-", f"det(-I) = {det} != 1 (not an IHS link)")
    for w in g.warrows:
        if w.at is not None:
            if g.valency_f(w.at) > 1:
                rep.add(
                    "warrow",
                    w.id,
                    f"attached at {w.at!r} which is not a boundary component",
                )
        if w.at is not None and w.value == 0:
            rep.add("arrow-data", w.id, "pure dashed arrow with i = 0")
    for a in g.farrows:
        dbl = g.warrow_doubling(a.id)
        i_a = dbl.value if dbl is not None else 1
        if a.mult == 0 and i_a == 0:
            rep.add("arrow-data", a.id, "(N, i) = (0, 0)")
    return rep


# ---------------------------------------------------------------------------
# plumbing -> splice conversion


def plumbing_to_splice(g: PlumbingGraph) -> SpliceDiagram:
    """Collapse strings to weighted edges; near-node weights are det(-I) of the
    subtree cut off in that direction; arrowheads on strings become
    node-supported arrowheads with the string determinant as weight."""
    if not g.is_connected():
        raise DiagramError("disconnected plumbing graph")
    if not g.is_tree():
        raise DiagramError("plumbing graph is not a tree")
    if not g.is_unimodular():
        raise DiagramError(
            "splice calculus requires an unimodular negative-definite graph"
        )
    node_ids = [v.id for v in g.vertices if g.valency_f(v.id) >= 3]
    if not node_ids:
        return _degenerate_splice(g)
    vertices: list[str] = list(node_ids)
    edges: list[Edge] = []
    farrows: list[Farrow] = []
    warrow_out: list[Warrow] = []
    done_pairs: set[tuple[str, str]] = set()
    nodes = set(node_ids)

    def walk(v: str, first: str) -> tuple[list[str], str | None]:
        """Follow the string from v through first; return (chain, end node or None)."""
        chain = []
        prev, cur = v, first
        while cur not in nodes:
            chain.append(cur)
            nxt = [x for x in g.neighbours(cur) if x != prev]
            if not nxt:
                return chain, None
            prev, cur = cur, nxt[0]
        return chain, cur

    def check_interior(interior: list[str]):
        for x in interior:
            if g.farrows_at(x) or any(w.at == x for w in g.warrows):
                raise DiagramError(f"decoration on string-interior vertex {x!r}")

    for v in node_ids:
        for u in g.neighbours(v):
            chain, end = walk(v, u)
            if end is not None:
                pair = tuple(sorted((v, end)))
                if pair in done_pairs:
                    continue
                done_pairs.add(pair)
                check_interior(chain)
                wa = g.det_minus_I(g.component_vertices(v, u))
                wb = g.det_minus_I(g.component_vertices(end, chain[-1] if chain else v))
                edges.append(Edge(v, end, wa, wb))
            else:
                check_interior(chain[:-1])
                det = g.det_minus_I(g.component_vertices(v, u))
                tip = chain[-1]
                tip_arrows = g.farrows_at(tip)
                if tip_arrows:
                    # boundary vertex with an arrowhead becomes a node arrowhead
                    a = tip_arrows[0]
                    farrows.append(Farrow(id=a.id, at=v, weight=det, mult=a.mult))
                    for w in g.warrows:
                        if w.at == tip:
                            raise DiagramError(
                                f"warrow {w.id!r} shares boundary component with {a.id!r}"
                            )
                else:
                    vertices.append(tip)
                    edges.append(Edge(v, tip, det, 1))
                    for w in g.warrows:
                        if w.at == tip:
                            warrow_out.append(Warrow(id=w.id, value=w.value, at=tip))
    for v in node_ids:
        for a in g.farrows_at(v):
            farrows.append(Farrow(id=a.id, at=v, weight=1, mult=a.mult))
        for w in g.warrows:
            if w.at == v:
                raise DiagramError(f"warrow {w.id!r} attached at a rupture vertex")
    for w in g.warrows:
        if w.doubles is not None:
            warrow_out.append(w)
    return SpliceDiagram(vertices, edges, farrows, warrow_out)


def _degenerate_splice(g: PlumbingGraph) -> SpliceDiagram:
    """No rupture vertex: the graph is a chain.  Supported when all arrows sit
    at one vertex (the link is S^3 and every arrow component is an unknot
    fiber); the result is a single-vertex diagram."""
    carriers = {a.at for a in g.farrows} | {w.at for w in g.warrows if w.at}
    if len(carriers) > 1:
        raise DiagramError(
            "degenerate chain with decorations at several vertices is unsupported"
        )
    v = next(iter(carriers)) if carriers else g.vertices[0].id
    farrows = [Farrow(id=a.id, at=v, weight=1, mult=a.mult) for a in g.farrows]
    warrows = []
    for w in g.warrows:
        if w.doubles is not None:
            warrows.append(w)
        elif w.at is not None:
            warrows.append(Warrow(id=w.id, value=w.value, at=v))
    return SpliceDiagram([v], [], farrows, warrows)


# ---------------------------------------------------------------------------
# blowup calculus


def _fresh_vertex(g: PlumbingGraph, stem: str) -> str:
    used = {v.id for v in g.vertices}
    i = 0
    while f"{stem}{i}" in used:
        i += 1
    return f"{stem}{i}"


def blowup(g: PlumbingGraph, locus) -> PlumbingGraph:
    """Blow up a generic point of a vertex, an edge, or an arrow incidence.

    ``locus`` is ``("vertex", v)``, ``("edge", (a, b))`` or ``("arrow", id)``.
    """
    kind, what = locus
    new = _fresh_vertex(g, "b")
    verts = {v.id: v.self_int for v in g.vertices}
    edges = list(g.edges)
    farrows = list(g.farrows)
    if kind == "vertex":
        if what not in verts:
            raise DiagramError(f"unknown vertex {what!r}")
        verts[what] -= 1
        vertices = [PVertex(i, s) for i, s in verts.items()] + [PVertex(new, -1)]
        edges.append(tuple(sorted((what, new))))
        return PlumbingGraph(vertices, edges, farrows, g.warrows)
    if kind == "edge":
        a, b = sorted(what)
        if (a, b) not in edges:
            raise DiagramError(f"unknown edge ({a}, {b})")
        edges.remove((a, b))
        verts[a] -= 1
        verts[b] -= 1
        vertices = [PVertex(i, s) for i, s in verts.items()] + [PVertex(new, -1)]
        edges.extend([tuple(sorted((a, new))), tuple(sorted((b, new)))])
        return PlumbingGraph(vertices, edges, farrows, g.warrows)
    if kind == "arrow":
        match = [a for a in farrows if a.id == what]
        warr = [w for w in g.warrows if w.id == what and w.at is not None]
        if match:
            a = match[0]
            verts[a.at] -= 1
            vertices = [PVertex(i, s) for i, s in verts.items()] + [PVertex(new, -1)]
            edges.append(tuple(sorted((a.at, new))))
            farrows = [x for x in farrows if x.id != a.id]
            farrows.append(Farrow(id=a.id, at=new, weight=1, mult=a.mult))
            return PlumbingGraph(vertices, edges, farrows, g.warrows)
        if warr:
            w = warr[0]
            verts[w.at] -= 1
            vertices = [PVertex(i, s) for i, s in verts.items()] + [PVertex(new, -1)]
            edges.append(tuple(sorted((w.at, new))))
            warrows = [x for x in g.warrows if x.id != w.id]
            warrows.append(Warrow(id=w.id, value=w.value, at=new))
            return PlumbingGraph(vertices, edges, farrows, warrows)
        raise DiagramError(f"unknown arrow {what!r}")
    raise DiagramError(f"unknown blowup locus kind {kind!r}")
