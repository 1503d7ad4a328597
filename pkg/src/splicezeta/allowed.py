"""Numerical semigroups, the semigroup condition, allowed divisors, and the
pole-to-eigenvalue checker.

A dashed-arrow decoration set W is allowed when, star by star after full
splice decomposition, the boundary-leg values obey the divisibility
implication: with r ordinary arrowheads at the star and n boundary legs, if
d_l | i_l for at least n+r-2 leg indexes then i_l = d_l for at least n+r-2 of
them (vacuous for r >= 3).  Dashed arrows drawn at the node participate with
d_l = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagrams import SpliceDiagram
from .divisors import PDivisor, f_of, w_of
from .exact import UnityRoot
from .monodromy import eig_contains
from .splicing import star_decomposition
from .zeta import zeta_splice


@dataclass(frozen=True)
class SemigroupQuery:
    target: int
    generators: tuple[int, ...]


def semigroup_member(query: SemigroupQuery | int, generators=None) -> bool:
    """Is the target a nonnegative integer combination of the generators?

    Boolean dynamic programming over 0..target."""
    if isinstance(query, SemigroupQuery):
        target, gens = query.target, query.generators
    else:
        target, gens = query, tuple(generators or ())
    if target < 0:
        raise ValueError("target must be nonnegative")
    if target == 0:
        return True
    gens = tuple(g for g in gens if g > 0)
    if not gens:
        return False
    reach = [False] * (target + 1)
    reach[0] = True
    for k in range(1, target + 1):
        for g in gens:
            if g <= k and reach[k - g]:
                reach[k] = True
                break
    return reach[target]


@dataclass
class SemigroupFailure:
    node: str
    edge: tuple[str, str]
    weight: int
    generators: tuple[int, ...]

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return (
            f"node {self.node}, edge {self.edge}: {self.weight} not in <{gens}>"
        )


@dataclass
class SemigroupReport:
    ok: bool
    failures: list[SemigroupFailure] = field(default_factory=list)
    checked: int = 0


def semigroup_condition(d: SpliceDiagram, f: PDivisor | None = None) -> SemigroupReport:
    """For every node/edge pair whose cut-off side carries no arrowheads:
    the edge weight at the node must lie in the semigroup generated by the
    linking products towards the boundary vertices of that side.

    The ``f`` argument is accepted for signature symmetry; the condition
    depends only on the support of F, which the diagram's arrowheads carry."""
    d.require_standard()
    failures: list[SemigroupFailure] = []
    checked = 0
    for v in d.nodes():
        for e in d.edges_at(v):
            side = d.side_vertices(v, e)
            side_set = set(side)
            if any(a.at in side_set for a in d.farrows):
                continue
            checked += 1
            far = e.other(v)
            gens = tuple(
                sorted(
                    d.linking_product(far, w, exclude_edge=e)
                    for w in side
                    if d.incidence_count(w) == 1
                )
            )
            if not semigroup_member(e.weight_at(v), gens):
                failures.append(
                    SemigroupFailure(node=v, edge=(v, far), weight=e.weight_at(v), generators=gens)
                )
    return SemigroupReport(ok=not failures, failures=failures, checked=checked)


# ---------------------------------------------------------------------------
# allowedness


@dataclass
class StarCheck:
    node: str
    r: int
    legs: list[tuple[int, int]]  # (d_l, i_l) including induced and node-drawn ones
    divisible: list[int]
    matched: list[int]
    ok: bool
    reason: str | None

    def __str__(self):
        state = "ok" if self.ok else f"violated ({self.reason})"
        legs = ", ".join(f"d={a} i={b}" for a, b in self.legs)
        return f"star {self.node} (r={self.r}): [{legs}] {state}"


@dataclass
class AllowedVerdict:
    allowed: bool
    stars: list[StarCheck]
    nonzero_ok: bool
    nonzero_detail: list[str]

    def __str__(self):
        head = "allowed" if self.allowed else "not allowed"
        lines = [head] + [str(s) for s in self.stars]
        lines += [f"nonzero condition: {d}" for d in self.nonzero_detail]
        return "\n".join(lines)


def _star_legs(star: SpliceDiagram) -> tuple[int, list[tuple[int, int, str]]]:
    """(r, legs) of a one-node diagram: r ordinary arrowheads; legs as
    (d_l, i_l, slot) covering boundary vertices and node-drawn dashed arrows."""
    (v,) = star.nodes()
    wm = star.w_divisor()
    r = len(star.farrows)
    legs: list[tuple[int, int, str]] = []
    for e in star.edges_at(v):
        u = e.other(v)
        legs.append((e.weight_at(v), wm.get(u, 0) + 1, u))
    if v in wm:
        legs.append((1, wm[v] + 1, v))
    return r, legs


def check_star_allowed(star: SpliceDiagram) -> StarCheck:
    """The divisibility implication on one decorated star."""
    (v,) = star.nodes()
    r, legs = _star_legs(star)
    n = len(legs)
    divisible = [k for k, (dl, il, _) in enumerate(legs) if il % dl == 0]
    matched = [k for k, (dl, il, _) in enumerate(legs) if il == dl]
    need = n + r - 2
    ok = True
    reason = None
    if r <= 2 and n > 0 and len(divisible) >= need and len(matched) < need:
        ok = False
        slots = [legs[k][2] for k in divisible if k not in matched]
        reason = (
            f"d | i at {len(divisible)} legs (need i = d at {need}, have {len(matched)}); "
            f"offending slots: {', '.join(slots)}"
        )
    return StarCheck(
        node=v, r=r, legs=[(a, b) for a, b, _ in legs],
        divisible=divisible, matched=matched, ok=ok, reason=reason,
    )


def is_allowed(
    d: SpliceDiagram, f: PDivisor | None = None, w: PDivisor | None = None
) -> AllowedVerdict:
    """Full allowedness verdict: the nonzero condition on the given data plus
    the star-wise divisibility implications on the canonical decomposition."""
    d.require_standard()
    fm = f_of(d, f)
    wm = w_of(d, w)
    nonzero_detail: list[str] = []
    fids = {a.id for a in d.farrows}
    for slot, mult in wm.items():
        if slot not in fids and mult + 1 == 0:
            nonzero_detail.append(f"pure dashed arrow at {slot!r} has i = 0")
    for a in d.farrows:
        if fm.get(a.id, 0) == 0 and wm.get(a.id, 0) + 1 == 0:
            nonzero_detail.append(f"arrowhead {a.id!r} has (N, i) = (0, 0)")
    stars = star_decomposition(d, fm, wm)
    checks = []
    for node in sorted(stars):
        star = stars[node]
        swm = star.w_divisor()
        for slot, mult in swm.items():
            if slot not in {a.id for a in star.farrows} and mult + 1 == 0:
                nonzero_detail.append(
                    f"induced dashed arrow at {slot!r} (star {node}) has i = 0"
                )
        checks.append(check_star_allowed(star))
    allowed = not nonzero_detail and all(c.ok for c in checks)
    return AllowedVerdict(
        allowed=allowed,
        stars=checks,
        nonzero_ok=not nonzero_detail,
        nonzero_detail=nonzero_detail,
    )


# ---------------------------------------------------------------------------
# the pole -> eigenvalue property


@dataclass
class PoleReport:
    s0: Fraction
    order: int
    leading: Fraction
    eigenvalue: UnityRoot
    in_eig: bool


@dataclass
class Goal1Report:
    holds: bool
    allowed: bool
    poles: list[PoleReport]

    @property
    def counterexamples(self) -> list[PoleReport]:
        return [p for p in self.poles if not p.in_eig]

    def __str__(self):
        lines = [
            f"W allowed: {self.allowed}",
            f"every pole lands in Eig: {self.holds}",
        ]
        for p in self.poles:
            mark = "in Eig" if p.in_eig else "NOT in Eig"
            lines.append(
                f"  pole s0 = {p.s0} (order {p.order}) -> exp(2 pi i s0) = {p.eigenvalue}: {mark}"
            )
        return "\n".join(lines)


def check_goal1(
    d: SpliceDiagram, f: PDivisor | None = None, w: PDivisor | None = None
) -> Goal1Report:
    """Map every pole of the zeta function to a root of unity and test Eig
    membership.  Allowedness is reported, not required."""
    fm = f_of(d, f)
    wm = w_of(d, w)
    verdict = is_allowed(d, fm, wm)
    z = zeta_splice(d, fm, wm)
    reports = []
    for p in z.poles():
        lam = UnityRoot.from_exponent(p.location)
        reports.append(
            PoleReport(
                s0=p.location,
                order=p.order,
                leading=p.leading,
                eigenvalue=lam,
                in_eig=eig_contains(d, lam, fm),
            )
        )
    return Goal1Report(
        holds=all(p.in_eig for p in reports), allowed=verdict.allowed, poles=reports
    )
