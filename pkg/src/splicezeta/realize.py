"""Constructing allowed divisors whose zeta poles hit a prescribed eigenvalue.

Three cooperating engines:

* a congruence solver on stars (pairwise-coprime weights make the linear
  congruence for nu explicitly solvable, with the divisibility pattern of the
  leg values pinned by the target residue);
* a one-step extension of an allowed divisor across a special edge, with the
  obstructed cases detected and reported;
* a bounded exhaustive search over decoration windows, used as fallback and
  as an independent oracle at desk scale.

Every candidate is certified from scratch: the divisor must pass the
allowedness check and the reduced zeta function must have a pole whose
exponential equals the requested root of unity.  Nothing is trusted from the
construction itself.

By default the searched dashed arrows live at boundary vertices; the double
of an ordinary arrowhead is used only when that arrowhead itself is the
eigenvalue source.  Pass ``include_doubles=True`` to open every doubling slot
to the search (this strictly enlarges the reachable eigenvalue set on some
diagrams with arrowhead multiplicities > 1).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .allowed import is_allowed
from .diagrams import DiagramError, Edge, SpliceDiagram
from .divisors import PDivisor, f_of, nu_values, vertex_multiplicities
from .exact import UnityRoot, solve_linear_congruence
from .monodromy import alexander, eig_contains
from .splicing import induced_value, splice, star_decomposition
from .zeta import zeta_splice


class NotAnEigenvalueError(ValueError):
    """The requested root of unity is not in Eig for this diagram."""


class StarRootError(ValueError):
    """The requested root of unity is not a root of this star's Alexander polynomial."""


class ExtensionObstructedError(ValueError):
    """No allowed extension exists for the requested flat divisor."""


@dataclass
class Realization:
    w: dict[str, int]
    s0: Fraction
    order: int
    leading: Fraction
    eigenvalue: UnityRoot
    source: str

    def values(self) -> dict[str, int]:
        """Slot -> i values (multiplicity + 1)."""
        return {s: m + 1 for s, m in self.w.items()}


@dataclass
class NodeCongruence:
    node: str
    modulus: int
    base: int
    target: int
    coefficients: dict[str, int]
    reductions: list[tuple[int, dict[str, int], int]] = field(default_factory=list)

    def describe(self) -> str:
        terms = " + ".join(f"{c}*x[{s}]" for s, c in self.coefficients.items())
        lines = [
            f"node {self.node}: need {self.base} + {terms} = {self.target} (mod {self.modulus})"
        ]
        for m, coefs, t in self.reductions:
            tt = " + ".join(f"{c}*x[{s}]" for s, c in coefs.items() if c)
            lines.append(f"  mod {m}: {tt or '0'} = {t}")
        return "\n".join(lines)


@dataclass
class RealizeOutcome:
    status: str  # realized | unrealizable-within-bound
    found: list[Realization]
    diagnostics: list[str]
    congruences: list[NodeCongruence]
    explored: dict[str, int]

    @property
    def realized(self) -> bool:
        return self.status == "realized"


# ---------------------------------------------------------------------------
# linear structure of nu and of the induced star legs


def _w_anchor(d: SpliceDiagram, slot: str) -> str:
    fids = {a.id for a in d.farrows}
    return d.farrow(slot).at if slot in fids else slot


def nu_linear_form(d: SpliceDiagram, v: str, slots: list[str]) -> tuple[int, dict[str, int]]:
    """nu_v = base + sum coef_s * mult_s over the given W slots."""
    base = nu_values(d, {})[v]
    coefs = {s: d.linking_product(v, s) for s in slots}
    return base, coefs


@dataclass
class _LegForm:
    d: int
    base: int
    coefs: dict[str, int]
    own_slot: str | None  # the directly-settable slot, if the leg is original

    def value(self, x: dict[str, int]) -> int:
        return self.base + sum(c * x.get(s, 0) for s, c in self.coefs.items())


@dataclass
class _StarForm:
    node: str
    r: int
    legs: list[_LegForm]

    def allowed(self, x: dict[str, int]) -> bool:
        vals = [(leg.d, leg.value(x)) for leg in self.legs]
        if any(i == 0 for _, i in vals):
            return False
        n = len(vals)
        need = n + self.r - 2
        if self.r > 2 or n == 0:
            return True
        divisible = sum(1 for dl, il in vals if il % dl == 0)
        matched = sum(1 for dl, il in vals if il == dl)
        return not (divisible >= need and matched < need)


def star_forms(d: SpliceDiagram, slots: list[str]) -> list[_StarForm]:
    """Symbolic star decomposition: each star's legs as affine forms in the
    searched slot multiplicities; arrow doubles carry no leg condition."""
    forms: list[_StarForm] = []
    slot_set = set(slots)
    for v in d.nodes():
        legs: list[_LegForm] = []
        r = len(d.farrows_at(v))
        for e in d.edges_at(v):
            u = e.other(v)
            if d.is_node(u):
                side = set(d.side_vertices(v, e))
                if any(a.at in side for a in d.farrows):
                    r += 1
                    continue
                base = induced_value(d, e, v, {})
                coefs = {}
                for s in slots:
                    if _w_anchor(d, s) in side:
                        coefs[s] = induced_value(d, e, v, {s: 1}) - base
                legs.append(_LegForm(d=e.weight_at(v), base=base, coefs=coefs, own_slot=None))
            else:
                own = u if u in slot_set else None
                coefs = {u: 1} if own else {}
                legs.append(_LegForm(d=e.weight_at(v), base=1, coefs=coefs, own_slot=own))
        if v in slot_set:
            legs.append(_LegForm(d=1, base=1, coefs={v: 1}, own_slot=v))
        forms.append(_StarForm(node=v, r=r, legs=legs))
    return forms


def _fast_allowed(forms: list[_StarForm], x: dict[str, int]) -> bool:
    return all(f.allowed(x) for f in forms)


# ---------------------------------------------------------------------------
# certification


def certify(
    d: SpliceDiagram,
    fm: dict[str, int],
    w: dict[str, int],
    lam: UnityRoot,
    source: str,
    effective: bool,
) -> Realization | None:
    """Full independent check: allowed, and a genuine pole maps to lam."""
    w = {s: m for s, m in w.items() if m}
    if effective and any(m < 0 for m in w.values()):
        return None
    try:
        if not is_allowed(d, fm, w).allowed:
            return None
        z = zeta_splice(d, fm, w)
        for p in z.poles():
            if UnityRoot.from_exponent(p.location) == lam:
                return Realization(
                    w=dict(sorted(w.items())),
                    s0=p.location,
                    order=p.order,
                    leading=p.leading,
                    eigenvalue=lam,
                    source=source,
                )
    except DiagramError:
        return None
    return None


def _target_residue(lam: UnityRoot, modulus: int) -> int | None:
    """u with exp(-2 pi i u/modulus) = lam, or None when ord(lam)∤modulus."""
    if modulus % lam.order:
        return None
    return (-lam.p * (modulus // lam.order)) % modulus


def _reduce_solution(x: dict[str, int], coefs: dict[str, int], modulus: int) -> dict[str, int]:
    """Shrink a congruence solution by single-slot period moves (these keep
    the residue class of the congruence and the divisibility pattern)."""
    out = dict(x)
    for s, val in out.items():
        c = coefs.get(s, 0)
        period = modulus // gcd(c, modulus) if c else 1
        if period:
            r = val % period
            if abs(r - period) < abs(r):
                r -= period
            out[s] = r
    return out


def _prime_power_factors(n: int) -> list[int]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            pk = 1
            while m % p == 0:
                pk *= p
                m //= p
            out.append(pk)
        p += 1
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# star realization (standalone star diagrams)


def realize_star(
    star: SpliceDiagram,
    lam: UnityRoot,
    count: int = 1,
    effective: bool = False,
    tries: int = 60,
    rng: random.Random | None = None,
) -> list[Realization]:
    """Allowed divisors on a one-node diagram with a certified pole hitting lam.

    The star's own boundary vertices and its own arrowhead doubles are both
    free slots here (a standalone star owns all its decorations)."""
    star.require_standard()
    nodes = star.nodes()
    if len(nodes) != 1:
        raise DiagramError("realize_star needs a star-shaped diagram")
    (v,) = nodes
    fm = f_of(star, None)
    if alexander(star, fm).root_multiplicity(lam) <= 0:
        raise StarRootError(f"{lam} is not an eigenvalue of this star")
    rng = rng or random.Random(7)
    slots = [e.other(v) for e in star.edges_at(v) if not star.is_node(e.other(v))]
    doubles = [a.id for a in star.farrows]
    out: list[Realization] = []
    seen: set[tuple] = set()

    def push(r: Realization | None):
        if r is None:
            return
        key = tuple(sorted(r.w.items()))
        if key not in seen:
            seen.add(key)
            out.append(r)

    # node path: hit s0 = -nu/N at the central node
    nv = vertex_multiplicities(star, fm)[v]
    u = _target_residue(lam, nv)
    all_slots = slots + doubles
    if u is not None and all_slots:
        base, coefs = nu_linear_form(star, v, all_slots)
        order = all_slots
        cvec = [coefs[s] for s in order]
        sol = solve_linear_congruence(cvec, u - base, nv)
        if sol is not None:
            reduced = _reduce_solution(dict(zip(order, sol)), coefs, nv)
            for t in range(tries):
                x = dict(reduced)
                if t:
                    for s in order:
                        period = nv // gcd(coefs[s], nv)
                        x[s] += period * rng.randint(-2, 2)
                if effective:
                    for s in order:
                        period = nv // gcd(coefs[s], nv)
                        while x[s] < 0:
                            x[s] += period
                push(certify(star, fm, x, lam, f"node:{v}", effective))
                if len(out) >= count:
                    return out[:count]
    # arrow path: hit s0 = -i_a/N_a on a doubling slot
    for a in star.farrows:
        if fm.get(a.id, 0) <= 0 or fm[a.id] % lam.order:
            continue
        na = fm[a.id]
        ua = _target_residue(lam, na)
        for t in range(tries):
            x = {a.id: (ua - 1) + na * t}
            push(certify(star, fm, x, lam, f"arrow:{a.id}", effective))
            if len(out) >= count:
                return out[:count]
    return out[:count]


# ---------------------------------------------------------------------------
# extension across one special edge


def extend_allowed(
    d: SpliceDiagram,
    e,
    w_flat: PDivisor,
    f: PDivisor | None = None,
    include_doubles: bool = False,
) -> dict[str, int]:
    """Extend an allowed divisor from the far half across edge e.

    ``e`` is (vL, vR) or an Edge; the half containing vR is where ``w_flat``
    lives (keyed by that half's slots, including the slot minted by splicing).
    The half containing vL must be star-shaped.  Returns an allowed W on the
    whole diagram restricting to ``w_flat``; raises ExtensionObstructedError
    when the excluded configuration blocks every choice.
    """
    d.require_standard()
    if not isinstance(e, Edge):
        e = d.edge(*e)
    fm = f_of(d, f)
    v_l, v_r = e.a, e.b
    left0, right0 = splice(d, e, fm, {})
    left_vertices = set(left0.diagram.vertices) - {left0.new_slot}
    if any(d.is_node(x) for x in left_vertices if x != v_l):
        raise DiagramError("left half is not star-shaped")
    w_flat = dict(w_flat)
    target_slot = right0.new_slot
    i_prime = w_flat.pop(target_slot, 0) + 1
    # w_flat's remaining slots belong to the original diagram
    partial = {s: m for s, m in w_flat.items() if m}
    for s in partial:
        if _w_anchor(d, s) in left_vertices:
            raise DiagramError(f"flat divisor touches the left half at {s!r}")
    # fixed induced value onto the left star
    j = induced_value(d, e, v_l, partial)
    # unknowns: the left star's own leg slots (plus its doubles on request)
    unknown = [
        x.other(v_l)
        for x in d.edges_at(v_l)
        if x.key != e.key and not d.is_node(x.other(v_l))
    ]
    if include_doubles:
        unknown += [a.id for a in d.farrows_at(v_l)]
    base0 = induced_value(d, e, v_r, {})
    coefs = {s: induced_value(d, e, v_r, {s: 1}) - base0 for s in unknown}
    target = i_prime - base0
    sol_exact = _solve_exact_combination([coefs[s] for s in unknown], target)
    if sol_exact is None:
        raise ExtensionObstructedError(
            f"no integer decorations on the left legs reach i' = {i_prime}"
        )
    x = {s: m for s, m in zip(unknown, sol_exact)}
    candidates = _leg_fixups(d, v_l, unknown, coefs, x)
    for cand in candidates:
        w_full = dict(partial)
        for s, m in cand.items():
            if m:
                w_full[s] = m
        verdict = is_allowed(d, fm, w_full)
        if not verdict.allowed:
            continue
        # restriction must reproduce w_flat exactly
        _, right = splice(d, e, fm, w_full)
        if right.diagram.w_divisor() == _normalized(w_flat | {target_slot: i_prime - 1}, right.diagram):
            return w_full
    raise ExtensionObstructedError(
        "extension obstructed: the divisible pattern forces d = j "
        f"(d = {e.weight_at(v_l)}, j = {j})"
    )


def _normalized(w: dict[str, int], diagram: SpliceDiagram) -> dict[str, int]:
    keep = set(diagram.vertices) | {a.id for a in diagram.farrows}
    return {s: m for s, m in w.items() if m and s in keep}


def _solve_exact_combination(coefs: list[int], target: int) -> list[int] | None:
    """Integer solution of sum coef_j x_j = target (not a congruence)."""
    if not coefs:
        return [] if target == 0 else None
    g = 0
    combo = [0] * len(coefs)
    from .exact import _ext_gcd

    for idx, c in enumerate(coefs):
        g2, u, vv = _ext_gcd(g, c)
        combo = [b * u for b in combo]
        combo[idx] += vv
        g = g2
    if g == 0:
        return combo if target == 0 else None
    if target % g:
        return None
    k = target // g
    return [b * k for b in combo]


def _leg_fixups(d, v_l, unknown, coefs, x0) -> list[dict[str, int]]:
    """Candidate assignments derived from one solution: the raw solution,
    kernel-shifted variants avoiding zero values, and the forced i = d branch."""
    legs = {
        s: d.edge(v_l, s).weight_at(v_l)
        for s in unknown
        if s in d.vertices
    }
    base_variants = [dict(x0)]
    # kernel pair moves: coef_a * legs[a] == coef_b * legs[b] on a star
    slots = list(unknown)
    for t in (1, -1, 2, -2, 3, -3):
        for a, b in itertools.combinations([s for s in slots if s in legs], 2):
            y = dict(x0)
            y[a] += legs[a] * t
            move = coefs[a] * legs[a]
            if coefs[b] and move % coefs[b] == 0:
                y[b] -= (move // coefs[b]) * t
                base_variants.append(y)
    # forced branch: all-but-one legs pinned to i = d (mult = d - 1)
    for free in slots:
        y = {}
        acc = 0
        for s in slots:
            if s == free:
                continue
            if s in legs:
                y[s] = legs[s] - 1
            else:
                y[s] = 0
            acc += coefs[s] * y[s]
        target = sum(coefs[s] * x0[s] for s in slots) - acc
        if coefs.get(free):
            if target % coefs[free] == 0:
                y[free] = target // coefs[free]
                base_variants.append(y)
    out = []
    seen = set()
    for y in base_variants:
        key = tuple(sorted(y.items()))
        if key not in seen:
            seen.add(key)
            out.append(y)
    return out


# ---------------------------------------------------------------------------
# full-diagram realization


def _window_iter(k: int, width: int):
    """Cartesian window of mult values ordered by increasing max-abs."""
    ladder = [0]
    for a in range(1, width + 1):
        ladder += [a, -a]
    yield from itertools.product(ladder, repeat=k)


def realize_eigenvalue(
    d: SpliceDiagram,
    lam: UnityRoot,
    f: PDivisor | None = None,
    count: int = 1,
    effective: bool = False,
    bound: int | None = None,
    include_doubles: bool = False,
    rng: random.Random | None = None,
    budget: int = 400_000,
) -> RealizeOutcome:
    """Find allowed W with a certified zeta pole mapping to lam.

    Raises NotAnEigenvalueError when lam is outside Eig.  Otherwise returns
    either realized divisors or the honest bounded-search failure with the
    per-node congruence diagnostics.
    """
    d.require_standard()
    fm = f_of(d, f)
    if not eig_contains(d, lam, fm):
        raise NotAnEigenvalueError(f"{lam} is not in Eig of this diagram")
    rng = rng or random.Random(20260810)
    if bound is None:
        maxw = max(
            [e.wa for e in d.edges] + [e.wb for e in d.edges] + [a.weight for a in d.farrows] + [1]
        )
        bound = 4 * lam.order * maxw
    slots = [v for v in d.boundary_vertices()]
    if include_doubles:
        slots += [a.id for a in d.farrows]
    found: list[Realization] = []
    seen: set[tuple] = set()
    diagnostics: list[str] = []
    congruences: list[NodeCongruence] = []

    def push(r: Realization | None) -> bool:
        if r is None:
            return False
        key = tuple(sorted(r.w.items()))
        if key in seen:
            return False
        seen.add(key)
        found.append(r)
        return True

    forms = star_forms(d, slots + [a.id for a in d.farrows])
    nv_all = vertex_multiplicities(d, fm)

    # --- source 1: arrowheads whose multiplicity order contains lam
    for a in d.farrows:
        na = fm.get(a.id, 0)
        if len(found) >= count:
            break
        if na <= 0 or na % lam.order:
            continue
        ua = _target_residue(lam, na)
        base_candidates = [{}] + _small_allowed_candidates(d, fm, slots, forms, rng)
        for basew in base_candidates:
            done = False
            for t in range(8):
                w = dict(basew)
                w[a.id] = (ua - 1) + na * (t if not effective else t + 1)
                if push(certify(d, fm, w, lam, f"arrow:{a.id}", effective)):
                    done = True
                    break
            if done or len(found) >= count:
                break

    # --- source 2: nodes whose star Alexander polynomial has lam as root
    stars = star_decomposition(d, fm, {})
    for v in sorted(d.nodes()):
        if len(found) >= count:
            break
        try:
            rootmult = alexander(stars[v]).root_multiplicity(lam)
        except DiagramError:
            rootmult = 0
        nv = nv_all[v]
        u = _target_residue(lam, nv)
        if u is None:
            continue
        base, coefs = nu_linear_form(d, v, slots)
        cong = NodeCongruence(
            node=v,
            modulus=nv,
            base=base % nv,
            target=u,
            coefficients={s: coefs[s] % nv for s in slots},
        )
        for m in _prime_power_factors(nv):
            cong.reductions.append(
                (m, {s: coefs[s] % m for s in slots}, (u - base) % m)
            )
        congruences.append(cong)
        if rootmult <= 0:
            diagnostics.append(
                f"node {v}: lam is not a root of the star Alexander polynomial"
            )
            continue
        order = list(slots)
        cvec = [coefs[s] for s in order]
        sol = solve_linear_congruence(cvec, u - base, nv)
        if sol is None:
            diagnostics.append(f"node {v}: congruence for nu has no solution")
            continue
        # constructive: congruence solution plus kernel perturbations
        reduced = _reduce_solution(dict(zip(order, sol)), coefs, nv)
        for t in range(80):
            x = dict(reduced)
            if t:
                for s in order:
                    period = nv // gcd(coefs[s], nv) if coefs[s] else 1
                    x[s] += period * rng.randint(-3, 3)
            if effective:
                for s in order:
                    period = nv // gcd(coefs[s], nv) if coefs[s] else 1
                    while x[s] < 0:
                        x[s] += period
            if not _fast_allowed(forms, x):
                continue
            if push(certify(d, fm, x, lam, f"node:{v}", effective)):
                break
        if len(found) >= count:
            break

    # --- fallback: windowed exhaustive search with cheap pre-filters
    explored = {"window": 0, "bound": bound}
    if len(found) < count and slots:
        width = 1
        spent = 0
        while width <= bound:
            shell = (2 * width + 1) ** len(slots) - (2 * width - 1) ** len(slots)
            if spent + shell > budget and width > 1:
                break
            for combo in _window_iter(len(slots), width):
                if width > 1 and max(abs(c) for c in combo) != width:
                    continue  # only the new shell
                spent += 1
                x = dict(zip(slots, combo))
                if effective and any(m < 0 for m in combo):
                    continue
                if not _fast_allowed(forms, x):
                    continue
                if not _nu_matches_somewhere(d, fm, nv_all, x, lam):
                    continue
                if push(certify(d, fm, x, lam, "search", effective)):
                    if len(found) >= count:
                        break
            explored["window"] = width
            if len(found) >= count:
                break
            width += 1

    status = "realized" if found else "unrealizable-within-bound"
    if not found:
        diagnostics.append(
            f"no allowed divisor within the explored window (|mult| <= {explored['window']}, "
            f"requested bound {bound}) produced a pole with exponential {lam}"
        )
    return RealizeOutcome(
        status=status,
        found=found[:count],
        diagnostics=diagnostics,
        congruences=congruences,
        explored=explored,
    )


def _nu_matches_somewhere(d, fm, nv_all, x, lam) -> bool:
    """Cheap filter: some node or arrowhead could produce exp = lam."""
    nu = nu_values(d, x)
    for v, n in nv_all.items():
        if v not in nu:
            continue
        if n and Fraction(-nu[v], n) % 1 == lam.frac % 1:
            return True
    for a in d.farrows:
        na = fm.get(a.id, 0)
        if na and Fraction(-(x.get(a.id, 0) + 1), na) % 1 == lam.frac % 1:
            return True
    return False


def _small_allowed_candidates(d, fm, slots, forms, rng, tries: int = 40) -> list[dict[str, int]]:
    """A few small boundary assignments that make the divisor allowed."""
    out = []
    if _fast_allowed(forms, {}):
        out.append({})
    for _ in range(tries):
        x = {s: rng.choice([0, 0, 1, -2, 2, -3, 3]) for s in slots}
        if _fast_allowed(forms, x):
            out.append({s: m for s, m in x.items() if m})
        if len(out) >= 6:
            break
    uniq = []
    seen = set()
    for x in out:
        k = tuple(sorted(x.items()))
        if k not in seen:
            seen.add(k)
            uniq.append(x)
    return uniq
