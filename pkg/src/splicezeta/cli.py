"""Command-line interface.

Exit codes: 0 = computed (verdicts live in the payload), 1 = usage or parse
error, 2 = precondition violation (bad graph kind, invalid decoration, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from .allowed import check_goal1, is_allowed, semigroup_condition
from .diagrams import (
    DiagramError,
    SpliceDiagram,
    plumbing_to_splice,
    validate,
    validate_plumbing,
)
from .exact import CycloProduct, NegativeMultiplicityError, UnityRoot, format_fraction
from .io import ParseError, parse_diagram, print_splice
from .monodromy import alexander, delta0, delta1, delta1_plumbing, eig_contains, eig_contains_plumbing
from .realize import NotAnEigenvalueError, realize_eigenvalue
from .selfcheck import run_selfcheck
from .splicing import splice, star_decomposition, verify_splice_zeta
from .zeta import ZetaResult, zeta_plumbing, zeta_splice


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(1, f"cannot read {path}: {exc}") from None
    try:
        return parse_diagram(text)
    except ParseError as exc:
        raise CliError(1, f"{path}: {exc}") from None


def _as_splice(kind: str, obj) -> SpliceDiagram:
    if kind == "splice":
        return obj
    try:
        return plumbing_to_splice(obj)
    except DiagramError as exc:
        raise CliError(2, f"cannot convert plumbing graph: {exc}") from None


def _frac(x) -> str:
    return format_fraction(x)


def _poly_coeffs(p) -> list[str]:
    return [_frac(c) for c in p.coeffs]


def _zeta_payload(z: ZetaResult) -> dict:
    return {
        "numerator": _poly_coeffs(z.func.num),
        "denominator": _poly_coeffs(z.func.den),
        "node_terms": [
            {
                "vertex": t.vertex,
                "nu": _frac(t.nu),
                "N": _frac(t.n),
                "const": _frac(t.const),
                "arrows": [
                    {"weight": a.weight, "i": _frac(a.i), "N": _frac(a.n)} for a in t.arrows
                ],
            }
            for t in z.node_terms
        ],
        "edge_terms": [
            {
                "vertices": list(t.vertices),
                "q": _frac(t.q),
                "factors": [[_frac(t.nu1), _frac(t.n1)], [_frac(t.nu2), _frac(t.n2)]],
            }
            for t in z.edge_terms
        ],
    }


def _cyclo_payload(c: CycloProduct) -> dict:
    out = {"factors": [[n, e] for n, e in c.factors.items()]}
    try:
        out["polynomial"] = [str(int(x)) for x in c.expand().coeffs]
    except NegativeMultiplicityError as exc:
        out["polynomial"] = None
        out["note"] = str(exc)
    return out


def _emit(args, payload: dict, text: str):
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parse_lambda(text: str) -> UnityRoot:
    try:
        return UnityRoot.parse(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(1, f"bad --lambda value {text!r}; expected p/q") from None


def cmd_validate(args):
    kind, name, obj = _load(args.file)
    rep = validate(obj) if kind == "splice" else validate_plumbing(obj)
    payload = {
        "name": name,
        "kind": kind,
        "valid": rep.ok,
        "violations": [
            {"kind": v.kind, "where": v.where, "detail": v.detail} for v in rep.violations
        ],
    }
    _emit(args, payload, f"{name}: " + ("valid" if rep.ok else str(rep)))


def cmd_convert(args):
    kind, name, obj = _load(args.file)
    if kind != "plumbing":
        raise CliError(2, "convert expects a plumbing graph")
    try:
        d = plumbing_to_splice(obj)
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None
    text = print_splice(d, name)
    payload = {"name": name, "splice": text}
    _emit(args, payload, text)


def _zeta_of(args):
    kind, name, obj = _load(args.file)
    try:
        if kind == "plumbing":
            return name, obj, kind, zeta_plumbing(obj)
        return name, obj, kind, zeta_splice(obj)
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None


def cmd_zeta(args):
    name, obj, kind, z = _zeta_of(args)
    payload = {"name": name, "zeta": _zeta_payload(z)}
    num = " ".join(_poly_coeffs(z.func.num)) or "0"
    den = " ".join(_poly_coeffs(z.func.den))
    _emit(args, payload, f"{name}: Z numerator [{num}] denominator [{den}] (ascending in s)")


def cmd_poles(args):
    name, obj, kind, z = _zeta_of(args)
    poles = z.poles()
    payload = {
        "name": name,
        "poles": [
            {"s0": _frac(p.location), "order": p.order, "leading": _frac(p.leading)}
            for p in poles
        ],
    }
    lines = [f"{name}: {len(poles)} pole(s)"] + [
        f"  s0 = {_frac(p.location)}  order {p.order}  leading {_frac(p.leading)}"
        for p in poles
    ]
    _emit(args, payload, "\n".join(lines))


def cmd_alexander(args):
    kind, name, obj = _load(args.file)
    try:
        if kind == "plumbing" and not obj.is_unimodular():
            d1 = delta1_plumbing(obj)
            payload = {"name": name, "delta1": _cyclo_payload(d1)}
            _emit(args, payload, f"{name}: Delta1 = {d1}")
            return
        d = _as_splice(kind, obj)
        lam = alexander(d)
        payload = {
            "name": name,
            "alexander": _cyclo_payload(lam),
            "delta0": _cyclo_payload(delta0(d)),
            "delta1": _cyclo_payload(delta1(d)),
        }
        _emit(args, payload, f"{name}: Lambda = {lam}")
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None


def cmd_eig(args):
    kind, name, obj = _load(args.file)
    lam = _parse_lambda(args.lam)
    try:
        if kind == "plumbing" and not obj.is_unimodular():
            member = eig_contains_plumbing(obj, lam)
        else:
            member = eig_contains(_as_splice(kind, obj), lam)
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None
    payload = {"name": name, "lambda": str(lam), "in_eig": member}
    _emit(args, payload, f"{name}: exp(2 pi i {lam}) in Eig: {member}")


def cmd_semigroup(args):
    kind, name, obj = _load(args.file)
    d = _as_splice(kind, obj)
    try:
        rep = semigroup_condition(d)
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None
    payload = {
        "name": name,
        "holds": rep.ok,
        "checked": rep.checked,
        "failures": [
            {
                "node": x.node,
                "edge": list(x.edge),
                "weight": x.weight,
                "generators": list(x.generators),
            }
            for x in rep.failures
        ],
    }
    lines = [f"{name}: semigroup condition {'holds' if rep.ok else 'fails'}"]
    lines += [f"  {x}" for x in rep.failures]
    _emit(args, payload, "\n".join(lines))


def cmd_allowed(args):
    kind, name, obj = _load(args.file)
    d = _as_splice(kind, obj)
    try:
        verdict = is_allowed(d)
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None
    payload = {
        "name": name,
        "allowed": verdict.allowed,
        "stars": [
            {
                "node": s.node,
                "r": s.r,
                "legs": [{"d": a, "i": b} for a, b in s.legs],
                "ok": s.ok,
                "reason": s.reason,
            }
            for s in verdict.stars
        ],
        "nonzero": verdict.nonzero_detail,
    }
    _emit(args, payload, f"{name}: {verdict}")


def _parse_edge(text: str) -> tuple[str, str]:
    if ":" not in text:
        raise CliError(1, "--edge expects id1:id2")
    a, b = text.split(":", 1)
    return a, b


def cmd_splice(args):
    kind, name, obj = _load(args.file)
    d = _as_splice(kind, obj)
    a, b = _parse_edge(args.edge)
    try:
        left, right = splice(d, (a, b))
        chk = verify_splice_zeta(d, (a, b))
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None
    lt = print_splice(left.diagram, f"{name}.left")
    rt = print_splice(right.diagram, f"{name}.right")
    payload = {
        "name": name,
        "edge": [a, b],
        "left": lt,
        "right": rt,
        "M": left.m,
        "i": left.i,
        "M_prime": right.m,
        "i_prime": right.i,
        "identity_holds": chk.ok if chk.degenerate is None else None,
        "degenerate": chk.degenerate,
    }
    text = lt + "\n" + rt + f"\n# M={left.m} i={left.i} M'={right.m} i'={right.i}\n"
    _emit(args, payload, text)


def cmd_stars(args):
    kind, name, obj = _load(args.file)
    d = _as_splice(kind, obj)
    try:
        stars = star_decomposition(d)
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None
    payload = {"name": name, "stars": {v: print_splice(s, f"{name}.{v}") for v, s in stars.items()}}
    text = "\n".join(print_splice(stars[v], f"{name}.{v}") for v in sorted(stars))
    _emit(args, payload, text)


def cmd_goal1(args):
    kind, name, obj = _load(args.file)
    d = _as_splice(kind, obj)
    try:
        rep = check_goal1(d)
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None
    payload = {
        "name": name,
        "holds": rep.holds,
        "allowed": rep.allowed,
        "poles": [
            {
                "s0": _frac(p.s0),
                "order": p.order,
                "leading": _frac(p.leading),
                "eigenvalue": str(p.eigenvalue),
                "in_eig": p.in_eig,
            }
            for p in rep.poles
        ],
    }
    _emit(args, payload, f"{name}:\n{rep}")


def cmd_realize(args):
    kind, name, obj = _load(args.file)
    d = _as_splice(kind, obj)
    lam = _parse_lambda(args.lam)
    try:
        out = realize_eigenvalue(
            d,
            lam,
            count=args.count,
            effective=args.effective,
            bound=args.bound,
            include_doubles=args.include_doubles,
        )
    except NotAnEigenvalueError as exc:
        raise CliError(2, str(exc)) from None
    except DiagramError as exc:
        raise CliError(2, str(exc)) from None
    payload = {
        "name": name,
        "lambda": str(lam),
        "status": out.status,
        "found": [
            {
                "w": {s: m for s, m in r.w.items()},
                "values": r.values(),
                "s0": _frac(r.s0),
                "order": r.order,
                "leading": _frac(r.leading),
                "source": r.source,
            }
            for r in out.found
        ],
        "diagnostics": out.diagnostics,
        "congruences": [
            {
                "node": c.node,
                "modulus": c.modulus,
                "base": c.base,
                "target": c.target,
                "coefficients": c.coefficients,
                "reductions": [
                    {"modulus": m, "coefficients": co, "target": t}
                    for m, co, t in c.reductions
                ],
            }
            for c in out.congruences
        ],
        "explored": out.explored,
    }
    if out.realized:
        lines = [f"{name}: realized {lam}"]
        for r in out.found:
            lines.append(f"  s0 = {_frac(r.s0)} (order {r.order}, from {r.source})")
            for slot, value in r.values().items():
                kind2 = "doubles" if slot in {x.id for x in d.farrows} else "at"
                lines.append(f"  warrow w_{slot} {kind2} {slot} i={value}")
    else:
        lines = [f"{name}: {out.status} for {lam}"]
        lines += [f"  {x}" for x in out.diagnostics]
        for c in out.congruences:
            lines.append("  " + c.describe().replace("\n", "\n  "))
    _emit(args, payload, "\n".join(lines))


def cmd_selfcheck(args):
    rep = run_selfcheck(samples=args.samples)
    payload = {
        "ok": rep.ok,
        "checks": [{"name": line.name, "ok": line.ok, "detail": line.detail} for line in rep.lines],
    }
    _emit(args, payload, str(rep) + ("\nall checks passed" if rep.ok else "\nFAILURES PRESENT"))
    if not rep.ok:
        raise CliError(2, "selfcheck failed")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    ap = argparse.ArgumentParser(
        prog="splicezeta",
        description="Exact invariants of splice diagrams and plumbing graphs",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(fn=fn)
        return p

    for name, fn, help_ in [
        ("validate", cmd_validate, "check every diagram invariant"),
        ("convert", cmd_convert, "plumbing graph to splice diagram"),
        ("zeta", cmd_zeta, "topological zeta function"),
        ("poles", cmd_poles, "poles of the zeta function"),
        ("alexander", cmd_alexander, "Alexander polynomial / Delta_1"),
        ("semigroup", cmd_semigroup, "semigroup condition"),
        ("allowed", cmd_allowed, "allowedness of the stored dashed arrows"),
        ("goal1", cmd_goal1, "map every pole to the eigenvalue set"),
        ("stars", cmd_stars, "star decomposition"),
        ("selfcheck", cmd_selfcheck, "golden corpus + randomized invariants"),
    ]:
        p = add(name, fn, help=help_)
        if name != "selfcheck":
            p.add_argument("file")
        else:
            p.add_argument("--samples", type=int, default=60)
    p = add("eig", cmd_eig, help="eigenvalue-set membership")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", required=True, help="root of unity p/q")
    p = add("splice", cmd_splice, help="splice at a special edge")
    p.add_argument("file")
    p.add_argument("--edge", required=True, help="id1:id2")
    p = add("realize", cmd_realize, help="construct allowed W hitting an eigenvalue")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", required=True, help="root of unity p/q")
    p.add_argument("--effective", action="store_true")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--include-doubles", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
