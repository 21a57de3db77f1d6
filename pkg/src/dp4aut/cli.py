"""Command line front end: ``dp4aut {classify,group,lines,surface,traceform}``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, classify, lines, numfield, surfaces, weyl

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _names(names) -> list[str]:
    return [str(n) for n in classify.sorted_names(names)]


def _profile(args) -> classify.FieldProfile:
    if getattr(args, "profile", None) and getattr(args, "field", None):
        raise InputError("give either --field or --profile, not both")
    try:
        if getattr(args, "profile", None):
            return classify.parse_profile(args.profile)
        return classify.profile_for_field(getattr(args, "field", None) or "Q")
    except classify.ProfileError as e:
        raise InputError(str(e)) from None


# ------------------------------------------------------------------ classify


def cmd_classify(args) -> tuple[dict, int]:
    p = _profile(args)
    excluded = _names(classify.non_qs_only_classes()) if classify.rationality_obstructed(p) else []
    return {
        "command": "classify",
        "profile": p.as_dict(),
        "maximal_qs": _names(classify.maximal_qs(p)),
        "maximal_m": _names(classify.maximal_m(p)),
        "rationality_excluded": excluded,
    }, EXIT_OK


# --------------------------------------------------------------------- group


def _subgroup(text: str) -> weyl.Subgroup:
    try:
        return weyl.named_class(text)
    except ValueError:
        pass
    try:
        return weyl.group(text)
    except weyl.ParseError as e:
        raise InputError(str(e)) from None


def _describe(sub: weyl.Subgroup) -> dict:
    return {
        "order": sub.order,
        "generators": [str(g) for g in weyl.generating_set(sub)],
    }


def cmd_group(args) -> tuple[dict, int]:
    sub = _subgroup(args.generators)
    op = args.operation
    out = {"command": "group", "input": args.generators, "operation": op, "group_order": sub.order}
    if op == "order":
        out["result"] = sub.order
    elif op == "elements":
        out["result"] = [str(g) for g in sorted(sub.elements)]
    elif op == "centralizer":
        out["result"] = _describe(weyl.centralizer(sub))
    elif op == "image-s5":
        out["result"] = _describe(weyl.image_in_s5(sub))
    elif op == "kernel":
        out["result"] = _describe(weyl.kernel_in_a(sub))
    elif op == "is-split":
        comp = weyl.find_complement(sub)
        out["result"] = comp is not None
        if comp is not None:
            out["complement"] = [str(g) for g in weyl.generating_set(comp)]
    elif op == "conjugate-into":
        if not args.target:
            raise InputError("conjugate-into needs a target class or generator list")
        t = weyl.conjugate_into(sub, _subgroup(args.target))
        out["target"] = args.target
        out["result"] = None if t is None else str(t)
    return out, EXIT_OK


# --------------------------------------------------------------------- lines

BUILTIN_SCENARIOS = {
    "twist": lines.twist_scenario,
    "trivial": lambda: lines.GaloisAction([[0]], [weyl.IDENTITY]),
    "swap45": lambda: lines.GaloisAction(lines.cyclic_table(2), [weyl.IDENTITY, weyl.parse("(45)")]),
}


def cmd_lines(args) -> tuple[dict, int]:
    try:
        if args.scenario in BUILTIN_SCENARIOS:
            act = BUILTIN_SCENARIOS[args.scenario]()
        else:
            act = lines.load_scenario(args.scenario)
    except lines.CocycleError as e:
        raise InputError(f"cocycle check failed: {e}") from None
    except (lines.HomomorphismError, weyl.ParseError, ValueError, KeyError, OSError) as e:
        raise InputError(f"bad scenario: {e}") from None
    orbits = lines.galois_orbits(act)
    return {
        "command": "lines",
        "scenario": args.scenario,
        "orbits": lines.format_orbits(orbits),
        "orbit_sizes": sorted(len(o) for o in orbits),
        "quasi_split": lines.is_quasi_split(orbits),
        "k_minimal": lines.is_k_minimal(orbits),
    }, EXIT_OK


# ------------------------------------------------------------------- surface


def parse_scalar(K: numfield.NumberField, text: str) -> numfield.FieldElement:
    """``"3/2"`` or a coefficient vector ``"[1, -1/2]"`` in the power basis of ``K``."""
    t = text.strip()
    try:
        if t.startswith("["):
            return K([Fraction(x.strip()) for x in t.strip("[]").split(",") if x.strip()])
        return K(Fraction(t))
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad field element {text!r}: {e}") from None


def _quadric_json(q: surfaces.Quadric) -> dict:
    return {f"u{a}u{b}" if a != b else f"u{a}^2": numfield.to_json(c) for (a, b), c in sorted(q.terms().items())}


def cmd_surface(args) -> tuple[dict, int]:
    params = {}
    if args.name == "c2" and args.a is not None:
        params["a"] = parse_scalar(numfield.QQ, args.a)
    if args.name == "c23-nonsplit":
        if args.alpha is not None:
            params["alpha"] = parse_scalar(numfield.QQ_I, args.alpha)
        if args.beta is not None:
            params["beta"] = parse_scalar(numfield.QQ_I, args.beta)
    try:
        rec = catalog.get(args.name, **params)
    except KeyError as e:
        raise InputError(e.args[0]) from None
    except ValueError as e:
        raise InputError(str(e)) from None
    out = {
        "command": "surface",
        "name": rec.name,
        "field": rec.field.name,
        "q1": _quadric_json(rec.pencil.q1),
        "q2": _quadric_json(rec.pencil.q2),
        "expected_group_order": rec.expected_order,
    }
    if args.dump:
        out["pencil"] = surfaces.pencil_to_json(rec.pencil)
    code = EXIT_OK
    if args.verify:
        checks = catalog.verify(rec)
        out["checks"] = [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]
        out["passed"] = catalog.all_passed(checks)
        code = EXIT_OK if out["passed"] else EXIT_FAIL
    return out, code


# ----------------------------------------------------------------- traceform


def _field_arg(name: str | None) -> numfield.NumberField:
    if not name:
        return numfield.QQ
    if name in numfield.FIELDS:
        return numfield.FIELDS[name]
    try:
        return numfield.parse_minpoly(name)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"unknown field {name!r}: {e}") from None


def _element_list(K, text: str) -> list:
    """Semicolon separated elements, each ``p/q`` or ``[c0, c1, ...]``."""
    return [parse_scalar(K, part) for part in text.split(";") if part.strip()]


def cmd_traceform(args) -> tuple[dict, int]:
    K = _field_arg(getattr(args, "field", None))
    if (args.poly is None) == (args.roots is None):
        raise InputError("give exactly one of --poly or --roots")
    try:
        if args.roots is not None:
            alg = surfaces.EtaleAlgebra.from_roots(K, _element_list(K, args.roots))
        else:
            alg = surfaces.EtaleAlgebra(K, _element_list(K, args.poly))
        lam = _element_list(K, args.lam) if args.lam else None
        pencil = surfaces.trace_quadrics(alg, lam)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(str(e)) from None
    return {
        "command": "traceform",
        "field": K.name or [str(c) for c in K.minpoly],
        "q0": _quadric_json(pencil.q1),
        "q1": _quadric_json(pencil.q2),
        "smooth": surfaces.is_smooth(pencil),
        "pencil": surfaces.pencil_to_json(pencil),
    }, EXIT_OK


# ----------------------------------------------------------------- plumbing


def _render_text(report: dict) -> str:
    lines_out = []
    for k, v in report.items():
        if k == "checks":
            for c in v:
                mark = "PASS" if c["ok"] else "FAIL"
                lines_out.append(f"  [{mark}] {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
        elif isinstance(v, (dict, list)) and k in ("pencil",):
            lines_out.append(f"{k}: {json.dumps(v)}")
        elif isinstance(v, list):
            lines_out.append(f"{k}: " + ", ".join(map(_plain, v)) if v else f"{k}: (none)")
        elif isinstance(v, dict):
            lines_out.append(f"{k}: " + ", ".join(f"{a}={_plain(b)}" for a, b in v.items()))
        else:
            lines_out.append(f"{k}: {_plain(v)}")
    return "\n".join(lines_out)


def _plain(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(map(_plain, v)) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{a}: {_plain(b)}" for a, b in v.items()) + "}"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--field", default=argparse.SUPPRESS, help="named field, e.g. Q(i)")
    common.add_argument("--profile", default=argparse.SUPPRESS, help="e.g. i=yes,eps3=no,sqrt5=no,s2s=yes")

    ap = argparse.ArgumentParser(prog="dp4aut", description=__doc__.splitlines()[0], parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="maximal groups for a field profile")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("group", parents=[common], help="operations on a subgroup of W(D5)")
    p.add_argument("generators", help='comma separated generators, e.g. "c4c5,(123),c4(12)(45)", or a class name')
    p.add_argument(
        "operation",
        choices=["order", "elements", "centralizer", "image-s5", "kernel", "is-split", "conjugate-into"],
    )
    p.add_argument("target", nargs="?", help="target for conjugate-into")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("lines", parents=[common], help="Galois orbits on the 16 lines")
    p.add_argument("scenario", help=f"JSON scenario file or one of {sorted(BUILTIN_SCENARIOS)}")
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("surface", parents=[common], help="catalog surfaces")
    p.add_argument("name")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--dump", action="store_true", help="include the Gram matrices")
    p.add_argument("--a", help="parameter of the c2 record")
    p.add_argument("--alpha", help="alpha for c23-nonsplit (element of Q(i))")
    p.add_argument("--beta", help="beta for c23-nonsplit (element of Q(i))")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("traceform", parents=[common], help="trace-form pencil of a quintic")
    p.add_argument("--poly", help="coefficients of P, lowest degree first, separated by ';'")
    p.add_argument("--roots", help="roots of a split P, separated by ';'")
    p.add_argument("--lambda", dest="lam", help="twist element in the power basis, separated by ';'")
    p.set_defaults(func=cmd_traceform)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        report, code = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2))
    else:
        print(_render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
