"""Command-line workbench: construct, analyze, types, search, certify, gleason.

Exit codes: 0 success, 2 usage errors, 3 unsupported case, 4 internal
consistency failure.  Machine output carries a schema_version field.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from sdcodes import analysis, gf2
from sdcodes.cyclic import HypothesisViolation, find_generators
from sdcodes.decomposition import (
    AutomorphismType,
    ConstructionBug,
    ConstructionParams,
    UnsupportedCase,
    build_code,
    default_fixed_gen,
    dihedral_involution,
    feasible_types,
    format_cycles,
    parse_cycles,
    standard_sigma,
)
from sdcodes.search import SearchPlan, parse_plan, run_search
from sdcodes.shadow_theory import (
    LengthShape,
    ShadowClass,
    gleason_system,
    nonexistence_verdict,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4


def _parse_int_tuple(text: str, count: int, name: str) -> tuple[int, ...]:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != count:
        raise argparse.ArgumentTypeError(f"{name} needs {count} comma-separated ints")
    return tuple(int(p) for p in parts)


def cmd_construct(args) -> int:
    ctx = find_generators(args.p)
    if args.fixed_gen:
        with open(args.fixed_gen, "r", encoding="utf-8") as fh:
            fixed = gf2.BitMatrix.from_text(fh.read())
        fixed_id = args.fixed_gen
    else:
        fixed = default_fixed_gen(4, args.f)
        fixed_id = "default"
    params = ConstructionParams(
        ctx=ctx,
        f=args.f,
        u=_parse_int_tuple(args.u, 3, "--u"),
        v=_parse_int_tuple(args.v, 2, "--v"),
        s=parse_cycles(args.s, 4),
        fixed_gen=fixed,
    )
    params.validate()
    g = build_code(params)
    record = analysis.CodeRecord(
        gen=g,
        d=0,
        d_proven=False,
        a_d=0,
        params_record=params.flat_record(fixed_id),
    )
    invariants = set(args.invariants.split(",")) if args.invariants else set()
    if invariants & {"d", "a", "i", "shadow"}:
        budget = max(args.budget, 1)
        d, proven = analysis.min_distance(g, budget=budget)
        record.d, record.d_proven = d, proven
        if invariants & {"a", "i", "shadow"}:
            words = analysis.codewords_of_weight(g, d)
            record.a_d = len(words)
            record.beta = analysis.derive_beta(g.cols, d, record.a_d)
            if "i" in invariants:
                record.i_2d = analysis.intersection_number_from_words(
                    words, g.cols, 2 * d
                )
            if "shadow" in invariants:
                sd = analysis.shadow(g)
                record.shadow_counts = analysis.shadow_weight_counts(sd, d + 1)
    out = record.to_dict()
    out["self_dual"] = gf2.is_self_dual(g)
    sigma = standard_sigma(args.p, 4, args.f)
    out["sigma_invariant"] = gf2.preserves_row_space(g, sigma)
    if args.check_dihedral:
        tau = dihedral_involution(g, args.p, 4, args.f)
        out["dihedral_involution"] = format_cycles(tau) if tau else None
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_types(args) -> int:
    types = feasible_types(args.n, args.d, args.p)
    if args.output == "json":
        print(
            json.dumps(
                {
                    "schema_version": 1,
                    "types": [{"p": t.p, "c": t.c, "f": t.f} for t in types],
                }
            )
        )
    else:
        for t in types:
            print(t)
    return EXIT_OK


def cmd_analyze(args) -> int:
    with open(args.gen, "r", encoding="utf-8") as fh:
        g = gf2.BitMatrix.from_text(fh.read())
    g, _ = gf2.rref(g)
    d, proven = analysis.min_distance(g, budget=args.budget)
    words = analysis.codewords_of_weight(g, d)
    out = {
        "schema_version": 1,
        "n": g.cols,
        "k": g.nrows,
        "self_dual": gf2.is_self_dual(g) if g.cols % 2 == 0 else False,
        "d": d,
        "d_proven": proven,
        "A_d": len(words),
        "I_2d": analysis.intersection_number_from_words(words, g.cols, 2 * d),
    }
    if args.wmax:
        profile = analysis.weight_profile(g, args.wmax)
        out["A_counts"] = {str(w): c for w, c in sorted(profile.counts.items())}
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


_CLASS_NAMES = {
    "extremal-minimal": ("extremal", "minimal"),
    "extremal-near-minimal": ("extremal", "near-minimal"),
    "extremal-near-near-minimal": ("extremal", "near-near-minimal"),
    "near-extremal-minimal": ("near-extremal", "minimal"),
    "near-extremal-near-minimal": ("near-extremal", "near-minimal"),
    "near-extremal-near-near-minimal": ("near-extremal", "near-near-minimal"),
}


def cmd_certify(args) -> int:
    if args.cls not in _CLASS_NAMES:
        print(f"unknown class {args.cls!r}", file=sys.stderr)
        return EXIT_USAGE
    extremality, kind = _CLASS_NAMES[args.cls]
    shape = LengthShape.from_length(args.n)
    cls = ShadowClass(shape, extremality, kind)
    verdict = nonexistence_verdict(cls)
    out = {
        "schema_version": 1,
        "n": args.n,
        "m": shape.m,
        "l": shape.l,
        "r": shape.r,
        "class": args.cls,
        "distance": cls.distance,
        "shadow_min_weight": cls.wt_shadow,
    }
    out.update(verdict.to_dict())
    print(json.dumps(out, sort_keys=True))
    if args.output == "text" or args.prose:
        v = verdict
        lines = [
            f"# length {args.n} = 24*{shape.m} + 8*{shape.l} + 2*{shape.r}",
            f"# class: {extremality} with {kind} shadow "
            f"(d = {cls.distance}, wt(S) = {cls.wt_shadow})",
        ]
        if v.closed_form is not None:
            lines.append(f"# forced coefficient, closed form:   {v.closed_form}")
            lines.append(f"# forced coefficient, linear solve:  {v.gleason_value}")
        if v.identity_gap is not None:
            lines.append(f"# overdetermined identity residual:  {v.identity_gap}")
        if v.printed_value is not None:
            lines.append(f"# published summary value:           {v.printed_value}")
        if v.reference_value is not None:
            lines.append(f"# published comparison value:        {v.reference_value}")
        lines.append(
            "# verdict: ELIMINATED (" + v.clause + ")"
            if v.eliminated
            else "# verdict: not eliminated"
        )
        print("\n".join(lines), file=sys.stderr)
    return EXIT_OK


def cmd_gleason(args) -> int:
    shape = LengthShape.from_length(args.n)
    sys_ = gleason_system(shape)

    def enc(x: Fraction):
        return int(x) if x.denominator == 1 else str(x)

    print(
        json.dumps(
            {
                "schema_version": 1,
                "n": shape.n,
                "m": shape.m,
                "l": shape.l,
                "r": shape.r,
                "alpha": [[enc(x) for x in row] for row in sys_.alpha],
                "beta": [[enc(x) for x in row] for row in sys_.beta],
            }
        )
    )
    return EXIT_OK


def cmd_search(args) -> int:
    with open(args.plan, "r", encoding="utf-8") as fh:
        plan = parse_plan(fh.read())
    progress = print if not args.quiet else None
    store = run_search(plan, progress=progress, max_points=args.max_points)
    summary = {
        "schema_version": 1,
        "processed": store.processed,
        "complete": store.complete,
        "fingerprints": len(store.entries),
        "betas": sorted(
            (e.record.beta for e in store.entries if e.record.beta is not None)
        ),
    }
    print(json.dumps(summary, sort_keys=True))
    if not args.quiet:
        print(store.csv_summary(), end="", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sdcodes",
        description="workbench for self-dual codes with dihedral symmetry",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build one code from grid parameters")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--f", type=int, required=True, choices=(0, 2, 4))
    c.add_argument("--u", required=True, help="u1,u2,u3")
    c.add_argument("--v", required=True, help="v1,v2")
    c.add_argument("--s", default="I", help='cycle permutation, e.g. "(1,2,3,4)"')
    c.add_argument("--fixed-gen", help="path to a serialized fixed-subcode generator")
    c.add_argument(
        "--invariants",
        default="d,a,i",
        help="comma list of d,a,i,shadow ('' for construction only)",
    )
    c.add_argument("--budget", type=int, default=10, help="max info weight")
    c.add_argument("--check-dihedral", action="store_true")
    c.set_defaults(func=cmd_construct)

    t = sub.add_parser("types", help="feasible automorphism types")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--output", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_types)

    a = sub.add_parser("analyze", help="invariants of a serialized generator matrix")
    a.add_argument("--gen", required=True)
    a.add_argument("--wmax", type=int, default=0)
    a.add_argument("--budget", type=int, default=10)
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("search", help="run a parameter-grid search plan")
    s.add_argument("--plan", required=True)
    s.add_argument("--max-points", type=int, default=None)
    s.add_argument("--quiet", action="store_true")
    s.set_defaults(func=cmd_search)

    ce = sub.add_parser("certify", help="nonexistence certificate for a shadow class")
    ce.add_argument("--n", type=int, required=True)
    ce.add_argument("--class", dest="cls", required=True)
    ce.add_argument("--output", choices=("json", "text"), default="json")
    ce.add_argument("--prose", action="store_true")
    ce.set_defaults(func=cmd_certify)

    gl = sub.add_parser("gleason", help="exact coefficient tables for one length")
    gl.add_argument("--n", type=int, required=True)
    gl.set_defaults(func=cmd_gleason)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UnsupportedCase, HypothesisViolation) as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ConstructionBug as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
