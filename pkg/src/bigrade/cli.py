"""Command-line front end: deterministic JSON reports for every analysis."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BigradeError, ParseError, PreconditionFailed, UnitIdeal, ZeroIdeal, ZeroModule
from .filtration import ass_quotients, dimension_filtration, sequentially_cm
from .hypersurface import classify, monomial_crosscheck, parse_profile, profile_of_monomial
from .invariants import analyze
from .io_formats import parse_ideal_file, parse_term, render_ideal
from .local_cohomology import corollary_check, generalized_cm, growth_scan, lc_report
from .rings import (
    RingSpec,
    associated_primes,
    irreducible_decomposition,
    primary_decomposition,
    render_monomial,
)

SCHEMA = 1


def _axis(ring, name):
    return {
        "P": ring.x_block(),
        "Q": ring.y_block(),
        "all": ring.all_vars(),
    }[name]


def _prime_names(ring, p):
    return [ring.var_name(i) for i in sorted(p)]


def _dim_or_infinite(v):
    return "infinite" if v is None else v


def cmd_analyze(args):
    ring, I = parse_ideal_file(args.input, char=args.char)
    rep = analyze(I, _axis(ring, args.axis))
    return {
        "schema": SCHEMA,
        "command": "analyze",
        "axis": args.axis,
        "char": ring.char,
        "grade": rep.grade,
        "cd": rep.cd,
        "mgrade": rep.mgrade,
        "dim": rep.dim,
        "maximal_depth": rep.maximal_depth,
        "witness_prime": _prime_names(ring, rep.witness_prime) if rep.witness_prime is not None else None,
        "cm_wrt_axis": rep.cm_wrt_Z,
        "cm_ordinary": rep.cm_ordinary,
    }


def cmd_decompose(args):
    ring, I = parse_ideal_file(args.input, char=args.char)
    irr = irreducible_decomposition(I)
    prim = primary_decomposition(I)
    return {
        "schema": SCHEMA,
        "command": "decompose",
        "irreducible_components": [
            {
                "gens": [render_monomial(ring, g) for g in pc.component.gens],
                "radical": _prime_names(ring, pc.radical),
            }
            for pc in irr
        ],
        "primary_components": [
            {
                "gens": [render_monomial(ring, g) for g in pc.component.gens],
                "radical": _prime_names(ring, pc.radical),
            }
            for pc in prim
        ],
        "associated_primes": sorted(
            _prime_names(ring, p) for p in associated_primes(I)
        ),
    }


def cmd_filtration(args):
    ring, I = parse_ideal_file(args.input, char=args.char)
    ladder = dimension_filtration(I, _axis(ring, args.axis))
    blocks = ass_quotients(ladder)
    return {
        "schema": SCHEMA,
        "command": "filtration",
        "axis": args.axis,
        "cd_values": list(ladder.cd_values),
        "steps": [
            {
                "ideal": [render_monomial(ring, g) for g in J.gens],
                "cd": gamma,
                "ass_quotient": sorted(_prime_names(ring, p) for p in block),
            }
            for (J, gamma), block in zip(ladder.steps, blocks)
        ],
    }


def cmd_seqcm(args):
    ring, I = parse_ideal_file(args.input, char=args.char)
    res = sequentially_cm(I, _axis(ring, args.axis))
    return {
        "schema": SCHEMA,
        "command": "seqcm",
        "axis": args.axis,
        "verdict": res["verdict"],
        "per_step": res["per_step"],
    }


def cmd_lc(args):
    ring, I = parse_ideal_file(args.input, char=args.char)
    rep = lc_report(I, args.i, _axis(ring, args.axis))
    return {
        "schema": SCHEMA,
        "command": "lc",
        "axis": args.axis,
        "i": rep.i,
        "finitely_generated": rep.finitely_generated,
        "total_dim": _dim_or_infinite(rep.total_dim),
        "per_fiber": [
            {
                "pattern": list(e.pattern),
                "infinite_family": e.infinite_family,
                "finite_length": e.finite_length,
                "total_dim": _dim_or_infinite(e.total_dim),
                "witness_degree": list(e.witness_degree) if e.witness_degree else None,
            }
            for e in rep.per_fiber
        ],
    }


def cmd_gencm(args):
    ring, I = parse_ideal_file(args.input, char=args.char)
    return {
        "schema": SCHEMA,
        "command": "gencm",
        "axis": args.axis,
        "verdict": generalized_cm(I, _axis(ring, args.axis)),
    }


def cmd_growth(args):
    ring, I = parse_ideal_file(args.input, char=args.char)
    radii = [int(r) for r in args.radii.split(",")]
    sums = growth_scan(I, args.i, radii, _axis(ring, args.axis))
    return {
        "schema": SCHEMA,
        "command": "growth",
        "axis": args.axis,
        "i": args.i,
        "radii": radii,
        "cumulative_dims": sums,
    }


def cmd_hypersurface(args):
    ring = RingSpec(args.ring[0], args.ring[1], args.char)
    if args.factors:
        profile = parse_profile(args.factors)
    else:
        with open(args.input, encoding="utf-8") as fh:
            profile = parse_profile(fh.read())
    verdict = classify(profile, ring)
    return {
        "schema": SCHEMA,
        "command": "hypersurface",
        "factors": [list(f) for f in profile.factors],
        "maximal_depth": verdict.maximal_depth,
        "case": verdict.case_label,
        "case_trace": verdict.case_trace,
        "grade": verdict.grade_Q,
        "mgrade": verdict.mgrade_Q,
    }


def cmd_crosscheck(args):
    ring = RingSpec(args.ring[0], args.ring[1], args.char)
    f = parse_term(ring, args.monomial)
    ok = monomial_crosscheck(f, ring)
    profile = profile_of_monomial(ring, f)
    verdict = classify(profile, ring)
    return {
        "schema": SCHEMA,
        "command": "crosscheck",
        "monomial": render_monomial(ring, f),
        "agrees": ok,
        "case": verdict.case_label,
        "grade": verdict.grade_Q,
        "mgrade": verdict.mgrade_Q,
    }


def cmd_suite(args):
    from .suite import run_property_suite

    result = run_property_suite(
        count=args.count, seed=args.seed, char=args.char
    )
    return {
        "schema": SCHEMA,
        "command": "suite",
        "count": result["count"],
        "seed": result["seed"],
        "ok": result["ok"],
        "violations": result["violations"],
    }


def cmd_render(args):
    _, I = parse_ideal_file(args.input, char=args.char)
    return {"schema": SCHEMA, "command": "render", "canonical": render_ideal(I)}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bigrade",
        description="Invariants of bigraded monomial quotients",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True, with_axis=True):
        if with_input:
            p.add_argument("input", help="ideal file")
        if with_axis:
            p.add_argument("--axis", choices=["P", "Q", "all"], default="Q")
        p.add_argument("--char", type=int, default=0, help="rank characteristic (0 or prime)")

    p = sub.add_parser("analyze", help="grade/cd/mgrade/maximal depth report")
    common(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("decompose", help="irreducible and primary decomposition")
    common(p, with_axis=False)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("filtration", help="dimension filtration ladder")
    common(p)
    p.set_defaults(fn=cmd_filtration)

    p = sub.add_parser("seqcm", help="sequential Cohen-Macaulay test")
    common(p)
    p.set_defaults(fn=cmd_seqcm)

    p = sub.add_parser("lc", help="local cohomology report at index i")
    common(p)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(fn=cmd_lc)

    p = sub.add_parser("gencm", help="generalized Cohen-Macaulay test")
    common(p)
    p.set_defaults(fn=cmd_gencm)

    p = sub.add_parser("growth", help="cumulative cohomology dimensions over growing boxes")
    common(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--radii", default="1,2,3,4", help="comma-separated radii")
    p.set_defaults(fn=cmd_growth)

    p = sub.add_parser("hypersurface", help="classify a hypersurface factor profile")
    p.add_argument("input", nargs="?", help="factor profile file")
    p.add_argument("--factors", help='inline profile, e.g. "(1,1) (0,2)"')
    p.add_argument("--ring", type=int, nargs=2, required=True, metavar=("M", "N"))
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(fn=cmd_hypersurface)

    p = sub.add_parser("crosscheck", help="theorem vs engine on a monomial hypersurface")
    p.add_argument("--monomial", required=True, help='e.g. "x1*y1"')
    p.add_argument("--ring", type=int, nargs=2, required=True, metavar=("M", "N"))
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(fn=cmd_crosscheck)

    p = sub.add_parser("suite", help="seeded random property suite")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=20240811)
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(fn=cmd_suite)

    p = sub.add_parser("render", help="canonical form of an ideal file")
    common(p, with_axis=False)
    p.set_defaults(fn=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.fn(args)
    except ParseError as exc:
        where = f" (line {exc.line})" if exc.line else ""
        print(json.dumps({"schema": SCHEMA, "error": f"parse: {exc}{where}"}, sort_keys=True))
        return 2
    except FileNotFoundError as exc:
        print(json.dumps({"schema": SCHEMA, "error": f"parse: {exc}"}, sort_keys=True))
        return 2
    except (PreconditionFailed, UnitIdeal, ZeroIdeal, ZeroModule, BigradeError) as exc:
        print(json.dumps({"schema": SCHEMA, "error": f"precondition: {exc}"}, sort_keys=True))
        return 3
    print(json.dumps(doc, sort_keys=True, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
