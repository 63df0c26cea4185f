"""Command-line front end: inspect edge rings, print ideals and bases,
run ideal quotients and intersections, and drive the verification suites."""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verification
from .braid import (
    BraidGraphSpec,
    SpecError,
    build_edge_ring,
    close_strand,
    framing_ideal,
    linear_ideal,
    nonlocal_ideal,
    quadratic_ideal,
)
from .groebner import Ideal, canonical_basis, intersect, quotient
from .poly import ParseError, parse_polynomial

IDEALS = {
    "F": framing_ideal,
    "L": linear_ideal,
    "Q": quadratic_ideal,
    "N": nonlocal_ideal,
}


def _load_spec(path: str) -> BraidGraphSpec:
    with open(path, encoding="utf-8") as fh:
        return BraidGraphSpec.from_json_dict(json.load(fh))


def _parse_in(ring, idl: Ideal, text: str):
    """Parse text against the ideal's own ring, with the ztJ/zbJ aliases."""
    return parse_polynomial(text, idl.order, synonyms=ring.aliases())


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_graph(args) -> int:
    spec = _load_spec(args.spec)
    ring = build_edge_ring(spec)
    if args.json:
        edges = []
        for e in ring.edges:
            edges.append({
                "label": ring.labels[e],
                "column": e.column,
                "segment": e.segment,
                "closure": e.is_closure,
                "framing": ring.framing(e),
                "tail": ring.tail(e),
                "head": ring.head(e),
            })
        _print_json({
            "spec": spec.to_json_dict(),
            "variables": list(ring.order.names),
            "aliases": ring.aliases(),
            "edges": edges,
        })
    else:
        for line in ring.describe():
            print(line)
    return 0


def cmd_ideal(args) -> int:
    spec = _load_spec(args.spec)
    ring = build_edge_ring(spec)
    idl = IDEALS[args.ideal](ring)
    if args.json:
        _print_json({
            "ideal": args.ideal,
            "variables": list(idl.order.names),
            "generators": [str(g) for g in idl.generators],
        })
    else:
        for g in idl.generators:
            print(g)
    return 0


def cmd_gb(args) -> int:
    spec = _load_spec(args.spec)
    ring = build_edge_ring(spec)
    idl = IDEALS[args.ideal](ring)
    if args.nu:
        cl = close_strand(ring)
        projected = cl.project_ideal(idl)
        upper = cl.after.order.with_nu()
        nu = upper.variable("nu")
        z = cl.after.var(cl.kept_label).map_to(upper)
        gens = [nu * g.map_to(upper) for g in projected.generators]
        gens.append(nu * z - z)
        for text in args.extra:
            gens.append(parse_polynomial(text, upper, synonyms=cl.after.aliases()))
        idl = Ideal(upper, gens)
    elif args.extra:
        gens = list(idl.generators)
        for text in args.extra:
            gens.append(_parse_in(ring, idl, text))
        idl = Ideal(idl.order, gens)
    basis = canonical_basis(idl)
    if args.json:
        _print_json({
            "ideal": args.ideal,
            "variables": list(basis.order.names),
            "basis": [str(g) for g in basis.elements],
        })
    else:
        for g in basis.elements:
            print(g)
    return 0


def cmd_quotient(args) -> int:
    spec = _load_spec(args.spec)
    ring = build_edge_ring(spec)
    idl = IDEALS[args.ideal](ring)
    f = _parse_in(ring, idl, args.by)
    result = quotient(idl, f)
    if args.json:
        _print_json({
            "ideal": args.ideal,
            "by": str(f),
            "generators": [str(g) for g in result.generators],
        })
    else:
        for g in result.generators:
            print(g)
    return 0


def cmd_intersect(args) -> int:
    spec = _load_spec(args.spec)
    ring = build_edge_ring(spec)
    left = IDEALS[args.ideal](ring)
    right = IDEALS[args.other](ring)
    result = intersect(left, right)
    if args.json:
        _print_json({
            "left": args.ideal,
            "right": args.other,
            "generators": [str(g) for g in result.generators],
        })
    else:
        for g in result.generators:
            print(g)
    return 0


def _emit_report(report, as_json: bool) -> int:
    if as_json:
        _print_json(report.to_json_dict())
    else:
        for line in report.summary():
            print(line)
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    claim = args.claim
    if claim == "golden":
        return _emit_report(verification.golden_example(), args.json)
    if claim == "nzd":
        if args.spec is None:
            return _emit_report(verification.verify_nonzerodivisor_matrix(), args.json)
        if args.by is None:
            raise SpecError("a single nonzerodivisor check needs --by")
        spec = _load_spec(args.spec)
        ring = build_edge_ring(spec)
        idl = IDEALS[args.ideal](ring)
        f = _parse_in(ring, idl, args.by)
        return _emit_report(verification.verify_nonzerodivisor(idl, f), args.json)
    if args.spec is None or args.corpus:
        sweeps = {
            "theorem": verification.verify_theorem_sweep,
            "corollary": verification.verify_corollary_sweep,
            "open-qn": verification.verify_open_qn_sweep,
        }
        return _emit_report(sweeps[claim](args.seed), args.json)
    spec = _load_spec(args.spec)
    if claim == "theorem":
        if args.k is not None:
            return _emit_report(verification.verify_theorem_step(spec, args.k), args.json)
        reports = [
            verification.verify_theorem_step(spec, k)
            for k in range(spec.closed, spec.strands - 1)
        ]
        merged = verification.VerificationReport(
            claim="theorem",
            passed=all(r.passed for r in reports),
            checks=sum(r.checks for r in reports),
            failures=[f for r in reports for f in r.failures],
            details=[d for r in reports for d in r.details],
            parameters={"spec": spec.to_json_dict()},
            elapsed_seconds=sum(r.elapsed_seconds for r in reports),
        )
        return _emit_report(merged, args.json)
    if claim == "corollary":
        return _emit_report(verification.verify_corollary(spec), args.json)
    return _emit_report(verification.verify_open_qn(spec), args.json)


def cmd_golden(args) -> int:
    return _emit_report(verification.golden_example(), args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidgb",
        description="Edge-ring ideals of framed braid graphs and their closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec(p, required=True):
        p.add_argument("--spec", required=required, help="path to a graph spec JSON file")

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("graph", help="describe the edge ring of a graph")
    add_spec(p)
    add_json(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("ideal", help="print an ideal's generators")
    add_spec(p)
    p.add_argument("--ideal", required=True, choices=sorted(IDEALS))
    add_json(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("gb", help="print a canonical reduced basis")
    add_spec(p)
    p.add_argument("--ideal", required=True, choices=sorted(IDEALS))
    p.add_argument("--nu", action="store_true",
                   help="project through the next closure and assemble the "
                        "working basis in the ring with nu adjoined")
    p.add_argument("--extra", action="append", default=[], metavar="POLY",
                   help="additional generator (repeatable)")
    add_json(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("quotient", help="divide an ideal by a polynomial")
    add_spec(p)
    p.add_argument("--ideal", required=True, choices=sorted(IDEALS))
    p.add_argument("--by", required=True, metavar="POLY")
    add_json(p)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("intersect", help="intersect two of a graph's ideals")
    add_spec(p)
    p.add_argument("--ideal", required=True, choices=sorted(IDEALS))
    p.add_argument("--other", required=True, choices=sorted(IDEALS))
    add_json(p)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("verify", help="machine-check one of the claims")
    p.add_argument("--claim", required=True,
                   choices=["theorem", "corollary", "open-qn", "nzd", "golden"])
    add_spec(p, required=False)
    p.add_argument("--k", type=int, default=None, help="single closure step to check")
    p.add_argument("--corpus", action="store_true",
                   help="sweep the built-in corpus even when --spec is given")
    p.add_argument("--seed", type=int, default=0, help="corpus framing seed")
    p.add_argument("--ideal", choices=sorted(IDEALS), default="N",
                   help="ideal for a single nonzerodivisor check")
    p.add_argument("--by", metavar="POLY", help="candidate nonzerodivisor")
    add_json(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("golden", help="run the worked three-strand example")
    add_json(p)
    p.set_defaults(func=cmd_golden)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
