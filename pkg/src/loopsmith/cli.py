"""Command-line interface.

Exit codes: 0 success / claim holds, 1 witness or counterexample found,
2 usage or input error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import sys

from .claims import ClaimId, verify_claim
from .errors import LoopError, NotCentralLoop, OrderTooLarge
from .filters import parse_filter
from .generation import GenSpec, all_loops, dedup_up_to_isomorphism
from .identities import failing_witness
from .io import format_loop, load_loop, save_loop
from .isotopy import principal_isotope, universality_witness
from .morphisms import (coset_criterion_forms, gloop_witness, pseudo_automorphism_companion_check,
                        theta_readings)
from .search import search_counterexample
from .subloops import (center, centrum, is_central_square, is_centrum_square, left_nucleus,
                       middle_nucleus, nucleus, right_nucleus)

OK, FOUND, USAGE, CAP = 0, 1, 2, 3


def _cmd_check(args):
    L = load_loop(args.file)
    print(f"valid loop of order {L.order}, identity {L.identity}")
    if not args.property:
        return OK
    flt = parse_filter(args.property)
    holds = flt(L)
    print(f"{args.property}: {'holds' if holds else 'fails'}")
    if not holds:
        for tag in sorted(flt.tags(), key=lambda t: t.value):
            w = failing_witness(L, tag)
            if w is not None:
                print(f"  {tag.value} fails at {w}")
    return OK if holds else FOUND


def _cmd_nuclei(args):
    L = load_loop(args.file)
    rows = [
        ("left nucleus", left_nucleus(L)), ("right nucleus", right_nucleus(L)),
        ("middle nucleus", middle_nucleus(L)), ("nucleus", nucleus(L)),
        ("centrum", centrum(L)), ("center", center(L)),
    ]
    for name, s in rows:
        print(f"{name:15s} {s}")
    print(f"{'centrum square':15s} {is_centrum_square(L)}")
    print(f"{'central square':15s} {is_central_square(L)}")
    return OK


def _cmd_isotope(args):
    L = load_loop(args.file)
    f = L.identity if args.f is None else args.f
    g = L.identity if args.g is None else args.g
    if not (0 <= f < L.order and 0 <= g < L.order):
        print(f"error: f and g must lie in 0..{L.order - 1}", file=sys.stderr)
        return USAGE
    H = principal_isotope(L, f, g)
    comment = f"{f},{g}-principal isotope of {args.file}; identity {H.identity}"
    if args.output:
        save_loop(H, args.output, comment)
    else:
        sys.stdout.write(format_loop(H, comment))
    return OK


def _cmd_universal(args):
    L = load_loop(args.file)
    side = "left" if args.left else "right" if args.right else "both"
    flt = parse_filter(args.property)
    if not flt(L):
        print(f"loop does not satisfy {args.property}")
        return FOUND
    w = universality_witness(L, flt, side)
    if w is None:
        print(f"{side} universal for {args.property}")
        return OK
    print(f"not {side} universal: the ({w[0]},{w[1]})-principal isotope fails {args.property}")
    return FOUND


def _cmd_gloop(args):
    L = load_loop(args.file)
    method = args.method
    if method in ("direct", "wilson"):
        sides = ["both"] if method == "direct" else ["left", "right"]
        for side in sides:
            w = gloop_witness(L, side)
            if w is not None:
                print(f"not a G-loop: no isomorphism onto the ({w[0]},{w[1]})-principal isotope")
                return FOUND
        print("G-loop")
        return OK
    if method == "theta":
        single, per_pair = theta_readings(L)
        print(f"theta per (x,y): {per_pair}\ntheta shared by all (x,y): {single}")
        return OK if per_pair else FOUND
    if method == "companion":
        ok = pseudo_automorphism_companion_check(L)
        print(f"every element a left and right companion: {ok}")
        return OK if ok else FOUND
    general, c_form = coset_criterion_forms(L)
    print(f"coset criterion: {general}")
    if c_form is not None:
        print(f"nucleus coset criterion (C-loop): {c_form}")
    return OK if general else FOUND


def _cmd_gen(args):
    spec = GenSpec(args.order, filter=args.filter)
    loops = all_loops(spec)
    if args.dedup:
        loops = dedup_up_to_isomorphism(loops)
    if args.count:
        print(sum(1 for _ in loops))
        return OK
    for k, L in enumerate(loops):
        if k:
            sys.stdout.write("\n")
        sys.stdout.write(format_loop(L, f"loop {k}"))
    return OK


def _cmd_search(args):
    w = search_counterexample(args.property, args.order_max, args.target, corpus=args.corpus)
    if w is None:
        print("no counterexample in scope")
        return OK
    what = "fails the property" if w.target == "NOT_UNIVERSAL" else "is not isomorphic to it"
    print(f"{w.label}: the ({w.f},{w.g})-principal isotope {what}")
    sys.stdout.write(format_loop(w.loop, w.label))
    return FOUND


def _cmd_verify(args):
    ids = list(ClaimId) if args.claim == "all" else [ClaimId.parse(args.claim)]
    code = OK
    docs = []
    for cid in ids:
        report = verify_claim(cid, max_order=args.max_order, workers=args.workers,
                              structured=not args.no_structured)
        if args.json:
            docs.append(report.to_json(timings=args.timings))
        else:
            print(report.to_text(timings=args.timings))
        if not report.expected:
            code = FOUND
    if args.json:
        if len(docs) == 1:
            print(docs[0])
        else:
            print("[\n" + ",\n".join(docs) + "\n]")
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="loopsmith", description="Finite loop toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate a loop file, optionally test a property")
    s.add_argument("file")
    s.add_argument("--property", help="filter expression, e.g. 'c & !moufang'")
    s.set_defaults(func=_cmd_check)

    s = sub.add_parser("nuclei", help="nuclei, centrum and center")
    s.add_argument("file")
    s.set_defaults(func=_cmd_nuclei)

    s = sub.add_parser("isotope", help="f,g-principal isotope")
    s.add_argument("file")
    s.add_argument("-f", type=int)
    s.add_argument("-g", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=_cmd_isotope)

    s = sub.add_parser("universal", help="is a property preserved by isotopes")
    s.add_argument("file")
    s.add_argument("--property", required=True)
    side = s.add_mutually_exclusive_group()
    side.add_argument("--left", action="store_true")
    side.add_argument("--right", action="store_true")
    s.set_defaults(func=_cmd_universal)

    s = sub.add_parser("gloop", help="G-loop test")
    s.add_argument("file")
    s.add_argument("--method", default="direct",
                   choices=["direct", "wilson", "theta", "companion", "coset"])
    s.set_defaults(func=_cmd_gloop)

    s = sub.add_parser("gen", help="enumerate normalized loops")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--filter")
    s.add_argument("--dedup", action="store_true")
    s.add_argument("--count", action="store_true", help="print only the number of loops")
    s.set_defaults(func=_cmd_gen)

    s = sub.add_parser("search", help="counterexample search")
    s.add_argument("--order-max", type=int, required=True)
    s.add_argument("--property", required=True)
    s.add_argument("--target", default="NOT_UNIVERSAL",
                   type=lambda t: t.upper().replace("-", "_"),
                   choices=["NOT_UNIVERSAL", "NOT_GLOOP"])
    s.add_argument("--corpus", default="exhaustive", choices=["exhaustive", "structured", "all"])
    s.set_defaults(func=_cmd_search)

    s = sub.add_parser("verify-claim", help="replay a claim over the corpus")
    s.add_argument("claim", help="claim id or 'all': " + ", ".join(c.value for c in ClaimId))
    s.add_argument("--max-order", type=int, default=6)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--no-structured", action="store_true")
    s.add_argument("--json", action="store_true")
    s.add_argument("--timings", action="store_true", help="include elapsed_ms")
    s.set_defaults(func=_cmd_verify)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OrderTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP
    except (LoopError, NotCentralLoop, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
