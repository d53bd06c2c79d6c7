"""Command-line front end: field inspection, GAPN verification, construction,
exhaustive search, and one-command reproduction of the claim registry.

Exit codes: 0 success / property affirmed, 1 verified negative (not GAPN or
a failing claim), 2 usage or input error.  Data goes to stdout, diagnostics
to stderr.  The environment variable GAPN_TABLE_CAP overrides the maximum
field size.
"""

import argparse
import csv
import json
import os
import sys

from .constructions import (
    build_even_binomial,
    build_mod3_binomial,
    build_odd_binomial,
    build_trinomial,
)
from .fields import DEFAULT_TABLE_CAP, make_field
from .polynomials import function_from_json, is_gapn
from .search import (
    DEFAULT_BUDGET,
    SearchJob,
    claim_descriptions,
    claim_ids,
    reproduce,
    run_search,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _table_cap() -> int:
    raw = os.environ.get("GAPN_TABLE_CAP")
    return int(raw) if raw else DEFAULT_TABLE_CAP


def _threads(args) -> int:
    if args.threads == 0:
        return os.cpu_count() or 1
    return args.threads


def _parse_vector(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",")]


def cmd_field_info(args) -> int:
    ctx = make_field(args.p, args.n, table_cap=_table_cap())
    info = ctx.to_json()
    info["q"] = ctx.q
    info["primitive_element"] = list(ctx.primitive_element.vector())
    info["subgroup_size"] = len(ctx.subgroup(ctx.p - 1))
    if args.format == "text":
        print(f"GF({ctx.p}^{ctx.n}), q = {ctx.q}")
        print(f"modulus (constant term first): {list(ctx.modulus)}")
        print(f"primitive element g: {list(ctx.primitive_element.vector())}")
        print(f"subgroup <g^(p-1)> size: {info['subgroup_size']}")
    else:
        print(json.dumps(info))
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.function_file, encoding="utf-8") as fh:
        obj = json.load(fh)
    f = function_from_json(obj, table_cap=_table_cap())
    verdict = is_gapn(f)
    if args.format == "text":
        deg = f.algebraic_degree()
        print(f"is_gapn: {verdict.is_gapn}")
        print(f"algebraic degree: {deg}")
        print(f"worst fiber: {verdict.worst_fiber}")
        if verdict.witness is not None:
            a, b = verdict.witness
            print(f"witness: a={list(a.vector())} b={list(b.vector())}")
    else:
        print(json.dumps(verdict.to_json()))
    return EXIT_OK if verdict.is_gapn else EXIT_NEGATIVE


def cmd_construct(args) -> int:
    ctx = make_field(args.p, 2, table_cap=_table_cap())
    family = args.family
    if family == "odd-binomial":
        if args.k is None or args.l is None:
            raise ValueError("odd-binomial requires --k and --l")
        recipe = build_odd_binomial(args.p, args.k, args.l, ctx=ctx)
    elif family == "mod3-binomial":
        if args.h is None:
            raise ValueError("mod3-binomial requires --h")
        recipe = build_mod3_binomial(args.p, args.h, ctx=ctx)
    elif family == "even-binomial":
        if args.h is None:
            raise ValueError("even-binomial requires --h")
        recipe = build_even_binomial(args.p, args.h, ctx=ctx)
    else:
        if args.h is None:
            raise ValueError("trinomial requires --h")
        u = ctx.element(_parse_vector(args.u)) if args.u else None
        v = ctx.element(_parse_vector(args.v)) if args.v else None
        recipe = build_trinomial(args.p, args.h, u=u, v=v, ctx=ctx)
    verdict = is_gapn(recipe.result)
    out = {
        "recipe": recipe.to_json(),
        "function": recipe.result.to_json(),
        "verdict": verdict.to_json(),
    }
    if args.format == "text":
        print(f"family: {recipe.family}, degree {recipe.claimed_degree}")
        print(f"function: {recipe.result!r}")
        print(f"is_gapn: {verdict.is_gapn} (worst fiber {verdict.worst_fiber})")
    else:
        print(json.dumps(out))
    return EXIT_OK if verdict.is_gapn else EXIT_NEGATIVE


def _emit_hits(hits, summary, args) -> None:
    fmt = args.format
    sink = open(args.output, "w", encoding="utf-8", newline="") if args.output else None
    try:
        if fmt == "csv":
            writer = csv.writer(sink if sink else sys.stdout)
            writer.writerow(["ordinal", "degree", "worst_fiber", "p", "n", "function"])
            for h in hits:
                compact = ";".join(
                    f"{e}:{','.join(str(c) for c in coeff.vector())}"
                    for e, coeff in h.function.terms
                )
                writer.writerow(
                    [h.ordinal, h.degree, h.verdict.worst_fiber,
                     h.function.field.p, h.function.field.n, compact]
                )
            print(json.dumps(summary.to_json()), file=sys.stderr)
        elif fmt == "text":
            target = sink if sink else sys.stdout
            for h in hits:
                print(f"#{h.ordinal} degree {h.degree}: {h.function!r}", file=target)
            print(f"examined {summary.examined}, checked {summary.checked}, "
                  f"hits by degree {summary.to_json()['hits_by_degree']}, "
                  f"{summary.elapsed_ms} ms")
        else:
            target = sink if sink else sys.stdout
            for h in hits:
                print(json.dumps(h.to_json()), file=target)
            print(json.dumps(summary.to_json()))
    finally:
        if sink:
            sink.close()


def cmd_search(args) -> int:
    ctx = make_field(args.p, args.n, table_cap=_table_cap())
    job = SearchJob(
        ctx,
        args.shape,
        degree_filter=frozenset(args.degree) if args.degree else None,
        canonicalize=not args.no_canonical,
        limit=args.limit,
        min_digit_sum=args.min_digit_sum,
    )
    hits, summary = run_search(job, budget=args.budget, threads=_threads(args))
    _emit_hits(hits, summary, args)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    ids = claim_ids() if args.claim == "all" else [args.claim]
    reports = [reproduce(claim_id, threads=_threads(args)) for claim_id in ids]
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.claim} ({r.elapsed_ms} ms)")
            if not r.passed:
                print(f"     details: {json.dumps(r.details)}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapn",
        description="Construct and exactly verify GAPN functions over GF(p^n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fi = sub.add_parser("field-info", help="print the canonical field description")
    fi.add_argument("-p", type=int, required=True)
    fi.add_argument("-n", type=int, default=2)
    fi.add_argument("--format", choices=("json", "text"), default="json")
    fi.set_defaults(func=cmd_field_info)

    ve = sub.add_parser("verify", help="GAPN-check a function JSON file")
    ve.add_argument("function_file")
    ve.add_argument("--format", choices=("json", "text"), default="json")
    ve.set_defaults(func=cmd_verify)

    co = sub.add_parser("construct", help="build a GAPN binomial or trinomial")
    co.add_argument("--family", required=True,
                    choices=("odd-binomial", "mod3-binomial", "even-binomial", "trinomial"))
    co.add_argument("-p", type=int, required=True)
    co.add_argument("--h", type=int, default=None)
    co.add_argument("--k", type=int, default=None)
    co.add_argument("--l", type=int, default=None)
    co.add_argument("--u", type=str, default=None,
                    help="coefficient vector, comma separated, constant term first")
    co.add_argument("--v", type=str, default=None)
    co.add_argument("--format", choices=("json", "text"), default="json")
    co.set_defaults(func=cmd_construct)

    se = sub.add_parser("search", help="exhaustively enumerate and GAPN-check a family")
    se.add_argument("-p", type=int, required=True)
    se.add_argument("-n", type=int, default=2)
    se.add_argument("--shape", required=True,
                    choices=("monomial", "binomial", "trinomial", "digitsum-reduced"))
    se.add_argument("--degree", type=int, action="append",
                    help="keep only candidates of this algebraic degree (repeatable)")
    se.add_argument("--no-canonical", action="store_true",
                    help="also enumerate the first coefficient instead of fixing it to 1")
    se.add_argument("--min-digit-sum", type=int, default=None,
                    help="digitsum-reduced: exponent digit-sum threshold (default p; 0 = raw space)")
    se.add_argument("--limit", type=int, default=None)
    se.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    se.add_argument("--threads", type=int, default=0, help="0 = all cores, 1 = serial")
    se.add_argument("--format", choices=("json", "csv", "text"), default="json")
    se.add_argument("-o", "--output", default=None, help="write hits to this file")
    se.set_defaults(func=cmd_search)

    re_ = sub.add_parser("reproduce", help="re-run registered verification claims")
    re_.add_argument("--claim", required=True,
                     help="a claim id or 'all'; see 'gapn reproduce --claim list'")
    re_.add_argument("--threads", type=int, default=0)
    re_.add_argument("--format", choices=("json", "text"), default="text")
    re_.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "claim", None) == "list":
        for cid, desc in claim_descriptions().items():
            print(f"{cid}: {desc}")
        return EXIT_OK
    try:
        return args.func(args)
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())
