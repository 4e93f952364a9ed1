"""Command-line front end: expand, verify, and specialize.

Exit codes: 0 on success (all verifications passing), 1 on a verification
failure, 2 on usage errors.  All arithmetic stays exact; parameters can be
specialized to integers or fractions but never floats.
"""

import argparse
import json
import sys
from fractions import Fraction

from .bivar import BivarPoly
from . import partitions as pt
from .schur import SchurExpansion
from .determinants import bialternant_G
from .identities import (
    g_eval_neg_ones,
    g_eval_ones,
    schur_expand_G,
    schur_expand_g,
)
from .operators import skew_G_series
from .tableaux import enum_g_rbt, iter_rbt
from . import permutations as pm
from .verifiers import REGISTRY


def _parse_fraction(text):
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return int(text)


def _parse_skew(text):
    """Parse "outer/inner" or a plain partition."""
    if "/" in text:
        outer, inner = text.split("/", 1)
        return pt.parse_partition(outer), pt.parse_partition(inner)
    return pt.parse_partition(text), ()


def _render_schur(name, expansion, fmt, alpha=None, beta=None):
    if alpha is not None or beta is not None:
        parts = []
        for lam in expansion.support():
            value = expansion.coeffs[lam].evaluate(alpha or 0, beta or 0)
            if value:
                sym = "s[%s]" % pt.format_partition(lam) if lam else "1"
                parts.append("%s*%s" % (value, sym))
        body = " + ".join(parts) if parts else "0"
    else:
        body = str(expansion)
    if fmt == "json":
        return json.dumps({"name": name, **expansion.to_json()}, sort_keys=True)
    return "%s = %s" % (name, body)


def cmd_expand(args):
    fmt = args.format
    deg = args.deg
    if args.kind == "g":
        lam = pt.parse_partition(args.index)
        if args.dump_tableaux:
            n = max(len(lam), 1)
            for filling, ribbons, weight, content in iter_rbt(lam, (), n):
                print(
                    json.dumps(
                        {
                            "filling": [[r, c, v] for (r, c), v in sorted(filling.items())],
                            "ribbons": [
                                {"value": v, "cells": sorted(map(list, piece))}
                                for v, piece in ribbons
                            ],
                            "weight": str(weight),
                            "monomial": sorted(content.items()),
                        },
                        sort_keys=True,
                    )
                )
            return 0
        name = "g[%s]" % pt.format_partition(lam)
        print(_render_schur(name, schur_expand_g(lam), fmt, args.alpha, args.beta))
        return 0
    if args.kind == "gskew":
        outer, inner = _parse_skew(args.index)
        n = max(pt.skew_size(outer, inner), 1)
        expansion = enum_g_rbt(outer, inner, n).to_schur()
        expansion = SchurExpansion(expansion.coeffs)  # exact polynomial
        name = "g[%s/%s]" % (pt.format_partition(outer), pt.format_partition(inner))
        print(_render_schur(name, expansion, fmt, args.alpha, args.beta))
        return 0
    if args.kind == "G":
        lam = pt.parse_partition(args.index)
        deg = deg if deg is not None else pt.weight(lam) + 4
        nvars = args.nvars or max(len(lam), 1)
        series = bialternant_G(lam, nvars, deg)
        name = "G[%s]" % pt.format_partition(lam)
        if args.schur:
            print(_render_schur(name, series.to_schur(), fmt, args.alpha, args.beta))
        elif fmt == "json":
            print(json.dumps({"name": name, **series.to_schur().to_json()}, sort_keys=True))
        else:
            print("%s = %s" % (name, series))
        return 0
    if args.kind == "Gskew":
        outer, inner = _parse_skew(args.index)
        deg = deg if deg is not None else pt.weight(outer) + 4
        nvars = args.nvars or 2
        series = skew_G_series(outer, inner, nvars, deg)
        name = "G[%s/%s]" % (pt.format_partition(outer), pt.format_partition(inner))
        print("%s = %s" % (name, series))
        return 0
    if args.kind == "Gw":
        w = tuple(int(v) for v in args.index.split(","))
        deg = deg if deg is not None else pm.length(w) + 3
        expansion = pm.expand_G_w_in_G_basis(w, deg)
        if fmt == "json":
            print(
                json.dumps(
                    {
                        "name": "G_w[%s]" % args.index,
                        "coeffs": [
                            {"partition": list(lam), "poly": c.to_json()}
                            for lam, c in sorted(expansion.items())
                        ],
                        "cutoff": deg,
                    },
                    sort_keys=True,
                )
            )
        else:
            parts = [
                "%s*G[%s]" % ("(%s)" % c if len(c.terms) > 1 else c, pt.format_partition(lam))
                if c != 1
                else "G[%s]" % pt.format_partition(lam)
                for lam, c in sorted(expansion.items(), key=lambda kv: (pt.weight(kv[0]), kv[0]))
            ]
            print("G_w[%s] = %s" % (args.index, " + ".join(parts) if parts else "0"))
        return 0
    raise ValueError("unknown expand kind %r" % (args.kind,))


def cmd_verify(args):
    if args.identity not in REGISTRY:
        print(
            "unknown identity %r; choose from: %s"
            % (args.identity, ", ".join(sorted(REGISTRY))),
            file=sys.stderr,
        )
        return 2
    kwargs = {}
    if args.max_weight is not None:
        kwargs["max_weight"] = args.max_weight
    if args.deg is not None:
        kwargs["deg"] = args.deg
    reports = REGISTRY[args.identity](**kwargs)
    failed = 0
    for rep in reports:
        if rep["status"] != "pass":
            failed += 1
        if args.format == "json":
            print(json.dumps(rep, sort_keys=True, default=str))
        elif rep["status"] != "pass" or args.verbose:
            print("%s %s %s" % (rep["status"].upper(), rep["identity"], rep["instance"]))
    if args.format != "json":
        print("%s: %d instance(s), %d failure(s)" % (args.identity, len(reports), failed))
    return 1 if failed else 0


def cmd_specialize(args):
    lam = pt.parse_partition(args.partition)
    alpha = _parse_fraction(args.alpha) if args.alpha is not None else None
    beta = _parse_fraction(args.beta) if args.beta is not None else None
    if args.x == "ones":
        a = alpha if alpha is not None else 0
        b = beta if beta is not None else 1
        value = g_eval_ones(lam, args.n, a, b) if args.kind == "g" else None
        if value is None:
            value = schur_expand_G(lam, args.deg or pt.weight(lam) + 4).evaluate_ones(
                args.n, a, b
            )
        print(value)
        return 0
    if args.x == "neg-ones":
        a = alpha if alpha is not None else 1
        b = beta if beta is not None else 0
        if args.kind == "g":
            value = g_eval_neg_ones(lam, args.n, a, b)
        else:
            value = schur_expand_G(lam, args.deg or pt.weight(lam) + 4).evaluate_neg_ones(
                args.n, a, b
            )
        print(value)
        return 0
    # parameter-only specialization: print the expansion with values filled in
    expansion = schur_expand_g(lam) if args.kind == "g" else schur_expand_G(
        lam, args.deg or pt.weight(lam) + 4
    )
    name = "%s[%s]" % (args.kind, pt.format_partition(lam))
    print(_render_schur(name, expansion, args.format, alpha, beta))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="grothpoly",
        description="Exact canonical stable Grothendieck polynomial calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand a family member")
    p_expand.add_argument("kind", choices=["G", "g", "Gw", "gskew", "Gskew"])
    p_expand.add_argument("index", help="partition '3,2,1' (or 'outer/inner', or a permutation for Gw)")
    p_expand.add_argument("--nvars", type=int, default=None)
    p_expand.add_argument("--deg", type=int, default=None)
    p_expand.add_argument("--alpha", type=_parse_fraction, default=None)
    p_expand.add_argument("--beta", type=_parse_fraction, default=None)
    p_expand.add_argument("--schur", action="store_true", help="G output in the Schur basis")
    p_expand.add_argument("--format", choices=["text", "json"], default="text")
    p_expand.add_argument("--dump-tableaux", action="store_true")
    p_expand.set_defaults(func=cmd_expand)

    p_verify = sub.add_parser("verify", help="run a registered identity check")
    p_verify.add_argument("identity")
    p_verify.add_argument("--max-weight", type=int, default=None)
    p_verify.add_argument("--deg", type=int, default=None)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--verbose", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_spec = sub.add_parser("specialize", help="exact evaluation")
    p_spec.add_argument("kind", choices=["G", "g"])
    p_spec.add_argument("partition")
    p_spec.add_argument("--x", choices=["ones", "neg-ones"], default=None)
    p_spec.add_argument("--n", type=int, default=1)
    p_spec.add_argument("--deg", type=int, default=None)
    p_spec.add_argument("--alpha", default=None)
    p_spec.add_argument("--beta", default=None)
    p_spec.add_argument("--format", choices=["text", "json"], default="text")
    p_spec.set_defaults(func=cmd_specialize)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
