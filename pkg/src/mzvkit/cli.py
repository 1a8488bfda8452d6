"""Command-line front end: reproducible verification runs with JSON artifacts.

Exit status: 0 when all requested checks pass, 1 on a verification failure,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import identities, numeric, span
from .maps import (
    dual_index,
    index_from_str,
    index_to_str,
    index_to_word,
)
from .ncpoly import NcPoly, check_word
from .series import delta_subst

DEFAULT_ORDER_EQ2 = 12
DEFAULT_ORDER_EQ3 = 8


def _default_order(fallback: int) -> int:
    env = os.environ.get("MZV_DEFAULT_ORDER")
    return int(env) if env else fallback


def _parse_word_or_index(text: str) -> str:
    if text.startswith("("):
        return index_to_word(index_from_str(text))
    return check_word(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(_dump(payload))
    else:
        print(text)


# -- subcommand handlers ----------------------------------------------

def cmd_verify_theorem(args) -> int:
    reports = []
    if args.eq in ("2", "all"):
        reports.append(
            identities.verify_duality_zeta(args.order or _default_order(DEFAULT_ORDER_EQ2))
        )
    if args.eq in ("3", "all"):
        reports.append(
            identities.verify_duality_k1(args.order or _default_order(DEFAULT_ORDER_EQ3))
        )
    if args.eq in ("lemmas", "all"):
        reports.extend(
            identities.verify_proof_steps(args.order or _default_order(DEFAULT_ORDER_EQ3))
        )
    if args.format == "json":
        print(_dump([r.to_dict() for r in reports]))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name} (order {r.order})"
            if not r.passed:
                line += f"  first failure at {r.failing_monomial}: {r.failing_diff}"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify_corollary(args) -> int:
    k = args.weight
    try:
        if args.m is not None or args.l is not None:
            if args.m is None or args.l is None:
                print("error: --m and --l must be given together", file=sys.stderr)
                return 2
            cases = [(args.m, args.l, span.corollary_check(k, args.m, args.l))]
        else:
            cases = span.corollary_check_all(k)
    except span.NotInSpanError as exc:
        print(f"FAIL  {exc}", file=sys.stderr)
        return 1
    certs = [
        {"k": k, "m": m, "l": l, "certificate": cert.to_dict()}
        for m, l, cert in cases
    ]
    if args.certificates:
        with open(args.certificates, "w") as fh:
            fh.write(_dump(certs) + "\n")
    if args.format == "json":
        print(_dump(certs))
    else:
        print(f"PASS  corollary at weight {k}: {len(cases)} case(s) certified")
    return 0


def cmd_dual(args) -> int:
    d = dual_index(index_from_str(args.index))
    _emit(args, {"dual": index_to_str(d)}, index_to_str(d))
    return 0


def cmd_derive(args) -> int:
    from .maps import derivation

    word = _parse_word_or_index(args.arg)
    result = derivation(args.n, NcPoly.word(word))
    print(_dump(result.to_dict()))
    return 0


def cmd_delta(args) -> int:
    word = _parse_word_or_index(args.word)
    s = delta_subst(args.var, NcPoly.word(word), args.order)
    print(_dump(s.to_dict()))
    return 0


def cmd_eval(args) -> int:
    r = numeric.zeta_eval(index_from_str(args.index), args.cutoff)
    payload = {"value": f"{r.value:.12f}", "cutoff": r.cutoff, "tail_bound": f"{r.tail_bound:.12f}"}
    _emit(args, payload, f"value={r.value:.12f} tail_bound={r.tail_bound:.12f}")
    return 0


def cmd_residual(args) -> int:
    with open(args.file) as fh:
        p = NcPoly.from_dict(json.load(fh))
    r = numeric.z_eval(p, args.cutoff)
    payload = {"value": f"{r.value:.12f}", "cutoff": r.cutoff, "tail_bound": f"{r.tail_bound:.12f}"}
    _emit(args, payload, f"value={r.value:.12f} tail_bound={r.tail_bound:.12f}")
    return 0


def cmd_span(args) -> int:
    basis = span.span_basis(args.weight)
    payload = {
        "weight": basis.weight,
        "generators": [
            {"n": g.n, "word": g.word, "image": g.image.to_dict()}
            for g in basis.generators
        ],
    }
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(_dump(payload) + "\n")
    _emit(args, payload, f"weight {basis.weight}: {len(basis.generators)} generators")
    return 0


# -- parser -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzvkit",
        description="Exact verification toolkit for derivation and duality "
        "relations of multiple zeta values.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification suites")
    vsub = p_verify.add_subparsers(dest="what", required=True)

    p_thm = vsub.add_parser("theorem", help="truncated-series identities")
    p_thm.add_argument("--order", type=int, default=None)
    p_thm.add_argument("--eq", choices=("2", "3", "lemmas", "all"), default="all")
    p_thm.set_defaults(func=cmd_verify_theorem)

    p_cor = vsub.add_parser("corollary", help="span membership certificates")
    p_cor.add_argument("--weight", type=int, required=True)
    p_cor.add_argument("--m", type=int, default=None)
    p_cor.add_argument("--l", type=int, default=None)
    p_cor.add_argument("--certificates", metavar="PATH", default=None)
    p_cor.set_defaults(func=cmd_verify_corollary)

    p_dual = sub.add_parser("dual", help="dual of an admissible index")
    p_dual.add_argument("index")
    p_dual.set_defaults(func=cmd_dual)

    p_der = sub.add_parser("derive", help="apply the n-th derivation")
    p_der.add_argument("n", type=int)
    p_der.add_argument("arg", metavar="WORD|INDEX")
    p_der.set_defaults(func=cmd_derive)

    p_delta = sub.add_parser("delta", help="apply Delta_t to a word")
    p_delta.add_argument("--var", choices=("u", "v", "w"), required=True)
    p_delta.add_argument("--order", type=int, required=True)
    p_delta.add_argument("word", metavar="WORD|INDEX")
    p_delta.set_defaults(func=cmd_delta)

    p_eval = sub.add_parser("eval", help="numeric zeta value")
    p_eval.add_argument("index")
    p_eval.add_argument("--cutoff", type=int, required=True)
    p_eval.set_defaults(func=cmd_eval)

    p_res = sub.add_parser("residual", help="numeric Z of an NcPoly JSON file")
    p_res.add_argument("file")
    p_res.add_argument("--cutoff", type=int, required=True)
    p_res.set_defaults(func=cmd_residual)

    p_span = sub.add_parser("span", help="derivation span generators")
    p_span.add_argument("--weight", type=int, required=True)
    p_span.add_argument("--dump", metavar="PATH", default=None)
    p_span.set_defaults(func=cmd_span)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
