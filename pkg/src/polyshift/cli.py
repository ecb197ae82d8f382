"""Command-line interface.

Exit codes: 0 all checks passed, 1 counterexample / failed check,
2 usage or parse error, 3 resource budget exhausted.  Ideal arguments
accept a file path or an inline string, in either the JSON form
{"n": 5, "gens": [[...], ...]} or the text form "x1^2*x3, x2*x4".
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .campaign import CampaignConfig, exit_code_for, run_campaign, threads_from_env
from .errors import IdealParseError, NoLinearQuotientsError, ResourceBudgetError
from .generators import FAMILIES
from .laws import EXHAUSTED, FAILS, LAWS, run_law
from .monomials import MonomialIdeal, format_ideal, maximal_ideal, parse_ideal
from .polymatroids import (
    DiscretePolymatroid,
    check_strong_exchange,
    check_symmetric_exchange,
    exchange_violation,
    is_componentwise_polymatroidal,
    is_matroidal,
    is_polymatroidal,
)
from .primes import ass, localize, v_number
from .resolution import betti, hs, hs_from_tor, koszul_tor
from . import __version__


def _load_ideal(spec: str, n=None) -> MonomialIdeal:
    text = spec
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("{"):
        try:
            return MonomialIdeal.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise IdealParseError(f"invalid JSON: {exc.msg}", exc.pos)
    return parse_ideal(text, n=n)


def _vector(text: str):
    return tuple(int(x) for x in text.replace(",", " ").split())


def _emit(payload, fmt: str, md=None, csv=None):
    if fmt == "md" and md is not None:
        print(md)
    elif fmt == "csv" and csv is not None:
        print(csv)
    else:
        print(json.dumps(payload, sort_keys=True))


def _build_parser():
    p = argparse.ArgumentParser(prog="polyshift", description=__doc__)
    p.add_argument("--version", action="version", version=f"polyshift {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def ideal_arg(sp):
        sp.add_argument("--ideal", required=True, help="path or inline ideal (JSON or text)")
        sp.add_argument("--n", type=int, default=None, help="variable count for text input")

    sp = sub.add_parser("parse", help="normalize an ideal and print it")
    ideal_arg(sp)
    sp.add_argument("--format", choices=["json", "md", "csv"], default="json")

    sp = sub.add_parser("arith", help="ideal arithmetic")
    sp.add_argument(
        "op",
        choices=["product", "power", "colon", "intersect", "socle", "saturate", "component", "restrict"],
    )
    ideal_arg(sp)
    sp.add_argument("--other", help="second ideal for product/colon/intersect")
    sp.add_argument("--monomial", help="monomial for colon, e.g. 'x1*x2'")
    sp.add_argument("--k", type=int, help="exponent for power")
    sp.add_argument("--j", type=int, help="degree for component")
    sp.add_argument("--a", help="cap vector for restrict, e.g. '1,2,0'")
    sp.add_argument("--format", choices=["json", "md", "csv"], default="json")

    sp = sub.add_parser("check", help="structural predicates")
    sp.add_argument(
        "property",
        choices=["polymatroidal", "symmetric", "strong", "matroidal", "componentwise"],
    )
    ideal_arg(sp)

    sp = sub.add_parser("hs", help="homological shift ideal")
    ideal_arg(sp)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--power", type=int, default=1)
    sp.add_argument("--via", choices=["quotients", "tor"], default="quotients")
    sp.add_argument("--char", type=int, default=0)
    sp.add_argument("--format", choices=["json", "md", "csv"], default="json")

    sp = sub.add_parser("betti", help="multigraded Betti table")
    ideal_arg(sp)
    sp.add_argument("--char", type=int, default=0)
    sp.add_argument("--budget", type=int, default=50_000)
    sp.add_argument("--format", choices=["json", "md", "csv"], default="json")

    sp = sub.add_parser("ass", help="associated primes of S/I with witnesses")
    ideal_arg(sp)
    sp.add_argument("--budget", type=int, default=2_000_000)
    sp.add_argument("--format", choices=["json", "md", "csv"], default="json")

    sp = sub.add_parser("vnum", help="v-number")
    ideal_arg(sp)

    sp = sub.add_parser("localize", help="monomial localization at a prime")
    ideal_arg(sp)
    sp.add_argument("--prime", required=True, help="1-based variable list, e.g. '1,2'")

    sp = sub.add_parser("mobius", help="Möbius function of a polymatroid")
    sp.add_argument("--ideal", help="polymatroidal ideal (path or inline)")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--polymatroid", help="path or inline polymatroid JSON")
    sp.add_argument("--point", help="single lattice point, e.g. '1,0,2'")
    sp.add_argument("--dual", action="store_true", help="use the dual w.r.t. the cage")

    sp = sub.add_parser("verify", help="run one law checker")
    ideal_arg(sp)
    sp.add_argument("--law", required=True, choices=sorted(LAWS))
    sp.add_argument("--i", type=int, default=None)
    sp.add_argument("--kmax", type=int, default=None)

    sp = sub.add_parser("fuzz", help="seeded campaign over instance families")
    sp.add_argument("--family", action="append", default=None, choices=sorted(FAMILIES))
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--laws", default="hs-polymatroidal,hs1-product")
    sp.add_argument("--i-list", default="1,2")
    sp.add_argument("--kmax", type=int, default=3)
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--format", choices=["json", "md", "csv"], default="json")
    sp.add_argument("--out", help="write the full report JSON here")
    sp.add_argument("--verdicts", help="write JSON-lines verdicts here")

    return p


def _cmd_parse(args):
    ideal = _load_ideal(args.ideal, args.n)
    _emit(ideal.to_json(), args.format, md=f"`{format_ideal(ideal)}`", csv=format_ideal(ideal))
    return 0


def _cmd_arith(args):
    ideal = _load_ideal(args.ideal, args.n)
    op = args.op
    if op == "product":
        if not args.other:
            raise IdealParseError("product needs --other")
        out = ideal.product(_load_ideal(args.other, ideal.n))
    elif op == "power":
        if args.k is None:
            raise IdealParseError("power needs --k")
        out = ideal.power(args.k)
    elif op == "colon":
        if args.monomial:
            from .monomials import parse_monomial

            out = ideal.colon_monomial(parse_monomial(args.monomial, ideal.n))
        elif args.other:
            out = ideal.colon(_load_ideal(args.other, ideal.n))
        else:
            raise IdealParseError("colon needs --other or --monomial")
    elif op == "intersect":
        if not args.other:
            raise IdealParseError("intersect needs --other")
        out = ideal.intersect(_load_ideal(args.other, ideal.n))
    elif op == "socle":
        out = ideal.socle()
    elif op == "saturate":
        out, steps = ideal.saturation()
        payload = out.to_json()
        payload["sat_number"] = steps
        _emit(payload, args.format, md=f"`{format_ideal(out)}` (sat number {steps})")
        return 0
    elif op == "component":
        if args.j is None:
            raise IdealParseError("component needs --j")
        out = ideal.graded_component(args.j)
    else:  # restrict
        if not args.a:
            raise IdealParseError("restrict needs --a")
        out = ideal.restriction(_vector(args.a))
    _emit(out.to_json(), args.format, md=f"`{format_ideal(out)}`", csv=format_ideal(out))
    return 0


def _cmd_check(args):
    ideal = _load_ideal(args.ideal, args.n)
    prop = args.property
    witness = None
    if prop == "polymatroidal":
        ok = is_polymatroidal(ideal)
        if not ok and not ideal.is_zero and ideal.is_equigenerated:
            u, v, i = exchange_violation(ideal)
            witness = {"u": list(u), "v": list(v), "index": i + 1}
    elif prop == "symmetric":
        ok = check_symmetric_exchange(ideal)
    elif prop == "strong":
        ok = check_strong_exchange(ideal)
    elif prop == "matroidal":
        ok = is_matroidal(ideal)
    else:
        ok = is_componentwise_polymatroidal(ideal)
    print(json.dumps({"property": prop, "holds": ok, "witness": witness}))
    return 0 if ok else 1


def _cmd_hs(args):
    ideal = _load_ideal(args.ideal, args.n).power(args.power)
    if args.via == "tor":
        out = hs_from_tor(ideal, args.i, field_char=args.char)
    else:
        out = hs(ideal, args.i)
    _emit(out.to_json(), args.format, md=f"`{format_ideal(out)}`", csv=format_ideal(out))
    return 0


def _cmd_betti(args):
    ideal = _load_ideal(args.ideal, args.n)
    table = koszul_tor(ideal, field_char=args.char, budget=args.budget)
    _emit(table.to_json(), args.format, md=table.triangle(), csv=",".join(map(str, table.betti_numbers())))
    return 0


def _cmd_ass(args):
    ideal = _load_ideal(args.ideal, args.n)
    result = ass(ideal, budget=args.budget)
    csv = "\n".join(",".join(map(str, p)) for p in sorted(result.to_json()["primes"]))
    _emit(result.to_json(), args.format, csv=csv)
    return 0


def _cmd_vnum(args):
    ideal = _load_ideal(args.ideal, args.n)
    result = ass(ideal)
    print(json.dumps({"v": v_number(ideal, result)}))
    return 0


def _cmd_localize(args):
    ideal = _load_ideal(args.ideal, args.n)
    prime = [i - 1 for i in _vector(args.prime)]
    print(json.dumps(localize(ideal, prime).to_json()))
    return 0


def _cmd_mobius(args):
    if args.polymatroid:
        text = args.polymatroid
        if os.path.exists(text):
            with open(text) as fh:
                text = fh.read()
        poly = DiscretePolymatroid.from_json(text)
    elif args.ideal:
        poly = DiscretePolymatroid.from_ideal(_load_ideal(args.ideal, args.n))
    else:
        raise IdealParseError("mobius needs --ideal or --polymatroid")
    if args.dual:
        poly = poly.dual()
    if args.point:
        v = _vector(args.point)
        print(json.dumps({"point": list(v), "mu": poly.mobius_at(v)}))
    else:
        table = poly.mobius()
        print(json.dumps({" ".join(map(str, p)): table[p] for p in table.points}))
    return 0


def _cmd_verify(args):
    ideal = _load_ideal(args.ideal, args.n)
    kwargs = {}
    if args.i is not None:
        kwargs["i"] = args.i
    if args.kmax is not None:
        kwargs["k_max"] = args.kmax
    verdict = run_law(args.law, ideal, **kwargs)
    print(json.dumps(verdict.to_json(), sort_keys=True))
    if verdict.status == FAILS:
        return 1
    if verdict.status == EXHAUSTED:
        return 3
    return 0


def _cmd_fuzz(args):
    laws = tuple(sorted(LAWS)) if args.laws == "all" else tuple(args.laws.split(","))
    for law in laws:
        if law not in LAWS:
            raise IdealParseError(f"unknown law {law!r}")
    config = CampaignConfig(
        families=tuple(args.family) if args.family else ("veronese", "borel", "multipartite-edge", "transversal-product"),
        count=args.count,
        seed=args.seed,
        laws=laws,
        i_list=tuple(int(x) for x in args.i_list.split(",")),
        k_max=args.kmax,
        n_max=args.n_max,
        threads=threads_from_env(),
    )
    sink = None
    lines = []
    if args.verdicts:
        sink = lines.append
    report = run_campaign(config, verdict_sink=sink)
    if args.verdicts:
        with open(args.verdicts, "w") as fh:
            for vj in lines:
                fh.write(json.dumps(vj, sort_keys=True) + "\n")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report.to_json(), fh, indent=2, sort_keys=True)
    _emit(report.to_json(), args.format, md=report.summary_markdown(), csv=report.summary_csv())
    return exit_code_for(report)


_COMMANDS = {
    "parse": _cmd_parse,
    "arith": _cmd_arith,
    "check": _cmd_check,
    "hs": _cmd_hs,
    "betti": _cmd_betti,
    "ass": _cmd_ass,
    "vnum": _cmd_vnum,
    "localize": _cmd_localize,
    "mobius": _cmd_mobius,
    "verify": _cmd_verify,
    "fuzz": _cmd_fuzz,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except IdealParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceBudgetError as exc:
        print(f"resource budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (ValueError, NoLinearQuotientsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
