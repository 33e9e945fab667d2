import json
import sys
from argparse import ArgumentParser, ArgumentTypeError
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .. import __version__
from ..algebra.lie import LiePoly
from ..algebra.lyndon import enumerate_alsbw, is_alsbw, is_alsw, nlsbw_of, shirshov_bracketing
from ..algebra.order import MonomialOrder, OrderKind
from ..algebra.words import Alphabet, parse_word
from ..errors import OlieError
from ..identities.catalog import OLPI, catalog, get, instantiate
from ..identities.ruleset import RuleSet
from ..rewriting.reduction import cd_dimension_check, reduce
from ..runtime.cache import get_cache_manager
from ..runtime.checker import GS, INCOMPLETE, NOT_GS, GSReport, check_gs
from ..runtime.config import Bounds, Config

desc = """
Gröbner-Shirshov bases for operated Lie algebras:

Checks, at bounded scale, whether the instances of an operated Lie
polynomial identity form a Gröbner-Shirshov basis under the Dl or dt
monomial order, and exposes the underlying word, order, Lyndon-Shirshov
and normal-form machinery.

`olie-gsb check-gs --family rota-baxter --order Dl --max-deg 3`

enumerates the instances phi(u, v) on ordered pairs of basis arguments of degree
at most 3, computes every intersection and including composition between
them and reduces each one modulo the rule set. The exit status is 0 when
every composition is trivial, 1 when a nontrivial composition is found and
2 on usage or I/O errors.

Words are written as space separated primes, the operator as P(...):
`P(x y P(z) y) x y`. Trees use explicit brackets: `(x (P(y) z))`.
"""

EXIT_OK = 0
EXIT_NONTRIVIAL = 1
EXIT_USAGE = 2


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ArgumentTypeError(f"not a rational number: {text!r}")


def _alphabet(text: str) -> Alphabet:
    try:
        return Alphabet.parse(text)
    except OlieError as e:
        raise ArgumentTypeError(str(e))


def _order_kind(text: str) -> OrderKind:
    try:
        return OrderKind.parse(text)
    except ValueError as e:
        raise ArgumentTypeError(str(e))


def _add_order_args(p, required=False):
    p.add_argument("--order", "-O", type=_order_kind, default=None, required=required,
                   help="Monomial order: Dl or dt")
    p.add_argument("--alphabet", "-a", type=_alphabet, default=Alphabet.parse("x>y>z"),
                   help="Letters, greatest first, e.g. x>y>z")


def _add_bounds_args(p):
    p.add_argument("--max-deg", type=int, default=3, help="Maximal degree of instance arguments")
    p.add_argument("--max-odeg", type=int, default=None, help="Maximal operated degree of instance arguments")
    p.add_argument("--max-dep", type=int, default=None, help="Maximal operator nesting depth of instance arguments")
    p.add_argument("--max-ambient-deg", type=int, default=None, help="Skip compositions of larger ambient degree")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="olie-gsb", description=desc)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list-families", help="List the identity catalog")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("compare", help="Compare two words")
    _add_order_args(p, required=True)
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("lsw", help="Lyndon-Shirshov words")
    lsw = p.add_subparsers(dest="action", required=True)
    for action, text in (("is-alsw", "Whether the word is associative Lyndon-Shirshov on its primes"),
                         ("is-alsbw", "Whether the word is an ALSBW word"), ("bracket", "Standard bracketing")):
        a = lsw.add_parser(action, help=text)
        _add_order_args(a)
        a.add_argument("word")
    a = lsw.add_parser("enumerate", help="ALSBW words within the bounds, greatest first")
    _add_order_args(a)
    a.add_argument("--max-deg", type=int, default=3)
    a.add_argument("--max-odeg", type=int, default=None)
    a.add_argument("--max-dep", type=int, default=None)
    a.add_argument("--format", choices=("text", "jsonl"), default="text")

    p = sub.add_parser("normalize", help="Normal form of a Lie polynomial")
    _add_order_args(p)
    p.add_argument("expr", help="c1 * tree1 + c2 * tree2 + ...")

    p = sub.add_parser("instantiate", help="Instance phi(u, v) of an identity, made monic")
    _add_order_args(p)
    p.add_argument("--family", "-f", required=True)
    p.add_argument("--variant", default=None)
    p.add_argument("--sample", type=_fraction, default=None, help="Value of the parameter a")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("reduce", help="Reduce a Lie polynomial modulo the instances of an identity")
    _add_order_args(p)
    p.add_argument("--family", "-f", required=True)
    p.add_argument("--variant", default=None)
    p.add_argument("--sample", type=_fraction, default=None)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("expr")

    p = sub.add_parser("check-gs", help="Bounded Gröbner-Shirshov check of an identity")
    _add_order_args(p)
    _add_bounds_args(p)
    p.add_argument("--family", "-f", required=True)
    p.add_argument("--variant", default=None, help="Variant of a parametric identity (case1, case2); default all")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--sample", "--alpha", type=_fraction, action="append", default=None,
                      help="Check at this value of the parameter instead of symbolically; repeatable")
    mode.add_argument("--symbolic", action="store_true", help="Keep the parameter symbolic (default)")
    p.add_argument("--parallelism", "-j", type=int, default=None)
    p.add_argument("--max-compositions", type=int, default=None)
    p.add_argument("--max-steps", type=int, default=None, help="Reduction step cap per composition")
    p.add_argument("--timeout", type=float, default=None, help="Seconds")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "--report", "-o", type=Path, default=None, help="Write the JSON report here")
    p.add_argument("--timing", action="store_true", help="Include elapsed time in the JSON report")
    p.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("cd-check", help="Composition-Diamond dimension count on a degree slice")
    _add_order_args(p)
    p.add_argument("--family", "-f", required=True, help="Identity name, or 'none' for the empty rule set")
    p.add_argument("--variant", default=None)
    p.add_argument("--sample", type=_fraction, default=None)
    p.add_argument("--deg-bound", type=int, default=3)
    p.add_argument("--max-odeg", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _order(args, phi: Optional[OLPI] = None) -> MonomialOrder:
    kind = args.order if args.order is not None else (phi.gs_order if phi is not None else OrderKind.DL)
    return MonomialOrder(kind, args.alphabet)


def _cmd_list_families(args) -> int:
    rows = []
    for phi in catalog():
        rows.append({
            "name": phi.name,
            "identity": phi.description,
            "operated_degree": phi.operated_degree,
            "gs_order": str(phi.gs_order),
            "non_gs_orders": [str(k) for k in phi.non_gs_orders],
            "variants": list(phi.variant_names),
        })
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            print(f"{r['name']:<28} {r['gs_order']:<3} {r['identity']}")
    return EXIT_OK


def _cmd_compare(args) -> int:
    order = _order(args)
    u, v = parse_word(args.u, order.alphabet), parse_word(args.v, order.alphabet)
    print(order.compare(u, v))
    return EXIT_OK


def _cmd_lsw(args) -> int:
    order = _order(args)
    if args.action == "enumerate":
        words = enumerate_alsbw(order, args.max_deg, args.max_odeg, args.max_dep)
        for w in words:
            if args.format == "jsonl":
                print(json.dumps({"word": str(w), "tree": str(nlsbw_of(w, order)), "deg": w.deg, "odeg": w.odeg}))
            else:
                print(nlsbw_of(w, order))
        return EXIT_OK
    w = parse_word(args.word, order.alphabet)
    if args.action == "is-alsw":
        print(str(is_alsw(w.primes, order.prime_key)).lower())
    elif args.action == "is-alsbw":
        print(str(is_alsbw(w, order)).lower())
    elif is_alsbw(w, order):
        print(nlsbw_of(w, order))
    else:
        print(shirshov_bracketing(w, order))
    return EXIT_OK


def _cmd_normalize(args) -> int:
    print(LiePoly.parse(args.expr, _order(args)))
    return EXIT_OK


def _cmd_instantiate(args) -> int:
    phi = get(args.family)
    order = _order(args, phi)
    u, v = parse_word(args.u, order.alphabet), parse_word(args.v, order.alphabet)
    print(instantiate(phi, u, v, order, args.variant, args.sample))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    phi = get(args.family)
    order = _order(args, phi)
    rules = RuleSet(phi, order, args.variant, args.sample)
    config = Config.from_env(max_reduction_steps=args.max_steps)
    result = reduce(LiePoly.parse(args.expr, order), rules, config.max_reduction_steps)
    if args.format == "json":
        print(json.dumps({
            "remainder": str(result.remainder),
            "trace": [s.to_dict() for s in result.trace]
        }, sort_keys=True, indent=2))
    else:
        for s in result.trace:
            print(f"{s.step}: {s.rule} at {s.placement} * {s.coefficient}: {s.leading_before} -> {s.leading_after}")
        print(result.remainder)
    return EXIT_OK


def _run_check(phi: OLPI, order: MonomialOrder, config: Config, variant: Optional[str],
               sample: Optional[Fraction]) -> GSReport:
    family = phi.name if sample is None else f"{phi.name}@{sample}"
    key = config.cache_key(family, variant, __version__)
    cache = get_cache_manager(key) if config.use_cache else None
    if cache is not None:
        cached = cache.get_json("report.json")
        if cached is not None:
            return GSReport.from_dict(cached)
    report = check_gs(phi, order, config.bounds, config, variant, sample)
    if cache is not None and not report.incomplete:
        cache.put_json("report.json", report.to_dict())
    return report


def _cmd_check_gs(args) -> int:
    phi = get(args.family)
    order = _order(args, phi)
    bounds = Bounds(args.max_deg, args.max_odeg, args.max_dep, args.max_ambient_deg)
    output = None if args.output is None else str(args.output)
    config = Config.from_env(alphabet=str(order.alphabet), order=order.name, bounds=bounds,
                             samples=tuple(args.sample or ()), output=output, format=args.format,
                             parallelism=args.parallelism, max_compositions=args.max_compositions, timeout=args.timeout,
                             max_reduction_steps=args.max_steps, timing=args.timing,
                             use_cache=False if args.no_cache else None)
    config.validate(parametric=phi.parametric)
    variants: List[Optional[str]] = [args.variant] if args.variant else (
        list(phi.variant_names) if len(phi.variants) > 1 else [None])
    reports = []
    for variant in variants:
        samples = list(config.samples) if (phi.template(variant).parametric and config.samples) else [None]
        for sample in samples:
            report = _run_check(phi, order, config, variant, sample)
            reports.append(report)
            if report.elapsed_ms is not None:
                print(f"[olie] {phi.name} {variant or ''} checked in {report.elapsed_ms} ms", file=sys.stderr)
            if report.incomplete:
                print(f"[olie] warning: incomplete run: {'; '.join(report.incomplete_reasons)}", file=sys.stderr)
    failed = any(r.verdict == NOT_GS for r in reports)
    verdict = NOT_GS if failed else (INCOMPLETE if any(r.incomplete for r in reports) else GS)
    document = {
        "verdict": verdict,
        "reports": [r.to_dict(config.timing) for r in reports],
    }
    text = json.dumps(document, sort_keys=True, indent=2) + "\n"
    if config.output is not None:
        Path(config.output).write_text(text)
    if config.format == "json":
        sys.stdout.write(text)
    else:
        for r in reports:
            name = phi.name if r.variant is None else f"{phi.name}:{r.variant}"
            print(f"{name} under {r.order} ({r.parameter}): {r.verdict}; {r.instances} instances, "
                  f"{len(r.compositions)} compositions, {len(r.failures)} nontrivial")
            for c in r.failures[:3]:
                print(f"  {c.kind} <{c.f}, {c.g}> at {c.w}: remainder {c.remainder or c.error}")
    return EXIT_NONTRIVIAL if failed else EXIT_OK


def _cmd_cd_check(args) -> int:
    phi = None if args.family == "none" else get(args.family)
    order = _order(args, phi)
    rules = None if phi is None else RuleSet(phi, order, args.variant, args.sample)
    report = cd_dimension_check(rules, order, args.deg_bound, args.max_odeg)
    if args.format == "json":
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        print(f"deg <= {report.deg_bound}: dim {report.dim} = |Irr| {len(report.irreducible)} + rank {report.rank}: "
              f"{'balanced' if report.balanced else 'UNBALANCED'}")
    return EXIT_OK if report.balanced else EXIT_NONTRIVIAL


COMMANDS = {
    "list-families": _cmd_list_families,
    "compare": _cmd_compare,
    "lsw": _cmd_lsw,
    "normalize": _cmd_normalize,
    "instantiate": _cmd_instantiate,
    "reduce": _cmd_reduce,
    "check-gs": _cmd_check_gs,
    "cd-check": _cmd_cd_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (OlieError, ValueError, OSError) as e:
        print(f"olie-gsb: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
