"""Command-line front end.

Subcommands mirror the library surface: verify-mixable, build-mixed,
search-triple, count-triples, zsigmondy, catalog and group-info.  Every
run produces one Report object; --json prints its canonical JSON form
and the default prints a text rendering of the same object.  Elements on
the command line are cycle notation when they start with '(' and words
over the group's named generators otherwise.

Exit status: 0 when no condition failed, 1 when one did, 2 on an error.
Skipped conditions only affect the status under --strict.
"""

from __future__ import annotations

import argparse
import sys
from math import gcd
from time import perf_counter

from .bsgs import GroupHandle, build_bsgs, is_perfect
from .catalog import _word_env, data_dir, load_catalog, run_catalog, run_row
from .dicyclic import DicyclicElem
from .errors import BeauvilleError, GenerationFailure, ParseError
from .families import (
    DEFAULT_COUNT_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    alt_mixable,
    alt_product_mixable,
    count_triples_of_type,
    psl2_mixable,
    search_triple,
    zsigmondy,
)
from .groupfile import resolve_group_spec
from .perm import Permutation, parse_cycles
from .product import (
    DEFAULT_ENUM_BUDGET,
    VARIANTS,
    ProdElem,
    build_mixed,
    verify_mixed,
)
from .report import GroupIdentity, Report, ReportCondition
from .triples import (
    FIRST_PAIR_NOT_GENERATING,
    NOT_PERFECT,
    NU_NOT_COPRIME,
    ORDER_X1_ODD,
    ORDER_Y1_ODD,
    SECOND_PAIR_NOT_GENERATING,
    TripleType,
    is_mixable,
    triple_type,
)
from .words import evaluate


def parse_element(text: str, group: GroupHandle) -> Permutation:
    """Cycle notation if it opens with '(' and a point number (or is the
    identity '()'), otherwise a word over the group's named generators.
    Words may themselves open with '(', e.g. '(ab)^5'."""
    text = text.strip()
    if text.startswith("(") and len(text) > 1 and (text[1].isdigit() or text[1] == ")"):
        return parse_cycles(text, degree=group.degree)
    return evaluate(text, _word_env(group))


def _parse_type(text: str) -> TripleType:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"--type wants 'l,m,n', got {text!r}")
    try:
        return TripleType(*(int(p) for p in parts))
    except ValueError:
        raise ParseError(f"--type: non-integer order in {text!r}") from None


def _type_str(t: TripleType) -> str:
    return f"({t.l},{t.m},{t.n})"


def _resolve(spec: str) -> GroupHandle:
    return resolve_group_spec(spec, data_dir=data_dir())


# -- verify-mixable -----------------------------------------------------------


def cmd_verify_mixable(args: argparse.Namespace) -> Report:
    group = _resolve(args.group)
    x1, y1, x2, y2 = (
        parse_element(text, group) for text in (args.x1, args.y1, args.x2, args.y2)
    )
    outcome = is_mixable(group, x1, y1, x2, y2)
    bad = set(outcome.violations)
    t1, t2 = triple_type(x1, y1), triple_type(x2, y2)

    def sub_order(x, y):
        return build_bsgs([x, y], degree=group.degree).order()

    def cond(name, code, fail_witness):
        ok = code not in bad
        return ReportCondition(
            name=name,
            verdict="pass" if ok else "fail",
            witness="" if ok else fail_witness,
        )

    conditions = (
        cond("perfect", NOT_PERFECT, "derived subgroup is proper"),
        cond(
            "first_pair_generates",
            FIRST_PAIR_NOT_GENERATING,
            f"<x1, y1> has order {sub_order(x1, y1)} of {group.order()}",
        ),
        cond(
            "second_pair_generates",
            SECOND_PAIR_NOT_GENERATING,
            f"<x2, y2> has order {sub_order(x2, y2)} of {group.order()}",
        ),
        cond("x1_order_even", ORDER_X1_ODD, f"o(x1) = {t1.l} is odd"),
        cond("y1_order_even", ORDER_Y1_ODD, f"o(y1) = {t1.m} is odd"),
        cond(
            "nu_coprime",
            NU_NOT_COPRIME,
            f"gcd({t1.nu()}, {t2.nu()}) = {gcd(t1.nu(), t2.nu())}",
        ),
    )
    return Report(
        operation="verify-mixable",
        group=GroupIdentity(args.group, group.order(), group.degree),
        conditions=conditions,
        types=(_type_str(t1), _type_str(t2)),
        nu=(t1.nu(), t2.nu()),
        result={
            "type": f"({t1.l},{t1.m},{t1.n};{t2.l},{t2.m},{t2.n})",
            "mixable": outcome.ok,
        },
    )


# -- build-mixed --------------------------------------------------------------


def _structure_source(spec: str):
    """A verified mixable structure plus notes, from a family spec or
    catalog tag.  Returns (None, notes) when the source must be skipped."""

    def param(text: str) -> int:
        try:
            return int(text.rsplit(":", 1)[1])
        except ValueError:
            raise ParseError(f"structure source {spec!r}: non-integer parameter") from None

    if spec.startswith("product:alt:"):
        realized = alt_product_mixable(param(spec))
    elif spec.startswith("alt:"):
        realized = alt_mixable(param(spec))
    elif spec.startswith(("psl2:", "product:psl2:")):
        realized = psl2_mixable(param(spec))
    else:
        rows = {row.tag: row for row in load_catalog()}
        if spec not in rows:
            raise ParseError(
                f"no structure source for {spec!r} (family spec or catalog tag)"
            )
        result = run_row(rows[spec])
        if result.verdict == "skipped":
            return None, (result.detail,)
        if result.verdict == "fail":
            raise GenerationFailure(f"catalog row {spec}: {result.detail}")
        return result.structure, ()
    return realized.structure, realized.notes


def _parse_g_override(text: str, H: GroupHandle, k: int) -> ProdElem:
    parts = text.split(";")
    if len(parts) != 3:
        raise ParseError("--g-override wants 'h1;h2;i,j'")
    h1 = parse_element(parts[0], H)
    h2 = parse_element(parts[1], H)
    ij = parts[2].split(",")
    if len(ij) != 2:
        raise ParseError("--g-override third field wants 'i,j' exponents of q, p")
    try:
        t = DicyclicElem(k, int(ij[0]), int(ij[1]))
    except ValueError as exc:
        raise ParseError(f"--g-override: {exc}") from None
    return ProdElem(h1, h2, t)


def cmd_build_mixed(args: argparse.Namespace) -> Report:
    structure, notes = _structure_source(args.source)
    if structure is None:
        return Report(
            operation="build-mixed",
            conditions=(ReportCondition("data", "skipped", notes[0]),),
            result={"source": args.source},
            notes=notes,
        )
    H = structure.group
    g_override = (
        _parse_g_override(args.g_override, H, args.k) if args.g_override else None
    )
    qd = build_mixed(
        H, structure, args.k, variant=args.variant_remark, g_override=g_override
    )
    result = {
        "k": qd.k,
        "variant": qd.variant,
        "G_order": qd.G_order,
        "G0_order": qd.G0_order,
        "a": str(qd.a),
        "c": str(qd.c),
        "g": str(qd.g),
    }
    if args.check:
        verified = verify_mixed(qd, budget=args.budget)
        conditions = tuple(
            ReportCondition(
                name=c.name,
                verdict="pass" if c.passed else "fail",
                witness=(c.detail if c.passed else (c.witness or c.detail)),
            )
            for c in verified.conditions
        )
        result.update(
            sigma_size=verified.sigma_size,
            sigma_conj_size=verified.sigma_conj_size,
            coset_checked=verified.coset_checked,
            backend=verified.backend,
        )
    else:
        conditions = tuple(
            ReportCondition(name, "skipped", "verification not requested; pass --check")
            for name in ("M1", "M2", "M3", "M4")
        )
    t1, t2 = structure.type6
    return Report(
        operation="build-mixed",
        group=GroupIdentity(args.source, H.order(), H.degree),
        conditions=conditions,
        types=(_type_str(t1), _type_str(t2)),
        nu=(structure.nu1, structure.nu2),
        result=result,
        notes=notes,
    )


# -- search / count / zsigmondy ----------------------------------------------


def cmd_search_triple(args: argparse.Namespace) -> Report:
    group = _resolve(args.group)
    t = _parse_type(args.type)
    found = search_triple(group, t, seed=args.seed, budget=args.budget)
    if found is None:
        condition = ReportCondition(
            "triple_found",
            "fail",
            f"no generating triple of type {_type_str(t)} within budget {args.budget}",
        )
        result = {}
        types = ()
    else:
        condition = ReportCondition("triple_found", "pass")
        result = {
            "x": str(found.x),
            "y": str(found.y),
            "xy": str(found.x * found.y),
            "attempts": found.attempts,
            "hyperbolic": found.type.is_hyperbolic(),
        }
        types = (_type_str(found.type),)
    return Report(
        operation="search-triple",
        group=GroupIdentity(args.group, group.order(), group.degree),
        conditions=(condition,),
        types=types,
        seed=args.seed,
        result=result,
    )


def cmd_count_triples(args: argparse.Namespace) -> Report:
    group = _resolve(args.group)
    t = _parse_type(args.type)
    count = count_triples_of_type(group, t, budget=args.budget)
    return Report(
        operation="count-triples",
        group=GroupIdentity(args.group, group.order(), group.degree),
        types=(_type_str(t),),
        result={"count": count},
    )


def cmd_zsigmondy(args: argparse.Namespace) -> Report:
    prime = zsigmondy(args.a, args.n)
    notes = ()
    if prime is None:
        notes = ("no primitive prime divisor: classical exception",)
    return Report(
        operation="zsigmondy",
        result={"a": args.a, "n": args.n, "prime": prime},
        notes=notes,
    )


# -- catalog / group-info -----------------------------------------------------


def cmd_catalog(args: argparse.Namespace) -> Report:
    results = run_catalog(threads=args.threads)
    conditions = tuple(
        ReportCondition(name=r.row.tag, verdict=r.verdict, witness=r.detail)
        for r in results
    )
    tally = {"pass": 0, "fail": 0, "skipped": 0}
    for r in results:
        tally[r.verdict] += 1
    return Report(
        operation="catalog",
        conditions=conditions,
        result={"rows": len(results), **tally},
    )


def cmd_group_info(args: argparse.Namespace) -> Report:
    group = _resolve(args.group)
    names = group.gen_names or tuple(
        f"g{i}" for i in range(len(group.generators))
    )
    return Report(
        operation="group-info",
        group=GroupIdentity(args.group, group.order(), group.degree),
        result={
            "name": group.name,
            "order": group.order(),
            "degree": group.degree,
            "perfect": is_perfect(group),
            "generators": [
                {"name": name, "cycles": str(gen)}
                for name, gen in zip(names, group.generators)
            ],
        },
    )


# -- wiring -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beauville",
        description="Build and verify mixed Beauville structures on finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit the machine report")
        p.add_argument(
            "--strict",
            action="store_true",
            help="skipped conditions fail the exit status",
        )
        return p

    p = command(
        "verify-mixable",
        cmd_verify_mixable,
        "check the mixable conditions on a quadruple of elements",
    )
    p.add_argument("group", help="group spec: family tag ('alt:6') or data file")
    for slot in ("x1", "y1", "x2", "y2"):
        p.add_argument(slot, help=f"element {slot}: '(…)' cycles or a word")

    p = command(
        "build-mixed",
        cmd_build_mixed,
        "assemble the twisted-product quadruple from a mixable structure",
    )
    p.add_argument(
        "source", help="structure source: alt:n, product:alt:n, psl2:q, or a catalog tag"
    )
    p.add_argument("--k", type=int, default=2, help="twist parameter (default 2)")
    p.add_argument(
        "--check", action="store_true", help="verify M1-M4 by full enumeration"
    )
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_ENUM_BUDGET,
        help="enumeration budget for --check",
    )
    p.add_argument(
        "--g-override",
        dest="g_override",
        default=None,
        help="outer element as 'h1;h2;i,j' (q^i p^j third coordinate)",
    )
    p.add_argument(
        "--variant-remark",
        dest="variant_remark",
        choices=VARIANTS,
        default="standard",
        help="which pair coordinate carries the p-power",
    )

    p = command(
        "search-triple", cmd_search_triple, "seeded search for a generating triple"
    )
    p.add_argument("group")
    p.add_argument("--type", required=True, help="target type 'l,m,n'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)

    p = command(
        "count-triples",
        cmd_count_triples,
        "exact count of generating pairs of a given type",
    )
    p.add_argument("group")
    p.add_argument("--type", required=True, help="target type 'l,m,n'")
    p.add_argument("--budget", type=int, default=DEFAULT_COUNT_BUDGET)

    p = command("zsigmondy", cmd_zsigmondy, "primitive prime divisor of a^n - 1")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = command("catalog", cmd_catalog, "run every bundled catalog row")
    p.add_argument("--threads", type=int, default=1)

    p = command("group-info", cmd_group_info, "resolve a group spec and describe it")
    p.add_argument("group")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    start = perf_counter()
    try:
        report = args.handler(args)
    except BeauvilleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.wall_time_s = perf_counter() - start
    print(report.to_json() if args.json else report.to_text())
    return report.exit_status(strict=args.strict)


if __name__ == "__main__":
    raise SystemExit(main())
