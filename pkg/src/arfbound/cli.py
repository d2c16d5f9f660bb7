"""Command-line reports over the library.

Subcommands: analyze, order-bound, improved, tower, closure, profile.
Each accepts one semigroup source (--gens, --small, --gaps, --tower,
--inductive) and renders text, JSON, or CSV (--format, default from the
ARFBOUND_FORMAT environment variable).  All output is integer-exact; CSV
uses LF endings, no quoting, booleans as 1/0 and list fields separated by
spaces.  Exit codes: 0 ok, 2 bad input, 1 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import arf, bounds, semigroup, towers

FORMATS = ("text", "json", "csv")


def _parse_int_list(text: str) -> list[int]:
    items = [x for x in text.split(",") if x.strip() != ""]
    if not items:
        raise ValueError("expected a comma-separated list of integers")
    return [int(x) for x in items]


def _parse_l_range(text: str) -> list[int]:
    """Either a single value "5" or an inclusive range "1..8"."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _bool_text(b: bool) -> str:
    return "true" if b else "false"


def _bool_csv(b: bool) -> str:
    return "1" if b else "0"


def _ints(xs) -> str:
    return " ".join(str(x) for x in xs)


def _cell(v) -> str:
    return "-" if v is None else str(v)


def _csv_cell(v) -> str:
    return "" if v is None else str(v)


def _table_lines(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return lines


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _print_csv(headers: list[str], rows: list[list[str]]) -> None:
    sys.stdout.write(",".join(headers) + "\n")
    for row in rows:
        sys.stdout.write(",".join(row) + "\n")


def _resolve_semigroup(args) -> semigroup.NumericalSemigroup:
    if args.gens is not None:
        return semigroup.from_generators(_parse_int_list(args.gens))
    if args.small is not None:
        return semigroup.from_small_elements(_parse_int_list(args.small))
    if args.gaps is not None:
        return semigroup.from_gaps(_parse_int_list(args.gaps))
    if args.tower is not None:
        q, n = args.tower
        return towers.gs_tower_semigroup(q, n)
    if args.inductive is not None:
        a_text, b_text = args.inductive
        spec = towers.InductiveSpec(
            tuple(_parse_int_list(a_text)), tuple(_parse_int_list(b_text)))
        return towers.inductive_semigroup(spec, spec.levels)
    raise ValueError(
        "a semigroup source is required (--gens, --small, --gaps, --tower or --inductive)")


def _add_source_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--gens", metavar="LIST", help="comma-separated generators")
    group.add_argument("--small", metavar="LIST",
                       help="comma-separated elements up to the conductor")
    group.add_argument("--gaps", metavar="LIST", help="comma-separated gaps")
    group.add_argument("--tower", nargs=2, type=int, metavar=("Q", "N"),
                       help="tower semigroup at level N over parameter Q")
    group.add_argument("--inductive", nargs=2, metavar=("ALIST", "BLIST"),
                       help="inductive semigroup from scale factors and thresholds")


def _add_format_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default from ARFBOUND_FORMAT, else text)")


def _effective_format(args) -> str:
    if args.format is not None:
        return args.format
    fmt = os.environ.get("ARFBOUND_FORMAT", "text")
    if fmt not in FORMATS:
        raise ValueError(f"ARFBOUND_FORMAT must be one of {', '.join(FORMATS)}")
    return fmt


def _cmd_analyze(args) -> None:
    S = _resolve_semigroup(args)
    fmt = _effective_format(args)
    gens = S.minimal_generators()
    gaps = S.gaps()
    flags = {
        "arf": arf.is_arf(S),
        "symmetric": S.is_symmetric(),
        "hyperelliptic": S.is_hyperelliptic(),
        "stable": bounds.is_stable(S),
    }
    if fmt == "json":
        payload = {
            "semigroup": S.to_json_dict(),
            "conductor_index": S.conductor_index,
            "generators": list(gens),
            "gaps": list(gaps),
        }
        payload.update(flags)
        _print_json(payload)
    elif fmt == "csv":
        headers = ["small_elements", "conductor", "conductor_index", "genus",
                   "generators", "gaps", "arf", "symmetric", "hyperelliptic",
                   "stable"]
        row = [_ints(S.small_elements), str(S.conductor),
               str(S.conductor_index), str(S.genus), _ints(gens), _ints(gaps)]
        row += [_bool_csv(v) for v in flags.values()]
        _print_csv(headers, [row])
    else:
        print(S.generator_form())
        print(S.gaps_form())
        print(f"small elements: {_ints(S.small_elements)}")
        print(f"conductor: {S.conductor}")
        print(f"conductor index: {S.conductor_index}")
        print(f"genus: {S.genus}")
        for key, value in flags.items():
            print(f"{key}: {_bool_text(value)}")


def _cmd_order_bound(args) -> None:
    S = _resolve_semigroup(args)
    fmt = _effective_format(args)
    ls = _parse_l_range(args.l)
    if ls[0] < 1:
        raise ValueError("l must be positive")
    closed = S.conductor > 0 and arf.is_arf(S)
    bps = bounds.breakpoints(S).breakpoints if closed else None
    table = [(l, bounds.order_bound_arf(S, l) if closed
              else bounds.order_bound_bruteforce(S, l)) for l in ls]
    if fmt == "json":
        _print_json({
            "semigroup": S.to_json_dict(),
            "breakpoints": None if bps is None else list(bps),
            "table": [{"l": l, "d_ord": d} for l, d in table],
        })
    elif fmt == "csv":
        _print_csv(["l", "d_ord"], [[str(l), str(d)] for l, d in table])
    else:
        print(S.generator_form())
        print(f"breakpoints: {_cell(bps if bps is None else _ints(bps))}")
        for line in _table_lines(["l", "d_ord"],
                                 [[str(l), str(d)] for l, d in table]):
            print(line)


def _cmd_improved(args) -> None:
    S = _resolve_semigroup(args)
    fmt = _effective_format(args)
    if args.d is None and args.l is None:
        raise ValueError("improved needs --d or --l")
    if args.d is not None and args.l is not None:
        raise ValueError("give either --d or --l, not both")
    closed = S.conductor > 0 and arf.is_arf(S)
    if args.l is not None:
        d = (bounds.order_bound_arf(S, args.l) if closed
             else bounds.order_bound_bruteforce(S, args.l))
    else:
        d = args.d
    rset = bounds.r_set(S, d)
    sset = bounds.s_set(S, d)
    formula = bounds.r_card_arf(S, d) if closed else None
    improvement = None
    if args.l is not None and args.n is not None:
        rep = bounds.dimension_improvement(S, args.l, args.n)
        improvement = {
            "l": args.l,
            "n": args.n,
            "d": rep.d,
            "dim_cl": rep.dim_cl,
            "dim_improved": rep.dim_improved,
            "delta": rep.delta,
            "codes_equal": rep.delta == 0,
        }
    if fmt == "json":
        _print_json({
            "semigroup": S.to_json_dict(),
            "d": d,
            "r_set": list(rset),
            "s_set": list(sset),
            "r_card": len(rset),
            "r_card_formula": formula,
            "improvement": improvement,
        })
    elif fmt == "csv":
        if improvement is not None:
            headers = ["l", "n", "d", "dim_cl", "dim_improved", "delta",
                       "codes_equal"]
            row = [str(improvement[h]) for h in headers[:-1]]
            row.append(_bool_csv(improvement["codes_equal"]))
            _print_csv(headers, [row])
        else:
            _print_csv(["d", "r_card", "r_card_formula", "r_set", "s_set"],
                       [[str(d), str(len(rset)), _csv_cell(formula),
                         _ints(rset), _ints(sset)]])
    else:
        print(S.generator_form())
        print(f"d: {d}")
        print(f"r_set: {_ints(rset)}")
        print(f"s_set: {_ints(sset)}")
        print(f"r_card: {len(rset)}")
        print(f"r_card formula: {_cell(formula)}")
        if improvement is not None:
            print(f"improvement for l={improvement['l']}, n={improvement['n']}:")
            print(f"  dim_cl: {improvement['dim_cl']}")
            print(f"  dim_improved: {improvement['dim_improved']}")
            print(f"  delta: {improvement['delta']}")
            print(f"  codes equal: {_bool_text(improvement['codes_equal'])}")


def _cmd_tower(args) -> None:
    if args.tower is None:
        raise ValueError("the tower subcommand needs --tower Q N")
    q, n = args.tower
    fmt = _effective_format(args)
    params = towers.tower_params(q, n)
    S = towers.gs_tower_semigroup(q, n)
    bps = towers.tower_breakpoints(q, n, paper_exact=args.paper_exact)
    if fmt == "json":
        _print_json({
            "params": params.to_json_dict(),
            "semigroup": S.to_json_dict(),
            "breakpoints": list(bps),
        })
    elif fmt == "csv":
        headers = ["q", "n", "c_n", "r_n", "g_n", "lambda", "L", "A",
                   "small_elements", "breakpoints"]
        row = [str(params.q), str(params.n), str(params.c_n), str(params.r_n),
               str(params.g_n), _ints(params.lam), _ints(params.L),
               _ints(params.A), _ints(S.small_elements), _ints(bps)]
        _print_csv(headers, [row])
    else:
        print(f"q: {params.q}")
        print(f"n: {params.n}")
        print(f"c_n: {params.c_n}")
        print(f"r_n: {params.r_n}")
        print(f"g_n: {params.g_n}")
        print(f"lambda: {_ints(params.lam)}")
        print(f"L: {_ints(params.L)}")
        print(f"A: {_ints(params.A)}")
        print(f"small elements: {_ints(S.small_elements)}")
        print(f"breakpoints: {_ints(bps)}")


def _cmd_closure(args) -> None:
    S = _resolve_semigroup(args)
    fmt = _effective_format(args)
    C = arf.arf_closure(S)
    added = tuple(x for x in range(S.conductor) if x in C and x not in S)
    if fmt == "json":
        _print_json({
            "input": S.to_json_dict(),
            "closure": C.to_json_dict(),
            "added_poles": list(added),
            "input_arf": arf.is_arf(S),
        })
    elif fmt == "csv":
        _print_csv(["input_small", "closure_small", "added_poles", "input_arf"],
                   [[_ints(S.small_elements), _ints(C.small_elements),
                     _ints(added), _bool_csv(arf.is_arf(S))]])
    else:
        print(f"input: {S.generator_form()}")
        print(f"input arf: {_bool_text(arf.is_arf(S))}")
        print(f"closure: {C.generator_form()}")
        print(f"closure small elements: {_ints(C.small_elements)}")
        print(f"added poles: {_cell(_ints(added) if added else None)}")


def _cmd_profile(args) -> None:
    S = _resolve_semigroup(args)
    fmt = _effective_format(args)
    rows = bounds.code_profile(S, args.n, args.l_max)
    headers = ["l", "rho_l", "d_goppa", "d_ord", "dim_cl", "r_card",
               "improvement"]

    def display(row: bounds.CodeProfileRow) -> list:
        # a distance bound below 1 is vacuous; clamp for display only
        return [row.l, row.rho_l, max(1, row.d_goppa), row.d_ord, row.dim_cl,
                row.r_card, row.improvement]

    if fmt == "json":
        _print_json({
            "semigroup": S.to_json_dict(),
            "n": args.n,
            "rows": [dict(zip(headers, display(r))) for r in rows],
        })
    elif fmt == "csv":
        _print_csv(headers,
                   [[_csv_cell(v) for v in display(r)] for r in rows])
    else:
        print(S.generator_form())
        print(f"n: {args.n}")
        for line in _table_lines(headers,
                                 [[_cell(v) for v in display(r)] for r in rows]):
            print(line)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arfbound",
        description="order bounds and improved-code reports for numerical semigroups")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", help="structure and property flags")
    _add_source_options(p)
    _add_format_option(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("order-bound", help="order bound over a range of l")
    _add_source_options(p)
    _add_format_option(p)
    p.add_argument("--l", required=True, metavar="L|LO..HI",
                   help="single l or inclusive range")
    p.set_defaults(handler=_cmd_order_bound)

    p = sub.add_parser("improved", help="R_d, S_d and dimension improvement")
    _add_source_options(p)
    _add_format_option(p)
    p.add_argument("--d", type=int, help="designed distance for R_d / S_d")
    p.add_argument("--l", type=int, help="derive d as the order bound at l")
    p.add_argument("--n", type=int, help="code length for the dimension report")
    p.set_defaults(handler=_cmd_improved)

    p = sub.add_parser("tower", help="closed-form level parameters")
    _add_source_options(p)
    _add_format_option(p)
    p.add_argument("--paper-exact", action="store_true",
                   help="use the verbatim threshold formula variant")
    p.set_defaults(handler=_cmd_tower)

    p = sub.add_parser("closure", help="smallest Arf semigroup containing S")
    _add_source_options(p)
    _add_format_option(p)
    p.set_defaults(handler=_cmd_closure)

    p = sub.add_parser("profile", help="per-l code parameter table")
    _add_source_options(p)
    _add_format_option(p)
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("--l-max", type=int, required=True, dest="l_max",
                   help="largest l to tabulate")
    p.set_defaults(handler=_cmd_profile)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
