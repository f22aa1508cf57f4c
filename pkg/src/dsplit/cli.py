"""
Command line front end.

    dsplit reproduce-paper
    dsplit alexander --pretzel 15 --format json
    dsplit dtable --n 15 --format csv
    dsplit obstruct-split --p 3 --q 5
    dsplit obstruct-metabolizer --n 15
    dsplit staircase --n 15

Exit status: 0 on success, 2 on bad arguments or unmet preconditions, 1 when
a computed value is internally inconsistent (e.g. a non-integral d).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import alexpoly, dinv, obstruct, staircase

PAPER_N = 15


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _knot_n(args) -> int:
    if args.n is not None:
        if args.p is not None and args.q is not None and args.n != args.p * args.q:
            raise UsageError(f"--n {args.n} disagrees with --p {args.p} --q {args.q}")
        return args.n
    if args.p is not None and args.q is not None:
        return args.p * args.q
    return PAPER_N


def _generators(args, n: int) -> tuple[frozenset, str]:
    if args.staircase_file:
        st = staircase.load_staircase(args.staircase_file)
        return st.as_set(), str(args.staircase_file)
    if n == 1:
        return staircase.unit_staircase(0).as_set(), "trivial"
    if n == PAPER_N:
        return staircase.paper_tensor(), "T(14,15) # 22 Wh(T(2,3))"
    if n >= 15 and n % 4 == 3:
        return staircase.family_staircase(n), f"extrapolated T({n - 1},{n}) # {(3 * n - 1) // 2} Wh(T(2,3))"
    raise UsageError(f"no built-in staircase for n = {n}; pass --staircase-file")


def _table(args) -> dinv.DTable:
    n = _knot_n(args)
    if n < 1 or n % 2 == 0:
        raise UsageError(f"n must be odd and positive, got {n}")
    gens, source = _generators(args, n)
    return dinv.d_table(gens, n * n, args.convention, source=source)


def cmd_alexander(args) -> str:
    if args.p is not None or args.q is not None:
        if args.p is None or args.q is None:
            raise UsageError("--p and --q go together")
        factors = alexpoly.cyclotomic_split(args.p, args.q)
        names = [f"phi_{2 * args.p}", f"phi_{2 * args.q}", f"phi_{2 * args.p * args.q}"]
        product = factors[0] * factors[1] * factors[2]
        if args.format == "json":
            return _dump({
                "factors": [{"name": nm, "poly": f.to_pairs(), "value_at_minus_1": f(-1)}
                            for nm, f in zip(names, factors)],
                "product": product.to_pairs(),
                "product_equals_torus2": product == alexpoly.torus2_alexander(args.p * args.q),
            })
        rows = [[nm, str(f), f(-1)] for nm, f in zip(names, factors)]
        if args.format == "csv":
            return _csv([["name", "poly", "value_at_minus_1"], *rows])
        return "\n".join(f"{nm}(t) = {f}    [value at -1: {v}]" for nm, f, v in rows) + "\n"

    if args.torus is not None:
        label, poly = f"T(2,{args.torus})", alexpoly.torus2_alexander(args.torus)
    elif args.cyclotomic is not None:
        label, poly = f"phi_{args.cyclotomic}", alexpoly.cyclotomic(args.cyclotomic)
    else:
        n = args.pretzel if args.pretzel is not None else (args.n if args.n is not None else PAPER_N)
        label, poly = f"K_{n}", alexpoly.pretzel_alexander(n)
    det = alexpoly.homology_order(poly)
    if args.format == "json":
        return _dump({"knot": label, "poly": poly.to_pairs(), "determinant": det, "text": str(poly)})
    if args.format == "csv":
        return _csv([["exponent", "coefficient"], *poly.to_pairs()])
    return f"Delta_{label}(t) = {poly}\ndeterminant = {det}\n"


def cmd_staircase(args) -> str:
    if args.staircase_file:
        gens = staircase.load_staircase(args.staircase_file).generators
    elif args.unit is not None:
        gens = staircase.unit_staircase(args.unit).generators
    else:
        n = args.n if args.n is not None else PAPER_N
        gens = staircase.consecutive_torus_staircase(n).generators
    pairs = [[g.alpha, g.beta] for g in gens]
    if args.format == "json":
        return _dump({"count": len(pairs), "generators": pairs})
    if args.format == "csv":
        return _csv([["alpha", "beta"], *pairs])
    return f"{len(pairs)} generators\n" + "\n".join(f"({a}, {b})" for a, b in pairs) + "\n"


def cmd_dtable(args) -> str:
    table = _table(args)
    if args.format == "json":
        return table.to_json() + "\n"
    if args.format == "csv":
        return table.to_csv()
    lines = ["| m | d |", "|---|---|"] + [f"| {m} | {table.values[m]} |" for m in table.labels()]
    return "\n".join(lines) + "\n"


def _primes(args) -> tuple[int, int]:
    if args.p is None and args.q is None and args.n in (None, PAPER_N):
        return 3, 5
    if args.p is None or args.q is None:
        raise UsageError("--p and --q are required unless n = 15")
    return args.p, args.q


def cmd_obstruct_split(args) -> str:
    p, q = _primes(args)
    if args.n is None:
        args.n = p * q
    table = _table(args)
    grid = obstruct.split_obstruction(table, p, q)
    if args.format == "json":
        return _dump({"p": p, "q": q, "a": grid.a, "b": grid.b, "D": [list(c) for c in grid.D],
                      "obstructed": grid.obstructed, "convention": table.convention})
    if args.format == "csv":
        return _csv([["i", "j", "D"], *[[i, j, grid.D[i][j]] for i in range(p) for j in range(q)]])
    return ("-(d(ipa+jqb) - d(ipa) - d(jqb))\n\n" + grid.to_markdown()
            + f"\nobstructed: {str(grid.obstructed).lower()}\n")


def cmd_obstruct_metabolizer(args) -> str:
    table = _table(args)
    cands = obstruct.metabolizer_obstruction(table)
    blocked = not any(c.is_metabolizer for c in cands)
    if args.format == "json":
        return _dump({"N": table.N, "linking_form": "-xy/N mod 1",
                      "candidates": [c.to_dict() for c in cands], "obstructed": blocked})
    rows = [[c.generator, c.order, str(c.linking_vanishes).lower(), str(c.d_vanishes).lower()] for c in cands]
    if args.format == "csv":
        return _csv([["generator", "order", "linking_vanishes", "d_vanishes"], *rows])
    lines = ["| generator | order | linking vanishes | d vanishes |", "|---|---|---|---|"]
    lines += [f"| {g} | {o} | {lk} | {dv} |" for g, o, lk, dv in rows]
    return "\n".join(lines) + f"\n\nobstructed: {str(blocked).lower()}\n"


def cmd_reproduce_paper(args) -> str:
    args.n = PAPER_N
    table = _table(args)
    labels = dinv.grid_labels(3, 5)
    t1 = [[table.integer(m) for m in row] for row in labels]
    grid = obstruct.split_obstruction(table, 3, 5)
    t2 = grid.reversed_rows()
    if args.format == "json":
        return _dump({"N": table.N, "convention": table.convention, "labels": labels,
                      "table1": t1, "table2": t2, "obstructed": grid.obstructed})
    if args.format == "csv":
        rows = [["table", "i", "j", "m", "value"]]
        rows += [[1, i, j, labels[j][i], t1[j][i]] for j in range(5) for i in range(3)]
        rows += [[2, i, j, labels[j][i], t2[j][i]] for j in range(5) for i in range(3)]
        return _csv(rows)
    return ("Table 1: d(M, ipa + jqb), N = 225, a = 25, b = 9\n\n" + obstruct.markdown_grid(t1)
            + "\nTable 2: -(d(M, ipa + jqb) - d(M, ipa) - d(M, jqb))\n\n" + obstruct.markdown_grid(t2)
            + f"\nobstructed: {str(grid.obstructed).lower()}\n")


COMMANDS = {
    "alexander": cmd_alexander,
    "staircase": cmd_staircase,
    "dtable": cmd_dtable,
    "obstruct-split": cmd_obstruct_split,
    "obstruct-metabolizer": cmd_obstruct_metabolizer,
    "reproduce-paper": cmd_reproduce_paper,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="knot parameter n (N = n^2)")
    common.add_argument("--p", type=int)
    common.add_argument("--q", type=int)
    common.add_argument("--format", choices=["md", "csv", "json"], default="md")
    common.add_argument("--convention", choices=list(dinv.CONVENTIONS), default="table1")
    common.add_argument("--staircase-file", type=Path)
    common.add_argument("--out", type=Path, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="dsplit", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "alexander":
            group = sp.add_mutually_exclusive_group()
            group.add_argument("--pretzel", type=int)
            group.add_argument("--torus", type=int)
            group.add_argument("--cyclotomic", type=int)
        elif name == "staircase":
            sp.add_argument("--unit", type=int, help="unit staircase of size k")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = COMMANDS[args.command](args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"dsplit: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"dsplit: inconsistency: {exc}", file=sys.stderr)
        return 1
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
