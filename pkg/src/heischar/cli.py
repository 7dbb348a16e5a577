"""Command-line front end.

Subcommands
-----------
count       size of a family at (n, q), from its counting polynomial
poly        coefficients of a counting polynomial, optionally evaluated
enumerate   stream the family members themselves, in lexicographic order
map         convert between functionals, lattice paths and partitions
verify      run a named cross-check and report every case as pass/fail
sequences   the named integer sequences with their catalogue tags

Output formats are text (default), json and csv; identical invocations
produce byte-identical output.  Exit codes: 0 success, 1 failed
verification, 2 usage or data errors, 3 when a size guard would be
exceeded (see HEISCHAR_SPACE_LIMIT).

``count`` evaluates polynomials while ``enumerate`` streams the actual
objects, so piping ``enumerate`` through a line count and comparing with
``count`` cross-checks the two routes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from . import bijections, checks, combinat, counting
from .errors import SpaceTooLarge
from .linalg import functional_from_text, functional_to_text

# CLI family -> (object kind, enumeration family, polynomial family)
FAMILIES = {
    "pell": ("paths", "pell", "del"),
    "heis": ("paths", "heis_tilde", "he"),
    "heis_all": ("paths", "heis", "pre_he"),
    "inv": ("paths", "inv_tilde", "inv"),
    "inv_all": ("paths", "inv", "pre_in"),
    "partitions": ("partitions", "all", "bell"),
    "noncrossing": ("partitions", "noncrossing", "cat"),
    "feasible": ("partitions", "feasible", "fe"),
}

MAP_OPS = ("path-to-functional", "functional-to-path", "path-to-partition",
           "partition-to-functional", "classify")


def parse_int_list(text: str) -> list[int]:
    """Inclusive comma/dash list: "3", "2,4", "2-5", "1,3-5,8"."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, dash, b = chunk.partition("-")
        if dash:
            lo, hi = int(a), int(b)
            if hi < lo:
                raise ValueError(f"empty range {chunk!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(a))
    if not out:
        raise ValueError(f"cannot parse integer list {text!r}")
    return out


def _emit(args, lines, payload, rows, fields) -> None:
    if args.format == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        body = buf.getvalue()
    else:
        body = "".join(line + "\n" for line in lines)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _cmd_count(args) -> int:
    _, _, pfam = FAMILIES[args.family]
    results = [{"family": args.family, "n": n, "q": q,
                "value": counting.poly(pfam, n)(q - 1)}
               for n in parse_int_list(args.n) for q in parse_int_list(args.q)]
    if len(results) == 1:
        lines = [str(results[0]["value"])]
        payload = results[0]
    else:
        lines = [f"{r['n']} {r['q']} {r['value']}" for r in results]
        payload = results
    _emit(args, lines, payload, results, ("family", "n", "q", "value"))
    return 0


def _cmd_poly(args) -> int:
    results = []
    for n in parse_int_list(args.n):
        p = counting.poly(args.family, n)
        entry = {"family": args.family, "n": n}
        if args.x is None:
            entry["coefficients"] = list(p.coeffs)
        else:
            entry["x"] = args.x
            entry["value"] = p(args.x)
        results.append(entry)
    if args.x is None:
        fields = ("family", "n", "coefficients")
        rows = [{**r, "coefficients": " ".join(map(str, r["coefficients"]))}
                for r in results]
        lines = [str(r["coefficients"]) if len(results) == 1
                 else f"{r['n']} {r['coefficients']}" for r in results]
    else:
        fields = ("family", "n", "x", "value")
        rows = results
        lines = [str(r["value"]) if len(results) == 1
                 else f"{r['n']} {r['value']}" for r in results]
    _emit(args, lines, results[0] if len(results) == 1 else results, rows, fields)
    return 0


def _cmd_enumerate(args) -> int:
    kind, efam, _ = FAMILIES[args.family]
    blocks, lines, rows = [], [], []
    for n in parse_int_list(args.n):
        for q in parse_int_list(args.q):
            if kind == "paths":
                items = [combinat.path_to_text(p)
                         for p in combinat.enumerate_paths(efam, n, q, args.limit)]
            else:
                items = [combinat.partition_to_text(p)
                         for p in combinat.enumerate_partitions(n, q, efam, args.limit)]
            blocks.append({"family": args.family, "n": n, "q": q, "items": items})
            lines.extend(items)
            rows.extend({"family": args.family, "n": n, "q": q, "item": it}
                        for it in items)
    payload = blocks[0] if len(blocks) == 1 else blocks
    _emit(args, lines, payload, rows, ("family", "n", "q", "item"))
    return 0


def _require(args, flag: str):
    value = getattr(args, flag)
    if value is None:
        raise ValueError(f"map {args.op} requires --{flag}")
    return value


def _cmd_map(args) -> int:
    payload = {"op": args.op, "input": args.text}
    if args.op == "path-to-functional":
        path = combinat.path_from_text(args.text, _require(args, "q"))
        result = functional_to_text(bijections.path_to_functional(path))
    elif args.op == "functional-to-path":
        lam = functional_from_text(args.text)
        result = combinat.path_to_text(bijections.functional_to_path(lam))
    elif args.op == "path-to-partition":
        path = combinat.path_from_text(args.text, _require(args, "q"))
        part = bijections.pell_path_to_partition(path)
        payload["n"] = part.n
        payload["q"] = part.q
        result = combinat.partition_to_text(part)
    elif args.op == "partition-to-functional":
        part = combinat.partition_from_text(
            args.text, _require(args, "n"), _require(args, "q"))
        result = functional_to_text(combinat.partition_to_functional(part))
    else:
        witness = bijections.classify_functional(functional_from_text(args.text))
        payload["kinds"] = list(witness.kinds)
        payload["offending_block"] = witness.offending_block
        result = witness.classification
    payload["result"] = result
    row = {k: ",".join("?" if x is None else x for x in v) if isinstance(v, list)
           else v for k, v in payload.items()}
    _emit(args, [result], payload, [row], tuple(payload))
    return 0


def _cmd_verify(args) -> int:
    ns = parse_int_list(args.n) if args.n else None
    qs = parse_int_list(args.q) if args.q else None
    cases = checks.run_check(args.theorem, ns, qs, args.limit)
    lines, rows = [], []
    for c in cases:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"[{status}] {c.check} n={c.n} q={c.q} {c.quantity}: "
                     f"expected {c.expected} computed {c.computed}")
        rows.append({**asdict(c), "passed": c.passed})
    passed = sum(c.passed for c in cases)
    lines.append(f"{passed}/{len(cases)} cases passed")
    payload = {"check": args.theorem, "passed": passed == len(cases), "report": rows}
    _emit(args, lines, payload, rows,
          ("check", "n", "q", "quantity", "expected", "computed", "passed"))
    return 0 if passed == len(cases) else 1


def _cmd_sequences(args) -> int:
    names = [args.name] if args.name else sorted(counting.SEQUENCES)
    rows, lines = [], []
    for name in names:
        if name not in counting.SEQUENCES:
            raise ValueError(f"unknown sequence {name!r}; known: "
                             + ", ".join(sorted(counting.SEQUENCES)))
        oeis, description, _ = counting.SEQUENCES[name]
        values = counting.sequence_values(name, args.count)
        rows.append({"name": name, "oeis": oeis, "description": description,
                     "values": values})
        lines.append(f"{name} ({oeis}): {' '.join(map(str, values))}"
                     f"  -- {description}")
    payload = rows[0] if len(rows) == 1 else rows
    csv_rows = [{**r, "values": " ".join(map(str, r["values"]))} for r in rows]
    _emit(args, lines, payload, csv_rows, ("name", "oeis", "description", "values"))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format (default text)")
    common.add_argument("--output", metavar="PATH",
                        help="write output to PATH instead of stdout")

    sized = argparse.ArgumentParser(add_help=False)
    sized.add_argument("--limit", type=int, default=None, metavar="N",
                       help="override the state-space size guard")

    ap = argparse.ArgumentParser(
        prog="heischar",
        description="Counting, enumeration and verification for characters "
                    "of unitriangular groups and their quotients.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("count", parents=[common],
                       help="family size at (n, q) from the counting polynomial")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", required=True, help="index or comma/dash list")
    p.add_argument("--q", required=True, help="field order or comma/dash list")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("poly", parents=[common],
                       help="coefficients of a counting polynomial in x = q-1")
    p.add_argument("--family", required=True, choices=list(counting.FAMILIES))
    p.add_argument("--n", required=True, help="index or comma/dash list")
    p.add_argument("--x", type=int, default=None,
                   help="evaluate at integer x instead of printing coefficients")
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("enumerate", parents=[common, sized],
                       help="stream family members, one per line")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", required=True, help="index or comma/dash list")
    p.add_argument("--q", required=True, help="field order or comma/dash list")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("map", parents=[common],
                       help="convert between functionals, paths and partitions")
    p.add_argument("op", choices=MAP_OPS)
    p.add_argument("text", help="input in the textual form of its kind")
    p.add_argument("--n", type=int, default=None,
                   help="ambient size, for partition input")
    p.add_argument("--q", type=int, default=None,
                   help="field order, for path or partition input")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("verify", parents=[common, sized],
                       help="cross-check a named counting statement")
    p.add_argument("theorem", choices=sorted(checks.CHECKS))
    p.add_argument("--n", default=None,
                   help="index sweep (d sweep for tech-lem1); default per check")
    p.add_argument("--q", default=None, help="field order sweep; default per check")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("sequences", parents=[common],
                       help="named integer sequences with catalogue tags")
    p.add_argument("--name", default=None, help="print a single sequence")
    p.add_argument("--count", type=int, default=8, metavar="K",
                   help="number of terms (default 8)")
    p.set_defaults(handler=_cmd_sequences)
    return ap


def run(argv=None) -> int:
    """Entry point; returns the process exit code instead of raising."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except SpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
