"""Command-line interface: ``kronlab <command> ...``.

Partitions are written as comma-separated parts ("8,3,3,1"), with "-"
for the empty partition.  Exit status is 0 on success, 1 when a
``verify`` command finds a failure and 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import golden
from .coefficients import ClosedFormUnavailable, kronecker, reduced_kronecker
from .identities import run_all
from .partition import InvalidShape, format_partition, hook_add, parse
from .characters import WeightMismatch
from .stability import (
    LimitInfeasible,
    OutOfRegion,
    abc_coefficients,
    abc_table_triples,
    classify_direction,
    conj111_search,
    hook_bounds_d,
    hook_bounds_k,
    hook_stable_value,
    q_polynomial,
    row_bounds_kprime,
)
from .symseries import CapExceeded, NonTruncatable

DOMAIN_ERRORS = (
    InvalidShape,
    WeightMismatch,
    ClosedFormUnavailable,
    LimitInfeasible,
    OutOfRegion,
    CapExceeded,
    NonTruncatable,
)

RKRON_METHODS = {"stabilize": "stabilize", "brion": "brion", "closed": "closed"}
HOOK_METHODS = {"series": "series", "poly": "poly", "limit": "limit"}


def _partition_arg(text: str):
    try:
        return parse(text)
    except InvalidShape as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _direction_arg(text: str):
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad direction {text!r}") from exc
    if len(vals) != 3 or min(vals) < 0:
        raise argparse.ArgumentTypeError("direction must be three non-negative integers a,b,c")
    return vals


def worker_count() -> int:
    env = os.environ.get("KRONLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def parallel_map(fn, items):
    """Ordered map, spread over KRONLAB_THREADS worker processes."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(*args) for args in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_star, [(fn, args) for args in items]))


def _star(pair):
    fn, args = pair
    return fn(*args)


# ---------------------------------------------------------------------------
# output


def _emit(out, fmt: str, plain: str, record: dict, csv_rows: list | None = None):
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if csv_rows is None:
            keys = sorted(record)
            csv_rows = [keys, [record[k] for k in keys]]
        writer.writerows(csv_rows)
        out.write(buf.getvalue())
    else:
        out.write(plain + "\n")


def _triple_text(shapes) -> list:
    return [format_partition(p) for p in shapes]


# ---------------------------------------------------------------------------
# commands


def cmd_kron(args, out):
    v = kronecker(*args.shapes)
    _emit(out, args.format, str(v), {"shapes": _triple_text(args.shapes), "value": v})
    return 0


def cmd_rkron(args, out):
    v = reduced_kronecker(*args.shapes, method=RKRON_METHODS[args.method])
    _emit(out, args.format, str(v),
          {"shapes": _triple_text(args.shapes), "method": args.method, "value": v})
    return 0


def cmd_hookstable(args, out):
    v = hook_stable_value(*args.shapes, method=HOOK_METHODS[args.method])
    _emit(out, args.format, str(v),
          {"shapes": _triple_text(args.shapes), "method": args.method, "value": v})
    return 0


def cmd_abc(args, out):
    abc = abc_coefficients(*args.shapes, method=args.method)
    rec = abc.record()
    plain = f"A={abc.A} B={','.join(str(b) for b in abc.B)} C={abc.C}"
    rows = [["A", "B_abc", "B_bac", "B_cab", "C"], [abc.A, *abc.B, abc.C]]
    _emit(out, args.format, plain, rec, rows)
    return 0


def cmd_poly(args, out):
    q = q_polynomial(*args.shapes, args.variant)
    text = str(q.poly)
    rows = [["x", "y", "z", "coefficient"]]
    rows += [[e[0], e[1], e[2], str(c)] for e, c in q.poly.items()]
    _emit(out, args.format, text, {"variant": args.variant, "polynomial": text}, rows)
    return 0


def cmd_bounds(args, out):
    if args.which == "k":
        vals = hook_bounds_k(*args.shapes)
        keys = ["k1", "k2", "k3"]
    elif args.which == "kprime":
        vals = row_bounds_kprime(*args.shapes)
        keys = ["kp1", "kp2", "kp3"]
    else:
        vals = hook_bounds_d(*args.shapes)
        keys = ["d1", "d2", "d3", "d"]
    rec = {k: str(v) for k, v in zip(keys, vals)}
    plain = " ".join(f"{k}={v}" for k, v in zip(keys, vals))
    _emit(out, args.format, plain, rec, [keys, [str(v) for v in vals]])
    return 0


def cmd_classify(args, out):
    report = classify_direction(*args.shapes, *args.dir)
    rec = report.record()
    parts = [rec["kind"]]
    for key in ("value", "slope", "even_offset", "odd_offset"):
        if key in rec:
            parts.append(f"{key}={rec[key]}")
    if rec.get("probed") or rec.get("offsets_probed"):
        parts.append("(probed)")
    flat = {k: v for k, v in rec.items() if not isinstance(v, (dict, list))}
    keys = sorted(flat)
    _emit(out, args.format, " ".join(parts), rec, [keys, [flat[k] for k in keys]])
    return 0


def _hook_row_i(base, i, jmax):
    row = []
    for j in range(jmax + 1):
        lam = hook_add(base, i, j)
        row.append(kronecker(lam, lam, lam))
    return row


def cmd_table_hook(args, out):
    rows = parallel_map(_hook_row_i, [(args.base, i, args.jmax) for i in range(args.imax + 1)])
    header = ["i"] + [str(j) for j in range(args.jmax + 1)]
    csv_rows = [header] + [[i] + row for i, row in enumerate(rows)]
    width = max(len(str(v)) for row in csv_rows for v in row)
    plain = "\n".join(" ".join(str(v).rjust(width) for v in row) for row in csv_rows)
    rec = {"base": format_partition(args.base), "rows": rows}
    _emit(out, args.format, plain, rec, csv_rows)
    return 0


def _abc_table_cells(a, b, c):
    abc = abc_coefficients(a, b, c)
    return [hook_stable_value(a, b, c), abc.A, *abc.B, abc.C]


ABC_TABLE_HEADER = ["alpha", "beta", "gamma", "gbb", "A", "B_abc", "B_bac", "B_cab", "C"]


def cmd_table_appendix(args, out):
    triples = abc_table_triples(args.max_weight)
    cells = parallel_map(_abc_table_cells, triples)
    rows = [_triple_text(t) + vals for t, vals in zip(triples, cells)]
    width = [max(len(str(r[k])) for r in rows + [ABC_TABLE_HEADER]) for k in range(9)]
    plain = "\n".join(" ".join(str(v).rjust(w) for v, w in zip(r, width))
                      for r in [ABC_TABLE_HEADER] + rows)
    rec = {"rows": [dict(zip(ABC_TABLE_HEADER, r)) for r in rows]}
    _emit(out, args.format, plain, rec, [ABC_TABLE_HEADER] + rows)
    return 0


def _verdict(out, fmt, name, failure):
    ok = failure is None
    rec = {"check": name, "ok": ok, "failure": failure}
    plain = f"{name}: " + ("ok" if ok else f"FAIL ({failure})")
    _emit(out, fmt, plain, rec, [["check", "ok", "failure"], [name, ok, failure or ""]])
    return 0 if ok else 1


def cmd_verify_conj111(args, out):
    found = conj111_search(args.max_weight)
    failure = None
    if found is not None:
        failure = "counterexample " + " ".join(_triple_text(found))
    return _verdict(out, args.format, f"conj111 weight<={args.max_weight}", failure)


def cmd_verify_identities(args, out):
    results = run_all(args.max_degree)
    failures = [f"{k}: {v}" for k, v in results.items() if v]
    return _verdict(out, args.format, f"identities degree<={args.max_degree}",
                    "; ".join(failures) or None)


def verify_tables(max_weight: int = 2):
    """First mismatch against the bundled reference tables, or None."""
    want = golden.hook_table_rows()
    for i, row in enumerate(want):
        got = _hook_row_i((3, 3), i, len(row) - 1)
        if got != row:
            return f"hook table row {i}: {got} != {row}"
    for k, v in enumerate(golden.COLUMN_GROWTH_SEQUENCE):
        shapes = ((2, 2) + (1,) * k, (3,) + (1,) * k, (4,) + (1,) * k)
        got = reduced_kronecker(*shapes, method="brion")
        if got != v:
            return f"column growth k={k}: {got} != {v}"
    for a, b, c, gbb, A, B, C in golden.abc_reference_rows():
        if max(sum(a), sum(b), sum(c)) > max_weight:
            continue
        got = (hook_stable_value(a, b, c), abc_coefficients(a, b, c))
        if got[0] != gbb or (got[1].A, got[1].B, got[1].C) != (A, B, C):
            return f"ABC reference row {_triple_text((a, b, c))}"
    return None


def cmd_verify_tables(args, out):
    return _verdict(out, args.format, "tables", verify_tables(args.max_weight))


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    parser = argparse.ArgumentParser(prog="kronlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_triple(p):
        p.add_argument("shapes", nargs=3, type=_partition_arg, metavar="P")
        return p

    p = with_triple(sub.add_parser("kron", parents=[common], help="Kronecker coefficient"))
    p.set_defaults(func=cmd_kron)

    p = with_triple(sub.add_parser("rkron", parents=[common], help="reduced Kronecker coefficient"))
    p.add_argument("--method", choices=sorted(RKRON_METHODS), default="stabilize")
    p.set_defaults(func=cmd_rkron)

    p = with_triple(sub.add_parser("hookstable", parents=[common], help="column-stable value"))
    p.add_argument("--method", choices=sorted(HOOK_METHODS), default="series")
    p.set_defaults(func=cmd_hookstable)

    p = with_triple(sub.add_parser("abc", parents=[common], help="quasipolynomial coefficients"))
    p.add_argument("--method", choices=["poly", "series"], default="poly")
    p.set_defaults(func=cmd_abc)

    p = with_triple(sub.add_parser("poly", parents=[common], help="row or column polynomial"))
    p.add_argument("--variant", choices=["row", "col"], required=True)
    p.set_defaults(func=cmd_poly)

    p = with_triple(sub.add_parser("bounds", parents=[common], help="stability bounds"))
    p.add_argument("--which", choices=["k", "kprime", "d"], required=True)
    p.set_defaults(func=cmd_bounds)

    p = with_triple(sub.add_parser("classify", parents=[common], help="growth along a direction"))
    p.add_argument("--dir", type=_direction_arg, required=True)
    p.set_defaults(func=cmd_classify)

    table = sub.add_parser("table", help="reproduce tables")
    tsub = table.add_subparsers(dest="table", required=True)
    p = tsub.add_parser("hook", parents=[common])
    p.add_argument("--base", type=_partition_arg, required=True)
    p.add_argument("--imax", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)
    p.set_defaults(func=cmd_table_hook)
    p = tsub.add_parser("appendix", parents=[common])
    p.add_argument("--max-weight", type=int, default=2)
    p.set_defaults(func=cmd_table_appendix)

    verify = sub.add_parser("verify", help="verification suites")
    vsub = verify.add_subparsers(dest="suite", required=True)
    p = vsub.add_parser("conj111", parents=[common])
    p.add_argument("--max-weight", type=int, default=6)
    p.set_defaults(func=cmd_verify_conj111)
    p = vsub.add_parser("identities", parents=[common])
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=cmd_verify_identities)
    p = vsub.add_parser("tables", parents=[common])
    p.add_argument("--max-weight", type=int, default=2)
    p.set_defaults(func=cmd_verify_tables)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("imax", "jmax", "max_weight", "max_degree"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            err.write(f"kronlab: --{name.replace('_', '-')} must be non-negative\n")
            return 2
    try:
        return args.func(args, out)
    except DOMAIN_ERRORS as exc:
        err.write(f"kronlab: {type(exc).__name__}: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"kronlab: {type(exc).__name__}: {exc}\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
