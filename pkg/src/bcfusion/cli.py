"""Command-line front end: alcove/fusion queries, character tables, verification.

Exit codes: 0 success, 1 a verification suite failed, 2 usage or domain error.
All numeric output is printed with 12 significant digits and JSON keys are
ordered, so reports are diff-stable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .bmwdual import duality_report
from .errors import WeightParseError
from .fusion import AlcoveParams, FusionTable, alcove_enumerate, fuse
from .qchar import QuantumParams, character_vector, positive_character
from .rootdata import Weight, make_root_datum
from .unitarity import audit, audit_grid
from .verify import DEFAULT_GRID, format_results, run_suite


def parse_weight(text: str) -> Weight:
    """Parse 'a,b,...' with integer or half-integer (n/2) entries."""
    doubled = []
    for part in text.split(","):
        part = part.strip()
        try:
            if "/" in part:
                num, den = part.split("/")
                if int(den) != 2:
                    raise ValueError
                doubled.append(int(num))
            else:
                doubled.append(2 * int(part))
        except ValueError:
            raise WeightParseError(f"malformed weight entry {part!r} in {text!r}") from None
    if not doubled:
        raise WeightParseError("empty weight")
    w = Weight(tuple(doubled))
    if not w.has_uniform_parity:
        raise WeightParseError(f"{text!r} mixes integral and half-integral entries")
    return w


def format_weight(w: Weight) -> str:
    return str(w)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _alcove_params(args) -> AlcoveParams:
    return AlcoveParams(make_root_datum(args.family, args.rank), args.ell)


def cmd_alcove(args) -> int:
    labels = alcove_enumerate(_alcove_params(args))
    if args.format == "json":
        payload = {"family": args.family, "rank": args.rank, "ell": args.ell,
                   "labels": [list(w.doubled) for w in labels]}
        _emit(json.dumps(payload, sort_keys=True), args.output)
    else:
        _emit("\n".join(format_weight(w) for w in labels), args.output)
    return 0


def cmd_fuse(args) -> int:
    params = _alcove_params(args)
    res = fuse(params, parse_weight(args.lhs), parse_weight(args.rhs))
    items = sorted(res.items(), key=lambda p: (sum(p[0].doubled), p[0].doubled))
    if args.format == "json":
        _emit(json.dumps({format_weight(w): c for w, c in items}, sort_keys=True), args.output)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["nu", "coefficient"])
        writer.writerows((format_weight(w), c) for w, c in items)
        _emit(buf.getvalue().rstrip("\n"), args.output)
    else:
        _emit("\n".join(f"{format_weight(w)}  {c}" for w, c in items), args.output)
    return 0


def cmd_matrix(args) -> int:
    params = _alcove_params(args)
    table = FusionTable.build(params)
    if args.lhs is None:
        # whole table, in the byte-stable canonical serialization
        _emit(table.to_json(), args.output)
        return 0
    lam = parse_weight(args.lhs)
    M = table.fusion_matrix(lam)
    if args.format == "json":
        payload = table.to_json_dict()
        payload = {"family": payload["family"], "rank": payload["rank"], "ell": payload["ell"],
                   "labels": payload["labels"], "lambda": list(lam.doubled), "N": M.tolist()}
        _emit(json.dumps(payload, sort_keys=True), args.output)
    else:
        rows = [" ".join(f"{int(x):2d}" for x in row) for row in M]
        _emit("\n".join(rows), args.output)
    return 0


def cmd_chars(args) -> int:
    params = _alcove_params(args)
    z = args.z if args.z is not None else 1
    dim_vec = positive_character(params)
    spin_vec = character_vector(QuantumParams(params, z), params.datum.spin_weight,
                                name=f"dim_spin_z{z}")
    labels = dim_vec.labels
    if args.format == "json":
        payload = {
            "family": "B", "rank": args.rank, "ell": args.ell, "z": z,
            "labels": [list(w.doubled) for w in labels],
            "Dim": [float(_fmt(dim_vec[w])) for w in labels],
            "dim_spin": [float(_fmt(spin_vec[w])) for w in labels],
        }
        _emit(json.dumps(payload, sort_keys=True), args.output)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["label", "Dim", f"dim_spin@z={z}"])
        for w in labels:
            writer.writerow([format_weight(w), _fmt(dim_vec[w]), _fmt(spin_vec[w])])
        text = buf.getvalue().rstrip("\n")
        if args.format == "table":
            text = text.replace(",", "\t")
        _emit(text, args.output)
    return 0


def cmd_verify(args) -> int:
    cells = [(args.rank, args.ell)] if args.rank and args.ell else list(DEFAULT_GRID)
    all_ok = True
    chunks, payload = [], []
    for (k, ell) in cells:
        results = run_suite(k, ell)
        chunks.append(format_results(k, ell, results))
        payload.append({"rank": k, "ell": ell,
                        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                                   for r in results]})
        all_ok = all_ok and all(r.ok for r in results)
    if args.format == "json":
        _emit(json.dumps(payload, sort_keys=True), args.output)
    else:
        _emit("\n".join(chunks), args.output)
    return 0 if all_ok else 1


def cmd_duality(args) -> int:
    report = duality_report(args.rank, args.ell)
    if args.format in ("json", "csv"):
        _emit(json.dumps(report, sort_keys=True), args.output)
    else:
        lines = [f"duality report k={report['k']} ell={report['ell']} (dual type C rank {report['r']})",
                 f"  |Gamma| = {report['gamma_size']}, |alcove| = {report['alcove_size']}",
                 f"  box graph == fusion graph under Psi: {report['homeq_ok']}",
                 f"  ranklevel: {report['ranklevel']}"]
        _emit("\n".join(lines), args.output)
    return 0 if report["homeq_ok"] else 1


def cmd_unitarity(args) -> int:
    if args.rank and args.ell:
        reports = [audit(args.rank, args.ell)]
    else:
        reports = audit_grid(max_ell=args.max_ell)
    if args.format == "json":
        _emit(json.dumps([r.to_json_dict() for r in reports], sort_keys=True), args.output)
    else:
        _emit("\n\n".join(r.format_table() for r in reports), args.output)
    return 0 if all(r.passed or not r.conclusive for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcfusion",
        description="Fusion rings of type B/C quantum groups at odd roots of unity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_ell=True):
        p.add_argument("--family", choices=("B", "C"), default="B")
        p.add_argument("--rank", type=int, required=need_ell)
        p.add_argument("--ell", type=int, required=need_ell)
        p.add_argument("--format", choices=("json", "csv", "table"), default="json")
        p.add_argument("--output", default=None, help="write to this path instead of stdout")

    p = sub.add_parser("alcove", help="list the alcove labels")
    common(p)
    p.set_defaults(func=cmd_alcove)

    p = sub.add_parser("fuse", help="fusion product of two labels")
    common(p)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_fuse)

    p = sub.add_parser("matrix", help="fusion matrix of one label, or the whole table")
    common(p)
    p.add_argument("--lhs", default=None, help="label; omit to dump the full table as JSON")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("chars", help="positive character and spin character at z")
    common(p)
    p.add_argument("--z", type=int, default=None)
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--family", choices=("B",), default="B")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("duality", help="Gamma/Psi/rank-level duality report")
    common(p)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("unitarity", help="unitarity-failure audit")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--max-ell", type=int, default=25)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_unitarity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "z", None) is not None and args.command == "chars":
        if math.gcd(args.z, args.ell) != 1:
            parser.error(f"--z {args.z} is not coprime to ell={args.ell}")
    try:
        return args.func(args)
    except (WeightParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
