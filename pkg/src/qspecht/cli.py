"""Command-line interface.

Every subcommand supports ``--format json`` for machine-readable output with
a stable schema; identical invocations produce byte-identical output.  Exit
status is 0 only when no violations or errors occurred (an undetermined
adjustment entry is reported, not treated as an error).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import adjustment as adj
from .core import (
    as_multicharge,
    degree_parity,
    format_multipartition,
    multipartition_size,
    parse_multipartition,
    parse_residues,
)
from .crystal import restricted_multipartitions
from .fock import decomposition_matrix, simple_qdims
from .specht import (
    qdim_specht,
    qdim_truncation,
    verify_hecke_even,
    verify_row_degree_parity,
    verify_specht_parity,
)
from .tableaux import residue_sequence, standard_tableaux_with_degrees


class UsageError(Exception):
    pass


def _parse_charge(text: str):
    try:
        return as_multicharge(parse_residues(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_shape(text: str, charge):
    try:
        lam = parse_multipartition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(lam) != len(charge):
        raise UsageError(
            f"shape has {len(lam)} components but charge has {len(charge)}"
        )
    return lam


def _check_level(args, charge) -> None:
    if getattr(args, "level", None) is not None and args.level != len(charge):
        raise UsageError(f"--level {args.level} does not match charge length {len(charge)}")


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_qdim(args) -> int:
    charge = _parse_charge(args.charge)
    _check_level(args, charge)
    lam = _parse_shape(args.shape, charge)
    poly = qdim_specht(lam, charge)
    payload = {
        "lambda": format_multipartition(lam),
        "charge": list(charge),
        "parity": degree_parity(lam, charge),
        "qdim": poly.to_pairs(),
    }
    _emit(payload, [str(poly)], args.format)
    return 0


def _cmd_truncate(args) -> int:
    charge = _parse_charge(args.charge)
    _check_level(args, charge)
    lam = _parse_shape(args.shape, charge)
    try:
        residues = parse_residues(args.residues)
        poly = qdim_truncation(lam, charge, residues)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "lambda": format_multipartition(lam),
        "charge": list(charge),
        "residues": list(residues),
        "qdim": poly.to_pairs(),
    }
    _emit(payload, [str(poly)], args.format)
    return 0


def _cmd_tableaux(args) -> int:
    charge = _parse_charge(args.charge)
    _check_level(args, charge)
    lam = _parse_shape(args.shape, charge)
    wanted = None
    if args.residues is not None:
        try:
            wanted = parse_residues(args.residues)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if len(wanted) != multipartition_size(lam):
            raise UsageError("residue sequence length does not match the shape size")
    listing = []
    for t, deg in standard_tableaux_with_degrees(lam, charge):
        seq = residue_sequence(t, charge)
        if wanted is not None and seq != wanted:
            continue
        listing.append((t, deg, seq))
    payload = {
        "lambda": format_multipartition(lam),
        "charge": list(charge),
        "count": len(listing),
        "tableaux": [
            dict(t.to_json(), degree=deg, residues=list(seq))
            for t, deg, seq in listing
        ],
    }
    lines = [f"count: {len(listing)}"]
    for t, deg, seq in listing:
        lines.append(
            f"{t.compact()}  degree={deg}  residues={','.join(map(str, seq))}"
        )
    _emit(payload, lines, args.format)
    return 0


def _report_output(report, fmt: str) -> int:
    lines = [
        f"check: {report.check}",
        f"parameters: {report.parameters}",
        f"checked: {report.checked}",
    ]
    lines += [f"violation: {v}" for v in report.violations]
    lines += [f"note: {n}" for n in report.notes]
    lines.append("result: ok" if report.ok else "result: FAILED")
    _emit(report.to_json(), lines, fmt)
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    charge = _parse_charge(args.charge)
    _check_level(args, charge)
    if args.what == "parity":
        report = verify_specht_parity(args.d, charge, parallel=args.parallel)
    elif args.what == "row-degree":
        report = verify_row_degree_parity(args.d, charge, parallel=args.parallel)
    else:
        report = verify_hecke_even(args.d, charge)
    return _report_output(report, args.format)


def _cmd_restricted(args) -> int:
    charge = _parse_charge(args.charge)
    _check_level(args, charge)
    found = sorted(restricted_multipartitions(args.d, charge))
    names = [format_multipartition(lam) for lam in found]
    payload = {"d": args.d, "charge": list(charge), "restricted": names}
    _emit(payload, [f"count: {len(names)}"] + names, args.format)
    return 0


def _cmd_llt(args) -> int:
    charge = _parse_charge(args.charge)
    if len(charge) != 1:
        raise UsageError("the canonical-basis computation is level-1 only")
    matrix = decomposition_matrix(args.d, charge)
    simples = simple_qdims(args.d, charge, matrix)
    violations = []
    for lam in matrix.rows:
        for mu in matrix.cols:
            entry = matrix.entry(lam, mu)
            parity = (degree_parity((lam,), charge) + degree_parity((mu,), charge)) % 2
            if not entry.is_pure_parity(parity):
                violations.append(f"entry ({lam}, {mu}) = {entry} impure")
    for mu, poly in simples.items():
        if not poly.is_bar_symmetric():
            violations.append(f"simple qdim for {mu} not bar-symmetric: {poly}")
        if not poly.is_pure_parity(degree_parity((mu,), charge)):
            violations.append(f"simple qdim for {mu} impure: {poly}")

    def name(p):
        return ",".join(map(str, p)) if p else "-"

    if args.format == "csv":
        rows = ["lambda," + ",".join(f'"{name(mu)}"' for mu in matrix.cols)]
        for lam in matrix.rows:
            cells = [f'"{matrix.entry(lam, mu)}"' for mu in matrix.cols]
            rows.append(f'"{name(lam)}",' + ",".join(cells))
        for line in rows:
            print(line)
        return 0 if not violations else 1

    payload = {
        "d": args.d,
        "charge": list(charge),
        "matrix": matrix.to_json(),
        "simples": {name(mu): simples[mu].to_pairs() for mu in matrix.cols},
        "parity_violations": violations,
    }
    lines = [f"decomposition matrix for d={args.d} (rows x cols = "
             f"{len(matrix.rows)} x {len(matrix.cols)})"]
    label_width = max((len(name(lam)) for lam in matrix.rows), default=1)
    col_widths = [
        max(len(name(mu)), max((len(str(matrix.entry(lam, mu))) for lam in matrix.rows), default=1))
        for mu in matrix.cols
    ]
    header = "  ".join(name(mu).rjust(w) for mu, w in zip(matrix.cols, col_widths))
    lines.append(" " * label_width + "  " + header)
    for lam in matrix.rows:
        cells = "  ".join(
            str(matrix.entry(lam, mu)).rjust(w) for mu, w in zip(matrix.cols, col_widths)
        )
        lines.append(f"{name(lam).ljust(label_width)}  {cells}")
    lines.append("simple graded dimensions:")
    for mu in matrix.cols:
        lines.append(f"  D({name(mu)}) = {simples[mu]}")
    lines += [f"violation: {v}" for v in violations]
    _emit(payload, lines, args.format)
    return 0 if not violations else 1


def _cmd_adjustment(args) -> int:
    charge = _parse_charge(args.charge)
    reports = [
        adj.evidence_report(ev, charge, args.bound) for ev in adj.published_evidence()
    ]
    payload = {"charge": list(charge), "entries": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        ev = r.evidence
        lines.append(
            f"lambda={','.join(map(str, ev.lam))}  mu={','.join(map(str, ev.mu))}  "
            f"a(1)={ev.ungraded_value}  p={ev.p}"
        )
        if r.tableau_count is not None:
            lines.append(f"  tableaux with the column residue sequence: {r.tableau_count}")
            lines.append(f"  degrees: {list(r.degrees)}")
        lines.append(f"  candidates: {[str(f) for f in r.candidates]}")
        lines.append(
            f"  pinned: {r.pinned}" if r.pinned is not None else f"  {r.note}"
        )
    _emit(payload, lines, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qspecht",
        description="Exact graded-dimension combinatorics for cyclotomic "
        "KLR/Hecke algebras in quantum characteristic 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, fmt=("text", "json"), charge=True, level=True):
        p.add_argument("--format", choices=fmt, default="text")
        if charge:
            p.add_argument("--charge", default="0", help="comma-separated residues")
        if level:
            p.add_argument("--level", type=int, default=None)

    p = sub.add_parser("qdim", help="graded dimension of a Specht module")
    p.add_argument("--lambda", dest="shape", required=True)
    common(p)
    p.set_defaults(func=_cmd_qdim)

    p = sub.add_parser("truncate", help="graded dimension of a residue truncation")
    p.add_argument("--lambda", dest="shape", required=True)
    p.add_argument("--residues", required=True)
    common(p)
    p.set_defaults(func=_cmd_truncate)

    p = sub.add_parser("tableaux", help="enumerate standard tableaux")
    p.add_argument("--lambda", dest="shape", required=True)
    p.add_argument("--residues", default=None)
    common(p)
    p.set_defaults(func=_cmd_tableaux)

    p = sub.add_parser("verify", help="exhaustive checks over all shapes of a size")
    p.add_argument("what", choices=("parity", "row-degree", "hecke"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--parallel", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("restricted", help="restricted multipartitions of a size")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_restricted)

    p = sub.add_parser("llt", help="characteristic-0 graded decomposition matrix")
    p.add_argument("--d", type=int, required=True)
    common(p, fmt=("text", "json", "csv"), level=False)
    p.set_defaults(func=_cmd_llt)

    p = sub.add_parser("adjustment", help="pin graded adjustment entries")
    p.add_argument("--bound", type=int, default=None)
    common(p, level=False)
    p.set_defaults(func=_cmd_adjustment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
