"""Command-line front end: spectra, energies, verification suites, and the
bundled reference tables as CSV or JSON.

Exit codes: 0 success, 1 verification failure, 2 argument error, 3 when an
exact method was requested but none covers the input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

from . import __version__
from .analysis import classify, find_borderenergetic_alphas
from .closedform import (
    ALPHA_GRID,
    ClosedFormUnavailable,
    complete_energy,
    energy_report,
    spectrum_for,
)
from .graphs import GraphSpec, parse_spec_label
from .linalg import DEFAULT_GROUP_TOL
from .verification import SCOPES, run_suite

__all__ = ["OutputRecord", "main"]

FAMILY_CHOICES = (
    "uacg",
    "unitary-cayley",
    "complete",
    "complement-uacg",
    "complement-unitary-cayley",
)

# Orders of the bundled energy table (one block of three rows per order) and
# of the two root tables.
TABLE1_NS = (9, 27, 81, 5, 25, 125, 625, 49, 121)
TABLE2_NS = (9, 27, 81, 243, 5)
TABLE3_NS = (9, 27, 81, 5, 25, 125, 625, 49, 121)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_NO_CLOSED_FORM = 3


def _fmt12g(x: float) -> str:
    """Fixed 12-significant-digit float formatting for payloads."""
    return f"{float(x):.12g}"


def _fmt_dec12(x: float) -> str:
    """12 decimal places with trailing zeros trimmed (root-table precision)."""
    s = f"{float(x):.12f}".rstrip("0").rstrip(".")
    return s if s else "0"


def _round_floats(obj: Any) -> Any:
    """Recursively normalize floats to 12 significant digits for JSON."""
    if isinstance(obj, float):
        return float(_fmt12g(obj))
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


@dataclass(frozen=True)
class OutputRecord:
    """Single top-level JSON object every command emits in JSON mode."""

    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    version: str = __version__

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": _round_floats(self.inputs),
            "results": _round_floats(self.results),
            "version": self.version,
        }
        return json.dumps(payload, indent=2)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _parse_family(family: str, n: int) -> GraphSpec:
    return parse_spec_label(family, n)


# ---------------------------------------------------------------------------
# Subcommand implementations.


def _cmd_spectrum(args: argparse.Namespace) -> int:
    spec = _parse_family(args.family, args.n)
    spectrum, used = spectrum_for(spec, args.alpha, method=args.method, group_tol=args.group_tol)
    if args.format == "csv":
        lines = ["value,multiplicity"]
        lines.extend(f"{_fmt12g(v)},{mult}" for v, mult in spectrum.pairs)
        _emit("\n".join(lines) + "\n")
        return EXIT_OK
    record = OutputRecord(
        command="spectrum",
        inputs={
            "family": args.family,
            "n": args.n,
            "alpha": args.alpha,
            "method": args.method,
            "group_tol": args.group_tol,
        },
        results={
            "pairs": [[v, mult] for v, mult in spectrum.pairs],
            "distinct": len(spectrum.pairs),
            "n": spectrum.n,
            "method_used": used,
        },
    )
    _emit(record.to_json())
    return EXIT_OK


def _cmd_energy(args: argparse.Namespace) -> int:
    spec = _parse_family(args.family, args.n)
    report = energy_report(spec, args.alpha)
    if args.format == "csv":
        lines = [
            "family,n,alpha,m,shift,energy,method",
            ",".join(
                (
                    args.family,
                    str(report.n),
                    _fmt12g(report.alpha),
                    str(report.m),
                    _fmt12g(report.shift),
                    _fmt12g(report.energy),
                    report.method,
                )
            ),
        ]
        _emit("\n".join(lines) + "\n")
        return EXIT_OK
    record = OutputRecord(
        command="energy",
        inputs={"family": args.family, "n": args.n, "alpha": args.alpha},
        results={
            "n": report.n,
            "m": report.m,
            "shift": report.shift,
            "energy": report.energy,
            "method": report.method,
        },
    )
    _emit(record.to_json())
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.scope, args.nmax)
    all_passed = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.name}: worst residual {r.worst:.3e} over {r.cases} cases"
        if not r.passed and r.detail:
            line += f" ({r.detail})"
        _emit(line)
        all_passed = all_passed and r.passed
    _emit(f"{'all checks passed' if all_passed else 'CHECKS FAILED'} "
          f"(scope={args.scope}, nmax={args.nmax})")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def _energy_table_rows() -> tuple[list[str], list[dict[str, Any]]]:
    alpha_labels = [_fmt12g(a) for a in ALPHA_GRID]
    rows: list[dict[str, Any]] = []
    for n in TABLE1_NS:
        for family in ("uacg", "complement-uacg", "complete"):
            spec = parse_spec_label(family, n)
            energies = [energy_report(spec, a).energy for a in ALPHA_GRID]
            rows.append({"family": family, "n": n, "energies": energies})
    return alpha_labels, rows


def _root_table_rows(ns: tuple[int, ...], family: str) -> list[dict[str, float]]:
    rows: list[dict[str, float]] = []
    for n in ns:
        spec = parse_spec_label(family, n)
        for root in find_borderenergetic_alphas(spec):
            rows.append(
                {
                    "n": n,
                    "alpha": root,
                    "energy": energy_report(spec, root).energy,
                    "complete_energy": complete_energy(n, root),
                }
            )
    return rows


def _cmd_table(args: argparse.Namespace) -> int:
    if args.which == 1:
        alpha_labels, rows = _energy_table_rows()
        if args.format == "csv":
            lines = ["family,n," + ",".join(alpha_labels)]
            for row in rows:
                cells = [f"{e:.3f}" for e in row["energies"]]
                lines.append(f"{row['family']},{row['n']}," + ",".join(cells))
            _emit("\n".join(lines) + "\n")
            return EXIT_OK
        results = {
            "alphas": alpha_labels,
            "rows": [
                {
                    "family": row["family"],
                    "n": row["n"],
                    "energies": [float(f"{e:.3f}") for e in row["energies"]],
                }
                for row in rows
            ],
        }
    else:
        ns, family = (TABLE2_NS, "uacg") if args.which == 2 else (TABLE3_NS, "complement-uacg")
        rows = _root_table_rows(ns, family)
        if args.format == "csv":
            lines = ["n,alpha,energy,complete_energy"]
            lines.extend(
                f"{row['n']},{_fmt_dec12(row['alpha'])},{_fmt_dec12(row['energy'])},"
                f"{_fmt_dec12(row['complete_energy'])}"
                for row in rows
            )
            _emit("\n".join(lines) + "\n")
            return EXIT_OK
        results = {
            "rows": [
                {
                    "n": row["n"],
                    "alpha": float(_fmt_dec12(row["alpha"])),
                    "energy": float(_fmt_dec12(row["energy"])),
                    "complete_energy": float(_fmt_dec12(row["complete_energy"])),
                }
                for row in rows
            ]
        }
    record = OutputRecord(command="table", inputs={"which": args.which}, results=results)
    _emit(record.to_json())
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    start, end, step = args.alpha_start, args.alpha_end, args.step
    if not 0.0 <= start < end < 1.0:
        raise ValueError(f"need 0 <= alpha-start < alpha-end < 1, got [{start}, {end}]")
    if step <= 0.0:
        raise ValueError(f"step must be positive, got {step}")
    spec = _parse_family(args.family, args.n)
    alphas = []
    k = 0
    while True:
        a = start + k * step
        if a > end + 1e-12:
            break
        alphas.append(min(a, end))
        k += 1
    rows = []
    for a in alphas:
        report = classify(spec, a)
        rows.append(
            {
                "alpha": a,
                "energy": report.energy,
                "complete_energy": report.complete_energy,
                "verdict": report.verdict,
            }
        )
    if args.format == "csv":
        lines = ["alpha,energy,complete_energy,verdict"]
        lines.extend(
            f"{_fmt12g(r['alpha'])},{_fmt12g(r['energy'])},"
            f"{_fmt12g(r['complete_energy'])},{r['verdict']}"
            for r in rows
        )
        _emit("\n".join(lines) + "\n")
        return EXIT_OK
    record = OutputRecord(
        command="sweep",
        inputs={
            "family": args.family,
            "n": args.n,
            "alpha_start": start,
            "alpha_end": end,
            "step": step,
        },
        results={"rows": rows},
    )
    _emit(record.to_json())
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser assembly and entry point.


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uacg",
        description="Spectra, energies and borderenergetic classification "
        "for unit-sum Cayley graph families.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalues of the alpha matrix")
    sp.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    sp.add_argument("--n", required=True, type=int)
    sp.add_argument("--alpha", required=True, type=float)
    sp.add_argument("--method", default="auto", choices=("auto", "closed", "numeric"))
    sp.add_argument("--format", default="json", choices=("json", "csv"))
    sp.add_argument("--group-tol", default=DEFAULT_GROUP_TOL, type=float,
                    help="tolerance for merging nearly equal eigenvalues")
    sp.set_defaults(func=_cmd_spectrum)

    en = sub.add_parser("energy", help="alpha energy of a family member")
    en.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    en.add_argument("--n", required=True, type=int)
    en.add_argument("--alpha", required=True, type=float)
    en.add_argument("--format", default="json", choices=("json", "csv"))
    en.set_defaults(func=_cmd_energy)

    ve = sub.add_parser("verify", help="run the invariant suites")
    ve.add_argument("--scope", default="all", choices=SCOPES)
    ve.add_argument("--nmax", required=True, type=int)
    ve.set_defaults(func=_cmd_verify)

    ta = sub.add_parser("table", help="regenerate a bundled reference table")
    ta.add_argument("--which", required=True, type=int, choices=(1, 2, 3))
    ta.add_argument("--format", default="csv", choices=("json", "csv"))
    ta.set_defaults(func=_cmd_table)

    sw = sub.add_parser("sweep", help="energy and verdict over an alpha range")
    sw.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    sw.add_argument("--n", required=True, type=int)
    sw.add_argument("--alpha-start", required=True, type=float)
    sw.add_argument("--alpha-end", required=True, type=float)
    sw.add_argument("--step", required=True, type=float)
    sw.add_argument("--format", default="csv", choices=("json", "csv"))
    sw.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except ClosedFormUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CLOSED_FORM
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
