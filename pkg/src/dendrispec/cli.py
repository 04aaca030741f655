"""Command-line interface.

Subcommands: charpoly, spectrum, energy, sweep, verify.  Trees are
selected with --dendrimer L,K or --tuple C1,C2,...; output goes to
stdout (or --out FILE) as text, JSON, or, for sweep, CSV.  JSON output
wraps the result in an envelope {command, params, result, version} and
renders exact integers as decimal strings.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
3 capacity cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .energy import energy_report
from .errors import CapacityError, ConvergenceError, ValidationError
from .polynomials import (
    FactoredPolynomial,
    expand,
    factored_charpoly,
    format_polynomial,
)
from .spectra import spectrum
from .trees import BalancedTree, balanced_tree_from_tuple, dendrimer
from .verification import run_verification

SWEEP_COLUMNS = (
    "l",
    "k",
    "energy",
    "ratio",
    "thm51_lower",
    "thm51_upper",
    "thmB_lower",
    "thmB_upper",
    "mu_k",
    "abs_ratio_minus_2",
    "abs_ratio_minus_mu",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dendrispec",
        description="Characteristic polynomials, spectra, and energy of "
        "balanced trees and dendrimers.",
    )
    parser.add_argument("--version", action="version", version=f"dendrispec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, selector: bool) -> None:
        p.add_argument(
            "--format",
            choices=("text", "json", "csv"),
            default="text",
            help="output format (csv is available for sweep only)",
        )
        p.add_argument("--tol", type=float, default=1e-12, help="numeric tolerance")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
        if selector:
            p.add_argument("--dendrimer", metavar="L,K", help="dendrimer with L layers, branching K")
            p.add_argument("--tuple", dest="tuple_", metavar="C1,C2,...", help="characteristic tuple")

    p = sub.add_parser("charpoly", help="factored characteristic polynomial")
    add_common(p, selector=True)
    p.add_argument("--expand", action="store_true", help="also multiply the factors out")

    p = sub.add_parser("spectrum", help="all eigenvalues with multiplicities")
    add_common(p, selector=True)
    view = p.add_mutually_exclusive_group()
    view.add_argument("--collapsed", action="store_true", help="merge near-equal roots (default)")
    view.add_argument("--raw", action="store_true", help="keep one entry per (root, factor) pair")

    p = sub.add_parser("energy", help="graph energy with optional bounds")
    add_common(p, selector=True)
    p.add_argument("--bounds", action="store_true", help="include sandwich bounds and the ratio limit")
    p.add_argument("--mu-tol", type=float, default=1e-10, help="truncation tolerance for the ratio limit")

    p = sub.add_parser("sweep", help="energy table over a grid of dendrimers")
    add_common(p, selector=False)
    p.add_argument("--l-range", required=True, metavar="A..B", help="layer counts, inclusive")
    p.add_argument("--k-range", required=True, metavar="A..B", help="branching numbers, inclusive")
    p.add_argument("--mu-tol", type=float, default=1e-10, help="truncation tolerance for the ratio limit")

    p = sub.add_parser("verify", help="cross-check fast paths against the brute-force oracle")
    add_common(p, selector=False)
    p.add_argument("--max-n", type=int, default=500, help="largest vertex count in the corpus")
    p.add_argument("--seed", type=int, default=42, help="seed for the random tuple sample")
    p.add_argument("--inject-known-erratum", action="store_true", help=argparse.SUPPRESS)

    return parser


def _write(args: argparse.Namespace, payload: str) -> None:
    if not payload.endswith("\n"):
        payload += "\n"
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)


def _envelope(command: str, params: dict, result) -> str:
    return json.dumps(
        {"command": command, "params": params, "result": result, "version": __version__},
        indent=2,
    )


def _reject_csv(args: argparse.Namespace) -> None:
    if args.format == "csv":
        raise ValidationError("csv output is only available for the sweep command")


def _parse_int_list(text: str, flag: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValidationError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _tree_from_args(args: argparse.Namespace) -> BalancedTree:
    if args.dendrimer and args.tuple_:
        raise ValidationError("give either --dendrimer or --tuple, not both")
    if args.dendrimer:
        values = _parse_int_list(args.dendrimer, "--dendrimer")
        if len(values) != 2:
            raise ValidationError(f"--dendrimer expects L,K, got {args.dendrimer!r}")
        return dendrimer(values[0], values[1])
    if args.tuple_:
        return balanced_tree_from_tuple(_parse_int_list(args.tuple_, "--tuple"))
    raise ValidationError("a tree selector (--dendrimer or --tuple) is required")


def _selector_params(args: argparse.Namespace) -> dict:
    return {
        "dendrimer": _parse_int_list(args.dendrimer, "--dendrimer") if args.dendrimer else None,
        "tuple": _parse_int_list(args.tuple_, "--tuple") if args.tuple_ else None,
        "tol": args.tol,
    }


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
    else:
        lo_text = hi_text = text
    try:
        return int(lo_text), int(hi_text)
    except ValueError:
        raise ValidationError(f"{flag} must look like A..B, got {text!r}") from None


def _format_factored(factored: FactoredPolynomial) -> str:
    parts = []
    for f in factored.factors:
        body = format_polynomial(f.poly)
        if sum(1 for c in f.poly.coeffs if c != 0) > 1:
            body = f"({body})"
        parts.append(body if f.multiplicity == 1 else f"{body}^{f.multiplicity}")
    return " * ".join(parts) if parts else "1"


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.12g}"


def _cmd_charpoly(args: argparse.Namespace) -> int:
    _reject_csv(args)
    tree = _tree_from_args(args)
    factored = factored_charpoly(tree)
    expanded = expand(factored) if args.expand else None
    if args.format == "json":
        result = {
            "n": str(tree.total_vertices),
            "tuple": list(tree.entries),
            "factors": factored.to_json_dict()["factors"],
            "expanded": expanded.to_json_dict() if expanded is not None else None,
        }
        params = _selector_params(args) | {"expand": bool(args.expand)}
        _write(args, _envelope("charpoly", params, result))
    else:
        lines = [f"{tree.label()}  n={tree.total_vertices}"]
        lines.append("P(x) = " + _format_factored(factored))
        if expanded is not None:
            lines.append("expanded: " + format_polynomial(expanded))
        _write(args, "\n".join(lines))
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    _reject_csv(args)
    tree = _tree_from_args(args)
    spec = spectrum(tree, tol=args.tol)
    collapsed = not args.raw
    if args.format == "json":
        params = _selector_params(args) | {"view": "collapsed" if collapsed else "raw"}
        _write(args, _envelope("spectrum", params, spec.to_json_dict(collapsed=collapsed)))
    else:
        entries = spec.collapsed() if collapsed else spec.entries
        view = "collapsed" if collapsed else "raw"
        lines = [f"{tree.label()}  n={tree.total_vertices}  view={view}"]
        lines.append(f"{'value':>18}  {'multiplicity':>14}  {'factor':>6}  method")
        for e in entries:
            lines.append(
                f"{e.value:>18.12g}  {e.multiplicity:>14}  {e.factor_index:>6}  {e.method}"
            )
        _write(args, "\n".join(lines))
    return 0


def _cmd_energy(args: argparse.Namespace) -> int:
    _reject_csv(args)
    tree = _tree_from_args(args)
    report = energy_report(
        tree, tol=args.tol, include_bounds=args.bounds, limit_tol=args.mu_tol
    )
    if args.format == "json":
        params = _selector_params(args) | {"bounds": bool(args.bounds), "mu_tol": args.mu_tol}
        _write(args, _envelope("energy", params, report.to_json_dict()))
    else:
        lines = [f"{tree.label()}  n={tree.total_vertices}"]
        lines.append(f"energy = {_fmt(report.energy)}")
        lines.append(f"method = {report.method}")
        if report.ratio is not None:
            lines.append(f"normalized ratio = {_fmt(report.ratio)}")
        if report.series_bounds is not None:
            lo, hi = report.series_bounds
            note = "  (lower bound negative at this size)" if report.series_lower_negative else ""
            lines.append(f"series bounds: {_fmt(lo)} < energy < {_fmt(hi)}{note}")
        if report.ratio_bounds is not None:
            lo, hi = report.ratio_bounds
            lines.append(f"ratio bounds:  {_fmt(lo)} < energy < {_fmt(hi)}")
        if report.ratio_limit is not None:
            lines.append(f"ratio limit (mu_k) = {_fmt(report.ratio_limit)}")
        _write(args, "\n".join(lines))
    return 0


def _sweep_rows(args: argparse.Namespace) -> list[dict]:
    l_lo, l_hi = _parse_range(args.l_range, "--l-range")
    k_lo, k_hi = _parse_range(args.k_range, "--k-range")
    if l_lo <= l_hi and l_lo < 1:
        raise ValidationError(f"--l-range must start at 1 or higher, got {l_lo}")
    if k_lo <= k_hi and k_lo < 2:
        raise ValidationError(f"--k-range must start at 2 or higher, got {k_lo}")
    rows = []
    for levels in range(l_lo, l_hi + 1):
        for k in range(k_lo, k_hi + 1):
            report = energy_report(
                dendrimer(levels, k),
                tol=args.tol,
                include_bounds=True,
                limit_tol=args.mu_tol,
            )
            series = report.series_bounds or (None, None)
            ratio_b = report.ratio_bounds or (None, None)
            rows.append(
                {
                    "l": levels,
                    "k": k,
                    "energy": report.energy,
                    "ratio": report.ratio,
                    "thm51_lower": series[0],
                    "thm51_upper": series[1],
                    "thmB_lower": ratio_b[0],
                    "thmB_upper": ratio_b[1],
                    "mu_k": report.ratio_limit,
                    "abs_ratio_minus_2": abs(report.ratio - 2.0),
                    "abs_ratio_minus_mu": (
                        abs(report.ratio - report.ratio_limit)
                        if report.ratio_limit is not None
                        else None
                    ),
                }
            )
    return rows


def _cmd_sweep(args: argparse.Namespace) -> int:
    rows = _sweep_rows(args)
    if args.format == "json":
        params = {
            "l_range": list(_parse_range(args.l_range, "--l-range")),
            "k_range": list(_parse_range(args.k_range, "--k-range")),
            "tol": args.tol,
            "mu_tol": args.mu_tol,
        }
        _write(args, _envelope("sweep", params, {"rows": rows}))
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in rows:
            writer.writerow(
                ["" if row[c] is None else row[c] for c in SWEEP_COLUMNS]
            )
        _write(args, buffer.getvalue())
    else:
        lines = ["  ".join(f"{c:>18}" for c in SWEEP_COLUMNS)]
        for row in rows:
            cells = []
            for c in SWEEP_COLUMNS:
                v = row[c]
                cells.append(f"{v:>18}" if isinstance(v, int) else f"{_fmt(v):>18}")
            lines.append("  ".join(cells))
        _write(args, "\n".join(lines))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    _reject_csv(args)
    results = run_verification(
        max_vertices=args.max_n,
        seed=args.seed,
        tol=args.tol,
        inject_erratum=args.inject_known_erratum,
    )
    failures = sum(1 for r in results if not r.passed)
    if args.format == "json":
        params = {
            "max_n": args.max_n,
            "seed": args.seed,
            "tol": args.tol,
            "inject_known_erratum": bool(args.inject_known_erratum),
        }
        result = {
            "checks": [
                {
                    "tree": r.label,
                    "n": str(r.total_vertices),
                    "check": r.check,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in results
            ],
            "total": len(results),
            "failures": failures,
        }
        _write(args, _envelope("verify", params, result))
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.check:<9} {r.label:<16} "
            f"n={r.total_vertices:<4} {r.detail}"
            for r in results
        ]
        lines.append(f"total checks: {len(results)}  failures: {failures}")
        _write(args, "\n".join(lines))
    return 1 if failures else 0


_HANDLERS = {
    "charpoly": _cmd_charpoly,
    "spectrum": _cmd_spectrum,
    "energy": _cmd_energy,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
