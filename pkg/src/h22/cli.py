"""Command-line front end: verification suites, kernel/operator dumps, symbols.

    h22 verify all --seed 7 --format json
    h22 kernel 0.3 --trunc 128
    h22 operator comp --symbol phi.csv --trunc 64
    h22 symbols 0.3 0.2 1.0 --out run1

Exit status: 0 on success (verify: no "fail" verdicts; "finding" entries do
not fail a run), 1 when a verify run contains failures, 2 on invalid
arguments or violated preconditions.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import harness, reporting
from .operators import (
    composition_matrix,
    hs_partial_sum,
    multiplication_matrix,
    operator_norm_estimate,
    weighted_composition_matrix,
)
from .series import evaluate, sup_norm_estimate
from .spaces import SPACES, kernel_series, norm_sq, space_by_name
from .symmetry import (
    SymbolParams,
    default_grid,
    kernel_identity_residual,
    symbols_from_params,
    symmetry_residual,
    z3w_coefficient_check,
)

__all__ = ["main"]

_FORMATS = ("json", "csv", "human")


@dataclass(frozen=True)
class CliConfig:
    space: object
    truncation: int
    seed: int
    output_format: str
    output_path: str | None

    def __post_init__(self):
        if self.truncation < 8:
            raise ValueError("truncation order must be >= 8")


def _config(args) -> CliConfig:
    return CliConfig(
        space=space_by_name(args.space),
        truncation=args.trunc,
        seed=args.seed,
        output_format=args.format,
        output_path=args.out,
    )


def _emit(text: str, path: str | None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_complex(text: str) -> complex:
    try:
        z = complex(text.replace(" ", ""))
    except ValueError:
        raise ValueError(f"cannot parse complex number from {text!r}") from None
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ValueError("complex argument must be finite")
    return z


def cmd_verify(args) -> int:
    cfg = _config(args)
    reports = harness.run_suite(args.suite, seed=cfg.seed)
    if cfg.output_format == "json":
        text = reporting.reports_json(reports)
    elif cfg.output_format == "csv":
        text = reporting.reports_csv(reports)
    else:
        text = reporting.reports_human(reports)
    _emit(text, cfg.output_path)
    return 1 if any(r.verdict == "fail" for r in reports) else 0


def cmd_kernel(args) -> int:
    cfg = _config(args)
    w = _parse_complex(args.w_point)
    k = kernel_series(w, order=cfg.truncation, space=cfg.space)
    value = evaluate(k, w)
    nsq = norm_sq(k, cfg.space)
    text = reporting.series_csv(k)
    text += f"# K_w(w),{reporting.format_float(value.real)},{reporting.format_float(value.imag)}\n"
    text += f"# norm_sq,{reporting.format_float(nsq)}\n"
    _emit(text, cfg.output_path)
    return 0


def cmd_operator(args) -> int:
    cfg = _config(args)
    symbol = reporting.parse_series_csv(Path(args.symbol).read_text())
    if args.kind in ("comp", "wcomp"):
        est = sup_norm_estimate(symbol)
        if est.lower > 1.0 + 1e-12:
            raise ValueError(
                f"composition symbol is not a self-map: sampled sup = {est.lower:g}"
            )
    if args.kind == "mult":
        t = multiplication_matrix(symbol, cfg.truncation, cfg.space)
    elif args.kind == "comp":
        t = composition_matrix(symbol, cfg.truncation, cfg.space)
    else:
        if not args.weight:
            raise ValueError("wcomp needs --weight with the multiplier coefficients")
        psi = reporting.parse_series_csv(Path(args.weight).read_text())
        t = weighted_composition_matrix(psi, symbol, cfg.truncation, cfg.space)

    text = reporting.matrix_csv(t.entries)
    sigma = operator_norm_estimate(t)
    text += f"# operator_norm_estimate,{reporting.format_float(sigma)}\n"
    if args.kind == "comp":
        hs = hs_partial_sum(symbol, cfg.truncation, cfg.space)
        text += f"# hs_partial_sum,{reporting.format_float(hs.partial)}\n"
        text += f"# hs_analytic_bound,{reporting.format_float(hs.analytic_bound)}\n"
    block = min(32, t.safe_block)
    res = symmetry_residual(t, block)
    text += f"# symmetry_residual_block{block},{reporting.format_float(res)}\n"
    _emit(text, cfg.output_path)
    return 0


def cmd_symbols(args) -> int:
    cfg = _config(args)
    a0 = _parse_complex(args.a0)
    a1 = _parse_complex(args.a1)
    a2 = _parse_complex(args.a2)
    params = SymbolParams.make(a0, a1, a2)
    phi, psi = symbols_from_params(params, cfg.truncation)
    z3w = z3w_coefficient_check(a0, a1)
    residual = kernel_identity_residual(psi, phi, default_grid(cfg.seed), space=cfg.space)
    doc = {
        "a0": a0,
        "a1": a1,
        "a2": a2,
        "psi_at_zero": params.psi_at_zero,
        "c": list(params.c),
        "z3w_lhs": z3w.lhs,
        "z3w_rhs": z3w.rhs,
        "z3w_diff": abs(z3w.lhs - z3w.rhs),
        "kernel_identity_residual": residual,
        "phi": [complex(c) for c in phi.coeffs],
        "psi": [complex(c) for c in psi.coeffs],
    }
    if cfg.output_path:
        prefix = Path(cfg.output_path)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        Path(f"{prefix}.phi.csv").write_text(reporting.series_csv(phi))
        Path(f"{prefix}.psi.csv").write_text(reporting.series_csv(psi))
        doc_no_coeffs = {k: v for k, v in doc.items() if k not in ("phi", "psi")}
        Path(f"{prefix}.report.json").write_text(
            reporting.canonical_json(doc_no_coeffs) + "\n"
        )
        sys.stdout.write(
            f"{prefix}.phi.csv\n{prefix}.psi.csv\n{prefix}.report.json\n"
        )
    elif cfg.output_format == "human":
        lines = [
            f"phi(0) = a0 = {a0}",
            f"phi'(0) = a1 = {a1}",
            f"psi(0) = a2/3888 = {params.psi_at_zero}",
            "c table: " + ", ".join(f"c{i+1}={c:.12g}" for i, c in enumerate(params.c)),
            f"z3w lhs = {z3w.lhs}",
            f"z3w rhs = {z3w.rhs}",
            f"kernel identity residual = {residual:.12g}",
        ]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(reporting.canonical_json(doc) + "\n")
    return 0


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--space", default="h22", choices=sorted(SPACES))
    parser.add_argument("--trunc", type=int, default=128, metavar="N")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--format", default="json", choices=_FORMATS)
    parser.add_argument("--out", default=None, metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="h22",
        description="weighted analytic-function space toolkit and verification suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=harness.SUITE_IDS)
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("kernel", help="dump reproducing-kernel coefficients")
    p.add_argument("w_point", help="kernel point, |w| < 1 (e.g. 0.3 or 0.2+0.1j)")
    _add_common(p)
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("operator", help="dump a truncated operator matrix")
    p.add_argument("kind", choices=("mult", "comp", "wcomp"))
    p.add_argument("--symbol", required=True, metavar="CSV")
    p.add_argument("--weight", default=None, metavar="CSV")
    _add_common(p)
    p.set_defaults(fn=cmd_operator)

    p = sub.add_parser("symbols", help="build the rational symbol pair from (a0, a1, a2)")
    p.add_argument("a0")
    p.add_argument("a1")
    p.add_argument("a2")
    _add_common(p)
    p.set_defaults(fn=cmd_symbols)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
