"""Command-line front end: ``chiy {universal,catalog,eval,audit,verify}``.

Exit codes: 0 success (audit: nothing violated), 1 an audit or verify
check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import audit as audit_mod
from . import catalog
from .checks import structural_report
from .genus import (
    chi_p,
    chi_y_by_monomial,
    evaluate_genus,
    evaluate_k,
    k_support,
    k_support_bound,
    k_table,
)
from .rational import format_rational
from .symmetric import ChernPolynomial, monomial_name

DEFAULT_MAX_DIM = 14

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _poly_dict(poly: ChernPolynomial) -> dict[str, str]:
    return {lam.key(): format_rational(c) for lam, c in poly.sorted_terms()}


def _emit(args, structured: Any, table: str) -> None:
    text = json.dumps(structured, indent=2, ensure_ascii=False) if _format(args) == "structured" else table
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _format(args) -> str:
    # catalog exists to produce descriptors, so it defaults to structured output
    if args.format is None:
        return "structured" if args.command == "catalog" else "table"
    return args.format


def _check_dim(args, dim: int) -> None:
    if not 1 <= dim <= args.max_dim:
        raise InputError(f"dimension {dim} outside 1..{args.max_dim} (raise with --max-dim)")


def _read_manifold(args) -> catalog.ManifoldChernData:
    if getattr(args, "catalog", None):
        try:
            m = catalog.parse_factor(args.catalog)
        except (TypeError, ValueError) as exc:
            raise InputError(str(exc)) from None
    else:
        path = args.input
        try:
            if path in (None, "-"):
                text = sys.stdin.read()
            else:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        # audit output embeds the descriptor under "manifold"
        if isinstance(doc, dict) and isinstance(doc.get("manifold"), dict):
            doc = doc["manifold"]
        try:
            m = catalog.from_descriptor(doc)
        except catalog.DescriptorError as exc:
            raise InputError(f"{type(exc).__name__}: {exc}") from None
    _check_dim(args, m.dim)
    return m


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_universal(args) -> int:
    n = args.dim
    _check_dim(args, n)
    what = args.what
    if what == "chi_y":
        grouped = chi_y_by_monomial(n)
        structured = {"dim": n, "what": "chi_y", "by_monomial": {lam.key(): [format_rational(c) for c in poly.coeffs] for lam, poly in grouped.items()}}
        lines = [f"chi_y (dim {n}) ="]
        lines += [f"  + ({poly})*{monomial_name(lam)}" for lam, poly in grouped.items()]
        table = "\n".join(lines)
    elif what == "K":
        entries = k_table(n).entries
        structured = {"dim": n, "what": "K", "polynomials": {f"K_{j}": _poly_dict(k) for j, k in enumerate(entries)}}
        table = "\n".join(f"K_{j} = {k}" for j, k in enumerate(entries))
    elif what == "chi_p":
        ps = [args.p] if args.p is not None else list(range(n + 1))
        if any(not 0 <= p <= n for p in ps):
            raise InputError(f"p must satisfy 0 <= p <= {n}")
        polys = {p: chi_p(n, p) for p in ps}
        structured = {"dim": n, "what": "chi_p", "polynomials": {f"chi^{p}": _poly_dict(c) for p, c in polys.items()}}
        table = "\n".join(f"chi^{p} = {c}" for p, c in polys.items())
    else:
        rows = {}
        for j in range(0, n + 1, 2):
            rows[j] = (sorted(k_support(n, j)), sorted(k_support_bound(n, j)))
        structured = {
            "dim": n,
            "what": "support",
            "support": {f"K_{j}": {"indices": s, "allowed": b, "contained": set(s) <= set(b)} for j, (s, b) in rows.items()},
        }
        table = "\n".join(f"K_{j}: c{{{','.join(map(str, s))}}} within c{{{','.join(map(str, b))}}}" for j, (s, b) in rows.items())
    _emit(args, structured, table)
    return EXIT_OK


def cmd_catalog(args) -> int:
    try:
        if args.family == "product":
            if len(args.params) < 2:
                raise InputError("product needs at least two factors, e.g. 'cp:1 torus:1'")
            m = catalog.parse_factor(args.params[0])
            for spec in args.params[1:]:
                m = catalog.product(m, catalog.parse_factor(spec))
        else:
            m = catalog.build(args.family, [int(p) for p in args.params])
    except InputError:
        raise
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    _check_dim(args, m.dim)
    doc = catalog.to_descriptor(m)
    if _format(args) == "structured":
        _emit(args, doc, "")
    else:
        lines = [f"{m.name} (dim {m.dim})"]
        lines += [f"  c[{k}] = {v}" for k, v in doc["chern_numbers"].items()]
        if m.hodge is not None:
            lines.append("  hodge:")
            lines += ["    " + " ".join(str(h) for h in row) for row in m.hodge]
        _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_eval(args) -> int:
    m = _read_manifold(args)
    genus = evaluate_genus(m)
    ks = evaluate_k(m)
    spec = audit_mod.specializations(genus)
    structured: dict[str, Any] = {
        "manifold": m.name,
        "dim": m.dim,
        "chi_y": [format_rational(c) for c in genus.coeffs],
        "K": [format_rational(k) for k in ks],
        "specializations": spec.to_dict(),
        "plausible": genus.is_integral() and m.is_geometric,
        "warnings": list(m.warnings),
    }
    lines = [
        f"{m.name} (dim {m.dim})",
        f"  chi_y = {genus}",
        "  " + ", ".join(f"K_{j} = {format_rational(k)}" for j, k in enumerate(ks)),
        f"  euler = {format_rational(spec.euler)}, todd = {format_rational(spec.todd)}, signature = {format_rational(spec.signature)}",
        f"  plausible manifold data: {'yes' if structured['plausible'] else 'no'}",
    ]
    if m.hodge is not None:
        serre = audit_mod.serre_check(m.hodge)
        structured["serre"] = serre.to_dict()
        lines.append(f"  serre duality on hodge grid: {'pass' if serre.passed else 'fail'}")
    lines += [f"  warning: {w}" for w in m.warnings]
    _emit(args, structured, "\n".join(lines))
    return EXIT_OK


def _render_report(r: audit_mod.AuditReport) -> list[str]:
    lines = [f"[{r.mode}] {r.manifold} (dim {r.dim})"]
    for c in r.checks:
        line = f"  i={c.index}: {c.label}: {format_rational(c.left)} >= {format_rational(c.right)}  {c.verdict}"
        if c.display_factor not in (None, 1):
            line += f"  (A_{c.index}: {format_rational(c.display_left)} >= {format_rational(c.display_right)})"
        lines.append(line)
    if r.l2_reconstruction is not None:
        l2 = r.l2_reconstruction
        lines.append(f"  L2 h^(p,n-p): {[format_rational(v) for v in l2.values]}  consistent: {l2.consistent(r.mode)}")
        lines.append(f"  chi^p pattern from p = {r.chi_p_pattern_from}; chi_y = (-1)^n chi_y(CP^n): {r.full_cpn_pattern}")
    lines += [f"  warning: {w}" for w in r.warnings]
    lines += [f"  note: {n}" for n in r.notes]
    lines.append(f"  => {'VIOLATED' if r.violated else 'ok'}")
    return lines


def run_audits(m: catalog.ManifoldChernData, mode: str) -> list[audit_mod.AuditReport]:
    if mode == "all":
        modes = [audit_mod.HYPERBOLIC, audit_mod.NONELLIPTIC] + ([audit_mod.YAU] if m.dim >= 2 else [])
    else:
        modes = [mode]
    return [audit_mod.audit(m, md) for md in modes]


def cmd_audit(args) -> int:
    m = _read_manifold(args)
    if args.mode == audit_mod.YAU and m.dim < 2:
        raise InputError("the Yau inequality needs dimension >= 2")
    reports = run_audits(m, args.mode)
    structured = {
        "manifold": catalog.to_descriptor(m),
        "reports": [r.to_dict() for r in reports],
        "violated": any(r.violated for r in reports),
    }
    table = "\n".join(line for r in reports for line in _render_report(r))
    _emit(args, structured, table)
    return EXIT_FAIL if structured["violated"] else EXIT_OK


def cmd_verify(args) -> int:
    lo, hi = args.from_dim, args.to_dim
    if lo > hi:
        raise InputError("--from must not exceed --to")
    _check_dim(args, lo)
    _check_dim(args, hi)
    reports = [structural_report(n) for n in range(lo, hi + 1)]
    structured = {
        "results": {str(r.dim): r.results for r in reports},
        "passed": all(r.passed for r in reports),
    }
    lines = []
    for r in reports:
        bad = [k for k, v in r.results.items() if not v]
        lines.append(f"n={r.dim}: " + ("all pass" if not bad else "FAIL " + ", ".join(bad)))
    _emit(args, structured, "\n".join(lines))
    return EXIT_OK if structured["passed"] else EXIT_FAIL


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("table", "structured"), default=default(None))
    parser.add_argument("--out", metavar="PATH", default=default(None))
    parser.add_argument("--max-dim", type=int, metavar="N", default=default(DEFAULT_MAX_DIM))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chiy", description="Exact χ_y-genus computations and Chern-number audits.")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("universal", parents=[common], help="universal polynomials in Chern classes")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--what", choices=("chi_y", "K", "chi_p", "support"), default="chi_y")
    p.add_argument("--p", type=int, default=None, help="single chi^p index for --what chi_p")
    p.set_defaults(func=cmd_universal)

    p = sub.add_parser("catalog", parents=[common], help="emit a descriptor for a catalog manifold")
    p.add_argument("family", choices=("cp", "torus", "hypersurface", "ball-quotient", "k3", "product"))
    p.add_argument("params", nargs="*", help="integers, or factor specs like cp:1 for product")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("eval", parents=[common], help="evaluate chi_y and K_j on a descriptor")
    p.add_argument("input", nargs="?", default=None, help="descriptor path, '-' or omitted for stdin")
    p.add_argument("--catalog", metavar="SPEC", help="use a catalog entry such as cp:2 instead of a file")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("audit", parents=[common], help="audit a manifold against the Chern-number inequalities")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--mode", choices=("hyperbolic", "nonelliptic", "yau", "all"), default="all")
    p.add_argument("--catalog", metavar="SPEC")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("verify", parents=[common], help="run the structural K_j checks over a dimension range")
    p.add_argument("--from", dest="from_dim", type=int, default=1)
    p.add_argument("--to", dest="to_dim", type=int, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"chiy {args.command}: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
