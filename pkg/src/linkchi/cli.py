"""Command-line interface.

Subcommands: ``homology`` (dump F^H), ``table`` (genus-graded grids of
Euler characteristics), ``supercharacter`` (modular envelope cycle index
sums), ``oracle`` (brute-force class listings), ``verify`` (the full
cross-check suite).  Exit codes: 0 success, 1 verification failure,
2 usage error.  ``LINKCHI_T_MAX`` sets the default truncation order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cycleindex import feynman_regrade, mod_envelope_supercharacter
from .genfun import LinkConfig, euler_table, f_homology
from .graphs import EnumerationBudget, enumerate_classes
from .rationals import qq_str
from .verify import CHECK_NAMES, run_checks

__all__ = ["main", "build_parser"]


def _parse_m(text: str):
    return tuple(int(v) if v.strip().lstrip("-").isdigit() else v.strip() for v in text.split(","))


def _parse_d(text: str):
    return int(text) if text.strip().lstrip("-").isdigit() else text.strip()


def _default_t_max() -> int:
    env = os.environ.get("LINKCHI_T_MAX")
    if env is not None:
        try:
            value = int(env)
            if value >= 0:
                return value
        except ValueError:
            pass
        print(f"warning: ignoring invalid LINKCHI_T_MAX={env!r}", file=sys.stderr)
    return 10


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _config_from_args(args) -> LinkConfig:
    cfg = LinkConfig.create(args.m, args.d)
    if args.r is not None and args.r != cfg.r:
        raise SystemExit2(f"--r {args.r} does not match {len(cfg.m_parities)} entries in --m")
    if cfg.in_validity_range is False:
        print(
            f"warning: d={cfg.d_value} <= 2*max(m)+1={2 * max(cfg.m_values) + 1}; "
            "the formulas are derived above that range, output is formal",
            file=sys.stderr,
        )
    return cfg


class SystemExit2(SystemExit):
    def __init__(self, message):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


def _series_json(series) -> str:
    terms = [
        {"monomial": series.monomial_str(m), "coefficient": qq_str(series.coeffs[m])}
        for m in series.sorted_monomials()
    ]
    return json.dumps({"terms": terms}, indent=2) + "\n"


def _series_csv(series) -> str:
    lines = ["monomial,coefficient"]
    for m in series.sorted_monomials():
        lines.append(f"{series.monomial_str(m)},{qq_str(series.coeffs[m])}")
    return "\n".join(lines) + "\n"


def cmd_homology(args) -> int:
    cfg = _config_from_args(args)
    x_max = args.x_max if args.x_max is not None else 2 * args.t_max
    series = f_homology(cfg, args.t_max, x_total_max=x_max)
    if args.dump_series or args.format == "text":
        text = series.to_text() + "\n"
    elif args.format == "json":
        text = _series_json(series)
    else:
        text = _series_csv(series)
    _emit(text, args.output)
    return 0


def cmd_table(args) -> int:
    cfg = _config_from_args(args)
    if args.genus < 0:
        raise SystemExit2("--genus must be >= 0")
    table = euler_table(cfg, args.genus, args.t_max)
    if args.format == "json":
        text = json.dumps(table.to_json_obj(), indent=2) + "\n"
    elif args.format == "csv":
        text = table.to_csv()
    else:
        text = table.to_text()
    _emit(text, args.output)
    return 0


def cmd_supercharacter(args) -> int:
    if args.weight < 1:
        _emit("0\n", args.output)
        return 0
    series = mod_envelope_supercharacter(args.twist, args.weight, args.genus)
    if args.feynman_regrade:
        series = feynman_regrade(series)
    if args.format == "json":
        text = _series_json(series)
    elif args.format == "csv":
        text = _series_csv(series)
    else:
        text = series.to_text() + "\n"
    _emit(text, args.output)
    return 0


def cmd_oracle(args) -> int:
    cfg = _config_from_args(args)
    s_vec = tuple(int(v) for v in args.s.split(","))
    budget = EnumerationBudget(t_max=args.budget_t, hairs_max=args.budget_hairs)
    classes = enumerate_classes(cfg, s_vec, args.t, budget)
    chi = sum(c.contribution for c in classes)
    payload = {
        "s": list(s_vec),
        "t": args.t,
        "genus": args.t - sum(s_vec) + 1,
        "euler_characteristic": chi,
        "classes": [
            {
                "key": c.key,
                "internal_vertices": c.n_internal,
                "edges": c.edge_count,
                "degree": c.degree,
                "killed": c.killed,
                "automorphisms": c.automorphism_count,
                "contribution": c.contribution,
            }
            for c in classes
        ],
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    only = args.only.split(",") if args.only else None
    try:
        results = run_checks(only=only, t_max=args.t_max)
    except ValueError as exc:
        raise SystemExit2(str(exc))
    failed = False
    lines = []
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        lines.append(f"[{status}] {res.name}")
        for note in res.notes:
            lines.append(f"    note: {note}")
        for detail in res.details:
            lines.append(f"    {detail}")
        failed = failed or not res.ok
    lines.append("verification " + ("FAILED" if failed else "passed"))
    _emit("\n".join(lines) + "\n", args.output)
    if failed:
        diff = [
            {"check": r.name, "failures": r.details} for r in results if not r.ok
        ]
        print(json.dumps(diff), file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkchi",
        description="Exact Euler-characteristic generating functions for "
        "string-link spaces and hairy graph complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    t_default = _default_t_max()

    def add_config(p, need_genus=False):
        p.add_argument("--r", type=int, default=None, help="number of strands (optional consistency check)")
        p.add_argument("--m", type=_parse_m, required=True,
                       help="comma-separated source dimensions, integers or odd/even")
        p.add_argument("--d", type=_parse_d, required=True,
                       help="ambient dimension, integer or odd/even")
        p.add_argument("--t-max", type=int, default=t_default, help="complexity truncation order")
        if need_genus:
            p.add_argument("--genus", type=int, required=True, help="genus of the grid")

    def add_output(p):
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("homology", help="dump the homology generating function F^H")
    add_config(p)
    p.add_argument("--x-max", type=int, default=None,
                   help="total x-degree cap (default 2*t_max, the full support)")
    p.add_argument("--dump-series", action="store_true",
                   help="canonical text dump regardless of --format")
    add_output(p)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("table", help="genus-graded grid of Euler characteristics")
    add_config(p, need_genus=True)
    add_output(p)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("supercharacter", help="modular envelope supercharacter Z^{>0}")
    p.add_argument("--twist", choices=("plain", "det"), required=True)
    p.add_argument("--weight", type=int, required=True, help="arity weight bound")
    p.add_argument("--genus", type=int, default=4, help="genus bound")
    p.add_argument("--feynman-regrade", action="store_true",
                   help="emit the Feynman-transform regrading (-Z with p -> -p)")
    add_output(p)
    p.set_defaults(fn=cmd_supercharacter)

    p = sub.add_parser("oracle", help="brute-force hairy graph class listing")
    add_config(p)
    p.add_argument("--s", required=True, help="comma-separated hair counts per color")
    p.add_argument("--t", type=int, required=True, help="complexity")
    p.add_argument("--budget-t", type=int, default=5)
    p.add_argument("--budget-hairs", type=int, default=6)
    add_output(p)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("verify", help="run the cross-verification suite")
    p.add_argument("--only", default=None,
                   help=f"comma-separated subset of checks ({', '.join(CHECK_NAMES)})")
    p.add_argument("--t-max", type=int, default=None,
                   help="scale scalable checks down to this truncation order")
    add_output(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
