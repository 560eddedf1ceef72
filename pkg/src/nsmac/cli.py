"""Command-line interface: ``nsmac compute | verify | table | stats``."""
from __future__ import annotations

import argparse
import json
import sys

from .exactalg import XPolynomial
from .fillings import Filling, enumerate_non_attacking, stats
from .hecke import E_recurrence
from .macdonald import (
    RouteMismatchError,
    E_combinatorial,
    E_integral,
    E_inverted,
    key_polynomial,
)
from .render import SCHEMA, json_document, latex_xpolynomial
from .shapes import arm_table, compositions, format_composition, parse_composition
from .symmetric import D_mu, J_lambda, J_via_stable_limit, P_lambda, as_partition, schur_via_keys
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILIES = ("E", "Eint", "Einv", "key", "D", "J", "P", "schur")
SYMMETRIC_FAMILIES = {"J", "P", "schur"}
SYMBOL = {"E": "E", "Eint": r"\mathcal{E}", "Einv": r"\overline{E}", "key": r"\kappa",
          "D": r"\tilde{H}", "J": "J", "P": "P", "schur": "s"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p):
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--mode", choices=("fast", "checked"), default="fast",
                   help="checked also computes every independent route and compares")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for filling enumeration")


def build_parser():
    parser = _Parser(prog="nsmac", description="Exact non-symmetric Macdonald polynomials.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("compute", help="compute one polynomial")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("index", nargs="?", help="composition or partition, e.g. 0,1,0")
    c.add_argument("--mu", help="composition (alternative to INDEX)")
    c.add_argument("--lambda", dest="lam", help="partition (alternative to INDEX)")
    c.add_argument("--m", type=int, help="number of variables for D, J, P")
    _common(c)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=tuple(SUITES) + ("all",))
    v.add_argument("--n", type=int)
    v.add_argument("--max-degree", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--format", choices=("text", "json"), default="text")

    t = sub.add_parser("table", help="all E_mu with |mu| up to a bound")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--max-degree", type=int, required=True)
    _common(t)

    s = sub.add_parser("stats", help="statistics of non-attacking fillings")
    s.add_argument("mu", nargs="?", help="composition, e.g. 2,1,3,0,0,2")
    s.add_argument("--mu", dest="mu_opt")
    s.add_argument("--filling", help='JSON {"rows": [[row 1], [row 2], ...]} or a bare list of rows, bottom row first')
    s.add_argument("--format", choices=("text", "json"), default="text")
    return parser


# -- compute ---------------------------------------------------------------------

def _index(args):
    given = [x for x in (args.index, args.mu, args.lam) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of INDEX, --mu, --lambda")
    try:
        return parse_composition(given[0])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def compute(family, index, m=None, mode="fast", jobs=1):
    """Evaluate one family member; ``mode='checked'`` runs every cross-check."""
    checked = mode == "checked"
    if family in SYMMETRIC_FAMILIES:
        try:
            as_partition(index)
        except ValueError as exc:
            raise UsageError(f"{family} is indexed by a partition: {exc}") from None
    if family == "E":
        f = E_combinatorial(index, jobs=jobs)
        if checked and f != E_recurrence(index):
            raise RouteMismatchError(f"fillings and recurrence disagree for {index}")
        return f
    if family == "Eint":
        return E_integral(index, check=checked)
    if family == "Einv":
        return E_inverted(index, check=checked)
    if family == "key":
        return key_polynomial(index)
    m = len(index) if m is None else m
    if m < 1:
        raise UsageError("--m must be positive")
    if family == "D":
        return D_mu(index, m)
    if family == "J":
        f = J_lambda(index, m)
        if checked and J_via_stable_limit(index, index, m) != f:
            raise RouteMismatchError(f"J routes disagree for {index}")
        return f
    if family == "P":
        if checked:
            return P_lambda(index, m, route="both")
        return P_lambda(index, m, route="A")
    if family == "schur":
        parts = tuple(index)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if m < len(parts):
            return XPolynomial(m)
        return schur_via_keys(parts or (0,), m)
    raise UsageError(f"unknown family {family}")


def render(f, family, index, fmt, **meta):
    if fmt == "json":
        return json_document(f, family=family, index=list(index), **meta)
    if fmt == "latex":
        lead = index if family not in SYMMETRIC_FAMILIES | {"D"} else None
        return f"{SYMBOL[family]}_{{({format_composition(index)})}} & = {latex_xpolynomial(f, lead=lead)}\\\\"
    return f.to_str()


def _cmd_compute(args, out):
    index = _index(args)
    if args.m is not None and args.family not in {"D", "J", "P", "schur"}:
        raise UsageError(f"--m does not apply to family {args.family}")
    f = compute(args.family, index, m=args.m, mode=args.mode, jobs=args.jobs)
    print(render(f, args.family, index, args.format), file=out)
    return EXIT_OK


# -- table -----------------------------------------------------------------------

def table_order(n, max_degree):
    """By degree, then by the sorted shape (ascending), then lexicographically decreasing."""
    rows = []
    for d in range(max_degree + 1):
        level = list(compositions(n, d))
        level.sort(key=lambda mu: (tuple(sorted(mu, reverse=True)), tuple(-x for x in mu)))
        rows.extend(level)
    return rows


def _cmd_table(args, out):
    if args.n < 1 or args.max_degree < 0:
        raise UsageError("--n must be positive and --max-degree non-negative")
    rows = table_order(args.n, args.max_degree)
    polys = [compute("E", mu, mode=args.mode, jobs=args.jobs) for mu in rows]
    if args.format == "json":
        doc = {"schema": SCHEMA, "n": args.n, "max_degree": args.max_degree,
               "entries": [{"mu": list(mu), "terms": f.to_records()} for mu, f in zip(rows, polys)]}
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")), file=out)
    elif args.format == "latex":
        print(r"\begin{align*}", file=out)
        for mu, f in zip(rows, polys):
            print(render(f, "E", mu, "latex"), file=out)
        print(r"\end{align*}", file=out)
    else:
        for mu, f in zip(rows, polys):
            print(f"E({format_composition(mu)}) = {f.to_str()}", file=out)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------

def _cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    params = {"n": args.n, "max_degree": args.max_degree, "seed": args.seed}
    report, failed = [], None
    for name in names:
        suite_params = {k: v for k, v in params.items() if v is not None}
        try:
            checks = run_suite(name, **suite_params)
        except TypeError as exc:
            raise UsageError(f"suite {name} does not take these options ({exc})") from None
        for chk in checks:
            report.append((name, chk))
            if not chk.passed and failed is None:
                failed = (name, chk)
        if failed:
            break
    if args.format == "json":
        doc = {"schema": SCHEMA, "passed": failed is None, "checks": [
            {"suite": s, "name": c.name, "passed": c.passed, "seconds": round(c.seconds, 6), "detail": c.detail}
            for s, c in report]}
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        for s, c in report:
            print(f"[{'PASS' if c.passed else 'FAIL'}] {s}: {c.name} ({c.seconds:.3f}s)", file=out)
        passed = sum(c.passed for _, c in report)
        print(f"{passed}/{len(report)} checks passed", file=out)
        if failed:
            print("first counterexample:", file=out)
            print(json.dumps(failed[1].detail, sort_keys=True), file=out)
    return EXIT_OK if failed is None else EXIT_FAIL


# -- stats -----------------------------------------------------------------------

def _filling_from_arg(mu, text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--filling is not valid JSON: {exc}") from None
    rows = data["rows"] if isinstance(data, dict) else data
    try:
        return Filling.from_rows(mu, rows)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"bad filling: {exc}") from None


def _stats_record(sigma):
    st = stats(sigma)
    return {"rows": sigma.rows(), "x": list(sigma.x_exponent()), "maj": st.maj, "Inv": st.inv_count,
            "inv": st.inv, "coinv": st.coinv, "maj_prime": st.maj_prime, "coinv_prime": st.coinv_prime,
            "descents": sorted(list(u) for u in st.descents)}


def _cmd_stats(args, out):
    text = args.mu if args.mu is not None else args.mu_opt
    if text is None:
        raise UsageError("give a composition")
    try:
        mu = parse_composition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.filling:
        records = [_stats_record(_filling_from_arg(mu, args.filling))]
    else:
        records = [_stats_record(s) for s in enumerate_non_attacking(mu)]
    if args.format == "json":
        arms = {f"{u[0]},{u[1]}": list(v) for u, v in sorted(arm_table(mu).items())}
        print(json.dumps({"schema": SCHEMA, "mu": list(mu), "arm_leg": arms, "fillings": records},
                         sort_keys=True), file=out)
    else:
        for r in records:
            print(f"rows={r['rows']} maj={r['maj']} Inv={r['Inv']} inv={r['inv']} coinv={r['coinv']} "
                  f"maj'={r['maj_prime']} coinv'={r['coinv_prime']}", file=out)
        print(f"{len(records)} filling(s)", file=out)
    return EXIT_OK


COMMANDS = {"compute": _cmd_compute, "verify": _cmd_verify, "table": _cmd_table, "stats": _cmd_stats}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("choose a command: " + ", ".join(COMMANDS))
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"nsmac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RouteMismatchError as exc:
        print(f"nsmac: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"nsmac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
