"""Command line front end.

Subcommands: achievable, simulate, lp, bounds, curve.  All numeric output
carries exact p/q strings next to fixed-precision decimals; identical
invocations produce byte-identical output.

Exit codes: 0 success (all checks pass), 1 usage error, 2 verification
failure, 3 resource guard (enumeration budget or LP size).
"""

import argparse
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import curves, entlp, protocols
from .envelope import hull_vertices
from .points import SystemParams, baseline_costs, cyclic_transform_point
from .rational import format_exact, rat
from .report import ReportSpec, csv_text, emit, json_text, rational_json
from .simplex import OPTIMAL

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_GUARD = 3

LP_SIZE_GUARD = 5  # cmd_lp refuses N above this without --allow-large
TABLE_KEY_LIMIT = 1024  # retrieval tables are printed only up to this many keys


class UsageError(Exception):
    pass


class GuardError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _spec_from(args) -> ReportSpec:
    return ReportSpec(fmt=args.format, precision=args.precision, out=args.out)


def _add_report_flags(sp):
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    sp.add_argument("--precision", type=int, default=6)


def build_parser() -> _Parser:
    parser = _Parser(prog="pirtrade", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("achievable", help="closed-form tradeoff point families")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument(
        "--families",
        default=",".join(curves.STANDARD_FAMILIES),
        help="comma list of mds,uncoded,gmds,prop3,cyclic:<family>:<baseN>",
    )
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_achievable)

    sp = sub.add_parser("simulate", help="build, dump, and verify a protocol")
    sp.add_argument("--construction", choices=("A", "B", "cyclic"), required=True)
    sp.add_argument("--k", type=int, help="message count for construction A")
    sp.add_argument("--n", type=int, help="server count for construction B")
    sp.add_argument("--t", type=int, help="group size for construction B")
    sp.add_argument("--base", choices=("A", "B"), help="base of a cyclic composition")
    sp.add_argument("--base-k", type=int, dest="base_k")
    sp.add_argument("--base-n", type=int, dest="base_n")
    sp.add_argument("--base-t", type=int, dest="base_t")
    sp.add_argument("--m", type=int, help="server count of the cyclic composition")
    sp.add_argument(
        "--checks",
        default="correctness,privacy,costs",
        help="comma list of correctness,privacy,costs",
    )
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("lp", help="solve the relaxed entropic LP exactly")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--a0", default="0", help="objective weight on alpha (exact, e.g. 3/2)")
    sp.add_argument("--b0", default="1", help="objective weight on beta (exact)")
    sp.add_argument("--dump", default=None, help="write the LP in text exchange format")
    sp.add_argument("--allow-large", action="store_true", dest="allow_large")
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_lp)

    sp = sub.add_parser("bounds", help="explicit lower-bound certificates")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("curve", help="upper/lower envelope and ratio data")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--grid", type=int, default=200)
    sp.add_argument("--alpha-lo", default=None, dest="alpha_lo")
    sp.add_argument("--alpha-hi", default=None, dest="alpha_hi")
    sp.add_argument("--lp-refine", action="store_true", dest="lp_refine")
    sp.add_argument("--allow-large", action="store_true", dest="allow_large")
    _add_report_flags(sp)
    sp.set_defaults(func=cmd_curve)

    return parser


# -- achievable ---------------------------------------------------------------


def _collect_family(p: SystemParams, token: str):
    if token in curves.STANDARD_FAMILIES:
        return curves.family_points(p, token)
    if token.startswith("cyclic:"):
        parts = token.split(":")
        if len(parts) != 3:
            raise UsageError(f"bad cyclic family {token!r}; use cyclic:<family>:<baseN>")
        fam, base_n_s = parts[1], parts[2]
        try:
            base_n = int(base_n_s)
        except ValueError:
            raise UsageError(f"bad base server count in {token!r}") from None
        if fam not in curves.STANDARD_FAMILIES:
            raise UsageError(f"unknown base family {fam!r}")
        if base_n > p.n:
            raise UsageError("cyclic base must not exceed the system server count")
        base = curves.family_points(SystemParams(base_n, p.k), fam)
        return [cyclic_transform_point(pt, base_n, p.n) for pt in base]
    raise UsageError(f"unknown family {token!r}")


def cmd_achievable(args) -> int:
    spec = _spec_from(args)
    p = SystemParams(args.n, args.k)
    tokens = [t for t in args.families.split(",") if t]
    if not tokens:
        raise UsageError("no families requested")
    seen = []
    for t in tokens:
        if t not in seen:
            seen.append(t)
    rows = []
    all_pts = []
    for token in seen:
        for pt in _collect_family(p, token):
            rows.append((token, pt))
            all_pts.append(pt)
    hull = hull_vertices(all_pts)
    hull_coords = {(v.alpha, v.beta) for v in hull}
    if spec.fmt == "csv":
        header = ["family", "label", "alpha", "beta", "alpha_exact", "beta_exact", "on_hull"]
        body = [
            [
                token,
                pt.label,
                spec.dec(pt.alpha),
                spec.dec(pt.beta),
                format_exact(pt.alpha),
                format_exact(pt.beta),
                "1" if (pt.alpha, pt.beta) in hull_coords else "0",
            ]
            for token, pt in rows
        ]
        emit(spec, csv_text(header, body))
    else:
        payload = {
            "n": p.n,
            "k": p.k,
            "families": seen,
            "points": [
                {
                    "family": token,
                    "label": pt.label,
                    "alpha": rational_json(spec, pt.alpha),
                    "beta": rational_json(spec, pt.beta),
                    "on_hull": (pt.alpha, pt.beta) in hull_coords,
                }
                for token, pt in rows
            ],
            "hull": [
                {
                    "label": v.label,
                    "alpha": rational_json(spec, v.alpha),
                    "beta": rational_json(spec, v.beta),
                }
                for v in hull
            ],
        }
        emit(spec, json_text(payload))
    return EXIT_OK


# -- simulate -----------------------------------------------------------------


def _build_protocol(args):
    if args.construction == "A":
        if not args.k:
            raise UsageError("construction A needs --k")
        return protocols.build_construction_a(args.k)
    if args.construction == "B":
        if not args.n or not args.t:
            raise UsageError("construction B needs --n and --t")
        return protocols.build_construction_b(args.n, args.t)
    if not args.base or not args.m:
        raise UsageError("cyclic composition needs --base and --m")
    if args.base == "A":
        if not args.base_k:
            raise UsageError("cyclic base A needs --base-k")
        base = protocols.build_construction_a(args.base_k)
    else:
        if not args.base_n or not args.base_t:
            raise UsageError("cyclic base B needs --base-n and --base-t")
        base = protocols.build_construction_b(args.base_n, args.base_t)
    return protocols.cyclic_compose(base, args.m)


def cmd_simulate(args) -> int:
    spec = _spec_from(args)
    checks = [c for c in args.checks.split(",") if c]
    for c in checks:
        if c not in ("correctness", "privacy", "costs"):
            raise UsageError(f"unknown check {c!r}")
    proto = _build_protocol(args)

    results: dict[str, bool] = {}
    cost_report = None
    for c in checks:
        if c == "correctness":
            results[c] = protocols.verify_correctness(proto)
        elif c == "privacy":
            results[c] = protocols.verify_privacy(proto)
        else:
            try:
                cost_report = protocols.measure_costs(proto)
                results[c] = True
            except ValueError:
                results[c] = False

    tables_ok = proto.key_count <= TABLE_KEY_LIMIT
    if spec.fmt == "json":
        payload = {
            "protocol": proto.name,
            "n_servers": proto.n_servers,
            "n_messages": proto.n_messages,
            "msg_len": proto.msg_len,
            "storage_table": protocols.storage_table(proto).splitlines(),
            "retrieval_tables": (
                {
                    str(k): protocols.retrieval_table(proto, k).splitlines()
                    for k in range(1, proto.n_messages + 1)
                }
                if tables_ok
                else f"omitted: key space of {proto.key_count} exceeds table limit"
            ),
            "checks": results,
        }
        if cost_report is not None:
            payload["costs"] = {
                "alpha_bar": rational_json(spec, cost_report.alpha_bar),
                "beta_bar": rational_json(spec, cost_report.beta_bar),
                "storage_per_server": list(cost_report.storage_per_server),
                "expected_len_per_server": [
                    format_exact(x) for x in cost_report.expected_len_per_server
                ],
            }
        emit(spec, json_text(payload))
    else:
        lines = [f"protocol: {proto.name}", "", "storage:", protocols.storage_table(proto)]
        if tables_ok:
            for k in range(1, proto.n_messages + 1):
                lines += ["", f"retrieval of message {k}:",
                          protocols.retrieval_table(proto, k)]
        else:
            lines += ["", f"retrieval tables omitted: {proto.key_count} keys "
                          f"exceed the table limit of {TABLE_KEY_LIMIT}"]
        lines.append("")
        if cost_report is not None:
            lines.append(
                f"costs: alpha = {format_exact(cost_report.alpha_bar)} "
                f"({spec.dec(cost_report.alpha_bar)}), "
                f"beta = {format_exact(cost_report.beta_bar)} "
                f"({spec.dec(cost_report.beta_bar)})"
            )
        for c in checks:
            lines.append(f"{c}: {'pass' if results[c] else 'FAIL'}")
        emit(spec, "\n".join(lines) + "\n")
    return EXIT_OK if all(results.values()) else EXIT_VERIFY


# -- lp -----------------------------------------------------------------------


def cmd_lp(args) -> int:
    spec = _spec_from(args)
    if args.n > LP_SIZE_GUARD and not args.allow_large:
        raise GuardError(
            f"entropic LP constraints grow like O(K*N^8); N={args.n} exceeds the "
            f"desk-scale guard of {LP_SIZE_GUARD}. Re-run with --allow-large."
        )
    a0, b0 = rat(args.a0), rat(args.b0)
    lp = entlp.build_lp(args.n, args.k, a0, b0)
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            fh.write(entlp.dump_lp(lp))
    sol = entlp.solve_exact(lp)
    census = entlp.constraint_census(lp)
    if spec.fmt == "csv":
        header = [
            "n", "k", "a0", "b0", "status", "value", "value_exact",
            "variables", "census_variables", "constraints", "iterations",
        ]
        row = [
            args.n, args.k, format_exact(a0), format_exact(b0), sol.status,
            spec.dec(sol.value) if sol.value is not None else "",
            format_exact(sol.value) if sol.value is not None else "",
            len(lp.variables), lp.census_variables, len(lp.constraints),
            sol.iterations,
        ]
        emit(spec, csv_text(header, [row]))
    else:
        payload = {
            "n": args.n,
            "k": args.k,
            "a0": format_exact(a0),
            "b0": format_exact(b0),
            "status": sol.status,
            "value": rational_json(spec, sol.value) if sol.value is not None else None,
            "variables": len(lp.variables),
            "census_variables": lp.census_variables,
            "constraints": census,
            "iterations": sol.iterations,
            "assignment": (
                {v.name: format_exact(x) for v, x in sorted(sol.assignment.items())}
                if sol.assignment
                else None
            ),
        }
        emit(spec, json_text(payload))
    return EXIT_OK if sol.status == OPTIMAL else EXIT_VERIFY


# -- bounds -------------------------------------------------------------------


def cmd_bounds(args) -> int:
    spec = _spec_from(args)
    n, k = args.n, args.k
    hps = bounds_mod.lower_bound_halfplanes(n, k)
    if spec.fmt == "csv":
        header = ["label", "ca_exact", "cb_exact", "rhs", "rhs_exact"]
        body = [
            [hp.label, format_exact(hp.ca), format_exact(hp.cb),
             spec.dec(hp.rhs), format_exact(hp.rhs)]
            for hp in hps
        ]
        emit(spec, csv_text(header, body))
    else:
        coeff_vectors = {}
        for m in range(2, n):
            c = bounds_mod.certificate_coefficients(n, k, m)
            coeff_vectors[str(m)] = [
                [format_exact(v) for v in row] for row in c.rows
            ]
        payload = {
            "n": n,
            "k": k,
            "explicit": [
                {
                    "m": m,
                    "value": rational_json(spec, bounds_mod.dunderline_b(n, k, m)),
                }
                for m in range(1, n + 1)
            ],
            "flat": [
                {
                    "k": kk,
                    "m": (res := bounds_mod.flat_bound(n, k, kk)).m,
                    "value": rational_json(spec, res.value),
                    "case": res.provenance,
                }
                for kk in range(1, k + 1)
            ],
            "halfplanes": [
                {
                    "label": hp.label,
                    "ca": format_exact(hp.ca),
                    "cb": format_exact(hp.cb),
                    "rhs": rational_json(spec, hp.rhs),
                }
                for hp in hps
            ],
            "coefficient_vectors": coeff_vectors,
        }
        emit(spec, json_text(payload))
    return EXIT_OK


# -- curve --------------------------------------------------------------------


def cmd_curve(args) -> int:
    spec = _spec_from(args)
    if args.lp_refine and args.n > LP_SIZE_GUARD and not args.allow_large:
        raise GuardError(
            f"--lp-refine solves entropic LPs whose constraints grow like "
            f"O(K*N^8); N={args.n} exceeds the guard of {LP_SIZE_GUARD}. "
            f"Re-run with --allow-large."
        )
    p = SystemParams(args.n, args.k)
    rep = curves.curve_report(
        p,
        grid=args.grid,
        alpha_lo=rat(args.alpha_lo) if args.alpha_lo else None,
        alpha_hi=rat(args.alpha_hi) if args.alpha_hi else None,
        lp_refine=args.lp_refine,
    )
    if spec.fmt == "csv":
        header = [
            "alpha", "beta_upper", "beta_lower", "ratio",
            "alpha_exact", "beta_upper_exact", "beta_lower_exact", "ratio_exact",
        ]
        body = [
            [
                spec.dec(a), spec.dec(bu), spec.dec(bl), spec.dec(r),
                format_exact(a), format_exact(bu), format_exact(bl), format_exact(r),
            ]
            for a, bu, bl, r in zip(
                rep.alphas, rep.beta_upper, rep.beta_lower, rep.ratios
            )
        ]
        emit(spec, csv_text(header, body))
        print(
            f"max ratio {format_exact(rep.max_ratio)} "
            f"({spec.dec(rep.max_ratio)}) at alpha = {format_exact(rep.argmax_alpha)}",
            file=sys.stderr,
        )
    else:
        payload = {
            "n": p.n,
            "k": p.k,
            "grid": args.grid,
            "alpha0": format_exact(baseline_costs(p)[0]),
            "max_ratio": rational_json(spec, rep.max_ratio),
            "argmax_alpha": format_exact(rep.argmax_alpha),
            "hull": [
                {
                    "label": v.label,
                    "alpha": format_exact(v.alpha),
                    "beta": format_exact(v.beta),
                }
                for v in rep.hull
            ],
            "halfplanes": [
                {
                    "label": hp.label,
                    "ca": format_exact(hp.ca),
                    "cb": format_exact(hp.cb),
                    "rhs": format_exact(hp.rhs),
                }
                for hp in rep.halfplanes
            ],
            "rows": [
                {
                    "alpha": rational_json(spec, a),
                    "beta_upper": rational_json(spec, bu),
                    "beta_lower": rational_json(spec, bl),
                    "ratio": rational_json(spec, r),
                }
                for a, bu, bl, r in zip(
                    rep.alphas, rep.beta_upper, rep.beta_lower, rep.ratios
                )
            ],
        }
        emit(spec, json_text(payload))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except protocols.BudgetExceeded as exc:
        print(f"verification budget exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
