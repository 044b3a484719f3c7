"""Command-line interface: ``secdiv <command> [--flags]``.

Exit codes: 0 on success, 2 when parameters are rejected, 3 when two
independent evaluations disagree.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from secdiv import bn_counts, chow_oracle, moduli_classes, params, report, symprod, verify
from secdiv.arith import fmt
from secdiv.bn_counts import InconsistencyError
from secdiv.params import AUTO, EnumerationLimits, ParamError

EXIT_OK, EXIT_PARAM, EXIT_INCONSISTENT = 0, 2, 3


@dataclass
class Output:
    doc: dict
    table: str | None = None
    latex: str | None = None
    failed: bool = False


def _degree(value: str):
    return value if value == AUTO else int(value)


def _limits(args) -> EnumerationLimits:
    if getattr(args, "config", None):
        return EnumerationLimits.from_file(args.config)
    return params.DEFAULT_LIMITS


def _params(args) -> params.SecantParams:
    return params.validate(args.g, args.r, args.d, args.t, args.n)


def _inputs(p: params.SecantParams, **extra) -> dict:
    return {"g": p.g, "r": p.r, "d": p.d, "t": p.t, "n": p.n, **extra}


def cmd_count(args) -> Output:
    p = _params(args)
    results: dict = {"s": p.s, "a": list(p.a)}
    prov = []
    if args.formula in ("general", "both"):
        results["general_sum"] = bn_counts.castelnuovo_count(p.g, p.r, p.d, p.a).value
        prov.append("general_sum")
    if args.formula in ("product", "both"):
        results["product_special"] = bn_counts.secant_point_count(p).value
        prov.append("product_special")
    if args.formula == "both":
        if results["general_sum"] != results["product_special"]:
            raise InconsistencyError(
                f"{p}: general sum {results['general_sum']} != product {results['product_special']}"
            )
        results["agree"] = True
    results["count"] = results.get("product_special", results.get("general_sum"))
    return Output(report.document("count", _inputs(p, formula=args.formula), results, prov))


def cmd_tcount(args) -> Output:
    p = _params(args)
    value = bn_counts.pointed_secant_count(p, args.delta).value
    results: dict = {"T": value}
    prov = ["interpolation"]
    if args.oracle:
        oracle = chow_oracle.fulton_pragacz_T(p, args.delta)
        if oracle != value:
            raise InconsistencyError(f"{p}, delta={args.delta}: formula {value} != determinant {oracle}")
        results["oracle"] = oracle
        results["oracle_agrees"] = True
        prov.append("fulton_pragacz_determinant")
    return Output(report.document("tcount", _inputs(p, delta=args.delta), results, prov))


def _class_lines(terms, latex: bool) -> str:
    expr = report.render_class(terms, latex=latex)
    return f"${expr}$\n" if latex else expr + "\n"


def cmd_class(args) -> Output:
    p = _params(args)
    space = args.space
    if space == "cn":
        cls = symprod.secant_class_cn(p)
        alt = symprod.secant_class_cn_via_pullback(p)
        if alt != cls:
            raise InconsistencyError(f"{p}: direct class {cls} != pulled-back class {alt}")
        terms = cls.terms()
        results = {
            "class": dict(terms),
            "slope": cls.slope,
            "rendered": report.render_class(terms),
            "pullback_agrees": True,
        }
        prov = ["secant_class_cn", "secant_class_cn_via_pullback"]
    elif space == "mg1":
        cls = moduli_classes.pointed_bn_class(p)
        terms = cls.terms()
        results = {
            "class": dict(terms),
            "sigma": moduli_classes.sigma_coeff(p),
            "nu": bn_counts.secant_point_count(p).value / (p.g * (p.g**2 - 1)),
            "rendered": report.render_class(terms),
        }
        if p.g >= 3:
            data = moduli_classes.mu_nu(p)
            if data.mu != data.nu * data.sigma:
                raise InconsistencyError(f"{p}: mu {data.mu} != nu*sigma {data.nu * data.sigma}")
            results["mu"] = data.mu
        prov = ["pointed_bn_class"]
    else:
        cls = moduli_classes.secant_class_mgn(p)
        terms = [(k if k != "psi" else "psi_sum", v) for k, v in cls.terms()]
        c = moduli_classes.secant_coefficients(p)
        results = {
            "class": dict(cls.terms()),
            "coefficients": {
                "c_lambda": c.c_lambda,
                "c_psi": c.c_psi,
                "c_irr": c.c_irr,
                "c_0j": c.c_0j,
                "c_i0": c.c_i0,
            },
            "unknown": cls.unknown,
            "rendered": report.render_class(terms) + " + (unknown delta_{i:j}, i,j >= 1)",
        }
        prov = ["secant_class_mgn"]
    doc = report.document("class", _inputs(p, space=space), results, prov)
    table = f"[{space}] {results['rendered']}\n" + report.to_table(doc)
    latex = _class_lines(terms, latex=True)
    if space == "mgn":
        latex = latex.rstrip("$\n") + r" - \sum_{i \geq 1, j \geq 1} c_{i:j} \delta_{i:j}$" + "\n"
    return Output(doc, table=table, latex=latex)


def _witness(p: params.SecantParams) -> dict:
    return {
        "r": p.r,
        "t": p.t,
        "d": p.d,
        "conditions": sorted(params.nonempty_condition(p)),
        "count": bn_counts.secant_point_count(p).value,
    }


def cmd_slope_table(args) -> Output:
    rows = symprod.slope_table(args.g, range(args.n_min, args.n_max + 1), _limits(args))
    data = [
        {
            "n": row.n,
            "has_divisor": row.has_divisor,
            "witnesses": [f"(r={w.r},t={w.t},d={w.d})" for w in row.witnesses],
            "slope_new": row.slope_new,
            "slope_classical": row.slope_classical,
            "strict_improvement": row.strict_improvement,
            "note": row.note,
        }
        for row in rows
    ]
    doc = report.document(
        "slope-table", {"g": args.g, "n_min": args.n_min, "n_max": args.n_max}, {"rows": data}, ["slope_table"]
    )
    header = ["n", "divisor", "g/n", "floor(g/n)", "improves", "witnesses", "note"]
    body = [
        [
            str(row.n),
            "yes" if row.has_divisor else "no",
            fmt(row.slope_new),
            str(row.slope_classical),
            "yes" if row.strict_improvement else "no",
            " ".join(f"({w.r},{w.t},{w.d})" for w in row.witnesses[:4])
            + (" ..." if len(row.witnesses) > 4 else ""),
            row.note,
        ]
        for row in rows
    ]
    latex_body = [[c.replace("_", r"\_") for c in r] for r in body]
    return Output(doc, table=report.grid(header, body), latex=report.latex_tabular(header, latex_body))


def cmd_enumerate(args) -> Output:
    found = params.enumerate_params(args.g, args.n, _limits(args))
    doc = report.document(
        "enumerate", {"g": args.g, "n": args.n}, {"params": [_witness(p) for p in found]}, ["enumerate_params"]
    )
    header = ["r", "t", "d", "conditions", "count"]
    body = [[str(p.r), str(p.t), str(p.d), ",".join(sorted(params.nonempty_condition(p))),
             fmt(bn_counts.secant_point_count(p).value)] for p in found]
    return Output(doc, table=report.grid(header, body), latex=report.latex_tabular(header, body))


def cmd_residual(args) -> Output:
    p = _params(args)
    cmp = symprod.compare_residual(p)
    results = {
        "residual": dict(zip(("g", "r", "d", "t", "n"), cmp.residual)),
        "residual_valid": cmp.residual_valid,
        "count": cmp.count.value,
        "residual_count": cmp.residual_count.value if cmp.residual_count else None,
        "counts_agree": cmp.counts_agree,
        "reason": cmp.reason,
    }
    return Output(report.document("residual", _inputs(p), results, ["residual_params"]))


def cmd_verify(args) -> Output:
    results = verify.run_suites(args.level, args.seed)
    suites = [
        {"suite": r.name, "passed": r.passed, "checked": r.checked, "counterexample": r.counterexample}
        for r in results
    ]
    ok = all(r.passed for r in results)
    doc = report.document(
        "verify", {"level": args.level, "seed": args.seed}, {"suites": suites, "all_passed": ok}, ["verify"]
    )
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name} ({r.checked} checks)"
        if r.counterexample:
            line += f"  first counterexample: {r.counterexample}"
        lines.append(line)
    lines.append("all suites passed" if ok else "verification FAILED")
    return Output(doc, table="\n".join(lines) + "\n", failed=not ok)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="secdiv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "latex"], default="table")
    common.add_argument("--config", help="key=value file setting r_max and d_max")

    tup = argparse.ArgumentParser(add_help=False)
    tup.add_argument("--g", type=int, required=True)
    tup.add_argument("--r", type=int, required=True)
    tup.add_argument("--d", type=_degree, required=True, help="degree, or 'auto'")
    tup.add_argument("--t", type=int, required=True)
    tup.add_argument("--n", type=int, required=True)

    p = sub.add_parser("count", parents=[common, tup], help="n_{g,r,d,a}")
    p.add_argument("--formula", choices=["general", "product", "both"], default="product")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("tcount", parents=[common, tup], help="pointed count T(delta)")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also evaluate the determinant oracle")
    p.set_defaults(func=cmd_tcount)

    p = sub.add_parser("class", parents=[common, tup], help="divisor class")
    p.add_argument("--space", choices=["mg1", "mgn", "cn"], default="cn")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("slope-table", parents=[common], help="slope bounds on C_n")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_slope_table)

    p = sub.add_parser("enumerate", parents=[common], help="valid (r, t, d) for given (g, n)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("residual", parents=[common, tup], help="residual tuple for t = r")
    p.set_defaults(func=cmd_residual)

    p = sub.add_parser("verify", parents=[common], help="run the cross-validation suites")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def _generic_latex(doc: dict) -> str:
    rows: list[tuple[str, str]] = []
    report._flatten("", doc["results"], rows)
    body = [[k.replace("_", r"\_"), v.replace("_", r"\_")] for k, v in rows]
    return report.latex_tabular(["quantity", "value"], body)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except ParamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except (InconsistencyError, chow_oracle.UnreducibleMonomial) as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    if args.format == "json":
        sys.stdout.write(report.to_json(out.doc))
    elif args.format == "latex":
        sys.stdout.write(out.latex or _generic_latex(out.doc))
    else:
        sys.stdout.write(out.table or report.to_table(out.doc))
    return EXIT_INCONSISTENT if out.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
