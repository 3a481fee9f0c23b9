"""Command-line front end.

Subcommands: ``experiment`` (run a named study, write CSVs, summary, and
figures), ``solve`` (one regularized solve, norms printed as key=value
lines), ``asc`` (one distance curve to CSV), and ``choose`` (parameter
selection).  Exit codes: 0 on success, 2 on configuration errors, 3 on
numeric failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import distances, experiments
from .choice import alpha_apriori, alpha_discrepancy, alpha_oracle
from .exceptions import ConfigurationError, NumericError
from .problems import add_noise, make_deriv2, make_diagonal_model, \
    make_hilbert_scale_model
from .regularizers import landweber, tikhonov, tikhonov_hilbert_scale


def _parse_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _add_problem_flags(parser):
    parser.add_argument("--problem", required=True,
                        choices=["deriv2", "diagonal", "hilbert"])
    parser.add_argument("--n", type=int, default=64)
    parser.add_argument("--solution", default="linear_t",
                        choices=["linear_t", "constant_one"])
    parser.add_argument("--eta", type=float, default=2.0)
    parser.add_argument("--beta-decay", type=float, default=2.0)
    parser.add_argument("--leading-ones", type=int, default=0)
    parser.add_argument("--a", type=float, default=1.0)
    parser.add_argument("--p", type=float, default=1.0)
    parser.add_argument("--delta", type=float, default=0.0,
                        help="relative noise level")
    parser.add_argument("--seed", type=int, default=42)


def _build_problem(args):
    if args.problem == "deriv2":
        return make_deriv2(args.n, solution=args.solution)
    if args.problem == "diagonal":
        return make_diagonal_model(args.n, args.eta, args.beta_decay,
                                   leading_ones=args.leading_ones)
    return make_hilbert_scale_model(args.n, args.a, args.p)


def _cmd_experiment(args) -> int:
    config = {}
    for item in args.param:
        if "=" not in item:
            raise ConfigurationError(f"--param expects key=value, got {item!r}")
        key, _, value = item.partition("=")
        config[key] = _parse_value(value)
    if args.seed is not None:
        config["seed"] = args.seed
    report = experiments.run_experiment(args.name, config, jobs=args.jobs)
    paths = experiments.write_report(report, args.out_dir)
    if not args.no_figures:
        from . import figures
        paths += figures.render_report(report, args.out_dir)
    for path in paths:
        print(path)
    return 0


def _cmd_solve(args) -> int:
    problem = _build_problem(args)
    sample = add_noise(problem, args.delta, args.seed)
    if args.method == "tikhonov":
        if args.hs_s is not None:
            sol = tikhonov_hilbert_scale(problem, sample.y_delta, args.alpha,
                                         args.hs_s)
        else:
            sol = tikhonov(problem, sample.y_delta, args.alpha,
                           kappa_order=args.kappa_order)
        print(f"alpha={sol.alpha:.17g}")
    else:
        sols = landweber(problem, sample.y_delta, args.beta, args.k_max,
                         checkpoints=[args.k_max])
        sol = sols[-1]
        print(f"iteration={sol.iteration}")
    print(f"residual_norm={sol.residual_norm:.17g}")
    print(f"error_norm={sol.error_norm:.17g}")
    print(f"xi_norm={sol.source_norm_half:.17g}")
    return 0


def _cmd_asc(args) -> int:
    problem = _build_problem(args)
    grid = np.logspace(np.log10(args.r_min), np.log10(args.r_max), args.points)
    curve = distances.distance_curve(problem.op, problem.x_true, args.nu,
                                     args.kappa, grid)
    flags = distances.classify_regimes(curve, problem.op)
    rows = [(p.R, p.d, p.lam, fl) for p, fl in zip(curve.points, flags)]
    table = experiments.Table(("R", "d", "lambda", "regime_flag"), rows)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "asc_curve.csv"
    table.to_csv(path)
    print(path)
    return 0


def _cmd_choose(args) -> int:
    if args.rule == "apriori":
        result = alpha_apriori(args.delta_abs, args.mu, method=args.method,
                               c=args.c, kappa_order=args.kappa_order,
                               a=args.a, p=args.p, s=args.hs_s)
    else:
        problem = _build_problem(args)
        sample = add_noise(problem, args.delta, args.seed)
        if args.rule == "discrepancy":
            if args.delta == 0:
                raise ConfigurationError(
                    "the discrepancy principle needs noisy data; "
                    "--delta must be positive"
                )
            result = alpha_discrepancy(problem, sample.y_delta,
                                       sample.delta_abs, tau=args.tau)
        else:
            grid = np.logspace(-10, 0, 300)
            result = alpha_oracle(problem, sample.y_delta, alpha_grid=grid)
    print(f"alpha={result.alpha:.17g}")
    print(f"rule={result.rule}")
    if result.tau is not None:
        print(f"tau={result.tau:.17g}")
    for key, value in sorted(result.diagnostics.items()):
        print(f"{key}={value:.17g}" if isinstance(value, float)
              else f"{key}={value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="illposed",
        description="Laboratory for linear ill-posed inverse problems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exp = sub.add_parser("experiment", help="run a named experiment")
    p_exp.add_argument("name", choices=list(experiments.EXPERIMENT_NAMES))
    p_exp.add_argument("--out-dir", default="out")
    p_exp.add_argument("--seed", type=int, default=None)
    p_exp.add_argument("--jobs", type=int, default=1)
    p_exp.add_argument("--no-figures", action="store_true")
    p_exp.add_argument("--param", action="append", default=[],
                       metavar="KEY=VALUE",
                       help="override one config entry (JSON-parsed value)")
    p_exp.set_defaults(func=_cmd_experiment)

    p_solve = sub.add_parser("solve", help="single regularized solve")
    _add_problem_flags(p_solve)
    p_solve.add_argument("--method", default="tikhonov",
                         choices=["tikhonov", "landweber"])
    p_solve.add_argument("--alpha", type=float, default=1e-4)
    p_solve.add_argument("--kappa-order", type=int, default=0)
    p_solve.add_argument("--hs-s", type=float, default=None,
                         help="Hilbert-scale penalty order")
    p_solve.add_argument("--beta", type=float, default=1.0)
    p_solve.add_argument("--k-max", type=int, default=100)
    p_solve.set_defaults(func=_cmd_solve)

    p_asc = sub.add_parser("asc", help="evaluate one distance curve")
    _add_problem_flags(p_asc)
    p_asc.add_argument("--nu", type=float, default=0.0)
    p_asc.add_argument("--kappa", type=float, default=0.5)
    p_asc.add_argument("--r-min", type=float, default=0.5)
    p_asc.add_argument("--r-max", type=float, default=20.0)
    p_asc.add_argument("--points", type=int, default=40)
    p_asc.add_argument("--out-dir", default="out")
    p_asc.set_defaults(func=_cmd_asc)

    p_choose = sub.add_parser("choose", help="select a regularization parameter")
    _add_problem_flags(p_choose)
    p_choose.add_argument("--rule", required=True,
                          choices=["apriori", "discrepancy", "oracle"])
    p_choose.add_argument("--tau", type=float, default=1.5)
    p_choose.add_argument("--mu", type=float, default=0.5)
    p_choose.add_argument("--method", default="classical",
                          choices=["classical", "high_order", "hilbert"])
    p_choose.add_argument("--c", type=float, default=1.0)
    p_choose.add_argument("--kappa-order", type=int, default=0)
    p_choose.add_argument("--hs-s", type=float, default=None)
    p_choose.add_argument("--delta-abs", type=float, default=1e-3)
    p_choose.set_defaults(func=_cmd_choose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
