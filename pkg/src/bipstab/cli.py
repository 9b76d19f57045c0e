"""Command-line front end.

Subcommands: indpoly, stability, grid, roots, rouche, ck, nk, nell, witness,
scatter.  Output is deterministic JSON (15-significant-digit floats) or CSV
with a header row; `--out` writes to a file, otherwise stdout.  `--plot` on
grid / scatter / witness renders a PNG next to the delimited output.

Exit codes: 0 success, 2 invalid input, 3 solver/contour non-convergence,
4 I/O failure.  Configuration comes from an optional key=value file
(--config), overridden by flags; environment variables are never consulted.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import balanced, contour, ratio, report, stability
from .errors import BipstabError, ConvergenceError, ContourError, InvalidInputError
from .graphs import (
    independence_polynomial_bipartite,
    independence_polynomial_bruteforce,
    load_edge_list_file,
    phi_trinomial,
)
from .roots import SolverConfig, shift_roots_to_x, trinomial_roots

CONFIG_KEYS = ("precision", "residual_tol", "max_iter", "stability_tol", "samples", "threads")


def _read_config_file(path) -> dict:
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise InvalidInputError(f"{path}:{lineno}: expected key=value")
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in CONFIG_KEYS:
                    raise InvalidInputError(f"{path}:{lineno}: unknown key {key!r}")
                values[key] = value.strip()
    except OSError as exc:
        raise InvalidInputError(f"cannot read config file: {exc}") from exc
    return values


def _settings(args) -> dict:
    """Merge config-file values and flags; flags win."""
    cfg = {
        "precision": "standard",
        "residual_tol": 1e-10,
        "max_iter": 200,
        "stability_tol": 1e-9,
        "samples": contour.DEFAULT_SAMPLES_PER_EDGE,
        "threads": 1,
    }
    if getattr(args, "config", None):
        raw = _read_config_file(args.config)
        try:
            if "precision" in raw:
                cfg["precision"] = raw["precision"]
            if "residual_tol" in raw:
                cfg["residual_tol"] = float(raw["residual_tol"])
            if "max_iter" in raw:
                cfg["max_iter"] = int(raw["max_iter"])
            if "stability_tol" in raw:
                cfg["stability_tol"] = float(raw["stability_tol"])
            if "samples" in raw:
                cfg["samples"] = int(raw["samples"])
            if "threads" in raw:
                cfg["threads"] = raw["threads"]
        except ValueError as exc:
            raise InvalidInputError(f"bad config value: {exc}") from exc
    for key, attr in (
        ("precision", "precision"),
        ("residual_tol", "residual_tol"),
        ("max_iter", "max_iter"),
        ("stability_tol", "stability_tol"),
        ("samples", "samples"),
        ("threads", "threads"),
    ):
        val = getattr(args, attr, None)
        if val is not None:
            cfg[key] = val
    if cfg["threads"] in ("auto", None):
        import os

        cfg["threads"] = os.cpu_count() or 1
    cfg["threads"] = int(cfg["threads"])
    return cfg


def _solver_config(settings) -> SolverConfig:
    return SolverConfig(
        max_iterations=settings["max_iter"],
        residual_tol=settings["residual_tol"],
        precision=settings["precision"],
    )


def _stability_dict(rep) -> dict:
    return {
        "graph": rep.graph_label,
        "verdict": rep.verdict,
        "max_re_x": rep.max_real_part_x,
        "max_re_y": rep.max_real_part_y,
        "margin": rep.margin,
        "tolerance": rep.tolerance,
        "witness": report.complex_fields(rep.witness_root),
    }


# ---------------------------------------------------------------------------
# subcommand handlers: each returns the document text to emit
# ---------------------------------------------------------------------------

def cmd_indpoly(args, settings) -> str:
    if args.graph is not None:
        g = load_edge_list_file(args.graph)
        poly = independence_polynomial_bruteforce(g)
        label = f"file:{args.graph}"
        nverts = g.vertex_count
    else:
        if args.m is None or args.n is None:
            raise InvalidInputError("indpoly needs --graph FILE or both --m and --n")
        poly = independence_polynomial_bipartite(args.m, args.n)
        label = f"K_{{{args.m},{args.n}}}"
        nverts = args.m + args.n
    doc = {
        "graph": label,
        "vertex_count": nverts,
        "degree": poly.degree,
        "coefficients": list(poly.coefficients),
    }
    return report.render_json(doc)


def cmd_stability(args, settings) -> str:
    rep = stability.classify_bipartite(
        args.m, args.n, _solver_config(settings), settings["stability_tol"]
    )
    return report.render_json(_stability_dict(rep))


def cmd_grid(args, settings) -> str:
    reports = stability.stability_grid(
        args.m_max, args.n_max, _solver_config(settings),
        settings["stability_tol"], threads=settings["threads"],
    )
    if args.plot:
        from . import plots

        plots.save_grid_heatmap(reports, args.m_max, args.n_max, args.plot)
    return report.grid_csv(reports)


def cmd_roots(args, settings) -> str:
    spec = phi_trinomial(args.m, args.n)
    rs = trinomial_roots(spec, _solver_config(settings))
    xs = shift_roots_to_x(rs)
    doc = {
        "m": min(args.m, args.n),
        "n": max(args.m, args.n),
        "solver": rs.solver,
        "iterations": rs.iterations_used,
        "max_residual": rs.max_residual,
        "roots_y": [report.complex_fields(z) for z in rs.roots],
        "roots_x": [report.complex_fields(z) for z in xs.roots],
        "residuals": list(rs.residuals),
    }
    return report.render_json(doc)


def cmd_rouche(args, settings) -> str:
    registry = contour.builtin_scenarios()
    name = args.scenario
    if name in ("p21",):
        if args.m is None:
            raise InvalidInputError("p21 needs --m")
        pair, spec = registry[name](args.m)
        degree_g = args.m + 1
    elif name in ("p22", "p23"):
        if args.n is None:
            raise InvalidInputError(f"{name} needs --n")
        pair, spec = registry[name](args.n)
        degree_g = args.n
    elif name == "t3":
        if args.m is None or args.k is None:
            raise InvalidInputError("t3 needs --m and --k")
        pair, spec = registry[name](args.m, args.k)
        degree_g = args.m + args.k
    else:
        raise InvalidInputError(f"unknown scenario {name!r}")
    spec = spec.with_samples(settings["samples"])
    margin = contour.rouche_margin(pair, spec)
    winding_f = contour.winding_zero_count(pair.f, spec)
    winding_g = contour.winding_zero_count(pair.g, spec)
    doc = {
        "scenario": name,
        "label": pair.label,
        "contour": {
            "re_min": spec.re_min, "re_max": spec.re_max,
            "im_min": spec.im_min, "im_max": spec.im_max,
        },
        "samples_per_edge": spec.samples_per_edge,
        "min_margin": margin.min_margin,
        "argmin": report.complex_fields(margin.argmin_point),
        "refined": margin.refined,
        "winding_f": winding_f,
        "winding_g": winding_g,
        "degree_g": degree_g,
    }
    return report.render_json(doc)


def _threshold_doc(k: int) -> dict:
    th = balanced.threshold_Nk(k)
    pk = balanced.pk_polynomial(k)
    return {
        "k": th.k,
        "coefficients": list(pk.coefficients.coefficients),
        "c_k": th.c_k,
        "minimizer_t": th.minimizer_t,
        "delta_k": th.delta_k,
        "N_k": th.N_k,
    }


def cmd_ck(args, settings) -> str:
    if args.table:
        k_max = args.k_max if args.k_max is not None else (args.k or 12)
        if k_max < 2:
            raise InvalidInputError("--k-max must be >= 2")
        thresholds = [balanced.threshold_Nk(k) for k in range(2, k_max + 1)]
        return report.ck_table_csv(thresholds)
    if args.k is None:
        raise InvalidInputError("ck needs --k (or --table with --k-max)")
    return report.render_json(_threshold_doc(args.k))


def cmd_nk(args, settings) -> str:
    return report.render_json(_threshold_doc(args.k))


def cmd_nell(args, settings) -> str:
    r = ratio.make_ratio(args.p, args.q)
    th = ratio.threshold_Nell(r, _solver_config(settings))
    doc = {
        "p": th.ratio.p,
        "q": th.ratio.q,
        "dominant": {
            "re": th.dominant.t.real,
            "im": th.dominant.t.imag,
            "s": th.dominant.s,
            "theta": th.dominant.theta,
        },
        "theta_eff": th.theta_eff,
        "delta": th.delta,
        "U": th.U,
        "N_ell": th.N_ell,
    }
    return report.render_json(doc)


def cmd_witness(args, settings) -> str:
    r = ratio.make_ratio(args.p, args.q)
    th = ratio.threshold_Nell(r, _solver_config(settings))
    per_m = ratio.witness_scan(r, args.m_max, _solver_config(settings),
                               settings["stability_tol"])
    m_star = None
    for m, rep in per_m:
        if rep.verdict == "unstable":
            m_star = m
            break
    rows = []
    for m, rep in per_m:
        n = r.p * (m // r.q)
        max_re = rep.max_real_part_x
        rows.append({
            "m": m,
            "n": n,
            "verdict": rep.verdict,
            "max_re_x": None if math.isnan(max_re) else max_re,
        })
    if args.csv:
        _write_text(args.csv, report.witness_csv(per_m))
    if args.plot:
        from . import plots

        plots.save_witness_margins(per_m, th.N_ell, args.plot)
    doc = {"p": r.p, "q": r.q, "N_ell": th.N_ell, "m_star": m_star, "per_m": rows}
    return report.render_json(doc)


def cmd_scatter(args, settings) -> str:
    spec = phi_trinomial(args.m, args.n)
    rs = trinomial_roots(spec, _solver_config(settings))
    xs = shift_roots_to_x(rs)
    if args.plot:
        from . import plots

        plots.save_root_scatter(
            xs.roots, args.plot, title=f"independence roots of K_{{{args.m},{args.n}}}"
        )
    return report.scatter_csv(xs.roots)


# ---------------------------------------------------------------------------
# parser / dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--config", help="key=value configuration file")
    common.add_argument("--precision", choices=("standard", "extended"))
    common.add_argument("--residual-tol", dest="residual_tol", type=float)
    common.add_argument("--max-iter", dest="max_iter", type=int)
    common.add_argument("--stability-tol", dest="stability_tol", type=float)
    common.add_argument("--threads", help="worker count or 'auto'")

    parser = argparse.ArgumentParser(
        prog="bipstab",
        description="independence polynomials of complete bipartite graphs: "
                    "roots, stability, and thresholds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indpoly", parents=[common],
                       help="independence polynomial (closed form or enumeration)")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", help="edge-list file: 'p <count>' header then '<u> <v>' lines")
    p.set_defaults(handler=cmd_indpoly)

    p = sub.add_parser("stability", parents=[common], help="classify K_{m,n}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_stability)

    p = sub.add_parser("grid", parents=[common], help="verdict grid as CSV")
    p.add_argument("--m-max", dest="m_max", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--plot", help="also render a phase-diagram PNG to this path")
    p.set_defaults(handler=cmd_grid)

    p = sub.add_parser("roots", parents=[common], help="all roots of the K_{m,n} trinomial")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_roots)

    p = sub.add_parser("rouche", parents=[common],
                       help="contour margin + winding counts for a bundled scenario")
    p.add_argument("--scenario", choices=("p21", "p22", "p23", "t3"), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--samples", type=int, help="samples per contour edge")
    p.set_defaults(handler=cmd_rouche)

    p = sub.add_parser("ck", parents=[common],
                       help="P_k minimum and threshold data (JSON, or CSV table)")
    p.add_argument("--k", type=int)
    p.add_argument("--table", action="store_true")
    p.add_argument("--k-max", dest="k_max", type=int)
    p.set_defaults(handler=cmd_ck)

    p = sub.add_parser("nk", parents=[common], help="stability threshold N(k)")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_nk)

    p = sub.add_parser("nell", parents=[common], help="instability threshold N(l) for l = p/q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(handler=cmd_nell)

    p = sub.add_parser("witness", parents=[common],
                       help="smallest observed unstable multiple for l = p/q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m-max", dest="m_max", type=int, required=True)
    p.add_argument("--csv", help="also write per-m margins CSV to this path")
    p.add_argument("--plot", help="also render a margin-vs-m PNG to this path")
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("scatter", parents=[common],
                       help="x-plane root coordinates of K_{m,n} as CSV")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--plot", help="also render a scatter PNG to this path")
    p.set_defaults(handler=cmd_scatter)

    return parser


def _write_text(path, text: str):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        settings = _settings(args)
        text = args.handler(args, settings)
        if args.out:
            _write_text(args.out, text)
        else:
            sys.stdout.write(text)
        return 0
    except (ConvergenceError, ContourError) as exc:
        print(f"bipstab: {exc}", file=sys.stderr)
        return exc.exit_code
    except InvalidInputError as exc:
        print(f"bipstab: {exc}", file=sys.stderr)
        return exc.exit_code
    except BipstabError as exc:
        print(f"bipstab: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"bipstab: I/O error: {exc}", file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
