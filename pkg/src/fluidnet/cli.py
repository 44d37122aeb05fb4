"""Command-line front end.

Subcommands: generate (station layouts), cdf (per-eta SINR CDF curves),
fit (shift measurement and linear fit), report (full experiment
directory). Data goes to files, progress to stderr. Exit codes:
0 success, 2 configuration error, 3 simulation/runtime error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .config import ExperimentConfig, config_from_mapping, load_config_file, parse_eta_list
from .errors import ConfigError, FluidNetError
from .experiment import (correlation_for, fit_shift_law, fluid_cdf_for,
                         fluid_model_for, hexagonal_cdf_for, poisson_cdf_for,
                         throughput_for)
from .io import write_cdf_csv, write_fit_report_csv, write_fluid_curve_csv, write_layout_csv
from .placement import (ModelKind, generate_hexagonal, generate_poisson,
                        hexagonal_density, region_for_expected_count)
from .stats import CANONICAL_FIT, outage_probability

CDF_ROWS = 512
_CDF_P_GRID = np.arange(1, CDF_ROWS + 1) / (CDF_ROWS + 1)

DEFAULT_OUTAGE_THRESHOLDS = (-10.0, -5.0, 0.0, 5.0, 10.0)


def _log(msg):
    print(msg, file=sys.stderr)


def _eta_label(eta: float) -> str:
    return f"{round(float(eta), 4):g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fluidnet",
                                     description="SINR distributions for hexagonal, "
                                                 "Poisson and fluid cellular networks")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shared(p):
        p.add_argument("--config", help="key = value configuration file")
        p.add_argument("--seed", type=int)
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--eta", help="comma-separated path-loss exponents")
        p.add_argument("--runs", type=int)
        p.add_argument("--users", type=int)
        p.add_argument("--density-scale", type=float, dest="density_scale")
        p.add_argument("--rings", type=int)

    p_gen = sub.add_parser("generate", help="write a station layout CSV")
    add_shared(p_gen)
    p_gen.add_argument("--model", choices=["poisson", "hex"], default="poisson")

    p_cdf = sub.add_parser("cdf", help="write per-eta SINR CDF curves")
    add_shared(p_cdf)
    p_cdf.add_argument("--model", choices=["poisson", "hex", "fluid"], default="poisson")

    p_fit = sub.add_parser("fit", help="measure CDF shifts and fit the line in eta")
    add_shared(p_fit)

    p_rep = sub.add_parser("report", help="full experiment: CDFs, fit, correlation, outage")
    add_shared(p_rep)
    p_rep.add_argument("--outage-thresholds", dest="outage_thresholds",
                       default=",".join(str(t) for t in DEFAULT_OUTAGE_THRESHOLDS),
                       help="comma-separated dB thresholds for the outage table")
    return parser


def config_from_args(args) -> ExperimentConfig:
    mapping = load_config_file(args.config) if args.config else {}
    cfg = config_from_mapping(mapping)
    overrides = {}
    for key in ("seed", "runs", "users", "density_scale", "rings"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "eta", None):
        overrides["eta_list"] = parse_eta_list(args.eta)
    return config_from_mapping(overrides, cfg)


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _empirical_rows(cdf):
    q = cdf.quantile(_CDF_P_GRID)
    return q, _CDF_P_GRID


def _fluid_rows(fluid_cdf):
    q = fluid_cdf.quantile(_CDF_P_GRID)
    return q, _CDF_P_GRID


def cmd_generate(args) -> int:
    config = config_from_args(args)
    out = _out_dir(args)
    r = config.effective_half_isd
    if args.model == "hex":
        layout = generate_hexagonal(r, config.rings, seed=config.seed)
    else:
        region = region_for_expected_count(r, config.expected_stations)
        layout = generate_poisson(region, hexagonal_density(r), config.seed, half_isd=r)
    path = out / "layout_0.csv"
    write_layout_csv(layout, path, digest=config.digest())
    _log(f"generate: {layout.n_stations} stations ({layout.model.value}) -> {path}")
    return 0


def _write_model_cdfs(config, model: str, out: Path, digest: str, fit=None):
    for eta in config.eta_list:
        label = _eta_label(eta)
        comments = {"digest": digest, "model": model, "eta": eta, "seed": config.seed}
        if model == "fluid":
            sinr_db, prob = _fluid_rows(fluid_cdf_for(config, eta))
        elif model == "fitted":
            coeff = fit or CANONICAL_FIT
            comments.update(a=coeff.a, b=coeff.b)
            sinr_db, prob = _fluid_rows(fluid_cdf_for(config, eta, coeff.shift_db(eta)))
        elif model == "hex":
            sinr_db, prob = _empirical_rows(hexagonal_cdf_for(config, eta))
        else:
            sinr_db, prob = _empirical_rows(poisson_cdf_for(config, eta))
        path = out / f"cdf_{model}_eta{label}.csv"
        write_cdf_csv(path, sinr_db, prob, comments)
        _log(f"cdf: {model} eta={label} -> {path}")


def cmd_cdf(args) -> int:
    config = config_from_args(args)
    out = _out_dir(args)
    _write_model_cdfs(config, args.model, out, config.digest())
    return 0


def cmd_fit(args) -> int:
    config = config_from_args(args)
    if len(config.eta_list) < 2:
        raise ConfigError("fit needs at least 2 eta values")
    out = _out_dir(args)
    digest = config.digest()
    poisson_cdfs = {eta: poisson_cdf_for(config, eta) for eta in config.eta_list}
    shift_fit = fit_shift_law(config, poisson_cdfs)
    write_fit_report_csv(shift_fit, out / "fit.csv",
                         {"digest": digest, "seed": config.seed})
    coeff = shift_fit.coefficients
    for eta in config.eta_list:
        label = _eta_label(eta)
        sinr_db, prob = _empirical_rows(poisson_cdfs[eta])
        write_cdf_csv(out / f"cdf_poisson_eta{label}.csv", sinr_db, prob,
                      {"digest": digest, "model": "poisson", "eta": eta, "seed": config.seed})
        fitted = fluid_cdf_for(config, eta, coeff.shift_db(eta))
        sinr_db, prob = _fluid_rows(fitted)
        write_cdf_csv(out / f"cdf_fitted_eta{label}.csv", sinr_db, prob,
                      {"digest": digest, "model": "fitted", "eta": eta, "seed": config.seed,
                       "a": coeff.a, "b": coeff.b})
    _log(f"fit: a={coeff.a:.4f} b={coeff.b:.4f} rms={shift_fit.rms_residual_db:.4f} dB")
    return 0


def cmd_report(args) -> int:
    config = config_from_args(args)
    if len(config.eta_list) < 2:
        raise ConfigError("report needs at least 2 eta values")
    thresholds = [float(t) for t in str(args.outage_thresholds).split(",") if t.strip()]
    out = _out_dir(args)
    digest = config.digest()

    poisson_cdfs = {eta: poisson_cdf_for(config, eta) for eta in config.eta_list}
    for eta in config.eta_list:
        label = _eta_label(eta)
        sinr_db, prob = _empirical_rows(poisson_cdfs[eta])
        write_cdf_csv(out / f"cdf_poisson_eta{label}.csv", sinr_db, prob,
                      {"digest": digest, "model": "poisson", "eta": eta, "seed": config.seed})
    _write_model_cdfs(config, "fluid", out, digest)
    _write_model_cdfs(config, "hex", out, digest)

    shift_fit = fit_shift_law(config, poisson_cdfs)
    write_fit_report_csv(shift_fit, out / "fit.csv", {"digest": digest, "seed": config.seed})
    _write_model_cdfs(config, "fitted", out, digest, fit=shift_fit.coefficients)

    from .io import write_csv

    corr_rows = [(eta, correlation_for(config, eta, poisson_cdfs[eta]))
                 for eta in config.eta_list]
    write_csv(out / "correlation.csv", ["eta", "zeta"], corr_rows, {"digest": digest})

    outage_rows = []
    for eta in config.eta_list:
        fitted = fluid_cdf_for(config, eta, CANONICAL_FIT.shift_db(eta))
        for t in thresholds:
            outage_rows.append((eta, t,
                                float(outage_probability(poisson_cdfs[eta], t)),
                                float(outage_probability(fluid_cdf_for(config, eta), t)),
                                float(outage_probability(fitted, t))))
    write_csv(out / "outage.csv",
              ["eta", "threshold_db", "poisson", "fluid", "fitted_fluid"],
              outage_rows, {"digest": digest})

    tp_rows = [(s.eta, s.cell_edge_bps_hz, s.cell_average_bps_hz)
               for s in (throughput_for(config, eta) for eta in config.eta_list)]
    write_csv(out / "throughput.csv", ["eta", "cell_edge_bps_hz", "cell_average_bps_hz"],
              tp_rows, {"digest": digest})

    for eta in config.eta_list:
        write_fluid_curve_csv(fluid_model_for(config, eta),
                              out / f"fluid_curve_eta{_eta_label(eta)}.csv",
                              exclusion=config.exclusion,
                              comments={"digest": digest, "eta": eta})

    coeff = shift_fit.coefficients
    with open(out / "report.txt", "w", newline="\n") as fh:
        fh.write("fluidnet experiment report\n")
        fh.write(f"digest: {digest}\n\nconfiguration:\n")
        for key, value in config.canonical_items():
            fh.write(f"  {key} = {value}\n")
        fh.write(f"\nshift fit: a={coeff.a!r} b={coeff.b!r} "
                 f"rms={shift_fit.rms_residual_db!r} dB\n")
        fh.write("\neta  shift_db  zeta(fitted vs poisson)\n")
        for (eta, shift), (_, zeta) in zip(zip(shift_fit.etas, shift_fit.shifts_db), corr_rows):
            fh.write(f"  {eta:g}  {shift:.4f}  {zeta:.5f}\n")
    _log(f"report: written to {out}")
    return 0


_COMMANDS = {"generate": cmd_generate, "cdf": cmd_cdf, "fit": cmd_fit, "report": cmd_report}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        _log(f"error: {exc}")
        return 2
    except FluidNetError as exc:
        _log(f"error: {exc}")
        return 3


if __name__ == "__main__":
    sys.exit(main())
