"""Command-line front end.

Exit codes: 0 success, 1 configuration error, 2 data error,
3 numerical non-convergence.
"""
import argparse
import math
import sys

from .asymptotics import (CrossoverNotFound, classical_force_coated, classical_force_bare,
                          classical_free_energy_bare, classical_free_energy_coated,
                          crossover_separation)
from .config import QUANTITY_CHOICES, build_config, load_config
from .errors import (ConfigError, ConvergenceError, DataError, DomainError, QuadratureError,
                     UnknownAtomError, UnknownMaterialError)
from .figures import FIGURES, reproduce_figures
from .graphene import GrapheneSheet
from .lifshitz import ComputeSettings, compute, force, free_energy, ratio_sweep
from .output import metadata, write_table
from .reflection import Surface
from .units import Geometry

EXIT_OK, EXIT_CONFIG, EXIT_DATA, EXIT_NUMERIC = 0, 1, 2, 3
NUMERIC_ERRORS = (ConvergenceError, QuadratureError)


def _add_common(p):
    p.add_argument("--config", help="key=value configuration file")
    p.add_argument("--atom")
    p.add_argument("--material")
    p.add_argument("--materials-db", dest="materials_db")
    coat = p.add_mutually_exclusive_group()
    coat.add_argument("--coated", dest="coated", action="store_const", const=True)
    coat.add_argument("--bare", dest="coated", action="store_const", const=False)
    p.add_argument("--temperature", type=float)
    p.add_argument("--separations", type=lambda s: tuple(float(v) for v in s.split(",")),
                   help="comma-separated separations in nm")
    p.add_argument("--a-start", dest="a_start", type=float, help="nm")
    p.add_argument("--a-stop", dest="a_stop", type=float, help="nm")
    p.add_argument("--a-count", dest="a_count", type=int)
    p.add_argument("--a-scale", dest="a_scale", choices=("linear", "log"))
    p.add_argument("--quantity", choices=QUANTITY_CHOICES)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--keep-going", dest="keep_going", action="store_const", const=True)
    p.add_argument("--tol-quad", dest="tol_quad", type=float)
    p.add_argument("--tol-sum", dest="tol_sum", type=float)
    p.add_argument("--workers", type=int)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cpgraphene",
        description="Casimir-Polder free energies and forces for graphene-coated plates")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (("compute", "one engine quantity per separation"),
                        ("ratio", "coated-over-bare ratio per separation"),
                        ("classical", "classical-limit expressions per separation"),
                        ("crossover", "smallest separation where the classical limit holds")):
        p = sub.add_parser(name, help=help_)
        _add_common(p)
        if name == "crossover":
            p.add_argument("--rel-tol", dest="rel_tol", type=float)
    p = sub.add_parser("figures", help="write the data files behind every figure")
    p.add_argument("--out", default="figures", help="output directory")
    p.add_argument("--points", type=int, default=40)
    p.add_argument("--only", nargs="*", choices=tuple(FIGURES))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--tol-quad", dest="tol_quad", type=float, default=1e-8)
    p.add_argument("--tol-sum", dest="tol_sum", type=float, default=1e-9)
    return parser


_CONFIG_KEYS = ("atom", "material", "materials_db", "coated", "temperature", "separations",
                "a_start", "a_stop", "a_count", "a_scale", "quantity", "out", "format",
                "keep_going", "tol_quad", "tol_sum", "workers", "rel_tol")

_DEFAULT_QUANTITY = {"ratio": "free-energy", "classical": "force", "crossover": "force"}


def _config_from_args(args):
    file_values = load_config(args.config) if args.config else {}
    overrides = {k: getattr(args, k, None) for k in _CONFIG_KEYS}
    if overrides["quantity"] is None and "quantity" not in file_values:
        overrides["quantity"] = _DEFAULT_QUANTITY.get(args.command)
    cfg = build_config(file_values, overrides)
    return cfg.validate(require_grid=args.command != "crossover")


def _settings(cfg):
    try:
        return ComputeSettings(quad_rel_tol=cfg.tol_quad, sum_rel_tol=cfg.tol_sum)
    except DomainError as exc:
        raise ConfigError(str(exc), field="tol") from None


def _surface(cfg, coated):
    plate = cfg.resolve_material()
    return Surface(plate, GrapheneSheet()) if coated else Surface(plate)


def _echo(cfg):
    keys = ("atom", "material", "coated", "temperature", "quantity", "tol_quad", "tol_sum")
    return [(k, getattr(cfg, k)) for k in keys]


def _emit(cfg, columns, rows, meta):
    text = write_table(cfg.out, columns, rows, meta, cfg.format)
    if cfg.out is None:
        sys.stdout.write(text)


def run_compute(cfg):
    atom = cfg.resolve_atom()
    surface = _surface(cfg, cfg.coated)
    settings = _settings(cfg)
    quantity = cfg.quantity
    if quantity not in ("free-energy", "force", "energy-T0"):
        raise ConfigError("compute needs quantity free-energy, force or energy-T0",
                          field="quantity")
    rows, failed = [], 0
    for a in cfg.grid():
        geometry = Geometry(float(a), cfg.temperature)
        try:
            r = compute(quantity, surface, atom, geometry, settings)
            rows.append([float(a), r.value, r.dimensionless_value, r.terms_used, r.est_error, "ok"])
        except NUMERIC_ERRORS as exc:
            if not cfg.keep_going:
                raise
            failed += 1
            rows.append([float(a), math.nan, math.nan, 0, math.nan, f"error: {exc}"])
    columns = ["a_nm", "value_SI", "value_dimensionless", "terms_used", "est_error", "status"]
    _emit(cfg, columns, rows, metadata(_echo(cfg)))
    return EXIT_NUMERIC if failed else EXIT_OK


def run_ratio(cfg):
    atom = cfg.resolve_atom()
    settings = _settings(cfg)
    quantity = "free-energy" if cfg.quantity == "ratio" else cfg.quantity
    if quantity not in ("free-energy", "force", "energy-T0"):
        raise ConfigError("ratio needs quantity free-energy, force or energy-T0", field="quantity")
    points = ratio_sweep(_surface(cfg, True), _surface(cfg, False), atom, cfg.grid(),
                         cfg.temperature, settings, quantity, cfg.workers)
    failed = [p for p in points if p.status != "ok"]
    if failed and not cfg.keep_going:
        raise ConvergenceError(f"a={failed[0].separation} nm: {failed[0].message}")
    rows = [[p.separation, p.ratio, p.status if not p.message else f"error: {p.message}"]
            for p in points]
    _emit(cfg, ["a_nm", "ratio_coated_over_bare", "status"], rows, metadata(_echo(cfg)))
    return EXIT_NUMERIC if failed else EXIT_OK


def run_classical(cfg):
    atom = cfg.resolve_atom()
    plate = cfg.resolve_material()
    eps0 = plate.static_permittivity
    is_force = cfg.quantity == "force"
    rows = []
    for a in cfg.grid():
        g = Geometry(float(a), cfg.temperature)
        if cfg.coated:
            fn = classical_force_coated if is_force else classical_free_energy_coated
            e = fn(atom, g, eps0)
            rows.append([float(a), e.total, e.leading, e.first_correction, e.second_correction])
        else:
            fn = classical_force_bare if is_force else classical_free_energy_bare
            v = fn(atom, g, eps0)
            rows.append([float(a), v, v, 0.0, 0.0])
    columns = ["a_nm", "value_SI", "leading_SI", "first_correction_SI", "second_correction_SI"]
    _emit(cfg, columns, rows, metadata(_echo(cfg)))
    return EXIT_OK


def run_crossover(cfg):
    atom = cfg.resolve_atom()
    surface = _surface(cfg, cfg.coated)
    kind = "energy" if cfg.quantity == "free-energy" else "force"
    grid = cfg.grid() if (cfg.separations or cfg.a_start is not None) else None
    result = crossover_separation(surface, atom, cfg.temperature, cfg.rel_tol, kind,
                                  _settings(cfg), grid)
    rows = [[float(a), float(d)] for a, d in zip(result.grid, result.deviations)]
    meta = metadata(_echo(cfg) + [("rel_tol", cfg.rel_tol)],
                    extra=[f"crossover_nm={result.separation!r}"])
    if cfg.out is not None:
        write_table(cfg.out, ["a_nm", "relative_deviation"], rows, meta, cfg.format)
    print(f"crossover_nm={result.separation:.6g}")
    return EXIT_OK


def run_figures(args):
    settings = ComputeSettings(quad_rel_tol=args.tol_quad, sum_rel_tol=args.tol_sum)
    for path in reproduce_figures(args.out, args.points, settings, args.workers,
                                  args.only, args.format):
        print(path)
    return EXIT_OK


COMMANDS = {"compute": run_compute, "ratio": run_ratio, "classical": run_classical,
            "crossover": run_crossover}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "figures":
            return run_figures(args)
        return COMMANDS[args.command](_config_from_args(args))
    except (ConfigError, UnknownAtomError, UnknownMaterialError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DataError, DomainError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ConvergenceError, QuadratureError, CrossoverNotFound) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
