"""Data files behind each figure of the coated-plate study (T = 300 K)."""
import os

import numpy as np

from .atoms import ATOMS
from .graphene import GrapheneSheet
from .lifshitz import DEFAULT_SETTINGS, energy_zero_temperature, force, free_energy, parallel_map
from .materials import builtin_material
from .output import metadata, write_table
from .reflection import Surface
from .units import NM, Geometry

PLATES = ("Au", "Si", "Al2O3", "SiO2")
TEMPERATURE = 300.0


def _surfaces(name):
    plate = builtin_material(name)
    return Surface(plate, GrapheneSheet()), Surface(plate)


def _ratio(args):
    fn, coated, bare, atom, geometry, settings = args
    return fn(coated, atom, geometry, settings).value / fn(bare, atom, geometry, settings).value


def _ratios(fn, names, atoms, grid, settings, workers):
    jobs = []
    for name, atom in zip(names, atoms):
        coated, bare = _surfaces(name)
        jobs += [(fn, coated, bare, atom, Geometry(a, TEMPERATURE), settings) for a in grid]
    flat = parallel_map(_ratio, jobs, workers)
    return np.array(flat).reshape(len(names), len(grid))


def _value(args):
    fn, surface, atom, geometry, settings = args
    return fn(surface, atom, geometry, settings).value


def fig1(grid, settings, workers):
    r = _ratios(free_energy, PLATES, [ATOMS["Rb"]] * 4, grid, settings, workers)
    return ["a_nm"] + [f"ratio_{p}" for p in PLATES], np.column_stack([grid, r.T])


def fig2a(grid, settings, workers):
    coated, bare = _surfaces("SiO2")
    rb = ATOMS["Rb"]
    cols = []
    for s in (bare, coated):
        jobs_t = [(free_energy, s, rb, Geometry(a, TEMPERATURE), settings) for a in grid]
        jobs_0 = [(energy_zero_temperature, s, rb, Geometry(a, 0.0), settings) for a in grid]
        cols.append(np.array(parallel_map(_value, jobs_t, workers))
                    / np.array(parallel_map(_value, jobs_0, workers)))
    return ["a_nm", "bare_F300_over_E0", "coated_F300_over_E0"], np.column_stack([grid] + cols)


def fig2b(grid, settings, workers):
    r300 = _ratios(free_energy, ["SiO2"], [ATOMS["Rb"]], grid, settings, workers)[0]
    r0 = _ratios(energy_zero_temperature, ["SiO2"], [ATOMS["Rb"]], grid, settings, workers)[0]
    return ["a_nm", "ratio_T300", "ratio_T0"], np.column_stack([grid, r300, r0])


def fig3(grid, settings, workers):
    names = ("Rb", "Na", "Cs", "He*")
    r = _ratios(free_energy, ["SiO2"] * 4, [ATOMS[n] for n in names], grid, settings, workers)
    return ["a_nm"] + [f"ratio_{n}" for n in names], np.column_stack([grid, r.T])


def fig4(grid, settings, workers):
    r = _ratios(force, PLATES, [ATOMS["He*"]] * 4, grid, settings, workers)
    return ["a_nm"] + [f"ratio_{p}" for p in PLATES], np.column_stack([grid, r.T])


def _force_a4(coated, grid, settings, workers):
    he = ATOMS["He*"]
    cols = []
    for name in PLATES:
        s = _surfaces(name)[0 if coated else 1]
        jobs = [(force, s, he, Geometry(a, TEMPERATURE), settings) for a in grid]
        cols.append(np.abs(parallel_map(_value, jobs, workers)) * (grid * NM) ** 4)
    return ["a_nm"] + [f"abs_F_a4_{p}" for p in PLATES], np.column_stack([grid] + cols)


def fig5(grid, settings, workers):
    return _force_a4(True, grid, settings, workers)


def fig6(grid, settings, workers):
    return _force_a4(False, grid, settings, workers)


FIGURES = {
    "fig1": (fig1, (100.0, 6000.0)),
    "fig2a": (fig2a, (100.0, 6000.0)),
    "fig2b": (fig2b, (100.0, 6000.0)),
    "fig3": (fig3, (100.0, 1000.0)),
    "fig4": (fig4, (100.0, 6000.0)),
    "fig5": (fig5, (1000.0, 10000.0)),
    "fig6": (fig6, (1000.0, 10000.0)),
}


def reproduce_figures(out_dir, points=40, settings=DEFAULT_SETTINGS, workers=1,
                      names=None, fmt_name="csv"):
    """Write one data file per figure into ``out_dir``; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for name in names or FIGURES:
        fn, (start, stop) = FIGURES[name]
        grid = np.geomspace(start, stop, points)
        columns, data = fn(grid, settings, workers)
        meta = metadata([("figure", name), ("temperature", TEMPERATURE), ("points", points)])
        path = os.path.join(out_dir, f"{name}.{fmt_name}")
        write_table(path, columns, [list(map(float, row)) for row in data], meta, fmt_name)
        paths.append(path)
    return paths
