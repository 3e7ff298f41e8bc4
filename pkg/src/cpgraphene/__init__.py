"""Casimir-Polder interaction of atoms with graphene-coated plates."""

__version__ = "0.1.0"

from .atoms import ATOMS, AtomModel, builtin_atom, polarizability_at
from .errors import (ConfigError, ConvergenceError, CPError, DataError, DomainError,
                     QuadratureError, UnknownAtomError, UnknownMaterialError)
from .graphene import NO_GRAPHENE, GrapheneSheet, TensorPair
from .lifshitz import (CPResult, ComputeSettings, energy_zero_temperature, force,
                       free_energy, matsubara_term, ratio_sweep)
from .materials import builtin_material, permittivity_at, static_permittivity
from .reflection import Surface
from .units import DEFAULT_CONSTANTS, Constants, Geometry, matsubara_zeta, tau

__all__ = [
    "ATOMS", "AtomModel", "builtin_atom", "polarizability_at",
    "ConfigError", "ConvergenceError", "CPError", "DataError", "DomainError",
    "QuadratureError", "UnknownAtomError", "UnknownMaterialError",
    "NO_GRAPHENE", "GrapheneSheet", "TensorPair",
    "CPResult", "ComputeSettings", "energy_zero_temperature", "force", "free_energy",
    "matsubara_term", "ratio_sweep",
    "builtin_material", "permittivity_at", "static_permittivity",
    "Surface", "DEFAULT_CONSTANTS", "Constants", "Geometry", "matsubara_zeta", "tau",
]
