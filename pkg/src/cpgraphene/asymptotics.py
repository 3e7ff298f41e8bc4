"""Classical (high-temperature) limit and its range of validity.

In the classical limit only the zero-frequency term survives.  With the
small-argument form of the thermal Pi_00 (independent of y) the TM
coefficient is expanded to second order in 1/Pi_00, which gives
closed-form free energy and force for a coated dielectric plate.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import CPError, DomainError
from .lifshitz import DEFAULT_SETTINGS, force as engine_force, free_energy as engine_free_energy
from .units import JOULE_PER_EV, NM, Geometry, tau as tau_of

REGIME_LIMIT = 0.05


@dataclass(frozen=True)
class ClassicalExpansion:
    """Leading term plus the first two corrections (SI units)."""

    leading: float
    first_correction: float
    second_correction: float

    @property
    def total(self):
        return self.leading + self.first_correction + self.second_correction


@dataclass(frozen=True)
class Pi00Classical:
    value: float
    regime_parameter: float

    @property
    def extrapolated(self):
        """True when pi v_F y/(2 tau) at y = 1 is not small."""
        return self.regime_parameter >= REGIME_LIMIT


def pi00_classical(geometry, fermi_velocity_ratio=None, fine_structure=None):
    """Small-theta limit of the thermal Pi_00(0, y): 8 alpha ln2 tau/(pi v_F^2).

    Returned together with the regime parameter pi v_F/(2 tau), evaluated
    at the representative y = 1.
    """
    c = geometry.constants
    v = c.fermi_velocity_ratio if fermi_velocity_ratio is None else fermi_velocity_ratio
    a = c.fine_structure if fine_structure is None else fine_structure
    t = tau_of(geometry)
    value = 8.0 * a * math.log(2.0) * t / (math.pi * v * v)
    regime = math.pi * v / (2.0 * t) if t > 0 else math.inf
    return Pi00Classical(value, regime)


def _scale(atom, geometry, power):
    """k_B T alpha(0) / a^power in SI."""
    alpha = atom.static_polarizability_si(geometry.constants)
    return geometry.thermal_energy * JOULE_PER_EV * alpha / (geometry.separation * NM) ** power


def classical_free_energy_coated(atom, geometry, epsilon0):
    """Classical free energy for a graphene-coated plate.

    For metals (``epsilon0`` infinite) only the leading term remains.
    """
    lead = -_scale(atom, geometry, 3) / 4.0
    if math.isinf(epsilon0):
        return ClassicalExpansion(lead, 0.0, 0.0)
    p = pi00_classical(geometry).value
    return ClassicalExpansion(lead, -lead * 6.0 / p, lead * 24.0 * (epsilon0 + 1.0) / p ** 2)


def classical_force_coated(atom, geometry, epsilon0):
    """Classical force for a graphene-coated plate (minus the a-derivative of the free energy)."""
    lead = -3.0 * _scale(atom, geometry, 4) / 4.0
    if math.isinf(epsilon0):
        return ClassicalExpansion(lead, 0.0, 0.0)
    p = pi00_classical(geometry).value
    return ClassicalExpansion(lead, -lead * 8.0 / p, lead * 40.0 * (epsilon0 + 1.0) / p ** 2)


def _fresnel_factor(epsilon0):
    if epsilon0 < 1:
        raise DomainError("static permittivity must be >= 1")
    return 1.0 if math.isinf(epsilon0) else (epsilon0 - 1.0) / (epsilon0 + 1.0)


def classical_free_energy_bare(atom, geometry, epsilon0):
    return -_scale(atom, geometry, 3) / 4.0 * _fresnel_factor(epsilon0)


def classical_force_bare(atom, geometry, epsilon0):
    return -3.0 * _scale(atom, geometry, 4) / 4.0 * _fresnel_factor(epsilon0)


def classical_value(surface, atom, geometry, kind="force"):
    """Classical expression matching ``surface`` (coated or bare)."""
    eps0 = surface.plate.static_permittivity
    if kind == "force":
        if surface.coated:
            return classical_force_coated(atom, geometry, eps0).total
        return classical_force_bare(atom, geometry, eps0)
    if kind == "energy":
        if surface.coated:
            return classical_free_energy_coated(atom, geometry, eps0).total
        return classical_free_energy_bare(atom, geometry, eps0)
    raise ValueError("kind must be 'force' or 'energy'")


def crossover_grid(start=1000.0, stop=20000.0, per_decade=50):
    """Separations start * 10**(k/per_decade) that do not exceed ``stop``."""
    n = int(math.floor(per_decade * math.log10(stop / start) + 1e-9)) + 1
    return start * 10.0 ** (np.arange(n) / per_decade)


@dataclass(frozen=True)
class Crossover:
    separation: float
    grid: np.ndarray
    deviations: np.ndarray


class CrossoverNotFound(CPError):
    pass


def relative_deviation(surface, atom, geometry, kind="force", settings=DEFAULT_SETTINGS):
    """|engine - classical| / |engine| at one geometry."""
    fn = engine_force if kind == "force" else engine_free_energy
    exact = fn(surface, atom, geometry, settings).value
    return abs(exact - classical_value(surface, atom, geometry, kind)) / abs(exact)


def crossover_separation(surface, atom, temperature, rel_tol=0.02, kind="force",
                         settings=DEFAULT_SETTINGS, grid=None, constants=None):
    """Smallest grid separation (nm) from which the classical expression stays within ``rel_tol``.

    The default grid has 50 points per decade from 1 to 20 micrometres.
    """
    if not 0 < rel_tol < 0.5:
        raise DomainError("rel_tol must lie in (0, 0.5)")
    grid = crossover_grid() if grid is None else np.asarray(grid, dtype=float)
    extra = {} if constants is None else {"constants": constants}
    dev = np.array([relative_deviation(surface, atom, Geometry(a, temperature, **extra),
                                       kind, settings) for a in grid])
    ok = dev <= rel_tol
    if not ok[-1]:
        raise CrossoverNotFound(f"classical limit not reached within {rel_tol:g} on the grid")
    # first index of the final run of passing points
    failing = np.flatnonzero(~ok)
    idx = failing[-1] + 1 if failing.size else 0
    return Crossover(float(grid[idx]), grid, dev)
