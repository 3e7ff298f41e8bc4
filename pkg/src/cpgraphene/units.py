"""Physical constants and dimensionless variables.

Internal units: energies in eV, lengths in nm, temperatures in K.
Conversion to SI happens only where absolute energies/forces are reported.
"""
from dataclasses import dataclass, field
import math

from .errors import DomainError

SPEED_OF_LIGHT = 299792458.0  # m/s
JOULE_PER_EV = 1.602176634e-19
NM = 1e-9


@dataclass(frozen=True)
class Constants:
    """Fixed constants used throughout the package.

    Every field can be overridden to study how the results depend on the
    chosen constant precision.
    """

    hbar_c: float = 197.327  # eV nm
    boltzmann: float = 8.617333e-5  # eV / K
    fine_structure: float = 1.0 / 137.035999
    fermi_velocity_ratio: float = 9.0e5 / SPEED_OF_LIGHT
    polarizability_au: float = 1.482e-31  # m^3 per atomic unit

    @property
    def hbar(self):
        """Reduced Planck constant in eV s."""
        return self.hbar_c * NM / SPEED_OF_LIGHT


DEFAULT_CONSTANTS = Constants()


@dataclass(frozen=True)
class Geometry:
    """Atom-plate separation (nm) and temperature (K)."""

    separation: float
    temperature: float
    constants: Constants = field(default=DEFAULT_CONSTANTS, repr=False)

    def __post_init__(self):
        if not self.separation > 0:
            raise DomainError(f"separation must be positive, got {self.separation}")
        if not self.temperature >= 0:
            raise DomainError(f"temperature must be non-negative, got {self.temperature}")

    @classmethod
    def from_si(cls, separation_m, temperature, constants=DEFAULT_CONSTANTS):
        return cls(separation_m / NM, temperature, constants)

    @property
    def separation_m(self):
        return self.separation * NM

    @property
    def omega_c(self):
        """Characteristic frequency c/(2a), expressed as an energy in eV."""
        return self.constants.hbar_c / (2.0 * self.separation)

    @property
    def thermal_energy(self):
        """k_B T in eV."""
        return self.constants.boltzmann * self.temperature

    def frequency(self, zeta):
        """Dimensional imaginary frequency (eV) for dimensionless ``zeta``."""
        return zeta * self.omega_c

    def with_separation(self, separation):
        return Geometry(separation, self.temperature, self.constants)


def tau(geometry):
    """Dimensionless temperature 4 pi a k_B T / (hbar c).

    This is also the spacing between consecutive dimensionless
    Matsubara frequencies.
    """
    c = geometry.constants
    return 4.0 * math.pi * geometry.separation * c.boltzmann * geometry.temperature / c.hbar_c


def matsubara_zeta(geometry, l):
    """Dimensionless Matsubara frequency zeta_l = l * tau."""
    if l < 0:
        raise DomainError(f"Matsubara index must be non-negative, got {l}")
    if geometry.temperature == 0:
        raise DomainError("Matsubara frequencies are undefined at T = 0; "
                          "use the zero-temperature integral instead")
    return l * tau(geometry)
