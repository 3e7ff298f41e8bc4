"""Single-oscillator dynamic polarizabilities and the built-in atom catalog."""
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnknownAtomError


@dataclass(frozen=True)
class AtomModel:
    """Ground-state atom described by the single-oscillator model.

    Attributes
    ----------
    static_polarizability : float
        alpha(0) in atomic units.
    characteristic_frequency : float
        omega_0 in eV.
    name : str
    """

    static_polarizability: float
    characteristic_frequency: float
    name: str = "custom"

    def __post_init__(self):
        if not self.static_polarizability > 0:
            raise DomainError("static polarizability must be positive")
        if not self.characteristic_frequency > 0:
            raise DomainError("characteristic frequency must be positive")

    def static_polarizability_si(self, constants):
        """alpha(0) as a volume in m^3."""
        return self.static_polarizability * constants.polarizability_au


def polarizability_at(atom, xi):
    """alpha(i xi) in atomic units for imaginary frequency ``xi`` (eV)."""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0):
        raise DomainError("imaginary frequency must be non-negative")
    w0 = atom.characteristic_frequency
    out = atom.static_polarizability / (1.0 + (xi / w0) ** 2)
    return out if out.ndim else float(out)


ATOMS = {
    "Rb": AtomModel(319.9, 5.46, "Rb"),
    "Na": AtomModel(162.68, 2.14, "Na"),
    "Cs": AtomModel(403.6, 1.55, "Cs"),
    "He*": AtomModel(315.638, 1.18, "He*"),
}


def builtin_atom(name, extra=None):
    """Look up an atom by name in the built-in catalog (plus ``extra``)."""
    catalog = dict(ATOMS)
    if extra:
        catalog.update(extra)
    try:
        return catalog[name]
    except KeyError:
        raise UnknownAtomError(name, catalog) from None
