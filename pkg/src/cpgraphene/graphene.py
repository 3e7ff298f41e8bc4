"""Dimensionless polarization tensor of undoped, gapless graphene.

The zero Matsubara frequency uses the exact finite-temperature tensor
(x-integrals evaluated numerically); nonzero frequencies use the closed
form T = 0 tensor with the discrete frequency inserted.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError
from .quadrature import gauss_legendre_panels
from .units import DEFAULT_CONSTANTS


@dataclass(frozen=True)
class GrapheneSheet:
    present: bool = True
    fermi_velocity_ratio: float = DEFAULT_CONSTANTS.fermi_velocity_ratio
    fine_structure: float = DEFAULT_CONSTANTS.fine_structure

    def __post_init__(self):
        if not 0 < self.fermi_velocity_ratio < 1:
            raise DomainError("Fermi velocity ratio must lie in (0, 1)")

    @classmethod
    def from_constants(cls, constants, present=True):
        return cls(present, constants.fermi_velocity_ratio, constants.fine_structure)


NO_GRAPHENE = GrapheneSheet(present=False)


@dataclass(frozen=True)
class TensorPair:
    """``pi00`` and the TE combination Pi_tr - y^2/(y^2 - zeta^2) Pi_00."""

    pi00: object
    pi_tr_minus_weighted_pi00: object


def _ln2cosh(z):
    z = np.abs(z)
    return z + np.log1p(np.exp(-2.0 * z))


def _u_integral(kernel, y, z_scale, rtol, order=16, max_panels=4096):
    """int_0^{pi/2} kernel(z * cos u, u) du for z = z_scale * y, vectorized in y.

    Panels are doubled until the largest relative change over all y is
    below ``rtol``.
    """
    y = np.atleast_1d(np.asarray(y, dtype=float))
    z = (z_scale * y)[:, None]
    panels = 4
    prev = None
    while True:
        u, w = gauss_legendre_panels(0.0, 0.5 * math.pi, panels, order)
        cur = kernel(z * np.cos(u)[None, :], u[None, :]) @ w
        if prev is not None:
            scale = np.maximum(np.abs(cur), np.finfo(float).tiny)
            if np.max(np.abs(cur - prev) / scale) <= rtol:
                return cur
        if panels >= max_panels:
            return cur
        prev = cur
        panels *= 2


def _check_thermal(sheet, y, tau):
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise DomainError("y must be positive")
    if not tau > 0:
        raise DomainError("tau must be positive")
    return y


def pi00_thermal_zero_freq(sheet, y, tau, rtol=1e-10):
    """Pi_00(0, y) at finite temperature (exact for gapless graphene).

    With x = (1 + sin u)/2 the x-integral becomes a smooth integral over
    u in [-pi/2, pi/2]; the integrand is even so only half is computed.
    """
    y = _check_thermal(sheet, y, tau)
    if not sheet.present:
        return np.zeros_like(y) if y.ndim else 0.0
    v = sheet.fermi_velocity_ratio
    a = sheet.fine_structure
    half = _u_integral(lambda zc, u: _ln2cosh(zc) * np.cos(u), y,
                       math.pi * v / (2.0 * tau), rtol)
    # dx = cos(u)/2 du, and doubling for the symmetric half cancels the 1/2
    out = 8.0 * a * tau / (math.pi * v * v) * half
    return out if y.ndim else float(out[0])


def pi_tr_minus_pi00_thermal_zero_freq(sheet, y, tau, rtol=1e-10):
    """Pi_tr(0, y) - Pi_00(0, y) at finite temperature."""
    y = _check_thermal(sheet, y, tau)
    if not sheet.present:
        return np.zeros_like(y) if y.ndim else 0.0
    v = sheet.fermi_velocity_ratio
    a = sheet.fine_structure
    half = _u_integral(lambda zc, u: np.cos(u) ** 2 * np.tanh(zc), y,
                       math.pi * v / (2.0 * tau), rtol)
    out = 4.0 * a * v * np.atleast_1d(y) * half
    return out if y.ndim else float(out[0])


def thermal_zero_freq_tensor(sheet, y, tau, rtol=1e-10):
    """TensorPair at zeta = 0, where the weighted term reduces to Pi_tr - Pi_00."""
    return TensorPair(pi00_thermal_zero_freq(sheet, y, tau, rtol),
                      pi_tr_minus_pi00_thermal_zero_freq(sheet, y, tau, rtol))


def _f(sheet, zeta, y):
    v2 = sheet.fermi_velocity_ratio ** 2
    return np.sqrt(v2 * y * y + (1.0 - v2) * zeta * zeta)


def zero_temperature_tensor(sheet, zeta, y):
    """T = 0 tensor at (possibly continuous) frequency ``zeta`` >= 0."""
    zeta = np.asarray(zeta, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(zeta < 0):
        raise DomainError("zeta must be non-negative")
    if np.any(y < zeta):
        raise DomainError("y must not be smaller than zeta")
    if not sheet.present:
        zero = np.zeros(np.broadcast(zeta, y).shape)
        zero = zero if zero.ndim else 0.0
        return TensorPair(zero, zero)
    pa = math.pi * sheet.fine_structure
    f = _f(sheet, zeta, y)
    pi00 = pa * (y - zeta) * (y + zeta) / f
    q = pa * f
    if pi00.ndim == 0:
        return TensorPair(float(pi00), float(q))
    return TensorPair(pi00, q)


def tensor_at_nonzero_matsubara(sheet, zeta_l, y):
    """T = 0 tensor evaluated at a nonzero Matsubara frequency."""
    if np.any(np.asarray(zeta_l) <= 0):
        raise DomainError("zeta_l must be positive")
    return zero_temperature_tensor(sheet, zeta_l, y)
