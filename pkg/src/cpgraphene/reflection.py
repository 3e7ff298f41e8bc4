"""Reflection coefficients of a (graphene-coated) plate at imaginary frequency.

The coefficient functions take pre-evaluated permittivities and
:class:`~cpgraphene.graphene.TensorPair` values so that callers can reuse
per-frequency quantities across a whole wave-vector grid.  All functions
accept numpy arrays for ``y``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .graphene import NO_GRAPHENE, GrapheneSheet, thermal_zero_freq_tensor


@dataclass(frozen=True)
class Surface:
    plate: object
    coating: GrapheneSheet = NO_GRAPHENE

    @property
    def coated(self):
        return self.coating.present


def _out(arr):
    return arr if np.ndim(arr) else float(arr)


def k_parameter(epsilon_l, zeta_l, y):
    """k_l = sqrt(y^2 + (eps_l - 1) zeta_l^2)."""
    return np.sqrt(y * y + (epsilon_l - 1.0) * zeta_l * zeta_l)


def _check(zeta_l, y):
    y = np.asarray(y, dtype=float)
    if not zeta_l > 0:
        raise DomainError("zeta_l must be positive; use the zero-frequency branch")
    if np.any(y <= zeta_l):
        raise DomainError("reflection coefficients need y > zeta_l")
    return y


def r_tm(epsilon_l, zeta_l, y, tensor=None):
    """TM reflection coefficient at a nonzero imaginary frequency.

    ``tensor`` is ``None`` for an uncoated plate.
    """
    y = _check(zeta_l, y)
    if np.isinf(epsilon_l):
        return _out(np.ones_like(y))
    k = k_parameter(epsilon_l, zeta_l, y)
    g = 0.0
    if tensor is not None:
        g = y * tensor.pi00 / ((y - zeta_l) * (y + zeta_l))
    ey = epsilon_l * y
    return _out((ey + k * (g - 1.0)) / (ey + k * (g + 1.0)))


def r_te(epsilon_l, zeta_l, y, tensor=None):
    """TE reflection coefficient at a nonzero imaginary frequency."""
    y = _check(zeta_l, y)
    if np.isinf(epsilon_l):
        return _out(-np.ones_like(y))
    k = k_parameter(epsilon_l, zeta_l, y)
    q = 0.0 if tensor is None else tensor.pi_tr_minus_weighted_pi00
    return _out((y - k - q) / (y + k + q))


def r_tm_zero_freq(surface, y, tau, tensor=None):
    """TM coefficient at zero frequency.

    Metals (including perfect conductors) reflect fully.  For a coated
    dielectric the thermal Pi_00(0, y) is computed unless supplied.
    """
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise DomainError("y must be positive")
    eps0 = surface.plate.static_permittivity
    if np.isinf(eps0):
        return _out(np.ones_like(y))
    if not surface.coated:
        return _out(np.full_like(y, (eps0 - 1.0) / (eps0 + 1.0)))
    if tensor is None:
        tensor = thermal_zero_freq_tensor(surface.coating, y, tau)
    p = tensor.pi00
    return _out((eps0 * y - y + p) / (eps0 * y + y + p))


def r_te_zero_freq(surface, y, tau, tensor=None):
    """TE coefficient at zero frequency (diagnostic only).

    Its contribution to free energy and force is multiplied by zeta_0^2 = 0.
    """
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise DomainError("y must be positive")
    if not surface.coated:
        return _out(np.zeros_like(y))
    if tensor is None:
        tensor = thermal_zero_freq_tensor(surface.coating, y, tau)
    q = tensor.pi_tr_minus_weighted_pi00
    return _out(-q / (2.0 * y + q))
