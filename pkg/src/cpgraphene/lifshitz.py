"""Casimir-Polder free energy and force at finite temperature, plus the T = 0 energy.

The wave-vector integral over y in [zeta_l, inf) is done with adaptive
Gauss-Kronrod after the shift y = zeta_l + t; the factor e^{-zeta_l} is
pulled out so that high Matsubara terms never underflow.  The range in t
is cut at ``T_CUTOFF``, where e^{-t} t^3 is below 1e-16.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import math

import numpy as np

from .atoms import polarizability_at
from .errors import CPError, ConvergenceError, DomainError
from .graphene import tensor_at_nonzero_matsubara, zero_temperature_tensor
from .quadrature import gauss_kronrod
from .reflection import r_te, r_tm, r_tm_zero_freq
from .units import JOULE_PER_EV, NM, Geometry, tau as tau_of

T_CUTOFF = 50.0
ZETA_CUTOFF = 60.0
KINDS = ("energy", "force")


@dataclass(frozen=True)
class ComputeSettings:
    quad_rel_tol: float = 1e-8
    sum_rel_tol: float = 1e-9
    max_matsubara_terms: int = 100_000
    zero_t_freq_tol: float = 1e-8

    def __post_init__(self):
        for name in ("quad_rel_tol", "sum_rel_tol", "zero_t_freq_tol"):
            v = getattr(self, name)
            if not 0 < v < 1:
                raise DomainError(f"{name} must lie in (0, 1), got {v}")
        if self.max_matsubara_terms < 10:
            raise DomainError("max_matsubara_terms must be at least 10")


DEFAULT_SETTINGS = ComputeSettings()


@dataclass(frozen=True)
class CPResult:
    """A converged free energy (J), force (N) or T = 0 energy (J).

    ``dimensionless_value`` is the value divided by k_B T alpha(0)/(8 a^3)
    (energy) or k_B T alpha(0)/(8 a^4) (force).  For the zero-temperature
    energy k_B T is replaced by hbar c/(4 pi a).  ``est_error`` is relative.
    """

    value: float
    dimensionless_value: float
    terms_used: int
    est_error: float
    kind: str = "energy"
    geometry: Geometry = field(default=None, repr=False, compare=False)


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def _t_breakpoints(zeta):
    s = min(1.0, zeta) if zeta > 0 else 1.0
    pts = {0.0, 0.1 * s, s, 1.0, 4.0, 12.0, 25.0, T_CUTOFF}
    return sorted(p for p in pts if 0 <= p <= T_CUTOFF)


def _bracket(eps, zeta, y, tensor):
    rtm = r_tm(eps, zeta, y, tensor)
    rte = r_te(eps, zeta, y, tensor)
    return 2.0 * y * y * rtm - zeta * zeta * (rtm + rte)


def y_integral(surface, eps, zeta, kind, rtol, tau=None):
    """int_zeta^inf dy W(y) e^{-y} {2y^2 R_TM - zeta^2 (R_TM + R_TE)}.

    W = 1 for energy and y for force.  At zeta = 0 the thermal tensor is
    used (``tau`` required); otherwise the T = 0 tensor at ``zeta``.
    Returns ``(value, abserr)``.
    """
    force = kind == "force"
    if zeta == 0:
        def integrand(y):
            v = 2.0 * y * y * np.exp(-y) * r_tm_zero_freq(surface, y, tau)
            return v * y if force else v
        return gauss_kronrod(integrand, _t_breakpoints(0.0), rtol=rtol)

    sheet = surface.coating

    def integrand(t):
        y = zeta + t
        tensor = tensor_at_nonzero_matsubara(sheet, zeta, y) if sheet.present else None
        v = np.exp(-t) * _bracket(eps, zeta, y, tensor)
        return v * y if force else v

    val, err = gauss_kronrod(integrand, _t_breakpoints(zeta), rtol=rtol)
    scale = math.exp(-zeta)
    return val * scale, err * scale


def _term(surface, atom, geometry, l, kind, settings, tau):
    zeta = l * tau
    xi = geometry.frequency(zeta)
    alpha_ratio = polarizability_at(atom, xi) / atom.static_polarizability
    if l == 0:
        val, err = y_integral(surface, None, 0.0, kind, settings.quad_rel_tol, tau)
        return 0.5 * alpha_ratio * val, 0.5 * alpha_ratio * err
    eps = float(surface.plate.epsilon(xi))
    val, err = y_integral(surface, eps, zeta, kind, settings.quad_rel_tol)
    return alpha_ratio * val, alpha_ratio * err


def matsubara_term(surface, atom, geometry, l, kind="energy", settings=DEFAULT_SETTINGS):
    """One term of the primed Matsubara sum, in units of alpha(0).

    Includes the factor 1/2 of the l = 0 term.
    """
    _check_kind(kind)
    if l < 0:
        raise DomainError("Matsubara index must be non-negative")
    if geometry.temperature <= 0:
        raise DomainError("Matsubara terms need T > 0")
    return _term(surface, atom, geometry, l, kind, settings, tau_of(geometry))[0]


def matsubara_sum(surface, atom, geometry, kind="energy", settings=DEFAULT_SETTINGS):
    """Primed sum over Matsubara terms.

    Stops after three consecutive terms each below ``sum_rel_tol`` of the
    running sum with non-increasing magnitude.  Returns
    ``(sum, abserr, terms_used)`` where ``abserr`` adds the quadrature
    errors and a geometric estimate of the neglected tail.
    """
    _check_kind(kind)
    if geometry.temperature <= 0:
        raise DomainError("finite-temperature sum needs T > 0; use energy_zero_temperature")
    tau = tau_of(geometry)
    total, err = _term(surface, atom, geometry, 0, kind, settings, tau)
    prev = None
    small = 0
    l = 0
    while True:
        l += 1
        if l >= settings.max_matsubara_terms:
            raise ConvergenceError(
                f"Matsubara sum not converged after {l} terms", estimate=total, terms=l)
        v, e = _term(surface, atom, geometry, l, kind, settings, tau)
        total += v
        err += e
        decaying = prev is None or abs(v) <= abs(prev)
        if abs(v) <= settings.sum_rel_tol * abs(total) and decaying:
            small += 1
        else:
            small = 0
        if small >= 3:
            break
        prev = v
    if prev:
        r = abs(v / prev)
        tail = abs(v) * r / (1.0 - r) if r < 1 else abs(v) * settings.max_matsubara_terms
    else:
        tail = 0.0
    return total, err + tail, l + 1


def _result(total, abserr, terms, kind, geometry, prefactor):
    rel = abserr / abs(total) if total else 0.0
    return CPResult(-prefactor * total, -total, terms, rel, kind, geometry)


def _si_prefactor(atom, geometry, energy_scale_ev, power):
    alpha_m3 = atom.static_polarizability_si(geometry.constants)
    a_m = geometry.separation * NM
    return energy_scale_ev * JOULE_PER_EV * alpha_m3 / (8.0 * a_m ** power)


def free_energy(surface, atom, geometry, settings=DEFAULT_SETTINGS):
    """Casimir-Polder free energy in joules at separation a and temperature T."""
    total, abserr, terms = matsubara_sum(surface, atom, geometry, "energy", settings)
    pre = _si_prefactor(atom, geometry, geometry.thermal_energy, 3)
    return _result(total, abserr, terms, "energy", geometry, pre)


def force(surface, atom, geometry, settings=DEFAULT_SETTINGS):
    """Casimir-Polder force in newtons (negative means attraction)."""
    total, abserr, terms = matsubara_sum(surface, atom, geometry, "force", settings)
    pre = _si_prefactor(atom, geometry, geometry.thermal_energy, 4)
    return _result(total, abserr, terms, "force", geometry, pre)


def energy_zero_temperature(surface, atom, geometry, settings=DEFAULT_SETTINGS):
    """Casimir-Polder energy at T = 0 (the Matsubara sum becomes an integral).

    The graphene tensor is taken in its T = 0 form at every frequency.
    ``geometry.temperature`` is ignored.
    """
    inner_tol = 0.1 * settings.zero_t_freq_tol
    w0 = atom.characteristic_frequency
    failures = []

    def outer(zetas):
        xi = geometry.frequency(zetas)
        eps = np.asarray(surface.plate.epsilon(xi), dtype=float)
        alpha_ratio = 1.0 / (1.0 + (xi / w0) ** 2)
        out = np.empty_like(zetas)
        for i, z in enumerate(zetas):
            v, e = y_integral(surface, eps[i], z, "energy", inner_tol)
            out[i] = alpha_ratio[i] * v
            failures.append(alpha_ratio[i] * e)
        return out

    bps = [0.0, 1e-3, 1e-2, 0.1, 0.5, 2.0, 6.0, 15.0, 30.0, ZETA_CUTOFF]
    total, err = gauss_kronrod(outer, bps, rtol=settings.zero_t_freq_tol)
    c = geometry.constants
    scale = c.hbar_c / (4.0 * math.pi * geometry.separation)
    pre = _si_prefactor(atom, geometry, scale, 3)
    rel = (err + inner_tol * abs(total)) / abs(total) if total else 0.0
    return CPResult(-pre * total, -total, len(failures), rel, "energy-T0", geometry)


QUANTITIES = {
    "free-energy": free_energy,
    "force": force,
    "energy-T0": energy_zero_temperature,
}


def compute(quantity, surface, atom, geometry, settings=DEFAULT_SETTINGS):
    try:
        fn = QUANTITIES[quantity]
    except KeyError:
        raise ValueError(f"quantity must be one of {tuple(QUANTITIES)}") from None
    return fn(surface, atom, geometry, settings)


@dataclass(frozen=True)
class SweepPoint:
    separation: float
    ratio: float
    status: str = "ok"
    message: str = ""
    coated: CPResult = field(default=None, repr=False)
    bare: CPResult = field(default=None, repr=False)


def _ratio_point(args):
    quantity, coated, bare, atom, geometry, settings = args
    try:
        rc = compute(quantity, coated, atom, geometry, settings)
        rb = compute(quantity, bare, atom, geometry, settings)
    except CPError as exc:
        return SweepPoint(geometry.separation, math.nan, "error", str(exc))
    ratio = rc.value / rb.value if rb.value else math.nan
    return SweepPoint(geometry.separation, ratio, "ok", "", rc, rb)


def parallel_map(fn, items, workers=1):
    """Ordered map, optionally over worker processes."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def ratio_sweep(surface_coated, surface_bare, atom, separations, temperature,
                settings=DEFAULT_SETTINGS, kind="free-energy", workers=1, constants=None):
    """Coated-over-bare ratio at each separation (nm).

    ``kind`` is ``"free-energy"``, ``"force"`` or ``"energy-T0"``.  Points
    that fail carry ``status="error"`` and a NaN ratio; the rest of the
    sweep is still returned.  Results are in input order regardless of
    ``workers``.
    """
    separations = list(separations)
    if not separations:
        raise ValueError("separation list is empty")
    if kind not in QUANTITIES:
        raise ValueError(f"kind must be one of {tuple(QUANTITIES)}")
    extra = {} if constants is None else {"constants": constants}
    jobs = [(kind, surface_coated, surface_bare, atom, Geometry(a, temperature, **extra), settings)
            for a in separations]
    return parallel_map(_ratio_point, jobs, workers)
