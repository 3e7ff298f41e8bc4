"""Plate permittivities at imaginary frequencies.

All frequencies are in eV.  Every model exposes ``epsilon(xi)`` (vectorized)
and ``static_permittivity``; metals report ``math.inf`` for the latter.
"""
from dataclasses import dataclass, field
from importlib import resources
import math
import shlex

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import DataError, DomainError, QuadratureError, UnknownMaterialError
from .quadrature import gauss_kronrod

INFINITE = math.inf


def _as_xi(xi):
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0) or np.any(np.isnan(xi)):
        raise DomainError("imaginary frequency must be non-negative")
    return xi


def _out(arr):
    return arr if arr.ndim else float(arr)


@dataclass(frozen=True)
class Vacuum:
    is_metal = False
    static_permittivity = 1.0

    def epsilon(self, xi):
        return _out(np.ones_like(_as_xi(xi)))


@dataclass(frozen=True)
class PerfectConductor:
    is_metal = True
    static_permittivity = INFINITE

    def epsilon(self, xi):
        return _out(np.full_like(_as_xi(xi), INFINITE))


def _metal_xi(xi):
    xi = _as_xi(xi)
    if np.any(xi == 0):
        raise DomainError("metal permittivity diverges at zero frequency; "
                          "use the zero-frequency reflection branch")
    return xi


@dataclass(frozen=True)
class DrudeMetal:
    plasma_frequency: float
    relaxation: float

    is_metal = True
    static_permittivity = INFINITE

    def __post_init__(self):
        if not (self.plasma_frequency > 0 and self.relaxation > 0):
            raise DomainError("Drude parameters must be positive")

    def epsilon(self, xi):
        xi = _metal_xi(xi)
        return _out(1.0 + self.plasma_frequency ** 2 / (xi * (xi + self.relaxation)))

    def im_epsilon_real(self, omega):
        """Im epsilon(omega) on the real frequency axis."""
        omega = np.asarray(omega, dtype=float)
        g = self.relaxation
        return self.plasma_frequency ** 2 * g / (omega * (omega ** 2 + g ** 2))


@dataclass(frozen=True)
class PlasmaMetal:
    plasma_frequency: float

    is_metal = True
    static_permittivity = INFINITE

    def __post_init__(self):
        if not self.plasma_frequency > 0:
            raise DomainError("plasma frequency must be positive")

    def epsilon(self, xi):
        xi = _metal_xi(xi)
        return _out(1.0 + (self.plasma_frequency / xi) ** 2)


@dataclass(frozen=True)
class Oscillator:
    strength: float
    resonance: float
    damping: float = 0.0

    def __post_init__(self):
        if not (self.strength > 0 and self.resonance > 0 and self.damping >= 0):
            raise DomainError(f"invalid oscillator {self}")


@dataclass(frozen=True)
class OscillatorDielectric:
    """Sum of Lorentz oscillators, 1 + sum C/(1 + xi^2/w^2 + g xi/w^2)."""

    oscillators: tuple

    is_metal = False

    def __post_init__(self):
        object.__setattr__(self, "oscillators", tuple(self.oscillators))
        if not self.oscillators:
            raise DomainError("at least one oscillator is required")

    @property
    def static_permittivity(self):
        return 1.0 + sum(o.strength for o in self.oscillators)

    def epsilon(self, xi):
        xi = _as_xi(xi)
        eps = np.ones_like(xi)
        for o in self.oscillators:
            w2 = o.resonance ** 2
            eps = eps + o.strength / (1.0 + xi ** 2 / w2 + o.damping * xi / w2)
        return _out(eps)

    def im_epsilon_real(self, omega):
        omega = np.asarray(omega, dtype=float)
        out = np.zeros_like(omega)
        for o in self.oscillators:
            w2 = o.resonance ** 2
            out = out + o.strength * w2 * o.damping * omega / ((w2 - omega ** 2) ** 2
                                                               + (o.damping * omega) ** 2)
        return out


@dataclass(frozen=True)
class TabulatedImaginary:
    """epsilon(i xi) given on a grid, interpolated monotonically in log xi.

    Outside the grid an error is raised unless ``extrapolate`` is set, in
    which case the first value is held below the grid and epsilon - 1 falls
    off as xi^-2 above it.
    """

    xi: np.ndarray
    values: np.ndarray
    extrapolate: bool = False
    _interp: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        xi = np.asarray(self.xi, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if xi.ndim != 1 or xi.shape != values.shape or xi.size < 2:
            raise DataError("tabulated permittivity needs two equal-length columns")
        if np.any(xi <= 0) or np.any(np.diff(xi) <= 0):
            raise DataError("tabulated frequencies must be positive and strictly increasing")
        if np.any(values < 1):
            raise DataError("tabulated epsilon(i xi) must be >= 1")
        if np.any(np.diff(values) > 0):
            raise DataError("tabulated epsilon(i xi) must be non-increasing")
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_interp", PchipInterpolator(np.log(xi), values))

    is_metal = False

    @property
    def static_permittivity(self):
        if self.extrapolate:
            return float(self.values[0])
        raise DomainError("static permittivity requires extrapolation below the grid")

    def epsilon(self, xi):
        xi = _as_xi(xi)
        lo, hi = self.xi[0], self.xi[-1]
        below, above = xi < lo, xi > hi
        if (np.any(below) or np.any(above)) and not self.extrapolate:
            raise DomainError(f"xi outside tabulated range [{lo}, {hi}] eV")
        inside = ~(below | above)
        out = np.empty_like(xi)
        out[inside] = self._interp(np.log(xi[inside]))
        out[below] = self.values[0]
        out[above] = 1.0 + (self.values[-1] - 1.0) * (hi / xi[above]) ** 2
        return _out(np.maximum(out, 1.0))


@dataclass(frozen=True)
class OpticalDataTable:
    """Im epsilon(omega) on the real axis, plus a low-frequency extrapolation.

    ``low_freq_extrapolation`` is ``None`` (nothing below the table), a
    :class:`DrudeMetal` or a :class:`PlasmaMetal`.
    """

    omega: np.ndarray
    im_epsilon: np.ndarray
    low_freq_extrapolation: object = None
    _interp: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=float)
        im = np.asarray(self.im_epsilon, dtype=float)
        if omega.ndim != 1 or omega.shape != im.shape or omega.size < 2:
            raise DataError("optical table needs two equal-length columns")
        if np.any(omega <= 0) or np.any(np.diff(omega) <= 0):
            raise DataError("optical table frequencies must be positive and strictly increasing")
        if np.any(im < 0):
            raise DataError("Im epsilon must be non-negative")
        ext = self.low_freq_extrapolation
        if ext is not None and not isinstance(ext, (DrudeMetal, PlasmaMetal)):
            raise DataError("low-frequency extrapolation must be Drude or plasma")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "im_epsilon", im)
        object.__setattr__(self, "_interp", PchipInterpolator(omega, im))

    def __call__(self, omega):
        return np.maximum(self._interp(omega), 0.0)


def kramers_kronig_imaginary(table, xi, rtol=1e-6):
    """epsilon(i xi) = 1 + (2/pi) int_0^inf w Im eps(w) / (w^2 + xi^2) dw.

    Below the table the declared extrapolation supplies Im epsilon (the
    plasma model contributes its delta function at zero frequency as
    w_p^2/xi^2); above the table Im epsilon is taken as zero.
    """
    xi = float(xi)
    ext = table.low_freq_extrapolation
    if xi < 0 or (xi == 0 and ext is not None):
        raise DomainError("Kramers-Kronig transform needs xi > 0")
    x2 = xi * xi
    lo, hi = table.omega[0], table.omega[-1]
    # The interpolant is a cubic on each table segment, so the knots are
    # natural breakpoints; xi is added because the kernel peaks there.
    pts = table.omega
    if lo < xi < hi:
        pts = np.union1d(pts, [xi])
    inner_tol = 0.1 * rtol
    try:
        total, err = gauss_kronrod(lambda w: w * table(w) / (w * w + x2), pts,
                                   rtol=inner_tol, max_intervals=max(4000, 8 * pts.size))
        if isinstance(ext, DrudeMetal):
            g = ext.relaxation
            wp2 = ext.plasma_frequency ** 2
            bp = np.unique([0.0, *(p for p in (g, xi) if 0 < p < lo), lo])
            v, e = gauss_kronrod(lambda w: wp2 * g / ((w * w + g * g) * (w * w + x2)), bp,
                                 rtol=inner_tol)
            total += v
            err += e
    except QuadratureError as exc:
        raise QuadratureError("Kramers-Kronig integral did not converge",
                              1.0 + 2.0 / math.pi * exc.estimate,
                              2.0 / math.pi * exc.error) from None
    eps = 1.0 + 2.0 / math.pi * total
    if isinstance(ext, PlasmaMetal):
        eps += ext.plasma_frequency ** 2 / x2
    err = 2.0 / math.pi * err
    if err > rtol * eps:
        raise QuadratureError("Kramers-Kronig tolerance not reached", eps, err)
    return eps


@dataclass(frozen=True)
class KramersKronigMaterial:
    """Permittivity obtained on demand from optical data; values are memoized."""

    table: OpticalDataTable
    rtol: float = 1e-6
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def is_metal(self):
        return self.table.low_freq_extrapolation is not None

    @property
    def static_permittivity(self):
        if self.is_metal:
            return INFINITE
        return kramers_kronig_imaginary(self.table, 0.0, self.rtol)

    def epsilon(self, xi):
        xi = _metal_xi(xi) if self.is_metal else _as_xi(xi)
        flat = xi.ravel()
        out = np.empty_like(flat)
        for i, x in enumerate(flat):
            v = self._cache.get(x)
            if v is None:
                v = self._cache[x] = kramers_kronig_imaginary(self.table, x, self.rtol)
            out[i] = v
        return _out(out.reshape(xi.shape))


def permittivity_at(model, xi):
    """epsilon(i xi) for any permittivity model (``xi`` in eV, scalar or array)."""
    return model.epsilon(xi)


def static_permittivity(model):
    """Zero-frequency permittivity; ``math.inf`` for metals."""
    return model.static_permittivity


def optical_table_from_model(model, omega, low_freq_extrapolation=None):
    """Sample Im epsilon of an analytic Drude/Lorentz model on ``omega``."""
    return OpticalDataTable(np.asarray(omega, dtype=float), model.im_epsilon_real(omega),
                            low_freq_extrapolation)


def tabulate(model, xi):
    """Evaluate ``model`` on a grid and wrap the result as a table."""
    xi = np.asarray(xi, dtype=float)
    return TabulatedImaginary(xi, np.asarray(model.epsilon(xi)), extrapolate=True)


def _read_columns(path):
    rows = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 2:
                raise DataError(f"{path}:{lineno}: expected two columns")
            try:
                rows.append((float(parts[0]), float(parts[1])))
            except ValueError:
                raise DataError(f"{path}:{lineno}: non-numeric value") from None
    if not rows:
        raise DataError(f"{path}: no data")
    arr = np.array(rows)
    if np.any(np.diff(arr[:, 0]) <= 0):
        raise DataError(f"{path}: first column must be strictly increasing")
    return arr[:, 0], arr[:, 1]


def load_optical_table(path, low_freq_extrapolation=None):
    """Read a two-column (omega eV, Im epsilon) file."""
    omega, im = _read_columns(path)
    return OpticalDataTable(omega, im, low_freq_extrapolation)


def load_tabulated(path, extrapolate=False):
    """Read a two-column (xi eV, epsilon(i xi)) file."""
    xi, eps = _read_columns(path)
    return TabulatedImaginary(xi, eps, extrapolate)


def _parse_record(tokens, base_dir):
    variant = tokens[0].lower()
    opts = {}
    oscillators = []
    for tok in tokens[1:]:
        if "=" not in tok:
            raise DataError(f"expected key=value, got {tok!r}")
        key, value = tok.split("=", 1)
        if key == "osc":
            try:
                parts = [float(p) for p in value.split(",")]
            except ValueError:
                raise DataError(f"bad oscillator {value!r}") from None
            if len(parts) not in (2, 3):
                raise DataError(f"oscillator needs strength,resonance[,damping]: {value!r}")
            oscillators.append(Oscillator(*parts))
        else:
            opts[key] = value

    def num(key):
        try:
            return float(opts[key])
        except KeyError:
            raise DataError(f"{variant}: missing {key}") from None
        except ValueError:
            raise DataError(f"{variant}: {key} is not a number") from None

    def path(key):
        p = opts.get(key)
        if p is None:
            raise DataError(f"{variant}: missing {key}")
        return p if base_dir is None or p.startswith("/") else f"{base_dir}/{p}"

    if variant == "vacuum":
        return Vacuum()
    if variant in ("perfect", "perfect-conductor"):
        return PerfectConductor()
    if variant == "drude":
        return DrudeMetal(num("plasma_frequency"), num("relaxation"))
    if variant == "plasma":
        return PlasmaMetal(num("plasma_frequency"))
    if variant == "oscillator":
        return OscillatorDielectric(oscillators)
    if variant == "tabulated":
        return load_tabulated(path("file"), opts.get("extrapolate", "no") == "yes")
    if variant == "optical":
        kind = opts.get("extrapolation", "none")
        if kind == "drude":
            ext = DrudeMetal(num("plasma_frequency"), num("relaxation"))
        elif kind == "plasma":
            ext = PlasmaMetal(num("plasma_frequency"))
        elif kind == "none":
            ext = None
        else:
            raise DataError(f"unknown extrapolation {kind!r}")
        return KramersKronigMaterial(load_optical_table(path("file"), ext))
    raise DataError(f"unknown material variant {variant!r}")


def parse_material_spec(text, base_dir=None):
    """Build a model from a one-line description such as ``drude plasma_frequency=9 relaxation=0.035``."""
    tokens = shlex.split(text)
    if not tokens:
        raise DataError("empty material description")
    return _parse_record(tokens, base_dir)


def load_materials(path=None):
    """Parse a materials database file into ``{name: model}``.

    Without ``path`` the database shipped with the package is read.
    """
    if path is None:
        text = resources.files(__package__).joinpath("data/materials.dat").read_text()
        base_dir = None
        label = "materials.dat"
    else:
        with open(path) as fh:
            text = fh.read()
        base_dir = str(path).rsplit("/", 1)[0] if "/" in str(path) else "."
        label = str(path)
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = shlex.split(raw, comments=True)
        if not tokens:
            continue
        if len(tokens) < 2:
            raise DataError(f"{label}:{lineno}: expected '<name> <variant> [key=value ...]'")
        try:
            out[tokens[0]] = _parse_record(tokens[1:], base_dir)
        except (DataError, DomainError) as exc:
            raise DataError(f"{label}:{lineno}: {exc}") from None
    return out


_BUILTIN = None


def builtin_material(name, extra=None):
    global _BUILTIN
    if _BUILTIN is None:
        _BUILTIN = load_materials()
    catalog = dict(_BUILTIN)
    if extra:
        catalog.update(extra)
    try:
        return catalog[name]
    except KeyError:
        raise UnknownMaterialError(name, catalog) from None


def builtin_materials():
    builtin_material("vacuum")
    return dict(_BUILTIN)
