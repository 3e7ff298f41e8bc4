"""Flat ``key = value`` run configuration.

Grammar (one entry per line, ``#`` starts a comment)::

    atom          = Rb | He* | <alpha0_au>,<omega0_eV> | <name defined below>
    atom.<Name>   = <alpha0_au>,<omega0_eV>
    material      = <name> | <inline model, e.g. "drude plasma_frequency=9 relaxation=0.035">
    material.<Name> = <inline model>
    materials_db  = <path to a materials database>
    coated        = true | false
    temperature   = <K>
    separations   = <nm>,<nm>,...
    a_start, a_stop = <nm>;  a_count = <int>;  a_scale = linear | log
    quantity      = free-energy | force | energy-T0 | ratio | classical | crossover
    out           = <path>;  format = csv | json
    keep_going    = true | false
    tol_quad, tol_sum = <float>;  workers = <int>;  rel_tol = <float>
"""
from dataclasses import dataclass, field, fields

import numpy as np

from .atoms import AtomModel, builtin_atom
from .errors import ConfigError, DataError, DomainError, UnknownMaterialError
from .materials import builtin_material, load_materials, parse_material_spec

QUANTITY_CHOICES = ("free-energy", "force", "energy-T0", "ratio", "classical", "crossover")
_BOOL = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


@dataclass
class RunConfig:
    atom: str = "Rb"
    material: str = "SiO2"
    coated: bool = True
    temperature: float = 300.0
    separations: tuple = ()
    a_start: float = None
    a_stop: float = None
    a_count: int = 1
    a_scale: str = "log"
    quantity: str = "free-energy"
    out: str = None
    format: str = "csv"
    keep_going: bool = False
    tol_quad: float = 1e-8
    tol_sum: float = 1e-9
    workers: int = 1
    rel_tol: float = 0.02
    materials_db: str = None
    custom_atoms: dict = field(default_factory=dict)
    custom_materials: dict = field(default_factory=dict)

    def grid(self):
        """Separations in nm, explicit list first, then the start/stop range."""
        if self.separations:
            seps = np.asarray(self.separations, dtype=float)
        elif self.a_start is not None:
            stop = self.a_start if self.a_stop is None else self.a_stop
            if self.a_count < 1:
                raise ConfigError("a_count must be >= 1", field="a_count")
            if self.a_count == 1:
                seps = np.array([self.a_start], dtype=float)
            elif self.a_scale == "log":
                seps = np.geomspace(self.a_start, stop, self.a_count)
            elif self.a_scale == "linear":
                seps = np.linspace(self.a_start, stop, self.a_count)
            else:
                raise ConfigError(f"unknown scale {self.a_scale!r}", field="a_scale")
        else:
            raise ConfigError("no separations given", field="separations")
        if np.any(seps <= 0):
            raise ConfigError("separations must be positive", field="separations")
        return seps

    def validate(self, require_grid=True):
        if self.quantity not in QUANTITY_CHOICES:
            raise ConfigError(f"unknown quantity {self.quantity!r}", field="quantity")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}", field="format")
        if self.temperature < 0:
            raise ConfigError("temperature must be >= 0", field="temperature")
        if self.temperature == 0 and self.quantity not in ("energy-T0", "ratio"):
            raise ConfigError("T = 0 is only allowed with quantity=energy-T0", field="temperature")
        if require_grid or self.separations or self.a_start is not None:
            self.grid()
        return self

    def resolve_atom(self):
        extra = {}
        for name, text in self.custom_atoms.items():
            extra[name] = _parse_atom(text, name)
        if self.atom in extra or "," not in self.atom:
            return builtin_atom(self.atom, extra)
        return _parse_atom(self.atom, "custom")

    def resolve_material(self):
        extra = {}
        if self.materials_db:
            try:
                extra.update(load_materials(self.materials_db))
            except OSError as exc:
                raise DataError(f"cannot read materials database: {exc}") from None
        for name, text in self.custom_materials.items():
            extra[name] = parse_material_spec(text)
        try:
            return builtin_material(self.material, extra)
        except UnknownMaterialError:
            if " " not in self.material.strip():
                raise
        return parse_material_spec(self.material)


def _parse_atom(text, name):
    try:
        alpha, omega = (float(p) for p in text.split(","))
        return AtomModel(alpha, omega, name)
    except (ValueError, DomainError):
        raise ConfigError(f"atom must be '<alpha0>,<omega0>', got {text!r}", field="atom") from None


_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _coerce(key, value, line=None):
    kind = _TYPES[key]
    try:
        if kind is bool:
            return _BOOL[value.strip().lower()]
        if kind is float:
            return float(value)
        if kind is int:
            return int(value)
        if kind is tuple:
            return tuple(float(v) for v in value.replace(";", ",").split(",") if v.strip())
    except (ValueError, KeyError):
        raise ConfigError(f"invalid value {value!r}", line=line, field=key) from None
    return value.strip()


def parse_config_text(text):
    """Parse configuration text into a dict of typed overrides."""
    values = {"custom_atoms": {}, "custom_materials": {}}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", line=lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_") if "." not in key else key
        if key.startswith("atom."):
            values["custom_atoms"][key[5:]] = value
        elif key.startswith("material."):
            values["custom_materials"][key[9:]] = value
        elif key in _TYPES and key not in ("custom_atoms", "custom_materials"):
            values[key] = _coerce(key, value, lineno)
        else:
            raise ConfigError(f"unknown key {key!r}", line=lineno, field=key)
    return values


def load_config(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    return parse_config_text(text)


def build_config(file_values=None, overrides=None):
    """Defaults, then file values, then command-line overrides (``None`` skipped)."""
    cfg = RunConfig()
    for source in (file_values or {}, overrides or {}):
        for key, value in source.items():
            if value is None:
                continue
            if key in ("custom_atoms", "custom_materials"):
                getattr(cfg, key).update(value)
            else:
                setattr(cfg, key, value)
    return cfg
