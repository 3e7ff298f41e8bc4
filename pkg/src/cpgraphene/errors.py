"""Exception hierarchy shared by all modules."""


class CPError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CPError, ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class UnknownAtomError(CPError, KeyError):
    def __init__(self, name, available):
        self.name = name
        self.available = tuple(available)
        super().__init__(f"unknown atom {name!r}; available: {', '.join(self.available)}")

    def __str__(self):
        return self.args[0]


class UnknownMaterialError(CPError, KeyError):
    def __init__(self, name, available):
        self.name = name
        self.available = tuple(available)
        super().__init__(f"unknown material {name!r}; available: {', '.join(self.available)}")

    def __str__(self):
        return self.args[0]


class DataError(CPError):
    """Malformed or inconsistent tabulated input data."""


class ConfigError(CPError):
    """Malformed run configuration (carries the offending line or field)."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class QuadratureError(CPError):
    """Adaptive quadrature stopped before reaching the requested tolerance.

    The best available estimate and its error bound are kept on the
    exception so callers can decide whether the result is still usable.
    """

    def __init__(self, message, estimate, error):
        self.estimate = estimate
        self.error = error
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")


class ConvergenceError(CPError):
    """The Matsubara series did not converge within the term budget."""

    def __init__(self, message, estimate=None, terms=None):
        self.estimate = estimate
        self.terms = terms
        super().__init__(message)
