"""Exception types shared across the package."""


class ConfigError(ValueError):
    """A parameter or configuration violates a documented precondition."""


class NumericalError(RuntimeError):
    """A computation produced results outside its accuracy contract."""
