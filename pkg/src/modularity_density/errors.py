"""Exception types shared across the package."""


class ModularityDensityError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ModularityDensityError, ValueError):
    """Malformed or inconsistent input (files, graphs, partitions, parameters)."""


class RefusalError(ModularityDensityError):
    """A computation was refused because it would be too large."""
