"""Shared exception types."""


class ResourceGuardError(RuntimeError):
    """A computation exceeds one of the hard-coded size guards."""


class ConfigError(ValueError):
    """A run configuration is malformed; the message names the bad field."""
