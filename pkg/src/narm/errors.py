"""Exception types raised by the mining engine."""


class NarmError(Exception):
    """Base class for all engine errors."""


class FormatError(NarmError):
    """Malformed input file (ragged rows, blank cells, bad schema)."""


class DimensionError(NarmError, ValueError):
    """A vector has the wrong length for the operation."""


class ConfigError(NarmError, ValueError):
    """Invalid configuration value."""


class EvaluationError(NarmError):
    """The objective callback returned a non-finite value."""
