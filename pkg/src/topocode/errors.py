"""Exception hierarchy shared by all topocode modules."""


class TopocodeError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class DimensionError(TopocodeError, ValueError):
    """Operand lengths or shapes do not agree."""


class ArgumentError(TopocodeError, ValueError):
    """An argument is out of range or otherwise invalid."""


class ConnectivityError(TopocodeError):
    """The embedded graph is not connected."""


class UnsupportedOperationError(TopocodeError):
    """The operation is not defined for this kind of surface."""


class UnsupportedParameterError(TopocodeError):
    """A family constructor could not produce an embedding for these parameters."""


class NoNontrivialCycleError(TopocodeError):
    """Homology is trivial, so there is no nontrivial (co)cycle."""


class NoLogicalQubitsError(TopocodeError):
    """The code encodes k = 0 qubits; its distance is undefined."""


class OracleRefusedError(TopocodeError):
    """A brute-force oracle was asked to run beyond its enumeration budget."""


class ParseError(TopocodeError):
    """Malformed text input. ``line`` is 1-based, or None if not line-specific."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
