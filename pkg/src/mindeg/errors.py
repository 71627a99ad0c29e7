"""Exception types shared across the package."""


class MinDegError(Exception):
    """Base class for every error raised by this package."""


class InputError(MinDegError, ValueError):
    """Caller-supplied data is invalid (vertex out of range, not a permutation, ...)."""


class ConfigError(MinDegError, ValueError):
    """Invalid or inconsistent configuration."""


class StateError(MinDegError, RuntimeError):
    """Operation invoked on an object in the wrong state."""


class ParseError(MinDegError, ValueError):
    """A file could not be parsed.

    Carries the offending path and 1-based line number when known, and
    prefixes them to the message so CLI diagnostics point at the input.
    """

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        elif line is not None:
            prefix = f"line {line}: "
        super().__init__(prefix + message)
