"""Exception types shared across the package."""


class QgenError(Exception):
    """Base class for all package-specific errors."""


class WordParseError(QgenError, ValueError):
    """A word string contains a character outside the alphabet."""

    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"invalid character {char!r} at position {position}")


class CapExceeded(QgenError):
    """A word is longer than the configured length cap."""


class MemoryGuardExceeded(QgenError):
    """A construction would store more entries than the configured bound."""


class AmbientMismatch(QgenError, ValueError):
    """Operands live on different words or different dimensions."""


class DiagramStructureError(QgenError, ValueError):
    """A diagram does not have the block structure an operation requires."""
