"""Exception types raised by the crowncover library."""


class CrownCoverError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEdge(CrownCoverError):
    """Edge is a self-loop or has an endpoint outside the vertex range."""


class InvalidWeight(CrownCoverError):
    """Vertex weight is missing, non-integer, or not positive."""


class InvalidSet(CrownCoverError):
    """Vertex set refers to vertices outside the graph it certifies."""


class InvalidShape(CrownCoverError):
    """Geometric shape is degenerate or inconsistent with its shape set."""


class InvalidParameter(CrownCoverError):
    """Parameter outside its documented range (eps, generator knobs, ...)."""


class InvalidSwapSize(CrownCoverError):
    """Local search swap size is smaller than 1."""


class TooLarge(CrownCoverError):
    """Instance exceeds the configured cap for exact (brute-force) solving."""


class InconsistentCut(CrownCoverError):
    """Residual cut crosses an infinite-capacity arc; signals a flow bug."""


class CrownViolation(CrownCoverError):
    """Zero-valued vertices touch the kernel; the LP solution was not optimal."""


class NotACover(CrownCoverError):
    """Claimed vertex cover leaves at least one edge uncovered."""


class ParseError(CrownCoverError):
    """Malformed instance or result file; message carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MissingHeader(ParseError):
    """No `p ...` header line before the first data line."""


class DuplicateVertexLine(ParseError):
    """The same vertex id appears on more than one `v` line."""


class EdgeCountMismatch(ParseError):
    """Number of `e` lines disagrees with the header's edge count."""
