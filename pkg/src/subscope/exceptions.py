"""Exception hierarchy shared by every subscope module.

Container errors carry enough position information (section, row, column,
byte offset) to locate the offending bytes in a file without a hex editor.
"""


class SubscopeError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------------------
# container / interchange
# ---------------------------------------------------------------------------

class ContainerError(SubscopeError, ValueError):
    """A container file is malformed or violates a data invariant."""


class BadMagic(ContainerError):
    """File does not start with the expected magic bytes."""


class VersionMismatch(ContainerError):
    """Container version is not supported by this reader."""


class ShapeMismatch(ContainerError):
    """Declared shape disagrees with the payload, or sections are inconsistent."""


class NonFiniteValue(ContainerError):
    """A matrix entry is NaN or infinite."""

    def __init__(self, section: str, row: int, col: int):
        self.section = section
        self.row = row
        self.col = col
        super().__init__(f"non-finite value in section {section!r} at row={row}, col={col}")


class InvalidMetadata(ContainerError):
    """A per-sample annotation is out of range (labels, split codes)."""


class IoFailure(SubscopeError, OSError):
    """Underlying filesystem operation failed."""


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------

class DegenerateSupervision(SubscopeError, ValueError):
    """Deflated cross-covariance vanished before the requested components."""


class RankDeficient(SubscopeError, ValueError):
    """Input matrix has too little rank, or the dominant direction did not converge."""


class InconsistentEpochCount(SubscopeError, ValueError):
    """Per-sample training-dynamics records do not all cover the same epochs."""


# ---------------------------------------------------------------------------
# assignment / evaluation
# ---------------------------------------------------------------------------

class DimensionMismatch(SubscopeError, ValueError):
    """Embedding dimensionality disagrees with the fitted basis."""


class MissingCorrectness(SubscopeError, ValueError):
    """A sample lacks the classifier-correctness flag required for bias identification."""


class LengthMismatch(SubscopeError, ValueError):
    """Two vector collections that must pair up have different lengths."""


class ZeroVector(SubscopeError, ValueError):
    """A vector that must be normalizable has (numerically) zero norm."""


class IndexOutOfRange(SubscopeError, ValueError):
    """A subgroup index lies outside the valid range."""


# ---------------------------------------------------------------------------
# retrieval
# ---------------------------------------------------------------------------

class NoCaptions(SubscopeError, ValueError):
    """Retrieval corpus has no caption section."""


# ---------------------------------------------------------------------------
# mitigation
# ---------------------------------------------------------------------------

class EmptyPool(SubscopeError, ValueError):
    """Data-centric filtering was asked to rank an empty candidate pool."""


class InvalidSoftLabel(SubscopeError, ValueError):
    """A soft subgroup label is not a valid point on the probability simplex."""


# ---------------------------------------------------------------------------
# synthesis
# ---------------------------------------------------------------------------

class InvalidSpec(SubscopeError, ValueError):
    """Synthetic dataset specification violates its constraints."""
