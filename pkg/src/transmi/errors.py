"""Exception hierarchy shared by all transmi modules."""


class TransmiError(Exception):
    """Base class. ``category`` is a short machine-readable tag used by the CLI."""

    category = "error"


class FormatError(TransmiError):
    category = "format"


class DuplicateSurfaceError(TransmiError):
    category = "duplicate-surface"

    def __init__(self, surface: str, message: str | None = None):
        self.surface = surface
        super().__init__(message or f"duplicate surface {surface!r}")


class RuleError(TransmiError):
    category = "rules"


class DuplicateRuleError(RuleError):
    category = "duplicate-rule"


class EmbeddingFormatError(TransmiError):
    category = "embeddings"


class DimensionMismatchError(TransmiError):
    category = "dimension-mismatch"


class RowCountMismatchError(TransmiError):
    category = "row-count-mismatch"


class ProvenanceError(TransmiError):
    category = "provenance"
