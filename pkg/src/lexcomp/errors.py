"""Exception types shared across the package."""


class LexcompError(Exception):
    """Base class for all lexcomp-specific errors."""


class EmptyDocument(LexcompError):
    """Ingestion produced no token containing a letter."""


class ParseError(LexcompError):
    """Malformed input line; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class InvalidCounts(LexcompError):
    """Arguments violate a formula's preconditions."""


class AllFiltered(LexcompError):
    """Outlier filtering removed every value in the sample."""


class DegenerateSample(LexcompError):
    """A sample has no rank variance (all values equal)."""


class EmptyIndex(LexcompError):
    """No content word was found while building the index."""


class InvariantViolation(LexcompError):
    """A record contradicts the index invariants (e.g. n > m)."""


class UnknownWord(LexcompError):
    """The requested word is not in the embedding vocabulary."""


class DimensionMismatch(LexcompError):
    """A vector line does not match the declared dimension."""


class EmptySuggestions(LexcompError):
    """No substitution candidate survived filtering."""
