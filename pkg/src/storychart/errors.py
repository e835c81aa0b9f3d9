"""Exception and warning types shared across the storychart package.

Two broad families matter to callers: configuration / input problems
(``ConfigError`` and plain I/O errors, CLI exit code 2) and analysis
failures (``AnalysisError`` subclasses, CLI exit code 3).
"""


class StorychartError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(StorychartError):
    """Bad configuration, unusable input file, or missing prerequisite."""


class AnalysisError(StorychartError):
    """An analysis stage cannot produce a result from the given data."""


# corpus
class InvalidEncoding(ConfigError):
    """Input is not valid UTF-8 or contains disallowed control characters."""


class EmptyDocument(AnalysisError):
    """The text produced no tokens."""


class SegmentCountTooLarge(AnalysisError):
    """More segments requested than there are tokens."""


# entities
class SchemaError(ConfigError):
    """A mention-import or alias file does not match its schema."""


class SpanMismatch(ConfigError):
    """An imported mention's surface does not equal the text at its span."""


class OutOfBounds(ConfigError):
    """An imported mention's span falls outside the document text."""


class ConflictingAlias(ConfigError):
    """The same alias is mapped to two different canonical names."""


class EmptySelection(AnalysisError):
    """No entity survived the selection thresholds."""


# graph
class EmptyGraph(AnalysisError):
    """The operation needs at least one edge."""


# factors
class TooFewEntities(AnalysisError):
    """A feature matrix needs at least two observation rows."""


class AllColumnsDegenerate(AnalysisError):
    """Every feature column has zero variance."""


class ConvergenceFailure(AnalysisError):
    """The eigensolver did not converge within its sweep budget."""


# export
class DegenerateSeries(AnalysisError):
    """A trend chart needs at least two segments."""


class EmptyTable(AnalysisError):
    """A word cloud needs at least one term."""


class UnknownTermWarning(UserWarning):
    """A requested trend term never occurs in the document."""


class DroppedColumnWarning(UserWarning):
    """A zero-variance column was dropped during standardization."""
