"""Exception types shared across the toolkit."""


class LexkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidWord(LexkitError):
    """A raw string cannot be normalized into a valid word."""


class InvalidPattern(LexkitError):
    """A wildcard pattern is malformed (e.g. interior or bare star)."""


class ParseError(LexkitError):
    """A resource file failed to parse.

    Carries the path and 1-based line number when known.
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
        super().__init__(prefix + message)


class NoData(LexkitError):
    """An operation received no usable input data."""


class LanguageUnavailable(LexkitError):
    """The requested language has no label map in the graph."""


class DegenerateVector(LexkitError):
    """A cosine was requested against a zero vector."""


class NotExpandable(LexkitError):
    """No seed word could be mapped onto the expansion resource."""


class InfeasibleSample(LexkitError):
    """A random sample larger than the available universe was requested."""


class UndefinedKappa(LexkitError):
    """Chance agreement is 1, so Cohen's kappa is undefined."""


class UndefinedCorrelation(LexkitError):
    """At least one score series is constant, so Pearson r is undefined."""


class EmptyDocument(LexkitError):
    """A document with zero tokens cannot be scored."""


class IncompleteAnnotations(LexkitError):
    """A word has fewer than two rater labels, so acceptance is undefined."""
