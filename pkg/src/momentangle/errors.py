"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class InternalError(ToolkitError):
    """An invariant that should hold by theory failed; indicates a bug."""


class NotAFace(ToolkitError):
    """The given simplex is not a face of the complex."""


class GhostVertex(ToolkitError):
    """The operation requires a complex without ghost vertices."""


class InvalidOrder(ToolkitError):
    """The given facet sequence is not a permutation of the facets."""


class NotAShelling(ToolkitError):
    """The given facet order fails the shelling condition."""


class NotACycle(ToolkitError):
    """The given chain is not a cycle."""


class AmbientMismatch(ToolkitError):
    """Two objects live on different ambient index sets."""


class ModelMismatch(ToolkitError):
    """Classes from different algebra models cannot be combined."""


class Unsupported(ToolkitError):
    """The request exceeds a documented size or feature limit."""


class NotApplicable(ToolkitError):
    """A procedure's hypothesis fails for the given input.

    Carries the degree at which the hypothesis failed and, when available,
    a witness cycle demonstrating the failure.
    """

    def __init__(self, message, degree=None, witness=None):
        super().__init__(message)
        self.degree = degree
        self.witness = witness


class FacetFileError(ToolkitError):
    """Base class for facet-file parse errors; carries a 1-based line number."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MissingHeader(FacetFileError):
    pass


class MalformedLine(FacetFileError):
    pass


class IndexOutOfRange(FacetFileError):
    pass


class NonIncreasingFacet(FacetFileError):
    pass


class DominatedFacet(FacetFileError):
    pass
