"""Exception hierarchy.

Every domain error carries a short ``code`` (the class name) so the CLI can
print ``ERROR <code>: <detail>`` without a lookup table.
"""


class ColorpolyError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class GraphError(ColorpolyError):
    pass


class MalformedLine(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class NotRegular(GraphError):
    pass


class NotProperlyColored(GraphError):
    pass


class NotConnected(GraphError):
    pass


class TooManyColors(GraphError):
    pass


class Infeasible(GraphError):
    """The graph has no proper edge coloring with as many colors as its degree."""


class ScaleExceeded(ColorpolyError):
    pass


class MalformedPolytope(ColorpolyError):
    pass


class NotAPolytope(ColorpolyError):
    pass


class NotInvolution(ColorpolyError):
    pass


class DoesNotGenerate(ColorpolyError):
    pass


class HypothesisViolated(ColorpolyError):
    pass


class NotRankThree(ColorpolyError):
    pass


class MapConditionFailed(ColorpolyError):
    pass


class QuotientConflict(ColorpolyError):
    """Inherited edge colors on a coset quotient are not well defined."""
