"""Exception types shared across the package.

Every error raised by library code derives from ForestBuilderError so that
callers (in particular the command line front end) can distinguish domain
failures from programming mistakes.
"""


class ForestBuilderError(Exception):
    """Base class for all package-specific errors."""


# --- graph construction and parsing ---


class VertexOutOfRange(ForestBuilderError):
    """An edge endpoint is not in 0..n-1."""


class SelfLoop(ForestBuilderError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(ForestBuilderError):
    """The same unordered pair appears twice in an edge list."""


class MalformedGraph6(ForestBuilderError):
    """Input is not a valid short-form graph6 string."""


class MalformedEdgeList(ForestBuilderError):
    """Edge-list text does not follow the "n m" header plus "u v" lines layout."""


class UnsupportedSize(ForestBuilderError):
    """graph6 input or output outside the supported 0..62 vertex range."""


# --- generators ---


class InfeasibleSpec(ForestBuilderError):
    """Requested family parameters admit no graph (e.g. odd d*n for d-regular)."""


class GenerationTimeout(ForestBuilderError):
    """A rejection-sampling generator exceeded its retry budget."""


# --- size and resource caps ---


class SizeCapExceeded(ForestBuilderError):
    """Input is larger than the documented cap for this operation."""


class TooManyEdges(ForestBuilderError):
    """Brute-force enumeration requested beyond its edge-count cap."""


class MemoryBudgetExceeded(ForestBuilderError):
    """A memo table grew past its configured entry budget."""


# --- process and analysis inputs ---


class EmptyGraph(ForestBuilderError):
    """Operation needs at least one edge."""


class DisconnectedInput(ForestBuilderError):
    """Operation is only defined for connected graphs."""


class InvalidOrdering(ForestBuilderError):
    """An edge ordering is not a permutation of 0..m-1."""


class InvalidSize(ForestBuilderError):
    """A closed-form family parameter is outside its domain."""


class ParameterOutOfRange(ForestBuilderError):
    """A numeric argument violates a documented precondition."""


class InvalidParameter(ForestBuilderError):
    """A numeric argument is outside the region where a formula converges."""
