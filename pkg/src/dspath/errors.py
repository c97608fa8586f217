"""Exception types shared across the package."""


class DspathError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(DspathError):
    """The text of a graph or clique file could not be parsed."""


class InvalidGraphError(DspathError):
    """A structurally invalid graph: nonpositive weight, duplicate terminal,
    cycle in dag mode, or a graph that is not weakly connected."""


class UnsupportedInputError(DspathError):
    """Input outside an algorithm's supported domain (e.g. parallel edges in
    the edge-disjoint product search, or a state space over the size cap)."""


class EnumerationLimitError(DspathError):
    """A brute-force enumeration exceeded its configured count limit."""
