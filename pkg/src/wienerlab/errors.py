"""Exception types raised by wienerlab operations."""


class WienerLabError(Exception):
    """Base class for all wienerlab errors."""


class OutOfRangeError(WienerLabError, IndexError):
    """A vertex index is not in [0, n)."""


class SelfLoopError(WienerLabError, ValueError):
    """An edge (v, v) was supplied; simple graphs have no loops."""


class DuplicateEdgeError(WienerLabError, ValueError):
    """The same undirected edge was supplied twice."""


class DisconnectedGraphError(WienerLabError, ValueError):
    """The operation requires a connected graph."""


class DisconnectedAfterRemovalError(WienerLabError, ValueError):
    """Removing the vertex disconnects the graph, so the quantity is undefined."""


class InvalidVertexTripleError(WienerLabError, ValueError):
    """delta_pair needs three distinct vertices u, w != v with u != w."""


class Graph6Error(WienerLabError, ValueError):
    """A graph6 record could not be decoded."""


class MalformedHeaderError(Graph6Error):
    """The graph6 order header is missing, out of range, or unsupported."""


class TruncatedBodyError(Graph6Error):
    """The graph6 body has fewer bytes than the order requires."""


class TrailingGarbageError(Graph6Error):
    """Extra bytes or nonzero padding bits follow the graph6 body."""


class EdgeListError(WienerLabError, ValueError):
    """An edge-list document is malformed."""


class MalformedRecordError(WienerLabError, ValueError):
    """A record in a graph stream could not be parsed.

    Carries the 1-based record number so stream consumers can point at the
    offending line.
    """

    def __init__(self, record_no: int, reason: str):
        super().__init__(f"record {record_no}: {reason}")
        self.record_no = record_no
        self.reason = reason


class InvalidParamsError(WienerLabError, ValueError):
    """Construction parameters violate a stated hypothesis."""


class InfeasibleError(InvalidParamsError):
    """No tail satisfies the transmission equation for these parameters."""


class TooSmallError(InvalidParamsError):
    """The requested standard graph needs more vertices."""


class OrderTooLargeError(WienerLabError, ValueError):
    """The requested order exceeds the exhaustive-enumeration cap."""
