"""graph6 and edge-list text formats.

graph6 packs the upper adjacency triangle column-wise, x(0,1), x(0,2),
x(1,2), x(0,3), ..., into 6-bit groups emitted as printable bytes
(value + 63), after an order header: one byte n+63 for n <= 62, or
126 followed by three 6-bit bytes for n <= 258047. Round-trips are
bit-exact; padding bits must be zero.

The edge-list format is a plain-text fixture format: an "n m" header line,
then one "u v" line per edge (0-indexed); '#' starts a comment and blank
lines are skipped.
"""

from __future__ import annotations

from typing import Union

from .errors import (
    EdgeListError,
    Graph6Error,
    MalformedHeaderError,
    TrailingGarbageError,
    TruncatedBodyError,
)
from .graph import Graph, from_edge_list

MAX_GRAPH6_ORDER = 258047

# value of a graph6 body byte = bit-reversed low-6-bit chunk of the pair mask
_REV6 = tuple(int(format(i, "06b")[::-1], 2) for i in range(64))


def _pair_bit(i: int, j: int) -> int:
    # bit position of pair (i, j), i < j, in column-wise triangle order
    return j * (j - 1) // 2 + i


def _mask_to_record(n: int, mask: int) -> bytes:
    if n <= 62:
        header = bytes([n + 63])
    elif n <= MAX_GRAPH6_ORDER:
        header = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        raise MalformedHeaderError(f"order {n} exceeds the supported graph6 range")
    npairs = n * (n - 1) // 2
    ngroups = (npairs + 5) // 6
    body = bytes(_REV6[(mask >> (6 * g)) & 63] + 63 for g in range(ngroups))
    return header + body


def _record_to_mask(data: bytes) -> tuple:
    if not data:
        raise MalformedHeaderError("empty record")
    b0 = data[0]
    if b0 == 126:
        if len(data) >= 2 and data[1] == 126:
            raise MalformedHeaderError(
                f"orders above {MAX_GRAPH6_ORDER} are not supported"
            )
        if len(data) < 4:
            raise MalformedHeaderError("truncated long-form order header")
        hi, mid, lo = data[1], data[2], data[3]
        for b in (hi, mid, lo):
            if not 63 <= b <= 126:
                raise MalformedHeaderError(f"invalid header byte {b}")
        n = ((hi - 63) << 12) | ((mid - 63) << 6) | (lo - 63)
        body = data[4:]
    else:
        if not 63 <= b0 <= 125:
            raise MalformedHeaderError(f"invalid header byte {b0}")
        n = b0 - 63
        body = data[1:]
    npairs = n * (n - 1) // 2
    ngroups = (npairs + 5) // 6
    if len(body) < ngroups:
        raise TruncatedBodyError(
            f"order {n} needs {ngroups} body bytes, got {len(body)}"
        )
    if len(body) > ngroups:
        raise TrailingGarbageError(f"{len(body) - ngroups} extra bytes after body")
    mask = 0
    for g, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid body byte {b}")
        mask |= _REV6[b - 63] << (6 * g)
    if mask >> npairs:
        raise TrailingGarbageError("nonzero padding bits in final group")
    return n, mask


def _strip_record(data: Union[bytes, str]) -> bytes:
    if isinstance(data, str):
        data = data.encode("ascii")
    return data.rstrip(b"\r\n")


def emit_graph6(g: Graph) -> bytes:
    """Encode adjacency as one graph6 record (no trailing newline).

    Labels are not serialized.
    """
    mask = 0
    for j, row in enumerate(g.adjacency):
        for i in row:
            if i < j:
                mask |= 1 << _pair_bit(i, j)
    return _mask_to_record(g.n, mask)


def parse_graph6(data: Union[bytes, str]) -> Graph:
    """Decode one graph6 record (a trailing newline is tolerated)."""
    n, mask = _record_to_mask(_strip_record(data))
    rows = [[] for _ in range(n)]
    p = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> p) & 1:
                rows[i].append(j)
                rows[j].append(i)
            p += 1
    # rows come out sorted by construction
    return Graph(n, rows, _validate=False)


def emit_edgelist(g: Graph) -> str:
    """Render the graph in the "n m" + "u v" lines text format."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse the "n m" + "u v" lines text format ('#' comments, blank lines ok)."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise EdgeListError("no header line")
    head = rows[0].split()
    if len(head) != 2:
        raise EdgeListError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError(f"header must be 'n m', got {rows[0]!r}") from None
    if n < 0 or m < 0:
        raise EdgeListError("negative counts in header")
    body = rows[1:]
    if len(body) != m:
        raise EdgeListError(f"expected {m} edge lines, got {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"edge line must be 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListError(f"edge line must be 'u v', got {line!r}") from None
    return from_edge_list(n, edges)
