"""Immutable simple graphs on dense 0-based vertices, with bitset adjacency rows.

Every graph in this package is an instance of :class:`Graph`.  Adjacency is
stored as one Python int per vertex, used as a bitset: bit ``y`` of
``g.rows[x]`` is set iff ``x ~ y``.  Row AND + popcount is the workhorse for
all common-neighbour counting, so the representation is chosen for that.

Vertex sets (cocliques, partition classes, induced-subgraph selectors) are
plain int bitsets as well; see :func:`bits`, :func:`mask_of`,
:func:`set_of`.

All generators document a deterministic vertex numbering so results are
reproducible across runs:

* ``triangular(m)``: vertices are the 2-subsets of {0..m-1} in
  lexicographic order.
* ``grid(a, b)``: vertex (i, j) has index i*b + j (row-major).
* ``petersen()``: Kneser numbering, i.e. triangular(5) complemented.
* ``composition(g1, g2)``: vertex (x1, x2) has index x1*order(g2) + x2.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import Graph6Error

# A VertexSet is an int bitset over the vertices of a host graph.
VertexSet = int


def bits(mask: int) -> Iterator[int]:
    """Iterate over the set bit positions of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: VertexSet) -> list[int]:
    """Sorted list of the vertices in a bitset."""
    return list(bits(mask))


class Graph:
    """Immutable simple graph.

    Equality and hashing compare order and adjacency only; the optional
    ``label`` is a display tag and never affects semantics.
    """

    __slots__ = ("order", "rows", "label")

    def __init__(self, order: int, rows: Iterable[int], label: str | None = None):
        rows = tuple(rows)
        if order < 1:
            raise ValueError(f"graph order must be >= 1, got {order}")
        if len(rows) != order:
            raise ValueError(f"expected {order} adjacency rows, got {len(rows)}")
        full = (1 << order) - 1
        for x, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {x} has bits outside 0..{order - 1}")
            if row >> x & 1:
                raise ValueError(f"loop at vertex {x}")
        for x, row in enumerate(rows):
            for y in bits(row):
                if not rows[y] >> x & 1:
                    raise ValueError(f"adjacency not symmetric at pair ({x}, {y})")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        # immutability blocks pickle's setattr path; rebuild through init
        return (Graph, (self.order, self.rows, self.label))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self):
        return hash((self.order, self.rows))

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"<Graph{tag} order={self.order} edges={self.num_edges()}>"

    # -- basic queries -------------------------------------------------

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def degree(self, x: int) -> int:
        return self.rows[x].bit_count()

    def neighbors(self, x: int) -> Iterator[int]:
        return bits(self.rows[x])

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for x, row in enumerate(self.rows):
            for y in bits(row >> (x + 1) << (x + 1)):
                yield (x, y)

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        degs = self.degrees()
        k = degs[0]
        return k if all(d == k for d in degs) else None

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        full = (1 << self.order) - 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == full

    def common_neighbors(self, x: int, y: int) -> int:
        return (self.rows[x] & self.rows[y]).bit_count()

    def with_label(self, label: str | None) -> "Graph":
        return Graph(self.order, self.rows, label)


def from_edges(order: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
    rows = [0] * order
    for x, y in edges:
        if x == y:
            raise ValueError(f"loop at vertex {x}")
        if not (0 <= x < order and 0 <= y < order):
            raise ValueError(f"edge ({x}, {y}) out of range for order {order}")
        rows[x] |= 1 << y
        rows[y] |= 1 << x
    return Graph(order, rows, label)


def adjacency_matrix(g: Graph) -> list[list[int]]:
    """Dense 0/1 adjacency matrix as nested lists of Python ints."""
    return [[g.rows[x] >> y & 1 for y in range(g.order)] for x in range(g.order)]


# -- generators --------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)], f"K{n}")


def edgeless(n: int) -> Graph:
    if n < 1:
        raise ValueError("edgeless(n) needs n >= 1")
    return Graph(n, [0] * n, f"empty{n}")


def complement_of(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    rows = [full ^ row ^ (1 << v) for v, row in enumerate(g.rows)]
    return Graph(g.order, rows, None)


def triangular(m: int) -> Graph:
    """Triangular graph T(m): 2-subsets of {0..m-1}, adjacent iff they meet.

    Vertices are numbered by lexicographic order of the pairs.
    """
    if m < 3:
        raise ValueError("triangular(m) needs m >= 3")
    pairs = list(combinations(range(m), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    rows = [0] * len(pairs)
    for p, i in idx.items():
        for q, j in idx.items():
            if p != q and (p[0] in q or p[1] in q):
                rows[i] |= 1 << j
    return Graph(len(pairs), rows, f"T({m})")


def petersen() -> Graph:
    """Petersen graph: 2-subsets of {0..4}, adjacent iff disjoint."""
    return complement_of(triangular(5)).with_label("Petersen")


def grid(a: int, b: int) -> Graph:
    """Rook's graph on an a x b board; (i, j) is vertex i*b + j."""
    if a < 1 or b < 1:
        raise ValueError("grid(a, b) needs a, b >= 1")
    rows = [0] * (a * b)
    for i in range(a):
        for j in range(b):
            v = i * b + j
            for jj in range(b):
                if jj != j:
                    rows[v] |= 1 << (i * b + jj)
            for ii in range(a):
                if ii != i:
                    rows[v] |= 1 << (ii * b + j)
    return Graph(a * b, rows, f"grid({a},{b})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


_NAMED = {
    "petersen": (petersen, 0),
    "triangular": (triangular, 1),
    "grid": (grid, 2),
    "complete": (complete, 1),
    "edgeless": (edgeless, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
}


def named(name: str, *args) -> Graph:
    """Build a generator graph by name.

    Known names: petersen, triangular(m), grid(a,b), complete(n),
    edgeless(n), cycle(n), path(n), complement-of(G).
    """
    if name == "complement-of":
        if len(args) != 1 or not isinstance(args[0], Graph):
            raise ValueError("complement-of takes a single Graph argument")
        return complement_of(args[0])
    try:
        fn, arity = _NAMED[name]
    except KeyError:
        raise ValueError(f"unknown graph name {name!r}") from None
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} size argument(s), got {len(args)}")
    return fn(*args)


# -- operations --------------------------------------------------------


def composition(g1: Graph, g2: Graph) -> Graph:
    """Composition (lexicographic product) g1[g2].

    (x1, x2) ~ (y1, y2) iff x1 ~ y1 in g1, or x1 = y1 and x2 ~ y2 in g2.
    Vertex (x1, x2) gets index x1*order(g2) + x2.
    """
    n1, n2 = g1.order, g2.order
    block_full = (1 << n2) - 1
    rows = []
    for x1 in range(n1):
        outer = 0
        for y1 in bits(g1.rows[x1]):
            outer |= block_full << (y1 * n2)
        for x2 in range(n2):
            rows.append(outer | (g2.rows[x2] << (x1 * n2)))
    return Graph(n1 * n2, rows)


def induced_subgraph(g: Graph, keep: VertexSet) -> Graph:
    """Subgraph induced on the vertices of ``keep``.

    Vertices are renumbered by ascending original index.
    """
    if keep == 0:
        raise ValueError("induced_subgraph: empty vertex set")
    if keep & ~((1 << g.order) - 1):
        raise ValueError("induced_subgraph: vertex set exceeds graph order")
    old = set_of(keep)
    rows = []
    for x in old:
        masked = g.rows[x] & keep
        row = 0
        for new_y, y in enumerate(old):
            row |= (masked >> y & 1) << new_y
        rows.append(row)
    return Graph(len(old), rows)


# -- graph6 ------------------------------------------------------------
#
# Bit-exact implementation of the published graph6 byte format: the
# vertex count N(n), then the upper triangle of the adjacency matrix in
# column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed into 6-bit
# groups (first bit is the high bit), each group offset by 63.

_G6_MAX = 68719476735  # 2^36 - 1


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes([(n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= _G6_MAX:
        return b"~~" + bytes([(n >> sh & 63) + 63 for sh in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode order {n}")


def encode_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_order(g.order))
    acc = 0
    nbits = 0
    for j in range(1, g.order):
        col = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (order, bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 input", 0)
    b0 = data[0]
    if b0 != 126:
        if not 63 <= b0 <= 125:
            raise Graph6Error(f"invalid graph6 byte {b0:#x}", 0)
        return b0 - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte order field", len(data))
        n = 0
        for off in range(2, 8):
            if not 63 <= data[off] <= 126:
                raise Graph6Error(f"invalid graph6 byte {data[off]:#x}", off)
            n = n << 6 | (data[off] - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte order field", len(data))
    n = 0
    for off in range(1, 4):
        if not 63 <= data[off] <= 126:
            raise Graph6Error(f"invalid graph6 byte {data[off]:#x}", off)
        n = n << 6 | (data[off] - 63)
    return n, 4


def decode_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 line (without trailing newline)."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="surrogateescape")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    n, pos = _decode_order(data)
    if n == 0:
        raise Graph6Error("order-0 graph6 input not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(
            f"truncated adjacency data: need {nbytes} bytes, have {len(data) - pos}",
            len(data),
        )
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after adjacency data", pos + nbytes)
    rows = [0] * n
    bit = 0
    i, j = 0, 1  # column-order upper triangle position
    for off in range(pos, pos + nbytes):
        byte = data[off]
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid graph6 byte {byte:#x}", off)
        group = byte - 63
        for sh in (5, 4, 3, 2, 1, 0):
            if bit >= nbits:
                if group >> sh & 1:
                    raise Graph6Error("nonzero padding bits", off)
                continue
            if group >> sh & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows)
