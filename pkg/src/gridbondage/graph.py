"""Immutable simple graphs backed by integer bitsets.

Every vertex carries its open neighbourhood as a Python ``int`` whose bit
``j`` is set when ``j`` is adjacent. Closed neighbourhoods, unions and
popcounts then reduce to single integer operations, which is what the
domination and bondage searches lean on.

Vertex indices are 0-based everywhere inside the package. Grid products of
two paths use the row-major labelling ``(i, j) -> (i - 1) * m + (j - 1)``
with 1-based ``i, j``; :class:`GridSpec` is the only place that conversion
happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

MAX_ORDER = 4096
INF = float("inf")

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised on invalid parameters, vertices or edges."""


class InvalidEdgeError(GraphError):
    pass


class GraphFormatError(GraphError):
    """Malformed graph text; ``lineno`` points at the offending line."""

    def __init__(self, message: str, lineno: Optional[int] = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


def edge(u: int, v: int) -> Edge:
    """Canonical orientation of an undirected edge (smaller endpoint first)."""
    if u == v:
        raise InvalidEdgeError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class GridSpec:
    """A product of two paths, ``kind`` in {strong, direct, cartesian}."""

    kind: str
    n: int
    m: int

    KINDS = ("strong", "direct", "cartesian")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise GraphError(f"unknown product kind {self.kind!r}")
        if self.n < 2 or self.m < 2:
            raise GraphError(f"path orders must be >= 2, got n={self.n}, m={self.m}")

    @property
    def order(self) -> int:
        return self.n * self.m

    def index(self, i: int, j: int) -> int:
        """Flat index of the 1-based grid vertex ``(u_i, v_j)``."""
        if not (1 <= i <= self.n and 1 <= j <= self.m):
            raise GraphError(f"grid vertex ({i},{j}) outside {self.n}x{self.m}")
        return (i - 1) * self.m + (j - 1)

    def coords(self, v: int) -> Tuple[int, int]:
        """1-based ``(i, j)`` of flat vertex ``v``."""
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} outside grid of order {self.order}")
        return v // self.m + 1, v % self.m + 1

    def grid_edge(self, a: Tuple[int, int], b: Tuple[int, int]) -> Edge:
        return edge(self.index(*a), self.index(*b))

    def edge_coords(self, e: Edge) -> list:
        """Edge rendered as ``[[i1, j1], [i2, j2]]``."""
        return [list(self.coords(e[0])), list(self.coords(e[1]))]

    def build(self) -> "Graph":
        ctor = {"strong": strong_product, "direct": direct_product,
                "cartesian": cartesian_product}[self.kind]
        g = ctor(path_graph(self.n), path_graph(self.m))
        return Graph(g.adj, grid=self)


class Graph:
    """Immutable simple undirected graph on vertices ``0..order-1``.

    ``adj[v]`` is the open-neighbourhood bitmask of ``v``. A graph built
    from a :class:`GridSpec` remembers it in ``grid``; graphs derived from
    it (e.g. by edge removal) do not.
    """

    __slots__ = ("_adj", "_closed", "_edges", "grid")

    def __init__(self, adj: Sequence[int], grid: Optional[GridSpec] = None):
        n = len(adj)
        if n < 1:
            raise GraphError("graph must have at least one vertex")
        if n > MAX_ORDER:
            raise GraphError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        adj = tuple(int(a) for a in adj)
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {n})")
            if a >> v & 1:
                raise GraphError(f"vertex {v} is adjacent to itself")
            for w in bits(a):
                if not adj[w] >> v & 1:
                    raise GraphError(f"adjacency not symmetric between {v} and {w}")
        self._adj = adj
        self._closed = tuple(a | (1 << v) for v, a in enumerate(adj))
        self._edges: Optional[Tuple[Edge, ...]] = None
        self.grid = grid

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if order < 1:
            raise GraphError("graph must have at least one vertex")
        adj = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidEdgeError(f"edge ({u},{v}) outside [0, {order})")
            if u == v:
                raise InvalidEdgeError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj)

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def closed(self) -> Tuple[int, ...]:
        return self._closed

    @property
    def full_mask(self) -> int:
        return (1 << len(self._adj)) - 1

    @property
    def neighbors(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(bits(a)) for a in self._adj)

    def neighborhood(self, v: int) -> frozenset:
        self._check_vertex(v)
        return frozenset(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def degrees(self) -> Tuple[int, ...]:
        return tuple(a.bit_count() for a in self._adj)

    def max_degree(self) -> int:
        return max(self.degrees())

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u, a in enumerate(self._adj) for v in bits(a >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def size(self) -> int:
        return len(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise GraphError(f"vertex {v} outside [0, {len(self._adj)})")

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled 0.. in the given order."""
        pos = {v: k for k, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(to_mask(pos[w] for w in bits(self._adj[v]) if w in pos))
        return Graph(adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        tag = f", grid={self.grid.kind}:{self.grid.n}x{self.grid.m}" if self.grid else ""
        return f"Graph(order={self.order}, size={self.size}{tag})"

    def __reduce__(self):
        return (Graph, (self._adj, self.grid))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path order must be >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle order must be >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def _product(g: Graph, h: Graph, same_adj: bool, adj_same: bool, adj_adj: bool) -> Graph:
    """Generic product on ``g.order * h.order`` vertices, row-major.

    The three flags switch on the adjacency clauses (i = k and j ~ l),
    (i ~ k and j = l), (i ~ k and j ~ l).
    """
    n, m = g.order, h.order
    adj = []
    for i in range(n):
        gi = g.adj[i]
        for j in range(m):
            hj = h.adj[j]
            a = 0
            if same_adj:
                a |= hj << (i * m)
            for k in bits(gi):
                if adj_same:
                    a |= 1 << (k * m + j)
                if adj_adj:
                    a |= hj << (k * m)
            adj.append(a)
    return Graph(adj)


def strong_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, True, True, True)


def direct_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, False, False, True)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    return _product(g, h, True, True, False)


def grid_graph(kind: str, n: int, m: int) -> Graph:
    """``P_n`` x ``P_m`` for the given product kind, tagged with its GridSpec."""
    return GridSpec(kind, n, m).build()


def remove_edges(g: Graph, es: Iterable[Tuple[int, int]]) -> Graph:
    """Copy of ``g`` without the edges in ``es``; ``g`` itself is untouched."""
    adj = list(g.adj)
    for u, v in es:
        if not (0 <= u < g.order and 0 <= v < g.order) or u == v or not adj[u] >> v & 1:
            raise InvalidEdgeError(f"({u},{v}) is not an edge of the graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(adj)


def bfs_distances(g: Graph, source: int) -> list:
    """Distances from ``source``; unreachable vertices get ``INF``."""
    g._check_vertex(source)
    dist = [INF] * g.order
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int):
    g._check_vertex(v)
    return bfs_distances(g, u)[v]


def within_two(g: Graph, v: int) -> int:
    """Bitmask of vertices at distance 1 or 2 from ``v``."""
    reach = 0
    for w in bits(g.adj[v]):
        reach |= g.closed[w]
    return reach & ~(1 << v)


def connected_components(g: Graph) -> list:
    """Vertex lists of the components, ordered by smallest member."""
    remaining = g.full_mask
    parts = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        parts.append(list(bits(comp)))
        remaining &= ~comp
    return parts


def component_masks(g: Graph) -> list:
    return [to_mask(c) for c in connected_components(g)]


# Text format: "p edge <order> <size>", then "e <u> <v>" (1-based, u < v),
# comment lines start with "c".

def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.order} {g.size}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    order = None
    declared = 0
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if order is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError("expected 'p edge <order> <edge-count>'", lineno)
            try:
                order, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("non-integer order or edge count", lineno) from None
            if order < 1 or declared < 0:
                raise GraphFormatError("order must be positive", lineno)
        elif parts[0] == "e":
            if order is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex", lineno) from None
            if not (1 <= u <= order and 1 <= v <= order):
                raise GraphFormatError(f"vertex out of range 1..{order}", lineno)
            if u >= v:
                raise GraphFormatError("edge endpoints must satisfy u < v", lineno)
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
            seen.add((u, v))
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if order is None:
        raise GraphFormatError("missing problem line")
    if len(edges) != declared:
        raise GraphFormatError(f"declared {declared} edges, found {len(edges)}")
    return Graph.from_edges(order, edges)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g, comments))
