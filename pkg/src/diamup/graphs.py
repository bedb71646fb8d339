"""Immutable simple-graph core.

Vertices are integers ``0..n-1``; edges are unordered pairs stored
canonically with the smaller endpoint first and the edge set sorted
lexicographically, so that every derived object (deletion sets, witnesses,
reports) is deterministic and comparable bit-for-bit.

Distances are hop counts.  Anything unreachable is reported as ``math.inf``
(the module constant ``INF``), never as a large integer.
"""

from __future__ import annotations

import math

INF = math.inf

Edge = "tuple[int, int]"

# Effect of deleting a single edge from a diameter-two graph, keyed by the
# cycle weight of that edge (see classify_deletion).
DIAM_2_OR_3 = "diam_2_or_3"
DIAM_3 = "diam_3"
DIAM_GE_4 = "diam_ge_4"
DISCONNECTS = "disconnects"


class GraphFormatError(ValueError):
    """Raised when an edge-list text cannot be parsed."""


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """The pair (min, max); rejects self-loops."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def canonical_edges(edges) -> tuple[tuple[int, int], ...]:
    """Deduplicated edges in canonical order (min endpoint first, sorted)."""
    return tuple(sorted({canonical_edge(u, v) for u, v in edges}))


class Graph:
    """Simple undirected graph; treat instances as immutable.

    ``adjacency`` holds per-vertex sorted neighbor tuples, ``adj_bits`` the
    same neighborhoods as integer bitmasks (used by the BFS primitives).
    """

    __slots__ = ("n", "edges", "adjacency", "adj_bits", "_edge_set")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        pairs = [canonical_edge(u, v) for u, v in edges]
        for u, v in pairs:
            if u < 0 or v >= n:
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if len(set(pairs)) != len(pairs):
            raise ValueError("parallel edge in input")
        self.n = n
        self.edges = tuple(sorted(pairs))
        self._edge_set = frozenset(self.edges)
        nbrs = [[] for _ in range(n)]
        bits = [0] * n
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.adjacency = tuple(tuple(sorted(a)) for a in nbrs)
        self.adj_bits = tuple(bits)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and canonical_edge(u, v) in self._edge_set

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


# ---------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------

def _check_vertex(g: Graph, v: int, name: str = "vertex") -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"{name} {v} out of range for n={g.n}")


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from ``source`` to every vertex (INF if unreachable)."""
    _check_vertex(g, source, "source")
    dist = [INF] * g.n
    dist[source] = 0
    adj = g.adj_bits
    seen = 1 << source
    frontier = seen
    level = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        level += 1
        f = nxt
        while f:
            low = f & -f
            dist[low.bit_length() - 1] = level
            f ^= low
        seen |= nxt
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int):
    """Hop distance between two vertices (INF if disconnected)."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    return _bfs_target(g.adj_bits, u, v)


def _bfs_target(adj, source: int, target: int):
    # BFS that stops as soon as `target` is reached.
    tbit = 1 << target
    seen = 1 << source
    frontier = seen
    level = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        level += 1
        if nxt & tbit:
            return level
        seen |= nxt
        frontier = nxt
    return INF


def _eccentricity(adj, full: int, source: int):
    seen = 1 << source
    frontier = seen
    ecc = 0
    while seen != full:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            return INF
        seen |= nxt
        frontier = nxt
        ecc += 1
    return ecc


def distance_table(g: Graph) -> list:
    """All-pairs hop distances as an n x n nested list (one BFS per row)."""
    return [bfs_distances(g, v) for v in range(g.n)]


def diameter(g: Graph):
    """Largest pairwise distance; INF iff the graph is disconnected."""
    if g.n == 1:
        return 0
    full = (1 << g.n) - 1
    best = 0
    for v in range(g.n):
        ecc = _eccentricity(g.adj_bits, full, v)
        if ecc == INF:
            return INF
        if ecc > best:
            best = ecc
    return best


def diametral_pair(g: Graph):
    """Lexicographically smallest vertex pair realizing the diameter.

    Returns None for a single-vertex graph.  On a disconnected graph the
    pair is the smallest unreachable pair (its distance is INF).
    """
    if g.n == 1:
        return None
    d = diameter(g)
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(g.n):
            if v != u and dist[v] == d:
                return (u, v)
    raise AssertionError("unreachable: some pair must realize the diameter")


def components(g: Graph) -> list:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    remaining = (1 << g.n) - 1
    adj = g.adj_bits
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        verts = []
        f = seen
        while f:
            low = f & -f
            verts.append(low.bit_length() - 1)
            f ^= low
        out.append(verts)
        remaining &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    return _eccentricity(g.adj_bits, (1 << g.n) - 1, 0) != INF


# ---------------------------------------------------------------------------
# Cycle weights
# ---------------------------------------------------------------------------

def _distance_skipping_edge(g: Graph, u: int, v: int):
    # Shortest u,v-path length ignoring the edge uv itself.
    adj = list(g.adj_bits)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return _bfs_target(adj, u, v)


def cycle_weights(g: Graph) -> dict:
    """Length of the shortest cycle through each edge (INF for cut-edges).

    For an edge uv this is one plus the shortest u,v-path length in the
    graph with uv removed, so the value is always at least 3.
    """
    return {
        (u, v): 1 + _distance_skipping_edge(g, u, v) for u, v in g.edges
    }


def girth(g: Graph):
    """Length of the shortest cycle; INF for forests."""
    if not g.edges:
        return INF
    return min(1 + _distance_skipping_edge(g, u, v) for u, v in g.edges)


def classify_deletion(g: Graph, e) -> str:
    """Predict the effect of deleting one edge from a graph of diameter <= 2.

    The deleted graph has diameter in {2,3} / exactly 3 / at least 4 /
    infinity according to the edge's cycle weight 3 / 4 / 5 / infinity; no
    other cycle weights occur at diameter two, and complete graphs only
    show weights 3 (n >= 3) or infinity (a single edge).
    """
    e = canonical_edge(*e)
    if e not in g._edge_set:
        raise ValueError(f"{e} is not an edge of the graph")
    if diameter(g) > 2:
        raise ValueError("classify_deletion requires diameter at most two")
    w = 1 + _distance_skipping_edge(g, *e)
    if w == 3:
        return DIAM_2_OR_3
    if w == 4:
        return DIAM_3
    if w == 5:
        return DIAM_GE_4
    if w == INF:
        return DISCONNECTS
    raise AssertionError(f"cycle weight {w} impossible at diameter two")


# ---------------------------------------------------------------------------
# Edge deletion / paths / spanning trees
# ---------------------------------------------------------------------------

def delete_edges(g: Graph, f) -> Graph:
    """The graph with the edges of ``f`` removed (same vertex set)."""
    removed = canonical_edges(f)
    for e in removed:
        if e not in g._edge_set:
            raise ValueError(f"{e} is not an edge of the graph")
    drop = set(removed)
    return Graph(g.n, [e for e in g.edges if e not in drop])


def find_path_of_length_at_least(g: Graph, d: int):
    """A simple path with at least ``d`` edges, or None if none exists.

    Exhaustive depth-bounded DFS from every start vertex with backtracking,
    so there are no false negatives.  Returns the first path found in
    canonical order (start vertices and neighbors ascending), truncated to
    exactly d edges.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if d + 1 > g.n:
        return None
    adjacency = g.adjacency
    path = []

    def extend(u: int, onpath: int, depth: int) -> bool:
        if depth == d:
            return True
        for w in adjacency[u]:
            bit = 1 << w
            if not onpath & bit:
                path.append(w)
                if extend(w, onpath | bit, depth + 1):
                    return True
                path.pop()
        return False

    for start in range(g.n):
        path[:] = [start]
        if extend(start, 1 << start, 0):
            return list(path)
    return None


def spanning_tree_from_path(g: Graph, path) -> Graph:
    """Depth-first spanning tree that walks ``path`` first.

    The tree contains ``path`` as a root-to-descendant branch, so its
    diameter is at least the length of the path.  Raises on disconnected
    input or when ``path`` is not a path of the graph.
    """
    if not path:
        raise ValueError("path must contain at least one vertex")
    if len(set(path)) != len(path):
        raise ValueError("path repeats a vertex")
    for v in path:
        _check_vertex(g, v, "path vertex")
    tree = []
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"({a},{b}) is not an edge of the graph")
        tree.append(canonical_edge(a, b))
    if not is_connected(g):
        raise ValueError("spanning tree requires a connected graph")
    visited = set(path)
    stack = [(v, iter(g.adjacency[v])) for v in path]
    while stack:
        u, neighbors = stack[-1]
        for w in neighbors:
            if w not in visited:
                visited.add(w)
                tree.append(canonical_edge(u, w))
                stack.append((w, iter(g.adjacency[w])))
                break
        else:
            stack.pop()
    return Graph(g.n, tree)


# ---------------------------------------------------------------------------
# Text edge-list format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the text format: header ``n m`` then m lines ``u v``.

    Lines starting with '#' and blank lines are ignored.  Duplicate edges,
    self-loops, bad counts, and out-of-range endpoints are format errors.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        rows.append((lineno, s))
    if not rows:
        raise GraphFormatError("no content: expected a header line 'n m'")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header must be two integers") from None
    if n < 1 or m < 0:
        raise GraphFormatError(f"line {lineno}: need n >= 1 and m >= 0")
    if len(rows) - 1 != m:
        raise GraphFormatError(
            f"header promises {m} edges but {len(rows) - 1} edge lines follow"
        )
    edges = []
    seen = set()
    for lineno, s in rows[1:]:
        parts = s.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: edge endpoints must be integers") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: endpoint out of range for n={n}")
        e = canonical_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to `leaves` leaf vertices."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    """The 10-vertex 3-regular graph of diameter two and girth five."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer cycle
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner five-point star
        edges.append((i, 5 + i))                # spokes
    return Graph(10, edges)
