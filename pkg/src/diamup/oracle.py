"""Brute-force exact solvers by exhaustive edge-subset enumeration.

These are the ground truth for every polynomial solver in this package, so
the implementation stays deliberately dumb: candidate deletion sets are
enumerated by increasing cardinality and lexicographically within each
cardinality, and each candidate is checked with textbook reachability
(boolean powers of adjacency-plus-identity).  The first hit is therefore
the canonical optimum, independent of how the enumeration is chunked.

The only pruning is a connectivity argument that is its own proof: a graph
on n vertices with fewer than n-1 edges is disconnected, so deletion sets
larger than m-(n-1) are never checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import INF, Graph, canonical_edges, delete_edges, diameter, is_connected


class BudgetExceededError(RuntimeError):
    """The instance is too large for exhaustive enumeration; refused outright."""


@dataclass(frozen=True)
class OracleBudget:
    """Caps on the enumeration: edge-pool size and subset cardinality."""

    max_edges: int = 40
    max_subset_size: int | None = None

    def __post_init__(self):
        if self.max_edges < 1:
            raise ValueError("max_edges must be positive")
        if self.max_subset_size is not None and self.max_subset_size < 0:
            raise ValueError("max_subset_size must be nonnegative")


def _prepare(g: Graph, pool, budget: OracleBudget | None):
    if not is_connected(g):
        raise ValueError("oracle requires a connected input graph")
    budget = budget or OracleBudget()
    if pool is None:
        pool = g.edges
    else:
        pool = canonical_edges(pool)
        for e in pool:
            if e not in g._edge_set:
                raise ValueError(f"pool edge {e} is not an edge of the graph")
    if len(pool) > budget.max_edges:
        raise BudgetExceededError(
            f"{len(pool)} candidate edges exceed the budget of {budget.max_edges}"
        )
    cap = len(pool) if budget.max_subset_size is None else min(
        budget.max_subset_size, len(pool)
    )
    # A connected spanning subgraph keeps at least n-1 edges.
    cap = min(cap, max(0, g.num_edges - (g.n - 1)))
    return pool, cap


# ---------------------------------------------------------------------------
# Batched candidate checks
# ---------------------------------------------------------------------------
#
# Candidates are materialized as stacks of adjacency-plus-identity matrices
# in float32; all arithmetic is nonnegative, so zero/nonzero patterns are
# exact regardless of magnitude.

def _clip(x):
    return (x > 0).astype(np.float32)


def _bmm(x, y):
    return _clip(np.matmul(x, y))


def _reach(b, t: int):
    """Zero pattern of (A+I)^t: entry (u,v) nonzero iff dist(u,v) <= t."""
    if t <= 0:
        eye = np.eye(b.shape[-1], dtype=np.float32)
        return np.broadcast_to(eye, b.shape)
    result = None
    power = b
    while True:
        if t & 1:
            result = power if result is None else _bmm(result, power)
        t >>= 1
        if not t:
            return result
        power = _bmm(power, power)


def _connected_mask(b):
    """Per-candidate connectivity: vertex 0 reaches everything."""
    row = _clip(b[:, :1, :])
    while True:
        grown = _bmm(row, b)
        if np.array_equal(grown, row):
            break
        row = grown
    return row.reshape(b.shape[0], b.shape[2]).all(axis=1)


def _pred_exact_diameter(d: int):
    def pred(b):
        near = _reach(b, d - 1)
        far = _bmm(near, b)
        return far.all(axis=(1, 2)) & ~near.all(axis=(1, 2))

    return pred


def _pred_min_diameter(d: int):
    def pred(b):
        return _connected_mask(b) & ~_reach(b, d - 1).all(axis=(1, 2))

    return pred


def _pred_pair_distance(d: int, x: int, y: int):
    def pred(b):
        return _connected_mask(b) & (_reach(b, d - 1)[:, x, y] == 0)

    return pred


def _iter_index_blocks(m: int, size: int, chunk: int):
    if size == 0:
        yield np.empty((1, 0), dtype=np.intp)
        return
    combos = itertools.combinations(range(m), size)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return
        yield np.asarray(block, dtype=np.intp)


def _first_hit(g: Graph, pool, cap: int, chunk: int, predicate):
    """Smallest, lexicographically first subset of ``pool`` passing the check."""
    if chunk < 1:
        raise ValueError("chunk must be positive")
    base = np.eye(g.n, dtype=np.float32)
    for u, v in g.edges:
        base[u, v] = base[v, u] = 1.0
    pu = np.asarray([e[0] for e in pool], dtype=np.intp)
    pv = np.asarray([e[1] for e in pool], dtype=np.intp)
    for size in range(cap + 1):
        for block in _iter_index_blocks(len(pool), size, chunk):
            k = block.shape[0]
            batch = np.repeat(base[None, :, :], k, axis=0)
            if size:
                rows = np.arange(k, dtype=np.intp)[:, None]
                batch[rows, pu[block], pv[block]] = 0.0
                batch[rows, pv[block], pu[block]] = 0.0
            hits = np.flatnonzero(predicate(batch))
            if hits.size:
                chosen = block[hits[0]]
                return size, tuple(pool[int(i)] for i in chosen)
    return None


# ---------------------------------------------------------------------------
# The five problems
# ---------------------------------------------------------------------------

def oracle_meda(g: Graph, d: int, budget: OracleBudget | None = None,
                pool=None, chunk: int = 2048):
    """Minimum F with g-F connected of diameter exactly d.

    Returns (|F|, F) with F canonical, or None when no deletion set of any
    size works.  ``pool`` restricts the candidate edges (used by reduction
    verification); semantics are otherwise identical.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    pool, cap = _prepare(g, pool, budget)
    return _first_hit(g, pool, cap, chunk, _pred_exact_diameter(d))


def oracle_mda(g: Graph, d: int, budget: OracleBudget | None = None,
               pool=None, chunk: int = 2048):
    """Minimum F with g-F connected of diameter at least d; None if infeasible."""
    if d < 1:
        raise ValueError("d must be at least 1")
    pool, cap = _prepare(g, pool, budget)
    return _first_hit(g, pool, cap, chunk, _pred_min_diameter(d))


def oracle_eda(g: Graph, d: int, budget: OracleBudget | None = None,
               pool=None, chunk: int = 2048):
    """Some F with g-F connected of diameter exactly d (canonical), or None."""
    hit = oracle_meda(g, d, budget=budget, pool=pool, chunk=chunk)
    return None if hit is None else hit[1]


def oracle_da(g: Graph, d: int, budget: OracleBudget | None = None,
              chunk: int = 2048) -> bool:
    """Whether some F leaves g-F connected with diameter at least d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    pool, cap = _prepare(g, None, budget)
    return _first_hit(g, pool, cap, chunk, _pred_min_diameter(d)) is not None


def oracle_mdi(g: Graph, x: int, y: int, d: int,
               budget: OracleBudget | None = None, pool=None,
               chunk: int = 2048):
    """Minimum F with g-F connected and dist(x,y) >= d; None if infeasible."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if x == y:
        raise ValueError("x and y must be distinct")
    for v in (x, y):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    pool, cap = _prepare(g, pool, budget)
    return _first_hit(g, pool, cap, chunk, _pred_pair_distance(d, x, y))


# ---------------------------------------------------------------------------
# Small-graph catalog and the nonmonotonicity search
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _atlas_connected(max_n: int):
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for h in graph_atlas_g():
        n = h.number_of_nodes()
        if n < 1 or n > max_n:
            continue
        if n > 1 and not nx.is_connected(h):
            continue
        out.append(Graph(n, [tuple(e) for e in h.edges()]))
    return tuple(out)


def connected_graphs_up_to(max_n: int):
    """All connected graphs on 1..max_n vertices, one per isomorphism class.

    Backed by the standard small-graph atlas, so max_n <= 7.
    """
    if not 1 <= max_n <= 7:
        raise ValueError("the catalog covers 1..7 vertices")
    return list(_atlas_connected(max_n))


def _eight_vertex_candidates():
    # Every connected graph on 8 vertices arises (up to isomorphism) from a
    # connected graph on 7 vertices by attaching one vertex to a nonempty
    # neighbor set: delete any non-cut vertex of the larger graph.
    for g7 in _atlas_connected(7):
        if g7.n != 7:
            continue
        for mask in range(1, 1 << 7):
            extra = [(i, 7) for i in range(7) if mask >> i & 1]
            yield Graph(8, list(g7.edges) + extra)


@dataclass(frozen=True)
class NonmonotonicityWitness:
    """A graph where one deletion raises the diameter by two, while raising
    it by exactly one costs at least two deletions."""

    graph: Graph
    base_diameter: int
    jump_edge: tuple
    jump_diameter: int
    step_min_size: int
    step_deleted: tuple


def _witness_on(g: Graph, budget: OracleBudget | None):
    d0 = diameter(g)
    jump = None
    for e in g.edges:
        h = delete_edges(g, [e])
        dh = diameter(h)
        if dh == d0 + 1:
            return None  # a single deletion already raises by exactly one
        if jump is None and dh != INF and dh >= d0 + 2:
            jump = (e, dh)
    if jump is None:
        return None
    # Confirm by oracle: raising by exactly one is feasible but needs >= 2.
    step = oracle_meda(g, d0 + 1, budget=budget)
    if step is None or step[0] < 2:
        return None
    return NonmonotonicityWitness(
        graph=g,
        base_diameter=d0,
        jump_edge=jump[0],
        jump_diameter=jump[1],
        step_min_size=step[0],
        step_deleted=step[1],
    )


def nonmonotonicity_witness(max_n: int, budget: OracleBudget | None = None):
    """Search canonical small graphs for the one-deletion-jumps-by-two effect.

    Scans connected graphs by increasing vertex count (isomorphism-free up
    to 7 vertices; 8-vertex graphs are generated by one-vertex extensions)
    and returns the first witness, or None within the bound.  The confirming
    minimization is capped at deletion sets of size 6, which is far beyond
    the size-2 sets the effect is about.
    """
    if not 1 <= max_n <= 8:
        raise ValueError("max_n must be between 1 and 8")
    budget = budget or OracleBudget(max_edges=40, max_subset_size=6)
    for g in _atlas_connected(min(max_n, 7)):
        w = _witness_on(g, budget)
        if w is not None:
            return w
    if max_n == 8:
        for g in _eight_vertex_candidates():
            w = _witness_on(g, budget)
            if w is not None:
                return w
    return None
