"""Exact polynomial solvers and the problem dispatcher.

Five problems, all about deleting edges while keeping the graph connected:

* da / mda    -- reach diameter at least d (mda with a deletion budget k);
* eda / meda  -- reach diameter exactly d (meda with a budget k);
* mdi         -- push the distance of a fixed pair (x, y) to at least d.

Polynomial algorithms exist for da at every d, for everything on complete
graphs, and for the budgeted problems at d = 3; the dispatcher routes all
remaining cases to the brute-force oracle and labels them accordingly.

Every solver returns a Solution whose witness re-verifies: deleting the
returned edges leaves a connected graph meeting the target.  Witnesses are
canonical (lexicographically smallest among the candidates each algorithm
generates), so repeated runs are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import oracle as _oracle
from .graphs import (
    Graph,
    _bfs_target,
    canonical_edge,
    canonical_edges,
    complete_graph,
    components,
    delete_edges,
    diameter,
    diametral_pair,
    distance,
    find_path_of_length_at_least,
    girth,
    is_connected,
    spanning_tree_from_path,
)

YES = "yes"
NO = "no"
INFEASIBLE = "infeasible"

KINDS = ("da", "mda", "eda", "meda", "mdi")
_BUDGETED = ("mda", "meda", "mdi")


class VerificationError(RuntimeError):
    """An internally constructed witness failed its own re-verification."""


@dataclass(frozen=True)
class ProblemSpec:
    """Which problem to solve: kind, target d, optional budget k, optional pair."""

    kind: str
    d: int
    k: int | None = None
    pair: tuple | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.d < 1:
            raise ValueError("d must be at least 1")
        if self.kind in _BUDGETED:
            if self.k is None:
                raise ValueError(f"{self.kind} requires a budget k")
            if self.k < 0:
                raise ValueError("k must be nonnegative")
        elif self.k is not None:
            raise ValueError(f"{self.kind} takes no budget k")
        if self.kind == "mdi":
            if self.pair is None:
                raise ValueError("mdi requires a vertex pair")
            x, y = self.pair
            if x == y:
                raise ValueError("mdi pair must be two distinct vertices")
        elif self.pair is not None:
            raise ValueError(f"{self.kind} takes no vertex pair")


@dataclass(frozen=True)
class Solution:
    """Outcome of one solve: verdict, optimal size, witness, and how it was found.

    When ``deleted`` is present, re-deleting it from the input reproduces
    ``achieved_diameter`` and keeps the graph connected; ``certificate`` is
    a diametral pair of that graph.
    """

    verdict: str
    min_size: int | None
    deleted: tuple | None
    achieved_diameter: object
    certificate: tuple | None
    method: str


def _witnessed(g: Graph, deleted, verdict: str, method: str, min_size=None) -> Solution:
    f = canonical_edges(deleted)
    h = delete_edges(g, f) if f else g
    return Solution(verdict, min_size, f, diameter(h), diametral_pair(h), method)


def _refused(verdict: str, method: str) -> Solution:
    return Solution(verdict, None, None, None, None, method)


def _apply_budget(sol: Solution, k: int) -> Solution:
    if sol.verdict != YES or sol.min_size is None or sol.min_size <= k:
        return sol
    return replace(sol, verdict=NO)


def _is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


# ---------------------------------------------------------------------------
# Extremal graphs: most edges at a given diameter
# ---------------------------------------------------------------------------

def max_edges_for_diameter(n: int, d: int) -> int:
    """Largest edge count of an n-vertex graph with diameter exactly d.

    For d >= 2 this is d + (n-d-1)(n-d+4)/2; the bound is attained by
    extremal_diameter_graph.  For d = 1 the only such graph is complete.
    """
    if not 1 <= d <= n - 1:
        raise ValueError(f"no graph on {n} vertices has diameter {d}")
    if d == 1:
        return n * (n - 1) // 2
    return d + (n - d - 1) * (n - d + 4) // 2


def extremal_diameter_graph(n: int, d: int) -> Graph:
    """A diameter-d graph on n vertices attaining max_edges_for_diameter.

    A path v_0..v_d plus n-d-1 extra vertices forming a clique, every extra
    adjacent to v_0, v_1, v_2.
    """
    if not 1 <= d <= n - 1:
        raise ValueError(f"no graph on {n} vertices has diameter {d}")
    if d == 1:
        return complete_graph(n)
    edges = [(i, i + 1) for i in range(d)]
    extras = range(d + 1, n)
    edges.extend((u, w) for u in extras for w in extras if u < w)
    edges.extend((anchor, u) for u in extras for anchor in (0, 1, 2))
    return Graph(n, edges)


def solve_complete(g: Graph, d: int, kind: str) -> Solution:
    """All four diameter problems on a complete graph, by the extremal count.

    Feasible iff n >= d+1; the minimum deletion count for mda/meda is then
    C(n,2) - max_edges_for_diameter(n, d), attained by keeping an extremal
    diameter-d graph.
    """
    if kind not in ("da", "eda", "mda", "meda"):
        raise ValueError("kind must be da, eda, mda, or meda")
    if not _is_complete(g):
        raise ValueError("solve_complete requires a complete graph")
    method = "complete-extremal"
    decision = kind in ("da", "eda")
    if g.n < d + 1:
        return _refused(NO if decision else INFEASIBLE, method)
    keep = extremal_diameter_graph(g.n, d)
    f = tuple(e for e in g.edges if e not in keep._edge_set)
    best = g.num_edges - max_edges_for_diameter(g.n, d)
    if len(f) != best:
        raise VerificationError("extremal construction does not attain the bound")
    if decision:
        return _witnessed(g, f, YES, method)
    return _witnessed(g, f, YES, method, min_size=best)


# ---------------------------------------------------------------------------
# da: diameter at least d, for every d
# ---------------------------------------------------------------------------

def solve_da(g: Graph, d: int) -> Solution:
    """Yes iff the graph has a path of length at least d.

    Those are exactly the graphs with a connected spanning subgraph (indeed
    a spanning tree) of diameter at least d; the witness keeps a DFS tree
    grown from such a path and deletes everything else.
    """
    path = find_path_of_length_at_least(g, d)
    if path is None:
        return _refused(NO, "da-path-search")
    tree = spanning_tree_from_path(g, path)
    f = tuple(e for e in g.edges if e not in tree._edge_set)
    return _witnessed(g, f, YES, "da-path-tree")


# ---------------------------------------------------------------------------
# mdi at d = 3: separate one pair to distance >= 3
# ---------------------------------------------------------------------------

def solve_mdi3(g: Graph, x: int, y: int) -> Solution:
    """Minimum deletions making dist(x,y) >= 3 while staying connected.

    Any valid deletion set must contain xy (when present) plus one edge of
    {xz, zy} for every common neighbor z, and deleting more never helps
    connectivity, so the optimum is [xy in E] + |N(x) cap N(y)| whenever any
    one-edge-per-pair choice keeps the graph connected.  Feasibility and the
    witness come from the components of the graph with all those edges gone:
    each component must hold x, y, or some z, and the x- and y-sides must be
    linkable through a z inside them or a component holding two z's.
    """
    if x == y:
        raise ValueError("x and y must be distinct")
    for v in (x, y):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    if not is_connected(g):
        raise ValueError("connected input required")
    method = "mdi3-pair-separation"
    if distance(g, x, y) >= 3:
        return _witnessed(g, (), YES, method, min_size=0)

    has_xy = g.has_edge(x, y)
    zs = sorted(set(g.adjacency[x]) & set(g.adjacency[y]))
    removed = [canonical_edge(x, y)] if has_xy else []
    for z in zs:
        removed.append(canonical_edge(x, z))
        removed.append(canonical_edge(z, y))
    stripped = delete_edges(g, removed)
    comps = components(stripped)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    cx, cy = comp_of[x], comp_of[y]

    anchored = {cx, cy} | {comp_of[z] for z in zs}
    if len(anchored) != len(comps):
        return _refused(INFEASIBLE, method)

    linked = cx == cy or any(comp_of[z] in (cx, cy) for z in zs)
    keep_x, keep_y = set(), set()
    if not linked:
        per_comp = {}
        for z in zs:
            per_comp.setdefault(comp_of[z], []).append(z)
        bridge = None
        for ci in sorted(per_comp):
            if ci not in (cx, cy) and len(per_comp[ci]) >= 2:
                bridge = per_comp[ci]
                break
        if bridge is None:
            return _refused(INFEASIBLE, method)
        keep_x.add(bridge[0])
        keep_y.add(bridge[-1])
    for z in zs:
        if z in keep_x or z in keep_y:
            continue
        if cx != cy and comp_of[z] == cx:
            keep_y.add(z)
        else:
            keep_x.add(z)

    deleted = [canonical_edge(x, y)] if has_xy else []
    for z in zs:
        deleted.append(canonical_edge(z, y) if z in keep_x else canonical_edge(x, z))
    f = canonical_edges(deleted)
    h = delete_edges(g, f)
    if not (is_connected(h) and distance(h, x, y) >= 3):
        raise VerificationError("pair-separation witness failed re-verification")
    return _witnessed(g, f, YES, method, min_size=len(f))


# ---------------------------------------------------------------------------
# mda at d = 3
# ---------------------------------------------------------------------------

def solve_mda3(g: Graph, k: int) -> Solution:
    """Budgeted diameter >= 3 via the cheapest pair separation."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not is_connected(g):
        raise ValueError("connected input required")
    method = "mda3-pairwise-separation"
    if diameter(g) >= 3:
        return _witnessed(g, (), YES, method, min_size=0)
    best = None
    for x in range(g.n):
        for y in range(x + 1, g.n):
            sol = solve_mdi3(g, x, y)
            if sol.verdict == YES and (best is None or sol.min_size < best.min_size):
                best = sol
    if best is None:
        return _refused(INFEASIBLE, method)
    sized = replace(best, method=method)
    return _apply_budget(sized, k)


# ---------------------------------------------------------------------------
# Relevant paths and meda at d = 3
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelevantPath:
    """A four-vertex path a-b-c-d driving the diameter-three minimization.

    ``chords`` is E(G) intersected with {ac, ad, bd}; ``common`` is
    N(a) cap N(d) in the full graph; ``f_value`` is their combined count,
    an upper bound on the deletion set built for this path.
    """

    a: int
    b: int
    c: int
    d: int
    chords: tuple
    common: tuple
    f_value: int


def _validate_path4(g: Graph, a: int, b: int, c: int, d: int) -> None:
    if len({a, b, c, d}) != 4:
        raise ValueError("the four path vertices must be distinct")
    for u, v in ((a, b), (b, c), (c, d)):
        if not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge: not a path")


def relevant_path(g: Graph, a: int, b: int, c: int, d: int):
    """The RelevantPath record for a-b-c-d, or None if the path is irrelevant.

    Relevance: deleting the chords leaves diameter at most three, and the
    four vertices do not induce a cycle whose endpoints have exactly one
    common neighbor.
    """
    _validate_path4(g, a, b, c, d)
    chords = canonical_edges(
        e
        for e in (canonical_edge(a, c), canonical_edge(a, d), canonical_edge(b, d))
        if e in g._edge_set
    )
    if diameter(delete_edges(g, chords)) > 3:
        return None
    common = tuple(sorted(set(g.adjacency[a]) & set(g.adjacency[d])))
    induced_cycle = (
        g.has_edge(a, d) and not g.has_edge(a, c) and not g.has_edge(b, d)
    )
    if induced_cycle and len(common) == 1:
        return None
    return RelevantPath(a, b, c, d, chords, common, len(chords) + len(common))


def is_relevant(g: Graph, a: int, b: int, c: int, d: int) -> bool:
    return relevant_path(g, a, b, c, d) is not None


def _edge_cycle_weight(g: Graph, e):
    u, v = e
    adj = list(g.adj_bits)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return 1 + _bfs_target(adj, u, v)


def deletions_for_relevant_path(g: Graph, q: RelevantPath):
    """A verified deletion set built around the relevant path q.

    Context: diameter-two graph in which no single deletion reaches
    diameter three (then girth is three, every edge lies on a triangle, and
    single deletions keep diameter two).  The set always includes the
    chords; on top of that it picks at most one edge per common neighbor of
    the endpoints, chosen by cycle weight so each deletion step keeps the
    diameter under control, except in one two-edge corner case where the
    chord ad pairs with one endpoint edge.  The result is re-verified before
    being returned and a VerificationError signals any failure.
    """
    a, b, c, d = q.a, q.b, q.c, q.d
    stripped = delete_edges(g, q.chords)
    base_diam = diameter(stripped)
    if base_diam == 3:
        result = q.chords
    elif base_diam == 2:
        zs = sorted(set(stripped.adjacency[a]) & set(stripped.adjacency[d]))
        if not zs:
            raise VerificationError("diameter two without a common neighbor")
        if len(zs) == 1:
            result = _single_neighbor_case(g, stripped, q, zs[0])
        else:
            result = _multi_neighbor_case(stripped, q, zs)
    else:
        raise ValueError("path is not relevant: chord deletion exceeds diameter three")

    result = canonical_edges(result)
    left = delete_edges(g, result)
    ok = (
        is_connected(left)
        and diameter(left) == 3
        and len(result) <= q.f_value
        and all(
            sum(1 for e in (canonical_edge(z, a), canonical_edge(z, d)) if e in result) <= 1
            for z in q.common
        )
    )
    if not ok:
        raise VerificationError("deletion set for the relevant path failed verification")
    return result


def _single_neighbor_case(g: Graph, stripped: Graph, q: RelevantPath, z: int):
    a, d = q.a, q.d
    to_a = canonical_edge(z, a)
    to_d = canonical_edge(z, d)
    wa = _edge_cycle_weight(stripped, to_a)
    wd = _edge_cycle_weight(stripped, to_d)
    if min(wa, wd) <= 4:
        return q.chords + ((to_a,) if wa <= wd else (to_d,))
    # Both weights are five: then ad must be an edge and deleting it turns
    # one endpoint edge into a weight-four edge; try both endpoint choices.
    if not g.has_edge(a, d):
        raise VerificationError("double weight-five case without the chord ad")
    for cand in (
        (canonical_edge(a, d), to_a),
        (canonical_edge(a, d), to_d),
    ):
        h = delete_edges(g, cand)
        if is_connected(h) and diameter(h) == 3:
            return cand
    raise VerificationError("no verified pair for the double weight-five case")


def _multi_neighbor_case(stripped: Graph, q: RelevantPath, zs):
    a, d = q.a, q.d
    pair_edges = []
    for z in zs:
        pair_edges.append(canonical_edge(z, a))
        pair_edges.append(canonical_edge(z, d))
    for e in pair_edges:
        if _edge_cycle_weight(stripped, e) == 4:
            return q.chords + (e,)
    # All pair edges have weight three: peel one edge per common neighbor,
    # always a weight-three edge in the current graph, until diameter three.
    work = stripped
    taken = []
    unhit = list(zs)
    while unhit and diameter(work) == 2:
        chosen = None
        for i, z in enumerate(unhit):
            for e in (canonical_edge(z, a), canonical_edge(z, d)):
                if _edge_cycle_weight(work, e) == 3:
                    chosen = (i, e)
                    break
            if chosen:
                break
        if chosen is None:
            raise VerificationError("no weight-three edge available for an unhit pair")
        i, e = chosen
        unhit.pop(i)
        taken.append(e)
        work = delete_edges(work, [e])
    if diameter(work) != 3:
        raise VerificationError("peeling finished without reaching diameter three")
    return q.chords + tuple(taken)


def solve_meda3(g: Graph) -> Solution:
    """Minimum deletions to diameter exactly three.

    Ladder: already there -> 0; too small or diameter four plus ->
    infeasible; complete -> delete one edge and recurse (cross-checked
    against the extremal count); diameter two with girth five plus ->
    infeasible; a single edge whose deletion lands on three -> 1; otherwise
    sweep all four-vertex paths, build a deletion set for every relevant
    one, and keep the smallest.
    """
    diam = diameter(g)
    if diam == 3:
        return _witnessed(g, (), YES, "meda3-already", min_size=0)
    if g.n <= 3 or diam >= 4:
        return _refused(INFEASIBLE, "meda3-out-of-reach")
    if _is_complete(g):
        first = g.edges[0]
        sub = solve_meda3(delete_edges(g, [first]))
        if sub.verdict != YES:
            raise VerificationError("complete-graph recursion cannot be infeasible")
        total = 1 + sub.min_size
        expected = g.num_edges - max_edges_for_diameter(g.n, 3)
        if total != expected:
            raise VerificationError(
                f"recursion gives {total} deletions, extremal count gives {expected}"
            )
        return _witnessed(
            g, (first,) + sub.deleted, YES, "meda3-complete-recursion", min_size=total
        )
    # Here the diameter is exactly two and n >= 4.
    if girth(g) >= 5:
        return _refused(INFEASIBLE, "meda3-girth-five")
    for e in g.edges:
        if diameter(delete_edges(g, [e])) == 3:
            return _witnessed(g, (e,), YES, "meda3-single-edge", min_size=1)
    best = None
    adjacency = g.adjacency
    for a in range(g.n):
        for b in adjacency[a]:
            for c in adjacency[b]:
                if c == a:
                    continue
                for d in adjacency[c]:
                    if d == a or d == b:
                        continue
                    q = relevant_path(g, a, b, c, d)
                    if q is None:
                        continue
                    found = deletions_for_relevant_path(g, q)
                    cand = (len(found), found)
                    if best is None or cand < best:
                        best = cand
    if best is None:
        raise VerificationError("no relevant path exists at the sweep stage")
    return _witnessed(g, best[1], YES, "meda3-relevant-paths", min_size=best[0])


def solve_eda3(g: Graph) -> Solution:
    """Spanning subgraph of diameter exactly three: yes iff the graph is
    complete with at least four vertices, has diameter two with girth at
    most four, or already has diameter three.  Diameter-two graphs of girth
    five or more never qualify (they are either stars or the rare graphs
    whose girth equals twice the diameter plus one)."""
    diam = diameter(g)
    method = "eda3-characterization"
    feasible = (
        (_is_complete(g) and g.n >= 4)
        or (diam == 2 and girth(g) <= 4)
        or diam == 3
    )
    if not feasible:
        return _refused(NO, method)
    inner = solve_meda3(g)
    if inner.verdict != YES:
        raise VerificationError("characterization promised a witness")
    return replace(inner, verdict=YES, min_size=None, method=method)


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------

def solve(spec: ProblemSpec, g: Graph, oracle_budget=None) -> Solution:
    """Route a problem to the right algorithm, or to the oracle fallback.

    Trivial short-circuits first (target not above the current diameter),
    then the linear-time complete-graph answer, then the dedicated d = 3
    algorithms; every remaining case is enumerated by the oracle and the
    solution is labeled method="oracle" so callers can tell it came from
    the regime with no known polynomial algorithm.
    """
    if not is_connected(g):
        raise ValueError("connected input required")
    d = spec.d
    if spec.kind == "mdi":
        x, y = spec.pair
        for v in (x, y):
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
        if distance(g, x, y) >= d:
            return _witnessed(g, (), YES, "trivial-already-far", min_size=0)
        if d == 3:
            return _apply_budget(solve_mdi3(g, x, y), spec.k)
        hit = _oracle.oracle_mdi(g, x, y, d, budget=oracle_budget)
        if hit is None:
            return _refused(INFEASIBLE, "oracle")
        return _apply_budget(
            _witnessed(g, hit[1], YES, "oracle", min_size=hit[0]), spec.k
        )

    diam = diameter(g)
    if spec.kind == "da":
        if diam >= d:
            return _witnessed(g, (), YES, "trivial-already-at-target")
        return solve_da(g, d)

    if diam > d:
        if spec.kind == "mda":
            return _witnessed(g, (), YES, "trivial-already-at-target", min_size=0)
        if spec.kind == "eda":
            return _refused(NO, "trivial-target-below-diameter")
        return _refused(INFEASIBLE, "trivial-target-below-diameter")
    if diam == d:
        min_size = 0 if spec.kind in ("mda", "meda") else None
        return _witnessed(g, (), YES, "trivial-already-at-target", min_size=min_size)

    # diam < d from here on.
    if _is_complete(g):
        sol = solve_complete(g, d, spec.kind)
        return _apply_budget(sol, spec.k) if spec.kind in ("mda", "meda") else sol
    if d == 3:
        if spec.kind == "mda":
            return solve_mda3(g, spec.k)
        if spec.kind == "eda":
            return solve_eda3(g)
        return _apply_budget(solve_meda3(g), spec.k)

    # No polynomial algorithm is known here; fall back to enumeration.
    if spec.kind == "eda":
        f = _oracle.oracle_eda(g, d, budget=oracle_budget)
        if f is None:
            return _refused(NO, "oracle")
        return _witnessed(g, f, YES, "oracle")
    hit = (
        _oracle.oracle_mda(g, d, budget=oracle_budget)
        if spec.kind == "mda"
        else _oracle.oracle_meda(g, d, budget=oracle_budget)
    )
    if hit is None:
        return _refused(INFEASIBLE, "oracle")
    return _apply_budget(_witnessed(g, hit[1], YES, "oracle", min_size=hit[0]), spec.k)


def check_witness(spec: ProblemSpec, g: Graph, deleted):
    """Re-verify a deletion set against a problem: (valid, reason)."""
    f = canonical_edges(deleted)
    for e in f:
        if e not in g._edge_set:
            raise ValueError(f"{e} is not an edge of the graph")
    if spec.k is not None and len(f) > spec.k:
        return False, f"{len(f)} deletions exceed the budget k={spec.k}"
    h = delete_edges(g, f)
    if not is_connected(h):
        return False, "disconnected"
    if spec.kind == "mdi":
        x, y = spec.pair
        got = distance(h, x, y)
        if got < spec.d:
            return False, f"dist({x},{y}) is {got}, needs at least {spec.d}"
        return True, "ok"
    got = diameter(h)
    if spec.kind in ("eda", "meda"):
        if got != spec.d:
            return False, f"diameter is {got}, needs exactly {spec.d}"
    else:
        if got < spec.d:
            return False, f"diameter is {got}, needs at least {spec.d}"
    return True, "ok"
