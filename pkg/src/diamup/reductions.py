"""Hard-instance generators: vertex cover embedded into diameter problems.

The base construction turns a Vertex Cover instance (Gamma, c) into a graph
of diameter three (or four, in the variant) together with a budget
k = |W| + c such that k deletions can raise the diameter to exactly five
iff Gamma has a cover of size at most c.  Tail and triangle-chain
extensions then shift both the starting diameter and the target upward,
which is how hardness spreads over the whole (diameter, increase) grid.

Every generator measures the diameter of what it built and fails loudly on
any mismatch, so a returned artifact is always a verified instance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .graphs import (
    Graph,
    bfs_distances,
    canonical_edge,
    diameter,
    format_edge_list,
    parse_edge_list,
)
from .oracle import OracleBudget, oracle_meda


class ConstructionError(RuntimeError):
    """A generated instance failed its structural verification."""


@dataclass(frozen=True)
class VCInstance:
    """A Vertex Cover question: does ``gamma`` have a cover of size <= c?"""

    gamma: Graph
    c: int

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("cover budget c must be nonnegative")


@dataclass
class ReductionArtifact:
    """A generated instance: graph, deletion budget, and labeled structure.

    ``diameter`` is the measured (and claimed) diameter of ``graph``;
    ``asks`` is the diameter the instance asks to reach with at most ``k``
    deletions; ``roles`` maps every vertex to its structural label.
    """

    graph: Graph
    k: int
    roles: dict
    diameter: int
    asks: int
    source: str


def _verify(art: ReductionArtifact) -> ReductionArtifact:
    measured = diameter(art.graph)
    if measured != art.diameter:
        raise ConstructionError(
            f"construction claims diameter {art.diameter} but measures {measured}"
        )
    if sorted(art.roles) != list(range(art.graph.n)):
        raise ConstructionError("role map does not cover the vertex set")
    return art


# ---------------------------------------------------------------------------
# Base constructions
# ---------------------------------------------------------------------------

def _gadget(vc: VCInstance, copies: int = 1):
    """Shared layout: s, t, then per-copy vertex paths and edge connectors.

    Returns (ids, roles, edges, next_free) where ids resolves
    ("v", copy, w, j) and ("e", copy, eidx, j) to vertex numbers.
    """
    gamma = vc.gamma
    if gamma.num_edges < 1:
        raise ValueError("the vertex cover graph needs at least one edge")
    nw = gamma.n
    gedges = gamma.edges
    roles = {0: "s", 1: "t"}
    ids = {}
    nxt = 2
    edges = []
    for copy in range(copies):
        tag = f"@copy{copy}" if copies > 1 else ""
        for w in range(nw):
            for j in range(1, 5):
                ids[("v", copy, w, j)] = nxt
                roles[nxt] = f"v{j}({w}){tag}"
                nxt += 1
            edges.append((ids[("v", copy, w, 1)], ids[("v", copy, w, 2)]))
            edges.append((ids[("v", copy, w, 2)], ids[("v", copy, w, 3)]))
            edges.append((ids[("v", copy, w, 3)], ids[("v", copy, w, 4)]))
        for eidx, (lo, hi) in enumerate(gedges):
            for j in (1, 2):
                ids[("e", copy, eidx, j)] = nxt
                roles[nxt] = f"e{j}({lo}-{hi}){tag}"
                nxt += 1
            # per edge uv (u=lo, v=hi): the paths v2-e1-u3 and v3-e2-u2
            edges.append((ids[("v", copy, hi, 2)], ids[("e", copy, eidx, 1)]))
            edges.append((ids[("e", copy, eidx, 1)], ids[("v", copy, lo, 3)]))
            edges.append((ids[("v", copy, hi, 3)], ids[("e", copy, eidx, 2)]))
            edges.append((ids[("e", copy, eidx, 2)], ids[("v", copy, lo, 2)]))
        for w in range(nw):
            edges.append((0, ids[("v", copy, w, 1)]))
            edges.append((0, ids[("v", copy, w, 2)]))
            edges.append((1, ids[("v", copy, w, 3)]))
            edges.append((1, ids[("v", copy, w, 4)]))
    return ids, roles, edges, nxt


def _clique_block(label: str, size: int, start: int, roles: dict, edges: list):
    block = list(range(start, start + size))
    for v in block:
        roles[v] = label
    edges.extend((u, v) for u, v in combinations(block, 2))
    return block, start + size


def _join(edges: list, left, right):
    edges.extend((u, v) for u in left for v in right)


def _wire_outer_cliques(ids, roles, edges, nxt, vc, copies, clique_size):
    """K1 next to every v1, v2, e1; K2 next to every v3, v4, e2 (all copies)."""
    nw = vc.gamma.n
    ne = vc.gamma.num_edges
    k1, nxt = _clique_block("K1", clique_size, nxt, roles, edges)
    k2, nxt = _clique_block("K2", clique_size, nxt, roles, edges)
    for copy in range(copies):
        side1 = [ids[("v", copy, w, j)] for w in range(nw) for j in (1, 2)]
        side1 += [ids[("e", copy, e, 1)] for e in range(ne)]
        side2 = [ids[("v", copy, w, j)] for w in range(nw) for j in (3, 4)]
        side2 += [ids[("e", copy, e, 2)] for e in range(ne)]
        _join(edges, k1, side1)
        _join(edges, k2, side2)
    return k1, k2, nxt


def reduce_vc_meda5_diam3(vc: VCInstance) -> ReductionArtifact:
    """Diameter-3 instance asking for diameter 5 with k = |W| + c deletions.

    Two cliques of k+1 vertices each, joined into one big clique, shield
    every pair except (s, t) with short detours.
    """
    k = vc.gamma.n + vc.c
    ids, roles, edges, nxt = _gadget(vc)
    k1, k2, nxt = _wire_outer_cliques(ids, roles, edges, nxt, vc, 1, k + 1)
    _join(edges, k1, k2)
    graph = Graph(nxt, edges)
    art = ReductionArtifact(
        graph=graph,
        k=k,
        roles=roles,
        diameter=3,
        asks=5,
        source=(
            f"vc-gadget(diam3): |W|={vc.gamma.n}, |E'|={vc.gamma.num_edges}, "
            f"c={vc.c}, cliques K1,K2 of size {k + 1} fully joined"
        ),
    )
    return _verify(art)


def reduce_vc_meda5_diam4(vc: VCInstance) -> ReductionArtifact:
    """Diameter-4 variant: four disjoint cliques chained K1-K3-K4-K2.

    The diametral pairs are (K3, t) and (K4, s) at distance four; this is
    verified explicitly along with the diameter.
    """
    k = vc.gamma.n + vc.c
    ids, roles, edges, nxt = _gadget(vc)
    k1, k2, nxt = _wire_outer_cliques(ids, roles, edges, nxt, vc, 1, k + 1)
    k3, nxt = _clique_block("K3", k + 1, nxt, roles, edges)
    k4, nxt = _clique_block("K4", k + 1, nxt, roles, edges)
    _join(edges, k3, k1)
    _join(edges, k3, k4)
    _join(edges, k4, k2)
    graph = Graph(nxt, edges)
    dist_t = bfs_distances(graph, 1)
    dist_s = bfs_distances(graph, 0)
    if any(dist_t[u] != 4 for u in k3) or any(dist_s[v] != 4 for v in k4):
        raise ConstructionError("expected diametral pairs (K3, t) and (K4, s)")
    art = ReductionArtifact(
        graph=graph,
        k=k,
        roles=roles,
        diameter=4,
        asks=5,
        source=(
            f"vc-gadget(diam4): |W|={vc.gamma.n}, |E'|={vc.gamma.num_edges}, "
            f"c={vc.c}, disjoint cliques of size {k + 1} chained K1-K3-K4-K2"
        ),
    )
    return _verify(art)


def amplify_copies(vc: VCInstance, delta: int) -> ReductionArtifact:
    """delta+1 independent gadget copies sharing s, t and four scaled cliques.

    The budget scales to (delta+1)(|W|+c) and the cliques to delta+1 times
    their single-copy size; the diameter stays four.  Because the copies
    are independent, no deletion set of size at most budget+delta can push
    the diameter beyond five (recorded in the source note; the diameter-4
    claim itself is verified here).
    """
    if delta < 1:
        raise ValueError("delta must be at least 1")
    k_single = vc.gamma.n + vc.c
    copies = delta + 1
    clique_size = copies * (k_single + 1)
    ids, roles, edges, nxt = _gadget(vc, copies=copies)
    k1, k2, nxt = _wire_outer_cliques(ids, roles, edges, nxt, vc, copies, clique_size)
    k3, nxt = _clique_block("K3", clique_size, nxt, roles, edges)
    k4, nxt = _clique_block("K4", clique_size, nxt, roles, edges)
    _join(edges, k3, k1)
    _join(edges, k3, k4)
    _join(edges, k4, k2)
    graph = Graph(nxt, edges)
    budget = copies * k_single
    art = ReductionArtifact(
        graph=graph,
        k=budget,
        roles=roles,
        diameter=4,
        asks=5,
        source=(
            f"vc-gadget(diam4) x{copies} copies: budget {budget}; independent "
            f"copies mean no {budget + delta} deletions reach diameter 6"
        ),
    )
    return _verify(art)


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------

def _t_side_end(art: ReductionArtifact) -> int:
    """Where tails attach: the farthest tail vertex so far, else t itself."""
    best, best_idx = None, 0
    for v, role in art.roles.items():
        if role.startswith("q") and role[1:].isdigit():
            idx = int(role[1:])
            if idx > best_idx:
                best, best_idx = v, idx
        elif role == "t" and best is None:
            best = v
    return best


def _tail_indices(art: ReductionArtifact) -> int:
    return max(
        (int(r[1:]) for r in art.roles.values() if r.startswith("q") and r[1:].isdigit()),
        default=0,
    )


def extend_path(art: ReductionArtifact, target_d: int) -> ReductionArtifact:
    """Attach a pendant path at t, stretching a diameter-4 instance to
    diameter target_d; the extended instance asks for target_d + 1 with the
    same budget."""
    if art.diameter != 4 or art.asks != 5:
        raise ValueError("extend_path wants the diameter-4 instance asking for 5")
    if target_d < 5:
        raise ValueError("target_d must be at least 5")
    return _attach_tail(art, target_d - 4)


def _attach_tail(art: ReductionArtifact, length: int) -> ReductionArtifact:
    anchor = _t_side_end(art)
    start_idx = _tail_indices(art)
    n0 = art.graph.n
    roles = dict(art.roles)
    edges = list(art.graph.edges)
    prev = anchor
    for i in range(length):
        v = n0 + i
        roles[v] = f"q{start_idx + i + 1}"
        edges.append((prev, v))
        prev = v
    out = ReductionArtifact(
        graph=Graph(n0 + length, edges),
        k=art.k,
        roles=roles,
        diameter=art.diameter + length,
        asks=art.asks + length,
        source=art.source + f" +tail({length})",
    )
    return _verify(out)


def triangle_chain(art: ReductionArtifact, k_steps: int) -> ReductionArtifact:
    """Attach a path of triangles at the t-side end.

    Each step appends a new path vertex q_i plus a companion r_i forming a
    triangle with the previous end, raising the diameter by one while
    making the new path edge deletable without disconnecting.  The budget
    grows by k_steps and the asked diameter by 2*k_steps.
    """
    if k_steps < 1:
        raise ValueError("k_steps must be at least 1")
    anchor = _t_side_end(art)
    start_idx = _tail_indices(art)
    n0 = art.graph.n
    roles = dict(art.roles)
    edges = list(art.graph.edges)
    prev = anchor
    for i in range(k_steps):
        q = n0 + 2 * i
        r = n0 + 2 * i + 1
        roles[q] = f"q{start_idx + i + 1}"
        roles[r] = f"r{start_idx + i + 1}"
        edges.append((prev, q))
        edges.append((prev, r))
        edges.append((r, q))
        prev = q
    out = ReductionArtifact(
        graph=Graph(n0 + 2 * k_steps, edges),
        k=art.k + k_steps,
        roles=roles,
        diameter=art.diameter + k_steps,
        asks=art.asks + 2 * k_steps,
        source=art.source + f" +triangles({k_steps})",
    )
    return _verify(out)


def compose_general(d: int, k: int, vc: VCInstance) -> ReductionArtifact:
    """The hard instance of diameter d asking for diameter d+k (d>=5, 1<=k<=d-1).

    k=1: diameter-4 instance plus a tail.  k=2: stretch to diameter d-1,
    then one triangle step.  k>=3: diameter-3 instance, tail to diameter
    d-k+2, then k-2 triangle steps.
    """
    if d < 5:
        raise ValueError("d must be at least 5")
    if not 1 <= k <= d - 1:
        raise ValueError("k must satisfy 1 <= k <= d-1")
    if k == 1:
        return extend_path(reduce_vc_meda5_diam4(vc), d)
    if k == 2:
        base = reduce_vc_meda5_diam4(vc)
        if d - 1 > 4:
            base = extend_path(base, d - 1)
        return triangle_chain(base, 1)
    d_prime, k_prime = d - k + 2, k - 2
    base = reduce_vc_meda5_diam3(vc)
    if d_prime > 3:
        base = _attach_tail(base, d_prime - 3)
    return triangle_chain(base, k_prime)


# ---------------------------------------------------------------------------
# Equivalence verification
# ---------------------------------------------------------------------------

def min_vertex_cover(gamma: Graph):
    """Smallest vertex cover by subset enumeration: (size, cover)."""
    if not gamma.edges:
        return 0, ()
    for size in range(gamma.n + 1):
        for cand in combinations(range(gamma.n), size):
            chosen = set(cand)
            if all(u in chosen or v in chosen for u, v in gamma.edges):
                return size, cand
    raise AssertionError("the full vertex set always covers")


def restricted_pool(art: ReductionArtifact):
    """Edges whose endpoints both lie outside the cliques (s, t, v_i, e_j).

    The hardness argument shows optimal deletion sets never touch
    clique-incident edges, so enumeration over this pool is exact.
    """
    def free(v):
        return not art.roles[v].startswith("K")

    return tuple(e for e in art.graph.edges if free(e[0]) and free(e[1]))


@dataclass(frozen=True)
class EquivalenceReport:
    vc_min_cover: int
    vc_yes: bool
    artifact_min: int | None
    artifact_yes: bool
    agree: bool
    pool_size: int


def verify_equivalence(vc: VCInstance, art: ReductionArtifact) -> EquivalenceReport:
    """Decide both sides by brute force and report whether they agree.

    The Vertex Cover side enumerates vertex subsets; the artifact side runs
    the restricted-pool oracle up to the artifact's budget.  Intended for
    |W| <= 3; larger pools are refused by the oracle budget.
    """
    cover_size, _ = min_vertex_cover(vc.gamma)
    vc_yes = cover_size <= vc.c
    pool = restricted_pool(art)
    budget = OracleBudget(max_edges=40, max_subset_size=art.k)
    hit = oracle_meda(art.graph, art.asks, budget=budget, pool=pool)
    artifact_min = None if hit is None else hit[0]
    artifact_yes = hit is not None
    return EquivalenceReport(
        vc_min_cover=cover_size,
        vc_yes=vc_yes,
        artifact_min=artifact_min,
        artifact_yes=artifact_yes,
        agree=vc_yes == artifact_yes,
        pool_size=len(pool),
    )


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def write_artifact(art: ReductionArtifact, prefix) -> tuple:
    """Write ``<prefix>.edgelist`` and a ``<prefix>.json`` sidecar."""
    prefix = Path(prefix)
    edge_path = prefix.with_name(prefix.name + ".edgelist")
    json_path = prefix.with_name(prefix.name + ".json")
    edge_path.write_text(format_edge_list(art.graph), encoding="utf-8")
    sidecar = {
        "n": art.graph.n,
        "m": art.graph.num_edges,
        "k": art.k,
        "target_d": art.asks,
        "diameter": art.diameter,
        "roles": {str(v): art.roles[v] for v in sorted(art.roles)},
        "source": art.source,
    }
    json_path.write_text(
        json.dumps(sidecar, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    return edge_path, json_path


def read_artifact(prefix) -> ReductionArtifact:
    """Load an artifact written by write_artifact."""
    prefix = Path(prefix)
    graph = parse_edge_list(
        prefix.with_name(prefix.name + ".edgelist").read_text(encoding="utf-8")
    )
    sidecar = json.loads(
        prefix.with_name(prefix.name + ".json").read_text(encoding="utf-8")
    )
    return ReductionArtifact(
        graph=graph,
        k=sidecar["k"],
        roles={int(v): r for v, r in sidecar["roles"].items()},
        diameter=sidecar["diameter"],
        asks=sidecar["target_d"],
        source=sidecar["source"],
    )
