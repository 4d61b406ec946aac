"""Reduction of an r-uniform search problem to a 3-uniform one.

`project` anchors a (k-2)-subset of maximum link size, collects the link
sets, and either finds a heavy triple (yielding a small configuration in
the r-graph directly) or retains a pairwise-nearly-disjoint subfamily and
represents each retained link by one triple. `lift` pulls a 3-uniform
configuration found in the projection back to the r-graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Optional

from sparsehg.core import Hypergraph, HypergraphError

_PROJECT_VERTEX_LIMIT = 40

HEAVY_TRIPLE = "HeavyTriple"
PROJECTED = "Projected"


@dataclass(frozen=True)
class ProjectedMap:
    graph3: Hypergraph
    # (triple, link) pairs in retention order; the triple is the edge of
    # graph3 standing for link ∪ anchors in the source graph
    pairs: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]


@dataclass(frozen=True)
class ProjectionResult:
    r: int
    k: int
    e: int
    anchors: tuple[str, ...]
    case_tag: str
    heavy_config: Optional[Hypergraph]
    projected: Optional[ProjectedMap]


def _pick_anchors(graph: Hypergraph, k: int) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    """(k-2)-subset contained in the most edges; ties go to the first in index order."""
    if k == 2:
        anchors: tuple[str, ...] = ()
        return anchors, list(graph.edges)
    best = None
    best_links = None
    for combo in itertools.combinations(graph.vertices, k - 2):
        cset = set(combo)
        links = [edge for edge in graph.edges if cset <= set(edge)]
        if best is None or len(links) > len(best_links):
            best, best_links = combo, links
    return best, best_links


def project(graph: Hypergraph, k: int, e: int) -> ProjectionResult:
    """Anchored projection of an r-graph to a 3-graph, or a direct hit.

    With anchors fixed, each containing edge leaves a link set of size
    r-k+2. A triple lying in e of those links already spans a small
    configuration (HeavyTriple case). Otherwise a greedy scan retains
    links that pairwise share at most 2 vertices, and each retained link
    is recorded as its lexicographically smallest triple.
    """
    r = graph.r
    if not (2 <= k < r):
        raise HypergraphError(f"need 2 <= k < r={r}, got k={k!r}")
    if e < 2:
        raise HypergraphError(f"need e >= 2, got {e!r}")
    if graph.vertex_count > _PROJECT_VERTEX_LIMIT:
        raise HypergraphError(
            f"projection limited to {_PROJECT_VERTEX_LIMIT} vertices; "
            f"graph has {graph.vertex_count}"
        )
    anchors, link_edges = _pick_anchors(graph, k)
    anchor_set = set(anchors)
    links = [tuple(u for u in edge if u not in anchor_set) for edge in link_edges]

    # heavy triple: first vertex triple (index order) lying in >= e links
    link_sets = [set(y) for y in links]
    for triple in itertools.combinations(graph.vertices, 3):
        tset = set(triple)
        holders = [i for i, ys in enumerate(link_sets) if tset <= ys]
        if len(holders) >= e:
            chosen = holders[:e]
            union: set[str] = set(anchors)
            for i in chosen:
                union.update(links[i])
            bound = (r - k) * e + k
            if len(union) > bound:
                raise HypergraphError(
                    f"heavy-triple union has {len(union)} vertices, over the bound {bound}"
                )
            verts = [v for v in graph.vertices if v in union]
            heavy = Hypergraph(r, verts, [link_edges[i] for i in chosen])
            return ProjectionResult(
                r=r, k=k, e=e, anchors=anchors, case_tag=HEAVY_TRIPLE,
                heavy_config=heavy, projected=None,
            )

    kept: list[tuple[str, ...]] = []
    kept_sets: list[set] = []
    for y, ys in zip(links, link_sets):
        if all(len(ys & other) <= 2 for other in kept_sets):
            kept.append(y)
            kept_sets.append(ys)
    if kept and len(kept) * (comb(r, 3) * (e - 1) + 1) < len(links):
        raise HypergraphError("greedy retention fell below the independent-set bound")
    pairs = tuple((tuple(sorted(y))[:3], y) for y in kept)
    graph3 = Hypergraph(3, graph.vertices, [t for t, _ in pairs])
    return ProjectionResult(
        r=r, k=k, e=e, anchors=anchors, case_tag=PROJECTED,
        heavy_config=None, projected=ProjectedMap(graph3=graph3, pairs=pairs),
    )


def lift(result: ProjectionResult, config3: Hypergraph) -> Hypergraph:
    """Pull a 3-uniform configuration found in the projection back up.

    Every edge of config3 must be a recorded triple; its preimage is the
    link plus the anchors. The lifted vertex count is asserted against
    v(config3) + (r-k-1)*e(config3) + k - 2.
    """
    if result.case_tag != PROJECTED or result.projected is None:
        raise HypergraphError("lift needs a Projected result")
    if config3.r != 3:
        raise HypergraphError(f"config must be 3-uniform, got {config3.r}")
    assoc = {t: y for t, y in result.projected.pairs}
    lifted_edges = []
    for t in config3.edges:
        if t not in assoc:
            raise HypergraphError(f"edge {t!r} not in projection map")
        lifted_edges.append(tuple(sorted(set(assoc[t]) | set(result.anchors))))
    union: set[str] = set(result.anchors)
    for edge in lifted_edges:
        union.update(edge)
    host_order = result.projected.graph3.vertices
    verts = [v for v in host_order if v in union]
    lifted = Hypergraph(result.r, verts, lifted_edges)
    bound = (
        config3.vertex_count
        + (result.r - result.k - 1) * config3.edge_count
        + result.k
        - 2
    )
    if lifted.vertex_count > bound:
        raise HypergraphError(
            f"lifted configuration has {lifted.vertex_count} vertices, over the bound {bound}"
        )
    return lifted
