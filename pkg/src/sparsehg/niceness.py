"""Witness-based subset-density verification.

A graph with difference k is accepted here when some independent set A of
size k+1 satisfies, for every vertex subset U, a pair of lower bounds on
the difference of U in terms of |U ∩ A|. Verification is exhaustive
(every subset, canonical bitmask order) or sampled (seeded splitmix64
stream plus a stratified pass over small subsets near A). The first
violation in scan order is reported and is always re-checkable through
Hypergraph.difference.

Checks run through sparsehg.kernels, so workers and backend choice can
never change a report, only its runtime.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from sparsehg import kernels
from sparsehg.core import Hypergraph, HypergraphError
from sparsehg.families import LabeledConfiguration

NICE = "NICE"
NOT_NICE = "NOT_NICE"
SAMPLED_NO_VIOLATION = "SAMPLED_NO_VIOLATION"

_EXHAUSTIVE_VERTEX_LIMIT = 30
_WITNESS_VERTEX_LIMIT = 20
_STRATIFIED_SIZE_LIMIT = 8
_STRATIFIED_DRAWS = 4096

_CONDITION_NAMES = {1: "Cond1", 2: "Cond2"}
_ITEM_NAMES = {1: "Item1", 2: "Item2", 3: "Item3"}


@dataclass(frozen=True)
class Counterexample:
    subset: tuple[str, ...]
    condition: str
    observed_delta: int
    required_bound: int


@dataclass(frozen=True)
class NicenessReport:
    verdict: str
    checked_subsets: int
    counterexample: Optional[Counterexample]
    seed: Optional[int] = None


GraphLike = Union[Hypergraph, LabeledConfiguration]


def _as_graph(obj: GraphLike) -> Hypergraph:
    if isinstance(obj, LabeledConfiguration):
        return obj.graph
    return obj


def _resolve_witness(obj: GraphLike, witness) -> tuple[str, ...]:
    if witness is not None:
        return tuple(witness)
    if isinstance(obj, LabeledConfiguration) and "A" in obj.roles:
        return obj.roles["A"]
    raise HypergraphError("no witness given and the configuration has no role 'A'")


def _mask_of_labels(graph: Hypergraph, labels: Sequence[str]) -> int:
    mask = 0
    for lab in labels:
        mask |= 1 << graph.index_of(lab)
    return mask


def _parallel_scan(
    total: int,
    workers: int,
    run_chunk: Callable[[int, int], tuple[int, Optional[tuple]]],
) -> tuple[int, Optional[tuple]]:
    """Split [0, total) into contiguous chunks; merge to the earliest violation.

    Reports are position-ordered, so the merged result is identical for
    every worker count.
    """
    workers = max(1, int(workers))
    if workers == 1 or total <= 1:
        return run_chunk(0, total)
    bounds = [total * i // workers for i in range(workers + 1)]
    chunks = [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    results = []
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [pool.submit(run_chunk, lo, hi) for lo, hi in chunks]
        results = [f.result() for f in futures]
    violations = [v for _, v in results if v is not None]
    if not violations:
        return (total, None)
    best = min(violations, key=lambda v: v[0])
    return (best[0] + 1, best)


def _independence_failure(graph: Hypergraph, witness: tuple[str, ...]):
    if graph.is_independent(witness):
        return None
    rep = graph.difference(graph.subset(witness))
    return Counterexample(
        subset=witness,
        condition="Independence",
        observed_delta=rep.delta,
        required_bound=len(witness),
    )


def verify_nice(
    config: GraphLike,
    witness: Optional[Sequence[str]] = None,
    *,
    workers: int = 1,
) -> NicenessReport:
    """Exhaustively check the two subset bounds for (graph, witness).

    The witness defaults to the configuration's role "A". Scans all 2^v
    subsets in increasing bitmask order and stops at the first violation.
    """
    graph = _as_graph(config)
    wit = _resolve_witness(config, witness)
    k = graph.delta
    if len(wit) != k + 1:
        raise HypergraphError(
            f"wrong witness size: difference is {k}, need {k + 1} vertices, got {len(wit)}"
        )
    if graph.vertex_count > _EXHAUSTIVE_VERTEX_LIMIT:
        raise HypergraphError(
            f"exhaustive check limited to {_EXHAUSTIVE_VERTEX_LIMIT} vertices; "
            f"graph has {graph.vertex_count} (use sample_nice)"
        )
    indep = _independence_failure(graph, wit)
    if indep is not None:
        return NicenessReport(NOT_NICE, 0, indep)
    n = graph.vertex_count
    a_mask = _mask_of_labels(graph, wit)
    edge_masks = list(graph.edge_masks)

    def chunk(lo: int, hi: int):
        checked, vio = kernels.nice_scan_range(edge_masks, n, a_mask, k, lo, hi)
        return (checked, vio)

    checked, vio = _parallel_scan(1 << n, workers, chunk)
    if vio is None:
        return NicenessReport(NICE, 1 << n, None)
    _, u_mask, code, delta, bound = vio
    ce = Counterexample(
        subset=graph.labels_of_mask(u_mask),
        condition=_CONDITION_NAMES[code],
        observed_delta=delta,
        required_bound=bound,
    )
    return NicenessReport(NOT_NICE, checked, ce)


def _stratified_masks(graph: Hypergraph, wit: tuple[str, ...], seed: int, cursor: int):
    """Small subsets drawn from A and its edge neighbourhood.

    Enumerates every subset of each size up to 8 when that is cheap,
    otherwise takes 4096 seeded draws per size; continues the caller's
    splitmix64 stream at index `cursor` and returns the new cursor.
    """
    a_set = set(wit)
    touched = set()
    for edge in graph.edges:
        if any(u in a_set for u in edge):
            touched.update(u for u in edge if u not in a_set)
    # witness first, then its edge neighbourhood in canonical order
    pool = list(wit) + [v for v in graph.vertices if v in touched]
    bits = [1 << graph.index_of(v) for v in pool]
    masks: list[int] = []
    for size in range(1, min(_STRATIFIED_SIZE_LIMIT, len(pool)) + 1):
        if math.comb(len(pool), size) <= _STRATIFIED_DRAWS:
            for combo in itertools.combinations(range(len(pool)), size):
                m = 0
                for i in combo:
                    m |= bits[i]
                masks.append(m)
        else:
            for _ in range(_STRATIFIED_DRAWS):
                chosen: set[int] = set()
                m = 0
                while len(chosen) < size:
                    idx = kernels.mix64((seed + (cursor + 1) * kernels.GAMMA) & kernels.MASK64) % len(pool)
                    cursor += 1
                    if idx in chosen:
                        continue
                    chosen.add(idx)
                    m |= bits[idx]
                masks.append(m)
    return masks, cursor


def sample_nice(
    config: GraphLike,
    witness: Optional[Sequence[str]] = None,
    *,
    samples: int,
    seed: int,
    workers: int = 1,
) -> NicenessReport:
    """Seeded check of the subset bounds: uniform pass, then stratified pass.

    Uniform subsets come from a splitmix64 stream indexed 0..samples-1;
    the stratified pass continues the same stream, so results are a pure
    function of (graph, witness, samples, seed).
    """
    graph = _as_graph(config)
    wit = _resolve_witness(config, witness)
    k = graph.delta
    if len(wit) != k + 1:
        raise HypergraphError(
            f"wrong witness size: difference is {k}, need {k + 1} vertices, got {len(wit)}"
        )
    if samples <= 0:
        raise HypergraphError("samples must be positive")
    indep = _independence_failure(graph, wit)
    if indep is not None:
        return NicenessReport(NOT_NICE, 0, indep, seed=seed)
    n = graph.vertex_count
    a_mask = _mask_of_labels(graph, wit)
    edge_masks = list(graph.edge_masks)

    def chunk(lo: int, hi: int):
        return kernels.nice_sample_scan(edge_masks, n, a_mask, k, hi - lo, seed, lo)

    checked, vio = _parallel_scan(samples, workers, chunk)
    if vio is None:
        strat, _ = _stratified_masks(graph, wit, seed, samples)
        s_checked, s_vio = kernels.nice_check_masks(edge_masks, n, a_mask, k, strat)
        checked += s_checked
        if s_vio is not None:
            vio = s_vio
    if vio is None:
        return NicenessReport(SAMPLED_NO_VIOLATION, checked, None, seed=seed)
    _, u_mask, code, delta, bound = vio
    ce = Counterexample(
        subset=graph.labels_of_mask(u_mask),
        condition=_CONDITION_NAMES[code],
        observed_delta=delta,
        required_bound=bound,
    )
    return NicenessReport(NOT_NICE, checked, ce, seed=seed)


def find_witness(
    config: GraphLike, *, workers: int = 1
) -> Optional[tuple[str, ...]]:
    """First independent set (canonical order) passing the exhaustive check.

    Candidates are the size-(delta+1) vertex combinations in index order;
    returns None when every candidate fails or none exists.
    """
    graph = _as_graph(config)
    if graph.vertex_count > _WITNESS_VERTEX_LIMIT:
        raise HypergraphError(
            f"witness search limited to {_WITNESS_VERTEX_LIMIT} vertices; "
            f"graph has {graph.vertex_count}"
        )
    size = graph.delta + 1
    if size > graph.vertex_count:
        return None
    for combo in itertools.combinations(graph.vertices, size):
        report = verify_nice(graph, combo, workers=workers)
        if report.verdict == NICE:
            return combo
    return None


def verify_cycle_bounds(config: LabeledConfiguration) -> bool:
    """Exhaustive check of the two difference bounds special to the 3-cycle.

    Main bound: delta(U) >= |U ∩ {v1..v4}| - [v1..v4 ⊆ U]. Moreover: when
    U has a vertex outside {v1..v4} and misses v1 or both of v2, v3, the
    bound strengthens to |U ∩ {v1..v4}| + 1.
    """
    if not isinstance(config, LabeledConfiguration) or config.family.get("name") != "cycle":
        raise HypergraphError("expected the linear 3-cycle configuration")
    graph = config.graph
    for name in ("v1", "v2", "v3", "v4", "v5", "v6"):
        if name not in config.roles:
            raise HypergraphError(f"cycle configuration is missing role {name!r}")
    a_mask = _mask_of_labels(graph, [config.role(f"v{i}")[0] for i in range(1, 5)])
    v1_bit = 1 << graph.index_of(config.role("v1")[0])
    v23_mask = _mask_of_labels(graph, [config.role("v2")[0], config.role("v3")[0]])
    n = graph.vertex_count
    for u in range(1 << n):
        rep = graph.difference(graph.subset_from_mask(u))
        au = (u & a_mask).bit_count()
        if rep.delta < au - (1 if (u & a_mask) == a_mask else 0):
            return False
        if (u & ~a_mask) != 0 and (not (u & v1_bit) or not (u & v23_mask)):
            if rep.delta < au + 1:
                return False
    return True


def _tower_context(config: LabeledConfiguration):
    if not isinstance(config, LabeledConfiguration):
        raise HypergraphError("expected a tower configuration")
    if config.family.get("name") != "g-ell":
        raise HypergraphError("expected a tower configuration (family 'g-ell')")
    graph = config.graph
    k = 0
    while f"x{k + 1}" in config.roles:
        k += 1
    ell = -1
    while f"y{ell + 1}" in config.roles:
        ell += 1
    if k < 2 or ell < 0:
        raise HypergraphError("tower configuration is missing x/y roles")
    if "A_ell" not in config.roles:
        raise HypergraphError("tower configuration is missing role 'A_ell'")
    if k + ell != graph.delta:
        raise HypergraphError(
            f"role split (k={k}, ell={ell}) disagrees with difference {graph.delta}"
        )
    gname = f"G^{ell}"
    if gname not in config.subcopies:
        raise HypergraphError(f"tower configuration is missing subcopy {gname!r}")
    x_mask = _mask_of_labels(graph, [config.role(f"x{j}")[0] for j in range(1, k + 1)])
    y_all = [config.role(f"y{j}")[0] for j in range(0, ell + 1)]
    yprefix_mask = _mask_of_labels(graph, y_all[:-1])
    yell_bit = 1 << graph.index_of(y_all[-1])
    aell_mask = _mask_of_labels(graph, config.role("A_ell"))
    gl_mask = _mask_of_labels(graph, list(config.subcopies[gname].values()))
    return graph, k, ell, x_mask, yprefix_mask, yell_bit, aell_mask, gl_mask


def verify_tower_bounds(
    config: LabeledConfiguration,
    *,
    exhaustive: bool = True,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    workers: int = 1,
) -> NicenessReport:
    """Check the three conditional bounds on subsets containing y0..y(ell-1).

    Exhaustive mode scans every superset of the y-prefix; sampled mode
    draws seeded uniform subsets and ORs the prefix in. Violations name
    the item (1, 2 or 3) whose bound failed.
    """
    (graph, k, ell, x_mask, yprefix_mask, yell_bit, aell_mask, gl_mask) = _tower_context(config)
    edge_masks = list(graph.edge_masks)
    n = graph.vertex_count
    xy_mask = x_mask | yell_bit
    if exhaustive:
        free = [b for b in range(n) if not (yprefix_mask >> b) & 1]
        if len(free) > _EXHAUSTIVE_VERTEX_LIMIT:
            raise HypergraphError(
                f"exhaustive tower check limited to {_EXHAUSTIVE_VERTEX_LIMIT} free "
                f"vertices; graph has {len(free)} (use sampled mode)"
            )

        def chunk(lo: int, hi: int):
            return kernels.gl_scan_range(
                edge_masks, free, yprefix_mask, x_mask, aell_mask, xy_mask,
                gl_mask, k, ell, lo, hi,
            )

        total = 1 << len(free)
        checked, vio = _parallel_scan(total, workers, chunk)
        if vio is None:
            return NicenessReport(NICE, total, None)
        _, u_mask, code, delta, bound = vio
        ce = Counterexample(
            subset=graph.labels_of_mask(u_mask),
            condition=_ITEM_NAMES[code],
            observed_delta=delta,
            required_bound=bound,
        )
        return NicenessReport(NOT_NICE, checked, ce)
    if samples is None or seed is None:
        raise HypergraphError("sampled mode needs samples and seed")
    if samples <= 0:
        raise HypergraphError("samples must be positive")

    def chunk(lo: int, hi: int):
        return kernels.gl_sample_scan(
            edge_masks, n, yprefix_mask, x_mask, aell_mask, xy_mask, gl_mask,
            k, ell, hi - lo, seed, lo,
        )

    checked, vio = _parallel_scan(samples, workers, chunk)
    if vio is None:
        return NicenessReport(SAMPLED_NO_VIOLATION, checked, None, seed=seed)
    _, u_mask, code, delta, bound = vio
    ce = Counterexample(
        subset=graph.labels_of_mask(u_mask),
        condition=_ITEM_NAMES[code],
        observed_delta=delta,
        required_bound=bound,
    )
    return NicenessReport(NOT_NICE, checked, ce, seed=seed)
