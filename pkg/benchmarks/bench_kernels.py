"""Timing comparison of the compiled scan kernels against the numpy fallback.

Runs the same exhaustive and sampled subset scans through both backends
and reports wall times plus the speedup ratio. Both backends must return
identical results; the benchmark aborts if they ever disagree.
"""

from __future__ import annotations

import argparse
import time

from sparsehg import kernels
from sparsehg._kernels_py import (
    gl_sample_scan as py_gl_sample_scan,
    nice_sample_scan as py_nice_sample_scan,
    nice_scan_range as py_nice_scan_range,
)
from sparsehg.families import f14, geometric_tower
from sparsehg.niceness import _mask_of_labels, _tower_context

try:
    from sparsehg._kernels import (
        gl_sample_scan as c_gl_sample_scan,
        nice_sample_scan as c_nice_sample_scan,
        nice_scan_range as c_nice_scan_range,
    )
except ImportError:
    c_nice_scan_range = None


def _time(fn, repeats: int) -> tuple[float, object]:
    best = None
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def _row(name: str, compiled_fn, fallback_fn, repeats: int) -> None:
    t_py, r_py = _time(fallback_fn, repeats)
    if compiled_fn is None:
        print(f"{name:<34} numpy {t_py * 1e3:9.2f} ms   compiled: unavailable")
        return
    t_c, r_c = _time(compiled_fn, repeats)
    if r_c != r_py:
        raise AssertionError(f"{name}: backend disagreement {r_c!r} vs {r_py!r}")
    print(
        f"{name:<34} numpy {t_py * 1e3:9.2f} ms   "
        f"compiled {t_c * 1e3:9.2f} ms   x{t_py / t_c:6.1f}"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3, help="timed repeats, best kept")
    parser.add_argument("--samples", type=int, default=200_000, help="sampled scan size")
    parser.add_argument("--seed", type=int, default=2026, help="sample stream seed")
    args = parser.parse_args()

    print(f"compiled backend available: {kernels.HAVE_COMPILED}")

    cfg = f14()
    graph = cfg.graph
    n = graph.vertex_count
    edge_masks = list(graph.edge_masks)
    a_mask = _mask_of_labels(graph, cfg.witness)
    k = graph.delta

    _row(
        f"nice exhaustive (v={n}, 2^{n})",
        None
        if c_nice_scan_range is None
        else (lambda: c_nice_scan_range(edge_masks, n, a_mask, k, 0, 1 << n)),
        lambda: py_nice_scan_range(edge_masks, n, a_mask, k, 0, 1 << n),
        args.repeats,
    )
    _row(
        f"nice sampled (v={n}, {args.samples} draws)",
        None
        if c_nice_scan_range is None
        else (
            lambda: c_nice_sample_scan(edge_masks, n, a_mask, k, args.samples, args.seed)
        ),
        lambda: py_nice_sample_scan(edge_masks, n, a_mask, k, args.samples, args.seed),
        args.repeats,
    )

    tower = geometric_tower(f14(), 1)
    (tg, tk, tell, x_mask, yprefix, yell_bit, aell_mask, gl_mask) = _tower_context(tower)
    t_masks = list(tg.edge_masks)
    t_n = tg.vertex_count
    xy_mask = x_mask | yell_bit
    _row(
        f"tower sampled (v={t_n}, {args.samples} draws)",
        None
        if c_nice_scan_range is None
        else (
            lambda: c_gl_sample_scan(
                t_masks, t_n, yprefix, x_mask, aell_mask, xy_mask, gl_mask,
                tk, tell, args.samples, args.seed,
            )
        ),
        lambda: py_gl_sample_scan(
            t_masks, t_n, yprefix, x_mask, aell_mask, xy_mask, gl_mask,
            tk, tell, args.samples, args.seed,
        ),
        args.repeats,
    )


if __name__ == "__main__":
    main()
