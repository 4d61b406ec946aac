"""Kernel dispatch.

Routes each call to the compiled module when it is importable and the
host fits in one 64-bit word, and to the numpy fallback otherwise. Both
implementations return identical values, so the choice never shows up in
results, only in runtime. Code that wants a specific backend (tests,
benchmarks) imports `sparsehg._kernels` / `sparsehg._kernels_py` directly.
"""

from __future__ import annotations

from typing import Optional, Sequence

from sparsehg import _kernels_py

try:
    from sparsehg import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

HAVE_COMPILED = _compiled is not None

GAMMA = _kernels_py.GAMMA
MASK64 = _kernels_py.MASK64
mix64 = _kernels_py.mix64

Violation = _kernels_py.Violation
ScanResult = _kernels_py.ScanResult


def backend_name(n: int = 0) -> str:
    """Name of the backend a call for an n-vertex host would use."""
    return "compiled" if (_compiled is not None and n <= 64) else "python"


def _pick(n: int):
    if _compiled is not None and n <= 64:
        return _compiled
    return _kernels_py


def induced_count(edge_masks: Sequence[int], mask: int, n: int) -> int:
    return _pick(n).induced_count(edge_masks, mask)


def nice_scan_range(edge_masks, n, a_mask, k, start, stop) -> ScanResult:
    return _pick(n).nice_scan_range(edge_masks, n, a_mask, k, start, stop)


def nice_check_masks(edge_masks, n, a_mask, k, masks) -> ScanResult:
    return _pick(n).nice_check_masks(edge_masks, n, a_mask, k, masks)


def nice_sample_scan(edge_masks, n, a_mask, k, samples, seed, index_offset=0) -> ScanResult:
    return _pick(n).nice_sample_scan(edge_masks, n, a_mask, k, samples, seed, index_offset)


def gl_scan_range(
    edge_masks, free_positions, base_mask, x_mask, aell_mask, xy_mask, gl_mask,
    k, ell, start, stop,
) -> ScanResult:
    n_eff = (base_mask | x_mask | aell_mask | xy_mask | gl_mask).bit_length()
    if free_positions:
        n_eff = max(n_eff, max(free_positions) + 1)
    return _pick(n_eff).gl_scan_range(
        edge_masks, free_positions, base_mask, x_mask, aell_mask, xy_mask,
        gl_mask, k, ell, start, stop,
    )


def gl_check_masks(edge_masks, n, x_mask, aell_mask, xy_mask, gl_mask, k, ell, masks) -> ScanResult:
    return _pick(n).gl_check_masks(
        edge_masks, n, x_mask, aell_mask, xy_mask, gl_mask, k, ell, masks
    )


def gl_sample_scan(
    edge_masks, n, yprefix_mask, x_mask, aell_mask, xy_mask, gl_mask, k, ell,
    samples, seed, index_offset=0,
) -> ScanResult:
    return _pick(n).gl_sample_scan(
        edge_masks, n, yprefix_mask, x_mask, aell_mask, xy_mask, gl_mask, k,
        ell, samples, seed, index_offset,
    )
