"""Fallback subset-check kernels (no compiled code).

Mirrors the compiled module `sparsehg._kernels` function for function and
must return bit-identical results: the acceptance reports are compared
across paths. Hosts with at most 64 vertices run vectorized over numpy
uint64 batches; wider hosts fall back to plain Python integers, which are
arbitrary-width masks already.

The sampling stream is splitmix64: sample i is a pure function of
(seed, index_offset + i), so partitioning a run across workers cannot
change the stream.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

_BATCH = 1 << 15

_U64 = np.uint64
_C1 = _U64(0x5555555555555555)
_C2 = _U64(0x3333333333333333)
_C4 = _U64(0x0F0F0F0F0F0F0F0F)
_CM = _U64(0x0101010101010101)

# A violation is (position, u_mask, code, delta, bound): position orders
# violations for worker merging (the subset mask for range scans, the index
# for batch/sampled scans); code is the violated condition number.
Violation = tuple[int, int, int, int, int]
ScanResult = tuple[int, Optional[Violation]]


def mix64(x: int) -> int:
    """Scalar splitmix64 finalizer over Python ints."""
    x &= MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & MASK64
    x ^= x >> 31
    return x


def _mix_vec(z: np.ndarray) -> np.ndarray:
    z = z.copy()
    z ^= z >> _U64(30)
    z *= _U64(0xBF58476D1CE4E5B9)
    z ^= z >> _U64(27)
    z *= _U64(0x94D049BB133111EB)
    z ^= z >> _U64(31)
    return z


def _popcount_vec(x: np.ndarray) -> np.ndarray:
    x = x - ((x >> _U64(1)) & _C1)
    x = (x & _C2) + ((x >> _U64(2)) & _C2)
    x = (x + (x >> _U64(4))) & _C4
    return (x * _CM) >> _U64(56)


def induced_count(edge_masks: Sequence[int], mask: int) -> int:
    return sum(1 for m in edge_masks if m & mask == m)


# -- niceness conditions -----------------------------------------------------


def _nice_one(edge_masks: Sequence[int], a_mask: int, k: int, u: int):
    """Check one subset; returns (code, delta, bound) or None."""
    d = u.bit_count() - induced_count(edge_masks, u)
    au = (u & a_mask).bit_count()
    bound = au - (1 if (u & a_mask) == a_mask else 0)
    if d < bound:
        return (1, d, bound)
    if au <= k - 1 and (u & ~a_mask) != 0 and d < au + 1:
        return (2, d, au + 1)
    return None


def _nice_batch(edge_u64: np.ndarray, a: np.uint64, k: int, u: np.ndarray):
    """Vectorized check; returns index of first violation or -1, plus arrays."""
    eu = np.zeros(len(u), dtype=np.uint64)
    for m in edge_u64:
        eu += (u & m) == m
    d = _popcount_vec(u).astype(np.int64) - eu.astype(np.int64)
    au = _popcount_vec(u & a).astype(np.int64)
    bound1 = au - ((u & a) == a)
    v1 = d < bound1
    v2 = (au <= k - 1) & ((u & ~a) != 0) & (d < au + 1)
    bad = np.flatnonzero(v1 | v2)
    if len(bad) == 0:
        return -1, 0, 0, 0
    i = int(bad[0])
    if v1[i]:
        return i, 1, int(d[i]), int(bound1[i])
    return i, 2, int(d[i]), int(au[i]) + 1


def nice_scan_range(
    edge_masks: Sequence[int], n: int, a_mask: int, k: int, start: int, stop: int
) -> ScanResult:
    """Exhaustive scan of subset masks in [start, stop), canonical order."""
    if n <= 64:
        edge_u64 = np.array(edge_masks, dtype=np.uint64)
        a = _U64(a_mask)
        pos = start
        while pos < stop:
            hi = min(pos + _BATCH, stop)
            u = np.arange(pos, hi, dtype=np.uint64)
            i, code, d, bound = _nice_batch(edge_u64, a, k, u)
            if i >= 0:
                mask = pos + i
                return (mask - start + 1, (mask, mask, code, d, bound))
            pos = hi
        return (stop - start, None)
    for u in range(start, stop):
        hit = _nice_one(edge_masks, a_mask, k, u)
        if hit is not None:
            return (u - start + 1, (u, u, *hit))
    return (stop - start, None)


def nice_check_masks(
    edge_masks: Sequence[int], n: int, a_mask: int, k: int, masks: Sequence[int]
) -> ScanResult:
    """Check an explicit list of subset masks, in order."""
    if n <= 64:
        if len(masks) == 0:
            return (0, None)
        edge_u64 = np.array(edge_masks, dtype=np.uint64)
        u = np.array(masks, dtype=np.uint64)
        i, code, d, bound = _nice_batch(edge_u64, _U64(a_mask), k, u)
        if i >= 0:
            return (i + 1, (i, int(masks[i]), code, d, bound))
        return (len(masks), None)
    for i, u in enumerate(masks):
        hit = _nice_one(edge_masks, a_mask, k, u)
        if hit is not None:
            return (i + 1, (i, u, *hit))
    return (len(masks), None)


def nice_sample_scan(
    edge_masks: Sequence[int],
    n: int,
    a_mask: int,
    k: int,
    samples: int,
    seed: int,
    index_offset: int = 0,
) -> ScanResult:
    """Check `samples` seeded uniform subsets (splitmix64 stream)."""
    if n <= 64:
        edge_u64 = np.array(edge_masks, dtype=np.uint64)
        a = _U64(a_mask)
        nmask = _U64((1 << n) - 1)
        seed_u = _U64(seed & MASK64)
        gamma = _U64(GAMMA)
        done = 0
        while done < samples:
            cnt = min(_BATCH, samples - done)
            idx = np.arange(index_offset + done + 1, index_offset + done + cnt + 1, dtype=np.uint64)
            u = _mix_vec(seed_u + idx * gamma) & nmask
            i, code, d, bound = _nice_batch(edge_u64, a, k, u)
            if i >= 0:
                pos = index_offset + done + i
                return (done + i + 1, (pos, int(u[i]), code, d, bound))
            done += cnt
        return (samples, None)
    words = (n + 63) // 64
    for i in range(samples):
        u = 0
        for w in range(words):
            u |= mix64((seed + ((index_offset + i) * words + w + 1) * GAMMA) & MASK64) << (64 * w)
        u &= (1 << n) - 1
        hit = _nice_one(edge_masks, a_mask, k, u)
        if hit is not None:
            return (i + 1, (index_offset + i, u, *hit))
    return (samples, None)


# -- conditional bounds for tower graphs --------------------------------------


def _gl_one(edge_masks, x_mask, aell_mask, xy_mask, gl_mask, k, ell, u):
    d = u.bit_count() - induced_count(edge_masks, u)
    aell = (u & aell_mask).bit_count()
    x = (u & x_mask).bit_count()
    bound = aell - (1 if (u & xy_mask) == xy_mask else 0)
    if d < bound:
        return (1, d, bound)
    if x <= k - 2 and (u & ~aell_mask) != 0 and d < aell + 1:
        return (2, d, aell + 1)
    if x >= k - 1 and (u & gl_mask & ~x_mask) != 0 and d < k + ell:
        return (3, d, k + ell)
    return None


def _gl_batch(edge_u64, x, aell, xy, gl, k, ell, u):
    eu = np.zeros(len(u), dtype=np.uint64)
    for m in edge_u64:
        eu += (u & m) == m
    d = _popcount_vec(u).astype(np.int64) - eu.astype(np.int64)
    au = _popcount_vec(u & aell).astype(np.int64)
    xu = _popcount_vec(u & x).astype(np.int64)
    bound1 = au - ((u & xy) == xy)
    v1 = d < bound1
    v2 = (xu <= k - 2) & ((u & ~aell) != 0) & (d < au + 1)
    v3 = (xu >= k - 1) & ((u & gl & ~x) != 0) & (d < k + ell)
    bad = np.flatnonzero(v1 | v2 | v3)
    if len(bad) == 0:
        return -1, 0, 0, 0
    i = int(bad[0])
    if v1[i]:
        return i, 1, int(d[i]), int(bound1[i])
    if v2[i]:
        return i, 2, int(d[i]), int(au[i]) + 1
    return i, 3, int(d[i]), k + ell


def gl_scan_range(
    edge_masks: Sequence[int],
    free_positions: Sequence[int],
    base_mask: int,
    x_mask: int,
    aell_mask: int,
    xy_mask: int,
    gl_mask: int,
    k: int,
    ell: int,
    start: int,
    stop: int,
) -> ScanResult:
    """Exhaustive scan over U = base_mask | scatter(i, free_positions)."""
    n_eff = max((max(free_positions) + 1 if free_positions else 0), base_mask.bit_length())
    if n_eff <= 64:
        edge_u64 = np.array(edge_masks, dtype=np.uint64)
        args = (_U64(x_mask), _U64(aell_mask), _U64(xy_mask), _U64(gl_mask))
        pos = start
        while pos < stop:
            hi = min(pos + _BATCH, stop)
            i_arr = np.arange(pos, hi, dtype=np.uint64)
            u = np.full(len(i_arr), base_mask, dtype=np.uint64)
            for b, p in enumerate(free_positions):
                u |= ((i_arr >> _U64(b)) & _U64(1)) << _U64(p)
            i, code, d, bound = _gl_batch(edge_u64, *args, k, ell, u)
            if i >= 0:
                return (pos + i - start + 1, (pos + i, int(u[i]), code, d, bound))
            pos = hi
        return (stop - start, None)
    for i in range(start, stop):
        u = base_mask
        for b, p in enumerate(free_positions):
            if (i >> b) & 1:
                u |= 1 << p
        hit = _gl_one(edge_masks, x_mask, aell_mask, xy_mask, gl_mask, k, ell, u)
        if hit is not None:
            return (i - start + 1, (i, u, *hit))
    return (stop - start, None)


def gl_check_masks(
    edge_masks, n, x_mask, aell_mask, xy_mask, gl_mask, k, ell, masks
) -> ScanResult:
    if n <= 64:
        if len(masks) == 0:
            return (0, None)
        edge_u64 = np.array(edge_masks, dtype=np.uint64)
        u = np.array(masks, dtype=np.uint64)
        i, code, d, bound = _gl_batch(
            edge_u64, _U64(x_mask), _U64(aell_mask), _U64(xy_mask), _U64(gl_mask), k, ell, u
        )
        if i >= 0:
            return (i + 1, (i, int(masks[i]), code, d, bound))
        return (len(masks), None)
    for i, u in enumerate(masks):
        hit = _gl_one(edge_masks, x_mask, aell_mask, xy_mask, gl_mask, k, ell, u)
        if hit is not None:
            return (i + 1, (i, u, *hit))
    return (len(masks), None)


def gl_sample_scan(
    edge_masks,
    n,
    yprefix_mask,
    x_mask,
    aell_mask,
    xy_mask,
    gl_mask,
    k,
    ell,
    samples,
    seed,
    index_offset: int = 0,
) -> ScanResult:
    """Seeded uniform supersets of the y-prefix: draw U, then OR the prefix in."""
    if n <= 64:
        edge_u64 = np.array(edge_masks, dtype=np.uint64)
        args = (_U64(x_mask), _U64(aell_mask), _U64(xy_mask), _U64(gl_mask))
        nmask = _U64((1 << n) - 1)
        ypre = _U64(yprefix_mask)
        seed_u = _U64(seed & MASK64)
        gamma = _U64(GAMMA)
        done = 0
        while done < samples:
            cnt = min(_BATCH, samples - done)
            idx = np.arange(index_offset + done + 1, index_offset + done + cnt + 1, dtype=np.uint64)
            u = (_mix_vec(seed_u + idx * gamma) & nmask) | ypre
            i, code, d, bound = _gl_batch(edge_u64, *args, k, ell, u)
            if i >= 0:
                pos = index_offset + done + i
                return (done + i + 1, (pos, int(u[i]), code, d, bound))
            done += cnt
        return (samples, None)
    words = (n + 63) // 64
    for i in range(samples):
        u = 0
        for w in range(words):
            u |= mix64((seed + ((index_offset + i) * words + w + 1) * GAMMA) & MASK64) << (64 * w)
        u = (u & ((1 << n) - 1)) | yprefix_mask
        hit = _gl_one(edge_masks, x_mask, aell_mask, xy_mask, gl_mask, k, ell, u)
        if hit is not None:
            return (i + 1, (index_offset + i, u, *hit))
    return (samples, None)
