"""Compiled census kernels.

Each kernel writes one output row per anchor event inside the parallel
loop; rows are summed after the loop, so totals are bit-identical for
any thread count. Node ids are dense ints; per-node incident event
positions are stored CSR-style, ascending, which keeps timestamps
non-decreasing along each slice and allows binary search.
"""

from __future__ import annotations

import numpy as np
from numba import config as _numba_config
from numba import njit, prange, set_num_threads

_BIG = np.int64(1) << np.int64(62)


def available_threads() -> int:
    return int(_numba_config.NUMBA_NUM_THREADS)


def resolve_threads(threads: int | None) -> int:
    """Clamp a requested thread count to what the runtime can supply."""
    limit = available_threads()
    if threads is None:
        return limit
    return max(1, min(int(threads), limit))


def encode_layer(layer):
    """Dense int encoding of a layer's events plus a CSR incident index."""
    events = layer.events
    names = sorted({n for e in events for n in e.edge})
    code = {name: i for i, name in enumerate(names)}
    e_count = len(events)
    ts = np.empty(e_count, np.int64)
    src = np.empty(e_count, np.int64)
    dst = np.empty(e_count, np.int64)
    for i, e in enumerate(events):
        ts[i] = e.t
        src[i] = code[e.source]
        dst[i] = code[e.target]
    n = len(names)
    node_all = np.concatenate((src, dst))
    pos_all = np.concatenate((np.arange(e_count, dtype=np.int64),) * 2)
    order = np.lexsort((pos_all, node_all))
    inc_idx = pos_all[order]
    counts = np.bincount(node_all, minlength=n)
    inc_ptr = np.zeros(n + 1, np.int64)
    np.cumsum(counts, out=inc_ptr[1:])
    return ts, src, dst, inc_ptr, inc_idx


@njit(cache=True, inline="always")
def _pair_code(u1, v1, u2, v2):
    # Index into the canonical pair-class order; order of checks matters.
    if u1 == u2 and v1 == v2:
        return 0
    if u1 == v2 and v1 == u2:
        return 1
    if v1 == v2:
        return 2
    if u1 == u2:
        return 3
    if v1 == u2:
        return 4
    if u1 == v2:
        return 5
    return -1


@njit(cache=True, inline="always")
def _first_after(ts, inc_idx, lo, hi, t0):
    # First slot in inc_idx[lo:hi] whose event time is strictly > t0.
    a, b = lo, hi
    while a < b:
        mid = (a + b) >> 1
        if ts[inc_idx[mid]] <= t0:
            a = mid + 1
        else:
            b = mid
    return a


@njit(cache=True, parallel=True)
def _census2_kernel(ts, src, dst, inc_ptr, inc_idx, bound, out):
    e_count = ts.shape[0]
    for i in prange(e_count):
        t0 = ts[i]
        u = src[i]
        v = dst[i]
        for side in range(2):
            node = u if side == 0 else v
            lo = inc_ptr[node]
            hi = inc_ptr[node + 1]
            start = _first_after(ts, inc_idx, lo, hi, t0)
            for p in range(start, hi):
                j = inc_idx[p]
                if ts[j] - t0 > bound:
                    break
                # events seen via v that also touch u were counted on side 0
                if side == 1 and (src[j] == u or dst[j] == u):
                    continue
                code = _pair_code(u, v, src[j], dst[j])
                if code >= 0:
                    out[i, code] += 1


@njit(cache=True, parallel=True)
def _census3_kernel(ts, src, dst, inc_ptr, inc_idx, dc, dw, out):
    e_count = ts.shape[0]
    bound1 = dc if dc < dw else dw
    for i in prange(e_count):
        t0 = ts[i]
        a = src[i]
        b = dst[i]
        for side in range(2):
            node = a if side == 0 else b
            lo = inc_ptr[node]
            hi = inc_ptr[node + 1]
            start = _first_after(ts, inc_idx, lo, hi, t0)
            for p in range(start, hi):
                j = inc_idx[p]
                if ts[j] - t0 > bound1:
                    break
                if side == 1 and (src[j] == a or dst[j] == a):
                    continue
                first = _pair_code(a, b, src[j], dst[j])
                if first < 0:
                    continue
                t1 = ts[j]
                # third node of the first two events, if any
                c = np.int64(-1)
                if src[j] != a and src[j] != b:
                    c = src[j]
                elif dst[j] != a and dst[j] != b:
                    c = dst[j]
                upper = t1 + dc
                if t0 + dw < upper:
                    upper = t0 + dw
                width = 2 if c < 0 else 3
                for which in range(width):
                    if which == 0:
                        node2 = a
                    elif which == 1:
                        node2 = b
                    else:
                        node2 = c
                    lo2 = inc_ptr[node2]
                    hi2 = inc_ptr[node2 + 1]
                    start2 = _first_after(ts, inc_idx, lo2, hi2, t1)
                    for q in range(start2, hi2):
                        k = inc_idx[q]
                        if ts[k] > upper:
                            break
                        sk = src[k]
                        dk = dst[k]
                        # each third event is charged to its first listed node
                        if which >= 1 and (sk == a or dk == a):
                            continue
                        if which >= 2 and (sk == b or dk == b):
                            continue
                        if c >= 0:
                            if sk != a and sk != b and sk != c:
                                continue
                            if dk != a and dk != b and dk != c:
                                continue
                        second = _pair_code(src[j], dst[j], sk, dk)
                        if second >= 0:
                            out[i, first * 6 + second] += 1


def census_counts(layer, m, delta_c, delta_w, threads=None):
    """Class counts array for the m-event census of a directed layer."""
    set_num_threads(resolve_threads(threads))
    ts, src, dst, inc_ptr, inc_idx = encode_layer(layer)
    dc = _BIG if delta_c is None else np.int64(delta_c)
    dw = _BIG if delta_w is None else np.int64(delta_w)
    width = 6 if m == 2 else 36
    out = np.zeros((ts.shape[0], width), np.int64)
    if m == 2:
        _census2_kernel(ts, src, dst, inc_ptr, inc_idx, min(dc, dw), out)
    else:
        _census3_kernel(ts, src, dst, inc_ptr, inc_idx, dc, dw, out)
    return out.sum(axis=0)


def warm_up() -> None:
    """Trigger kernel compilation on a toy input (useful before timing)."""
    ts = np.array([0, 1, 2], np.int64)
    src = np.array([0, 1, 0], np.int64)
    dst = np.array([1, 2, 1], np.int64)
    node_all = np.concatenate((src, dst))
    pos_all = np.concatenate((np.arange(3, dtype=np.int64),) * 2)
    order = np.lexsort((pos_all, node_all))
    inc_idx = pos_all[order]
    inc_ptr = np.zeros(4, np.int64)
    np.cumsum(np.bincount(node_all, minlength=3), out=inc_ptr[1:])
    out2 = np.zeros((3, 6), np.int64)
    out3 = np.zeros((3, 36), np.int64)
    _census2_kernel(ts, src, dst, inc_ptr, inc_idx, _BIG, out2)
    _census3_kernel(ts, src, dst, inc_ptr, inc_idx, _BIG, _BIG, out3)
