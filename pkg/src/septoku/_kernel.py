"""JIT-compiled exhaustive search over region-constrained boards.

The search is depth-first over cells (minimum-remaining-candidates, ties to
the lowest cell index, values ascending) with two propagation rules applied
to a fixpoint after every decision:

* naked singles -- a cell whose candidate mask drops to one bit is assigned;
* hidden singles -- any 7-cell region must contain *all* seven symbols
  (at-most-one per symbol over exactly seven cells forces exactly-one), so a
  symbol with a single remaining home in such a region is placed there.

State is snapshotted per depth instead of trailed; boards have at most 73
cells, so a snapshot is tiny and restores are branch-free copies.

Everything here is deterministic: identical inputs give identical solution
order, node counts and statuses.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# enumeration statuses
COMPLETE = 0
CAPPED = 1
OVERFLOW = 2

FULL = 127  # seven candidate bits


@njit(cache=True)
def _propagate(c0, v0, values, cand, cnt, queue_c, queue_v,
               reg_ptr, reg_cell, cellreg_ptr, cellreg_idx,
               exact_ids, cell_exact_ptr, cell_exact_idx):
    """Assign c0 := v0 and propagate to a fixpoint.

    Returns the number of newly assigned cells, or -1 on contradiction.
    ``cnt[e, s]`` tracks how many cells of exact region slot ``e`` still admit
    symbol ``s + 1``; it must be consistent with ``cand`` on entry.
    """
    qh = 0
    qt = 1
    queue_c[0] = c0
    queue_v[0] = v0
    assigned = 0
    while qh < qt:
        c = queue_c[qh]
        v = queue_v[qh]
        qh += 1
        if values[c] != 0:
            if values[c] != v:
                return -1
            continue
        bit = 1 << (v - 1)
        if cand[c] & bit == 0:
            return -1
        values[c] = v
        assigned += 1

        # withdrawing c's other candidates updates the exact-region tallies
        rem = cand[c] & ~bit
        cand[c] = bit
        s = 0
        while rem:
            if rem & 1:
                for k in range(cell_exact_ptr[c], cell_exact_ptr[c + 1]):
                    e = cell_exact_idx[k]
                    cnt[e, s] -= 1
                    if cnt[e, s] == 0:
                        return -1
                    if cnt[e, s] == 1:
                        r = exact_ids[e]
                        sbit = 1 << s
                        for j in range(reg_ptr[r], reg_ptr[r + 1]):
                            p = reg_cell[j]
                            if cand[p] & sbit:
                                if values[p] == 0:
                                    queue_c[qt] = p
                                    queue_v[qt] = s + 1
                                    qt += 1
                                break
            rem >>= 1
            s += 1

        # eliminate v from every cell sharing a region with c
        for k in range(cellreg_ptr[c], cellreg_ptr[c + 1]):
            r = cellreg_idx[k]
            for j in range(reg_ptr[r], reg_ptr[r + 1]):
                p = reg_cell[j]
                if p == c or cand[p] & bit == 0:
                    continue
                if values[p] != 0:
                    return -1  # assigned peer already holds v
                nc = cand[p] & ~bit
                if nc == 0:
                    return -1
                cand[p] = nc
                for k2 in range(cell_exact_ptr[p], cell_exact_ptr[p + 1]):
                    e = cell_exact_idx[k2]
                    cnt[e, v - 1] -= 1
                    if cnt[e, v - 1] == 0:
                        return -1
                    if cnt[e, v - 1] == 1:
                        r2 = exact_ids[e]
                        for j2 in range(reg_ptr[r2], reg_ptr[r2 + 1]):
                            p2 = reg_cell[j2]
                            if cand[p2] & bit:
                                if values[p2] == 0:
                                    queue_c[qt] = p2
                                    queue_v[qt] = v
                                    qt += 1
                                break
                if nc & (nc - 1) == 0:
                    vv = 1
                    t = nc
                    while t > 1:
                        t >>= 1
                        vv += 1
                    queue_c[qt] = p
                    queue_v[qt] = vv
                    qt += 1
    return assigned


@njit(cache=True)
def enumerate_boards(n_cells, reg_ptr, reg_cell, cellreg_ptr, cellreg_idx,
                     exact_ids, cell_exact_ptr, cell_exact_idx,
                     seeds, cap, tie_high, out):
    """Enumerate completions of the seeded board into ``out``.

    Returns (count, nodes, status).  ``cap == 0`` means unlimited.  When the
    buffer overflows, counting continues but storing stops and the status is
    OVERFLOW, so callers can retry with a bigger buffer.
    """
    n_exact = exact_ids.shape[0]
    values = np.zeros(n_cells, dtype=np.int8)
    cand = np.full(n_cells, FULL, dtype=np.int16)
    cnt = np.zeros((max(n_exact, 1), 7), dtype=np.int16)
    for e in range(n_exact):
        r = exact_ids[e]
        for s in range(7):
            cnt[e, s] = reg_ptr[r + 1] - reg_ptr[r]

    qcap = 2 * n_cells + 7 * n_exact + 2
    queue_c = np.zeros(qcap, dtype=np.int32)
    queue_v = np.zeros(qcap, dtype=np.int8)

    unassigned = n_cells
    for i in range(seeds.shape[0]):
        got = _propagate(seeds[i, 0], seeds[i, 1], values, cand, cnt,
                         queue_c, queue_v,
                         reg_ptr, reg_cell, cellreg_ptr, cellreg_idx,
                         exact_ids, cell_exact_ptr, cell_exact_idx)
        if got < 0:
            return 0, 0, COMPLETE
        unassigned -= got

    maxd = n_cells + 1
    snap_values = np.zeros((maxd, n_cells), dtype=np.int8)
    snap_cand = np.zeros((maxd, n_cells), dtype=np.int16)
    snap_cnt = np.zeros((maxd, max(n_exact, 1), 7), dtype=np.int16)
    snap_left = np.zeros(maxd, dtype=np.int32)
    chosen = np.full(maxd, -1, dtype=np.int32)
    tried = np.zeros(maxd, dtype=np.int16)

    depth = 0
    snap_values[0] = values
    snap_cand[0] = cand
    snap_cnt[0] = cnt
    snap_left[0] = unassigned

    count = 0
    nodes = 0
    overflowed = False
    while depth >= 0:
        values[:] = snap_values[depth]
        cand[:] = snap_cand[depth]
        cnt[:] = snap_cnt[depth]

        if snap_left[depth] == 0:
            if count < out.shape[0]:
                out[count] = values
            else:
                overflowed = True
            count += 1
            if cap > 0 and count >= cap:
                return count, nodes, CAPPED
            depth -= 1
            continue

        if chosen[depth] < 0:
            best = -1
            bestn = 8
            if tie_high:
                rng = range(n_cells - 1, -1, -1)
            else:
                rng = range(n_cells)
            for c in rng:
                if values[c] == 0:
                    m = cand[c]
                    pc = 0
                    while m:
                        pc += m & 1
                        m >>= 1
                    if pc < bestn:
                        bestn = pc
                        best = c
                        if pc <= 1:
                            break
            chosen[depth] = best

        c = chosen[depth]
        avail = cand[c] & ~tried[depth]
        if avail == 0:
            chosen[depth] = -1
            tried[depth] = 0
            depth -= 1
            continue
        bit = avail & (-avail)
        tried[depth] |= bit
        v = 1
        t = bit
        while t > 1:
            t >>= 1
            v += 1
        nodes += 1
        got = _propagate(c, v, values, cand, cnt, queue_c, queue_v,
                         reg_ptr, reg_cell, cellreg_ptr, cellreg_idx,
                         exact_ids, cell_exact_ptr, cell_exact_idx)
        if got >= 0:
            left = snap_left[depth] - got
            depth += 1
            snap_values[depth] = values
            snap_cand[depth] = cand
            snap_cnt[depth] = cnt
            snap_left[depth] = left
            chosen[depth] = -1
            tried[depth] = 0

    return count, nodes, OVERFLOW if overflowed else COMPLETE
