"""Compiled bottom-up engine for the subset table.

Masks are vertex bitmasks. For every connected subset X the table gets the
largest edge count of a spanning connected cactus subgraph of G[X]:
subsets of five or fewer vertices by direct enumeration, cactus subsets at
their own edge count, and everything else by the best two-piece split at a
shared vertex, scanning pieces in a fixed ascending order so the recorded
witness is reproducible. Strict submasks are numerically smaller, so a
single ascending pass finalizes dependencies first.

Status codes: 0 untouched/disconnected, 1 enumerated directly, 2 final,
4 internal failure (no valid split found; callers must treat as a bug).
"""

import numpy as np
from numba import njit

STATUS_UNSET = 0
STATUS_BASE = 1
STATUS_FINAL = 2
STATUS_ERROR = 4

BASE_CAP = 5  # largest subset solved by direct enumeration


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _bit_index(b):
    v = 0
    while b > 1:
        b >>= 1
        v += 1
    return v


@njit(cache=True)
def solve_all(n, eu, ev, adj_mask):
    size = 1 << n
    m = eu.shape[0]
    edges_in = np.zeros(size, np.int16)
    conn = np.zeros(size, np.uint8)
    value = np.full(size, -1, np.int16)
    wx = np.full(size, -1, np.int8)
    wa = np.zeros(size, np.int32)
    status = np.zeros(size, np.uint8)

    for mask in range(1, size):
        b = mask & (-mask)
        v = _bit_index(b)
        rest = mask ^ b
        edges_in[mask] = edges_in[rest] + _popcount(adj_mask[v] & rest)

    for mask in range(1, size):
        b = mask & (-mask)
        reach = b
        frontier = b
        while frontier != 0:
            nxt = 0
            f = frontier
            while f != 0:
                lb = f & (-f)
                nxt |= adj_mask[_bit_index(lb)]
                f ^= lb
            frontier = nxt & mask & ~reach
            reach |= frontier
        if reach == mask:
            conn[mask] = 1

    # adjacency in CSR form for the subgraph scans
    deg = np.zeros(n, np.int32)
    for j in range(m):
        deg[eu[j]] += 1
        deg[ev[j]] += 1
    adj_start = np.zeros(n + 1, np.int32)
    for v in range(n):
        adj_start[v + 1] = adj_start[v] + deg[v]
    adj_v = np.zeros(2 * m + 1, np.int32)
    adj_e = np.zeros(2 * m + 1, np.int32)
    fill = adj_start[:n].copy()
    for j in range(m):
        u = eu[j]
        v = ev[j]
        adj_v[fill[u]] = v
        adj_e[fill[u]] = j
        fill[u] += 1
        adj_v[fill[v]] = u
        adj_e[fill[v]] = j
        fill[v] += 1

    # scratch for the full-subgraph cactus scan
    disc = np.full(n, -1, np.int32)
    par_v = np.full(n, -1, np.int32)
    par_e = np.full(n, -1, np.int32)
    cover = np.zeros(n, np.int32)
    preord = np.zeros(n, np.int32)
    stk_v = np.zeros(n, np.int32)
    stk_i = np.zeros(n, np.int32)

    # scratch for the small-subset enumeration
    le_u = np.zeros(16, np.int32)
    le_v = np.zeros(16, np.int32)
    vslot = np.zeros(n, np.int32)
    sdeg = np.zeros(8, np.int32)
    sadj_s = np.zeros(96, np.int32)
    sadj_e = np.zeros(96, np.int32)
    sdisc = np.zeros(8, np.int32)
    spar_v = np.zeros(8, np.int32)
    spar_e = np.zeros(8, np.int32)
    scover = np.zeros(8, np.int32)
    spre = np.zeros(8, np.int32)
    sstk_v = np.zeros(8, np.int32)
    sstk_i = np.zeros(8, np.int32)

    for mask in range(1, size):
        if conn[mask] == 0:
            continue
        pc = _popcount(mask)
        if pc <= BASE_CAP:
            cnt = 0
            mm = mask
            while mm != 0:
                lb = mm & (-mm)
                vslot[_bit_index(lb)] = cnt
                cnt += 1
                mm ^= lb
            lm = 0
            for j in range(m):
                if ((mask >> eu[j]) & 1) == 1 and ((mask >> ev[j]) & 1) == 1:
                    le_u[lm] = vslot[eu[j]]
                    le_v[lm] = vslot[ev[j]]
                    lm += 1
            best = pc - 1  # some spanning tree always qualifies
            for sub in range(1 << lm):
                s = _popcount(sub)
                if s <= best:
                    continue
                for t in range(cnt):
                    sdeg[t] = 0
                    sdisc[t] = -1
                    scover[t] = 0
                for j in range(lm):
                    if ((sub >> j) & 1) == 1:
                        a = le_u[j]
                        b2 = le_v[j]
                        sadj_s[a * 12 + sdeg[a]] = b2
                        sadj_e[a * 12 + sdeg[a]] = j
                        sdeg[a] += 1
                        sadj_s[b2 * 12 + sdeg[b2]] = a
                        sadj_e[b2 * 12 + sdeg[b2]] = j
                        sdeg[b2] += 1
                sdisc[0] = 0
                spar_e[0] = -1
                spar_v[0] = -1
                sstk_v[0] = 0
                sstk_i[0] = 0
                sp = 0
                timer = 1
                npre = 1
                spre[0] = 0
                while sp >= 0:
                    vtx = sstk_v[sp]
                    ii = sstk_i[sp]
                    if ii < sdeg[vtx]:
                        sstk_i[sp] = ii + 1
                        w = sadj_s[vtx * 12 + ii]
                        ej = sadj_e[vtx * 12 + ii]
                        if ej == spar_e[vtx]:
                            continue
                        if sdisc[w] == -1:
                            sdisc[w] = timer
                            timer += 1
                            spar_e[w] = ej
                            spar_v[w] = vtx
                            sp += 1
                            sstk_v[sp] = w
                            sstk_i[sp] = 0
                            spre[npre] = w
                            npre += 1
                        elif sdisc[w] < sdisc[vtx]:
                            scover[vtx] += 1
                            scover[w] -= 1
                    else:
                        sp -= 1
                if npre != cnt:
                    continue
                ok = True
                for t in range(npre - 1, 0, -1):
                    w = spre[t]
                    if scover[w] > 1:
                        ok = False
                        break
                    scover[spar_v[w]] += scover[w]
                if ok:
                    best = s
            value[mask] = best
            status[mask] = STATUS_BASE
        else:
            cactus = False
            if edges_in[mask] <= (3 * (pc - 1)) // 2:
                mm = mask
                while mm != 0:
                    lb = mm & (-mm)
                    vv = _bit_index(lb)
                    disc[vv] = -1
                    cover[vv] = 0
                    mm ^= lb
                root = _bit_index(mask & (-mask))
                disc[root] = 0
                par_e[root] = -1
                par_v[root] = -1
                stk_v[0] = root
                stk_i[0] = adj_start[root]
                sp = 0
                timer = 1
                npre = 1
                preord[0] = root
                while sp >= 0:
                    vtx = stk_v[sp]
                    ii = stk_i[sp]
                    if ii < adj_start[vtx + 1]:
                        stk_i[sp] = ii + 1
                        w = adj_v[ii]
                        ej = adj_e[ii]
                        if ((mask >> w) & 1) == 0 or ej == par_e[vtx]:
                            continue
                        if disc[w] == -1:
                            disc[w] = timer
                            timer += 1
                            par_e[w] = ej
                            par_v[w] = vtx
                            sp += 1
                            stk_v[sp] = w
                            stk_i[sp] = adj_start[w]
                            preord[npre] = w
                            npre += 1
                        elif disc[w] < disc[vtx]:
                            cover[vtx] += 1
                            cover[w] -= 1
                    else:
                        sp -= 1
                cactus = True
                for t in range(npre - 1, 0, -1):
                    w = preord[t]
                    if cover[w] > 1:
                        cactus = False
                        break
                    cover[par_v[w]] += cover[w]
            if cactus:
                value[mask] = edges_in[mask]
                status[mask] = STATUS_FINAL
            else:
                best = -1
                bx = -1
                bA = 0
                mm = mask
                while mm != 0:
                    xb = mm & (-mm)
                    mm ^= xb
                    x = _bit_index(xb)
                    if _popcount(adj_mask[x] & (mask ^ xb)) < 2:
                        continue
                    rest = mask ^ xb
                    lowb = rest & (-rest)
                    high = rest ^ lowb
                    sub = 0
                    while True:
                        part = sub | lowb
                        if part != rest:
                            s1 = part | xb
                            s2 = (rest ^ part) | xb
                            if conn[s1] == 1 and conn[s2] == 1:
                                val = value[s1] + value[s2]
                                if val > best:
                                    best = val
                                    bx = x
                                    bA = part
                        if sub == high:
                            break
                        sub = (sub - high) & high
                value[mask] = best
                wx[mask] = bx
                wa[mask] = bA
                status[mask] = STATUS_FINAL if best >= 0 else STATUS_ERROR

    return edges_in, conn, value, wx, wa, status
