"""Numba kernels for the bitset maximum-clique search.

All bit rows are little-endian ``uint64`` words; vertex ``v`` lives in word
``v >> 6`` at bit ``v & 63``.  Every constant mixed into a ``uint64``
expression is cast first: numba promotes ``uint64 op int64`` to float.
"""

import numpy as np
from numba import njit

U0 = np.uint64(0)
U1 = np.uint64(1)
M1 = np.uint64(0x5555555555555555)
M2 = np.uint64(0x3333333333333333)
M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
H01 = np.uint64(0x0101010101010101)
S1 = np.uint64(1)
S2 = np.uint64(2)
S4 = np.uint64(4)
S56 = np.uint64(56)


@njit(cache=True, inline="always")
def popcount(x):
    x = x - ((x >> S1) & M1)
    x = (x & M2) + ((x >> S2) & M2)
    x = (x + (x >> S4)) & M4
    return np.int64((x * H01) >> S56)


@njit(cache=True, inline="always")
def lowest_bit(x):
    return popcount((x & (~x + U1)) - U1)


@njit(cache=True)
def count_bits(row):
    total = 0
    for w in range(row.shape[0]):
        total += popcount(row[w])
    return total


@njit(cache=True)
def color_sort(adj, prow, kmin, lrow, crow, u, q):
    """Greedy sequential colouring of the candidate set ``prow``.

    Vertices whose colour reaches ``kmin`` are appended to ``lrow``/``crow``
    in non-decreasing colour order.  Returns ``(length, colours_used)``.
    """
    nw = prow.shape[0]
    for w in range(nw):
        u[w] = prow[w]
    k = 0
    length = 0
    remaining = 0
    for w in range(nw):
        remaining += popcount(u[w])
    while remaining > 0:
        k += 1
        for w in range(nw):
            q[w] = u[w]
        for w in range(nw):
            while q[w] != U0:
                b = lowest_bit(q[w])
                v = w * 64 + b
                bit = U1 << np.uint64(b)
                q[w] &= ~bit
                u[w] &= ~bit
                remaining -= 1
                for j in range(w, nw):
                    q[j] &= ~adj[v, j]
                if k >= kmin:
                    lrow[length] = v
                    crow[length] = k
                    length += 1
    return length, k


@njit(cache=True)
def shared_best(incumbent):
    b = incumbent[0]
    for i in range(1, incumbent.shape[0]):
        if incumbent[i] > b:
            b = incumbent[i]
    return b


@njit(cache=True, nogil=True)
def search_root(adj, root, cand, incumbent, slot, stop, node_limit, witness):
    """Find the largest clique containing ``root`` inside ``cand`` + root.

    ``incumbent`` holds one best size per worker; this call only writes
    ``incumbent[slot]`` and reads the maximum over all slots.  When a
    clique larger than the shared best is found it is copied into
    ``witness``.  Returns ``(nodes, completed)``.
    """
    n = adj.shape[0]
    nw = adj.shape[1]
    depth_cap = n + 2
    P = np.zeros((depth_cap, nw), dtype=np.uint64)
    L = np.zeros((depth_cap, n), dtype=np.int32)
    C = np.zeros((depth_cap, n), dtype=np.int32)
    cnt = np.zeros(depth_cap, dtype=np.int64)
    cur = np.zeros(depth_cap, dtype=np.int32)
    u = np.zeros(nw, dtype=np.uint64)
    q = np.zeros(nw, dtype=np.uint64)

    best = shared_best(incumbent)
    nodes = 1
    cur[0] = root
    empty = True
    for w in range(nw):
        P[1, w] = cand[w]
        if cand[w] != U0:
            empty = False
    if empty:
        if best < 1:
            incumbent[slot] = 1
            witness[0] = root
            witness[1:] = -1
        return nodes, True

    kmin = best - 1 + 1
    if kmin < 1:
        kmin = 1
    cnt[1], _ = color_sort(adj, P[1], kmin, L[1], C[1], u, q)
    d = 1
    while d >= 1:
        if stop[0] != 0 or (node_limit > 0 and nodes >= node_limit):
            return nodes, False
        i = cnt[d] - 1
        if i < 0:
            d -= 1
            continue
        best = shared_best(incumbent)
        if d + C[d, i] <= best:
            cnt[d] = 0
            d -= 1
            continue
        v = L[d, i]
        cnt[d] = i
        P[d, v >> 6] &= ~(U1 << np.uint64(v & 63))
        cur[d] = v
        nonempty = False
        for w in range(nw):
            x = P[d, w] & adj[v, w]
            P[d + 1, w] = x
            if x != U0:
                nonempty = True
        nodes += 1
        if not nonempty:
            if d + 1 > best:
                best = d + 1
                incumbent[slot] = best
                for j in range(d + 1):
                    witness[j] = cur[j]
                for j in range(d + 1, witness.shape[0]):
                    witness[j] = -1
        else:
            kmin = best - d
            if kmin < 1:
                kmin = 1
            cnt[d + 1], _ = color_sort(adj, P[d + 1], kmin, L[d + 1], C[d + 1], u, q)
            d += 1
    return nodes, True


@njit(cache=True)
def color_bound(adj, prow):
    """Number of colours used by the greedy colouring of ``prow``."""
    n = adj.shape[0]
    nw = adj.shape[1]
    lrow = np.zeros(n, dtype=np.int32)
    crow = np.zeros(n, dtype=np.int32)
    u = np.zeros(nw, dtype=np.uint64)
    q = np.zeros(nw, dtype=np.uint64)
    _, k = color_sort(adj, prow, 1 << 30, lrow, crow, u, q)
    return k


@njit(cache=True)
def brute_force_alpha(adj_rows, n):
    """Exhaustive include/exclude recursion for the independence number.

    ``adj_rows`` are the *original* graph's rows as ``uint64`` masks
    (order at most 64).  No bounding beyond feasibility.
    """
    best = 0
    stack_cand = np.zeros(n + 2, dtype=np.uint64)
    stack_size = np.zeros(n + 2, dtype=np.int64)
    stack_state = np.zeros(n + 2, dtype=np.int64)
    stack_v = np.zeros(n + 2, dtype=np.int64)
    top = 0
    stack_cand[0] = (U1 << np.uint64(n)) - U1 if n < 64 else ~U0
    stack_size[0] = 0
    stack_state[0] = 0
    while top >= 0:
        cand = stack_cand[top]
        size = stack_size[top]
        if cand == U0:
            if size > best:
                best = size
            top -= 1
            continue
        state = stack_state[top]
        if state == 0:
            v = lowest_bit(cand)
            stack_v[top] = v
            stack_state[top] = 1
            bit = U1 << np.uint64(v)
            # include v
            stack_cand[top + 1] = cand & ~bit & ~adj_rows[v]
            stack_size[top + 1] = size + 1
            stack_state[top + 1] = 0
            top += 1
        elif state == 1:
            v = stack_v[top]
            bit = U1 << np.uint64(v)
            stack_state[top] = 2
            # exclude v
            stack_cand[top + 1] = cand & ~bit
            stack_size[top + 1] = size
            stack_state[top + 1] = 0
            top += 1
        else:
            top -= 1
    return best
