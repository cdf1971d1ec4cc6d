# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels. Same signatures and results as ``_pykernels``."""

import numpy as np
from libc.stdint cimport uint64_t, int64_t

NO_CYCLE = (-1, -1, -1)


cdef inline Py_ssize_t _nwords(Py_ssize_t nbits):
    return max(1, (nbits + 63) >> 6)


def _to_words(rows, Py_ssize_t nbits):
    cdef Py_ssize_t w = _nwords(nbits)
    out = np.zeros((len(rows), w), dtype=np.uint64)
    nbytes = 8 * w
    for i, r in enumerate(rows):
        if r:
            out[i] = np.frombuffer(r.to_bytes(nbytes, "little"), dtype="<u8")
    return out


def _from_words(arr):
    return [int.from_bytes(arr[i].astype("<u8").tobytes(), "little") for i in range(arr.shape[0])]


cdef Py_ssize_t _rref(uint64_t[:, ::1] m, Py_ssize_t ncols, int64_t[::1] pivots) nogil:
    cdef Py_ssize_t nrows = m.shape[0], nw = m.shape[1]
    cdef Py_ssize_t r = 0, col, w, i, j
    cdef uint64_t bit, tmp
    for col in range(ncols):
        if r == nrows:
            break
        w = col >> 6
        bit = (<uint64_t>1) << (col & 63)
        i = r
        while i < nrows and not (m[i, w] & bit):
            i += 1
        if i == nrows:
            continue
        if i != r:
            for j in range(nw):
                tmp = m[i, j]
                m[i, j] = m[r, j]
                m[r, j] = tmp
        for i in range(nrows):
            if i != r and (m[i, w] & bit):
                for j in range(w, nw):
                    m[i, j] ^= m[r, j]
        pivots[r] = col
        r += 1
    return r


def rref(rows, Py_ssize_t ncols):
    m = _to_words(list(rows), ncols)
    piv = np.zeros(max(1, m.shape[0]), dtype=np.int64)
    cdef uint64_t[:, ::1] mv = m
    cdef int64_t[::1] pv = piv
    cdef Py_ssize_t rank
    with nogil:
        rank = _rref(mv, ncols, pv)
    return _from_words(m), [int(p) for p in piv[:rank]]


cdef void _cycle_search(
    Py_ssize_t nv, Py_ssize_t ne, Py_ssize_t nw,
    int64_t[::1] tails, int64_t[::1] heads, uint64_t[:, ::1] labels,
    int64_t[::1] adj_start, int64_t[::1] adj_vert, int64_t[::1] adj_edge,
    int64_t[::1] roots,
    int64_t[::1] depth, int64_t[::1] queue, uint64_t[:, ::1] parity,
    int64_t[::1] result) nogil:
    cdef Py_ssize_t ri, root, head, tail, x, y, e, k, j, a, b
    cdef int64_t dx, length
    cdef int64_t best_len = 2 * nv + 2
    cdef bint nontrivial
    result[0] = -1
    result[1] = -1
    result[2] = -1
    for ri in range(roots.shape[0]):
        root = roots[ri]
        for x in range(nv):
            depth[x] = -1
        depth[root] = 0
        for j in range(nw):
            parity[root, j] = 0
        head = 0
        tail = 1
        queue[0] = root
        while head < tail:
            x = queue[head]
            head += 1
            dx = depth[x] + 1
            if 2 * dx >= best_len:
                break
            for k in range(adj_start[x], adj_start[x + 1]):
                y = adj_vert[k]
                if depth[y] < 0:
                    depth[y] = dx
                    e = adj_edge[k]
                    for j in range(nw):
                        parity[y, j] = parity[x, j] ^ labels[e, j]
                    queue[tail] = y
                    tail += 1
        for e in range(ne):
            a = tails[e]
            b = heads[e]
            if depth[a] < 0 or depth[b] < 0:
                continue
            length = depth[a] + depth[b] + 1
            if length >= best_len:
                continue
            nontrivial = False
            for j in range(nw):
                if parity[a, j] ^ parity[b, j] ^ labels[e, j]:
                    nontrivial = True
                    break
            if nontrivial:
                best_len = length
                result[0] = length
                result[1] = root
                result[2] = e


def shortest_nontrivial_cycle(Py_ssize_t n_vertices, tails, heads, labels, roots):
    cdef Py_ssize_t ne = len(tails)
    labels = list(labels)
    nbits = max([int(l).bit_length() for l in labels] + [1])
    lab = _to_words(labels, nbits)
    t = np.asarray(tails, dtype=np.int64)
    h = np.asarray(heads, dtype=np.int64)
    deg = np.zeros(n_vertices + 1, dtype=np.int64)
    for a, b in zip(t, h):
        deg[a + 1] += 1
        if a != b:
            deg[b + 1] += 1
    start = np.cumsum(deg).astype(np.int64)
    fill = start[:-1].copy()
    av = np.zeros(max(1, int(start[-1])), dtype=np.int64)
    ae = np.zeros(max(1, int(start[-1])), dtype=np.int64)
    for e in range(ne):
        a = t[e]
        b = h[e]
        av[fill[a]] = b
        ae[fill[a]] = e
        fill[a] += 1
        if a != b:
            av[fill[b]] = a
            ae[fill[b]] = e
            fill[b] += 1
    r = np.asarray(list(roots), dtype=np.int64)
    depth = np.zeros(max(1, n_vertices), dtype=np.int64)
    queue = np.zeros(max(1, n_vertices), dtype=np.int64)
    parity = np.zeros((max(1, n_vertices), lab.shape[1]), dtype=np.uint64)
    result = np.zeros(3, dtype=np.int64)
    cdef int64_t[::1] tv = t, hv = h, sv = start, avv = av, aev = ae, rv = r
    cdef int64_t[::1] dv = depth, qv = queue, resv = result
    cdef uint64_t[:, ::1] lv = lab, pv = parity
    cdef Py_ssize_t nw = lab.shape[1]
    if r.shape[0] == 0 or ne == 0:
        return NO_CYCLE
    with nogil:
        _cycle_search(n_vertices, ne, nw, tv, hv, lv, sv, avv, aev, rv, dv, qv, pv, resv)
    return (int(result[0]), int(result[1]), int(result[2]))
