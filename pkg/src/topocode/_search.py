"""Minimum-weight search for ``u in ker(checks) \\ rowspace(stabs)``.

Two independent routes:

* ``graphlike_min_weight``: when every column of ``checks`` has weight <= 2,
  ``checks`` is the incidence matrix of a graph (weight-1 columns end at one
  extra vertex) and ``ker(checks)`` is its cycle space. A shortest
  nontrivial cycle is ``path(r, a) + ab + path(b, r)`` for BFS trees from some
  root ``r`` on it, so scanning all roots and edges is exact.
* ``bruteforce_min_weight``: Gray-code walk over all of ``ker(checks)``.
"""

from __future__ import annotations

from itertools import combinations, product

from . import _backend
from .errors import ArgumentError, OracleRefusedError
from .gf2 import BitMatrix, BitVec, RowSpace, complement_basis, kernel_basis

ORACLE_MAX_DIM = 20


def _as_graph(checks: BitMatrix) -> tuple[int, list[int], list[int]]:
    virtual = checks.rows
    tails, heads = [], []
    used_virtual = False
    cols: list[list[int]] = [[] for _ in range(checks.cols)]
    for i, r in enumerate(checks.data):
        for j in BitVec(checks.cols, r).support():
            cols[j].append(i)
    for j, rows in enumerate(cols):
        if len(rows) > 2:
            raise ArgumentError(f"column {j} has weight {len(rows)}; not graph-like")
        if len(rows) == 2:
            tails.append(rows[0])
            heads.append(rows[1])
        elif len(rows) == 1:
            tails.append(rows[0])
            heads.append(virtual)
            used_virtual = True
        else:
            tails.append(0)
            heads.append(0)
    n_vertices = checks.rows + 1 if used_virtual else max(checks.rows, 1)
    return n_vertices, tails, heads


def is_graphlike(checks: BitMatrix) -> bool:
    return max(checks.column_weights(), default=0) <= 2


def logical_basis(checks: BitMatrix, stabs: BitMatrix) -> list[BitVec]:
    """Vectors of ``ker(stabs)`` completing ``rowspace(checks)``; they detect nontrivial ``u``."""
    kb = kernel_basis(stabs)
    if not kb:
        return []
    return complement_basis(BitMatrix.from_rows(kb, checks.cols), checks)


def graphlike_min_weight(checks: BitMatrix, stabs: BitMatrix, module=None) -> tuple[int, BitVec] | None:
    """Exact minimum over ``ker(checks) \\ rowspace(stabs)``; None if that set is empty."""
    n = checks.cols
    logicals = logical_basis(checks, stabs)
    if not logicals:
        return None
    labels = [0] * n
    for i, lv in enumerate(logicals):
        for j in lv.support():
            labels[j] |= 1 << i
    nv, tails, heads = _as_graph(checks)
    length, root, edge = _backend.shortest_nontrivial_cycle(nv, tails, heads, labels, module=module)
    if length < 0:
        return None
    # rebuild the same BFS tree the kernel used to recover the witness
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for e, (a, b) in enumerate(zip(tails, heads)):
        adj[a].append((b, e))
        if a != b:
            adj[b].append((a, e))
    path = [None] * nv
    path[root] = 0
    queue = [root]
    for x in queue:
        for y, e in adj[x]:
            if path[y] is None:
                path[y] = path[x] ^ (1 << e)
                queue.append(y)
    bits = path[tails[edge]] ^ path[heads[edge]] ^ (1 << edge)
    witness = BitVec(n, bits)
    assert witness.weight() == length, "shortest candidate must be a simple cycle"
    return length, witness


def bruteforce_min_weight(
    checks: BitMatrix, stabs: BitMatrix, max_dim: int = ORACLE_MAX_DIM
) -> tuple[int, BitVec] | None:
    """Enumerate every vector of ``ker(checks)``; refuses when its dimension exceeds ``max_dim``."""
    basis = kernel_basis(checks)
    if len(basis) > max_dim:
        raise OracleRefusedError(
            f"kernel dimension {len(basis)} exceeds the oracle limit {max_dim}"
        )
    rs = RowSpace(stabs)
    vecs = [b.bits for b in basis]
    residues = [rs.reduce(b) for b in vecs]
    best = None
    u = 0
    res = 0
    for step in range(1, 1 << len(vecs)):
        i = (step & -step).bit_length() - 1
        u ^= vecs[i]
        res ^= residues[i]
        if res:
            w = u.bit_count()
            if best is None or w < best[0]:
                best = (w, u)
    if best is None:
        return None
    return best[0], BitVec(checks.cols, best[1])


def weight_limited_search(n: int, max_weight: int, accept) -> tuple[int, int, int] | None:
    """Smallest-weight Pauli ``(w, x, z)`` with ``accept(x, z)``, scanning weights 1..max_weight.

    Supports are visited in lexicographic order and letters in X, Y, Z order,
    so the returned witness is deterministic.
    """
    letters = ((1, 0), (1, 1), (0, 1))
    for w in range(1, max_weight + 1):
        for support in combinations(range(n), w):
            for choice in product(letters, repeat=w):
                x = z = 0
                for q, (bx, bz) in zip(support, choice):
                    x |= bx << q
                    z |= bz << q
                if accept(x, z):
                    return w, x, z
    return None
