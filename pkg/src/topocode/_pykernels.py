"""Pure-Python hot kernels; the reference the compiled kernels must agree with.

Bit vectors are Python ints: bit ``j`` is column ``j``.
"""

from __future__ import annotations

from typing import Sequence

NO_CYCLE = (-1, -1, -1)


def rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form with leftmost (lowest column) pivots.

    Returns ``(reduced, pivots)`` where ``reduced`` has the same number of rows
    as the input: pivot rows sorted by pivot column, then zero rows.
    """
    basis: dict[int, int] = {}
    for row in rows:
        for col, prow in basis.items():
            if row >> col & 1:
                row ^= prow
        if not row:
            continue
        low = row & -row
        col = low.bit_length() - 1
        for c in basis:
            if basis[c] & low:
                basis[c] ^= row
        basis[col] = row
    pivots = sorted(basis)
    reduced = [basis[c] for c in pivots]
    reduced.extend([0] * (len(rows) - len(reduced)))
    return reduced, pivots


def shortest_nontrivial_cycle(
    n_vertices: int,
    tails: Sequence[int],
    heads: Sequence[int],
    labels: Sequence[int],
    roots: Sequence[int],
) -> tuple[int, int, int]:
    """Shortest closed walk ``path(root, a) + e + path(b, root)`` with nonzero label sum.

    ``labels[e]`` is a bitmask of the linear functionals that detect a
    nontrivial class. Returns ``(length, root, edge)`` minimizing length, ties
    broken by root then edge order, or ``NO_CYCLE``.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n_vertices)]
    for e, (a, b) in enumerate(zip(tails, heads)):
        adj[a].append((b, e))
        if a != b:
            adj[b].append((a, e))
    n_edges = len(tails)
    best = NO_CYCLE
    best_len = n_vertices * 2 + 2
    for root in roots:
        depth = [-1] * n_vertices
        parity = [0] * n_vertices
        depth[root] = 0
        queue = [root]
        for x in queue:
            dx = depth[x] + 1
            if 2 * dx >= best_len:
                break
            px = parity[x]
            for y, e in adj[x]:
                if depth[y] < 0:
                    depth[y] = dx
                    parity[y] = px ^ labels[e]
                    queue.append(y)
        for e in range(n_edges):
            a = tails[e]
            b = heads[e]
            da = depth[a]
            db = depth[b]
            if da < 0 or db < 0:
                continue
            length = da + db + 1
            if length < best_len and parity[a] ^ parity[b] ^ labels[e]:
                best_len = length
                best = (length, root, e)
    return best
