"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``TOPOCODE_PURE_PYTHON=1`` to force the fallback. ``TOPOCODE_THREADS``
caps worker threads for the cycle search (0 or unset = auto).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import _pykernels

if os.environ.get("TOPOCODE_PURE_PYTHON") == "1":
    _ckernels = None
else:
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
kernels = _ckernels if _ckernels is not None else _pykernels

# below this many vertex-edge pairs threading costs more than it saves
_PARALLEL_WORK = 200_000


def thread_count() -> int:
    raw = os.environ.get("TOPOCODE_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


def rref(rows: Sequence[int], ncols: int, module=None) -> tuple[list[int], list[int]]:
    return (module or kernels).rref(rows, ncols)


def shortest_nontrivial_cycle(
    n_vertices: int,
    tails: Sequence[int],
    heads: Sequence[int],
    labels: Sequence[int],
    module=None,
) -> tuple[int, int, int]:
    """Run the all-roots cycle search, splitting roots over threads when it pays.

    The result is independent of the thread count: chunks are combined by the
    lexicographic minimum of ``(length, root, edge)``.
    """
    mod = module or kernels
    roots = list(range(n_vertices))
    threads = thread_count() if mod is _ckernels else 1
    if threads <= 1 or n_vertices * len(tails) < _PARALLEL_WORK:
        return mod.shortest_nontrivial_cycle(n_vertices, tails, heads, labels, roots)
    chunks = [roots[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        found = list(
            pool.map(
                lambda ch: mod.shortest_nontrivial_cycle(n_vertices, tails, heads, labels, ch),
                [c for c in chunks if c],
            )
        )
    found = [f for f in found if f[0] >= 0]
    return min(found) if found else _pykernels.NO_CYCLE
