"""Constructors for the code families: toric lattices, complete graphs, holed discs."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import ArgumentError, UnsupportedParameterError
from .surface import CellEmbedding, Edge, EmbeddedGraph, connected_sum, dual_embedding, trace_faces

FAMILIES = ("kitaev_toric", "optimal_toric", "complete_selfdual", "planar_holed", "connected_sum_chain")

# seeded search budget for cyclic rotation patterns of K_s
COMPLETE_SEED = 20070
COMPLETE_TRIES = 20000


def _square_quotient(n: int, right: Callable[[int], int], up: Callable[[int], int]) -> CellEmbedding:
    """4-valent square lattice on a torus given by the right/up neighbour maps.

    Edge ``2v`` runs from ``v`` to ``right(v)``, edge ``2v + 1`` from ``v`` to ``up(v)``.
    Rotations are counterclockwise: east, north, west, south.
    """
    left = [0] * n
    down = [0] * n
    for v in range(n):
        left[right(v)] = v
        down[up(v)] = v
    edges = []
    for v in range(n):
        edges.append(Edge(v, right(v)))
        edges.append(Edge(v, up(v)))
    rotations = []
    for v in range(n):
        h, u = 2 * v, 2 * v + 1
        rotations.append([2 * h, 2 * u, 2 * (2 * left[v]) + 1, 2 * (2 * down[v] + 1) + 1])
    return trace_faces(EmbeddedGraph(n, edges, rotations))


def kitaev_toric(d: int) -> CellEmbedding:
    """``d x d`` square lattice on the torus: ``[[2d^2, 2, d]]``."""
    if not isinstance(d, int) or d < 2:
        raise ArgumentError(f"kitaev_toric needs d >= 2, got {d!r}")
    c = _square_quotient(d * d, lambda v: (v + 1) % d + d * (v // d), lambda v: (v + d) % (d * d))
    return c.with_metadata(family="kitaev_toric", d=d)


def optimal_toric(d: int) -> CellEmbedding:
    """Square lattice modulo ``<(a, b), (-b, a)>``, ``a = (d+1)/2``, ``b = (d-1)/2``.

    The quotient group is cyclic of order ``a^2 + b^2 = (d^2 + 1)/2``; ``(x, y)``
    maps to ``x + c*y`` with ``c = -a/b`` mod that order.
    """
    if not isinstance(d, int) or d < 3 or d % 2 == 0:
        raise ArgumentError(f"optimal_toric needs odd d >= 3, got {d!r}")
    a, b = (d + 1) // 2, (d - 1) // 2
    n = a * a + b * b
    c = (-a * pow(b, -1, n)) % n
    emb = _square_quotient(n, lambda v: (v + 1) % n, lambda v: (v + c) % n)
    return emb.with_metadata(family="optimal_toric", d=d)


def _cyclic_complete(s: int, pattern: list[int]) -> CellEmbedding:
    """K_s on Z_s, vertex ``i`` rotating through ``i + pattern[0], i + pattern[1], ...``."""
    ids = {}
    edges = []
    for i in range(s):
        for j in range(i + 1, s):
            ids[(i, j)] = len(edges)
            edges.append(Edge(i, j))
    rotations = []
    for i in range(s):
        rot = []
        for off in pattern:
            j = (i + off) % s
            if i < j:
                rot.append(2 * ids[(i, j)])
            else:
                rot.append(2 * ids[(j, i)] + 1)
        rotations.append(rot)
    return trace_faces(EmbeddedGraph(s, edges, rotations))


def _single_face_orbit(s: int, pattern: list[int]) -> bool:
    """Whether ``a -> successor(-a)`` is one cycle through all nonzero offsets."""
    pos = {x: i for i, x in enumerate(pattern)}
    m = len(pattern)
    a = pattern[0]
    for step in range(1, m + 1):
        a = pattern[(pos[(-a) % s] + 1) % m]
        if a == pattern[0]:
            return step == m
    return False


def _dual_is_simple(c: CellEmbedding) -> bool:
    seen = set()
    for sides in c.edge_faces():
        f, g = sorted(sides)
        if f == g or (f, g) in seen:
            return False
        seen.add((f, g))
    return True


def complete_selfdual(s: int) -> CellEmbedding:
    """Orientable embedding of K_s whose dual is again K_s (``s = 1 mod 4``).

    Searches cyclic rotation patterns with a fixed seed: the face permutation
    must be a single cycle (giving ``s`` faces of length ``s - 1``) and no two
    faces may share more than one edge.
    """
    if not isinstance(s, int) or s < 5 or s % 4 != 1:
        raise ArgumentError(f"complete_selfdual needs s = 1 (mod 4) and s >= 5, got {s!r}")
    rng = random.Random(COMPLETE_SEED + s)
    pattern = list(range(1, s))
    for attempt in range(COMPLETE_TRIES):
        if attempt:
            rng.shuffle(pattern)
        if not _single_face_orbit(s, pattern):
            continue
        c = _cyclic_complete(s, pattern)
        if c.F == s and _dual_is_simple(c):
            return c.with_metadata(
                family="complete_selfdual", s=s, d=3,
                pattern=",".join(map(str, pattern)), seed=COMPLETE_SEED + s, attempt=attempt,
            )
    raise UnsupportedParameterError(
        f"no self-dual cyclic embedding of K_{s} found in {COMPLETE_TRIES} tries"
    )


def hole_side(d: int) -> int:
    """Side of each square hole: the smallest whose perimeter is at least ``d``."""
    return max(1, math.ceil(d / 4))


def planar_holed(h: int, d: int) -> CellEmbedding:
    """Square grid with ``h`` square holes in a row, for a planar ``[[n, h, d]]`` code.

    Holes are ``d - 1`` squares apart and ``d - 1`` squares from the outer
    boundary, so a cocycle between two boundary components crosses ``d`` edges;
    each hole perimeter is at least ``d``. Open faces: the outer face and the holes.
    """
    if not isinstance(h, int) or h < 1:
        raise ArgumentError(f"planar_holed needs h >= 1, got {h!r}")
    if not isinstance(d, int) or d < 2:
        raise ArgumentError(f"planar_holed needs d >= 2, got {d!r}")
    side = hole_side(d)
    gap = d - 1
    W = h * side + (h + 1) * gap
    H = side + 2 * gap
    holes = [(gap + j * (side + gap), gap) for j in range(h)]

    def hole_square(x: int, y: int) -> bool:
        return any(x0 <= x < x0 + side and y0 <= y < y0 + side for x0, y0 in holes)

    def vertex_kept(x: int, y: int) -> bool:
        return not all(hole_square(x - dx, y - dy) for dx in (0, 1) for dy in (0, 1))

    vid = {}
    for y in range(H + 1):
        for x in range(W + 1):
            if vertex_kept(x, y):
                vid[(x, y)] = len(vid)
    edges = []
    darts: dict[tuple[int, int], dict[str, int]] = {p: {} for p in vid}

    def add(p, q, out_dir, in_dir):
        e = len(edges)
        edges.append(Edge(vid[p], vid[q]))
        darts[p][out_dir] = 2 * e
        darts[q][in_dir] = 2 * e + 1

    for y in range(H + 1):
        for x in range(W):
            # horizontal edge is interior to a hole iff the squares above and below are holes
            if (x, y) in vid and (x + 1, y) in vid and not (
                hole_square(x, y) and hole_square(x, y - 1)
            ):
                add((x, y), (x + 1, y), "E", "W")
    for y in range(H):
        for x in range(W + 1):
            if (x, y) in vid and (x, y + 1) in vid and not (
                hole_square(x, y) and hole_square(x - 1, y)
            ):
                add((x, y), (x, y + 1), "N", "S")
    rotations = [None] * len(vid)
    for p, v in vid.items():
        rotations[v] = [darts[p][k] for k in "ENWS" if k in darts[p]]
    c = trace_faces(EmbeddedGraph(len(vid), edges, rotations))

    def ring(x0, y0, w, hgt):
        pts = set()
        for x in range(x0, x0 + w + 1):
            pts.update({(x, y0), (x, y0 + hgt)})
        for y in range(y0, y0 + hgt + 1):
            pts.update({(x0, y), (x0 + w, y)})
        return frozenset(vid[p] for p in pts)

    targets = [ring(0, 0, W, H)] + [ring(x0, y0, side, side) for x0, y0 in holes]
    face_sets = [frozenset(c.graph.dart_vertex(dd) for dd, _ in walk) for walk in c.faces]
    open_faces = []
    for t in targets:
        matches = [f for f, fs in enumerate(face_sets) if fs == t and len(c.faces[f]) == len(t)]
        if len(matches) != 1:
            raise UnsupportedParameterError(f"could not identify boundary faces for h={h}, d={d}")
        open_faces.append(matches[0])
    return c.with_open_faces(open_faces).with_metadata(family="planar_holed", h=h, d=d)


def connected_sum_chain(d: int, count: int) -> CellEmbedding:
    """Connected sum of ``count`` copies of ``optimal_toric(d)``: genus ``count``."""
    if not isinstance(count, int) or count < 1:
        raise ArgumentError(f"connected_sum_chain needs count >= 1, got {count!r}")
    piece = optimal_toric(d)
    acc = piece
    for _ in range(count - 1):
        acc = connected_sum(acc, 0, piece, 0)
    return acc.with_metadata(family="connected_sum_chain", d=d, count=count)


def is_self_dual(c: CellEmbedding) -> bool:
    """Dual graph isomorphic to the primal graph (as abstract multigraphs)."""
    from .surface import is_isomorphic

    return is_isomorphic(c.graph, dual_embedding(c).graph)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ArgumentError(f"unknown family {self.family!r}; expected one of {FAMILIES}")

    def __hash__(self):
        return hash((self.family, tuple(sorted(self.params.items()))))

    def build(self) -> CellEmbedding:
        p = self.params
        if self.family == "kitaev_toric":
            return kitaev_toric(p["d"])
        if self.family == "optimal_toric":
            return optimal_toric(p["d"])
        if self.family == "complete_selfdual":
            return complete_selfdual(p["s"])
        if self.family == "planar_holed":
            return planar_holed(p["h"], p["d"])
        return connected_sum_chain(p["d"], p["count"])

    def formula(self) -> tuple[int, int, int]:
        """``(n, k, d)`` as stated by the family's closed form."""
        p = self.params
        if self.family == "kitaev_toric":
            d = p["d"]
            return 2 * d * d, 2, d
        if self.family == "optimal_toric":
            d = p["d"]
            return d * d + 1, 2, d
        if self.family == "complete_selfdual":
            s = p["s"]
            n = s * (s - 1) // 2
            return n, n - 2 * (s - 1), 3
        if self.family == "planar_holed":
            # n has no closed form here; count the generated layout
            c = self.build()
            return c.E, p["h"], p["d"]
        d, count = p["d"], p["count"]
        return count * (d * d + 1), 2 * count, d

    def label(self) -> str:
        return self.family + "(" + ",".join(f"{k}={v}" for k, v in sorted(self.params.items())) + ")"


@dataclass(frozen=True)
class RatePoint:
    n: int
    k: int
    d: int
    t_over_n: Fraction
    k_over_n: Fraction

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    def as_tuple(self) -> tuple[int, int, int, float, float]:
        return self.n, self.k, self.d, float(self.t_over_n), float(self.k_over_n)


def rate_point(spec: FamilySpec) -> RatePoint:
    """Exact rates ``t/n`` and ``k/n`` from the family formula, ``t = floor((d-1)/2)``."""
    n, k, d = spec.formula()
    t = (d - 1) // 2
    return RatePoint(n, k, d, Fraction(t, n), Fraction(k, n))
