"""Cell embeddings of graphs on surfaces, as signed rotation systems.

Dart ``2*e`` is the end of edge ``e`` at its first endpoint (written ``e.a``),
dart ``2*e + 1`` the end at its second endpoint (``e.b``). Each vertex lists its
darts in cyclic order; a twisted edge reverses the local orientation when
crossed. Surfaces with boundary are closed embeddings with some faces marked
open (deleted discs).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    ArgumentError,
    ConnectivityError,
    ParseError,
    UnsupportedOperationError,
)
from .gf2 import BitMatrix

# A face-walk step: (dart we leave through, orientation reversed?)
Step = tuple[int, int]


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    twist: int = 0

    @property
    def is_loop(self) -> bool:
        return self.a == self.b


def dart_name(d: int) -> str:
    return f"{d >> 1}.{'ab'[d & 1]}"


class EmbeddedGraph:
    """A connected graph together with a signed rotation system."""

    def __init__(
        self,
        vertex_count: int,
        edges: Sequence[Edge | tuple],
        rotations: Sequence[Sequence[int]],
    ):
        self.vertex_count = vertex_count
        self.edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        self.rotations = tuple(tuple(r) for r in rotations)
        self._validate()
        # dart -> (vertex, position in rotation)
        self._pos: list[tuple[int, int]] = [(-1, -1)] * (2 * len(self.edges))
        for v, rot in enumerate(self.rotations):
            for i, d in enumerate(rot):
                self._pos[d] = (v, i)

    def _validate(self) -> None:
        V, E = self.vertex_count, len(self.edges)
        if V < 1:
            raise ArgumentError("an embedded graph needs at least one vertex")
        if len(self.rotations) != V:
            raise ArgumentError(f"expected {V} rotations, got {len(self.rotations)}")
        for i, e in enumerate(self.edges):
            if not (0 <= e.a < V and 0 <= e.b < V):
                raise ArgumentError(f"edge {i} has an endpoint out of range")
            if e.twist not in (0, 1):
                raise ArgumentError(f"edge {i} twist must be 0 or 1")
        seen = [False] * (2 * E)
        for v, rot in enumerate(self.rotations):
            for d in rot:
                if not 0 <= d < 2 * E:
                    raise ArgumentError(f"dart {d} out of range at vertex {v}")
                if seen[d]:
                    raise ArgumentError(f"dart {dart_name(d)} appears twice")
                seen[d] = True
                if self.dart_vertex(d) != v:
                    raise ArgumentError(f"dart {dart_name(d)} listed at vertex {v}")
        missing = [dart_name(d) for d in range(2 * E) if not seen[d]]
        if missing:
            raise ArgumentError(f"darts missing from rotations: {' '.join(missing)}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def dart_vertex(self, d: int) -> int:
        e = self.edges[d >> 1]
        return e.b if d & 1 else e.a

    def next_dart(self, d: int, reverse: int = 0) -> int:
        v, i = self._pos[d]
        rot = self.rotations[v]
        return rot[(i - 1) % len(rot)] if reverse else rot[(i + 1) % len(rot)]

    def neighbors(self, v: int) -> list[int]:
        return [self.dart_vertex(d ^ 1) for d in self.rotations[v]]

    def is_connected(self) -> bool:
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.vertex_count

    def is_orientable(self) -> bool:
        """True iff some vertex switching makes every edge untwisted."""
        sign = [-1] * self.vertex_count
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for e in self.edges:
            if e.is_loop:
                if e.twist:
                    return False
                continue
            adj[e.a].append((e.b, e.twist))
            adj[e.b].append((e.a, e.twist))
        for s in range(self.vertex_count):
            if sign[s] >= 0:
                continue
            sign[s] = 0
            todo = deque([s])
            while todo:
                v = todo.popleft()
                for w, tw in adj[v]:
                    want = sign[v] ^ tw
                    if sign[w] < 0:
                        sign[w] = want
                        todo.append(w)
                    elif sign[w] != want:
                        return False
        return True

    def switched(self, v: int) -> "EmbeddedGraph":
        """Same embedding with the local orientation at ``v`` reversed."""
        edges = [
            Edge(e.a, e.b, e.twist ^ 1) if (v in (e.a, e.b) and not e.is_loop) else e
            for e in self.edges
        ]
        rots = list(self.rotations)
        rots[v] = tuple(reversed(rots[v]))
        return EmbeddedGraph(self.vertex_count, edges, rots)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EmbeddedGraph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
            and self.rotations == other.rotations
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges, self.rotations))

    def __repr__(self) -> str:
        return f"EmbeddedGraph(V={self.vertex_count}, E={self.edge_count})"


@dataclass(frozen=True)
class SurfaceInfo:
    chi: int
    orientable: bool
    boundary_components: int

    @property
    def genus(self) -> int:
        """Orientable genus, or crosscap number for non-orientable surfaces."""
        rest = 2 - self.chi - self.boundary_components
        return rest // 2 if self.orientable else rest

    @property
    def holes(self) -> int:
        """For a disc with holes, the number of holes (``1 - chi``)."""
        return max(self.boundary_components - 1, 0)

    def name(self) -> str:
        g, b = self.genus, self.boundary_components
        if self.orientable:
            base = {0: "sphere", 1: "torus"}.get(g, f"{g}-torus")
        else:
            base = {1: "projective plane", 2: "Klein bottle"}.get(g, f"{g}-crosscap surface")
        if b == 0:
            return base
        if self.orientable and g == 0:
            return f"disc with {b - 1} holes (D_{b - 1})"
        return f"{base} with {b} boundary components"


@dataclass(frozen=True, eq=False)
class CellEmbedding:
    """Traced faces of an embedded graph; ``open_faces`` are boundary holes."""

    graph: EmbeddedGraph
    faces: tuple[tuple[Step, ...], ...]
    open_faces: frozenset[int] = frozenset()
    metadata: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    def __post_init__(self):
        for f in self.open_faces:
            if not 0 <= f < len(self.faces):
                raise ArgumentError(f"open face {f} out of range (F={len(self.faces)})")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CellEmbedding)
            and self.graph == other.graph
            and self.open_faces == other.open_faces
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.open_faces))

    @property
    def V(self) -> int:
        return self.graph.vertex_count

    @property
    def E(self) -> int:
        return self.graph.edge_count

    @property
    def F(self) -> int:
        """All traced faces, open ones included."""
        return len(self.faces)

    @property
    def has_boundary(self) -> bool:
        return bool(self.open_faces)

    @property
    def interior_faces(self) -> list[int]:
        return [f for f in range(len(self.faces)) if f not in self.open_faces]

    def face_edges(self, f: int) -> list[int]:
        """Edges along the walk of face ``f``, with repetition."""
        return [d >> 1 for d, _ in self.faces[f]]

    def edge_faces(self) -> list[list[int]]:
        """The two faces on either side of each edge (equal for one-face edges)."""
        out: list[list[int]] = [[] for _ in range(self.E)]
        for f, walk in enumerate(self.faces):
            for d, _ in walk:
                out[d >> 1].append(f)
        return out

    def with_open_faces(self, open_faces: Iterable[int]) -> "CellEmbedding":
        return CellEmbedding(self.graph, self.faces, frozenset(open_faces), self.metadata)

    def with_metadata(self, **items) -> "CellEmbedding":
        meta = dict(self.metadata)
        meta.update({k: str(v) for k, v in items.items()})
        return CellEmbedding(self.graph, self.faces, self.open_faces, tuple(meta.items()))

    def euler_characteristic(self) -> int:
        return euler_characteristic(self)

    def info(self) -> SurfaceInfo:
        return SurfaceInfo(
            euler_characteristic(self), self.graph.is_orientable(), len(self.open_faces)
        )

    def vertex_incidence(self) -> BitMatrix:
        """``V x E`` matrix; a loop contributes twice, hence 0."""
        rows = [0] * self.V
        for j, e in enumerate(self.graph.edges):
            rows[e.a] ^= 1 << j
            rows[e.b] ^= 1 << j
        return BitMatrix.from_ints(rows, self.E)

    def face_incidence(self, interior_only: bool = True) -> BitMatrix:
        """Face-edge incidence mod 2, one row per (interior) face in face order."""
        faces = self.interior_faces if interior_only else range(self.F)
        rows = []
        for f in faces:
            bits = 0
            for d, _ in self.faces[f]:
                bits ^= 1 << (d >> 1)
            rows.append(bits)
        return BitMatrix.from_ints(rows, self.E)

    def __repr__(self) -> str:
        return (
            f"CellEmbedding(V={self.V}, E={self.E}, F={self.F}, "
            f"open={sorted(self.open_faces)}, chi={euler_characteristic(self)})"
        )


def trace_faces(g: EmbeddedGraph, open_faces: Iterable[int] = ()) -> CellEmbedding:
    """Trace the faces of a signed rotation system.

    From dart ``d`` with orientation flag ``r``: cross the edge (a twist flips
    ``r``), then leave the far vertex by the next dart in its rotation, or the
    previous one when ``r`` is set. Each face is found once; its reverse walk
    is marked as used. Faces are numbered in discovery order, scanning darts
    in ascending order with the flag clear, then again with it set.
    """
    if not g.is_connected():
        raise ConnectivityError("embedded graph is not connected")
    E = g.edge_count
    twist = [e.twist for e in g.edges]
    used = bytearray(4 * E)
    faces = []
    for r0 in (0, 1):
        for d0 in range(2 * E):
            if used[2 * d0 + r0]:
                continue
            walk = []
            d, r = d0, r0
            while True:
                used[2 * d + r] = 1
                tw = twist[d >> 1]
                # the same edge traversed the other way by the mirrored walk
                used[2 * (d ^ 1) + ((1 - r) ^ tw)] = 1
                walk.append((d, r))
                r ^= tw
                d = g.next_dart(d ^ 1, r)
                if (d, r) == (d0, r0):
                    break
            faces.append(tuple(walk))
    return CellEmbedding(g, tuple(faces), frozenset(open_faces))


def embed(
    vertex_count: int,
    edges: Sequence[Edge | tuple],
    rotations: Sequence[Sequence[int]],
    open_faces: Iterable[int] = (),
) -> CellEmbedding:
    return trace_faces(EmbeddedGraph(vertex_count, edges, rotations), open_faces)


def euler_characteristic(c: CellEmbedding) -> int:
    """``V - E + F`` counting interior faces only."""
    return c.V - c.E + c.F - len(c.open_faces)


def dual_embedding(c: CellEmbedding) -> CellEmbedding:
    """Dual map: a vertex per face, edge ``e*`` crossing ``e`` (same edge id).

    The rotation at a dual vertex is the order in which its face walk meets
    edges. The first meeting of ``e`` becomes dart ``e*.a``, the second
    ``e*.b``; ``e*`` is twisted iff the two walks cross ``e`` with opposite
    orientation relative to the frame at ``e.a``.
    """
    if c.open_faces:
        raise UnsupportedOperationError("dual embedding is undefined for surfaces with boundary")
    E = c.E
    twist = [e.twist for e in c.graph.edges]
    ends: list[list[int]] = [[] for _ in range(E)]
    frame: list[list[int]] = [[] for _ in range(E)]
    rotations = []
    for f, walk in enumerate(c.faces):
        rot = []
        for d, r in walk:
            e = d >> 1
            side = len(ends[e])
            ends[e].append(f)
            frame[e].append(r ^ (twist[e] & d & 1))
            rot.append(2 * e + side)
        rotations.append(rot)
    edges = [Edge(ends[e][0], ends[e][1], int(frame[e][0] != frame[e][1])) for e in range(E)]
    return trace_faces(EmbeddedGraph(len(c.faces), edges, rotations))


def _prepared(g: EmbeddedGraph, e: int) -> tuple[EmbeddedGraph, int]:
    """Make edge ``e`` a non-loop, untwisted edge without changing the surface."""
    edge = g.edges[e]
    if edge.is_loop:
        # subdivide: e becomes (a, m), new edge (m, a) takes over the old b-end
        m = g.vertex_count
        new = g.edge_count
        edges = list(g.edges)
        edges[e] = Edge(edge.a, m, edge.twist)
        edges.append(Edge(m, edge.a, 0))
        rots = [list(r) for r in g.rotations]
        rot = rots[edge.a]
        rot[rot.index(2 * e + 1)] = 2 * new + 1
        rots.append([2 * e + 1, 2 * new])
        g = EmbeddedGraph(g.vertex_count + 1, edges, rots)
        edge = g.edges[e]
    if edge.twist:
        g = g.switched(edge.b)
    return g, e


def _rotated(rot: Sequence[int], first: int) -> list[int]:
    i = list(rot).index(first)
    return list(rot[i:]) + list(rot[:i])


def connected_sum(c1: CellEmbedding, e1: int, c2: CellEmbedding, e2: int) -> CellEmbedding:
    """Cut ``c1`` along ``e1`` and ``c2`` along ``e2`` and glue the two 2-gon holes.

    Endpoints ``e1.a ~ e2.a`` and ``e1.b ~ e2.b`` merge; ``e1`` and ``e2`` survive as
    the two sides of the seam, so ``E = E1 + E2`` and ``V = V1 + V2 - 2``. A loop
    is subdivided first (one extra vertex and edge).
    """
    for c, e, which in ((c1, e1, "first"), (c2, e2, "second")):
        if c.open_faces:
            raise UnsupportedOperationError("connected sum needs closed surfaces")
        if not 0 <= e < c.E:
            raise ArgumentError(f"edge {e} out of range for the {which} embedding (E={c.E})")
    g1, e1 = _prepared(c1.graph, e1)
    g2, e2 = _prepared(c2.graph, e2)
    V1, E1 = g1.vertex_count, g1.edge_count
    a1, b1 = g1.edges[e1].a, g1.edges[e1].b
    a2, b2 = g2.edges[e2].a, g2.edges[e2].b

    vmap = {}
    nxt = V1
    for v in range(g2.vertex_count):
        if v == a2:
            vmap[v] = a1
        elif v == b2:
            vmap[v] = b1
        else:
            vmap[v] = nxt
            nxt += 1
    edges = list(g1.edges) + [Edge(vmap[x.a], vmap[x.b], x.twist) for x in g2.edges]
    shift = 2 * E1
    rots: list[list[int]] = [list(r) for r in g1.rotations] + [[] for _ in range(nxt - V1)]
    for v in range(g2.vertex_count):
        if v not in (a2, b2):
            rots[vmap[v]] = [d + shift for d in g2.rotations[v]]
    x_a, x_b = 2 * e1, 2 * e1 + 1
    y_a, y_b = 2 * e2 + shift, 2 * e2 + 1 + shift
    p = _rotated(g1.rotations[a1], x_a)[1:]
    r = _rotated(g1.rotations[b1], x_b)[1:]
    q = [d + shift for d in _rotated(g2.rotations[a2], 2 * e2)[1:]]
    s = [d + shift for d in _rotated(g2.rotations[b2], 2 * e2 + 1)[1:]]
    rots[a1] = [x_a, *p, y_a, *q]
    rots[b1] = [y_b, *r, x_b, *s]
    return trace_faces(EmbeddedGraph(nxt, edges, rots))


def match_with_edge_bijection(g1: EmbeddedGraph, g2: EmbeddedGraph) -> dict[int, int] | None:
    """Vertex map ``g1 -> g2`` under which edge ``i`` of ``g1`` maps to edge ``i`` of ``g2``."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    at1: list[list[int]] = [[] for _ in range(g1.vertex_count)]
    for i, e in enumerate(g1.edges):
        at1[e.a].append(i)
        if not e.is_loop:
            at1[e.b].append(i)
    for start in range(g2.vertex_count):
        phi = {0: start}
        todo = [0]
        ok = True
        while todo and ok:
            v = todo.pop()
            for i in at1[v]:
                e, f = g1.edges[i], g2.edges[i]
                w = e.b if e.a == v else e.a
                if e.is_loop != f.is_loop:
                    ok = False
                    break
                if phi[v] not in (f.a, f.b):
                    ok = False
                    break
                target = f.b if f.a == phi[v] else f.a
                if e.is_loop:
                    continue
                if w in phi:
                    if {phi[v], phi[w]} != {f.a, f.b}:
                        ok = False
                        break
                else:
                    phi[w] = target
                    todo.append(w)
        if ok and len(phi) == g1.vertex_count and len(set(phi.values())) == g1.vertex_count:
            return phi
    return None


def is_isomorphic(g1: EmbeddedGraph, g2: EmbeddedGraph) -> bool:
    """Abstract multigraph isomorphism (rotations ignored)."""
    import networkx as nx

    return nx.is_isomorphic(to_networkx(g1), to_networkx(g2))


def to_networkx(g: EmbeddedGraph):
    import networkx as nx

    G = nx.MultiGraph()
    G.add_nodes_from(range(g.vertex_count))
    for i, e in enumerate(g.edges):
        G.add_edge(e.a, e.b, key=i)
    return G


# --- text format -------------------------------------------------------------


def format_embedding(c: CellEmbedding) -> str:
    g = c.graph
    lines = [f"# {k}: {v}" for k, v in c.metadata]
    lines.append(f"vertices {g.vertex_count}")
    for i, e in enumerate(g.edges):
        lines.append(f"edge {i} {e.a} {e.b}" + (" twist" if e.twist else ""))
    for v, rot in enumerate(g.rotations):
        lines.append(f"rotation {v}: " + " ".join(dart_name(d) for d in rot))
    if c.open_faces:
        lines.append("open-faces: " + " ".join(str(f) for f in sorted(c.open_faces)))
    return "\n".join(lines) + "\n"


def _int(tok: str, what: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {tok!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative {what} {value}", lineno)
    return value


def parse_embedding(text: str) -> CellEmbedding:
    """Parse the line-oriented embedding format written by :func:`format_embedding`."""
    V = None
    edges: dict[int, Edge] = {}
    rotations: dict[int, list[int]] = {}
    rot_lines: dict[int, int] = {}
    open_faces: list[int] | None = None
    open_line = 0
    meta = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                k, v = body.split(":", 1)
                meta.append((k.strip(), v.strip()))
            continue
        toks = line.split()
        kw = toks[0]
        if kw == "vertices":
            if V is not None:
                raise ParseError("duplicate 'vertices' line", lineno)
            if len(toks) != 2:
                raise ParseError("usage: vertices <V>", lineno)
            V = _int(toks[1], "vertex count", lineno)
        elif kw == "edge":
            if V is None:
                raise ParseError("'edge' before 'vertices'", lineno)
            if len(toks) not in (4, 5) or (len(toks) == 5 and toks[4] != "twist"):
                raise ParseError("usage: edge <id> <va> <vb> [twist]", lineno)
            i = _int(toks[1], "edge id", lineno)
            a = _int(toks[2], "vertex", lineno)
            b = _int(toks[3], "vertex", lineno)
            if i in edges:
                raise ParseError(f"duplicate edge id {i}", lineno)
            for x in (a, b):
                if x >= V:
                    raise ParseError(f"vertex {x} out of range (V={V})", lineno)
            edges[i] = Edge(a, b, int(len(toks) == 5))
        elif kw == "rotation":
            if V is None:
                raise ParseError("'rotation' before 'vertices'", lineno)
            if len(toks) < 2 or not toks[1].endswith(":"):
                raise ParseError("usage: rotation <v>: <darts>", lineno)
            v = _int(toks[1][:-1], "vertex", lineno)
            if v >= V:
                raise ParseError(f"vertex {v} out of range (V={V})", lineno)
            if v in rotations:
                raise ParseError(f"duplicate rotation for vertex {v}", lineno)
            darts = []
            for tok in toks[2:]:
                eid, _, side = tok.partition(".")
                if side not in ("a", "b"):
                    raise ParseError(f"bad dart {tok!r} (expected <edge>.a or <edge>.b)", lineno)
                darts.append(2 * _int(eid, "edge id", lineno) + (side == "b"))
            rotations[v] = darts
            rot_lines[v] = lineno
        elif kw == "open-faces:":
            if open_faces is not None:
                raise ParseError("duplicate 'open-faces:' line", lineno)
            open_faces = [_int(t, "face index", lineno) for t in toks[1:]]
            open_line = lineno
        else:
            raise ParseError(f"unknown keyword {kw!r}", lineno)
    if V is None:
        raise ParseError("missing 'vertices' line")
    E = len(edges)
    if sorted(edges) != list(range(E)):
        raise ParseError(f"edge ids must be 0..{E - 1}")
    seen: dict[int, int] = {}
    for v in sorted(rotations):
        for d in rotations[v]:
            if d >= 2 * E:
                raise ParseError(f"dart {dart_name(d)} refers to a missing edge", rot_lines[v])
            if d in seen:
                raise ParseError(f"duplicate dart {dart_name(d)}", rot_lines[v])
            seen[d] = v
            e = edges[d >> 1]
            if (e.b if d & 1 else e.a) != v:
                raise ParseError(f"dart {dart_name(d)} does not end at vertex {v}", rot_lines[v])
    for v in range(V):
        if v not in rotations:
            raise ParseError(f"missing rotation for vertex {v}")
    absent = [dart_name(d) for d in range(2 * E) if d not in seen]
    if absent:
        raise ParseError(f"darts missing from rotations: {' '.join(absent)}")
    g = EmbeddedGraph(V, [edges[i] for i in range(E)], [rotations[v] for v in range(V)])
    c = trace_faces(g)
    if open_faces:
        if len(set(open_faces)) != len(open_faces):
            raise ParseError("duplicate open face index", open_line)
        for f in open_faces:
            if f >= c.F:
                raise ParseError(f"open face {f} out of range (F={c.F})", open_line)
        c = c.with_open_faces(open_faces)
    if meta:
        c = CellEmbedding(c.graph, c.faces, c.open_faces, tuple(meta))
    return c
