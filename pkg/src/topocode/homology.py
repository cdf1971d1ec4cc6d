"""Z2 chains and cochains on a cell embedding; cycle, boundary and homology ranks.

Chains are edge sets (Z-type operators), cochains are dual-edge sets indexed by
the edge they cross (X-type operators). On a surface with boundary the open
faces impose no condition: a cocycle is any cochain meeting every interior
face boundary evenly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _search
from .errors import ArgumentError, DimensionError, NoNontrivialCycleError
from .gf2 import BitMatrix, BitVec, RowSpace, rank
from .surface import CellEmbedding


@dataclass(frozen=True)
class Chain:
    support: BitVec

    @classmethod
    def from_edges(cls, n_edges: int, edges) -> "Chain":
        return cls(BitVec.from_support(n_edges, edges))

    def __add__(self, other: "Chain") -> "Chain":
        return Chain(self.support ^ other.support)

    def edges(self) -> list[int]:
        return self.support.support()

    def weight(self) -> int:
        return self.support.weight()


@dataclass(frozen=True)
class Cochain:
    support: BitVec

    @classmethod
    def from_edges(cls, n_edges: int, edges) -> "Cochain":
        return cls(BitVec.from_support(n_edges, edges))

    def __add__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.support ^ other.support)

    def edges(self) -> list[int]:
        return self.support.support()

    def weight(self) -> int:
        return self.support.weight()


def pairing(c1: Cochain, c: Chain) -> int:
    """The chain/cochain product: parity of the shared edges."""
    return c1.support.dot(c.support)


@dataclass(frozen=True)
class HomologySummary:
    z1_dim: int
    b1_dim: int
    z1co_dim: int
    b1co_dim: int

    @property
    def h1_dim(self) -> int:
        return self.z1_dim - self.b1_dim

    @property
    def h1co_dim(self) -> int:
        return self.z1co_dim - self.b1co_dim


def face_boundary(c: CellEmbedding, f: int) -> Chain:
    """Edges met an odd number of times by the walk of interior face ``f``."""
    if not 0 <= f < c.F:
        raise ArgumentError(f"face {f} out of range (F={c.F})")
    if f in c.open_faces:
        raise ArgumentError(f"face {f} is open (a boundary hole)")
    bits = 0
    for e in c.face_edges(f):
        bits ^= 1 << e
    return Chain(BitVec(c.E, bits))


def vertex_coboundary(c: CellEmbedding, v: int) -> Cochain:
    """Edges incident to ``v`` an odd number of times (loops cancel)."""
    if not 0 <= v < c.V:
        raise ArgumentError(f"vertex {v} out of range (V={c.V})")
    return Cochain(c.vertex_incidence().row(v))


def homology_summary(c: CellEmbedding) -> HomologySummary:
    hx = c.vertex_incidence()
    hz = c.face_incidence()
    rx, rz = rank(hx), rank(hz)
    return HomologySummary(c.E - rx, rz, c.E - rz, rx)


def _check_len(c: CellEmbedding, v: BitVec) -> None:
    if v.length != c.E:
        raise DimensionError(f"support length {v.length} != E={c.E}")


def is_cycle(c: CellEmbedding, ch: Chain) -> bool:
    _check_len(c, ch.support)
    return not c.vertex_incidence().mul_vec(ch.support)


def is_cocycle(c: CellEmbedding, co: Cochain) -> bool:
    _check_len(c, co.support)
    return not c.face_incidence().mul_vec(co.support)


def is_boundary(c: CellEmbedding, ch: Chain) -> bool:
    """Whether a cycle is a sum of interior face boundaries."""
    if not is_cycle(c, ch):
        raise ArgumentError("chain is not a cycle")
    return ch.support in RowSpace(c.face_incidence())


def are_homologous(c: CellEmbedding, a: Chain, b: Chain) -> bool:
    if not (is_cycle(c, a) and is_cycle(c, b)):
        raise ArgumentError("chain is not a cycle")
    return is_boundary(c, a + b)


def is_coboundary(c: CellEmbedding, co: Cochain) -> bool:
    """Whether a cocycle is a sum of vertex coboundaries."""
    if not is_cocycle(c, co):
        raise ArgumentError("cochain is not a cocycle")
    return co.support in RowSpace(c.vertex_incidence())


def min_nontrivial_cycle(c: CellEmbedding) -> tuple[int, Chain]:
    """Shortest cycle that is not a boundary, with a witness."""
    found = _search.graphlike_min_weight(c.vertex_incidence(), c.face_incidence())
    if found is None:
        raise NoNontrivialCycleError("first homology is trivial")
    return found[0], Chain(found[1])


def min_nontrivial_cocycle(c: CellEmbedding) -> tuple[int, Cochain]:
    """Lightest cocycle that is not a coboundary, with a witness.

    Computed as a shortest cycle of the dual graph in which all open faces are
    merged into a single vertex.
    """
    found = _search.graphlike_min_weight(c.face_incidence(), c.vertex_incidence())
    if found is None:
        raise NoNontrivialCycleError("first cohomology is trivial")
    return found[0], Cochain(found[1])


def min_nontrivial_cycle_oracle(c: CellEmbedding, max_dim: int = _search.ORACLE_MAX_DIM) -> int:
    """Brute force over the whole cycle space (dimension at most ``max_dim``)."""
    found = _search.bruteforce_min_weight(c.vertex_incidence(), c.face_incidence(), max_dim)
    if found is None:
        raise NoNontrivialCycleError("first homology is trivial")
    return found[0]


def min_nontrivial_cocycle_oracle(c: CellEmbedding, max_dim: int = _search.ORACLE_MAX_DIM) -> int:
    found = _search.bruteforce_min_weight(c.face_incidence(), c.vertex_incidence(), max_dim)
    if found is None:
        raise NoNontrivialCycleError("first cohomology is trivial")
    return found[0]


def boundary_space(c: CellEmbedding) -> BitMatrix:
    return c.face_incidence()
