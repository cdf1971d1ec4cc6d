"""Stabilizer codes built from cell embeddings, and their parameters.

The code of an embedding has a qubit per edge, an X-type generator per vertex
(its coboundary) and a Z-type generator per interior face (its boundary).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _search
from .errors import DimensionError, NoLogicalQubitsError, ParseError, TopocodeError
from .gf2 import BitMatrix, BitVec, RowSpace, block_diag, rank
from .pauli import PauliElement, symplectic_product
from .surface import CellEmbedding

# codes up to this length also get their distance from direct symplectic enumeration
SYMPLECTIC_CHECK_MAX_N = 20


@dataclass(frozen=True)
class DistanceReport:
    d: int
    z_distance: int | None
    x_distance: int | None
    witness: PauliElement
    method: str
    symplectic_checked: bool


class StabilizerCode:
    """CSS stabilizer code with X checks ``hx`` and Z checks ``hz``."""

    def __init__(self, hx: BitMatrix, hz: BitMatrix, embedding: CellEmbedding | None = None):
        if hx.cols != hz.cols:
            raise DimensionError(f"hx has {hx.cols} columns, hz has {hz.cols}")
        self.hx = hx
        self.hz = hz
        self.embedding = embedding
        self.n = hx.cols
        self.generators = tuple(PauliElement(self.n, r, 0) for r in hx.data) + tuple(
            PauliElement(self.n, 0, r) for r in hz.data
        )
        self.check_matrix = block_diag(hx, hz)
        self.rank_x = rank(hx)
        self.rank_z = rank(hz)
        self.k = self.n - self.rank_x - self.rank_z
        self._report: DistanceReport | None = None
        self._x_space: RowSpace | None = None
        self._z_space: RowSpace | None = None

    @property
    def connectivity_c(self) -> int:
        return max((g.weight() for g in self.generators), default=0)

    @property
    def d(self) -> int | None:
        """Distance if already computed, else None."""
        return self._report.d if self._report else None

    @property
    def x_space(self) -> RowSpace:
        if self._x_space is None:
            self._x_space = RowSpace(self.hx)
        return self._x_space

    @property
    def z_space(self) -> RowSpace:
        if self._z_space is None:
            self._z_space = RowSpace(self.hz)
        return self._z_space

    def in_stabilizer(self, x: int, z: int) -> bool:
        return x in self.x_space and z in self.z_space

    def commutes_with_all(self, x: int, z: int) -> bool:
        return not any((r & z).bit_count() & 1 for r in self.hx.data) and not any(
            (r & x).bit_count() & 1 for r in self.hz.data
        )

    def parameters(self) -> str:
        d = self.d if self.d is not None else "?"
        return f"[[{self.n},{self.k},{d}]]"

    def __repr__(self) -> str:
        return f"StabilizerCode{self.parameters()}"


def from_embedding(c: CellEmbedding) -> StabilizerCode:
    """Vertex generators first (vertex order), then interior faces (face order)."""
    return StabilizerCode(c.vertex_incidence(), c.face_incidence(), embedding=c)


def is_isotropic(code: StabilizerCode) -> bool:
    """All generator pairs commute."""
    return not any(
        (x & z).bit_count() & 1 for x in code.hx.data for z in code.hz.data
    )


def distance_report(code: StabilizerCode, symplectic_check: bool | None = None) -> DistanceReport:
    """Exact distance, split into the Z-type and X-type minima.

    Graph-like checks use the shortest-nontrivial-cycle search; anything else
    falls back to weight-limited enumeration. For ``n <= 20`` the answer is
    confirmed by enumerating Paulis directly against ``V^ \\ V``.
    """
    if code._report is not None and symplectic_check is None:
        return code._report
    if code.k == 0:
        raise NoLogicalQubitsError("code encodes no qubits; distance is undefined")
    n = code.n
    if _search.is_graphlike(code.hx) and _search.is_graphlike(code.hz):
        zfound = _search.graphlike_min_weight(code.hx, code.hz)
        xfound = _search.graphlike_min_weight(code.hz, code.hx)
        assert zfound is not None and xfound is not None
        dz, dx = zfound[0], xfound[0]
        if dz <= dx:
            witness = PauliElement(n, 0, zfound[1].bits)
        else:
            witness = PauliElement(n, xfound[1].bits, 0)
        d = min(dz, dx)
        method = "cycle-search"
    else:
        found = _search.weight_limited_search(n, n, lambda x, z: _undetectable(code, x, z))
        assert found is not None
        d = found[0]
        dz = dx = None
        witness = PauliElement(n, found[1], found[2])
        method = "enumeration"
    checked = False
    if symplectic_check is None:
        symplectic_check = n <= SYMPLECTIC_CHECK_MAX_N
    if symplectic_check and method != "enumeration":
        found = _search.weight_limited_search(n, d, lambda x, z: _undetectable(code, x, z))
        if found is None or found[0] != d:
            raise TopocodeError(
                f"distance engines disagree: cycle search {d}, enumeration {found and found[0]}"
            )
        checked = True
    report = DistanceReport(d, dz, dx, witness, method, checked)
    code._report = report
    return report


def distance(code: StabilizerCode) -> int:
    return distance_report(code).d


def _undetectable(code: StabilizerCode, x: int, z: int) -> bool:
    return code.commutes_with_all(x, z) and not code.in_stabilizer(x, z)


def syndrome(code: StabilizerCode, err: PauliElement) -> BitVec:
    """Bit ``i`` is the symplectic product of generator ``i`` with ``err``."""
    if err.n != code.n:
        raise DimensionError(f"error acts on {err.n} qubits, code has n={code.n}")
    bits = 0
    for i, g in enumerate(code.generators):
        if symplectic_product(g, err):
            bits |= 1 << i
    return BitVec(len(code.generators), bits)


def is_detectable(code: StabilizerCode, err: PauliElement) -> bool:
    """Nonzero syndrome, or a stabilizer (which acts trivially on codewords)."""
    if err.n != code.n:
        raise DimensionError(f"error acts on {err.n} qubits, code has n={code.n}")
    return not _undetectable(code, err.x, err.z)


def min_undetectable(code: StabilizerCode, max_weight: int) -> PauliElement | None:
    """Lowest-weight undetectable Pauli of weight at most ``max_weight``, exhaustively."""
    found = _search.weight_limited_search(code.n, max_weight, lambda x, z: _undetectable(code, x, z))
    return None if found is None else PauliElement(code.n, found[1], found[2])


def corrects_t_errors(code: StabilizerCode, t: int) -> bool:
    return distance(code) > 2 * t


def ground_degeneracy(code: StabilizerCode) -> int:
    return 2 ** code.k


def export_check_matrix(code: StabilizerCode) -> str:
    lines = [f"n {code.n} rx {code.hx.rows} rz {code.hz.rows}"]
    for m in (code.hx, code.hz):
        for row in m.to_lists():
            lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def parse_check_matrix(text: str) -> StabilizerCode:
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise ParseError("empty check-matrix text")
    lineno, head = lines[0]
    if len(head) != 6 or head[0::2] != ["n", "rx", "rz"]:
        raise ParseError("header must be 'n <n> rx <rows> rz <rows>'", lineno)
    try:
        n, rx, rz = int(head[1]), int(head[3]), int(head[5])
    except ValueError:
        raise ParseError("non-integer header field", lineno) from None
    body = lines[1:]
    if len(body) != rx + rz:
        raise ParseError(f"expected {rx + rz} rows, found {len(body)}")
    rows = []
    for lineno, toks in body:
        if len(toks) != n or any(t not in ("0", "1") for t in toks):
            raise ParseError(f"row must have {n} entries of 0/1", lineno)
        rows.append(BitVec.from_list(int(t) for t in toks))
    hx = BitMatrix.from_rows(rows[:rx], n)
    hz = BitMatrix.from_rows(rows[rx:], n)
    return StabilizerCode(hx, hz)
