"""Dense linear algebra over Z2 on bit-packed vectors.

Vectors are packed into Python integers (bit ``j`` holds entry ``j``), which
CPython stores in machine words. Elimination runs in the selected kernel
backend; every routine is checked against a per-bit reference in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend
from .errors import DimensionError


@dataclass(frozen=True)
class BitVec:
    """Immutable vector in Z2^length."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError(f"bits exceed length {self.length}")

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "BitVec":
        values = list(values)
        bits = 0
        for j, b in enumerate(values):
            if b & 1:
                bits |= 1 << j
        return cls(len(values), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVec":
        bits = 0
        for j in support:
            if not 0 <= j < length:
                raise DimensionError(f"index {j} out of range for length {length}")
            bits ^= 1 << j
        return cls(length, bits)

    @classmethod
    def zeros(cls, length: int) -> "BitVec":
        return cls(length, 0)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return self.bits >> j & 1

    def __iter__(self):
        for j in range(self.length):
            yield self.bits >> j & 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        if not isinstance(other, BitVec):
            return NotImplemented
        if other.length != self.length:
            raise DimensionError(f"length mismatch: {self.length} vs {other.length}")
        return BitVec(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __bool__(self) -> bool:
        return self.bits != 0

    def dot(self, other: "BitVec") -> int:
        if other.length != self.length:
            raise DimensionError(f"length mismatch: {self.length} vs {other.length}")
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def to_list(self) -> list[int]:
        return list(self)

    def __str__(self) -> str:
        return "".join(str(b) for b in self)


@dataclass(frozen=True)
class BitMatrix:
    """Immutable ``rows x cols`` matrix over Z2, stored as one packed int per row."""

    rows: int
    cols: int
    data: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise DimensionError(f"expected {self.rows} rows, got {len(self.data)}")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise DimensionError(f"row exceeds {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[BitVec | Sequence[int]], cols: int | None = None) -> "BitMatrix":
        packed = []
        for r in rows:
            if not isinstance(r, BitVec):
                r = BitVec.from_list(r)
            if cols is None:
                cols = r.length
            elif r.length != cols:
                raise DimensionError(f"row length {r.length} != {cols}")
            packed.append(r.bits)
        return cls(len(packed), cols or 0, tuple(packed))

    @classmethod
    def from_ints(cls, rows: Iterable[int], cols: int) -> "BitMatrix":
        data = tuple(rows)
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls(size, size, tuple(1 << i for i in range(size)))

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.data[i])

    def row_vectors(self) -> list[BitVec]:
        return [BitVec(self.cols, r) for r in self.data]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 0 <= j < self.cols:
            raise IndexError(j)
        return self.data[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.cols)] for r in self.data]

    def column_weights(self) -> list[int]:
        return [sum(r >> j & 1 for r in self.data) for j in range(self.cols)]

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.cols
        for i, r in enumerate(self.data):
            for j in BitVec(self.cols, r).support():
                cols[j] |= 1 << i
        return BitMatrix(self.cols, self.rows, tuple(cols))

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.cols != self.cols:
            raise DimensionError("column mismatch")
        return BitMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def mul_vec(self, v: BitVec) -> BitVec:
        """``M v`` as a vector of length ``rows``."""
        if v.length != self.cols:
            raise DimensionError(f"vector length {v.length} != {self.cols} columns")
        bits = 0
        for i, r in enumerate(self.data):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVec(self.rows, bits)

    def __str__(self) -> str:
        return "\n".join(str(BitVec(self.cols, r)) for r in self.data)


def _rref(m: BitMatrix) -> tuple[list[int], list[int]]:
    return _backend.rref(list(m.data), m.cols)


def rank(m: BitMatrix) -> int:
    """Row rank over Z2."""
    return len(_rref(m)[1])


def row_reduce(m: BitMatrix) -> BitMatrix:
    """Canonical reduced row-echelon form (leftmost pivots, zero rows last)."""
    reduced, _ = _rref(m)
    return BitMatrix(m.rows, m.cols, tuple(reduced))


def kernel_basis(m: BitMatrix) -> list[BitVec]:
    """Basis of ``{v : M v = 0}``, one vector per free column (ascending)."""
    reduced, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for row, p in zip(reduced, pivots):
            if row >> free & 1:
                bits |= 1 << p
        basis.append(BitVec(m.cols, bits))
    return basis


class RowSpace:
    """Reduced basis of a row space, for repeated membership queries."""

    def __init__(self, m: BitMatrix):
        self.cols = m.cols
        reduced, pivots = _rref(m)
        self.pivots = pivots
        self._basis = list(zip(pivots, reduced[: len(pivots)]))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, bits: int) -> int:
        for p, row in self._basis:
            if bits >> p & 1:
                bits ^= row
        return bits

    def __contains__(self, v: BitVec | int) -> bool:
        if isinstance(v, BitVec):
            if v.length != self.cols:
                raise DimensionError(f"vector length {v.length} != {self.cols} columns")
            v = v.bits
        return self.reduce(v) == 0


def in_row_space(m: BitMatrix, v: BitVec) -> bool:
    """True iff ``v`` is a Z2 combination of the rows of ``m``."""
    if v.length != m.cols:
        raise DimensionError(f"vector length {v.length} != {m.cols} columns")
    return v in RowSpace(m)


def complement_basis(space: BitMatrix, sub: BitMatrix) -> list[BitVec]:
    """Vectors of ``rowspace(space)`` that extend a basis of ``rowspace(sub)`` to one of it.

    ``rowspace(sub)`` must be contained in ``rowspace(space)``.
    """
    if space.cols != sub.cols:
        raise DimensionError("column mismatch")
    basis: dict[int, int] = {}

    def add(bits: int) -> bool:
        for p, row in basis.items():
            if bits >> p & 1:
                bits ^= row
        if not bits:
            return False
        low = bits & -bits
        for p in basis:
            if basis[p] & low:
                basis[p] ^= bits
        basis[low.bit_length() - 1] = bits
        return True

    for v in row_reduce(sub).data:
        add(v)
    return [BitVec(space.cols, v) for v in row_reduce(space).data if v and add(v)]


def block_diag(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """``diag(a, b)`` with ``a`` in the upper-left block."""
    shift = a.cols
    data = a.data + tuple(r << shift for r in b.data)
    return BitMatrix(a.rows + b.rows, a.cols + b.cols, data)
