"""n-qubit Pauli operators as symplectic vectors ``(x|z)`` over Z2.

Operators are projective: the global phase is dropped, so ``X*Z`` and ``Y``
are the same element. Only commutation matters for code parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import DimensionError, ParseError
from .gf2 import BitVec

if TYPE_CHECKING:
    from .homology import Chain, Cochain

_LETTER = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _LETTER.items()}


@dataclass(frozen=True)
class PauliElement:
    """Pauli operator on ``n`` qubits; ``x`` and ``z`` are packed bit masks."""

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self):
        if self.x < 0 or self.z < 0 or self.x >> self.n or self.z >> self.n:
            raise DimensionError(f"x/z bits exceed n={self.n}")

    @classmethod
    def from_vectors(cls, x: BitVec, z: BitVec) -> "PauliElement":
        if x.length != z.length:
            raise DimensionError(f"x has length {x.length}, z has {z.length}")
        return cls(x.length, x.bits, z.bits)

    @classmethod
    def identity(cls, n: int) -> "PauliElement":
        return cls(n)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliElement":
        if not 0 <= qubit < n:
            raise DimensionError(f"qubit {qubit} out of range for n={n}")
        bx, bz = _BITS[letter.upper()]
        return cls(n, bx << qubit, bz << qubit)

    @classmethod
    def from_string(cls, text: str) -> "PauliElement":
        """Parse a string over ``{I,X,Y,Z}``, qubit 0 first."""
        x = z = 0
        text = text.strip()
        for j, ch in enumerate(text):
            try:
                bx, bz = _BITS[ch.upper()]
            except KeyError:
                raise ParseError(f"invalid Pauli letter {ch!r} at position {j}") from None
            x |= bx << j
            z |= bz << j
        return cls(len(text), x, z)

    @property
    def x_vec(self) -> BitVec:
        return BitVec(self.n, self.x)

    @property
    def z_vec(self) -> BitVec:
        return BitVec(self.n, self.z)

    def symplectic_bits(self) -> int:
        """The length-2n vector ``(x|z)`` packed with ``x`` in the low half."""
        return self.x | self.z << self.n

    def _check(self, other: "PauliElement") -> None:
        if other.n != self.n:
            raise DimensionError(f"qubit count mismatch: {self.n} vs {other.n}")

    def __mul__(self, other: "PauliElement") -> "PauliElement":
        if not isinstance(other, PauliElement):
            return NotImplemented
        self._check(other)
        return PauliElement(self.n, self.x ^ other.x, self.z ^ other.z)

    __xor__ = __mul__

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def support(self) -> list[int]:
        return BitVec(self.n, self.x | self.z).support()

    def is_x_type(self) -> bool:
        return self.z == 0

    def is_z_type(self) -> bool:
        return self.x == 0

    def __str__(self) -> str:
        return "".join(_LETTER[(self.x >> j & 1, self.z >> j & 1)] for j in range(self.n))


def symplectic_product(u: PauliElement, v: PauliElement) -> int:
    """``x_u . z_v + z_u . x_v`` mod 2: 0 if the operators commute, 1 if not."""
    u._check(v)
    return ((u.x & v.z).bit_count() + (u.z & v.x).bit_count()) & 1


def weight(p: PauliElement) -> int:
    return p.weight()


def chain_operator(c: "Chain") -> PauliElement:
    """Z-type operator acting on the edges of a chain."""
    s = c.support
    return PauliElement(s.length, 0, s.bits)


def cochain_operator(c: "Cochain") -> PauliElement:
    """X-type operator acting on the edges crossed by a cochain."""
    s = c.support
    return PauliElement(s.length, s.bits, 0)
