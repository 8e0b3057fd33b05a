"""Pauli operators modulo global phase, stored as packed X/Z words.

Qubit 0 is the leftmost symbol of the text form and the most significant bit
of each word, so integer order of ``key = (x << n) | z`` is the lexicographic
order of the symplectic vector (x_0..x_{n-1}, z_0..z_{n-1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from models import PauliParseError

_ENCODING = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_DECODING = {bits: letter for letter, bits in _ENCODING.items()}


@dataclass(frozen=True)
class PauliString:
    """An n-qubit Pauli operator modulo phase.

    Attributes:
        n: Number of qubits.
        x: Packed X bits, qubit 0 in the most significant position.
        z: Packed Z bits, same layout.
    """

    n: int
    x: int
    z: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"A Pauli string needs at least one qubit, got n={self.n}")
        limit = 1 << self.n
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError(f"Bit words do not fit in {self.n} qubits")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliString":
        """The operator acting as *letter* on *qubit* and as identity elsewhere."""
        if not 0 <= qubit < n:
            raise IndexError(f"Qubit {qubit} out of range for n={n}")
        xb, zb = _ENCODING[letter]
        bit = 1 << (n - 1 - qubit)
        return cls(n, bit * xb, bit * zb)

    @classmethod
    def from_bits(cls, x_bits: Sequence[int], z_bits: Sequence[int]) -> "PauliString":
        if len(x_bits) != len(z_bits):
            raise ValueError("X and Z bit-vectors differ in length")
        return cls(len(x_bits), _pack(x_bits), _pack(z_bits))

    @classmethod
    def from_symplectic(cls, vector: Sequence[int]) -> "PauliString":
        """Build from a length-2n vector laid out as (x bits | z bits)."""
        if len(vector) % 2:
            raise ValueError("Symplectic vectors have even length")
        half = len(vector) // 2
        return cls.from_bits(vector[:half], vector[half:])

    @classmethod
    def from_key(cls, n: int, key: int) -> "PauliString":
        return cls(n, key >> n, key & ((1 << n) - 1))

    @property
    def key(self) -> int:
        """Sort key equal to the symplectic vector read as a binary number."""
        return (self.x << self.n) | self.z

    @property
    def x_bits(self) -> np.ndarray:
        return _unpack(self.x, self.n)

    @property
    def z_bits(self) -> np.ndarray:
        return _unpack(self.z, self.n)

    def symplectic(self) -> np.ndarray:
        return np.concatenate([self.x_bits, self.z_bits])

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def letter(self, qubit: int) -> str:
        shift = self.n - 1 - qubit
        return _DECODING[((self.x >> shift) & 1, (self.z >> shift) & 1)]

    def support(self) -> List[int]:
        word = self.x | self.z
        return [i for i in range(self.n) if (word >> (self.n - 1 - i)) & 1]

    def slice(self, start: int, stop: int) -> "PauliString":
        """Restriction to qubits [start, stop)."""
        width = stop - start
        if not (0 <= start < stop <= self.n):
            raise IndexError(f"Invalid qubit range [{start}, {stop}) for n={self.n}")
        shift = self.n - stop
        mask = (1 << width) - 1
        return PauliString(width, (self.x >> shift) & mask, (self.z >> shift) & mask)

    def embed(self, n_total: int, offset: int) -> "PauliString":
        """Place this operator on qubits [offset, offset + n) of an n_total-qubit register."""
        if offset < 0 or offset + self.n > n_total:
            raise IndexError(f"Cannot embed {self.n} qubits at offset {offset} into {n_total}")
        shift = n_total - offset - self.n
        return PauliString(n_total, self.x << shift, self.z << shift)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def __str__(self) -> str:
        return render_pauli(self)

    def __repr__(self) -> str:
        return f"PauliString({render_pauli(self)!r})"


def _pack(bits: Iterable[int]) -> int:
    word = 0
    for bit in bits:
        word = (word << 1) | (int(bit) & 1)
    return word


def _unpack(word: int, n: int) -> np.ndarray:
    return np.array([(word >> (n - 1 - i)) & 1 for i in range(n)], dtype=np.uint8)


def _check_lengths(a: PauliString, b: PauliString) -> None:
    if a.n != b.n:
        raise ValueError(f"Pauli length mismatch: {a.n} vs {b.n}")


def parse_pauli(text: str) -> PauliString:
    """Parse an uppercase I/X/Y/Z string such as 'XYIZ'."""
    if not text:
        raise ValueError("Empty Pauli string")
    x = z = 0
    for position, char in enumerate(text):
        bits = _ENCODING.get(char)
        if bits is None:
            raise PauliParseError(text, position)
        x = (x << 1) | bits[0]
        z = (z << 1) | bits[1]
    return PauliString(len(text), x, z)


def render_pauli(p: PauliString) -> str:
    return "".join(p.letter(i) for i in range(p.n))


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Product modulo phase: XOR of the X words and of the Z words."""
    _check_lengths(a, b)
    return PauliString(a.n, a.x ^ b.x, a.z ^ b.z)


def product(paulis: Iterable[PauliString], n: int) -> PauliString:
    result = PauliString.identity(n)
    for p in paulis:
        result = multiply(result, p)
    return result


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff the symplectic inner product of a and b vanishes."""
    _check_lengths(a, b)
    return ((a.x & b.z) ^ (a.z & b.x)).bit_count() % 2 == 0


def effective_weight(p: PauliString) -> int:
    """X and Y factors count 1, Z factors count 2."""
    return p.x.bit_count() + 2 * (p.z & ~p.x).bit_count()


def hamming_weight(p: PauliString) -> int:
    return (p.x | p.z).bit_count()


# Vectorized variants over arrays of keys, used by the search engines (requires 2n <= 64).

def split_keys(keys: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    mask = np.uint64((1 << n) - 1)
    return keys >> np.uint64(n), keys & mask


def hamming_weights(keys: np.ndarray, n: int) -> np.ndarray:
    x, z = split_keys(keys, n)
    return np.bitwise_count(x | z).astype(np.int64)


def effective_weights(keys: np.ndarray, n: int) -> np.ndarray:
    x, z = split_keys(keys, n)
    return np.bitwise_count(x).astype(np.int64) + 2 * np.bitwise_count(z & ~x).astype(np.int64)


def block_weights(keys: np.ndarray, n: int, block_widths: Sequence[int]) -> np.ndarray:
    """Number of contiguous blocks on which each operator acts non-trivially."""
    x, z = split_keys(keys, n)
    support = x | z
    counts = np.zeros(keys.shape, dtype=np.int64)
    offset = 0
    for width in block_widths:
        mask = np.uint64(((1 << width) - 1) << (n - offset - width))
        counts += (support & mask) != 0
        offset += width
    return counts


def anticommute_mask(keys: np.ndarray, n: int, other: PauliString) -> np.ndarray:
    """Boolean array: which operators in *keys* anticommute with *other*."""
    x, z = split_keys(keys, n)
    overlap = (x & np.uint64(other.z)) ^ (z & np.uint64(other.x))
    return (np.bitwise_count(overlap) & 1).astype(bool)
