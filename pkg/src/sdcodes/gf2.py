"""Bit-packed linear algebra over GF(2).

Vectors store coordinate i at bit i of an arbitrary-precision integer, which
matches a little-endian packing into 64-bit words (coordinate i sits at bit
i % 64 of word i // 64).  Matrices are tuples of rows.  Everything is
immutable after construction; all operations return new values.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BitVector:
    """A length-n vector over GF(2), packed into a Python int."""

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_support(cls, length: int, support) -> "BitVector":
        bits = 0
        for i in support:
            bits |= 1 << i
        return cls(length, bits)

    @classmethod
    def from_bits(cls, seq) -> "BitVector":
        seq = list(seq)
        bits = 0
        for i, b in enumerate(seq):
            if b:
                bits |= 1 << i
        return cls(len(seq), bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits & other.bits)

    def dot(self, other: "BitVector") -> int:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def to_hex(self) -> str:
        nwords = max(1, (self.length + 63) // 64)
        return self.bits.to_bytes(nwords * 8, "little").hex()

    @classmethod
    def from_hex(cls, length: int, text: str) -> "BitVector":
        bits = int.from_bytes(bytes.fromhex(text), "little")
        return cls(length, bits)

    def __str__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.length))


@dataclass(frozen=True)
class BitMatrix:
    """A matrix over GF(2); every row has length == cols."""

    cols: int
    rows: tuple[BitVector, ...]

    def __post_init__(self):
        for r in self.rows:
            if r.length != self.cols:
                raise ValueError("row length differs from cols")

    @classmethod
    def from_ints(cls, cols: int, int_rows) -> "BitMatrix":
        return cls(cols, tuple(BitVector(cols, r) for r in int_rows))

    @classmethod
    def from_lists(cls, lists) -> "BitMatrix":
        lists = [list(r) for r in lists]
        cols = len(lists[0]) if lists else 0
        return cls(cols, tuple(BitVector.from_bits(r) for r in lists))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def int_rows(self) -> list[int]:
        return [r.bits for r in self.rows]

    def transpose(self) -> "BitMatrix":
        out = []
        for j in range(self.cols):
            bits = 0
            for i, r in enumerate(self.rows):
                bits |= ((r.bits >> j) & 1) << i
            out.append(bits)
        return BitMatrix.from_ints(self.nrows, out)

    def to_text(self) -> str:
        lines = [f"{self.nrows} {self.cols}"]
        lines.extend(r.to_hex() for r in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        nrows, cols = (int(t) for t in lines[0].split())
        if len(lines) - 1 != nrows:
            raise ValueError("row count does not match header")
        rows = tuple(BitVector.from_hex(cols, ln) for ln in lines[1:])
        return cls(cols, rows)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def _rref_ints(rows: list[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form on int-packed rows; returns (rows, pivot cols).

    Pivot choice is leftmost nonzero column, topmost available row, so the
    output is a canonical form of the row space.  Zero rows are dropped.
    """
    rows = list(rows)
    pivots = []
    rank = 0
    for col in range(cols):
        mask = 1 << col
        src = None
        for i in range(rank, len(rows)):
            if rows[i] & mask:
                src = i
                break
        if src is None:
            continue
        rows[rank], rows[src] = rows[src], rows[rank]
        piv = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= piv
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Canonical reduced row echelon form and its pivot columns."""
    reduced, pivots = _rref_ints(m.int_rows(), m.cols)
    return BitMatrix.from_ints(m.cols, reduced), pivots


def rank(m: BitMatrix) -> int:
    return len(_rref_ints(m.int_rows(), m.cols)[1])


def _dual_ints(rows: list[int], cols: int) -> list[int]:
    reduced, pivots = _rref_ints(rows, cols)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    out = []
    for f in free:
        # basis vector: 1 at the free column, pivot entries copied from the
        # free column of the reduced matrix
        v = 1 << f
        for i, p in enumerate(pivots):
            if (reduced[i] >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def dual(g: BitMatrix) -> BitMatrix:
    """Generator matrix of the orthogonal complement of the row space of g."""
    return BitMatrix.from_ints(g.cols, _dual_ints(g.int_rows(), g.cols))


def is_self_dual(g: BitMatrix) -> bool:
    """True iff the row space equals its dual (rank n/2, all pairs orthogonal)."""
    if g.cols % 2:
        raise ValueError(f"self-dual codes need even length, got {g.cols}")
    reduced, pivots = _rref_ints(g.int_rows(), g.cols)
    if len(pivots) != g.cols // 2:
        return False
    for i, a in enumerate(reduced):
        for b in reduced[i:]:
            if (a & b).bit_count() & 1:
                return False
    return True


def check_permutation(perm, length: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if len(perm) != length or sorted(perm) != list(range(length)):
        raise ValueError(f"not a permutation of 0..{length - 1}")
    return perm


def apply_permutation(v: BitVector, perm) -> BitVector:
    """Move the bit at position i to position perm[i]."""
    perm = check_permutation(perm, v.length)
    bits = 0
    rest = v.bits
    while rest:
        low = rest & -rest
        bits |= 1 << perm[low.bit_length() - 1]
        rest ^= low
    return BitVector(v.length, bits)


def permute_columns(m: BitMatrix, perm) -> BitMatrix:
    return BitMatrix(m.cols, tuple(apply_permutation(r, perm) for r in m.rows))


def row_space_member(reduced_rows: list[int], pivots: list[int], v: int) -> bool:
    """Membership test against a matrix already in RREF."""
    for i, p in enumerate(pivots):
        if (v >> p) & 1:
            v ^= reduced_rows[i]
    return v == 0


def preserves_row_space(g: BitMatrix, perm) -> bool:
    """True iff permuting coordinates by perm maps the row space to itself."""
    reduced, pivots = _rref_ints(g.int_rows(), g.cols)
    for r in g.rows:
        if not row_space_member(reduced, pivots, apply_permutation(r, perm).bits):
            return False
    return True
